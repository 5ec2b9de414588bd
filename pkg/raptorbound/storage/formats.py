"""Plain-text formats for outer codes and weight enumerators."""

import csv
from pathlib import Path
from typing import TextIO

import numpy as np

from raptorbound.codes.enumerators import EnumeratorKind, WeightEnumerator
from raptorbound.codes.outer import CodeForm, OuterCode
from raptorbound.core.errors import DomainError
from raptorbound.gf.field import FieldSpec
from raptorbound.gf.matrix import FqMatrix
from raptorbound.storage.results import write_table

ENUMERATOR_COLUMNS = ("l", "A_l", "log_A_l")


def _data_lines(path: Path) -> list[str]:
    if not path.exists():
        raise DomainError(f"File not found: {path}")
    lines = []
    for raw in path.read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def _field_for(q: int) -> FieldSpec:
    if q < 2 or q & (q - 1):
        raise DomainError(f"Field size must be a power of two, got {q}")
    return FieldSpec.for_degree(q.bit_length() - 1)


def dump_outer_code(code: OuterCode, header: list[str] | None = None) -> str:
    """Header line 'h k q form' followed by the matrix rows."""
    lines = [f"# {line}" for line in header or []]
    lines.append(f"{code.h} {code.k} {code.q} {code.form.value}")
    lines += [" ".join(str(int(x)) for x in row) for row in code.matrix.entries]
    return "\n".join(lines) + "\n"


def save_outer_code(code: OuterCode, path: Path, header: list[str] | None = None) -> None:
    path.write_text(dump_outer_code(code, header))


def load_outer_code(path: Path) -> OuterCode:
    lines = _data_lines(path)
    if not lines:
        raise DomainError(f"{path} is empty")
    try:
        h_text, k_text, q_text, form_text = lines[0].split()
        h, k, q = int(h_text), int(k_text), int(q_text)
        form = CodeForm(form_text)
        rows = [[int(x) for x in line.split()] for line in lines[1:]]
    except ValueError as e:
        raise DomainError(f"{path}: malformed outer code file") from e
    if any(len(row) != h for row in rows):
        raise DomainError(f"{path}: every matrix row must have {h} entries")
    f = _field_for(q)
    matrix = FqMatrix(np.array(rows, dtype=np.int64).reshape(len(rows), h), q)
    return OuterCode(h=h, k=k, field=f, form=form, matrix=matrix, name=f"code:{path.name}")


def write_enumerator(we: WeightEnumerator, stream: TextIO, header: list[str] | None = None) -> None:
    """CSV with columns l, A_l, log_A_l; metadata in a comment line."""
    values = we.exact if we.exact is not None else we.values
    rows = [(l, a, log_a) for l, (a, log_a) in enumerate(zip(values, we.log_values))]
    meta = f"h={we.h} k={we.k} q={we.q} kind={we.kind.value}"
    write_table(stream, [*(header or []), meta], ENUMERATOR_COLUMNS, rows)


def save_enumerator(we: WeightEnumerator, path: Path, header: list[str] | None = None) -> None:
    with open(path, "w", newline="") as f:
        write_enumerator(we, f, header)


def load_enumerator(path: Path) -> WeightEnumerator:
    if not path.exists():
        raise DomainError(f"File not found: {path}")
    meta: dict[str, str] = {}
    body = []
    for line in path.read_text().splitlines():
        if line.startswith("#"):
            for token in line[1:].split():
                key, sep, value = token.partition("=")
                if sep:
                    meta[key] = value
        elif line.strip():
            body.append(line)
    try:
        h, k, q = int(meta["h"]), int(meta["k"]), int(meta["q"])
        kind = EnumeratorKind(meta["kind"])
    except (KeyError, ValueError) as e:
        raise DomainError(f"{path}: missing or invalid h/k/q/kind metadata") from e

    rows = list(csv.DictReader(body))
    if len(rows) != h + 1:
        raise DomainError(f"{path}: expected {h + 1} rows, found {len(rows)}")
    if kind is EnumeratorKind.EXPECTED:
        log_values = tuple(float(r["log_A_l"]) for r in rows)
        return WeightEnumerator(h=h, k=k, q=q, kind=kind, log_values=log_values)
    return WeightEnumerator.from_exact([int(r["A_l"]) for r in rows], k=k, q=q, kind=kind)
