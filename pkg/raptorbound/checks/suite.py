"""Cross-oracle consistency checks run by ``raptorbound verify``.

Each check evaluates one quantity along two independent code paths and
reports the largest deviation it saw, together with the parameters at
which that deviation occurred.
"""

import itertools
import logging
import math
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from raptorbound.bounds.pi import pi_l_direct, pi_l_krawtchouk
from raptorbound.bounds.symbols import lemma1_convolution_oracle, lemma1_transform, phi
from raptorbound.bounds.theorems import bound_theorem2
from raptorbound.codes.distribution import DegreeDistribution, r10_distribution
from raptorbound.codes.enumerators import hamming_weight_enumerator, unrestricted_weight_enumerator
from raptorbound.codes.lt import ReceivedMatrix, sample_received_matrix
from raptorbound.codes.outer import (
    CodeForm,
    OuterCode,
    brute_force_weight_enumerator,
    build_hamming,
    sample_uniform_parity_code,
)
from raptorbound.decoder.inactivation import inactivation_failure
from raptorbound.decoder.ml import ml_failure
from raptorbound.gf.field import FieldSpec
from raptorbound.gf.matrix import FqMatrix

logger = logging.getLogger(__name__)

RELATIVE_TOLERANCE = 1e-12
TOY_PARITY = ((1, 1, 0, 1, 0), (0, 1, 1, 0, 1))


@dataclass
class CheckResult:
    name: str
    passed: bool
    max_deviation: float
    detail: str = ""


def _relative(a: float, b: float) -> float:
    if a == b:
        return 0.0
    return abs(a - b) / max(abs(a), abs(b))


def truncated_distribution(dist: DegreeDistribution, h: int) -> DegreeDistribution:
    """Restrict to degrees <= h and renormalise."""
    kept = [(d, p) for d, p in dist.pairs() if d <= h]
    total = math.fsum(p for _, p in kept)
    renormalised = [(d, p / total) for d, p in kept]
    return DegreeDistribution.from_pairs(renormalised, name=f"{dist.name}<={h}")


def toy_code() -> OuterCode:
    """[5, 3] binary code used by the exhaustive checks."""
    return OuterCode(
        h=5,
        k=3,
        field=FieldSpec.for_degree(1),
        form=CodeForm.PARITY,
        matrix=FqMatrix.from_rows(TOY_PARITY, 2),
        name="toy:5:3",
    )


def check_phi_lemma1() -> CheckResult:
    worst, mismatches = 0.0, []
    for m in (1, 2, 3, 4):
        f = FieldSpec.for_degree(m)
        for i in range(1, 9):
            closed = phi(i, f)
            for oracle in (lemma1_convolution_oracle(i, f), lemma1_transform(i, f)):
                if closed != oracle:
                    mismatches.append(f"i={i} q={f.q}")
                    worst = max(worst, abs(float(closed - oracle)))
    return CheckResult("phi_lemma1", not mismatches, worst, "; ".join(mismatches[:5]))


def check_pi_cross_path() -> CheckResult:
    worst, where = 0.0, ""
    for h in (7, 63, 70):
        dist = truncated_distribution(r10_distribution(), h)
        for m in (1, 2):
            f = FieldSpec.for_degree(m)
            for l in range(h + 1):
                deviation = _relative(pi_l_direct(l, h, dist, f), pi_l_krawtchouk(l, h, dist, f))
                if deviation > worst:
                    worst, where = deviation, f"l={l} h={h} q={f.q}"
    return CheckResult("pi_l_cross_path", worst <= RELATIVE_TOLERANCE, worst, where)


def check_hamming_enumerator() -> CheckResult:
    problems = []
    for t in (3, 4):
        exhaustive = brute_force_weight_enumerator(build_hamming(t)).exact
        if hamming_weight_enumerator(t).exact != exhaustive:
            problems.append(f"t={t} differs from exhaustive enumeration")
    for t in range(2, 7):
        we = hamming_weight_enumerator(t)
        if sum(we.exact or ()) != 2**we.k:
            problems.append(f"t={t} does not sum to 2^k")
    return CheckResult(
        "hamming_enumerator", not problems, float(len(problems)), "; ".join(problems)
    )


def check_lt_specialization(k: int = 64, max_delta: int = 20) -> CheckResult:
    worst, where = 0.0, ""
    dist = r10_distribution()
    for m in (1, 2):
        f = FieldSpec.for_degree(m)
        we = unrestricted_weight_enumerator(k, f)
        pis = [pi_l_direct(l, k, dist, f) for l in range(k + 1)]
        for delta in range(max_delta + 1):
            direct = math.fsum(
                math.comb(k, l) * (f.q - 1) ** (l - 1) * pis[l] ** (k + delta)
                for l in range(1, k + 1)
            )
            deviation = _relative(bound_theorem2(we, k, delta, k, dist, f), direct)
            if deviation > worst:
                worst, where = deviation, f"k={k} q={f.q} delta={delta}"
    return CheckResult("lt_specialization", worst <= RELATIVE_TOLERANCE, worst, where)


def _generator_form(code: OuterCode) -> OuterCode | None:
    """Same code in generator form, when its parity-check matrix has full rank."""
    if code.true_dimension() != code.k:
        return None
    return OuterCode(
        h=code.h,
        k=code.k,
        field=code.field,
        form=CodeForm.GENERATOR,
        matrix=code.generator_matrix(),
    )


def _compare(code: OuterCode, rx: ReceivedMatrix) -> str | None:
    reference = ml_failure(code, rx).failed
    if inactivation_failure(code, rx).failed != reference:
        return "inactivation"
    generator = _generator_form(code)
    if generator is not None:
        if ml_failure(generator, rx).failed != reference:
            return "generator-form ml"
        if inactivation_failure(generator, rx).failed != reference:
            return "generator-form inactivation"
    return None


def check_decoder_equivalence(instances: int = 200, seed: int = 0) -> CheckResult:
    mismatches = []
    dist = r10_distribution()
    rng = np.random.default_rng(seed)
    for m in (1, 2):
        f = FieldSpec.for_degree(m)
        for i in range(instances):
            code = sample_uniform_parity_code(70, 64, f, rng)
            rx = sample_received_matrix(70, 64 + int(rng.integers(0, 11)), dist, f, rng)
            path = _compare(code, rx)
            if path:
                mismatches.append(f"q={f.q} instance={i} ({path})")

    code = toy_code()
    columns = [(i,) for i in range(5)] + list(itertools.combinations(range(5), 2))
    for size in range(4):
        for chosen in itertools.combinations(columns, size):
            ones = tuple((1,) * len(s) for s in chosen)
            rx = ReceivedMatrix(h=5, q=2, supports=chosen, coefficients=ones)
            path = _compare(code, rx)
            if path:
                mismatches.append(f"toy supports={chosen} ({path})")
    detail = "; ".join(mismatches[:5])
    return CheckResult("decoder_equivalence", not mismatches, float(len(mismatches)), detail)


def run_checks(instances: int = 200, seed: int = 0) -> list[CheckResult]:
    """Run every check; an exception inside a check counts as its failure."""
    checks: list[tuple[str, Callable[[], CheckResult]]] = [
        ("phi_lemma1", check_phi_lemma1),
        ("pi_l_cross_path", check_pi_cross_path),
        ("hamming_enumerator", check_hamming_enumerator),
        ("lt_specialization", check_lt_specialization),
        ("decoder_equivalence", lambda: check_decoder_equivalence(instances, seed)),
    ]
    results = []
    for name, check in checks:
        logger.info("Running check %s", name)
        try:
            results.append(check())
        except Exception as e:
            logger.debug("Check %s raised", name, exc_info=True)
            results.append(CheckResult(name, False, math.inf, f"{type(e).__name__}: {e}"))
    return results
