"""Sample-code command: write an outer code in the plain-text matrix format."""

from typing import Optional

import typer

from raptorbound.cli.common import (
    CONFIG_OPTION,
    FIELD_OPTION,
    OUT_OPTION,
    OUTER_OPTION,
    SEED_OPTION,
    fail,
    field_of,
    load_spec,
    out_path,
    resolve_code,
)
from raptorbound.core.errors import RaptorBoundError
from raptorbound.core.models import OuterKind
from raptorbound.montecarlo.runner import sample_ensemble_code
from raptorbound.storage.formats import dump_outer_code
from raptorbound.storage.results import open_output


def sample_code(
    config: Optional[str] = CONFIG_OPTION,
    field: Optional[int] = FIELD_OPTION,
    outer: Optional[str] = OUTER_OPTION,
    seed: Optional[int] = SEED_OPTION,
    index: int = typer.Option(
        0, "--index", "-i", min=0, help="Ensemble member to draw (uniform:h:k)"
    ),
    out: Optional[str] = OUT_OPTION,
) -> None:
    """Write the selected outer code for audit or replay via code:PATH.

    For uniform:h:k this is the same code `simulate` draws as ensemble
    member --index under --seed.
    """
    spec = load_spec(config, field=field, outer=outer, seed=seed, out=out)
    try:
        f = field_of(spec)
        selector = spec.require_outer()
        command = f"raptorbound sample-code --field {spec.field} --outer {selector}"
        if selector.kind is OuterKind.UNIFORM:
            assert selector.h is not None and selector.k is not None
            code = sample_ensemble_code(selector.h, selector.k, f, spec.seed, index)
            command += f" --seed {spec.seed} --index {index}"
        else:
            code = resolve_code(spec, f)
        with open_output(out_path(spec)) as stream:
            stream.write(dump_outer_code(code, [command]))
    except RaptorBoundError as e:
        fail(str(e))
