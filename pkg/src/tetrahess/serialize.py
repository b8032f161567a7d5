"""JSON payloads for band matrices and factorization sequences.

A matrix is {"a": [str], "b": [str], "c": [str]} with rationals encoded as
"p/q" strings; an alpha sequence is {"alpha": [str]}.  Writers add an
explicit "start_index" block (a from 2, b from 1, c from 0, alpha from 1)
and readers validate it when present, so the index conventions can never
drift silently through a file.  Either payload may instead carry a
"generator" field naming a built-in family ("ones", or a jacobi-pineiro
object) in place of explicit arrays.
"""

from __future__ import annotations

from fractions import Fraction

from .core import AlphaSequence, TetraHessenberg, tetra_from_alphas, tetra_from_bands
from .families import JPParams, Variant, jp_alphas
from .scalars import format_scalar, parse_scalar

BAND_STARTS = {"a": 2, "b": 1, "c": 0}

#: Entries emitted when a generator payload omits "count".
DEFAULT_GENERATOR_COUNT = 31


def _check_start_index(payload, expected):
    declared = payload.get("start_index")
    if declared is None:
        return
    if isinstance(declared, int) and len(expected) == 1:
        declared = {next(iter(expected)): declared}
    if declared != expected:
        raise ValueError(f"start_index {declared!r} does not match the fixed convention {expected!r}")


def _generator_alphas(spec, mode):
    if isinstance(spec, str):
        spec = {"name": spec}
    name = spec.get("name")
    count = int(spec.get("count", DEFAULT_GENERATOR_COUNT))
    if name == "ones":
        one = Fraction(1) if mode == "exact" else 1.0
        return AlphaSequence(values=(one,) * count)
    if name == "jacobi-pineiro":
        params = JPParams(
            alpha=parse_scalar(str(spec["alpha"])),
            beta=parse_scalar(str(spec["beta"])),
            gamma=parse_scalar(str(spec["gamma"])),
        )
        variant = Variant(spec.get("variant", "first"))
        return jp_alphas(params, variant, count)
    raise ValueError(f"unknown generator {name!r}")


def load_alphas(payload: dict, mode: str = "exact") -> AlphaSequence:
    if "generator" in payload:
        return _generator_alphas(payload["generator"], mode)
    if "alpha" not in payload:
        raise ValueError('alpha payload needs an "alpha" array or a "generator"')
    _check_start_index(payload, {"alpha": 1})
    values = tuple(parse_scalar(str(v), mode) for v in payload["alpha"])
    if not values:
        raise ValueError("alpha array is empty")
    return AlphaSequence(values=values)


def dump_alphas(alphas: AlphaSequence, count=None) -> dict:
    if count is None:
        count = alphas.length
    if count is None:
        raise ValueError("count is required for an unbounded alpha sequence")
    return {
        "alpha": [format_scalar(v) for v in alphas.prefix(count)],
        "start_index": {"alpha": 1},
    }


def load_matrix(payload: dict, mode: str = "exact") -> TetraHessenberg:
    if "generator" in payload:
        return tetra_from_alphas(_generator_alphas(payload["generator"], mode))
    missing = [k for k in ("a", "b", "c") if k not in payload]
    if missing:
        raise ValueError(f"matrix payload lacks band(s) {missing}")
    _check_start_index(payload, BAND_STARTS)
    bands = {
        k: tuple(parse_scalar(str(v), mode) for v in payload[k]) for k in ("a", "b", "c")
    }
    if not bands["c"]:
        raise ValueError("band c is empty")
    return tetra_from_bands(a=bands["a"], b=bands["b"], c=bands["c"])


def dump_matrix(t: TetraHessenberg, rows=None) -> dict:
    """Materialize the bands down to row ``rows`` (default: every available
    row; the matrix must then be finitely backed)."""
    if rows is None:
        rows = t.materializable_n()
    if rows is None:
        raise ValueError("rows is required for an unbounded matrix")
    return {
        "a": [format_scalar(t.a(n)) for n in range(2, rows + 1)],
        "b": [format_scalar(t.b(n)) for n in range(1, rows + 1)],
        "c": [format_scalar(t.c(n)) for n in range(0, rows + 1)],
        "start_index": BAND_STARTS,
    }
