"""Command-line front end.

Subcommands: ``jp`` (generate Jacobi-Pineiro alphas), ``jp-scan`` (CSV region
scan), ``factor`` (bidiagonal factorization of a matrix file), ``polys``
(recursion polynomials), ``darboux`` (transformed matrices), ``verify``
(exact identity suites).  Machine-readable JSON goes to stdout (or --out);
one-line human summaries go to stderr.  Identical argv and input files give
byte-identical output.

Exit codes: 0 success (for ``factor``: PBF), 1 verification failure (for
``factor``: TN), 2 (``factor``: INDEFINITE), 64 usage, 65 bad input,
70 computation error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from .core import AlphaSequence, leading_principal, tetra_from_alphas
from .darboux import (
    akv_sign_checks,
    alphas_from_polynomials,
    darboux_transforms,
    verify_christoffel,
)
from .errors import TetraError
from .factorization import bidiagonal_factor, gauss_borel
from .families import (
    JP_VERIFICATION_GRID,
    JPParams,
    Variant,
    jp_alphas,
    jp_cross_consistency,
    jp_dense_truncation,
    jp_sign_report,
)
from .polynomials import char_poly_truncation, second_kind_sequences, type1_sequences, type2_sequence
from .scalars import COMPARE_RTOL, format_scalar, parse_scalar
from .serialize import dump_alphas, dump_matrix, load_alphas, load_matrix
from .tncheck import POWER_ORACLE_CAP, is_oscillatory_power_oracle, is_totally_nonnegative

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 64
EXIT_INPUT = 65
EXIT_COMPUTE = 70

VERIFY_SUITES = ("tn", "christoffel", "akv", "roundtrip", "charpoly", "jp-consistency")

#: Fixed sample points for the akv suite.
AKV_XS = (Fraction(0), Fraction(1, 4), Fraction(1), Fraction(4), Fraction(10))


class UsageError(Exception):
    pass


class InputError(Exception):
    pass


class VerificationFailure(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    mode: str = "exact"
    float_tolerance: float = COMPARE_RTOL
    output_format: str = "json"
    seed: int = 0


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let bare negative rationals ("-1/2") through as option values
        self._negative_number_matcher = re.compile(r"^-\d+(/\d+)?$|^-\d*\.\d+$")

    def error(self, message):
        raise UsageError(message)


def _emit(payload: str, out_path, summary: str):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)
    print(summary, file=sys.stderr)


def _read_json(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _load_alphas_file(path, mode):
    try:
        return load_alphas(_read_json(path), mode)
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _load_matrix_file(path, mode):
    try:
        return load_matrix(_read_json(path), mode)
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _parse_flag_scalar(text, mode, flag):
    try:
        return parse_scalar(text, mode)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"{flag}: cannot parse {text!r}") from exc


def _jp_params(args, mode):
    try:
        return JPParams(
            alpha=_parse_flag_scalar(args.alpha, mode, "--alpha"),
            beta=_parse_flag_scalar(args.beta, mode, "--beta"),
            gamma=_parse_flag_scalar(args.gamma, mode, "--gamma"),
        )
    except TetraError as exc:  # outside the natural region
        raise InputError(str(exc)) from exc


def _cmd_jp(args, config):
    params = _jp_params(args, config.mode)
    if args.count < 1:
        raise UsageError("--count must be >= 1")
    seq = jp_alphas(params, Variant(args.variant), args.count)
    values = [format_scalar(v) for v in seq.prefix(args.count)]
    if args.out:
        payload = json.dumps(dump_alphas(seq), indent=2)
        _emit(payload, args.out, f"jp: wrote {args.count} entries to {args.out}")
    else:
        _emit(
            json.dumps(values, separators=(",", ":")),
            None,
            f"jp: {args.count} entries, variant {args.variant}",
        )
    return EXIT_OK


def _cmd_jp_scan(args, config):
    gamma = _parse_flag_scalar(args.gamma, config.mode, "--gamma")
    bases = list(dict.fromkeys((p.alpha, p.beta) for p in JP_VERIFICATION_GRID))
    lines = ["alpha,beta,region,pbf_flag,oscillatory_flag"]
    for alpha, beta in bases:
        try:
            params = JPParams(alpha=alpha, beta=beta, gamma=gamma)
        except TetraError as exc:
            raise InputError(str(exc)) from exc
        akv = jp_alphas(params, Variant.AKV, 24)
        pbf = akv.classify(24).value == "PBF"
        osc = is_totally_nonnegative(jp_dense_truncation(params, 4)).is_oscillatory_gk
        lines.append(
            f"{format_scalar(alpha)},{format_scalar(beta)},{params.region},"
            f"{str(pbf).lower()},{str(osc).lower()}"
        )
    _emit("\n".join(lines), args.out, f"jp-scan: {len(bases)} grid points at gamma = {args.gamma}")
    return EXIT_OK


def _cmd_factor(args, config):
    t = _load_matrix_file(args.input, config.mode)
    alpha2 = _parse_flag_scalar(args.alpha2, config.mode, "--alpha2")
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    seq = bidiagonal_factor(t, args.n, alpha2)
    cls = seq.classify()
    body = dump_alphas(seq)
    body["classification"] = str(cls)
    _emit(
        json.dumps(body, indent=2),
        args.out,
        f"factor: {seq.length} parameters, classification {cls}",
    )
    return {"PBF": 0, "TN": 1, "INDEFINITE": 2}[str(cls)]


def _cmd_polys(args, config):
    t = _load_matrix_file(args.input, config.mode)
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    if args.kind == "type2":
        named = {"B": type2_sequence(t, args.n)}
    else:
        if args.nu is None:
            raise UsageError(f"--kind {args.kind} requires --nu")
        nu = _parse_flag_scalar(args.nu, config.mode, "--nu")
        if args.kind == "type1":
            a1, a2 = type1_sequences(t, args.n, nu)
            named = {"A1": a1, "A2": a2}
        else:
            b1, b2, small = second_kind_sequences(t, args.n, nu)
            named = {"B1": b1, "B2": b2, "b1": small}
    if args.at is not None:
        x = _parse_flag_scalar(args.at, config.mode, "--at")
        body = {k: [format_scalar(p(x)) for p in seq] for k, seq in named.items()}
    else:
        body = {k: [[format_scalar(c) for c in p.coeffs] for p in seq] for k, seq in named.items()}
    _emit(
        json.dumps(body, indent=2),
        args.out,
        f"polys: kind {args.kind}, indices 0..{args.n}",
    )
    return EXIT_OK


def _cmd_darboux(args, config):
    alphas = _load_alphas_file(args.alphas, config.mode)
    pair = darboux_transforms(alphas)
    t = pair.hat if args.which == "hat" else pair.hathat
    body = dump_matrix(t)
    _emit(
        json.dumps(body, indent=2),
        args.out,
        f"darboux: {args.which} bands down to row {t.materializable_n()}",
    )
    return EXIT_OK


def _suite_charpoly(t, n):
    checked = 0
    for k in range(n + 1):
        recurrence = type2_sequence(t, k + 1)[k + 1]
        dense = leading_principal(t, k).char_poly()
        if recurrence != dense:
            raise VerificationFailure(f"charpoly: B_{k + 1} differs from the dense oracle")
        checked += 1
    nu = Fraction(-1)
    b1, _, small = second_kind_sequences(t, n + 1, nu)
    for k in range(1, n + 1):
        if b1[k + 1] != char_poly_truncation(t, k, 1):
            raise VerificationFailure(f"charpoly: B^(1)_{k + 1} differs from the k=1 trailing oracle")
        if small[k + 1] != char_poly_truncation(t, k, 2):
            raise VerificationFailure(f"charpoly: b^(1)_{k + 1} differs from the k=2 trailing oracle")
        checked += 2
    return {"suite": "charpoly", "checked": checked}


def _suite_tn(t, n, seed):
    depth = min(n, POWER_ORACLE_CAP - 1)
    checked = 0
    for k in range(1, depth + 1):
        m = leading_principal(t, k)
        report = is_totally_nonnegative(m)
        oracle = is_oscillatory_power_oracle(m)
        if report.is_oscillatory_gk != oracle:
            raise VerificationFailure(
                f"tn: GK verdict {report.is_oscillatory_gk} disagrees with power oracle {oracle} at N={k}"
            )
        checked += 1
    return {"suite": "tn", "checked": checked}


def _suite_roundtrip(t, alphas, n, alpha2):
    if alphas.length is not None:
        n = min(n, (alphas.length - 1) // 3)
    recovered = bidiagonal_factor(t, n, alpha2)
    want = alphas.prefix(recovered.length)
    if recovered.prefix(recovered.length) != want:
        raise VerificationFailure("roundtrip: bidiagonal_factor did not reproduce the alphas")
    gb = gauss_borel(t, n)
    if gb.lower_matrix().mul(gb.upper_matrix()) != leading_principal(t, n):
        raise VerificationFailure("roundtrip: L*U does not reproduce the truncation")
    # the polynomial-valued reconstruction needs nu = -1/alpha_2
    if alpha2 != 0:
        n_rec = n if alphas.length is None else min(n, (alphas.length - 2) // 3)
        reconstructed = alphas_from_polynomials(t, n_rec, alpha2)
        if reconstructed.prefix(reconstructed.length) != alphas.prefix(reconstructed.length):
            raise VerificationFailure("roundtrip: alphas_from_polynomials did not reproduce the alphas")
    return {"suite": "roundtrip", "n": n, "recovered": recovered.length}


def _suite_christoffel(t, alphas, n):
    if alphas.length is not None:
        n = min(n, (alphas.length - 5) // 3)
    if n < 1:
        raise InputError("christoffel: need alphas through index 8 (N >= 1)")
    report = verify_christoffel(t, alphas, n)
    return {"suite": "christoffel", "n": n, "checked": report.checked}


def _suite_akv(t, alphas, n):
    if alphas.length is not None:
        n = min(n, (alphas.length - 4) // 3)
    if n < 0:
        raise InputError("akv: need alphas through index 4")
    report = akv_sign_checks(t, alphas, n, AKV_XS)
    return {
        "suite": "akv",
        "n": n,
        "checked": report.checked,
        "max_value": format_scalar(report.max_value),
        "zeros_at_origin": report.zeros_at_origin,
    }


def _suite_jp_consistency():
    for params in JP_VERIFICATION_GRID:
        jp_cross_consistency(params, 24)
        jp_sign_report(params, 24)
    return {"suite": "jp-consistency", "points": len(JP_VERIFICATION_GRID)}


def _cmd_verify(args, config):
    if config.mode != "exact":
        raise UsageError("verification suites run in exact mode only")
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    suites = VERIFY_SUITES if args.suite == "all" else (args.suite,)

    alphas = _load_alphas_file(args.alphas, "exact") if args.alphas else None
    if args.input:
        t = _load_matrix_file(args.input, "exact")
    elif alphas is not None:
        t = tetra_from_alphas(alphas)
    else:
        t = None

    def need_matrix():
        if t is None:
            raise InputError("this suite needs --input or --alphas")
        return t

    def need_alphas():
        if alphas is None:
            raise InputError("this suite needs --alphas")
        return alphas

    results = []
    for suite in suites:
        try:
            if suite == "charpoly":
                results.append(_suite_charpoly(need_matrix(), args.n))
            elif suite == "tn":
                results.append(_suite_tn(need_matrix(), args.n, config.seed))
            elif suite == "roundtrip":
                seq = need_alphas()
                alpha2 = (
                    _parse_flag_scalar(args.alpha2, "exact", "--alpha2")
                    if args.alpha2
                    else seq.at(2)
                )
                results.append(_suite_roundtrip(need_matrix(), seq, args.n, alpha2))
            elif suite == "christoffel":
                results.append(_suite_christoffel(need_matrix(), need_alphas(), args.n))
            elif suite == "akv":
                results.append(_suite_akv(need_matrix(), need_alphas(), args.n))
            else:
                results.append(_suite_jp_consistency())
        except TetraError as exc:
            # identity/sign/prediction violations are verification results,
            # not computation errors
            raise VerificationFailure(f"{suite}: {exc}") from exc
        print(f"verify {suite}: pass", file=sys.stderr)
    body = {"status": "pass", "n": args.n, "suites": results}
    payload = json.dumps(body, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="tetrahess", description=__doc__.splitlines()[0])
    parser.add_argument("--mode", choices=("exact", "float"), default=None)
    parser.add_argument("--float-tolerance", type=float, default=COMPARE_RTOL)
    parser.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jp", help="generate Jacobi-Pineiro alphas")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("--gamma", required=True)
    p.add_argument("--variant", choices=("first", "akv"), default="first")
    p.add_argument("--count", type=int, default=31)
    p.add_argument("--out")

    p = sub.add_parser("jp-scan", help="CSV region scan over the fixed grid")
    p.add_argument("--gamma", default="0")
    p.add_argument("--out")

    p = sub.add_parser("factor", help="bidiagonal factorization of a matrix file")
    p.add_argument("--input", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha2", required=True)
    p.add_argument("--out")

    p = sub.add_parser("polys", help="recursion polynomial sequences")
    p.add_argument("--input", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=("type2", "type1", "second"), required=True)
    p.add_argument("--nu")
    p.add_argument("--at")
    p.add_argument("--out")

    p = sub.add_parser("darboux", help="Darboux-transformed matrix")
    p.add_argument("--alphas", required=True)
    p.add_argument("--which", choices=("hat", "hathat"), required=True)
    p.add_argument("--out")

    p = sub.add_parser("verify", help="exact verification suites")
    p.add_argument("--suite", choices=VERIFY_SUITES + ("all",), required=True)
    p.add_argument("--alphas")
    p.add_argument("--input")
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--alpha2")
    p.add_argument("--out")

    return parser


_COMMANDS = {
    "jp": _cmd_jp,
    "jp-scan": _cmd_jp_scan,
    "factor": _cmd_factor,
    "polys": _cmd_polys,
    "darboux": _cmd_darboux,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        mode = args.mode or os.environ.get("TETRA_MODE", "exact")
        if mode not in ("exact", "float"):
            raise UsageError(f"TETRA_MODE must be exact or float, got {mode!r}")
        config = RunConfig(
            mode=mode,
            float_tolerance=args.float_tolerance,
            output_format="csv" if args.command == "jp-scan" else "json",
            seed=args.seed,
        )
        return _COMMANDS[args.command](args, config)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except VerificationFailure as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        print(json.dumps({"status": "fail", "error": str(exc)}, indent=2))
        return EXIT_VERIFICATION
    except TetraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
