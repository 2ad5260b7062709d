"""Command-line front end.

Every subcommand reads flags (or inline JSON), dispatches to one library
operation, and prints a JSON report (CSV with --csv where a profile is
tabular).  Exit codes: 0 success, 2 validation error, 3 numeric error.
Output is deterministic for a fixed seed: keys are sorted and floats use
their shortest round-trip representation.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import lab, norms, series
from .compose import apply as apply_symbol
from .compose import compose_basis, gram, operator_matrix
from .errors import InvalidInputError, NumericError
from .measures import AlphaMeasure, Measure, measure_from_json, measure_tag
from .symbols import Symbol, check_theorem2, is_vertical_translation, symbol_from_json


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _parse_measure(args) -> Measure:
    if getattr(args, "measure_json", None):
        return measure_from_json(json.loads(args.measure_json))
    return AlphaMeasure(alpha=args.alpha)


def _parse_symbol(args) -> Symbol:
    if getattr(args, "symbol_json", None):
        return symbol_from_json(json.loads(args.symbol_json))
    if args.phi is None:
        raise InvalidInputError("provide --phi (JSON terms) or --symbol-json")
    terms = json.loads(args.phi)
    phi = series.from_json({"terms": terms, "N": max((t[0] for t in terms), default=1)})
    return Symbol(c0=args.c0, phi=phi)


def _parse_series(args) -> series.DirichletSeries:
    if args.series_json:
        return series.from_json(json.loads(args.series_json))
    if args.terms is None:
        raise InvalidInputError("provide --terms (JSON [[n,re,im],...]) or --series-json")
    terms = json.loads(args.terms)
    N = args.N or max((t[0] for t in terms), default=1)
    return series.from_json({"terms": terms, "N": N})


def _add_measure_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--alpha", type=float, default=0.0, help="alpha of the Gamma-type measure")
    p.add_argument("--measure-json", help="measure config JSON (overrides --alpha)")


def _add_symbol_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--c0", type=int, default=1, help="integer linear coefficient of the symbol")
    p.add_argument("--phi", help="JSON terms [[n,re,im],...] of the polynomial part")
    p.add_argument("--symbol-json", help='symbol JSON {"c0":..,"phi":{...}} (overrides flags)')


def _sigma_list(raw: str) -> list[float]:
    try:
        return [float(x) for x in raw.split(",") if x.strip()]
    except ValueError as e:
        raise InvalidInputError(f"bad sigma list {raw!r}") from e


def cmd_norm(args) -> None:
    f = _parse_series(args)
    if args.space == "h":
        if norms._even_q(args.p) is not None:
            _emit({"space": f"H^{args.p:g}", "value": norms.norm_hp(f, args.p)})
        else:
            value, stderr = norms.qmc_norm_hp(f, args.p, seed=args.seed)
            _emit({"space": f"H^{args.p:g}", "value": value, "stderr": stderr})
        return
    mu = _parse_measure(args)
    value = norms.norm_ap(f, args.p, mu, seed=args.seed)
    out = {"space": f"A^{args.p:g}", "measure": measure_tag(mu), "value": value}
    if args.p == 2.0:
        out["coefficient_route"] = norms.norm_a2(f, mu)
    _emit(out)


def cmd_weights(args) -> None:
    mu = _parse_measure(args)
    ns = [args.n] if args.n else list(range(1, args.nmax + 1))
    _emit({"measure": measure_tag(mu), "weights": [[n, mu.weight(n)] for n in ns]})


def cmd_kernel(args) -> None:
    mu = _parse_measure(args)
    kv = norms.kernel(mu, complex(args.s_re, args.s_im), complex(args.w_re, args.w_im), args.N)
    _emit(
        {
            "measure": measure_tag(mu),
            "N": args.N,
            "value": [kv.value.real, kv.value.imag],
            "tail": kv.tail,
        }
    )


def cmd_compose(args) -> None:
    sym = _parse_symbol(args)
    N = args.N or 64
    if args.terms or args.series_json:
        f = _parse_series(args)
        out = apply_symbol(sym, f, N)
    else:
        out = compose_basis(sym, args.n, N)
    _emit({"symbol": sym.to_json(), "result": series.to_json(out)})


def cmd_check_symbol(args) -> None:
    sym = _parse_symbol(args)
    tau = is_vertical_translation(sym)
    out = {"symbol": sym.to_json(), "vertical_translation": tau}
    if sym.c0 >= 1:
        from .symbols import check_theorem1, lemma1_region

        out["theorem1"] = check_theorem1(sym).to_json()
        out["lemma1"] = lemma1_region(sym).to_json()
    else:
        out["theorem2"] = check_theorem2(sym, args.eta).to_json()
    _emit(out)


def cmd_classify(args) -> None:
    sym = _parse_symbol(args)
    mu = _parse_measure(args)
    report = lab.classify(sym, mu, args.N or 32, p=args.p)
    _emit(report.to_json())


def cmd_lemma2(args) -> None:
    mu = _parse_measure(args)
    points = lab.lemma2_profile(mu, _sigma_list(args.sigmas), args.N or 10_000)
    if args.csv:
        sys.stdout.write(lab.lemma2_to_csv(points))
    else:
        _emit({"measure": measure_tag(mu), "profile": [pt.to_json() for pt in points]})


def cmd_profile(args) -> None:
    sym = _parse_symbol(args)
    mu = _parse_measure(args)
    points = lab.two_norm_profile(
        sym, mu, args.p, _sigma_list(args.sigmas), args.N or 128, seed=args.seed
    )
    if args.csv:
        sys.stdout.write(lab.profile_to_csv(points))
    else:
        _emit(
            {
                "symbol": sym.to_json(),
                "p": args.p,
                "profile": [pt.to_json() for pt in points],
            }
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dirspaces",
        description="Numerics for Hardy and weighted Bergman spaces of Dirichlet series "
        "and their composition operators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("norm", help="H^p or A^p norm of a Dirichlet polynomial")
    p.add_argument("--terms", help="JSON [[n,re,im],...] of the polynomial")
    p.add_argument("--series-json", help="full series JSON (overrides --terms)")
    p.add_argument("--space", choices=("h", "a"), default="a")
    p.add_argument("--p", type=float, default=2.0)
    p.add_argument("--N", type=int)
    p.add_argument("--seed", type=int, default=0)
    _add_measure_flags(p)
    p.set_defaults(func=cmd_norm)

    p = sub.add_parser("weights", help="weights w_h(n) of a measure")
    p.add_argument("--n", type=int, help="single index")
    p.add_argument("--nmax", type=int, default=8, help="list weights for n = 1..nmax")
    _add_measure_flags(p)
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("kernel", help="reproducing kernel K(s, w) with tail bound")
    p.add_argument("--s-re", type=float, required=True)
    p.add_argument("--s-im", type=float, default=0.0)
    p.add_argument("--w-re", type=float, required=True)
    p.add_argument("--w-im", type=float, default=0.0)
    p.add_argument("--N", type=int, default=256)
    _add_measure_flags(p)
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("compose", help="coefficients of n^{-Phi} or f o Phi")
    _add_symbol_flags(p)
    p.add_argument("--n", type=int, default=2, help="basis index to compose")
    p.add_argument("--terms", help="JSON terms of a polynomial to compose instead")
    p.add_argument("--series-json")
    p.add_argument("--N", type=int)
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("check-symbol", help="admissibility certificates for a symbol")
    _add_symbol_flags(p)
    p.add_argument("--eta", type=float, default=1e-6, help="margin for the c0=0 check")
    p.set_defaults(func=cmd_check_symbol)

    p = sub.add_parser("classify", help="full isometry/invertibility diagnostic report")
    _add_symbol_flags(p)
    _add_measure_flags(p)
    p.add_argument("--N", type=int, default=32)
    p.add_argument("--p", type=float, default=2.0)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("lemma2", help="point-evaluation bound profile S(sigma)")
    _add_measure_flags(p)
    p.add_argument("--sigmas", default="4,6,8,10,12")
    p.add_argument("--N", type=int, default=10_000)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_lemma2)

    p = sub.add_parser("profile", help="norm profile of 2^{-Phi(sigma+.)} vs 2^{-sigma}")
    _add_symbol_flags(p)
    _add_measure_flags(p)
    p.add_argument("--sigmas", default="0.25,0.5,1,2")
    p.add_argument("--p", type=float, default=2.0)
    p.add_argument("--N", type=int, default=128)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_profile)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (InvalidInputError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except NumericError as e:
        print(f"numeric error: {e}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
