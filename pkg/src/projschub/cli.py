"""Command-line front end.

Exit codes: 0 success / all checks pass, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import math
import sys

from projschub import render
from projschub.formulas import (
    INFINITY,
    coefficient_via_explicit,
    coefficient_via_recurrence,
    expand_product,
)
from projschub.matchings import (
    coefficient_via_matchings,
    edge_weight_index,
    iter_matchings,
    matching_weight,
)
from projschub.models import enumerate_model_objects, model_weight
from projschub.newton import DomainError, PolytopeSpec, dilated_lattice_points, sorted_points
from projschub.polyring import Family, Polynomial, beta_to_t, to_dense
from projschub.verify import SUITES

ROUTES = ("matchings", "explicit", "recurrence", "puzzles", "tableaux")
FORMATS = ("text", "json", "latex")


def _dimension(s: str):
    if s.lower() in ("inf", "infinity"):
        return INFINITY
    try:
        n = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer or 'inf', got {s!r}")
    if n < 0:
        raise argparse.ArgumentTypeError("dimension must be nonnegative")
    return n


def _nonneg(s: str) -> int:
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {s!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _positive(s: str) -> int:
    v = _nonneg(s)
    if v == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def _n_json(n):
    return None if n == math.inf else n


def _route_coefficient(route: str, i: int, j: int, k: int) -> Polynomial:
    if route == "matchings":
        return coefficient_via_matchings(i, j, k)
    if route == "explicit":
        return coefficient_via_explicit(i, j, k)
    if route == "recurrence":
        return coefficient_via_recurrence(i, j, k)
    kind = "puzzle" if route == "puzzles" else "tableau"
    total = Polynomial.zero(Family.T)
    for obj in enumerate_model_objects(i, j, k, kind):
        total = total + model_weight(obj)
    return total


def _emit_poly(p: Polynomial, fmt: str) -> str:
    if fmt == "latex":
        return render.to_latex(p)
    return render.to_text(p)


def cmd_coeff(args, parser) -> int:
    i, j, k, n = args.i, args.j, args.k, args.n
    if i > n or j > n:
        parser.error(f"-i/-j must not exceed n = {n}")
    family = Family(args.family) if args.family else (
        Family.BETA if args.route == "matchings" else Family.T
    )
    p = _route_coefficient(args.route, i, j, k)
    if family is Family.T and p.family is Family.BETA:
        p = beta_to_t(p)
    elif family is Family.BETA and p.family is Family.T:
        # beta output only comes from matchings; the requested route must agree with it
        beta = coefficient_via_matchings(i, j, k)
        if beta_to_t(beta) != p:
            print(
                f"route {args.route} disagrees with matchings for (i, j, k) = ({i}, {j}, {k})",
                file=sys.stderr,
            )
            return 1
        p = beta
    if k > n:
        p = Polynomial.zero(family)
    if args.format == "json":
        print(
            render.dumps(
                {
                    "i": i,
                    "j": j,
                    "k": k,
                    "n": _n_json(n),
                    "route": args.route,
                    "coefficient": render.poly_to_obj(p),
                }
            )
        )
    else:
        print(_emit_poly(p, args.format))
    return 0


def cmd_expand(args, parser) -> int:
    try:
        res = expand_product(args.i, args.j, args.n, Family(args.family))
    except ValueError as exc:
        parser.error(str(exc))
    if args.format == "json":
        print(
            render.dumps(
                {
                    "i": res.i,
                    "j": res.j,
                    "n": _n_json(res.n),
                    "coeffs": {str(k): render.poly_to_obj(c) for k, c in sorted(res.coeffs.items(), reverse=True)},
                }
            )
        )
    elif args.format == "latex":
        print(render.expansion_latex(res.coeffs))
    else:
        print(render.expansion_text(res.coeffs))
    return 0


def cmd_matchings(args, parser) -> int:
    r = args.r if args.r is not None else args.i + args.j - args.k
    rows = []
    for m in iter_matchings(args.i, args.j, r):
        rows.append((m, matching_weight(m)))
    if args.format == "json":
        print(
            render.dumps(
                {
                    "i": args.i,
                    "j": args.j,
                    "r": r,
                    "matchings": [
                        {
                            "edges": [[g, h] for g, h in m.edges],
                            "weights": [edge_weight_index(m, e) for e in m.edges],
                            "weight": render.poly_to_obj(w),
                        }
                        for m, w in rows
                    ],
                }
            )
        )
    else:
        for m, w in rows:
            print(f"{m}\t{_emit_poly(w, args.format)}")
    return 0


def cmd_polytope(args, parser) -> int:
    try:
        spec = PolytopeSpec(args.i, args.j, args.k)
    except DomainError as exc:
        parser.error(str(exc))
    pts = [to_dense(v, spec.k) for v in sorted_points(dilated_lattice_points(spec, args.dilate))]
    if args.format == "json":
        print(
            render.dumps(
                {"i": spec.i, "j": spec.j, "k": spec.k, "r": spec.r, "dilate": args.dilate, "points": [list(x) for x in pts]}
            )
        )
    elif args.format == "latex":
        print("\\{" + ", ".join("(" + ",".join(map(str, x)) + ")" for x in pts) + "\\}")
    else:
        for x in pts:
            print("(" + ", ".join(map(str, x)) + ")")
    return 0


def cmd_verify(args, parser) -> int:
    suite = SUITES[args.suite]
    kwargs = {}
    if args.max_ij is not None:
        kwargs["max_ij"] = args.max_ij
    if args.max_n is not None:
        if args.suite not in ("scaling", "idp", "window"):
            parser.error(f"--max-n does not apply to suite {args.suite}")
        kwargs["max_n"] = args.max_n
    if args.n is not None:
        if args.suite != "associativity":
            parser.error("--n only applies to suite associativity")
        kwargs["n"] = args.n
    report = suite(**kwargs)
    if args.format == "json":
        print(render.dumps(report.to_obj()))
    else:
        print(report.to_text())
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="projschub",
        description="Equivariant structure constants of projective space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def ijk(p, with_k=True, k_required=True):
        p.add_argument("-i", type=_nonneg, required=True)
        p.add_argument("-j", type=_nonneg, required=True)
        if with_k:
            p.add_argument("-k", type=_nonneg, required=k_required)

    def fmt(p):
        p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("coeff", help="one coefficient C_{i,j}^k")
    ijk(p)
    p.add_argument("--route", choices=ROUTES, default="matchings")
    p.add_argument("--family", choices=[f.value for f in Family], default=None,
                   help="output variables (default: beta for matchings, t otherwise)")
    p.add_argument("-n", "--n", type=_dimension, default=INFINITY,
                   help="ambient dimension, or 'inf' (default)")
    fmt(p)
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("expand", help="expansion of sigma_i * sigma_j in P^n")
    ijk(p, with_k=False)
    p.add_argument("-n", "--n", type=_dimension, required=True)
    p.add_argument("--family", choices=[f.value for f in Family], default="t")
    fmt(p)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("matchings", help="list r-matchings of G^i_j with weights")
    ijk(p, k_required=False)
    p.add_argument("-r", type=_nonneg, default=None, help="matching size (alternative to -k)")
    fmt(p)
    p.set_defaults(func=cmd_matchings)

    p = sub.add_parser("polytope", help="lattice points of Q_{i,j}^k")
    ijk(p)
    p.add_argument("--dilate", type=_positive, default=1, help="list points of N*Q instead")
    fmt(p)
    p.set_defaults(func=cmd_polytope)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--max-ij", type=_nonneg, default=None)
    p.add_argument("--max-n", type=_positive, default=None,
                   help="largest scale factor N (scaling, idp) or dimension (window)")
    p.add_argument("-n", "--n", type=_nonneg, default=None, help="ambient dimension (associativity)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "matchings" and (args.k is None) == (args.r is None):
        parser.error("matchings needs exactly one of -k or -r")
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
