"""Command-line entry point: one subcommand per library operation, JSON on stdout."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import bounds, gf2, lattice
from .errors import (
    DomainError,
    HadpolyError,
    InfeasibleError,
    PreconditionError,
    ResourceError,
    UnsupportedMethodError,
)

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_INFEASIBLE = 0, 2, 3, 4


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def cmd_count(args) -> str:
    count = lattice.count_dilate(args.m, args.d, args.method, args.budget)
    return _dump({"m": args.m, "n": 1 << args.m, "d": args.d, "method": args.method, "count": str(count)})


def cmd_enumerate(args) -> str:
    method = args.method
    if method == "auto":
        method = "bijection" if args.d == 1 else "oracle"
    if method == "bijection":
        if args.d != 1:
            raise UnsupportedMethodError("the affine-subspace generator only covers d = 1")
        pts = lattice.enumerate_unit_points(args.m)
    else:
        pts = lattice.enumerate_dilate_points(args.m, args.d, args.budget)
    if args.format == "csv":
        return "\n".join(lattice.points_to_csv(pts))
    return lattice.points_to_json(pts)


def cmd_ehrhart(args) -> str:
    counts, coeffs = lattice.ehrhart_from_oracle(args.m, args.budget)
    return _dump({
        "m": args.m,
        "counts": [[d, str(c)] for d, c in counts],
        "coefficients": [str(c) for c in coeffs],
    })


def cmd_certify(args) -> str:
    cnt = bounds.case1_count_lower_bound(args.m, args.d)
    res = bounds.case1_verify_injectivity(args.m, args.d, budget=args.budget, cap=args.cap)
    out = {
        "m": args.m,
        "d": args.d,
        "dims": cnt.dims,
        "exact_count": str(cnt.exact),
        "crude_bound": str(cnt.crude),
        "central_dims": cnt.central_dims,
        "families_checked": res.families,
        "injective": res.injective,
    }
    if res.witness is not None:
        out["witness"] = [[[int(w) for w in W.basis] for W in fam.subspaces] for fam in res.witness]
    return _dump(out)


def cmd_density(args) -> str:
    est = bounds.case3_sample_density(args.m, args.d, args.c, args.D, args.samples, args.seed, args.threads)
    return _dump(est.to_dict())


def cmd_bound(args) -> str:
    return _dump(bounds.theorem1_bound(args.n, args.d, args.eps).to_dict())


def cmd_gbinom(args) -> str:
    return _dump({"m": args.m, "k": args.k, "value": str(gf2.gaussian_binomial(args.m, args.k))})


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hadpoly", description="Integer points in dilates of the Hadamard polytope.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--threads", type=int, default=os.cpu_count() or 1)
        return p

    p = add("count", cmd_count, "count integer points of d*Had")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--method", choices=["oracle", "bijection"], default="oracle")
    p.add_argument("--budget", type=int, default=lattice.DEFAULT_BUDGET)

    p = add("enumerate", cmd_enumerate, "list integer points of d*Had")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--method", choices=["auto", "oracle", "bijection"], default="auto")
    p.add_argument("--budget", type=int, default=lattice.DEFAULT_BUDGET)
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = add("ehrhart", cmd_ehrhart, "interpolate the Ehrhart polynomial from oracle counts")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--budget", type=int, default=lattice.DEFAULT_BUDGET)

    p = add("certify", cmd_certify, "enumerate small-dilate families and check their sums are distinct")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--budget", type=int, default=bounds.DEFAULT_FAMILY_BUDGET)

    p = add("density", cmd_density, "Monte-Carlo density of a hypercube inside d*P0")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--D", type=int, default=1)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)

    p = add("bound", cmd_bound, "lower bound on |d*Had ∩ Z^n| and its regime")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--eps", type=float, required=True)

    p = add("gbinom", cmd_gbinom, "Gaussian binomial coefficient [m k]_2")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        out = args.func(args)
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InfeasibleError, PreconditionError, DomainError, UnsupportedMethodError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except HadpolyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
