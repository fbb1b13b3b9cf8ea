"""Command-line interface.  JSON on stdout, diagnostics on stderr.

Exit codes: 0 success, 1 a verification reported failure, 2 input error,
3 search budget exhausted without an optimality proof.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from .bose_mesner import (
    ProfileMatrixSpec,
    eigenspace_profile,
    fraction_str,
    parse_fraction,
    spectrum,
    verify_spectrum_dense,
)
from .bounds import HoffmanError, hoffman_bound, transitivity_bound, verify_theorem
from .combinatorics import JohnsonParams, binomial, verify_scheme_axioms
from .extremal import (
    Family,
    canonical_family,
    enumerate_maximum_independent_sets,
    max_independent_set,
    sporadic_family_k3,
)
from .plane import build_plane, bruck_ryser_excludes, plane_clique

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class InputError(ValueError):
    pass


def _profile(args) -> ProfileMatrixSpec:
    if (args.forbidden is None) == (args.profile is None):
        raise InputError("give exactly one of --forbidden or --profile")
    if args.forbidden is not None:
        return ProfileMatrixSpec.delta(args.n, args.k, args.forbidden)
    return ProfileMatrixSpec(args.n, args.k, tuple(parse_fraction(x) for x in args.profile.split(",")))


def _k_range(text: str) -> range:
    try:
        a, b = text.split("..")
        return range(int(a), int(b) + 1)
    except ValueError:
        raise InputError(f"bad range {text!r}; expected A..B") from None


def cmd_spectrum(args):
    spec = _profile(args)
    sp = spectrum(spec)
    out = sp.to_json()
    out["method"] = sp.method
    out["nonzero_diagonal"] = spec.f[spec.k] != 0
    status = EXIT_OK
    if args.dense_check:
        rep = verify_spectrum_dense(spec)
        out["dense_check"] = {
            "order": rep.order,
            "annihilation": rep.annihilation,
            "traces": {str(p): v for p, v in rep.traces.items()},
            "multiplicities_solve": rep.multiplicities_solve,
            "row_sum": rep.row_sum,
            "ok": rep.ok,
            "notes": rep.notes,
        }
        status = EXIT_OK if rep.ok else EXIT_FAILED
    return out, status


def cmd_hoffman(args):
    return hoffman_bound(_profile(args), method=args.method).to_json(), EXIT_OK


def cmd_verify_theorem(args):
    if (args.k is None) == (args.k_range is None):
        raise InputError("give exactly one of --k or --k-range")
    ks = [args.k] if args.k is not None else list(_k_range(args.k_range))
    if not ks or min(ks) < 2:
        raise InputError("k must be at least 2")
    reports = [verify_theorem(k).to_json() for k in ks]
    all_true = all(r["verdict"] for r in reports)
    return {"reports": reports, "all_verdicts": all_true}, EXIT_OK if all_true else EXIT_FAILED


def cmd_mis(args):
    p = JohnsonParams(args.n, args.k, args.t)
    if args.enumerate_all:
        if args.size is None:
            raise InputError("--enumerate-all needs --size")
        return enumerate_maximum_independent_sets(p, args.size).to_json(args.one_indexed), EXIT_OK
    res = max_independent_set(p, budget=args.budget)
    return res.to_json(args.one_indexed), EXIT_BUDGET if res.budget_exhausted else EXIT_OK


def cmd_plane(args):
    if args.clique:
        fam, cert = plane_clique(args.q)
        N = binomial(cert.n, cert.k)
        out = fam.to_json(args.one_indexed)
        out["certificate"] = {
            "clique_size": cert.size,
            "pairs_checked": cert.pairs_checked,
            "ok": cert.ok,
            "transitivity_bound": fraction_str(transitivity_bound(cert.size, N)),
        }
        return out, EXIT_OK if cert.ok else EXIT_FAILED
    return build_plane(args.q).to_json(), EXIT_OK


def cmd_bruck_ryser(args):
    return bruck_ryser_excludes(args.order).to_json(), EXIT_OK


def cmd_axioms(args):
    rep = verify_scheme_axioms(args.n, args.k)
    out = {
        "n": rep.n,
        "k": rep.k,
        "relations": rep.relations,
        "valencies": {str(i): v for i, v in rep.valencies.items()},
        "partition": rep.partition,
        "diagonal": rep.diagonal,
        "symmetric": rep.symmetric,
        "constant_intersection_numbers": rep.constant_intersection_numbers,
        "intersection_numbers": [
            {"i": i, "j": j, "l": l, "value": v} for (i, j, l), v in sorted(rep.intersection_numbers.items())
        ],
        "violations": rep.violations,
        "ok": rep.ok,
    }
    return out, EXIT_OK if rep.ok else EXIT_FAILED


def cmd_eigenspace(args):
    if args.family == "canonical":
        fam = canonical_family(args.n, args.k, 0, 1)
    elif args.family == "sporadic":
        fam = sporadic_family_k3()
    else:
        try:
            sets = json.loads(args.family)
        except json.JSONDecodeError as exc:
            raise InputError(f"--family is not JSON: {exc}") from None
        fam = Family.from_sets(sets, args.n, args.k, one_indexed=args.one_indexed)
    return eigenspace_profile(fam.members, fam.n, fam.k).to_json(), EXIT_OK


def _pretty(value, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for key, v in value.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{key}:")
                lines.append(_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(v)}")
        return "\n".join(lines)
    if isinstance(value, list):
        return "\n".join(
            _pretty(v, indent) + ("\n" + pad + "-" if isinstance(v, dict) else "") for v in value
        )
    return pad + _scalar(value)


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _scalar(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, str) and "/" in v:
        try:
            x = Fraction(v)
        except ValueError:
            return v
        return f"{v} (~{float(x):.6g})"
    return json.dumps(v) if not isinstance(v, str) else v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="johnson-hoffman", description=__doc__.splitlines()[0])
    parser.add_argument("--pretty", action="store_true", help="human-readable rendering")
    parser.add_argument("--seed", type=int, default=None, help="reserved; solvers are deterministic")
    sub = parser.add_subparsers(dest="command", required=True)

    def profile_args(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--forbidden", type=int, help="adjacency of J(n,k,t) for this t")
        p.add_argument("--profile", help="comma-separated f(0),...,f(k); rationals like 1/2")

    p = sub.add_parser("spectrum", help="exact spectrum of a profile matrix")
    profile_args(p)
    p.add_argument("--dense-check", action="store_true")
    p.add_argument("--json", action="store_true", help="JSON output (the default)")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("hoffman", help="Hoffman ratio bound")
    profile_args(p)
    p.add_argument("--method", choices=["closed-form", "dense"], default="closed-form")
    p.set_defaults(func=cmd_hoffman)

    p = sub.add_parser("verify-theorem", help="certify alpha(J(k^2-k+1,k,1)) = C(k^2-k-1,k-2)")
    p.add_argument("--k", type=int)
    p.add_argument("--k-range", help="inclusive range A..B")
    p.set_defaults(func=cmd_verify_theorem)

    p = sub.add_parser("mis", help="maximum independent set of J(n,k,t)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--budget", type=int, default=None, help="search node limit")
    p.add_argument("--enumerate-all", action="store_true")
    p.add_argument("--size", type=int)
    p.add_argument("--one-indexed", action="store_true")
    p.set_defaults(func=cmd_mis)

    p = sub.add_parser("plane", help="PG(2,q)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--clique", action="store_true")
    p.add_argument("--one-indexed", action="store_true")
    p.set_defaults(func=cmd_plane)

    p = sub.add_parser("bruck-ryser", help="Bruck-Ryser exclusion test")
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_bruck_ryser)

    p = sub.add_parser("axioms", help="check association-scheme axioms of J(n,k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_axioms)

    p = sub.add_parser("eigenspace", help="eigenspace projections of a family's indicator")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--family", default="canonical",
                   help="'canonical', 'sporadic', or a JSON list of sets")
    p.add_argument("--one-indexed", action="store_true")
    p.set_defaults(func=cmd_eigenspace)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "command", "pretty")}
    start = time.perf_counter()
    try:
        result, status = args.func(args)
    except (InputError, HoffmanError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    envelope = {
        "command": args.command,
        "parameters": params,
        "result": result,
        "elapsed_seconds": round(time.perf_counter() - start, 6),
    }
    if args.pretty:
        print(_pretty(envelope))
    else:
        print(json.dumps(envelope, indent=2))
    return status


if __name__ == "__main__":
    sys.exit(main())
