"""Command-line interface.

Commands: invariants, ranks, compare, verify, sweep.  Output is deterministic;
--json emits key-sorted documents tagged with the schema "milnor-sh/1".
Exit codes: 0 success, 1 verification failure, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .classify import contactomorphic
from .closedform import bigraded_profile, sh_rank
from .invariants import (
    WindowError,
    check_EL_conjecture,
    check_rank_relation,
    check_refined_conjecture,
    fcd_from_profile,
    profile_for_invariants,
    search_formal_period,
    signature,
)
from .oracle import oracle_profile
from .polyspec import KINDS, PolySpec, format_poly, normalize, parse_poly, spec_to_dict

SCHEMA = "milnor-sh/1"
CSV_COLUMNS = [
    "kind", "p", "q", "rho", "lambda", "kappa", "sigma", "mu", "b2",
    "theta", "rho_b", "g_w", "tilde_e", "tilde_f", "small_res",
]


def _envelope(command: str, body: dict) -> dict:
    return {"schema": SCHEMA, "version": __version__, "command": command, **body}


def _print_json(doc: dict) -> None:
    print(json.dumps(doc, sort_keys=True, separators=(",", ":"), default=str))


def _signature_row(spec: PolySpec) -> dict:
    sig = signature(spec)
    return {
        "kind": sig.spec.kind,
        "p": sig.spec.p,
        "q": sig.spec.q,
        "rho": sig.rho,
        "lambda": sig.lam,
        "kappa": sig.kappa,
        "sigma": sig.sigma,
        "mu": sig.mu,
        "b2": sig.b2,
        "theta": sig.theta,
        "rho_b": sig.rho_b,
        "g_w": sig.g_w,
        "tilde_e": sig.tilde.p,
        "tilde_f": sig.tilde.q,
        "small_res": sig.small_res,
    }


def cmd_invariants(args) -> int:
    spec = parse_poly(args.poly)
    sig = signature(spec)
    row = _signature_row(spec)
    row["lct"] = str(sig.lct) if sig.lct is not None else None
    if args.json:
        _print_json(_envelope("invariants", {"polynomial": spec_to_dict(sig.spec),
                                             "invariants": row}))
    else:
        print(format_poly(sig.spec))
        for key in ["rho", "lambda", "kappa", "sigma", "lct", "mu", "b2",
                    "theta", "rho_b", "g_w", "tilde_e", "tilde_f", "small_res"]:
            print(f"  {key} = {row[key]}")
    return 0


def cmd_ranks(args) -> int:
    spec = parse_poly(args.poly)
    r_lo, r_hi = args.r_from, args.r_to
    if r_lo > r_hi:
        raise ValueError("--from must not exceed --to")
    if args.bigraded:
        profile = bigraded_profile(spec, r_lo, r_hi)
        if args.json:
            body = {
                "polynomial": spec_to_dict(spec),
                "window": [r_lo, r_hi],
                "classes": [
                    {"degree": deg, "bidegree": b, "rank": v}
                    for deg, b, v in profile.triples()
                ],
            }
            _print_json(_envelope("ranks", body))
        else:
            for deg, b, v in profile.triples():
                print(f"deg={deg} bideg={b} rank={v}")
    else:
        ranks = {r: sh_rank(spec, r) for r in range(r_lo, r_hi + 1)}
        if args.json:
            body = {
                "polynomial": spec_to_dict(spec),
                "window": [r_lo, r_hi],
                "ranks": [{"degree": r, "rank": v} for r, v in sorted(ranks.items())],
            }
            _print_json(_envelope("ranks", body))
        else:
            for r in range(r_lo, r_hi + 1):
                print(f"deg={r} rank={ranks[r]}")
    return 0


def cmd_compare(args) -> int:
    s1, s2 = parse_poly(args.poly1), parse_poly(args.poly2)
    verdict = contactomorphic(s1, s2)
    if args.json:
        body = {
            "polynomials": [spec_to_dict(normalize(s1)), spec_to_dict(normalize(s2))],
            "contactomorphic": verdict.contactomorphic,
            "reason": verdict.reason,
            "detail": [
                format_poly(item) if isinstance(item, PolySpec) else item
                for item in verdict.detail
            ],
        }
        _print_json(_envelope("compare", body))
    else:
        word = "contactomorphic" if verdict.contactomorphic else "distinct"
        print(f"{format_poly(s1)} vs {format_poly(s2)}: {word} ({verdict.reason})")
    return 0


def _verify_spec(spec: PolySpec, r_lo: int) -> tuple[bool, dict]:
    checks: dict[str, bool] = {}
    formula = bigraded_profile(spec, r_lo, 3).ranks
    oracle = oracle_profile(spec, r_lo, 3).ranks
    checks["oracle"] = formula == oracle
    checks["ranks"] = all(
        check_rank_relation(spec, k)[0] for k in range(r_lo // 2, 1)
    )
    checks["refined"] = all(
        check_refined_conjecture(spec, k)[0] for k in range(r_lo // 2, 1)
    )
    checks["el"], _ = check_EL_conjecture(spec)
    sig = signature(spec)
    profile = profile_for_invariants(normalize(spec))
    if sig.rho >= 2:
        checks["fcd"] = fcd_from_profile(profile, sig.rho) == (sig.kappa, sig.sigma)
    if sig.rho == 1:
        checks["period"] = (
            search_formal_period(profile, sig.rho, sig.lam) == (sig.theta, sig.rho_b)
        )
    return all(checks.values()), checks


def cmd_verify(args) -> int:
    spec = parse_poly(args.poly)
    ok, checks = _verify_spec(spec, args.r_from)
    if args.json:
        _print_json(_envelope("verify", {
            "polynomial": spec_to_dict(spec),
            "window": [args.r_from, 3],
            "checks": checks,
            "ok": ok,
        }))
    else:
        for name, passed in sorted(checks.items()):
            print(f"{name}: {'ok' if passed else 'FAIL'}")
    return 0 if ok else 1


def _sweep_grid(kinds: list[str], max_exp: int) -> list[PolySpec]:
    return [
        PolySpec(kind, p, q)
        for kind in kinds
        for p in range(2, max_exp + 1)
        for q in range(2, max_exp + 1)
    ]


def cmd_sweep(args) -> int:
    kinds = list(KINDS) if args.type == "all" else [args.type]
    specs = _sweep_grid(kinds, args.max)
    if args.pairs:
        results = []
        failed = False
        for i, s1 in enumerate(specs):
            for s2 in specs[i + 1:]:
                verdict = contactomorphic(s1, s2)
                results.append({
                    "pair": [format_poly(s1), format_poly(s2)],
                    "contactomorphic": verdict.contactomorphic,
                    "reason": verdict.reason,
                })
        body = {"pairs": results, "count": len(results)}
        if args.out == "json" or args.json:
            _print_json(_envelope("sweep", body))
        else:
            for row in results:
                word = "contactomorphic" if row["contactomorphic"] else "distinct"
                print(f"{row['pair'][0]} vs {row['pair'][1]}: {word} ({row['reason']})")
        return 1 if failed else 0
    if args.check:
        names = ["oracle", "ranks", "refined", "el"] if args.check == "all" else [args.check]
        failures = []
        for spec in specs:
            _, checks = _verify_spec(spec, 2 * (1 - (spec.p + spec.q)))
            for name in names:
                if name in checks and not checks[name]:
                    failures.append({"polynomial": format_poly(spec), "check": name})
        body = {"checked": len(specs), "failures": failures}
        if args.out == "json" or args.json:
            _print_json(_envelope("sweep", body))
        else:
            print(f"checked {len(specs)} polynomials; {len(failures)} failures")
            for row in failures:
                print(f"FAIL {row['polynomial']} {row['check']}")
        return 1 if failures else 0
    rows = [_signature_row(s) for s in specs]
    if args.out == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: ("" if row[k] is None else row[k]) for k in CSV_COLUMNS})
        sys.stdout.write(buf.getvalue())
    elif args.out == "json" or args.json:
        _print_json(_envelope("sweep", {"rows": rows, "count": len(rows)}))
    else:
        for row in rows:
            print(" ".join(f"{k}={row[k]}" for k in CSV_COLUMNS))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="milnorsh",
        description="Symplectic cohomology ranks and contact invariants of "
                    "invertible cA_n singularities (exact arithmetic).",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="closed-form invariant signature")
    p_inv.add_argument("poly", help="polynomial, e.g. loop:3,4")
    p_inv.add_argument("--json", action="store_true")
    p_inv.set_defaults(func=cmd_invariants)

    p_ranks = sub.add_parser("ranks", help="ranks over a degree window")
    p_ranks.add_argument("poly")
    p_ranks.add_argument("--from", dest="r_from", type=int, default=-10)
    p_ranks.add_argument("--to", dest="r_to", type=int, default=1)
    p_ranks.add_argument("--bigraded", action="store_true")
    p_ranks.add_argument("--json", action="store_true")
    p_ranks.set_defaults(func=cmd_ranks)

    p_cmp = sub.add_parser("compare", help="contactomorphism verdict")
    p_cmp.add_argument("poly1")
    p_cmp.add_argument("poly2")
    p_cmp.add_argument("--json", action="store_true")
    p_cmp.set_defaults(func=cmd_compare)

    p_ver = sub.add_parser("verify", help="cross-check formulas against the oracle")
    p_ver.add_argument("poly")
    p_ver.add_argument("--from", dest="r_from", type=int, default=-24)
    p_ver.add_argument("--json", action="store_true")
    p_ver.set_defaults(func=cmd_verify)

    p_sw = sub.add_parser("sweep", help="batch signatures, verdicts or checks")
    p_sw.add_argument("--type", choices=list(KINDS) + ["all"], default="all")
    p_sw.add_argument("--max", type=int, default=6)
    p_sw.add_argument("--out", choices=["text", "csv", "json"], default="text")
    p_sw.add_argument("--pairs", action="store_true")
    p_sw.add_argument("--check", choices=["el", "refined", "ranks", "oracle", "all"])
    p_sw.add_argument("--json", action="store_true")
    p_sw.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, WindowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
