"""
Command line entry point.

    bruhat-regions query 5164732 exponents
    bruhat-regions verify p-eq-r --max-n 6
    bruhat-regions explore-gamma 321 --dot-out out/
    bruhat-regions explore-factorization --max-vertices 5

Exit status: 0 all checks pass, 1 a counterexample was found, 2 usage or
resource error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .arrangement import (exponents_via_simple_peo, inversion_graph_dot, region_polynomial_w,
                          rook_diagram, sector_decomposition, simple_peo)
from .bruhat import lower_interval, poincare_polynomial
from .explore import explore_factorization, explore_gamma, format_contingency
from .perm import Permutation, exponents_by_records, is_smooth, smoothness_witness
from .poly import format_q_numbers
from .verify import GRAPH_THEOREMS, THEOREMS, ResourceLimitError, verify

QUERIES = ("poincare", "regions", "smooth", "exponents", "interval", "diagram")


def _tuple_text(xs) -> str:
    return "(" + ",".join(map(str, xs)) + ")"


def _smooth_text(w: Permutation) -> str:
    witness = smoothness_witness(w)
    if witness is None:
        return "smooth"
    sigma, pos = witness
    return f"non-smooth: contains {sigma} at positions {','.join(map(str, pos))}"


def query(w: Permutation, what: str, factored: bool = False, as_json: bool = False,
          dot_out: Path | None = None) -> str:
    """Text (or JSON text) answer for one per-permutation query."""
    if what == "poincare":
        P = poincare_polynomial(w)
        return json.dumps({"w": str(w), "P_w": P.to_json()}) if as_json else str(P)
    if what == "regions":
        R = region_polynomial_w(w)
        return json.dumps({"w": str(w), "R_w": R.to_json()}) if as_json else str(R)
    if what == "smooth":
        if as_json:
            return json.dumps({"w": str(w), "smooth": is_smooth(w), "detail": _smooth_text(w)})
        return _smooth_text(w)
    if what == "exponents":
        rec = exponents_by_records(w)
        smooth = is_smooth(w)
        if as_json:
            data = {"w": str(w), "records_exponents": list(rec), "smooth": smooth}
            if smooth:
                peo = simple_peo(w)
                data["simple_peo_order"] = list(peo.order)
                data["simple_peo_exponents"] = list(peo.exponents)
                data["factors"] = [e + 1 for e in rec]
            return json.dumps(data)
        if smooth:
            peo = simple_peo(w)
            lines = [f"{_tuple_text(rec)}; R_w = P_w = {format_q_numbers(e + 1 for e in rec)}",
                     f"simple PEO {_tuple_text(peo.order)}: exponents {_tuple_text(peo.exponents)}"
                     f" (by vertex {_tuple_text(exponents_via_simple_peo(w))})"]
            return "\n".join(lines)
        lines = [_tuple_text(rec)]
        if factored:
            lines.append(f"{_smooth_text(w)}; the q-number factorization of P_w and R_w "
                         "holds only for smooth permutations, so none is asserted")
        return "\n".join(lines)
    if what == "interval":
        iv = lower_interval(w)
        if as_json:
            return iv.to_json()
        return f"B_w = {iv.size}; rank counts {_tuple_text(iv.rank_counts)}"
    if what == "diagram":
        if dot_out is not None:
            dot_out.mkdir(parents=True, exist_ok=True)
            (dot_out / f"G_{w}.dot").write_text(inversion_graph_dot(w) + "\n")
        sd = sector_decomposition(w)
        lines = [rook_diagram(w),
                 f"sectors: A={list(sd.sector_a)} B={list(sd.sector_b)} "
                 f"C={list(sd.sector_c)} D={list(sd.sector_d)}"]
        if sd.d_witness:
            lines.append("non-inverting pair in D gives 4231 at positions "
                         + ",".join(map(str, sd.d_witness)))
        if as_json:
            return json.dumps({"w": str(w), "diagram": lines[0].splitlines(),
                               "sectors": {"A": sd.sector_a, "B": sd.sector_b,
                                           "C": sd.sector_c, "D": sd.sector_d},
                               "d_witness": sd.d_witness})
        return "\n".join(lines)
    raise ValueError(f"unknown query {what!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bruhat-regions",
                                     description="Bruhat intervals vs inversion arrangements")
    sub = parser.add_subparsers(dest="command", required=True)

    q = sub.add_parser("query", help="inspect one permutation")
    q.add_argument("w", help="permutation, e.g. 5164732 or 10,3,1,...")
    q.add_argument("what", choices=QUERIES)
    q.add_argument("--factored", action="store_true")
    q.add_argument("--json", action="store_true")
    q.add_argument("--dot-out", type=Path)

    v = sub.add_parser("verify", help="exhaustive theorem sweep")
    v.add_argument("theorem", choices=sorted(THEOREMS) + sorted(GRAPH_THEOREMS))
    v.add_argument("--max-n", type=int, default=6)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--allow-large", action="store_true",
                   help="raise the size ceiling by one (slow)")
    v.add_argument("--json", action="store_true")

    g = sub.add_parser("explore-gamma", help="region graph vs Bruhat Hasse diagram")
    g.add_argument("w")
    g.add_argument("--time-budget", type=float, default=10.0)
    g.add_argument("--dot-out", type=Path)
    g.add_argument("--json", action="store_true")

    f = sub.add_parser("explore-factorization", help="q-number factorization vs nice PEO")
    f.add_argument("--max-vertices", type=int, default=6)
    f.add_argument("--jobs", type=int, default=1)
    f.add_argument("--json", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "query":
            w = Permutation.parse(args.w)
            print(query(w, args.what, args.factored, args.json, args.dot_out))
            return 0

        if args.command == "verify":
            if args.max_n >= 8 and args.allow_large:
                print("warning: n = 8 sweeps take a long time", file=sys.stderr)
            report = verify(args.theorem, args.max_n, jobs=args.jobs, allow_large=args.allow_large)
            print(report.to_json() if args.json else report.summary())
            return 0 if report.ok else 1

        if args.command == "explore-gamma":
            w = Permutation.parse(args.w)
            report = explore_gamma(w, time_budget=args.time_budget)
            if args.dot_out is not None:
                args.dot_out.mkdir(parents=True, exist_ok=True)
                (args.dot_out / f"gamma_{w}.dot").write_text(report.gamma_dot + "\n")
                (args.dot_out / f"hasse_{w}.dot").write_text(report.hasse_dot + "\n")
            if args.json:
                print(json.dumps({"w": report.w, "gamma_levels": report.gamma_levels,
                                  "gamma_edges": report.gamma_edges,
                                  "hasse_levels": report.hasse_levels,
                                  "hasse_edges": report.hasse_edges,
                                  "embedding": report.embedding}))
            else:
                print(report.summary())
                if args.dot_out is None:
                    print(report.gamma_dot)
                    print(report.hasse_dot)
            return 0

        if args.command == "explore-factorization":
            report = explore_factorization(args.max_vertices, jobs=args.jobs)
            print(report.to_json() if args.json else format_contingency(report))
            return 0
    except (ValueError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
