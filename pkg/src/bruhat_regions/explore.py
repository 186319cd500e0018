"""
Explorers for two open questions; they report, they do not decide.

* region_graph / explore_gamma: the directed graph on the regions of the
  inversion arrangement (adjacent regions, arrow pointing away from the base
  region) next to the Hasse diagram of [id, w], with a bounded search for a
  level-preserving embedding of the former into the latter.
* explore_factorization: for every labelled graph, does R_G(q) factor into
  q-numbers, and does G have a nice perfect elimination ordering?
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations

from .arrangement import inversion_graph
from .bruhat import hasse_diagram
from .graph import SimpleGraph, _orient, find_nice_peo, region_polynomial
from .perm import Permutation
from .poly import all_q_number_factorizations
from .verify import ResourceLimitError, VerificationReport

__all__ = [
    "RegionGraph", "region_graph", "GammaReport", "explore_gamma", "GAMMA_MAX_N",
    "EMBED_MAX_NODES", "FACTORIZATION_MAX_VERTICES", "explore_factorization",
    "classify_graph", "format_contingency",
]

GAMMA_MAX_N = 7
EMBED_MAX_NODES = 200
FACTORIZATION_MAX_VERTICES = 7


@dataclass(frozen=True)
class RegionGraph:
    w: Permutation
    nodes: tuple[tuple[frozenset[tuple[int, int]], int], ...]  # (arcs, descents)
    edges: tuple[tuple[int, int], ...]  # node indices, level k -> level k+1

    @property
    def level_counts(self) -> tuple[int, ...]:
        c = Counter(des for _, des in self.nodes)
        return tuple(c[k] for k in range(max(c) + 1))

    def to_dot(self) -> str:
        lines = ["digraph Gamma {", "  rankdir=BT;"]
        for idx, (_, des) in enumerate(self.nodes):
            lines.append(f'  r{idx} [label="r{idx} (d={des})"];')
        for a, b in self.edges:
            lines.append(f"  r{a} -> r{b};")
        lines.append("}")
        return "\n".join(lines)


def region_graph(w: Permutation) -> RegionGraph:
    """Regions of the inversion arrangement as acyclic orientations of G_w."""
    G = inversion_graph(w).graph
    found = sorted(((frozenset(arcs), des) for arcs, des in _orient(G.n, G.sorted_edges())),
                   key=lambda x: (x[1], sorted(x[0])))
    index = {arcs: k for k, (arcs, _) in enumerate(found)}
    edges = []
    for k, (arcs, _) in enumerate(found):
        for i, j in arcs:
            if i < j:
                # crossing the hyperplane of this ascent moves one step further out
                other = (arcs - {(i, j)}) | {(j, i)}
                if other in index:
                    edges.append((k, index[other]))
    return RegionGraph(w, tuple(found), tuple(sorted(edges)))


def _hasse_dot(ranks: dict, edges: list) -> str:
    lines = ["digraph Hasse {", "  rankdir=BT;"]
    for u in sorted(ranks, key=lambda u: (ranks[u], u.values)):
        lines.append(f'  "{u}" [label="{u}"];')
    for lo, hi in edges:
        lines.append(f'  "{lo}" -> "{hi}";')
    lines.append("}")
    return "\n".join(lines)


@dataclass(frozen=True)
class GammaReport:
    w: str
    gamma_levels: tuple[int, ...]
    gamma_edges: int
    hasse_levels: tuple[int, ...]
    hasse_edges: int
    embedding: str  # found / not-found / inconclusive / skipped
    gamma_dot: str
    hasse_dot: str

    def summary(self) -> str:
        return "\n".join([
            f"w = {self.w}",
            f"Gamma_w: levels {self.gamma_levels}, {sum(self.gamma_levels)} nodes, "
            f"{self.gamma_edges} edges",
            f"Hasse [id,w]: levels {self.hasse_levels}, {sum(self.hasse_levels)} nodes, "
            f"{self.hasse_edges} edges",
            f"level-preserving embedding: {self.embedding}",
        ])


def _embed(gamma: RegionGraph, ranks: dict, hasse_edges: list, deadline: float) -> str:
    """Backtracking search for an injective, level- and edge-preserving map."""
    by_rank: dict[int, list] = {}
    for u, r in ranks.items():
        by_rank.setdefault(r, []).append(u)
    for r in by_rank:
        by_rank[r].sort(key=lambda u: u.values)
    if any(len(by_rank.get(k, [])) < c for k, c in enumerate(gamma.level_counts)):
        return "not-found"
    up = {(lo, hi) for lo, hi in hasse_edges}
    preds: dict[int, list[int]] = {k: [] for k in range(len(gamma.nodes))}
    for a, b in gamma.edges:
        preds[b].append(a)
    order = list(range(len(gamma.nodes)))  # already sorted by level
    image: dict[int, object] = {}
    used: set = set()
    steps = 0

    def rec(pos: int) -> bool | None:
        nonlocal steps
        if pos == len(order):
            return True
        steps += 1
        if steps % 1024 == 0 and time.monotonic() > deadline:
            return None
        x = order[pos]
        level = gamma.nodes[x][1]
        for cand in by_rank.get(level, []):
            if cand in used:
                continue
            if all((image[p], cand) in up for p in preds[x]):
                image[x] = cand
                used.add(cand)
                res = rec(pos + 1)
                if res is not False:
                    return res
                used.discard(cand)
                del image[x]
        return False

    res = rec(0)
    return {True: "found", False: "not-found", None: "inconclusive"}[res]


def explore_gamma(w: Permutation, time_budget: float = 10.0) -> GammaReport:
    if w.n > GAMMA_MAX_N:
        raise ResourceLimitError(f"explore-gamma is limited to n <= {GAMMA_MAX_N}")
    gamma = region_graph(w)
    ranks, edges = hasse_diagram(w)
    hc = Counter(ranks.values())
    hasse_levels = tuple(hc[k] for k in range(max(hc) + 1))
    if len(ranks) <= EMBED_MAX_NODES:
        embedding = _embed(gamma, ranks, edges, time.monotonic() + time_budget)
    else:
        embedding = "skipped"
    return GammaReport(str(w), gamma.level_counts, len(gamma.edges), hasse_levels,
                       len(edges), embedding, gamma.to_dot(), _hasse_dot(ranks, edges))


def classify_graph(G: SimpleGraph) -> tuple[bool, bool, int]:
    """(R_G factors into q-numbers, G has a nice PEO, number of factorizations)."""
    facts = all_q_number_factorizations(region_polynomial(G))
    return bool(facts), find_nice_peo(G) is not None, len(facts)


def _classify_chunk(args):
    n, masks = args
    pairs = list(combinations(range(1, n + 1), 2))
    cells: Counter = Counter()
    off = []
    for mask in masks:
        G = SimpleGraph(n, frozenset(p for b, p in enumerate(pairs) if mask >> b & 1))
        factors, nice, count = classify_graph(G)
        cells[(factors, nice)] += 1
        if count > 1:
            cells["multiple-factorizations"] += 1
        if factors != nice:
            off.append((G.to_text(), f"factors={factors}", f"nice PEO={nice}"))
    return cells, off


def explore_factorization(max_vertices: int = 6, jobs: int = 1,
                          chunk_size: int = 512) -> VerificationReport:
    """
    Contingency table of (R_G factors into q-numbers) x (G has a nice PEO)
    over every labelled graph with 1..max_vertices vertices.  Off-diagonal
    graphs are listed as counterexamples to the conjectured equivalence.
    """
    if max_vertices > FACTORIZATION_MAX_VERTICES:
        raise ResourceLimitError(
            f"explore-factorization is limited to {FACTORIZATION_MAX_VERTICES} vertices")
    start = time.perf_counter()
    ns = list(range(1, max_vertices + 1))
    tasks = []
    for n in ns:
        total = 1 << (n * (n - 1) // 2)
        tasks += [(n, range(lo, min(lo + chunk_size, total))) for lo in range(0, total, chunk_size)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_classify_chunk, tasks))
    else:
        results = [_classify_chunk(t) for t in tasks]

    cells: Counter = Counter()
    off = []
    for c, o in results:
        cells.update(c)
        off.extend(o)
    report = VerificationReport("factorization-conjecture", ns)
    report.checked = sum(v for k, v in cells.items() if isinstance(k, tuple))
    report.passed = cells[(True, True)] + cells[(False, False)]
    report.counterexamples = sorted(off)
    report.details = {
        "factors & nice-peo": cells[(True, True)],
        "factors & no-nice-peo": cells[(True, False)],
        "no-factors & nice-peo": cells[(False, True)],
        "no-factors & no-nice-peo": cells[(False, False)],
        "multiple-factorizations": cells["multiple-factorizations"],
    }
    report.wall_time = time.perf_counter() - start
    return report


def format_contingency(report: VerificationReport, limit: int = 20) -> str:
    """2x2 table plus the first off-diagonal graphs."""
    d = report.details
    ns = ",".join(map(str, report.n_range))
    width = max(len(str(v)) for v in d.values()) + 2
    lines = [
        f"graphs on n in {{{ns}}} vertices: {report.checked}  ({report.wall_time:.1f}s)",
        f"{'':18}{'nice PEO':>{width + 4}}{'no nice PEO':>{width + 8}}",
        f"{'R_G factors':18}{d['factors & nice-peo']:>{width + 4}}"
        f"{d['factors & no-nice-peo']:>{width + 8}}",
        f"{'R_G does not':18}{d['no-factors & nice-peo']:>{width + 4}}"
        f"{d['no-factors & no-nice-peo']:>{width + 8}}",
        f"graphs with more than one factorization: {d['multiple-factorizations']}",
        f"off-diagonal graphs: {len(report.counterexamples)}",
    ]
    for graph, factors, nice in report.counterexamples[:limit]:
        lines.append(f"  {graph}  ({factors}, {nice})")
    if len(report.counterexamples) > limit:
        lines.append(f"  ... {len(report.counterexamples) - limit} more (use --json for all)")
    return "\n".join(lines)
