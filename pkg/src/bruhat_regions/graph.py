"""
Simple graphs on {1..n}, acyclic orientations and perfect elimination orderings.

An acyclic orientation stands for a region of the graphical arrangement
{x_i = x_j : ij an edge}: the arc i -> j means x_i < x_j.  The region
holding (1, ..., n) orients every edge upward, and the number of
hyperplanes separating a region from it is the number of descent arcs
i -> j with i > j.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Iterator, Sequence

from .poly import QPolynomial, q_number

__all__ = [
    "SimpleGraph", "AcyclicOrientation", "EliminationOrdering", "all_graphs",
    "acyclic_orientations", "descent_count", "region_polynomial",
    "region_polynomial_geometric_oracle", "ORACLE_MAX_N", "chromatic_polynomial",
    "find_peo", "is_chordal_bruteforce", "exponents_of_ordering", "find_nice_peo",
    "all_peos", "region_polynomial_by_clique_vertex", "extension_in_degrees",
]

ORACLE_MAX_N = 8


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph; edges are stored as pairs (i, j) with i < j."""
    n: int
    edges: frozenset[tuple[int, int]] = frozenset()
    _adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise ValueError(f"self-loop at {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise ValueError(f"edge {e} has an endpoint outside 1..{self.n}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(norm))
        adj = [set() for _ in range(self.n + 1)]
        for i, j in norm:
            adj[i].add(j)
            adj[j].add(i)
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    @classmethod
    def complete(cls, n: int) -> SimpleGraph:
        return cls(n, frozenset(combinations(range(1, n + 1), 2)))

    @classmethod
    def cycle(cls, n: int) -> SimpleGraph:
        return cls(n, frozenset((i, i % n + 1) for i in range(1, n + 1)))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def has_edge(self, i: int, j: int) -> bool:
        return j in self._adj[i]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def is_clique(self, vs: Iterable[int]) -> bool:
        vs = list(vs)
        return all(self.has_edge(a, b) for a, b in combinations(vs, 2))

    def delete_vertex(self, v: int) -> SimpleGraph:
        """G minus v, relabelled order-preservingly onto 1..n-1."""
        def lab(x):
            return x - 1 if x > v else x
        return SimpleGraph(self.n - 1, frozenset(
            (lab(i), lab(j)) for i, j in self.edges if v not in (i, j)))

    def to_text(self) -> str:
        return f"n: {self.n}; edges: " + ",".join(f"{i}-{j}" for i, j in self.sorted_edges())

    @classmethod
    def parse(cls, text: str) -> SimpleGraph:
        m = re.fullmatch(r"\s*n:\s*(\d+)\s*;\s*edges:\s*(.*?)\s*", text)
        if not m:
            raise ValueError(f"cannot parse graph {text!r}")
        n = int(m.group(1))
        edges = set()
        for tok in filter(None, (t.strip() for t in m.group(2).split(","))):
            a, _, b = tok.partition("-")
            edges.add((int(a), int(b)))
        return cls(n, frozenset(edges))

    def to_dot(self, name: str = "G", labels: dict[int, str] | None = None) -> str:
        lines = [f"graph {name} {{"]
        for v in self.vertices:
            label = labels[v] if labels else str(v)
            lines.append(f'  {v} [label="{label}"];')
        for i, j in self.sorted_edges():
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines)


def all_graphs(n: int) -> Iterator[SimpleGraph]:
    """All 2^(n choose 2) labelled graphs on {1..n}."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield SimpleGraph(n, frozenset(p for b, p in enumerate(pairs) if mask >> b & 1))


@dataclass(frozen=True)
class AcyclicOrientation:
    graph: SimpleGraph
    arcs: frozenset[tuple[int, int]]  # (tail, head): tail -> head

    def __post_init__(self):
        if {(min(a), max(a)) for a in self.arcs} != set(self.graph.edges) \
                or len(self.arcs) != len(self.graph.edges):
            raise ValueError("arcs must orient every edge exactly once")
        if not _is_acyclic(self.graph.n, self.arcs):
            raise ValueError("orientation has a directed cycle")

    def reverse(self) -> AcyclicOrientation:
        return AcyclicOrientation(self.graph, frozenset((j, i) for i, j in self.arcs))

    def flip(self, edge: tuple[int, int]) -> frozenset[tuple[int, int]]:
        """Arc set with one edge reversed (may be cyclic)."""
        i, j = edge
        arc = (i, j) if (i, j) in self.arcs else (j, i)
        return (self.arcs - {arc}) | {(arc[1], arc[0])}

    def to_dot(self, name: str = "O") -> str:
        lines = [f"digraph {name} {{"]
        lines += [f"  {v};" for v in self.graph.vertices]
        lines += [f"  {i} -> {j};" for i, j in sorted(self.arcs)]
        lines.append("}")
        return "\n".join(lines)


def _is_acyclic(n: int, arcs: Iterable[tuple[int, int]]) -> bool:
    indeg = [0] * (n + 1)
    out: list[list[int]] = [[] for _ in range(n + 1)]
    for i, j in arcs:
        out[i].append(j)
        indeg[j] += 1
    stack = [v for v in range(1, n + 1) if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for x in out[v]:
            indeg[x] -= 1
            if indeg[x] == 0:
                stack.append(x)
    return seen == n


def _orient(n: int, edges: Sequence[tuple[int, int]]) -> Iterator[tuple[list[tuple[int, int]], int]]:
    """
    Backtrack over edges in the given order, yielding (arcs, descents) for
    every acyclic orientation.  reach[x] is a bitmask of vertices reachable
    from x; arc u -> v closes a cycle iff u is reachable from v.
    The yielded list is reused; copy it to keep it.
    """
    arcs: list[tuple[int, int]] = []
    m = len(edges)

    def rec(k: int, reach: list[int], des: int):
        if k == m:
            yield arcs, des
            return
        i, j = edges[k]  # i < j
        for u, v, d in ((i, j, 0), (j, i, 1)):
            if reach[v] >> u & 1:
                continue
            new = reach[:]
            bit_u = 1 << u
            add = (1 << v) | reach[v]
            for x in range(1, n + 1):
                if x == u or new[x] & bit_u:
                    new[x] |= add
            arcs.append((u, v))
            yield from rec(k + 1, new, des + d)
            arcs.pop()

    yield from rec(0, [0] * (n + 1), 0)


def acyclic_orientations(G: SimpleGraph) -> Iterator[AcyclicOrientation]:
    """Each acyclic orientation of G exactly once (smallest-label branch first)."""
    for arcs, _ in _orient(G.n, G.sorted_edges()):
        yield AcyclicOrientation(G, frozenset(arcs))


def descent_count(O: AcyclicOrientation) -> int:
    return sum(1 for i, j in O.arcs if i > j)


def region_polynomial(G: SimpleGraph) -> QPolynomial:
    """R_G(q): tally of q^des over acyclic orientations."""
    tally = Counter(des for _, des in _orient(G.n, G.sorted_edges()))
    return QPolynomial.from_counts(tally)


def region_polynomial_geometric_oracle(G: SimpleGraph, max_n: int = ORACLE_MAX_N) -> QPolynomial:
    """
    R_G(q) from the arrangement directly: every ordering of the coordinates
    lies in some region; collect the distinct sign patterns on the edges and
    count hyperplanes separating each from the region of (1, ..., n).
    """
    if G.n > max_n:
        raise ValueError(f"geometric oracle is limited to n <= {max_n}")
    edges = G.sorted_edges()
    regions = set()
    for x in permutations(range(G.n)):
        # True when x_i > x_j for edge (i, j), i < j: opposite side from r_0
        regions.add(tuple(x[i - 1] > x[j - 1] for i, j in edges))
    return QPolynomial.from_counts(Counter(sum(r) for r in regions))


def _chromatic(k: int, edges: frozenset[tuple[int, int]]) -> QPolynomial:
    # vertices are 0..k-1; edges canonical (a, b) with a < b
    return _chromatic_cached(k, edges)


@lru_cache(maxsize=1 << 18)
def _chromatic_cached(k: int, edges: frozenset[tuple[int, int]]) -> QPolynomial:
    t = QPolynomial((0, 1))
    if not edges:
        return t ** k
    if len(edges) == k * (k - 1) // 2:
        result = QPolynomial.one()
        for i in range(k):
            result = result * (t - i)
        return result
    e = max(edges)
    a, b = e
    deleted = edges - {e}
    # contract b into a, drop b and shift labels above b
    def lab(x):
        x = a if x == b else x
        return x - 1 if x > b else x
    contracted = frozenset((min(lab(x), lab(y)), max(lab(x), lab(y))) for x, y in deleted)
    return _chromatic_cached(k, deleted) - _chromatic_cached(k - 1, contracted)


def chromatic_polynomial(G: SimpleGraph) -> QPolynomial:
    """chi_G(t) by deletion-contraction; coefficients are signed, variable t."""
    return _chromatic(G.n, frozenset((i - 1, j - 1) for i, j in G.edges))


@dataclass(frozen=True)
class EliminationOrdering:
    """
    An ordering v_1..v_n with e_i = number of neighbours of v_i among
    v_1..v_{i-1}.  is_peo means each of those earlier neighbourhoods is a clique.
    """
    order: tuple[int, ...]
    exponents: tuple[int, ...]
    is_peo: bool
    is_nice: bool = False

    def exponents_by_vertex(self) -> tuple[int, ...]:
        out = [0] * len(self.order)
        for v, e in zip(self.order, self.exponents):
            out[v - 1] = e
        return tuple(out)


def exponents_of_ordering(G: SimpleGraph, order: Sequence[int]) -> EliminationOrdering:
    order = tuple(order)
    if sorted(order) != list(G.vertices):
        raise ValueError(f"{order} is not an ordering of 1..{G.n}")
    seen: set[int] = set()
    exps = []
    peo = nice = True
    for v in order:
        earlier = G.neighbors(v) & seen
        exps.append(len(earlier))
        if peo and not G.is_clique(earlier):
            peo = False
        if earlier and not (all(u < v for u in earlier) or all(u > v for u in earlier)):
            nice = False
        seen.add(v)
    return EliminationOrdering(order, tuple(exps), peo, peo and nice)


def _mcs_order(G: SimpleGraph) -> list[int]:
    # maximum cardinality search; ties go to the smallest label
    weight = {v: 0 for v in G.vertices}
    order = []
    while weight:
        v = min(weight, key=lambda x: (-weight[x], x))
        del weight[v]
        order.append(v)
        for u in G.neighbors(v):
            if u in weight:
                weight[u] += 1
    return order


def find_peo(G: SimpleGraph) -> EliminationOrdering | None:
    """A perfect elimination ordering if G is chordal, else None."""
    result = exponents_of_ordering(G, _mcs_order(G))
    return result if result.is_peo else None


def is_chordal_bruteforce(G: SimpleGraph) -> bool:
    """True iff no induced subgraph on >= 4 vertices is a cycle."""
    if G.n > ORACLE_MAX_N:
        raise ValueError(f"brute-force chordality is limited to n <= {ORACLE_MAX_N}")
    for k in range(4, G.n + 1):
        for sub in combinations(G.vertices, k):
            s = set(sub)
            if all(len(G.neighbors(v) & s) == 2 for v in sub) and _connected(G, s):
                return False
    return True


def _connected(G: SimpleGraph, vs: set[int]) -> bool:
    start = next(iter(vs))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in G.neighbors(v) & vs:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == vs


def all_peos(G: SimpleGraph) -> Iterator[tuple[int, ...]]:
    """Every perfect elimination ordering (exhaustive; small graphs only)."""
    for order in permutations(G.vertices):
        if exponents_of_ordering(G, order).is_peo:
            yield order


def find_nice_peo(G: SimpleGraph) -> EliminationOrdering | None:
    """
    A nice PEO (earlier neighbours of each vertex form a clique lying
    entirely above or entirely below it), or None.

    Built back to front: the last vertex of the remaining set must be
    simplicial in it with a one-sided neighbourhood.  Dead-end vertex sets
    are memoized, since greedy choices can fail.
    """
    full = frozenset(G.vertices)
    failed: set[frozenset[int]] = set()
    tail: list[int] = []

    def rec(remaining: frozenset[int]) -> bool:
        if not remaining:
            return True
        if remaining in failed:
            return False
        for v in sorted(remaining):
            nb = G.neighbors(v) & remaining
            if not (all(u < v for u in nb) or all(u > v for u in nb)):
                continue
            if not G.is_clique(nb):
                continue
            tail.append(v)
            if rec(remaining - {v}):
                return True
            tail.pop()
        failed.add(remaining)
        return False

    if not rec(full):
        return None
    result = exponents_of_ordering(G, tuple(reversed(tail)))
    assert result.is_nice
    return result


def region_polynomial_by_clique_vertex(G: SimpleGraph, v: int, m: int) -> QPolynomial:
    """
    [m+1]_q * R_{G - v}(q), valid when v has m neighbours forming a clique,
    all below v or all above it.
    """
    if not 1 <= v <= G.n:
        raise ValueError(f"vertex {v} outside 1..{G.n}")
    nb = G.neighbors(v)
    if len(nb) != m:
        raise ValueError(f"vertex {v} has {len(nb)} neighbours, not {m}")
    if not G.is_clique(nb):
        raise ValueError(f"neighbourhood of {v} is not a clique")
    if not (all(u < v for u in nb) or all(u > v for u in nb)):
        raise ValueError(f"neighbourhood of {v} has labels on both sides of {v}")
    return q_number(m + 1) * region_polynomial(G.delete_vertex(v))


def extension_in_degrees(G: SimpleGraph, v: int) -> list[Counter]:
    """
    For each acyclic orientation of G - v, the tally of in-degrees at v over
    its acyclic extensions to G.
    """
    def lab(x):
        return x + 1 if x >= v else x
    H = G.delete_vertex(v)
    nb = sorted(G.neighbors(v))
    out = []
    for arcs, _ in _orient(H.n, H.sorted_edges()):
        base = [(lab(a), lab(b)) for a, b in arcs]
        tally: Counter = Counter()
        for mask in range(1 << len(nb)):
            ext = base + [(u, v) if mask >> k & 1 else (v, u) for k, u in enumerate(nb)]
            if _is_acyclic(G.n, ext):
                tally[bin(mask).count("1")] += 1
        out.append(tally)
    return out
