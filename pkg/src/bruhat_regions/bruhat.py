"""
Strong Bruhat order on S_n and lower intervals [id, w].

The interval is enumerated by walking down Bruhat covers from w.  A cover
u < w swaps the entries at positions i < j with w(i) > w(j) when no entry
between them has a value strictly between w(j) and w(i); it drops length by
exactly one, so the walk depth of u is length(w) - length(u).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .perm import Permutation, length
from .poly import QPolynomial

__all__ = [
    "BruhatInterval", "bruhat_leq", "lower_covers", "lower_interval",
    "interval_rank_counts", "poincare_polynomial", "interval_size",
    "hasse_diagram",
]


@dataclass(frozen=True)
class BruhatInterval:
    top: Permutation
    elements: frozenset[Permutation]
    rank_counts: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.elements)

    def to_json(self) -> str:
        return json.dumps({"w": str(self.top), "B_w": self.size,
                           "rank_counts": list(self.rank_counts)})


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """Tableau criterion: sorted prefixes of u are dominated by those of w."""
    if u.n != w.n:
        raise ValueError(f"cannot compare elements of S_{u.n} and S_{w.n}")
    uv, wv = u.values, w.values
    for k in range(1, u.n):
        for a, b in zip(sorted(uv[:k]), sorted(wv[:k])):
            if a > b:
                return False
    return True


def _lower_covers(v: tuple[int, ...]) -> list[tuple[int, ...]]:
    n = len(v)
    out = []
    for i in range(n - 1):
        hi = v[i]
        lo = 0
        # scan right, tracking the largest value seen below hi
        for j in range(i + 1, n):
            x = v[j]
            if lo < x < hi:
                lo = x
                u = list(v)
                u[i], u[j] = x, hi
                out.append(tuple(u))
    return out


def lower_covers(w: Permutation) -> list[Permutation]:
    """Elements covered by w in Bruhat order."""
    return [Permutation._trusted(u) for u in _lower_covers(w.values)]


def _walk(top: tuple[int, ...]) -> tuple[set[tuple[int, ...]], list[int]]:
    seen = {top}
    frontier = [top]
    sizes = [1]
    while frontier:
        nxt = []
        for v in frontier:
            for u in _lower_covers(v):
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        if nxt:
            sizes.append(len(nxt))
        frontier = nxt
    return seen, sizes


def interval_rank_counts(w: Permutation) -> tuple[int, ...]:
    """rank_counts of [id, w] without materializing Permutation objects."""
    _, sizes = _walk(w.values)
    return tuple(reversed(sizes))


def lower_interval(w: Permutation) -> BruhatInterval:
    seen, sizes = _walk(w.values)
    return BruhatInterval(
        top=w,
        elements=frozenset(Permutation._trusted(u) for u in seen),
        rank_counts=tuple(reversed(sizes)),
    )


def poincare_polynomial(w: Permutation) -> QPolynomial:
    """P_w(q) = sum of q^length(u) over u <= w."""
    return QPolynomial(interval_rank_counts(w))


def interval_size(w: Permutation) -> int:
    return sum(interval_rank_counts(w))


def hasse_diagram(w: Permutation) -> tuple[dict[Permutation, int], list[tuple[Permutation, Permutation]]]:
    """Ranks and cover edges (lower, upper) of [id, w]."""
    seen, _ = _walk(w.values)
    ranks = {Permutation._trusted(u): length(Permutation._trusted(u)) for u in seen}
    edges = []
    for u in seen:
        upper = Permutation._trusted(u)
        for c in _lower_covers(u):
            edges.append((Permutation._trusted(c), upper))
    edges.sort(key=lambda e: (ranks[e[0]], e[0].values, e[1].values))
    return ranks, edges
