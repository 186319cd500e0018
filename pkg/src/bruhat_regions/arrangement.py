"""
Inversion graphs and the permutation side of the region polynomial.

Rook diagram conventions: the rook of column i sits in row w(i), rows
counted from the top.  Rook a is in the last column (row e = w(n)); rook b
is in the last row (column d = w^{-1}(n)).  Row e and column d cut the
board into four sectors:

    A: column < d, row < e        B: column > d, row < e
    C: column < d, row > e        D: column > d, row > e

Rooks a and b lie on the dividing lines and belong to no sector.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import EliminationOrdering, SimpleGraph, exponents_of_ordering, region_polynomial
from .perm import (ExponentVector, Permutation, exponents_by_records, flatten, inverse,
                   is_smooth, simple_peo_order)
from .poly import QPolynomial, q_number_product

__all__ = [
    "InversionGraph", "inversion_graph", "region_polynomial_w", "SectorDecomposition",
    "sector_decomposition", "RecurrenceStep", "recurrence_step", "recurrence_factors",
    "simple_peo", "exponents_via_simple_peo", "rook_diagram", "inversion_graph_dot",
    "factored_region_polynomial", "NotSmoothError",
]


class NotSmoothError(ValueError):
    """Raised by operations that are only meaningful for smooth permutations."""


@dataclass(frozen=True)
class InversionGraph:
    w: Permutation
    graph: SimpleGraph


def inversion_graph(w: Permutation) -> InversionGraph:
    v = w.values
    n = w.n
    edges = frozenset((i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if v[i] > v[j])
    return InversionGraph(w, SimpleGraph(n, edges))


def region_polynomial_w(w: Permutation) -> QPolynomial:
    """R_w(q) = R_{G_w}(q)."""
    return region_polynomial(inversion_graph(w).graph)


@dataclass(frozen=True)
class SectorDecomposition:
    w: Permutation
    d: int  # column of rook b, w(d) = n
    e: int  # row of rook a, w(n) = e
    sector_a: tuple[int, ...]  # rook columns in each sector
    sector_b: tuple[int, ...]
    sector_c: tuple[int, ...]
    sector_d: tuple[int, ...]
    # columns (d, p, q, n) of a 4231 occurrence built from a non-inverting pair in D
    d_witness: tuple[int, int, int, int] | None = None

    @property
    def rooks_in_b(self) -> int:
        return len(self.sector_b)

    @property
    def rooks_in_c(self) -> int:
        return len(self.sector_c)

    @property
    def rooks_in_d(self) -> tuple[int, ...]:
        return self.sector_d


def sector_decomposition(w: Permutation) -> SectorDecomposition:
    n = w.n
    e = w.values[-1]
    d = inverse(w)(n)
    sectors: dict[str, list[int]] = {"A": [], "B": [], "C": [], "D": []}
    if e != n:
        for col in range(1, n):
            row = w(col)
            if col == d:
                continue
            key = ("A" if col < d else "B") if row < e else ("C" if col < d else "D")
            sectors[key].append(col)
    witness = None
    dd = sectors["D"]
    for x in range(len(dd)):
        for y in range(x + 1, len(dd)):
            p, q = dd[x], dd[y]
            if w(p) < w(q):
                witness = (d, p, q, n)
                break
        if witness:
            break
    return SectorDecomposition(w, d, e, *(tuple(sectors[k]) for k in "ABCD"), d_witness=witness)


@dataclass(frozen=True)
class RecurrenceStep:
    w_prime: Permutation
    m: int
    case: int  # 1: w(d) > ... > w(n);  2: w^{-1}(e) > ... > w^{-1}(n)


def _decreasing(seq) -> bool:
    return all(a > b for a, b in zip(seq, seq[1:]))


def recurrence_step(w: Permutation) -> RecurrenceStep:
    """
    One step of R_w = [m+1]_q R_{w'} for smooth w (case 1 preferred when
    both apply, including w(n) = n).
    """
    if w.n < 2:
        raise ValueError("recurrence needs n >= 2")
    if not is_smooth(w):
        raise NotSmoothError(f"{w} is not smooth")
    n = w.n
    winv = inverse(w)
    d = winv(n)
    e = w(n)
    if _decreasing(w.values[d - 1:]):
        return RecurrenceStep(flatten(w, d), n - d, 1)
    if _decreasing(winv.values[e - 1:]):
        return RecurrenceStep(flatten(w, n), n - e, 2)
    raise AssertionError(f"neither recurrence case holds for smooth {w}")


def recurrence_factors(w: Permutation) -> list[int]:
    """The m's from iterating recurrence_step down to S_1."""
    ms = []
    while w.n > 1:
        step = recurrence_step(w)
        ms.append(step.m)
        w = step.w_prime
    return ms


def simple_peo(w: Permutation) -> EliminationOrdering:
    """The record-block ordering with its exponents in elimination order."""
    if not is_smooth(w):
        raise NotSmoothError(f"{w} is not smooth")
    result = exponents_of_ordering(inversion_graph(w).graph, simple_peo_order(w))
    if not result.is_peo:
        raise AssertionError(f"record-block ordering is not a PEO for smooth {w}")
    return result


def exponents_via_simple_peo(w: Permutation) -> ExponentVector:
    """Exponents of G_w from the record-block PEO, indexed by vertex."""
    return simple_peo(w).exponents_by_vertex()


def rook_diagram(w: Permutation) -> str:
    """ASCII board, one text row per board row, 'x' for a rook."""
    n = w.n
    winv = inverse(w)
    rows = []
    for r in range(1, n + 1):
        col = winv(r)
        rows.append("|" + "|".join("x" if c == col else " " for c in range(1, n + 1)) + "|")
    return "\n".join(rows)


def inversion_graph_dot(w: Permutation) -> str:
    G = inversion_graph(w).graph
    return G.to_dot(name="G_w", labels={i: f"{i} / {w(i)}" for i in G.vertices})


def factored_region_polynomial(w: Permutation) -> QPolynomial:
    """prod [e_i + 1]_q over the record-based exponents."""
    return q_number_product(e + 1 for e in exponents_by_records(w))
