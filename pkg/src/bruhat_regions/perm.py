"""
Permutations of {1..n} in one-line notation.

All public positions and values are 1-based: ``w(i)`` is the value at
position ``i``.

>>> w = Permutation.parse("5164732")
>>> record_positions(w)
(1, 3, 5)
>>> exponents_by_records(w)
(3, 1, 2, 3, 0, 1, 2)
>>> simple_peo_order(w)
(5, 6, 7, 3, 4, 1, 2)
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterator, Sequence

__all__ = [
    "Permutation", "ExponentVector", "make_permutation", "identity", "longest",
    "all_permutations", "length", "inverse", "find_pattern", "contains_pattern",
    "smoothness_witness", "is_smooth", "HLSS_PATTERNS", "avoids_hlss_patterns",
    "record_positions", "exponents_by_records", "flatten", "simple_peo_order",
    "record_blocks",
]

# e_1..e_n, indexed by vertex/position
ExponentVector = tuple[int, ...]


@dataclass(frozen=True, slots=True)
class Permutation:
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if not values:
            raise ValueError("a permutation needs n >= 1")
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"{list(values)} is not a bijection of 1..{len(values)}")
        object.__setattr__(self, "values", values)

    @classmethod
    def _trusted(cls, values: tuple[int, ...]) -> Permutation:
        # skips validation; callers guarantee a bijection of 1..n
        self = object.__new__(cls)
        object.__setattr__(self, "values", values)
        return self

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Read '5164732' or '10,3,1,...'."""
        text = text.strip()
        if "," in text:
            parts = [p.strip() for p in text.split(",")]
            if not all(p.isdigit() for p in parts):
                raise ValueError(f"cannot parse permutation {text!r}")
            return cls(tuple(int(p) for p in parts))
        if not text.isdigit():
            raise ValueError(f"cannot parse permutation {text!r}")
        return cls(tuple(int(ch) for ch in text))

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.values):
            raise IndexError(f"position {i} outside 1..{len(self.values)}")
        return self.values[i - 1]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __str__(self) -> str:
        if len(self.values) <= 9:
            return "".join(map(str, self.values))
        return ",".join(map(str, self.values))

    def __repr__(self) -> str:
        return f"Permutation({self})"

    def __lt__(self, other: Permutation) -> bool:
        # canonical sort key for reports, not Bruhat order
        return (len(self.values), self.values) < (len(other.values), other.values)


def make_permutation(values: Sequence[int]) -> Permutation:
    return Permutation(tuple(values))


def identity(n: int) -> Permutation:
    return Permutation._trusted(tuple(range(1, n + 1)))


def longest(n: int) -> Permutation:
    return Permutation._trusted(tuple(range(n, 0, -1)))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order."""
    for p in permutations(range(1, n + 1)):
        yield Permutation._trusted(p)


def _inversions(values: Sequence[int]) -> int:
    n = len(values)
    return sum(1 for i in range(n) for j in range(i + 1, n) if values[i] > values[j])


def length(w: Permutation) -> int:
    """Number of inversions."""
    return _inversions(w.values)


def inverse(w: Permutation) -> Permutation:
    inv = [0] * w.n
    for i, v in enumerate(w.values, start=1):
        inv[v - 1] = i
    return Permutation._trusted(tuple(inv))


def _standardize(seq: Sequence[int]) -> tuple[int, ...]:
    ranks = {v: r for r, v in enumerate(sorted(seq), start=1)}
    return tuple(ranks[v] for v in seq)


def find_pattern(w: Permutation, sigma: Permutation) -> tuple[int, ...] | None:
    """First (lexicographic) positions of an occurrence of sigma in w, or None."""
    k = sigma.n
    if k > w.n:
        raise ValueError(f"pattern of size {k} does not fit in S_{w.n}")
    vals = w.values
    target = sigma.values
    for pos in combinations(range(w.n), k):
        if _standardize([vals[p] for p in pos]) == target:
            return tuple(p + 1 for p in pos)
    return None


def contains_pattern(w: Permutation, sigma: Permutation) -> bool:
    return find_pattern(w, sigma) is not None


P3412 = Permutation((3, 4, 1, 2))
P4231 = Permutation((4, 2, 3, 1))
HLSS_PATTERNS = (
    P4231,
    Permutation((3, 5, 1, 4, 2)),
    Permutation((4, 2, 5, 1, 3)),
    Permutation((3, 5, 1, 6, 2, 4)),
)


def smoothness_witness(w: Permutation) -> tuple[Permutation, tuple[int, ...]] | None:
    """An occurrence (pattern, positions) of 3412 or 4231, or None if smooth."""
    if w.n < 4:
        return None
    for sigma in (P3412, P4231):
        pos = find_pattern(w, sigma)
        if pos is not None:
            return sigma, pos
    return None


def is_smooth(w: Permutation) -> bool:
    return smoothness_witness(w) is None


def avoids_hlss_patterns(w: Permutation) -> bool:
    return not any(sigma.n <= w.n and contains_pattern(w, sigma) for sigma in HLSS_PATTERNS)


def record_positions(w: Permutation) -> tuple[int, ...]:
    """Positions of the left-to-right maxima."""
    out = []
    best = 0
    for i, v in enumerate(w.values, start=1):
        if v > best:
            out.append(i)
            best = v
    return tuple(out)


def record_blocks(w: Permutation) -> list[range]:
    """The position intervals [r_p, r_{p+1} - 1], left to right."""
    recs = record_positions(w) + (w.n + 1,)
    return [range(recs[p], recs[p + 1]) for p in range(len(recs) - 1)]


def exponents_by_records(w: Permutation) -> ExponentVector:
    """
    Record-based exponents: for i in the record block starting at r, and r'
    the next record position (none if i is in the last block),

        e_i = #{r <= j < i : w(j) > w(i)} + #{k >= r' : w(k) < w(i)}.

    Defined for every w; it factors P_w only when w is smooth.
    """
    vals = w.values
    n = w.n
    out = [0] * n
    for block in record_blocks(w):
        r, nxt = block.start, block.stop  # nxt == n + 1 for the last block
        for i in block:
            wi = vals[i - 1]
            left = sum(1 for j in range(r, i) if vals[j - 1] > wi)
            right = sum(1 for k in range(nxt, n + 1) if vals[k - 1] < wi)
            out[i - 1] = left + right
    return tuple(out)


def flatten(w: Permutation, k: int) -> Permutation:
    """Delete position k and standardize the rest to S_{n-1}."""
    if w.n < 2:
        raise ValueError("cannot flatten a permutation of size 1")
    if not 1 <= k <= w.n:
        raise ValueError(f"position {k} outside 1..{w.n}")
    removed = w.values[k - 1]
    rest = w.values[:k - 1] + w.values[k:]
    return Permutation._trusted(tuple(v - 1 if v > removed else v for v in rest))


def simple_peo_order(w: Permutation) -> tuple[int, ...]:
    """Record blocks emitted from the last one to the first, each increasing."""
    out: list[int] = []
    for block in reversed(record_blocks(w)):
        out.extend(block)
    return tuple(out)
