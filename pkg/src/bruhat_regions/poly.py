"""
Integer polynomials in one variable, q-numbers and q-number factorization.

Coefficients are Python ints, stored low degree first.

>>> p = q_number(2) * q_number(3)
>>> p.coefficients
(1, 2, 2, 1)
>>> str(p)
'1 + 2*q + 2*q^2 + q^3'
>>> factor_into_q_numbers(p)
(2, 3)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

__all__ = [
    "QPolynomial", "q_number", "q_number_product", "multiply", "add",
    "is_palindromic", "factor_into_q_numbers", "all_q_number_factorizations",
    "format_q_numbers",
]


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class QPolynomial:
    """A polynomial a_0 + a_1 q + ... + a_d q^d with integer coefficients.

    The zero polynomial has an empty coefficient tuple.
    """
    coefficients: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _trim(int(c) for c in self.coefficients))

    @classmethod
    def one(cls) -> QPolynomial:
        return cls((1,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> QPolynomial:
        return cls((0,) * k + (c,))

    @classmethod
    def from_counts(cls, counts: dict[int, int]) -> QPolynomial:
        """Build sum(c * q^k) from a {k: c} tally."""
        if not counts:
            return cls()
        coeffs = [0] * (max(counts) + 1)
        for k, c in counts.items():
            coeffs[k] += c
        return cls(coeffs)

    @property
    def degree(self) -> int:
        # -1 for the zero polynomial
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coefficients):
            return self.coefficients[k]
        return 0

    def __call__(self, x):
        value = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def __add__(self, other: QPolynomial | int) -> QPolynomial:
        other = _coerce(other)
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        return QPolynomial(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    __radd__ = __add__

    def __neg__(self) -> QPolynomial:
        return QPolynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: QPolynomial | int) -> QPolynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> QPolynomial:
        return _coerce(other) - self

    def __mul__(self, other: QPolynomial | int) -> QPolynomial:
        other = _coerce(other)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return QPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QPolynomial:
        if k < 0:
            raise ValueError("negative power")
        result = QPolynomial.one()
        for _ in range(k):
            result = result * self
        return result

    def divmod(self, divisor: QPolynomial) -> tuple[QPolynomial, QPolynomial]:
        """Long division; the divisor must have leading coefficient +-1."""
        d = divisor.coefficients
        if not d:
            raise ZeroDivisionError("division by the zero polynomial")
        lead = d[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must be monic up to sign")
        rem = list(self.coefficients)
        if len(rem) < len(d):
            return QPolynomial(), self
        quot = [0] * (len(rem) - len(d) + 1)
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + len(d) - 1] * lead
            quot[k] = c
            if c:
                for j, y in enumerate(d):
                    rem[k + j] -= c * y
        return QPolynomial(quot), QPolynomial(rem)

    def exact_quotient(self, divisor: QPolynomial) -> QPolynomial | None:
        """Return self / divisor if the division is exact, else None."""
        quot, rem = self.divmod(divisor)
        return None if rem.coefficients else quot

    def to_text(self, var: str = "q") -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for k, c in enumerate(self.coefficients):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            sign = "-" if c < 0 else "+"
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(f"{sign} {body}")
        return " ".join(terms)

    def __str__(self) -> str:
        return self.to_text()

    def to_json(self) -> list[int]:
        return list(self.coefficients)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> QPolynomial:
        return cls(tuple(data))


def _coerce(x: QPolynomial | int) -> QPolynomial:
    if isinstance(x, QPolynomial):
        return x
    return QPolynomial((x,))


def q_number(a: int) -> QPolynomial:
    """[a]_q = 1 + q + ... + q^(a-1)."""
    if a < 1:
        raise ValueError(f"q-number needs a >= 1, got {a}")
    return QPolynomial((1,) * a)


def q_number_product(values: Iterable[int]) -> QPolynomial:
    """Product of [a]_q over the given values."""
    return reduce(multiply, (q_number(a) for a in values), QPolynomial.one())


def multiply(p: QPolynomial, r: QPolynomial) -> QPolynomial:
    return p * r


def add(p: QPolynomial, r: QPolynomial) -> QPolynomial:
    return p + r


def is_palindromic(p: QPolynomial) -> bool:
    if p.is_zero():
        raise ValueError("palindromicity is undefined for the zero polynomial")
    c = p.coefficients
    return c == c[::-1]


def format_q_numbers(values: Iterable[int]) -> str:
    """'[4][2][3]' style rendering of a q-number product."""
    values = list(values)
    if not values:
        return "1"
    return "".join(f"[{a}]" for a in values)


def _check_counting_poly(p: QPolynomial) -> None:
    if p[0] != 1:
        raise ValueError(f"expected constant term 1, got {p[0]}")
    if any(c < 0 for c in p.coefficients):
        raise ValueError("expected nonnegative coefficients")


def _search(p: QPolynomial, smallest: int, prefix: list[int], found: list[tuple[int, ...]],
            first_only: bool) -> None:
    if p.degree == 0:
        found.append(tuple(prefix))
        return
    # factors are tried in nondecreasing order so each multiset is visited once
    for a in range(smallest, p.degree + 2):
        quot = p.exact_quotient(q_number(a))
        if quot is None or any(c < 0 for c in quot.coefficients):
            continue
        prefix.append(a)
        _search(quot, a, prefix, found, first_only)
        prefix.pop()
        if first_only and found:
            return


def all_q_number_factorizations(p: QPolynomial) -> list[tuple[int, ...]]:
    """Every multiset {a_k >= 2} (sorted tuples) with p = prod [a_k]_q."""
    _check_counting_poly(p)
    found: list[tuple[int, ...]] = []
    _search(p, 2, [], found, first_only=False)
    return found


def factor_into_q_numbers(p: QPolynomial) -> tuple[int, ...] | None:
    """
    Write p as a product of q-numbers [a]_q with a >= 2, or return None.

    The result is a sorted tuple; the empty tuple stands for p = 1.

    >>> factor_into_q_numbers(q_number(5))
    (5,)
    >>> factor_into_q_numbers(QPolynomial((1, 2, 2, 2))) is None
    True
    """
    _check_counting_poly(p)
    found: list[tuple[int, ...]] = []
    _search(p, 2, [], found, first_only=True)
    return found[0] if found else None
