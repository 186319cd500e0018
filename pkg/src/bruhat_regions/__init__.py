"""Schubert-variety Poincare polynomials against inversion-arrangement region counts."""

from .arrangement import (inversion_graph, recurrence_step, region_polynomial_w,
                          sector_decomposition, simple_peo)
from .bruhat import bruhat_leq, interval_size, lower_interval, poincare_polynomial
from .graph import (SimpleGraph, acyclic_orientations, chromatic_polynomial, find_nice_peo,
                    find_peo, region_polynomial)
from .perm import (Permutation, exponents_by_records, is_smooth, length, make_permutation,
                   record_positions, simple_peo_order)
from .poly import QPolynomial, factor_into_q_numbers, q_number, q_number_product

__version__ = "0.1.0"
