from itertools import combinations

import pytest

from bruhat_regions.bruhat import (
    bruhat_leq, hasse_diagram, interval_size, lower_covers, lower_interval,
    poincare_polynomial,
)
from bruhat_regions.perm import (Permutation, all_permutations, identity, is_smooth, length,
                                 longest)
from bruhat_regions.poly import QPolynomial, is_palindromic, q_number_product


def closure_oracle(n):
    """u <= w from the generating relations u < u*t_ij whenever length grows."""
    elems = list(all_permutations(n))
    up = {}
    for u in elems:
        ups = []
        for i, j in combinations(range(n), 2):
            v = list(u.values)
            v[i], v[j] = v[j], v[i]
            x = Permutation(tuple(v))
            if length(x) > length(u):
                ups.append(x)
        up[u] = ups
    above = {}
    for u in elems:
        seen = {u}
        stack = [u]
        while stack:
            for x in up[stack.pop()]:
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
        above[u] = seen
    return elems, above


@pytest.fixture(scope="module")
def s5_closure():
    return closure_oracle(5)


def test_leq_matches_closure():
    for n in range(1, 5):
        elems, above = closure_oracle(n)
        for u in elems:
            for w in elems:
                assert bruhat_leq(u, w) == (w in above[u])


def test_interval_matches_closure(s5_closure):
    elems, above = s5_closure
    for w in elems:
        expected = {u for u in elems if w in above[u]}
        assert lower_interval(w).elements == expected
        assert {u for u in elems if bruhat_leq(u, w)} == expected


def test_leq_basics():
    for w in all_permutations(4):
        assert bruhat_leq(identity(4), w)
        assert bruhat_leq(w, w)
    with pytest.raises(ValueError):
        bruhat_leq(identity(2), identity(3))


def test_s3_longest_interval():
    # transitive-closure count
    assert sum(bruhat_leq(u, longest(3)) for u in all_permutations(3)) == 6
    iv = lower_interval(longest(3))
    assert iv.size == 6
    assert poincare_polynomial(longest(3)) == QPolynomial((1, 2, 2, 1))


def test_identity_interval():
    iv = lower_interval(identity(4))
    assert iv.elements == {identity(4)}
    assert iv.rank_counts == (1,)
    assert poincare_polynomial(identity(1)) == QPolynomial.one()
    assert interval_size(identity(5)) == 1


def test_b_4231():
    w = Permutation((4, 2, 3, 1))
    # 20 from the closure oracle
    assert interval_size(w) == 20
    assert sum(bruhat_leq(u, w) for u in all_permutations(4)) == 20


def test_longest_interval_is_whole_group():
    for n, fact in [(1, 1), (2, 2), (3, 6), (4, 24), (5, 120)]:
        assert interval_size(longest(n)) == fact


def test_example_poincare():
    w = Permutation.parse("5164732")
    assert poincare_polynomial(w) == q_number_product([4, 2, 3, 4, 1, 2, 3])


def test_interval_invariants():
    for n in range(1, 6):
        for w in all_permutations(n):
            iv = lower_interval(w)
            assert identity(n) in iv.elements and w in iv.elements
            assert sum(iv.rank_counts) == iv.size
            assert iv.rank_counts[0] == 1 and iv.rank_counts[length(w)] == 1
            assert len(iv.rank_counts) == length(w) + 1
            counts = [0] * (length(w) + 1)
            for u in iv.elements:
                counts[length(u)] += 1
            assert tuple(counts) == iv.rank_counts


def test_palindromic_iff_smooth():
    for n in range(1, 7):
        for w in all_permutations(n):
            assert is_palindromic(poincare_polynomial(w)) == is_smooth(w)


def test_monotone_sizes(s5_closure):
    elems, above = s5_closure
    size = {w: interval_size(w) for w in elems}
    for u in elems:
        for w in above[u]:
            assert size[u] <= size[w]


def test_covers_drop_length_by_one():
    for w in all_permutations(5):
        for u in lower_covers(w):
            assert length(u) == length(w) - 1
            assert bruhat_leq(u, w)


def test_hasse_diagram():
    ranks, edges = hasse_diagram(longest(3))
    assert len(ranks) == 6
    assert len(edges) == 8
    assert all(ranks[hi] == ranks[lo] + 1 for lo, hi in edges)


def test_interval_json():
    assert lower_interval(longest(3)).to_json() == '{"w": "321", "B_w": 6, "rank_counts": [1, 2, 2, 1]}'
