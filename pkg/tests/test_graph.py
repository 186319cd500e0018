import random
from collections import Counter
from itertools import combinations, permutations, product

import pytest

from bruhat_regions.graph import (
    AcyclicOrientation, SimpleGraph, acyclic_orientations, all_graphs, all_peos,
    chromatic_polynomial, descent_count, exponents_of_ordering, extension_in_degrees,
    find_nice_peo, find_peo, is_chordal_bruteforce, region_polynomial,
    region_polynomial_by_clique_vertex, region_polynomial_geometric_oracle,
)
from bruhat_regions.poly import QPolynomial, is_palindromic, q_number, q_number_product

T = QPolynomial((0, 1))


def graphs_up_to(n):
    for k in range(1, n + 1):
        yield from all_graphs(k)


def proper_colorings(G, t):
    """Brute-force colouring count, independent of deletion-contraction."""
    return sum(1 for col in product(range(t), repeat=G.n)
               if all(col[i - 1] != col[j - 1] for i, j in G.edges))


def test_graph_validation_and_text():
    with pytest.raises(ValueError):
        SimpleGraph(3, frozenset({(1, 1)}))
    with pytest.raises(ValueError):
        SimpleGraph(3, frozenset({(1, 4)}))
    G = SimpleGraph(4, frozenset({(2, 1), (3, 4)}))
    assert G.edges == {(1, 2), (3, 4)}
    assert G.to_text() == "n: 4; edges: 1-2,3-4"
    assert SimpleGraph.parse(G.to_text()) == G
    assert SimpleGraph.parse("n: 3; edges: ") == SimpleGraph(3)
    assert "1 -- 2;" in G.to_dot()


def test_all_graphs_count():
    assert sum(1 for _ in all_graphs(4)) == 64
    assert len(set(all_graphs(4))) == 64


def test_orientation_counts():
    assert sum(1 for _ in acyclic_orientations(SimpleGraph(4))) == 1
    assert sum(1 for _ in acyclic_orientations(SimpleGraph(2, frozenset({(1, 2)})))) == 2
    for n, fact in [(1, 1), (2, 2), (3, 6), (4, 24), (5, 120)]:
        assert sum(1 for _ in acyclic_orientations(SimpleGraph.complete(n))) == fact


def test_orientations_unique_and_acyclic():
    for G in all_graphs(4):
        seen = [O.arcs for O in acyclic_orientations(G)]
        assert len(seen) == len(set(seen))
        # 2^E filter as the reference enumeration
        edges = G.sorted_edges()
        ref = 0
        for bits in product((0, 1), repeat=len(edges)):
            arcs = frozenset((j, i) if b else (i, j) for (i, j), b in zip(edges, bits))
            try:
                AcyclicOrientation(G, arcs)
                ref += 1
            except ValueError:
                pass
        assert ref == len(seen)


def test_orientation_rejects_cycle():
    C3 = SimpleGraph.cycle(3)
    with pytest.raises(ValueError):
        AcyclicOrientation(C3, frozenset({(1, 2), (2, 3), (3, 1)}))


def test_descent_count():
    K3 = SimpleGraph.complete(3)
    up = AcyclicOrientation(K3, frozenset(K3.edges))
    assert descent_count(up) == 0
    assert descent_count(up.reverse()) == 3
    for G in all_graphs(4):
        for O in acyclic_orientations(G):
            assert descent_count(O) + descent_count(O.reverse()) == len(G.edges)


def test_region_polynomial_examples():
    assert region_polynomial(SimpleGraph(3)) == QPolynomial.one()
    assert region_polynomial(SimpleGraph(2, frozenset({(1, 2)}))) == QPolynomial((1, 1))
    assert region_polynomial(SimpleGraph.complete(3)) == QPolynomial((1, 2, 2, 1))
    # C4: 14 orientations, tallied by both routes
    assert region_polynomial(SimpleGraph.cycle(4)) == QPolynomial((1, 3, 6, 3, 1))


def test_geometric_oracle_examples():
    assert region_polynomial_geometric_oracle(SimpleGraph(2, frozenset({(1, 2)}))) == QPolynomial((1, 1))
    K4 = SimpleGraph.complete(4)
    assert region_polynomial_geometric_oracle(K4) == region_polynomial(K4)
    with pytest.raises(ValueError):
        region_polynomial_geometric_oracle(SimpleGraph(9))


def test_oracle_agreement_small():
    for G in graphs_up_to(4):
        assert region_polynomial(G) == region_polynomial_geometric_oracle(G)


def test_oracle_agreement_random_large():
    rng = random.Random(20261018)
    for n, trials in [(6, 25), (7, 6)]:
        pairs = list(combinations(range(1, n + 1), 2))
        for _ in range(trials):
            G = SimpleGraph(n, frozenset(p for p in pairs if rng.random() < 0.5))
            assert region_polynomial(G) == region_polynomial_geometric_oracle(G)


def test_region_polynomial_palindromic_and_counts():
    for G in graphs_up_to(5):
        R = region_polynomial(G)
        assert is_palindromic(R)
        assert R[0] == 1
        assert R(1) == (-1) ** G.n * chromatic_polynomial(G)(-1)


def test_chromatic_examples():
    assert chromatic_polynomial(SimpleGraph(3)) == T ** 3
    assert chromatic_polynomial(SimpleGraph.complete(3)) == T * (T - 1) * (T - 2)


def test_chromatic_counts_colourings():
    for G in graphs_up_to(4):
        chi = chromatic_polynomial(G)
        for t in (1, 2, 3):
            assert chi(t) == proper_colorings(G, t)


def test_find_peo_examples():
    assert find_peo(SimpleGraph.cycle(4)) is None
    path = SimpleGraph(5, frozenset({(1, 2), (2, 3), (2, 4), (4, 5)}))
    result = find_peo(path)
    assert result is not None and result.is_peo
    K4 = SimpleGraph.complete(4)
    assert len(list(all_peos(K4))) == 24


def test_chordal_bruteforce_examples():
    C4 = SimpleGraph.cycle(4)
    assert not is_chordal_bruteforce(C4)
    assert is_chordal_bruteforce(SimpleGraph(4, C4.edges | {(1, 3)}))


def test_peo_iff_chordal_up_to_6():
    for G in graphs_up_to(6):
        peo = find_peo(G)
        assert (peo is not None) == is_chordal_bruteforce(G)
        if peo is not None:
            assert peo.is_peo


def test_exponents_of_ordering():
    assert exponents_of_ordering(SimpleGraph(4), (3, 1, 4, 2)).exponents == (0, 0, 0, 0)
    assert exponents_of_ordering(SimpleGraph.complete(5), range(1, 6)).exponents == (0, 1, 2, 3, 4)
    with pytest.raises(ValueError):
        exponents_of_ordering(SimpleGraph(3), (1, 1, 2))


def test_exponent_multiset_independent_of_peo():
    for G in graphs_up_to(5):
        peo = find_peo(G)
        if peo is None:
            continue
        ref = sorted(peo.exponents)
        for order in all_peos(G):
            assert sorted(exponents_of_ordering(G, order).exponents) == ref


def test_exponent_multiset_independent_of_peo_sample_6():
    rng = random.Random(6)
    graphs = [G for G in all_graphs(6) if rng.random() < 0.01]
    for G in graphs:
        peo = find_peo(G)
        if peo is None:
            continue
        ref = sorted(peo.exponents)
        for order in all_peos(G):
            assert sorted(exponents_of_ordering(G, order).exponents) == ref


def test_chromatic_factors_for_chordal():
    for G in graphs_up_to(5):
        peo = find_peo(G)
        if peo is None:
            continue
        prod = QPolynomial.one()
        for e in peo.exponents:
            prod = prod * (T - e)
        assert chromatic_polynomial(G) == prod


def test_find_nice_peo_examples():
    K4 = SimpleGraph.complete(4)
    nice = find_nice_peo(K4)
    assert nice is not None and nice.is_nice
    assert exponents_of_ordering(K4, (1, 2, 3, 4)).is_nice
    assert find_nice_peo(SimpleGraph.cycle(4)) is None


def test_nice_peo_existence_matches_bruteforce():
    for G in graphs_up_to(5):
        brute = any(exponents_of_ordering(G, order).is_nice for order in permutations(G.vertices))
        assert (find_nice_peo(G) is not None) == brute


def test_nice_peo_factorizes_region_polynomial():
    for G in graphs_up_to(5):
        nice = find_nice_peo(G)
        if nice is not None:
            assert nice.is_peo and nice.is_nice
            assert region_polynomial(G) == q_number_product(e + 1 for e in nice.exponents)


def test_clique_vertex_recurrence():
    G = SimpleGraph(3, frozenset({(1, 2)}))
    assert region_polynomial_by_clique_vertex(G, 3, 0) == region_polynomial(G)
    for n in range(2, 6):
        Kn = SimpleGraph.complete(n)
        assert region_polynomial_by_clique_vertex(Kn, n, n - 1) == \
            q_number(n) * region_polynomial(SimpleGraph.complete(n - 1))
        assert region_polynomial(Kn) == q_number_product(range(1, n + 1))
    with pytest.raises(ValueError):
        region_polynomial_by_clique_vertex(SimpleGraph(3, frozenset({(1, 2), (2, 3), (1, 3)})), 2, 2)
    with pytest.raises(ValueError):
        region_polynomial_by_clique_vertex(SimpleGraph.cycle(4), 1, 2)
    with pytest.raises(ValueError):
        region_polynomial_by_clique_vertex(SimpleGraph.complete(3), 3, 1)


def test_clique_vertex_recurrence_exhaustive():
    applied = 0
    for G in graphs_up_to(5):
        R = region_polynomial(G)
        for v in G.vertices:
            nb = G.neighbors(v)
            if G.is_clique(nb) and (all(u < v for u in nb) or all(u > v for u in nb)):
                assert region_polynomial_by_clique_vertex(G, v, len(nb)) == R
                m = len(nb)
                for tally in extension_in_degrees(G, v):
                    assert tally == Counter({j: 1 for j in range(m + 1)})
                applied += 1
    assert applied > 1000


def test_delete_vertex_relabels():
    G = SimpleGraph(4, frozenset({(1, 4), (2, 3), (3, 4)}))
    assert G.delete_vertex(2) == SimpleGraph(3, frozenset({(1, 3), (2, 3)}))
