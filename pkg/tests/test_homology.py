import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from edgedepth.constructions import edge_ideal, symbolic_power
from edgedepth.corpus import random_monomial_ideal
from edgedepth.graphs import Graph
from edgedepth.homology import (GF2, QQ, BettiTable, FieldSpec, SimplicialComplex,
                                betti_table, betti_via_taylor, depth, projective_dimension,
                                reduced_homology_ranks, upper_koszul_complex)
from edgedepth.monomials import MonomialIdeal


def parse(text, n):
    return MonomialIdeal.parse(text, n)


def test_upper_koszul_examples():
    K = upper_koszul_complex(parse("(x1*x2)", 2), (1, 1))
    assert K.is_irrelevant
    K = upper_koszul_complex(parse("(x1^2, x2)", 2), (2, 1))
    assert set(K.face_sets()) == {frozenset(), frozenset({0}), frozenset({1})}
    assert upper_koszul_complex(parse("(x1*x2)", 2), (1, 0)).is_void


def test_reduced_homology_examples():
    irrelevant = SimplicialComplex.from_faces([0, 1], [[]])
    assert reduced_homology_ranks(irrelevant) == [1]
    points = SimplicialComplex.from_faces([0, 1], [[], [0], [1]])
    assert reduced_homology_ranks(points)[:2] == [0, 1]
    hollow = SimplicialComplex.from_faces(
        [0, 1, 2], [[], [0], [1], [2], [0, 1], [0, 2], [1, 2]])
    assert reduced_homology_ranks(hollow) == [0, 0, 1]
    void = SimplicialComplex.from_faces([0], [])
    assert sum(reduced_homology_ranks(void)) == 0


def test_betti_examples():
    assert betti_table(parse("(x1, x2)", 2)).totals() == [1, 2, 1]
    assert betti_table(parse("(x1*x2)", 2)).totals() == [1, 1]
    B = betti_table(parse("(x1*x2, x2*x3)", 3))
    assert B.totals() == [1, 2, 1]
    assert B.entries[(2, (1, 1, 1))] == 1


def test_depth_examples():
    assert depth(parse("(x1*x2)", 2)) == 1
    assert depth(edge_ideal(Graph.path(3))) == 1
    assert depth(edge_ideal(Graph.cycle(5))) == 2
    assert depth(MonomialIdeal.zero(4)) == 4
    with pytest.raises(ValueError):
        depth(MonomialIdeal.unit(2))


def test_taylor_examples():
    assert betti_via_taylor(parse("(x1, x2)", 2)).totals() == [1, 2, 1]
    assert betti_via_taylor(parse("(x1*x2, x2*x3)", 3)).totals() == [1, 2, 1]
    T = betti_via_taylor(parse("(x1^2, x1*x2, x2^2)", 2))
    assert T.totals() == [1, 3, 2] and T.projective_dimension == 2
    with pytest.raises(ValueError):
        betti_via_taylor(edge_ideal(Graph.complete(6)), max_generators=14)


def test_field_validation():
    assert FieldSpec(0) == QQ and FieldSpec(2) == GF2
    for bad in (4, -3, 1):
        with pytest.raises(ValueError):
            FieldSpec(bad)


def test_characteristic_dependence():
    # Stanley-Reisner ideal of the 6-vertex triangulation of RP^2: depth drops in char 2
    facets = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
              (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)]
    faces = {frozenset(f) for f in facets}
    from itertools import combinations
    nonfaces = [c for c in combinations(range(6), 3) if frozenset(c) not in faces]
    gens = [tuple(int(i in c) for i in range(6)) for c in nonfaces]
    I = MonomialIdeal(6, gens)
    assert depth(I, QQ) == 3
    assert depth(I, GF2) == 2


def test_lattice_restriction_matches_full_grid():
    rng = random.Random(3)
    for _ in range(30):
        I = random_monomial_ideal(rng.randint(1, 4), 5, 2, rng)
        if I.is_unit:
            continue
        assert betti_table(I) == betti_table(I, full_grid=True)


def test_betti_json_round_trip():
    B = betti_table(symbolic_power(Graph.path(3), 2))
    data = json.loads(B.to_json())
    assert set(data) == {"n", "entries"}
    assert BettiTable.from_dict(data) == B


ideals = st.builds(lambda seed, n: random_monomial_ideal(n, 6, 2, random.Random(seed)),
                   st.integers(0, 10 ** 6), st.integers(1, 4))


@settings(max_examples=40)
@given(ideals)
def test_taylor_agrees(I):
    if I.is_unit:
        return
    assert betti_table(I) == betti_via_taylor(I)
    assert betti_table(I, GF2) == betti_via_taylor(I, GF2)


@settings(max_examples=40)
@given(ideals)
def test_auslander_buchsbaum_and_free_variable(I):
    if I.is_unit or I.is_zero:
        return
    d = depth(I)
    assert 0 <= d <= I.n and d == I.n - projective_dimension(I)
    lifted = MonomialIdeal(I.n + 1, [g + (0,) for g in I.gens])
    assert depth(lifted) == d + 1


@settings(max_examples=40)
@given(ideals, st.randoms(use_true_random=False))
def test_permutation_equivariance(I, rng):
    if I.is_unit:
        return
    perm = list(range(I.n))
    rng.shuffle(perm)
    J = MonomialIdeal(I.n, [tuple(g[perm[j]] for j in range(I.n)) for g in I.gens])
    assert betti_table(I).totals() == betti_table(J).totals()
    assert depth(I) == depth(J)
