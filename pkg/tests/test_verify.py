import random

import pytest

from edgedepth.constructions import HypothesisError, edge_ideal, symbolic_power
from edgedepth.corpus import random_certificate, random_chordal, random_monomial_ideal
from edgedepth.graphs import Graph, star_packing_number
from edgedepth.homology import GF2, QQ, depth
from edgedepth.monomials import MonomialIdeal
from edgedepth.verify import (GUARANTEED, HOLDS, DepthCertificate, DepthOracle,
                              certificate_from_star_packing, check_certificate,
                              check_colon_identity, check_edge_ideal_bound,
                              check_forest_power_coincidence, check_mixed_bound,
                              check_packing_deletion_lemmas, check_symbolic_depth_bound,
                              colon_identity_sides)


def parse(text, n):
    return MonomialIdeal.parse(text, n)


def test_certificate_examples(P5, K3):
    B = certificate_from_star_packing(P5, {0, 3})
    assert B.rows == ((0, (1,)), (3, (2, 4)))
    assert check_certificate(edge_ideal(P5), B) == (True, 2)
    assert depth(edge_ideal(P5)) == 2
    assert check_certificate(parse("(x1^2*x2)", 2), [(1, (0,))]) == (False, 1)
    assert check_certificate(edge_ideal(P5), []) == (True, 0)
    assert check_certificate(edge_ideal(K3), certificate_from_star_packing(K3, {0})) == (True, 1)
    E = Graph(4)
    B = certificate_from_star_packing(E, range(4))
    assert all(not nbrs for _, nbrs in B.rows)
    assert check_certificate(edge_ideal(E), B) == (True, 4)


def test_certificate_validation(P5):
    with pytest.raises(ValueError, match="repeats"):
        DepthCertificate(((0, (1,)), (1, (2,))))
    with pytest.raises(HypothesisError):
        certificate_from_star_packing(P5, {0, 2})


def test_accepted_certificates_bound_depth():
    rng = random.Random(11)
    accepted = 0
    for _ in range(150):
        I = random_monomial_ideal(rng.randint(2, 5), 5, 3, rng)
        if I.is_unit:
            continue
        B = random_certificate(I, rng)
        ok, q = check_certificate(I, B)
        assert ok
        assert depth(I) >= q
        accepted += q > 0
    assert accepted > 20


def test_symbolic_bound_examples(P3, C5):
    rep = check_symbolic_depth_bound(Graph.path(7), 2, require_chordal=True)
    assert (rep.alpha2, rep.bound, rep.verdict, rep.mode) == (3, 2, HOLDS, GUARANTEED)
    rep = check_symbolic_depth_bound(C5, 2)
    assert (rep.alpha2, rep.bound, rep.verdict) == (1, 0, HOLDS)
    rep = check_symbolic_depth_bound(P3, 1, require_chordal=True)
    assert (rep.value, rep.alpha2, rep.bound, rep.slack) == (1, 1, 1, 0)
    with pytest.raises(HypothesisError):
        check_symbolic_depth_bound(Graph.cycle(4), 2, require_chordal=True)


def test_edge_ideal_bound(P5):
    rep = check_edge_ideal_bound(P5)
    assert rep.value == 2 and rep.bound == 2 and rep.slack == 0


def test_mixed_bound_examples(P3):
    rep = check_mixed_bound(Graph(3, [(0, 1)]), Graph(3, [(1, 2)]), 2)
    assert rep.bound == 0 and rep.verdict == HOLDS
    G = Graph.path(4)
    a = check_mixed_bound(G, Graph(4), 2)
    b = check_symbolic_depth_bound(G, 2, require_chordal=True)
    assert (a.value, a.bound) == (b.value, b.bound)
    rng = random.Random(2)
    done = 0
    while done < 5:
        G = random_chordal(6, rng)
        edges = G.edges
        red = [e for e in edges if rng.random() < 0.5]
        H, H2 = Graph(6, red), Graph(6, [e for e in edges if e not in red])
        try:
            rep = check_mixed_bound(H, H2, 2)
        except HypothesisError:
            continue
        assert rep.verdict == HOLDS
        done += 1
    with pytest.raises(HypothesisError):
        check_mixed_bound(Graph.cycle(4), Graph(4), 2)


def test_colon_identity_examples(K3, P3):
    lhs, rhs = colon_identity_sides(K3, (0, 1), 2)
    assert lhs == rhs == parse("(x3, x1*x2)", 3)
    lhs, rhs = colon_identity_sides(Graph(2, [(0, 1)]), (0, 1), 2)
    assert lhs == rhs == parse("(x1*x2)", 2)
    assert check_colon_identity(P3, (0, 1), 3)
    with pytest.raises(HypothesisError):
        check_colon_identity(P3, (0, 2), 2)
    with pytest.raises(HypothesisError):
        check_colon_identity(P3, (0, 1), 1)


def test_colon_identity_on_chordal_graphs():
    rng = random.Random(4)
    for _ in range(30):
        G = random_chordal(rng.randint(2, 6), rng)
        if not G.num_edges:
            continue
        e = rng.choice(G.edges)
        assert check_colon_identity(G, e, rng.randint(2, 3))


def test_packing_lemma_examples(P5, P3):
    rep = check_packing_deletion_lemmas(P5, [2], [1, 2, 3], "lemma31")
    assert (rep.alpha2, rep.value, rep.bound, rep.verdict) == (2, 2, 1, HOLDS)
    rep = check_packing_deletion_lemmas(P3, [0, 1], [2], "lemma32")
    assert (rep.value, rep.bound, rep.verdict) == (1, 0, HOLDS)
    rep = check_packing_deletion_lemmas(P5, [], [], "lemma31")
    assert rep.value == rep.bound == 2
    with pytest.raises(HypothesisError):
        check_packing_deletion_lemmas(P5, [0], [4], "lemma31")
    with pytest.raises(HypothesisError):
        check_packing_deletion_lemmas(P3, [0, 2], [], "lemma32")


def test_forest_coincidence_examples(P3):
    assert check_forest_power_coincidence(P3, 2)
    assert check_forest_power_coincidence(Graph(2, [(0, 1)]), 3)
    assert check_forest_power_coincidence(Graph.star(4), 2)
    with pytest.raises(HypothesisError):
        check_forest_power_coincidence(Graph.cycle(3), 2)


def test_oracle_cache_and_cross_check():
    oracle = DepthOracle(QQ, cross_check=True)
    G = Graph.path(5)
    first = oracle.symbolic(G, 2)
    assert oracle.symbolic(G.relabel([4, 3, 2, 1, 0]), 2) == first
    assert first == depth(symbolic_power(G, 2))
    assert oracle.checked > 0 and not oracle.mismatches
    assert DepthOracle(GF2).edge_ideal(G) == depth(edge_ideal(G), GF2)


def test_report_serialization(P3):
    rep = check_symbolic_depth_bound(P3, 2, require_chordal=True)
    d = rep.to_dict()
    assert d["verdict"] == HOLDS and d["alpha2"] == star_packing_number(P3)[0]
    assert len(rep.csv_row(timings=False)) == len(rep.csv_row(timings=True))
