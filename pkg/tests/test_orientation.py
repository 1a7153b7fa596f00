import random
from fractions import Fraction

import pytest

from conftest import random_connected_graph
from orientkit.density import mad_exact
from orientkit.errors import (
    MinDegreeTooSmallError,
    PreconditionDegreeError,
    PreconditionMadError,
    SizeMismatchError,
)
from orientkit.generators import cycle, pdw, q3, star
from orientkit.graphs import X, bipartition, parse_graph
from orientkit.orientation import (
    Infeasible,
    Orientation,
    k_orientation,
    proper_bipartite_orientation,
    proper_three_orientation,
    verify_orientation,
)


def indegrees(sigma):
    return verify_orientation(sigma.graph, sigma).indegrees


def test_c4_one_orientation_is_directed_cycle():
    g = cycle(4)
    sigma = k_orientation(g, 1)
    assert isinstance(sigma, Orientation)
    assert indegrees(sigma) == (1, 1, 1, 1)


def test_q3_one_orientation_infeasible():
    result = k_orientation(q3(), 1)
    assert isinstance(result, Infeasible)
    assert sorted(result.witness) == list(range(8))  # 12 edges > 1 * 8


def test_q3_two_orientation():
    sigma = k_orientation(q3(), 2)
    assert isinstance(sigma, Orientation)
    assert max(indegrees(sigma)) <= 2


def test_infeasible_witness_validity():
    rng = random.Random(5)
    checked = 0
    for _ in range(40):
        g = random_connected_graph(rng, rng.randint(3, 9))
        for k in range(3):
            result = k_orientation(g, k)
            if isinstance(result, Infeasible):
                vs = set(result.witness)
                inside = sum(1 for u, v in g.edges if u in vs and v in vs)
                assert inside > k * len(vs)
                checked += 1
    assert checked > 10


def test_indegree_sum_is_edge_count():
    rng = random.Random(6)
    for _ in range(20):
        g = random_connected_graph(rng, rng.randint(2, 9))
        sigma = k_orientation(g, g.n)
        assert sum(indegrees(sigma)) == g.m


def test_hakimi_equivalence_small():
    rng = random.Random(8)
    for _ in range(30):
        g = random_connected_graph(rng, rng.randint(2, 8))
        if g.m == 0:
            continue
        mad = mad_exact(g).mad
        for k in range(5):
            feasible = not isinstance(k_orientation(g, k), Infeasible)
            assert feasible == (mad <= 2 * k)


def test_switching_c4():
    g = cycle(4)
    sigma = proper_bipartite_orientation(g, bipartition(g), X, 1)
    assert indegrees(sigma) == (2, 0, 2, 0)


def test_switching_q3():
    g = q3()
    part = bipartition(g)
    sigma = proper_bipartite_orientation(g, part, X, 2)
    report = verify_orientation(g, sigma)
    assert report.proper
    for v in range(8):
        assert report.indegrees[v] == (3 if part.side[v] == X else 0)


def test_switching_star():
    # K_{1,3} centered at 0, X = {0}, k = 2: Mad = 6/4 <= 4, deg = 3 = k+1
    g = star(3)
    assert mad_exact(g).mad == Fraction(6, 4)
    sigma = proper_bipartite_orientation(g, bipartition(g), X, 2)
    assert indegrees(sigma) == (3, 0, 0, 0)
    assert verify_orientation(g, sigma).proper


def test_switching_degree_precondition():
    g = cycle(4)
    with pytest.raises(PreconditionDegreeError):
        proper_bipartite_orientation(g, bipartition(g), X, 2)  # deg 2 <= k


def test_switching_mad_precondition():
    # K_{3,3}: Mad = 3 > 2, no 1-orientation, but every X degree is 3 >= 2
    g = parse_graph("6 9\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n")
    with pytest.raises(PreconditionMadError) as exc:
        proper_bipartite_orientation(g, bipartition(g), X, 1)
    vs = set(exc.value.witness)
    inside = sum(1 for u, v in g.edges if u in vs and v in vs)
    assert inside > len(vs)


def test_switching_only_flips_arcs_leaving_x():
    g = pdw(5)
    part = bipartition(g)
    base = k_orientation(g, 2)
    sigma = proper_bipartite_orientation(g, part, X, 2)
    for i, (u, v) in enumerate(g.edges):
        if base.direction[i] != sigma.direction[i]:
            original_tail = u if base.direction[i] else v
            assert part.side[original_tail] == X


def test_proper3_q3():
    sigma = proper_three_orientation(q3())
    report = verify_orientation(q3(), sigma)
    assert report.proper
    assert report.max_indegree == 3
    assert sorted(report.indegrees) == [0, 0, 0, 0, 3, 3, 3, 3]


def test_proper3_pdw4():
    g = pdw(4)
    report = verify_orientation(g, proper_three_orientation(g))
    assert report.proper
    assert report.max_indegree == 3


def test_proper3_min_degree_gate():
    with pytest.raises(MinDegreeTooSmallError):
        proper_three_orientation(cycle(4))


def test_verify_directed_c4():
    g = cycle(4)
    sigma = Orientation(graph=g, direction=(True,) * 4)
    report = verify_orientation(g, sigma)
    assert report.indegrees == (1, 1, 1, 1)
    assert not report.proper
    assert len(report.violations) == 4


def test_verify_arcs_into_even():
    g = cycle(4)
    # arcs 1->0? direction picks heads 0 and 2 for each edge
    sigma = Orientation(graph=g, direction=(False, True, False, True))
    report = verify_orientation(g, sigma)
    assert report.indegrees == (2, 0, 2, 0)
    assert report.proper
    assert report.max_indegree == 2


def test_verify_size_mismatch():
    g = cycle(4)
    other = cycle(6)
    sigma = Orientation(graph=other, direction=(True,) * 6)
    with pytest.raises(SizeMismatchError):
        verify_orientation(g, sigma)
