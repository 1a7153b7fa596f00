import random

import pytest

from conftest import brute_force_exists_proper_k, random_bipartite_graph
from orientkit.density import pseudoarboricity
from orientkit.errors import ExceedsCapError, PreconditionFailedError
from orientkit.exact import (
    exists_proper_k,
    is_q3,
    proper_orientation_number,
    quadrangulation_number,
)
from orientkit.generators import complete_bipartite, cycle, path, pdw, q3, star
from orientkit.graphs import Graph, parse_graph
from orientkit.orientation import verify_orientation


def test_path3_k1():
    sigma = exists_proper_k(path(3), 1)
    assert sigma.arcs() == [(1, 0), (1, 2)]


def test_c4_k1_none():
    assert exists_proper_k(cycle(4), 1) is None


def test_q3_k2():
    sigma = exists_proper_k(q3(), 2)
    report = verify_orientation(q3(), sigma)
    assert report.proper
    assert report.max_indegree <= 2


def test_witness_is_deterministic():
    a = exists_proper_k(pdw(4), 3)
    b = exists_proper_k(pdw(4), 3)
    assert a.direction == b.direction


def test_monotone_in_k():
    rng = random.Random(3)
    for _ in range(10):
        g = random_bipartite_graph(rng, 3, 4, 2)
        for k in range(1, 4):
            if exists_proper_k(g, k) is not None:
                assert exists_proper_k(g, k + 1) is not None


SMALL_CORPUS = [
    parse_graph("2 1\n0 1\n"),
    path(3),
    path(5),
    cycle(4),
    cycle(6),
    star(3),
    star(5),
    complete_bipartite(2, 3),
    complete_bipartite(2, 4),
    q3(),
    pdw(3),
]


@pytest.mark.parametrize("g", SMALL_CORPUS, ids=range(len(SMALL_CORPUS)))
def test_agrees_with_brute_force(g):
    assert g.m <= 14
    for k in range(4):
        found = exists_proper_k(g, k) is not None
        assert found == brute_force_exists_proper_k(g, k)


def test_number_single_edge():
    result = proper_orientation_number(parse_graph("2 1\n0 1\n"), 4)
    assert result.value == 1
    assert sorted(verify_orientation(result.witness.graph, result.witness).indegrees) == [0, 1]


def test_number_c4():
    result = proper_orientation_number(cycle(4), 4)
    assert result.value == 2
    assert verify_orientation(cycle(4), result.witness).proper


def test_number_q3():
    assert proper_orientation_number(q3(), 4).value == 2


def test_number_exceeds_cap():
    with pytest.raises(ExceedsCapError):
        proper_orientation_number(cycle(4), 1)


def test_number_at_least_pseudoarboricity():
    rng = random.Random(17)
    for _ in range(8):
        g = random_bipartite_graph(rng, 3, 3, 2)
        result = proper_orientation_number(g, 6)
        assert result.value >= pseudoarboricity(g)
        report = verify_orientation(g, result.witness)
        assert report.proper
        assert report.max_indegree <= result.value


def test_is_q3():
    assert is_q3(q3())
    assert is_q3(pdw(3))
    assert not is_q3(pdw(4))  # wrong size
    assert not is_q3(complete_bipartite(3, 3))
    # rewire one cube edge: 3-regularity breaks, so the cheap gate rejects
    rewired = tuple(e for e in q3().edges if e != (0, 1)) + ((0, 7),)
    assert not is_q3(Graph(n=8, edges=rewired))
    # the Wagner graph: 3-regular on 8 vertices but not bipartite
    wagner = tuple((i, (i + 1) % 8) for i in range(8)) + tuple(
        (i, i + 4) for i in range(4)
    )
    assert not is_q3(Graph(n=8, edges=wagner))


def test_quadrangulation_number_q3():
    assert quadrangulation_number(q3()) == 2


@pytest.mark.parametrize("m", [4, 5])
def test_quadrangulation_number_pdw(m):
    g = pdw(m)
    assert quadrangulation_number(g) == 3
    assert proper_orientation_number(g, 4).value == 3


def test_quadrangulation_gates():
    with pytest.raises(PreconditionFailedError) as exc:
        quadrangulation_number(cycle(4))
    assert "degree" in exc.value.gate
    with pytest.raises(PreconditionFailedError):
        quadrangulation_number(Graph(n=8, edges=q3().edges, planar_asserted=False))
