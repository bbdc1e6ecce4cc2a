import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from systolic.complex import make_complex
from systolic.corpus import octahedron, tetra_boundary
from systolic.errors import InputError
from systolic.sperner import (Ball3, DualStructure, count_rainbow, find_rainbow,
                              random_admissible_coloring, rainbow_tetrahedra,
                              subdivided_tetra_instance, validate_ball, validate_coloring)
from systolic.subdivision import barycentric_moves, stellar, stellar_many


def single_tet():
    return Ball3.from_tetrahedra([(0, 1, 2, 3)])


def identity_dual():
    return subdivided_tetra_instance(0)[1]


def test_single_tetrahedron_is_a_ball():
    b = single_tet()
    assert b.boundary == tetra_boundary()
    assert validate_ball(b) and validate_ball(b, require_no_internal=True)
    assert not b.internal_vertices


def test_cone_over_octahedron():
    b = Ball3.from_tetrahedra((6,) + t for t in octahedron().triangles)
    assert validate_ball(b)
    v = validate_ball(b, require_no_internal=True)
    assert not v and "internal" in v.reason
    assert b.internal_vertices == {6}


def test_two_tetrahedra_sharing_an_edge_is_not_a_ball():
    b = Ball3.from_tetrahedra([(0, 1, 2, 3), (0, 1, 4, 5)])
    assert not validate_ball(b)


def test_declared_boundary_must_match():
    b = Ball3((tuple(range(4)),), make_complex([(0, 1, 2)]))
    assert not validate_ball(b)


def test_validate_ball_survives_relabelling():
    ball, _ = subdivided_tetra_instance(1)
    rng = random.Random(3)
    perm = list(range(100))
    rng.shuffle(perm)
    moved = Ball3.from_tetrahedra(tuple(perm[v] for v in t) for t in ball.tetrahedra)
    assert validate_ball(ball, True) and validate_ball(moved, True)


def test_coloring_examples():
    b, d = single_tet(), identity_dual()
    good = {0: 0, 1: 1, 2: 2, 3: 3}
    assert validate_coloring(b, d, good)
    assert not validate_coloring(b, d, {**good, 0: 1})
    assert not validate_coloring(b, d, {0: 0, 1: 1, 2: 2})


def test_coloring_needs_covering_dual():
    ball, _ = subdivided_tetra_instance(1)
    with pytest.raises(InputError):
        validate_coloring(ball, identity_dual(), {v: 0 for v in ball.vertices})


def test_rainbow_examples():
    b = single_tet()
    assert find_rainbow(b, {0: 0, 1: 1, 2: 2, 3: 3}) == (0, 1, 2, 3)
    assert count_rainbow(b, {0: 0, 1: 1, 2: 2, 3: 3}) == 1
    assert find_rainbow(b, {0: 0, 1: 0, 2: 1, 3: 2}) is None
    assert count_rainbow(b, {0: 0, 1: 0, 2: 1, 3: 2}) == 0


@pytest.mark.parametrize("rounds,tets", [(0, 1), (1, 18), (2, 132)])
def test_subdivided_instances(rounds, tets):
    ball, dual = subdivided_tetra_instance(rounds)
    assert len(ball.tetrahedra) == tets
    assert validate_ball(ball, require_no_internal=True)
    assert dual.check(ball.boundary)


def test_dual_check_rejects_broken_arc():
    ball, dual = subdivided_tetra_instance(1)
    arcs = dict(dual.arcs)
    arcs[(0, 1)] = arcs[(0, 2)][:-1] + arcs[(1, 2)][::-1][1:]  # jumps between non-adjacent vertices
    bad = DualStructure.build(dual.apexes, arcs, dual.regions)
    assert not bad.check(ball.boundary)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9), st.sampled_from([1, 2]))
def test_sperner_parity(seed, rounds):
    ball, dual = subdivided_tetra_instance(rounds)
    c = random_admissible_coloring(ball, dual, random.Random(seed))
    assert validate_coloring(ball, dual, c)
    assert count_rainbow(ball, c) % 2 == 1
    assert find_rainbow(ball, c) == rainbow_tetrahedra(ball, c)[0]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_find_iff_count_positive(seed):
    rng = random.Random(seed)
    ball, _ = subdivided_tetra_instance(1)
    c = {v: rng.randrange(4) for v in ball.vertices}
    assert (find_rainbow(ball, c) is not None) == (count_rainbow(ball, c) > 0)


def test_stellar_subdivision_of_triangle():
    assert sorted(stellar([(0, 1, 2)], (0, 1, 2), 3)) == [(0, 1, 3), (0, 2, 3), (1, 2, 3)]
    assert stellar([(0, 1, 2)], (3, 4), 9) == [(0, 1, 2)]
    halves = stellar([(0, 1, 2), (1, 2, 3)], (1, 2), 4)
    assert len(halves) == 4


def test_barycentric_moves_cover_triangles_then_edges():
    moves = barycentric_moves([(0, 1, 2)], 3)
    assert [len(s) for s, _ in moves] == [3, 2, 2, 2]
    assert len(stellar_many([(0, 1, 2)], moves)) == 6
