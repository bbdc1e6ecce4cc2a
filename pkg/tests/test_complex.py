import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_cliques
from systolic.complex import (Complex, FiniteMetric, Graph, complement, connected_components,
                              flag_complex, full_subcomplex, is_flag, link, make_complex,
                              one_ball, rips_complex)
from systolic.corpus import (cone, cycle, deg7_patch, generate, icosahedron, octahedron,
                             tetra_boundary, tetrahedron, tri_grid)
from systolic.errors import DomainError, InputError


def graph_of(edges, n=None):
    return Graph.from_edges(edges, range(n) if n else ())


def test_make_complex_single_triangle():
    x = make_complex([(0, 1, 2)])
    assert x.simplices == {(0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)}


def test_make_complex_empty():
    x = make_complex([])
    assert len(x) == 0 and x.dimension == -1 and not x.vertices


def test_make_complex_two_triangles_share_edge():
    x = make_complex([(0, 1, 2), (1, 2, 3)])
    assert len(x) == 11  # 4 vertices, 5 edges, 2 triangles
    assert x.edges.count((1, 2)) == 1


def test_make_complex_rejects_duplicates():
    with pytest.raises(InputError):
        make_complex([(0, 0, 1)])


def test_flag_complex_c6_has_no_triangles():
    x = flag_complex(cycle(6).graph())
    assert x == cycle(6) and not x.triangles


def test_flag_complex_k4_is_tetrahedron():
    k4 = graph_of([(a, b) for a in range(4) for b in range(a + 1, 4)])
    assert flag_complex(k4) == tetrahedron()


def test_flag_complex_octahedron_graph():
    x = flag_complex(octahedron().graph())
    assert len(x.triangles) == 8 and x.dimension == 2
    assert x == octahedron()


def test_flag_complex_truncation_is_recorded():
    k5 = graph_of([(a, b) for a in range(5) for b in range(a + 1, 5)])
    x = flag_complex(k5, max_dim=2)
    assert x.dimension == 2 and x.clique_cutoff == 2
    assert flag_complex(k5).clique_cutoff is None


def test_is_flag_examples():
    assert not is_flag(tetra_boundary())
    assert is_flag(octahedron())
    assert is_flag(flag_complex(icosahedron().graph()))


def test_link_examples():
    oc = octahedron()
    assert link(oc, (0,)) == make_complex([(2, 4), (4, 3), (3, 5), (5, 2)])
    assert link(make_complex([(0, 1, 2)]), (0, 1)) == make_complex([(2,)])
    ico = icosahedron()
    for v in ico.vertices:
        lk = link(ico, (v,))
        assert len(lk.vertices) == 5 and len(lk.edges) == 5 and not lk.triangles


def test_link_requires_member():
    with pytest.raises(DomainError):
        link(octahedron(), (0, 1))


def test_full_subcomplex_examples():
    oc = octahedron()
    assert full_subcomplex(oc, [0, 1]) == make_complex([(0,), (1,)])
    assert full_subcomplex(oc, oc.vertices) == oc
    assert full_subcomplex(make_complex([(0, 1, 2)]), [0, 1]) == make_complex([(0, 1)])
    with pytest.raises(DomainError):
        full_subcomplex(oc, [9])


def test_complement_examples():
    x = make_complex([(0, 1, 2), (1, 2, 3)])
    assert complement(x, Complex()) == x
    assert complement(x, x) == Complex()
    assert complement(x, make_complex([(0, 1, 2)])) == make_complex([(1, 2, 3)])
    with pytest.raises(DomainError):
        complement(x, make_complex([(4,)]))


def test_one_ball_examples():
    oc = octahedron()
    assert one_ball(oc, 0) == full_subcomplex(oc, [0, 2, 3, 4, 5])
    assert one_ball(make_complex([(7,)]), 7) == make_complex([(7,)])
    w = cone(cycle(6))
    assert one_ball(w, 6) == w
    assert one_ball(oc, 0, full=False).is_subcomplex_of(one_ball(oc, 0))
    with pytest.raises(DomainError):
        one_ball(oc, 42)


def test_one_ball_closed_star_is_smaller_in_general():
    x = make_complex([(0, 1), (1, 2), (0, 2), (0, 1, 3)])  # triangle 012 hollow
    assert (1, 2) in one_ball(x, 0)
    assert (1, 2) not in one_ball(x, 0, full=False)


def test_rips_examples():
    m = FiniteMetric((0, 1, 2), np.array([[0, 1, 2], [1, 0, 1], [2, 1, 0]]))
    assert rips_complex(m, 1, 2) == make_complex([(0, 1), (1, 2)])
    assert rips_complex(m, 2, 2) == make_complex([(0, 1, 2)])
    assert rips_complex(m, 0, 2) == make_complex([(0,), (1,), (2,)])


def test_finite_metric_validation():
    with pytest.raises(InputError):
        FiniteMetric((0, 1), np.array([[0, 1], [2, 0]]))


def test_connected_components_examples():
    assert len(connected_components(cycle(6))) == 1
    assert connected_components(make_complex([(0, 1, 2), (3, 4, 5)])) == [[0, 1, 2], [3, 4, 5]]
    assert connected_components(Complex()) == []


def test_generate_examples():
    assert generate("cycle", 6) == cycle(6)
    g = generate("tri_grid", 2, 2)
    assert len(g.triangles) == 8 and len(g.vertices) == 9
    w5 = generate("cone", "cycle", 5)
    assert len(w5.vertices) == 6 and len(w5.triangles) == 5
    assert generate("icosahedron").euler_characteristic() == 2
    with pytest.raises(InputError):
        generate("cycle", 2)
    with pytest.raises(InputError):
        generate("dodecahedron")
    with pytest.raises(InputError):
        generate("tri_grid", "a", 2)


def test_tri_grid_interior_degree_six():
    g = tri_grid(4, 4)
    degs = [len(g.adjacency[v]) for v in g.vertices]
    assert max(degs) == 6 and degs.count(6) == 9


@pytest.mark.parametrize("r", [1, 2, 3])
def test_deg7_patch_is_a_flag_disc_with_degree_seven_interior(r):
    x = deg7_patch(r)
    assert is_flag(x) and x.euler_characteristic() == 1
    boundary = {e for e in x.edges if sum(1 for t in x.triangles if set(e) <= set(t)) == 1}
    bverts = {v for e in boundary for v in e}
    assert all(len(x.adjacency[v]) >= 7 for v in x.vertices - bverts)


edges_st = st.sets(st.tuples(st.integers(0, 7), st.integers(0, 7))
                   .filter(lambda e: e[0] < e[1]), max_size=20)


@settings(max_examples=60, deadline=None)
@given(edges_st)
def test_flag_complex_matches_clique_oracle(edges):
    g = graph_of(edges, 8)
    assert flag_complex(g).simplices == naive_cliques(g)


@settings(max_examples=60, deadline=None)
@given(edges_st, st.sets(st.integers(0, 7)))
def test_link_and_full_subcomplex_preserve_flagness(edges, vs):
    x = flag_complex(graph_of(edges, 8))
    assert is_flag(full_subcomplex(x, vs))
    assert full_subcomplex(x, vs).vertices == frozenset(vs) & x.vertices
    for s in sorted(x.simplices)[:10]:
        assert is_flag(link(x, s))
    assert flag_complex(x.graph()) == x


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(0, 9), min_size=1, max_size=4, unique=True), max_size=6))
def test_closure_is_face_closed(simplices):
    x = make_complex(simplices)
    for s in x:
        for k in range(len(s)):
            assert s[:k] + s[k + 1:] in x or len(s) == 1


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 7), st.integers(0, 2**31 - 1), st.floats(0, 5), st.floats(0, 5))
def test_rips_monotone(n, seed, r1, r2):
    rng = np.random.default_rng(seed)
    pts = rng.uniform(0, 4, size=(n, 2))
    d = np.linalg.norm(pts[:, None] - pts[None], axis=-1)
    m = FiniteMetric(tuple(range(n)), d)
    lo, hi = sorted((r1, r2))
    assert rips_complex(m, lo, 3).is_subcomplex_of(rips_complex(m, hi, 3))
