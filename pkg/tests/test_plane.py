import itertools

import pytest
from hypothesis import given, settings, strategies as st

from chooselab.plane import (AsymmetricRotation, CyclePattern, DuplicateNeighbor,
                             NotNeighbor, NotQuadFace, PathPattern, PlaneGraph,
                             SelfLoop, UnknownVertex, build_plane_graph,
                             complete_bipartite, consecutive, cube_graph,
                             cycle_graph, degree_class, dodecahedron_graph,
                             exact, grid_patch, match_pattern,
                             path_graph, trace_faces)


def test_build_cycle_from_rotations():
    G = build_plane_graph({"vertices": [0, 1, 2, 3],
                           "rotations": {"0": [1, 3], "1": [0, 2],
                                         "2": [1, 3], "3": [2, 0]}})
    assert G.num_edges() == 4
    assert not G.abstract


def test_asymmetric_rotation_rejected():
    with pytest.raises(AsymmetricRotation):
        PlaneGraph(rotation={0: [1], 1: []})


def test_duplicate_and_loop_rejected():
    with pytest.raises(DuplicateNeighbor):
        PlaneGraph(rotation={0: [1, 1], 1: [0, 0]})
    with pytest.raises(SelfLoop):
        PlaneGraph(rotation={0: [0]})
    with pytest.raises(SelfLoop):
        PlaneGraph(edges=[(2, 2)])


def test_cube_euler_and_faces():
    G = cube_graph()
    assert len(G.vertices) == 8 and G.num_edges() == 12
    faces = G.faces()
    assert len(faces) == 6
    assert all(f.degree == 4 for f in faces)


def test_single_edge_degenerate_face():
    G = PlaneGraph(rotation={0: [1], 1: [0]})
    faces = trace_faces(G)
    assert [f.degree for f in faces] == [2]


def test_trace_faces_requires_embedding():
    from chooselab.plane import NotEmbedded
    with pytest.raises(NotEmbedded):
        trace_faces(PlaneGraph(edges=[(0, 1)]))


def test_dart_partition():
    for G in (cube_graph(), dodecahedron_graph(), grid_patch(2, 3)):
        darts = {(u, v) for u in G.vertices for v in G.rotation(u)}
        covered = [d for f in G.faces() for d in f.boundary]
        assert len(covered) == len(darts)
        assert set(covered) == darts


def test_double_counting():
    for G in (cube_graph(), dodecahedron_graph(), grid_patch(3, 2)):
        assert sum(G.degree(v) for v in G.vertices) == 2 * G.num_edges()
        assert sum(f.degree for f in G.faces()) == 2 * G.num_edges()


def test_degree_class_star_and_path():
    star = PlaneGraph(edges=[(0, 1), (0, 2), (0, 3)])
    assert (degree_class(star, 0).d, degree_class(star, 0).t) == (3, 0)
    p4 = path_graph(4)
    assert (degree_class(p4, 1).d, degree_class(p4, 1).t) == (2, 0)
    with pytest.raises(UnknownVertex):
        degree_class(p4, 99)


def test_degree_class_41_fixture():
    # a 4-vertex with exactly one degree-3 neighbor
    G = PlaneGraph(edges=[(0, 1), (0, 2), (0, 3), (0, 4),
                          (1, 5), (1, 6)])
    assert degree_class(G, 0).d == 4
    assert degree_class(G, 0).t == 1


def test_consecutive():
    G = PlaneGraph(rotation={0: [1, 2, 3, 4],
                             1: [0], 2: [0], 3: [0], 4: [0]})
    assert consecutive(G, 0, 1, 2)
    assert not consecutive(G, 0, 1, 3)
    assert consecutive(G, 0, 4, 1)  # cyclic wrap
    with pytest.raises(NotNeighbor):
        consecutive(G, 0, 1, 99)


def test_match_pattern_on_c4():
    G = cycle_graph(4)
    hits = match_pattern(G, PathPattern((exact(2), exact(2), exact(2))))
    assert len(hits) == 4
    assert all(len(p) == 3 for p in hits)


def test_match_pattern_empty():
    G = cycle_graph(5)
    assert match_pattern(G, PathPattern((exact(3), exact(3), exact(3)))) == []


def test_match_cycle_pattern():
    G = cycle_graph(4)
    hits = match_pattern(G, CyclePattern((exact(2),) * 4))
    assert len(hits) == 1


def test_match_pattern_class_constraints():
    # plant one (3,3,4,3)-path: 1-0-2-3 with the right degrees
    G = PlaneGraph(edges=[(0, 1), (0, 2), (0, 5), (2, 3), (2, 4), (2, 6),
                          (1, 7), (1, 8), (3, 9), (3, 10)])
    pat = PathPattern((exact(3), exact(3), exact(4), exact(3)))
    hits = match_pattern(G, pat)
    assert hits == [(1, 0, 2, 3)]


def _naive_paths(G, degs):
    classes = {v: degree_class(G, v).d for v in G.vertices}
    found = set()
    for perm in itertools.permutations(G.vertices, len(degs)):
        if all(classes[v] == d for v, d in zip(perm, degs)):
            if all(G.has_edge(a, b) for a, b in zip(perm, perm[1:])):
                found.add(min(perm, tuple(reversed(perm))))
    return sorted(found)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_match_pattern_agrees_with_naive_dfs(seed):
    import random

    rng = random.Random(seed)
    n = rng.randrange(4, 9)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < 0.4]
    if not edges:
        edges = [(0, 1)]
    G = PlaneGraph(edges=edges)
    degs = [rng.randrange(1, 4) for _ in range(3)]
    pat = PathPattern(tuple(exact(d) for d in degs))
    assert match_pattern(G, pat) == _naive_paths(G, degs)


def test_abstract_mode_and_json_roundtrip():
    G = PlaneGraph(edges=[(0, 1), (1, 2)])
    assert G.abstract
    G2 = build_plane_graph(G.to_json())
    assert G2.edges() == G.edges()
    G3 = build_plane_graph(cube_graph().to_json())
    assert len(G3.faces()) == 6


def test_lambda_pattern_errors():
    from chooselab.discharging import lambda_pattern
    G = dodecahedron_graph()
    with pytest.raises(NotQuadFace):
        lambda_pattern(G, 0, G.faces()[0])


def test_k33_triangle_free():
    assert complete_bipartite(3, 3).is_triangle_free()
    assert not PlaneGraph(edges=[(0, 1), (1, 2), (2, 0)]).is_triangle_free()
