"""Smoke tests for the python extension module.

Run against an installed wheel (`import resolvedim`) or a raw CMake build of
`_resolvedim` with PYTHONPATH pointing at the binding output directory.
"""

import pytest

try:
    import resolvedim as rd
except ImportError:
    import _resolvedim as rd


def test_graph_construction_and_validation():
    g = rd.Graph(3, [(0, 1), (1, 2)])
    assert g.n == 3
    assert g.m == 2
    assert g.neighbors(1) == [0, 2]
    with pytest.raises(rd.Error):
        rd.Graph(4, [(0, 1), (1, 2)])  # vertex 3 unreachable
    with pytest.raises(rd.Error):
        rd.Graph(2, [(0, 0)])


def test_generate_and_distances():
    b5 = rd.generate("bipyramid", 5)
    assert b5.n == 7
    assert b5.m == 15
    d = rd.distance_matrix(b5)
    assert all(d[u][v] in (1, 2) for u in range(7) for v in range(7) if u != v)


def test_metric_dimension_known_values():
    assert rd.metric_dimension(rd.generate("path", 5)) == (1, [0])
    assert rd.metric_dimension(rd.generate("bipyramid", 5))[0] == 3
    assert rd.metric_dimension(rd.generate("bipyramid", 7))[0] == 4
    assert rd.metric_dimension(rd.generate("complete_bipartite_2", 5))[0] == 3


def test_solver_matches_bruteforce():
    for family, n in [("cycle", 6), ("wheel", 5), ("stacked_triangulation", 7)]:
        g = rd.generate(family, n, seed=11)
        assert rd.metric_dimension(g)[0] == rd.metric_dimension_bruteforce(g)[0]


def test_resolving_checks():
    c4 = rd.generate("cycle", 4)
    ok, witness = rd.is_resolving_set(c4, [0])
    assert not ok
    assert tuple(witness) == (1, 3)
    ok, witness = rd.is_resolving_set(c4, [0, 1])
    assert ok and witness is None
    assert rd.resolved_vertices(c4, [0]) == [0, 2]


def test_alike_machinery():
    c4 = rd.generate("cycle", 4)
    assert rd.alike_partition(c4) == [[0, 2], [1, 3]]
    assert rd.alike_lower_bound(rd.generate("complete_bipartite_2", 5)) == 3


def test_constructions_verify():
    hexg = rd.generate("max_outerplanar", 6, seed=3)
    cycle = rd.hamiltonian_cycle(hexg)
    rep = rd.hamiltonian_outerplanar_set(hexg, cycle)
    assert rep["verified"] and len(rep["set"]) == 3

    rep = rd.outerplanar_set(rd.generate("cycle", 6))
    assert rep["verified"] and len(rep["set"]) <= 4

    rep = rd.maximal_planar_set(rd.generate("stacked_triangulation", 8, seed=5))
    assert rep["verified"] and len(rep["set"]) <= 6

    rep = rd.bipyramid_set(5)
    assert rep["verified"] and rep["set"] == [0, 2, 6]


def test_construction_failure_is_raised():
    c4 = rd.generate("cycle", 4)
    with pytest.raises(rd.Error):
        rd.hamiltonian_outerplanar_set(c4, [0, 1, 2, 3])


def test_recognition():
    octa = rd.generate("bipyramid", 4)
    dec = rd.is_bipyramid(octa)
    assert dec is not None
    apexes, rim = dec
    assert tuple(apexes) == (0, 1) and len(rim) == 4
    assert rd.is_bipyramid(rd.generate("complete", 5)) is None
    assert rd.has_minor(rd.generate("complete", 4), "K4")
    assert not rd.has_minor(rd.generate("cycle", 6), "K4")


def test_coloring():
    c5 = rd.generate("cycle", 5)
    assert rd.color_with(c5, 2) is None
    colors = rd.color_with(c5, 3)
    assert colors is not None
    assert all(colors[u] != colors[v] for u, v in c5.edges())
    assert max(rd.color_outerplanar(rd.generate("max_outerplanar", 9, seed=2))) <= 2


def test_json_round_trip():
    g = rd.generate("stacked_triangulation", 6, seed=9)
    back = rd.Graph.from_json(g.to_json())
    assert back.n == g.n
    assert back.edges() == g.edges()
