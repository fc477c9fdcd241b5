from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ssgraph import Graph, SplitMix64, parse_edge_list, write_edge_list, read_edge_list

from oracles import build_graph, chi_square_critical, chi_square_statistic


# -- construction -----------------------------------------------------------


def test_new_graph_empty():
    g = Graph(5)
    assert g.n == 5
    assert g.edge_count == 0
    assert g.degrees() == [0] * 5


def test_new_graph_single_vertex_cannot_gain_edges():
    g = Graph(1)
    assert g.add_edge(0, 0) is False
    assert g.edge_count == 0


def test_new_graph_large_degree_sum_zero():
    assert sum(Graph(500).degrees()) == 0


def test_zero_vertices_rejected():
    with pytest.raises(ValueError):
        Graph(0)


# -- add_edge / remove_edge ---------------------------------------------------


def test_add_edge_updates_degrees():
    g = Graph(3)
    assert g.add_edge(0, 1) is True
    assert g.degrees() == [1, 1, 0]
    assert g.has_edge(0, 1) and g.has_edge(1, 0)


def test_add_self_loop_rejected():
    g = Graph(3)
    assert g.add_edge(0, 0) is False
    assert g.edge_count == 0


def test_add_parallel_edge_rejected():
    g = Graph(3)
    assert g.add_edge(0, 1) is True
    assert g.add_edge(1, 0) is False
    assert g.edge_count == 1


def test_add_edge_out_of_range():
    g = Graph(3)
    with pytest.raises(ValueError):
        g.add_edge(0, 3)
    with pytest.raises(ValueError):
        g.add_edge(-1, 1)


def test_remove_edge_restores_degrees():
    g = Graph(3)
    g.add_edge(0, 1)
    g.remove_edge(0, 1)
    assert g.degrees() == [0, 0, 0]
    assert not g.has_edge(0, 1)


def test_remove_keeps_other_edges_sampleable():
    g = Graph(3)
    g.add_edge(0, 1)
    g.add_edge(1, 2)
    g.remove_edge(0, 1)
    rng = SplitMix64(0)
    assert g.sample_uniform_edge(rng) == (1, 2)


def test_remove_absent_edge_is_hard_failure():
    g = Graph(3)
    g.add_edge(0, 1)
    with pytest.raises(ValueError):
        g.remove_edge(0, 2)


# -- sampling ----------------------------------------------------------------


def test_sample_uniform_vertex_single():
    g = Graph(1)
    rng = SplitMix64(1)
    assert all(g.sample_uniform_vertex(rng) == 0 for _ in range(100))


def test_sample_uniform_vertex_distribution():
    g = Graph(4)
    rng = SplitMix64(21)
    draws = 100_000
    observed = Counter(g.sample_uniform_vertex(rng) for _ in range(draws))
    for v in range(4):
        assert abs(observed[v] / draws - 0.25) < 0.01
    stat = chi_square_statistic(observed, {v: draws / 4 for v in range(4)})
    assert stat < chi_square_critical(3)


def test_sample_uniform_vertex_deterministic():
    g = Graph(10)
    rng1, rng2 = SplitMix64(5), SplitMix64(5)
    seq1 = [g.sample_uniform_vertex(rng1) for _ in range(20)]
    seq2 = [g.sample_uniform_vertex(rng2) for _ in range(20)]
    assert seq1 == seq2


def test_sample_uniform_edge_single():
    g = build_graph(2, [(0, 1)])
    rng = SplitMix64(2)
    assert all(g.sample_uniform_edge(rng) == (0, 1) for _ in range(50))


def test_sample_uniform_edge_empty_raises():
    with pytest.raises(ValueError):
        Graph(3).sample_uniform_edge(SplitMix64(0))


@pytest.mark.parametrize("edges", [
    [(0, 1), (1, 2), (0, 2)],          # triangle
    [(0, 1), (0, 2), (0, 3)],          # star spokes
])
def test_sample_uniform_edge_distribution(edges):
    g = build_graph(4, edges)
    rng = SplitMix64(33)
    draws = 90_000
    observed = Counter(g.sample_uniform_edge(rng) for _ in range(draws))
    for e in edges:
        assert abs(observed[e] / draws - 1 / 3) < 0.01
    stat = chi_square_statistic(observed, {e: draws / 3 for e in edges})
    assert stat < chi_square_critical(2)


def test_sample_vertex_by_degree_path():
    g = build_graph(3, [(0, 1), (1, 2)])
    rng = SplitMix64(44)
    draws = 100_000
    observed = Counter(g.sample_vertex_by_degree(rng) for _ in range(draws))
    assert abs(observed[0] / draws - 0.25) < 0.01
    assert abs(observed[1] / draws - 0.50) < 0.01
    assert abs(observed[2] / draws - 0.25) < 0.01
    expected = {0: draws / 4, 1: draws / 2, 2: draws / 4}
    assert chi_square_statistic(observed, expected) < chi_square_critical(2)


def test_sample_vertex_by_degree_never_isolated():
    g = build_graph(4, [(0, 1), (1, 2)])  # vertex 3 isolated
    rng = SplitMix64(8)
    assert all(g.sample_vertex_by_degree(rng) != 3 for _ in range(20_000))


def test_sample_vertex_by_degree_complete_graph_symmetric():
    g = build_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    rng = SplitMix64(55)
    draws = 100_000
    observed = Counter(g.sample_vertex_by_degree(rng) for _ in range(draws))
    for v in range(4):
        assert abs(observed[v] / draws - 0.25) < 0.01


def test_sample_vertex_by_degree_empty_raises():
    with pytest.raises(ValueError):
        Graph(2).sample_vertex_by_degree(SplitMix64(0))


def test_sample_incident_edge_degree_one():
    g = build_graph(3, [(0, 1)])
    rng = SplitMix64(6)
    assert g.sample_incident_edge(0, rng) == (0, 1)
    assert g.sample_incident_edge(1, rng) == (1, 0)


def test_sample_incident_edge_star_center():
    g = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    rng = SplitMix64(66)
    draws = 90_000
    observed = Counter(g.sample_incident_edge(0, rng)[1] for _ in range(draws))
    for spoke in (1, 2, 3):
        assert abs(observed[spoke] / draws - 1 / 3) < 0.01
    expected = {s: draws / 3 for s in (1, 2, 3)}
    assert chi_square_statistic(observed, expected) < chi_square_critical(2)


def test_sample_incident_edge_leaf_always_center():
    g = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    rng = SplitMix64(9)
    assert all(g.sample_incident_edge(2, rng) == (2, 0) for _ in range(100))


def test_sample_incident_edge_isolated_raises():
    g = build_graph(3, [(0, 1)])
    with pytest.raises(ValueError):
        g.sample_incident_edge(2, SplitMix64(0))


# -- structural invariants under mutation -------------------------------------


@st.composite
def mutation_sequences(draw):
    n = draw(st.integers(min_value=1, max_value=12))
    ops = draw(st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)),
        max_size=60,
    ))
    return n, ops


@given(mutation_sequences())
@settings(max_examples=200)
def test_consistency_under_mutation(seq):
    n, ops = seq
    g = Graph(n)
    present: set[tuple[int, int]] = set()
    for u, v in ops:
        key = (min(u, v), max(u, v))
        if key in present:
            g.remove_edge(u, v)
            present.discard(key)
        else:
            added = g.add_edge(u, v)
            assert added == (u != v)
            if added:
                present.add(key)
        assert sum(g.degrees()) == 2 * g.edge_count
    g.check_consistency()
    assert set(g.edges()) == present


def test_determinism_same_seed_identical_edge_sequences():
    def trace(seed):
        g = Graph(30)
        rng = SplitMix64(seed)
        log = []
        while g.edge_count < 50:
            u = g.sample_uniform_vertex(rng)
            v = g.sample_uniform_vertex(rng)
            if u != v and g.add_edge(u, v):
                log.append((min(u, v), max(u, v)))
        return log

    assert trace(77) == trace(77)
    assert trace(77) != trace(78)


# -- edge-list format ----------------------------------------------------------


def test_edge_list_roundtrip(tmp_path):
    g = build_graph(5, [(0, 1), (1, 2), (3, 4)])
    path = tmp_path / "g.edges"
    write_edge_list(g, path)
    g2 = read_edge_list(path)
    assert g2.n == 5
    assert set(g2.edges()) == set(g.edges())


def test_edge_list_comments_and_blanks():
    g = parse_edge_list("# header\n\n0 1\n # indented comment\n2 3\n")
    assert set(g.edges()) == {(0, 1), (2, 3)}
    assert g.n == 4


def test_edge_list_rejects_self_loop_with_line_number():
    with pytest.raises(ValueError, match="line 2"):
        parse_edge_list("0 1\n2 2\n")


def test_edge_list_rejects_duplicate_with_line_number():
    with pytest.raises(ValueError, match="line 3"):
        parse_edge_list("0 1\n1 2\n1 0\n")


def test_edge_list_rejects_garbage():
    with pytest.raises(ValueError, match="line 1"):
        parse_edge_list("zero one\n")
    with pytest.raises(ValueError, match="line 1"):
        parse_edge_list("0 1 2\n")
    with pytest.raises(ValueError, match="line 1"):
        parse_edge_list("-1 2\n")


def test_edge_list_explicit_vertex_count():
    g = parse_edge_list("0 1\n", n=10)
    assert g.n == 10
    assert g.edge_count == 1
