import random
from itertools import combinations

import pytest
from hypothesis import given, settings

from genturan import (
    ForbiddenFamily,
    Graph,
    SizeLimitError,
    berge_tutte_certificate,
    build_H,
    enumerate_family_free,
    max_matching,
    max_matching_by_enumeration,
    maximum_matching_edges,
)

from conftest import cycle_graph, graphs, random_graph, star_graph

ALL_GRAPHS = ForbiddenFamily(clique_order=2)


def _is_matching(g: Graph, edges) -> bool:
    seen = set()
    for u, v in edges:
        if not g.has_edge(u, v) or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


class TestMaxMatching:
    def test_small_named_graphs(self):
        assert max_matching(cycle_graph(5)) == 2
        assert max_matching(star_graph(8)) == 1
        assert max_matching(Graph.complete(7)) == 3
        assert max_matching(Graph(6, [(0, 1), (2, 3), (4, 5)])) == 3
        assert max_matching(Graph(3)) == 0

    def test_petersen_graph_has_perfect_matching(self):
        outer = [(i, (i + 1) % 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        assert max_matching(Graph(10, outer + inner + spokes)) == 5

    def test_odd_blossom_chain(self):
        # two triangles joined by a path: needs blossom handling
        g = Graph(
            8,
            [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (5, 7), (6, 7)],
        )
        assert max_matching(g) == max_matching_by_enumeration(g) == 4

    def test_h_graph_matching_number(self):
        assert max_matching(build_H(12, 7, 3)) == 3
        for (n, k, a) in [(10, 5, 2), (12, 6, 2), (9, 8, 4), (30, 9, 3)]:
            assert max_matching(build_H(n, k, a)) == k // 2

    def test_exhaustive_all_labeled_graphs_n_le_5(self):
        for n in range(1, 6):
            pairs = list(combinations(range(n), 2))
            for mask in range(1 << len(pairs)):
                g = Graph(n, [e for i, e in enumerate(pairs) if (mask >> i) & 1])
                assert max_matching(g) == max_matching_by_enumeration(g)

    def test_exhaustive_classes_n_6_7(self):
        for n in (6, 7):
            for g in enumerate_family_free(n, ALL_GRAPHS):
                assert max_matching(g) == max_matching_by_enumeration(g)

    def test_random_graphs_up_to_12(self):
        rng = random.Random(20240817)
        for _ in range(150):
            n = rng.randrange(2, 13)
            g = random_graph(rng, n, rng.choice([0.15, 0.3, 0.5, 0.8]))
            assert max_matching(g) == max_matching_by_enumeration(g)

    def test_enumeration_oracle_size_limit(self):
        with pytest.raises(SizeLimitError):
            max_matching_by_enumeration(Graph(13))

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=9))
    def test_witness_edges_form_maximum_matching(self, g):
        edges = maximum_matching_edges(g)
        assert _is_matching(g, edges)
        assert len(edges) == max_matching_by_enumeration(g)


class TestBergeTutteCertificate:
    def test_odd_clique_empty_set(self):
        for k in (1, 2, 3):
            cert = berge_tutte_certificate(Graph.complete(2 * k + 1), k)
            assert cert is not None
            assert cert.vertex_set == ()
            assert cert.component_sizes == (2 * k + 1,)

    def test_perfect_matching_graph_has_no_certificate(self):
        s = 2
        g = Graph(2 * s + 2, [(2 * i, 2 * i + 1) for i in range(s + 1)])
        assert berge_tutte_certificate(g, s) is None

    def test_h_graph_example(self):
        cert = berge_tutte_certificate(build_H(12, 5, 2), 2)
        assert cert is not None
        assert cert.vertex_set == (0, 1)
        assert sorted(cert.component_sizes) == [1] * 10
        assert cert.slack == 0
        assert cert.isolated_count == 10
        assert cert.large_component_sizes == ()

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            berge_tutte_certificate(Graph(21), 3)

    def test_iff_on_all_classes_up_to_6(self):
        for n in range(1, 7):
            for g in enumerate_family_free(n, ALL_GRAPHS):
                nu = max_matching(g)
                for s in range(0, n // 2 + 1):
                    cert = berge_tutte_certificate(g, s)
                    if nu <= s:
                        assert cert is not None and cert.slack >= 0
                        assert sum(cert.component_sizes) + len(cert.vertex_set) == n
                    else:
                        assert cert is None

    def test_component_structure_bound(self):
        # deleting X leaves at most 3s non-isolated-component vertices
        rng = random.Random(99)
        for _ in range(120):
            n = rng.randrange(2, 11)
            g = random_graph(rng, n, rng.choice([0.2, 0.4, 0.6]))
            nu = max_matching(g)
            for s in range(nu, min(n, nu + 2) + 1):
                cert = berge_tutte_certificate(g, s)
                assert cert is not None
                big = sum(cert.large_component_sizes)
                assert len(cert.vertex_set) + big <= 3 * s
                assert cert.isolated_count >= n - 3 * s
