from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arrowribbon.duality import canonical_form
from arrowribbon.ribbon import (
    AGAINST,
    WITH,
    GraphError,
    from_arrow_presentation,
    from_json,
    from_rotation_system,
    reduce_cyclic_arrow_word,
    reduced_count,
)
from corpus import DATA, graphs

W, A = WITH, AGAINST


def loop_graph(twist: bool = False, **edge):
    return from_rotation_system({
        "vertices": [{"id": "v", "rotation": [{"end": "1.0"}, {"end": "1.1"}]}],
        "edges": [{"id": 1, "twist": twist, **edge}],
    })


def theta_graph():
    return from_rotation_system({
        "vertices": [{"id": "u", "rotation": [{"end": f"{e}.0"} for e in (1, 2, 3)]},
                     {"id": "v", "rotation": [{"end": f"{e}.1"} for e in (3, 2, 1)]}],
        "edges": [{"id": e} for e in (1, 2, 3)],
    })


@lru_cache(maxsize=None)
def brute_force_lengths(word: tuple) -> frozenset:
    """Every final length reachable by cancelling cyclic neighbours in any order."""
    n = len(word)
    out = set()
    for i in range(n):
        j = (i + 1) % n
        if n >= 2 and i != j and word[i] == word[j]:
            if j > i:
                rest = word[:i] + word[j + 1:]
            else:
                rest = word[1:i]
            out |= brute_force_lengths(rest)
    return frozenset(out) if out else frozenset({n})


class TestConstruction:
    def test_isolated_vertex(self):
        G = from_rotation_system({"vertices": [{"id": "v"}], "edges": []})
        assert (G.n_vertices, G.n_edges) == (1, 0)

    def test_adjacent_loop(self):
        G = loop_graph()
        assert (G.n_vertices, G.n_edges) == (1, 1)

    def test_unattached_edge_end(self):
        with pytest.raises(GraphError, match="not attached"):
            from_rotation_system({"vertices": [{"id": "v", "rotation": [{"end": "1.0"}]}],
                                  "edges": [{"id": 1}]})

    def test_unknown_edge(self):
        with pytest.raises(GraphError, match="unknown edge"):
            from_rotation_system({"vertices": [{"id": "v", "rotation": [{"end": "7.0"}]}],
                                  "edges": []})

    def test_end_used_twice(self):
        with pytest.raises(GraphError, match="twice"):
            from_rotation_system({"vertices": [{"id": "v", "rotation": [{"end": "1.0"},
                                                                        {"end": "1.0"}]}],
                                  "edges": [{"id": 1}]})

    def test_malformed_arrows(self):
        with pytest.raises(GraphError, match="arrow"):
            loop_graph(sideL=["X"])

    def test_bad_json(self):
        with pytest.raises(GraphError, match="JSON"):
            from_json("{not json")

    def test_data_files_load(self):
        for name in ("vertex.json", "triangle.json", "example_graph.json"):
            G = from_json((DATA / name).read_text())
            assert G.n_vertices >= 1

    def test_spec_round_trip(self):
        for G in graphs(seed=3, count=40):
            H = from_json(json.dumps(G.to_spec()))
            assert canonical_form(H, max_edges=None) == canonical_form(G, max_edges=None)


class TestArrowPresentation:
    def test_interleaved_loops_give_torus(self):
        G = from_arrow_presentation([[(1, "W"), (2, "W"), (1, "W"), (2, "W")]])
        assert G.n_vertices == 1
        k, bc, r, n, genus_like, orientable = G.state_stats([1, 2])
        assert (k, bc, n, genus_like, orientable) == (1, 1, 2, 2, True)

    def test_parallel_arrows_give_annulus(self):
        G = from_arrow_presentation([[(1, "W"), (1, "W")]])
        assert G.state_stats([1])[1] == 2

    def test_opposite_arrows_give_moebius(self):
        G = from_arrow_presentation([[(1, "W"), (1, "A")]])
        assert G.state_stats([1])[1] == 1
        assert not G.is_orientable()

    def test_label_once(self):
        with pytest.raises(GraphError, match="occurs 1 times"):
            from_arrow_presentation([[(1, "W"), (2, "W"), (2, "W")]])


class TestWordReduction:
    @pytest.mark.parametrize("word, index", [
        ((), 0), ((W, A), 1), ((W, W), 0), ((W, A, W, A), 2), ((W, W, A), Fraction(1, 2)),
        ((A,), Fraction(1, 2)), ((W, A, A, W), 0),
    ])
    def test_examples(self, word, index):
        assert reduce_cyclic_arrow_word(word) == index

    def test_matches_brute_force_up_to_length_10(self):
        for n in range(11):
            for word in product((W, A), repeat=n):
                assert brute_force_lengths(word) == {reduced_count(word)}, word

    @given(st.lists(st.booleans(), max_size=30), st.integers(0, 30))
    def test_rotation_invariant(self, word, k):
        k %= max(len(word), 1)
        assert reduced_count(word) == reduced_count(word[k:] + word[:k])

    @given(st.lists(st.booleans(), max_size=30))
    def test_parity(self, word):
        assert reduced_count(word) % 2 == len(word) % 2


class TestBoundary:
    def test_isolated_vertex(self):
        G = from_rotation_system({"vertices": [{"id": "v"}], "edges": []})
        rep = G.boundary_walks()
        assert (rep.k, rep.bc) == (1, 1)
        assert rep.components[0].arrow_word == ()

    def test_annulus(self):
        rep = loop_graph().boundary_walks([1])
        assert (rep.bc, rep.k, rep.n, rep.genus_like) == (2, 1, 1, 0)

    def test_moebius_band(self):
        rep = loop_graph(twist=True).boundary_walks([1])
        assert (rep.bc, rep.genus_like, rep.orientable) == (1, 1, False)

    def test_theta(self):
        k, bc, r, n, genus_like, _ = theta_graph().state_stats([1, 2, 3])
        assert (k, bc, n, genus_like) == (1, 3, 2, 0)

    def test_empty_state(self):
        G = theta_graph()
        k, bc, r, n, _, _ = G.state_stats([])
        assert (k, r, n) == (G.n_vertices, 0, 0)

    def test_tree(self):
        G = from_rotation_system({"vertices": [{"id": "u", "rotation": [{"end": "1.0"}]},
                                               {"id": "v", "rotation": [{"end": "1.1"}]}],
                                  "edges": [{"id": 1}]})
        k, bc, r, n, _, _ = G.state_stats([1])
        assert (k, r, n) == (1, 1, 0)

    def test_arrow_words_collected(self):
        rep = loop_graph(sideL=["W"], sideR=["A"]).boundary_walks([1])
        assert sorted(len(c.arrow_word) for c in rep.components) == [1, 1]

    def test_genus_like_on_random_graphs(self):
        for G in graphs(seed=11, count=60, max_edges=6):
            for mask in range(1 << G.n_edges):
                rep = G.boundary_walks(G.edges_of_mask(mask))
                assert rep.genus_like >= 0
                if rep.orientable:
                    assert rep.genus_like % 2 == 0
                assert rep.bc == len(rep.components)
                assert rep.r + rep.k == G.n_vertices
