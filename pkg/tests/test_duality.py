from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrowribbon.duality import (
    CanonicalFormTooLarge,
    canonical_form,
    contract,
    delete,
    equivalent,
    is_bridge,
    is_loop,
    is_orientable_loop,
    is_trivial_orientable_loop,
    natural_dual,
    partial_dual,
)
from arrowribbon.ribbon import GraphError, from_rotation_system, random_graph
from corpus import graphs


def cf(G):
    return canonical_form(G, max_edges=None)


def n_arrows(G) -> int:
    return sum(len(w) for w in G.arrows.values()) + sum(len(w) for w in G.lone)


def tree():
    return from_rotation_system({"vertices": [{"id": "u", "rotation": [{"end": "1.0"}]},
                                              {"id": "v", "rotation": [{"end": "1.1"}]}],
                                 "edges": [{"id": 1}]})


def loop(twist=False, **edge):
    return from_rotation_system({
        "vertices": [{"id": "v", "rotation": [{"end": "1.0"}, {"end": "1.1"}]}],
        "edges": [{"id": 1, "twist": twist, **edge}]})


def theta():
    return from_rotation_system({
        "vertices": [{"id": "u", "rotation": [{"end": f"{e}.0"} for e in (1, 2, 3)]},
                     {"id": "v", "rotation": [{"end": f"{e}.1"} for e in (3, 2, 1)]}],
        "edges": [{"id": e} for e in (1, 2, 3)]})


def decorated_non_loop():
    """Edge 1 joins two vertices that also carry a loop each; arrows everywhere."""
    return from_rotation_system({
        "vertices": [
            {"id": "u", "rotation": [{"end": "1.0", "seg_arrows": ["W"], "free_arrows": ["A"]},
                                     {"end": "2.0"}, {"end": "2.1", "free_arrows": ["W"]}]},
            {"id": "v", "rotation": [{"end": "1.1", "seg_arrows": ["A"]},
                                     {"end": "3.0"}, {"end": "3.1"}]}],
        "edges": [{"id": 1, "sideL": ["W"], "sideR": ["A"]}, {"id": 2}, {"id": 3, "twist": True}]})


SPEC_FOR_RELABEL = {
    "vertices": [
        {"id": "u", "rotation": [{"end": "1.0", "seg_arrows": ["W"]}, {"end": "2.0"},
                                 {"end": "1.1", "free_arrows": ["A", "W"]}, {"end": "3.0"}]},
        {"id": "w", "rotation": [{"end": "2.1"}, {"end": "3.1", "seg_arrows": ["A"]}]}],
    "edges": [{"id": 1, "twist": True}, {"id": 2, "sideL": ["W"]}, {"id": 3, "sideR": ["W"]}],
}


class TestDeleteContract:
    def test_delete_tree_edge(self):
        H = delete(tree(), 1)
        assert (H.n_vertices, H.n_edges) == (2, 0)

    def test_delete_non_loop_keeps_attaching_arrows_only(self):
        G = decorated_non_loop()
        H = delete(G, 1)
        # Two free-side arrows go with the edge; the two segment arrows stay.
        assert n_arrows(H) == n_arrows(G) - 2
        assert H.n_vertices == 2

    def test_contract_non_loop_keeps_free_side_arrows_only(self):
        G = decorated_non_loop()
        H = contract(G, 1)
        assert n_arrows(H) == n_arrows(G) - 2
        assert H.n_vertices == 1

    def test_delete_loop_with_free_side_arrows(self):
        H = delete(loop(sideL=["W"], sideR=["A"]), 1)
        assert H.n_edges == 0
        assert H.lone == ((),)

    def test_contract_tree_edge(self):
        H = contract(tree(), 1)
        assert (H.n_vertices, H.n_edges) == (1, 0)

    def test_contract_trivial_loop_splits_vertex(self):
        G = loop()
        H = contract(G, 1)
        assert H.n_vertices == 2
        assert H.components_count(0) == G.components_count(1) + 1

    def test_contract_orientable_loop_drops_attaching_arrows(self):
        G = from_rotation_system({
            "vertices": [{"id": "v", "rotation": [
                {"end": "1.0", "seg_arrows": ["A"]}, {"end": "1.1", "free_arrows": ["W"]}]}],
            "edges": [{"id": 1, "sideL": ["W"], "sideR": ["A"]}]})
        H = contract(G, 1)
        assert n_arrows(H) == n_arrows(G) - 1

    def test_unknown_edge(self):
        with pytest.raises(GraphError, match="unknown edge"):
            delete(tree(), 9)
        with pytest.raises(GraphError):
            partial_dual(tree(), [9])


class TestLoopPredicates:
    def test_kinds(self):
        assert not is_loop(tree(), 1) and is_bridge(tree(), 1)
        assert is_loop(loop(), 1) and is_orientable_loop(loop(), 1)
        assert is_trivial_orientable_loop(loop(), 1)
        assert is_loop(loop(True), 1) and not is_orientable_loop(loop(True), 1)

    def test_interleaved_loops_are_not_trivial(self):
        G = from_rotation_system({
            "vertices": [{"id": "v", "rotation": [{"end": x} for x in ("1.0", "2.0", "1.1", "2.1")]}],
            "edges": [{"id": 1}, {"id": 2}]})
        assert is_orientable_loop(G, 1)
        assert not is_trivial_orientable_loop(G, 1)


class TestPartialDual:
    def test_empty_set(self):
        G = decorated_non_loop()
        assert cf(partial_dual(G, [])) == cf(G)

    def test_non_loop_becomes_loop(self):
        G = partial_dual(tree(), [1])
        assert G.n_vertices == 1 and is_loop(G, 1)

    def test_theta_dual(self):
        G = natural_dual(theta())
        assert (G.n_vertices, G.n_edges) == (3, 3)

    def test_isolated_vertex_dual(self):
        G = from_rotation_system({"vertices": [{"id": "v"}], "edges": []})
        assert cf(natural_dual(G)) == cf(G)

    def test_preserves_edges_and_signs(self):
        for G in graphs(seed=5, count=30, signed=True):
            D = G.edge_ids[::2]
            H = partial_dual(G, D)
            assert H.edge_ids == G.edge_ids
            assert H.signs == G.signs

    @settings(max_examples=40)
    @given(st.integers(0, 10**6), st.integers(0, 255), st.integers(0, 255))
    def test_group_action(self, seed, m1, m2):
        G = random_graph(random.Random(seed), 3, 5)
        D1, D2 = G.edges_of_mask(m1 & 31), G.edges_of_mask(m2 & 31)
        assert cf(partial_dual(partial_dual(G, D1), D2)) == cf(partial_dual(G, D1 ^ D2))

    def test_vertices_are_boundary_components(self):
        for G in graphs(seed=7, count=60, max_edges=6):
            for mask in range(0, 1 << G.n_edges, 3):
                D = G.edges_of_mask(mask)
                assert partial_dual(G, D).n_vertices == G.boundary_walks(D).bc

    def test_orientability_and_components(self):
        for G in graphs(seed=8, count=60, max_edges=6):
            full = (1 << G.n_edges) - 1
            for mask in range(1 << G.n_edges):
                H = partial_dual(G, G.edges_of_mask(mask))
                assert H.is_orientable() == G.is_orientable()
                assert H.components_count(full) == G.components_count(full)

    def test_mixed_identities(self):
        for G in graphs(seed=9, count=40, max_edges=5):
            E = list(G.edge_ids)
            for e in E:
                rest = [x for x in E if x != e]
                D = rest[::2]
                assert cf(partial_dual(contract(G, e), D)) == cf(contract(partial_dual(G, D), e))
                assert cf(contract(partial_dual(G, D), e)) == cf(delete(partial_dual(G, D + [e]), e))
                assert cf(partial_dual(delete(G, e), D)) == cf(delete(partial_dual(G, D), e))
                assert cf(delete(partial_dual(G, D), e)) == cf(contract(partial_dual(G, D + [e]), e))


class TestCanonicalForm:
    def test_relabel_and_rotate(self):
        G = from_rotation_system(SPEC_FOR_RELABEL)
        names = {"1": "p", "2": "q", "3": "r"}

        def rename(end):
            e, j = end.split(".")
            return f"{names[e]}.{j}"

        spec = {
            "vertices": [
                {"id": "second", "rotation": [
                    dict(x, end=rename(x["end"])) for x in
                    SPEC_FOR_RELABEL["vertices"][1]["rotation"][1:]
                    + SPEC_FOR_RELABEL["vertices"][1]["rotation"][:1]]},
                {"id": "first", "rotation": [
                    dict(x, end=rename(x["end"])) for x in
                    SPEC_FOR_RELABEL["vertices"][0]["rotation"][2:]
                    + SPEC_FOR_RELABEL["vertices"][0]["rotation"][:2]]}],
            "edges": [dict(x, id=names[str(x["id"])]) for x in SPEC_FOR_RELABEL["edges"]][::-1],
        }
        assert cf(from_rotation_system(spec)) == cf(G)
        assert equivalent(from_rotation_system(spec), G)

    def test_arrow_direction_matters(self):
        spec = dict(SPEC_FOR_RELABEL, edges=[{"id": 1, "twist": True}, {"id": 2, "sideL": ["A"]},
                                             {"id": 3, "sideR": ["W"]}])
        assert cf(from_rotation_system(spec)) != cf(from_rotation_system(SPEC_FOR_RELABEL))

    def test_loop_vs_non_loop(self):
        assert cf(loop()) != cf(tree())
        assert cf(loop()) != cf(loop(True))

    def test_size_bound(self):
        G = random_graph(random.Random(0), 2, 9)
        with pytest.raises(CanonicalFormTooLarge):
            canonical_form(G)
        assert canonical_form(G, max_edges=9) == canonical_form(G, max_edges=None)

    def test_double_natural_dual(self):
        for G in graphs(seed=10, count=40):
            assert cf(natural_dual(natural_dual(G))) == cf(G)
