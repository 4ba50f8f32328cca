from __future__ import annotations

import pytest

from arrowribbon.transfer import (
    named_state,
    parse_state,
    specialization_all_A,
    specialization_seifert,
    state_graph,
    thistlethwaite_all_states,
    thistlethwaite_verify,
    verify_state_duality,
)
from arrowribbon.vlink import all_states, arrow_bracket, smooth
from corpus import CLASSICAL, CORPUS, diagram


class TestStateGraph:
    def test_all_A_of_positive_trefoil(self):
        L = diagram("trefoil")
        G = state_graph(L, named_state(L, "allA"))
        assert (G.n_vertices, G.n_edges) == (2, 3)
        assert G.signs == (1, 1, 1)
        assert G.state_stats(G.edge_ids)[4] == 0

    def test_all_A_of_left_trefoil(self):
        L = diagram("left trefoil")
        G = state_graph(L, named_state(L, "allA"))
        assert (G.n_vertices, G.n_edges) == (3, 3)

    def test_vertices_are_state_circles(self):
        for name in CORPUS:
            L = diagram(name)
            for s in all_states(L):
                assert state_graph(L, s).n_vertices == smooth(L, s).delta

    def test_signs_record_state(self):
        L = diagram("kishino")
        s = parse_state(L, "A,B,B,A")
        G = state_graph(L, s)
        assert G.signs == tuple(1 if s[c] == "A" else -1 for c in G.edge_ids)

    def test_disoriented_state_is_arrow_presentation(self):
        for name in CORPUS:
            L = diagram(name)
            G = state_graph(L, named_state(L, "disoriented"))
            for (kind, p, q), word in G.arrows.items():
                if word:
                    assert kind == "e" and G.attach[p] == q

    def test_classical_graphs(self):
        # Every state graph of a classical diagram is orientable; the all-A and
        # all-B graphs are plane, mixed states are partial duals of them.
        for name in CLASSICAL:
            L = diagram(name)
            for s in all_states(L):
                assert state_graph(L, s).is_orientable()
            for extreme in ("allA", "allB"):
                G = state_graph(L, named_state(L, extreme))
                assert G.state_stats(G.edge_ids)[4] == 0

    def test_virtual_graphs_are_not_all_plane(self):
        L = diagram("virtual trefoil")
        genera = {state_graph(L, s).state_stats(L.crossings)[4] for s in all_states(L)}
        assert genera != {0}

    def test_parse_state_errors(self):
        L = diagram("trefoil")
        with pytest.raises(ValueError):
            parse_state(L, "A,B")
        with pytest.raises(ValueError):
            parse_state(L, "A,B,C")
        with pytest.raises(ValueError):
            named_state(L, "allC")


class TestStateDuality:
    def test_same_state(self):
        L = diagram("figure-eight")
        s = named_state(L, "seifert")
        assert verify_state_duality(L, s, s)

    def test_trefoil_extremes(self):
        L = diagram("trefoil")
        assert verify_state_duality(L, named_state(L, "allA"), named_state(L, "allB"))

    def test_virtual_trefoil_all_pairs(self):
        L = diagram("virtual trefoil")
        states = list(all_states(L))
        assert all(verify_state_duality(L, s, t) for s in states for t in states)


class TestThistlethwaite:
    def test_unknot(self):
        rep = thistlethwaite_verify(diagram("unknot"), {})
        assert rep.lhs == rep.rhs == 1

    @pytest.mark.parametrize("name", ["left trefoil", "virtual trefoil", "kishino", "hopf"])
    def test_every_state(self, name):
        reports = thistlethwaite_all_states(diagram(name))
        assert len(reports) == 2 ** diagram(name).n_crossings
        assert all(rep.equal for _, rep in reports)

    def test_lhs_is_arrow_bracket(self):
        L = diagram("kishino")
        rep = thistlethwaite_verify(L, named_state(L, "seifert"))
        assert rep.lhs == arrow_bracket(L)


class TestSpecializations:
    @pytest.mark.parametrize("name", ["unknot", "trefoil", "virtual trefoil"])
    def test_equal(self, name):
        L = diagram(name)
        assert specialization_all_A(L).equal
        assert specialization_seifert(L).equal

    def test_unknot_values(self):
        L = diagram("unknot")
        assert specialization_all_A(L).rhs == 1
        assert specialization_seifert(L).rhs == 1
