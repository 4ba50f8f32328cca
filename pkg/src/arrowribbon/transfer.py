"""From a virtual link diagram and a state to a signed arrow ribbon graph.

The corners of the edge for crossing ``c`` are the four arms of ``c``.  The
smoothing chosen by the state supplies the attaching arcs, the other
smoothing supplies the free edge arcs, and the strand segments between
crossings supply the free vertex arcs.  Vertices are therefore exactly the
state circles, and the boundary of a spanning subgraph ``F`` is the set of
state circles of the state that differs from ``s`` on ``F``.  The two arrows
of a crossing sit on the arcs of whichever smoothing is disoriented and
point counterclockwise around the crossing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .duality import canonical_form, partial_dual
from .graphpoly import arrow_dichromatic, signed_bollobas_riordan
from .polyring import K_var, LaurentPoly, substitute, var, b_var
from .ribbon import ArrowRibbonGraph, make_graph
from .vlink import (
    _PARTNER,
    VirtualLinkDiagram,
    _Arms,
    all_states,
    arrow_bracket,
    is_oriented_smoothing,
)

__all__ = [
    "Report",
    "named_state",
    "parse_state",
    "state_graph",
    "verify_state_duality",
    "thistlethwaite_rhs",
    "thistlethwaite_verify",
    "thistlethwaite_all_states",
    "specialization_all_A",
    "specialization_seifert",
]

A_, B_, d_ = var("A"), var("B"), var("d")
X_, Y_, Z_, a_, c_ = var("X"), var("Y"), var("Z"), var("a"), var("c")


@dataclass(frozen=True)
class Report:
    """Outcome of an identity check: both sides and whether they agree."""

    name: str
    lhs: LaurentPoly
    rhs: LaurentPoly

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def named_state(L: VirtualLinkDiagram, name: str) -> dict:
    """``allA``, ``allB``, ``seifert`` (oriented everywhere) or ``disoriented``."""
    out = {}
    for c in L.crossings:
        sg = L.sign(c)
        if name == "allA":
            out[c] = "A"
        elif name == "allB":
            out[c] = "B"
        elif name == "seifert":
            out[c] = "A" if sg > 0 else "B"
        elif name == "disoriented":
            out[c] = "B" if sg > 0 else "A"
        else:
            raise ValueError(f"unknown state name {name!r}")
    return out


def parse_state(L: VirtualLinkDiagram, text: str) -> dict:
    """State from a name or a comma-separated ``A``/``B`` list in crossing order."""
    text = text.strip()
    if text in ("allA", "allB", "seifert", "disoriented"):
        return named_state(L, text)
    letters = [x.strip() for x in text.split(",")] if text else []
    cs = L.crossings
    if len(letters) != len(cs) or any(x not in ("A", "B") for x in letters):
        raise ValueError(f"state needs {len(cs)} comma-separated A/B letters, got {text!r}")
    return dict(zip(cs, letters))


def state_graph(L: VirtualLinkDiagram, s: Mapping[int, str]) -> ArrowRibbonGraph:
    """Signed arrow ribbon graph ``G_L^s``; edge ids are crossing ids."""
    cs = L.crossings
    idx = {c: i for i, c in enumerate(cs)}
    for c in cs:
        if s.get(c) not in ("A", "B"):
            raise KeyError(f"state does not choose A or B at crossing {c}")
    n = 4 * len(cs)
    attach = [0] * n
    free = [0] * n
    corner = [0] * n
    arcs = []
    signs = []
    for c in cs:
        base = 4 * idx[c]
        ch = s[c]
        other = "B" if ch == "A" else "A"
        for p in range(4):
            attach[base + p] = base + _PARTNER[ch][p]
            free[base + p] = base + _PARTNER[other][p]
        signs.append(1 if ch == "A" else -1)
        arrowed = other if is_oriented_smoothing(L.sign(c), ch) else ch
        for p in range(4):
            q = _PARTNER[arrowed][p]
            if q == (p + 1) % 4:
                arcs.append(("e", base + p, base + q, (True,)))
    arms = _Arms(L)
    for (c, p), (c2, p2) in arms.seg.items():
        corner[4 * idx[c] + p] = 4 * idx[c2] + p2
    lone = [() for comp in L.components if not comp]
    return make_graph(cs, attach, free, corner, arcs, lone, signs, None)


def _delta(s: Mapping, t: Mapping) -> list:
    return [c for c in s if s[c] != t[c]]


def verify_state_duality(L: VirtualLinkDiagram, s: Mapping[int, str], t: Mapping[int, str],
                         max_edges: int | None = 8) -> bool:
    """``G_L^s`` dualised on the crossings where ``s`` and ``t`` differ equals ``G_L^t``.

    Edge signs record the state, so they are left out of the comparison.
    """
    lhs = partial_dual(state_graph(L, s), _delta(s, t))
    rhs = state_graph(L, t)
    return (canonical_form(lhs, signs=False, max_edges=max_edges)
            == canonical_form(rhs, signs=False, max_edges=max_edges))


def thistlethwaite_rhs(L: VirtualLinkDiagram, s: Mapping[int, str]) -> LaurentPoly:
    """``A^{e+} B^{e-} d^{-1} A_G(1, b, d, K)`` with ``b_e = B/A`` on ``+``, ``A/B`` on ``-``."""
    G = state_graph(L, s)
    A, B = LaurentPoly.of(A_), LaurentPoly.of(B_)
    mapping: dict = {a_: 1, c_: LaurentPoly.of(d_)}
    e_plus = 0
    for e, sg in zip(G.edge_ids, G.signs):
        if sg > 0:
            e_plus += 1
            mapping[b_var(e)] = B * A.inverse()
        else:
            mapping[b_var(e)] = A * B.inverse()
    pref = LaurentPoly.monomial({A_: e_plus, B_: G.n_edges - e_plus, d_: -1})
    return pref * substitute(arrow_dichromatic(G), mapping)


def thistlethwaite_verify(L: VirtualLinkDiagram, s: Mapping[int, str]) -> Report:
    return Report("thistlethwaite", arrow_bracket(L), thistlethwaite_rhs(L, s))


def thistlethwaite_all_states(L: VirtualLinkDiagram) -> list[tuple[dict, Report]]:
    lhs = arrow_bracket(L)
    return [(s, Report("thistlethwaite", lhs, thistlethwaite_rhs(L, s))) for s in all_states(L)]


def specialization_all_A(L: VirtualLinkDiagram) -> Report:
    """Arrow bracket as a sum over spanning subgraphs of the all-A graph."""
    G = state_graph(L, named_state(L, "allA"))
    m = G.n_edges
    acc: dict = {}
    for mask in range(1 << m):
        _, bc, ks = G.state_profile(mask)
        f = bin(mask).count("1")
        exps: dict = {A_: m - f, B_: f, d_: bc - 1}
        for x in ks:
            if x:
                kv = K_var(Fraction(x, 2))
                exps[kv] = exps.get(kv, 0) + 1
        mono = LaurentPoly.monomial(exps)
        acc[mono] = acc.get(mono, 0) + 1
    rhs = LaurentPoly()
    for mono, cnt in acc.items():
        rhs = rhs + mono * cnt
    return Report("all-A", arrow_bracket(L), rhs)


def specialization_seifert(L: VirtualLinkDiagram) -> Report:
    """``A^{n(G)} B^{r(G)} d^{k(G)-1} sBR_G(Ad/B, Bd/A, 1/d, K)`` on the Seifert-state graph."""
    G = state_graph(L, named_state(L, "seifert"))
    full = (1 << G.n_edges) - 1
    k = G.components_count(full)
    r = G.n_vertices - k
    nG = G.n_edges - r
    mapping = {X_: LaurentPoly.monomial({A_: 1, d_: 1, B_: -1}),
               Y_: LaurentPoly.monomial({B_: 1, d_: 1, A_: -1}),
               Z_: LaurentPoly.monomial({d_: -1})}
    rhs = LaurentPoly.monomial({A_: nG, B_: r, d_: k - 1}) * substitute(signed_bollobas_riordan(G), mapping)
    return Report("seifert", arrow_bracket(L), rhs)
