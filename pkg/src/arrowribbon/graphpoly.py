"""State-sum polynomials of arrow ribbon graphs.

Every polynomial here is an exact sum over all ``2^|E|`` spanning
subgraphs.  Edge weights use the edge ids as variable indices (``b[e]``,
``x[e]``, ``y[e]``, ``alpha[e]``), so deleting or contracting an edge never
renames the weights of the others.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Hashable, Iterable, Mapping

from .duality import contract, delete, is_orientable_loop, is_trivial_orientable_loop, partial_dual
from .polyring import (
    K_var,
    LaurentPoly,
    alpha_var,
    b_var,
    substitute,
    var,
    x_var,
    y_var,
)
from .ribbon import ArrowRibbonGraph

__all__ = [
    "MissingSigns",
    "StateRecord",
    "state_table",
    "arrow_dichromatic",
    "dichromatic",
    "drop_K",
    "tutte",
    "arrow_bollobas_riordan",
    "signed_bollobas_riordan",
    "br_z_sides",
    "verify_br_z_relation",
    "unit_weights",
    "signed_br_weights",
    "signed_dichromatic_substitution",
    "contraction_deletion",
    "verify_partial_duality_identity",
]

a_, c_ = var("a"), var("c")
X_, Y_, Z_, q_ = var("X"), var("Y"), var("Z"), var("q")


class MissingSigns(ValueError):
    """A signed invariant was requested for a graph without edge signs."""


@dataclass(frozen=True)
class StateRecord:
    F: frozenset
    k: int
    bc: int
    K: tuple  # doubled indices of the nonzero K factors, sorted

    @property
    def K_indices(self) -> tuple:
        return tuple(Fraction(x, 2) for x in self.K)


def _states(G: ArrowRibbonGraph):
    for mask in range(1 << G.n_edges):
        k, bc, ks = G.state_profile(mask)
        yield mask, k, bc, tuple(sorted(x for x in ks if x))


def state_table(G: ArrowRibbonGraph) -> list[StateRecord]:
    """``(F, k(F), bc(F), K factors)`` for every spanning subgraph."""
    return [StateRecord(G.edges_of_mask(m), k, bc, ks) for m, k, bc, ks in _states(G)]


def _sorted_edge_vars(G: ArrowRibbonGraph, make) -> list:
    return sorted((make(e), i) for i, e in enumerate(G.edge_ids))


def arrow_dichromatic(G: ArrowRibbonGraph) -> LaurentPoly:
    """``A_G(a, b, c, K)``; the empty graph gives 1."""
    bvars = _sorted_edge_vars(G, b_var)
    kcache: dict = {}
    acc: Counter = Counter()
    for mask, k, bc, ks in _states(G):
        mono = []
        if k:
            mono.append((a_, 4 * k))
        if bc:
            mono.append((c_, 4 * bc))
        mono.extend((v, 4) for v, i in bvars if mask >> i & 1)
        for x, cnt in sorted(Counter(ks).items()):
            if x not in kcache:
                kcache[x] = K_var(Fraction(x, 2))
            mono.append((kcache[x], 4 * cnt))
        acc[tuple(mono)] += 1
    return LaurentPoly(acc)


def drop_K(p: LaurentPoly) -> LaurentPoly:
    """Set every ``K`` variable to 1."""
    return substitute(p, {v: 1 for v in p.variables() if v.family == "K"})


def dichromatic(G: ArrowRibbonGraph) -> LaurentPoly:
    """``Z_G(a, b, c)``: the arrow-blind specialisation of ``A_G``."""
    return drop_K(arrow_dichromatic(G))


def _full(G: ArrowRibbonGraph) -> int:
    return (1 << G.n_edges) - 1


def tutte(G: ArrowRibbonGraph) -> LaurentPoly:
    """Classical Tutte polynomial of the underlying abstract graph."""
    kG = G.components_count(_full(G))
    v = G.n_vertices
    counts: Counter = Counter()
    for mask in range(1 << G.n_edges):
        k = G.components_count(mask)
        counts[(k - kG, bin(mask).count("1") - v + k)] += 1
    acc: Counter = Counter()
    # expand (x-1)^i (y-1)^j binomially
    for (i, j), n in counts.items():
        for p in range(i + 1):
            for r in range(j + 1):
                coeff = n * comb(i, p) * comb(j, r) * (-1) ** (i - p + j - r)
                acc[(p, r)] += coeff
    out = LaurentPoly()
    for (p, r), coeff in acc.items():
        if coeff:
            out = out + LaurentPoly.monomial({var("x"): p, var("y"): r}, coeff)
    return out


def _weights(G: ArrowRibbonGraph, weights: Mapping | None) -> dict:
    out = {}
    for e in G.edge_ids:
        if weights is not None and e in weights:
            xe, ye = weights[e]
            out[x_var(e)] = LaurentPoly.coerce(xe)
            out[y_var(e)] = LaurentPoly.coerce(ye)
    return out


def _signs(G: ArrowRibbonGraph) -> tuple:
    """Edge signs; an edgeless graph counts as signed."""
    if G.signs is None:
        if G.n_edges:
            raise MissingSigns("graph has no edge signs")
        return ()
    return G.signs


def _br_sum(G: ArrowRibbonGraph, signed: bool) -> LaurentPoly:
    kG = G.components_count(_full(G))
    v = G.n_vertices
    full = _full(G)
    neg = 0
    if signed:
        neg = sum(1 << i for i, s in enumerate(_signs(G)) if s < 0)
    terms: Counter = Counter()
    for mask, k, bc, ks in _states(G):
        n = bin(mask).count("1") - v + k
        exps: dict = {}
        if signed:
            s = Fraction(bin(mask & neg).count("1") - bin(~mask & full & neg).count("1"), 2)
        else:
            s = 0
            for i, e in enumerate(G.edge_ids):
                exps[x_var(e) if mask >> i & 1 else y_var(e)] = 1
        exps[X_] = k - kG + s
        exps[Y_] = n - s
        exps[Z_] = k - bc + n
        for x, cnt in Counter(ks).items():
            exps[K_var(Fraction(x, 2))] = cnt
        terms[LaurentPoly.monomial(exps)] += 1
    out = LaurentPoly()
    for mono, cnt in terms.items():
        out = out + mono * cnt
    return out


def arrow_bollobas_riordan(G: ArrowRibbonGraph, weights: Mapping | None = None) -> LaurentPoly:
    """``ABR_G(X, Y, Z, K)`` with per-edge weights ``(x_e, y_e)``.

    Args:
        weights: optional map ``edge -> (x_e, y_e)``; edges left out keep the
            symbolic weights ``x[e]``, ``y[e]``.
    """
    p = _br_sum(G, signed=False)
    w = _weights(G, weights)
    return substitute(p, w) if w else p


def unit_weights(G: ArrowRibbonGraph) -> dict:
    return {e: (1, 1) for e in G.edge_ids}


def signed_bollobas_riordan(G: ArrowRibbonGraph) -> LaurentPoly:
    """``sBR_G(X, Y, Z, K)``; exponents may be half-integers."""
    return _br_sum(G, signed=True)


def signed_br_weights(G: ArrowRibbonGraph) -> dict:
    """ABR weights that turn ABR into sBR: ``x_- = (X/Y)^{1/2}``, ``y_- = (Y/X)^{1/2}``."""
    half = Fraction(1, 2)
    xm = LaurentPoly.monomial({X_: half, Y_: -half})
    ym = LaurentPoly.monomial({X_: -half, Y_: half})
    return {e: (1, 1) if s > 0 else (xm, ym) for e, s in zip(G.edge_ids, _signs(G))}


def br_z_sides(G: ArrowRibbonGraph, weights: Mapping | None = None) -> tuple[LaurentPoly, LaurentPoly]:
    """Both sides of the ABR/Z relation (arrow-blind)."""
    lhs = drop_K(arrow_bollobas_riordan(G, weights))
    w = _weights(G, weights)
    YZ = LaurentPoly.monomial({Y_: 1, Z_: 1})
    mapping: dict = {a_: LaurentPoly.monomial({X_: 1, Y_: 1, Z_: 2}),
                     c_: LaurentPoly.monomial({Z_: -1})}
    prefactor = LaurentPoly.constant(1)
    for e in G.edge_ids:
        xe = w.get(x_var(e), LaurentPoly.of(x_var(e)))
        ye = w.get(y_var(e), LaurentPoly.of(y_var(e)))
        mapping[b_var(e)] = xe * YZ * ye.inverse()
        prefactor = prefactor * ye
    kG = G.components_count(_full(G))
    prefactor = prefactor * LaurentPoly.monomial({Y_: -G.n_vertices, Z_: -G.n_vertices, X_: -kG})
    rhs = prefactor * substitute(dichromatic(G), mapping)
    return lhs, rhs


def verify_br_z_relation(G: ArrowRibbonGraph, weights: Mapping | None = None) -> bool:
    lhs, rhs = br_z_sides(G, weights)
    return lhs == rhs


def signed_dichromatic_substitution(G: ArrowRibbonGraph, c: object = None) -> LaurentPoly:
    """Signed dichromatic polynomial in ``q``, ``alpha[e]`` (and ``c``).

    ``a = q``, ``b_e = alpha_e`` on positive and ``q/alpha_e`` on negative
    edges, times ``prod_e q^{-1/2} alpha_e``.  ``c`` stays a free variable
    unless a value is given.
    """
    signs = _signs(G)
    mapping: dict = {a_: LaurentPoly.of(q_)}
    if c is not None:
        mapping[c_] = c
    prefactor = LaurentPoly.constant(1)
    for e, s in zip(G.edge_ids, signs):
        al = alpha_var(e)
        mapping[b_var(e)] = (LaurentPoly.of(al) if s > 0
                             else LaurentPoly.monomial({q_: 1, al: -1}))
        prefactor = prefactor * LaurentPoly.monomial({q_: Fraction(-1, 2), al: 1})
    return prefactor * substitute(dichromatic(G), mapping)


def contraction_deletion(G: ArrowRibbonGraph, e: Hashable, *, a: object = None) -> tuple[str, LaurentPoly | None]:
    """Right-hand side of the contraction-deletion recurrence for ``e``.

    Returns ``(case, rhs)`` with case ``"ordinary"`` (``e`` is not an
    orientable loop), ``"trivial-loop"`` or ``"nontrivial-loop"``.  For a
    non-trivial orientable loop no recurrence exists and ``rhs`` is None
    unless ``a`` is given, in which case both sides are evaluated at that
    value of ``a`` with the ordinary rule.
    """
    b = LaurentPoly.of(b_var(e))
    sub = {} if a is None else {a_: a}

    def A(H):
        p = arrow_dichromatic(H)
        return substitute(p, sub) if sub else p

    if not is_orientable_loop(G, e):
        return "ordinary", A(delete(G, e)) + b * A(contract(G, e))
    if is_trivial_orientable_loop(G, e):
        a_inv = LaurentPoly.coerce(a_ if a is None else a).inverse()
        return "trivial-loop", A(delete(G, e)) + b * a_inv * A(contract(G, e))
    if a is None:
        return "nontrivial-loop", None
    return "nontrivial-loop", A(delete(G, e)) + b * A(contract(G, e))


def verify_partial_duality_identity(G: ArrowRibbonGraph, D: Iterable[Hashable]) -> bool:
    """``A_G(1,b,c,K) = (prod_D b_e) A_{G^D}(1, b_D, c, K)`` with ``b_e -> 1/b_e`` on ``D``."""
    D = list(D)
    lhs = substitute(arrow_dichromatic(G), {a_: 1})
    mapping: dict = {a_: 1}
    prefactor = LaurentPoly.constant(1)
    for e in D:
        bv = b_var(e)
        mapping[bv] = LaurentPoly.monomial({bv: -1})
        prefactor = prefactor * LaurentPoly.of(bv)
    rhs = prefactor * substitute(arrow_dichromatic(partial_dual(G, D)), mapping)
    return lhs == rhs
