"""Virtual link diagrams as signed Gauss codes, and their bracket invariants.

A diagram is a list of components, each a cyclic sequence of passages
``(crossing, over, sign)``.  Virtual crossings are never stored: any code is
accepted and realised on a surface.

Local picture of a classical crossing
-------------------------------------
The four arms of a crossing sit at positions 0..3 counterclockwise::

    positive:  over-out 0, under-out 1, over-in 2, under-in 3
    negative:  over-out 0, under-in 1,  over-in 2, under-out 3

The A-smoothing joins arms (0, 3) and (1, 2), the B-smoothing joins (0, 1)
and (2, 3).  A smoothing is oriented exactly for (+, A) and (-, B).  On a
disoriented smoothing each of the two new arcs, joining positions ``i`` and
``i + 1``, carries one arrow pointing from ``i`` to ``i + 1``
(counterclockwise around the crossing).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

from .polyring import K_var, LaurentPoly, substitute, var
from .ribbon import reduced_count

__all__ = [
    "GaussError",
    "MoveError",
    "Passage",
    "VirtualLinkDiagram",
    "StateCircles",
    "parse_gauss",
    "format_gauss",
    "writhe",
    "all_states",
    "smooth",
    "kauffman_bracket",
    "arrow_bracket",
    "normalized_arrow",
    "jones",
    "is_oriented_smoothing",
    "R1Insert",
    "R1Remove",
    "R2Insert",
    "R2Remove",
    "R3",
    "VirtualMove",
    "apply_move",
    "faces",
    "r1_sites",
    "r2_sites",
    "r3_sites",
]

A_, B_, d_, t_ = var("A"), var("B"), var("d"), var("t")

_POS = {
    # (sign, over, out) -> position
    (1, True, True): 0, (1, False, True): 1, (1, True, False): 2, (1, False, False): 3,
    (-1, True, True): 0, (-1, False, False): 1, (-1, True, False): 2, (-1, False, True): 3,
}
_PAIRS = {"A": ((0, 3), (1, 2)), "B": ((0, 1), (2, 3))}
_PARTNER = {ch: {p: q for a, b in pairs for p, q in ((a, b), (b, a))}
            for ch, pairs in _PAIRS.items()}


class GaussError(ValueError):
    """Malformed or inconsistent Gauss code."""


class MoveError(ValueError):
    """A Reidemeister move does not apply at the requested location."""


class Passage(NamedTuple):
    crossing: int
    over: bool
    sign: int

    def __str__(self) -> str:
        return f"{'O' if self.over else 'U'}{self.crossing}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class VirtualLinkDiagram:
    components: tuple  # tuple[tuple[Passage, ...], ...]

    def __post_init__(self):
        seen: dict = {}
        for ci, comp in enumerate(self.components):
            for j, p in enumerate(comp):
                seen.setdefault(p.crossing, []).append(p)
        for c, ps in seen.items():
            if len(ps) != 2:
                raise GaussError(f"crossing {c} appears {len(ps)} times")
            if ps[0].over == ps[1].over:
                raise GaussError(f"crossing {c} needs one over and one under passage")
            if ps[0].sign != ps[1].sign:
                raise GaussError(f"crossing {c} has inconsistent signs")

    @property
    def crossings(self) -> tuple:
        return tuple(sorted({p.crossing for comp in self.components for p in comp}))

    @property
    def n_crossings(self) -> int:
        return sum(len(c) for c in self.components) // 2

    def sign(self, c: int) -> int:
        return self._locate[(c, True)][2]

    @property
    def _locate(self) -> dict:
        # (crossing, over) -> (component, index, sign)
        out = {}
        for ci, comp in enumerate(self.components):
            for j, p in enumerate(comp):
                out[(p.crossing, p.over)] = (ci, j, p.sign)
        return out

    def writhe(self) -> int:
        return sum(p.sign for comp in self.components for p in comp if p.over)

    def __str__(self) -> str:
        return format_gauss(self)


_TOKEN = re.compile(r"([OU])([0-9]+)([+-])")


def parse_gauss(text: str) -> VirtualLinkDiagram:
    """Parse ``"O1+ U2+ ...; ..."``; ``""`` is the unknot, ``";"`` the 2-unlink."""
    comps = []
    for part in text.strip().split(";"):
        comp = []
        for tok in part.split():
            m = _TOKEN.fullmatch(tok)
            if m is None:
                raise GaussError(f"bad passage {tok!r}")
            comp.append(Passage(int(m.group(2)), m.group(1) == "O", 1 if m.group(3) == "+" else -1))
        comps.append(tuple(comp))
    return VirtualLinkDiagram(tuple(comps))


def format_gauss(L: VirtualLinkDiagram) -> str:
    return "; ".join(" ".join(map(str, comp)) for comp in L.components).strip()


def writhe(L: VirtualLinkDiagram) -> int:
    return L.writhe()


def is_oriented_smoothing(sign: int, choice: str) -> bool:
    return (sign > 0) == (choice == "A")


# -- arm geometry ---------------------------------------------------------

class _Arms:
    """Arms ``(crossing, position)`` and the diagram segments joining them."""

    def __init__(self, L: VirtualLinkDiagram):
        self.L = L
        self.seg: dict = {}
        self.where: dict = {}  # arm -> (component, passage index, is_out)
        for ci, comp in enumerate(L.components):
            n = len(comp)
            for j, p in enumerate(comp):
                q = comp[(j + 1) % n]
                out_arm = (p.crossing, _POS[(p.sign, p.over, True)])
                in_arm = (q.crossing, _POS[(q.sign, q.over, False)])
                self.seg[out_arm] = in_arm
                self.seg[in_arm] = out_arm
                self.where[out_arm] = (ci, j, True)
                self.where[in_arm] = (ci, (j + 1) % n, False)


def faces(L: VirtualLinkDiagram) -> list[tuple]:
    """Faces of the diagram on its surface, as cycles of arms."""
    arms = _Arms(L)
    seen = set()
    out = []
    for d0 in sorted(arms.seg):
        if d0 in seen:
            continue
        cyc = []
        d = d0
        while d not in seen:
            seen.add(d)
            cyc.append(d)
            c, p = arms.seg[d]
            d = (c, (p + 1) % 4)
        out.append(tuple(cyc))
    return out


# -- states ---------------------------------------------------------------

@dataclass(frozen=True)
class StateCircles:
    """State circles: per circle the arms visited and the arrow word read along it."""

    circles: tuple
    words: tuple
    delta: int

    @property
    def K_indices(self) -> tuple:
        return tuple(Fraction(reduced_count(w), 2) for w in self.words)


def all_states(L: VirtualLinkDiagram) -> Iterator[dict]:
    cs = L.crossings
    for choice in product("AB", repeat=len(cs)):
        yield dict(zip(cs, choice))


def smooth(L: VirtualLinkDiagram, s: Mapping[int, str]) -> StateCircles:
    """Resolve every crossing by ``s`` and trace the decorated state circles."""
    arms = _Arms(L)
    for c in L.crossings:
        if s.get(c) not in ("A", "B"):
            raise KeyError(f"state does not choose A or B at crossing {c}")
    sign = {c: L.sign(c) for c in L.crossings}
    seen = set()
    circles = []
    words = []
    for d0 in sorted(arms.seg):
        if d0 in seen:
            continue
        path = []
        word = []
        d = d0
        while d not in seen:
            e = arms.seg[d]
            seen.add(d)
            seen.add(e)
            path += (d, e)
            c, p = e
            q = _PARTNER[s[c]][p]
            if not is_oriented_smoothing(sign[c], s[c]):
                word.append(q == (p + 1) % 4)
            d = (c, q)
        circles.append(tuple(path))
        words.append(tuple(word))
    for comp in L.components:
        if not comp:
            circles.append(())
            words.append(())
    return StateCircles(tuple(circles), tuple(words), len(circles))


def _bracket_terms(L: VirtualLinkDiagram, arrows: bool) -> LaurentPoly:
    acc: dict = {}
    for s in all_states(L):
        st = smooth(L, s)
        na = sum(1 for v in s.values() if v == "A")
        exps = {A_: na, B_: len(s) - na, d_: st.delta - 1}
        if arrows:
            for w in st.words:
                i = reduced_count(w)
                if i:
                    kv = K_var(Fraction(i, 2))
                    exps[kv] = exps.get(kv, 0) + 1
        m = LaurentPoly.monomial(exps)
        acc[m] = acc.get(m, 0) + 1
    out = LaurentPoly()
    for m, n in acc.items():
        out = out + m * n
    return out


def kauffman_bracket(L: VirtualLinkDiagram) -> LaurentPoly:
    """``sum_s A^alpha B^beta d^(delta - 1)``."""
    return _bracket_terms(L, arrows=False)


def arrow_bracket(L: VirtualLinkDiagram) -> LaurentPoly:
    """Kauffman bracket with a ``K`` factor per state circle."""
    return _bracket_terms(L, arrows=True)


def normalized_arrow(L: VirtualLinkDiagram) -> LaurentPoly:
    """``(-A^3)^(-w) <L>_A(A, A^-1, -A^2 - A^-2)``."""
    A = LaurentPoly.of(A_)
    Ai = A.inverse()
    p = substitute(arrow_bracket(L), {B_: Ai, d_: -(A * A) - Ai * Ai})
    w = L.writhe()
    return p * LaurentPoly.monomial({A_: -3 * w}, (-1) ** (w % 2))


def jones(L: VirtualLinkDiagram) -> LaurentPoly:
    """``(-1)^w t^(3w/4) <L>(t^-1/4, t^1/4, -t^1/2 - t^-1/2)``."""
    q = Fraction(1, 4)
    h = Fraction(1, 2)
    mapping = {A_: LaurentPoly.monomial({t_: -q}), B_: LaurentPoly.monomial({t_: q}),
               d_: -LaurentPoly.monomial({t_: h}) - LaurentPoly.monomial({t_: -h})}
    w = L.writhe()
    return substitute(kauffman_bracket(L), mapping) * LaurentPoly.monomial({t_: Fraction(3 * w, 4)}, (-1) ** (w % 2))


# -- Reidemeister moves ---------------------------------------------------

@dataclass(frozen=True)
class R1Insert:
    """Insert a kink before passage ``index`` of ``component``."""

    component: int
    index: int
    sign: int = 1
    over_first: bool = True


@dataclass(frozen=True)
class R1Remove:
    crossing: int


@dataclass(frozen=True)
class R2Insert:
    """Push strand ``over`` across strand ``under``.

    ``over`` and ``under`` are ``(component, index)`` insertion points.  The
    under strand meets the new crossings in the same order as the over strand
    unless ``reverse``.  ``under_first`` orders the two pairs when both
    insertion points coincide.
    """

    over: tuple
    under: tuple
    sign: int = 1
    reverse: bool = False
    under_first: bool = False


@dataclass(frozen=True)
class R2Remove:
    crossings: tuple


@dataclass(frozen=True)
class R3:
    """Slide a strand across the crossing of the other two (three crossings)."""

    crossings: tuple


@dataclass(frozen=True)
class VirtualMove:
    """Any virtual Reidemeister move; invisible on Gauss codes."""

    note: str = ""


def _next_id(L: VirtualLinkDiagram) -> int:
    return max(L.crossings, default=0) + 1


def _replace(L: VirtualLinkDiagram, comps: Sequence[Sequence[Passage]]) -> VirtualLinkDiagram:
    return VirtualLinkDiagram(tuple(tuple(c) for c in comps))


def r1_sites(L: VirtualLinkDiagram) -> list[int]:
    """Crossings whose two passages are consecutive on a component."""
    out = []
    for comp in L.components:
        n = len(comp)
        for j, p in enumerate(comp):
            if comp[(j + 1) % n].crossing == p.crossing and (n > 2 or j == 0):
                out.append(p.crossing)
    return sorted(set(out))


def _bigons(L: VirtualLinkDiagram) -> set:
    out = set()
    for f in faces(L):
        if len(f) == 2 and f[0][0] != f[1][0]:
            out.add(frozenset((f[0][0], f[1][0])))
    return out


def r2_sites(L: VirtualLinkDiagram) -> list[tuple]:
    """Crossing pairs that an R2 move can remove."""
    out = []
    for pair in _bigons(L):
        a, b = sorted(pair)
        if L.sign(a) == L.sign(b):
            continue
        loc = L._locate
        oa, ob = loc[(a, True)], loc[(b, True)]
        ua, ub = loc[(a, False)], loc[(b, False)]
        if _adjacent(L, oa, ob) and _adjacent(L, ua, ub):
            out.append((a, b))
    return sorted(out)


def _adjacent(L: VirtualLinkDiagram, p, q) -> bool:
    if p[0] != q[0]:
        return False
    n = len(L.components[p[0]])
    return (p[1] - q[1]) % n in (1, n - 1)


def _triangle_sides(L: VirtualLinkDiagram, face: tuple) -> list[tuple] | None:
    """Strand segments ``(component, index)`` bounding a triangular face.

    A segment ``(ci, j)`` runs between passages ``j`` and ``j + 1``.  Returns
    None unless the three crossings are distinct and the sides are one
    over-over, one over-under and one under-under strand.
    """
    if len(face) != 3 or len({d[0] for d in face}) != 3:
        return None
    arms = _Arms(L)
    sides = []
    kinds = []
    for d in face:
        ci, j, is_out = arms.where[d]
        if not is_out:
            j -= 1
        comp = L.components[ci]
        j %= len(comp)
        p, q = comp[j], comp[(j + 1) % len(comp)]
        sides.append((ci, j))
        kinds.append(p.over + q.over)
    if sorted(kinds) != [0, 1, 2] or len(set(sides)) != 3:
        return None
    return sides


def r3_sites(L: VirtualLinkDiagram) -> list[tuple]:
    out = set()
    for f in faces(L):
        if _triangle_sides(L, f) is not None:
            out.add(tuple(sorted(d[0] for d in f)))
    return sorted(out)


def apply_move(L: VirtualLinkDiagram, move) -> VirtualLinkDiagram:
    """Rewrite the Gauss code by one Reidemeister move (or raise MoveError)."""
    comps = [list(c) for c in L.components]
    if isinstance(move, VirtualMove):
        return L
    if isinstance(move, R1Insert):
        if not 0 <= move.component < len(comps):
            raise MoveError("no such component")
        comp = comps[move.component]
        if not 0 <= move.index <= len(comp):
            raise MoveError("insertion index out of range")
        c = _next_id(L)
        s = 1 if move.sign > 0 else -1
        pair = [Passage(c, move.over_first, s), Passage(c, not move.over_first, s)]
        comp[move.index:move.index] = pair
        return _replace(L, comps)
    if isinstance(move, R1Remove):
        if move.crossing not in r1_sites(L):
            raise MoveError(f"crossing {move.crossing} is not a kink")
        return _replace(L, [[p for p in comp if p.crossing != move.crossing] for comp in comps])
    if isinstance(move, R2Remove):
        key = tuple(sorted(move.crossings))
        if key not in r2_sites(L):
            raise MoveError(f"crossings {key} do not bound a removable bigon")
        return _replace(L, [[p for p in comp if p.crossing not in key] for comp in comps])
    if isinstance(move, R2Insert):
        (oc, oi), (uc, ui) = move.over, move.under
        for ci, idx in ((oc, oi), (uc, ui)):
            if not 0 <= ci < len(comps) or not 0 <= idx <= len(comps[ci]):
                raise MoveError("insertion point out of range")
        a = _next_id(L)
        b = a + 1
        s = 1 if move.sign > 0 else -1
        over = [Passage(a, True, s), Passage(b, True, -s)]
        under = [Passage(a, False, s), Passage(b, False, -s)]
        if move.reverse:
            under.reverse()
        if (oc, oi) == (uc, ui):
            block = under + over if move.under_first else over + under
            comps[oc][oi:oi] = block
        else:
            # insert at the later index first so the earlier one stays valid
            for ci, idx, block in sorted(((oc, oi, over), (uc, ui, under)),
                                         key=lambda t: (t[0], t[1]), reverse=True):
                comps[ci][idx:idx] = block
        out = _replace(L, comps)
        if (a, b) not in r2_sites(out):
            raise MoveError("inserted crossings do not form a bigon")
        return out
    if isinstance(move, R3):
        key = tuple(sorted(move.crossings))
        sides = None
        for f in faces(L):
            if tuple(sorted(d[0] for d in f)) == key:
                sides = _triangle_sides(L, f)
                if sides is not None:
                    break
        if sides is None:
            raise MoveError(f"crossings {key} do not bound an R3 triangle")
        for ci, j in sides:
            comp = comps[ci]
            k = (j + 1) % len(comp)
            comp[j], comp[k] = comp[k], comp[j]
        out = _replace(L, comps)
        if key not in r3_sites(out):
            raise MoveError("R3 rewrite did not produce a triangle")
        return out
    raise MoveError(f"unknown move {move!r}")
