"""Arrow ribbon graphs, boundary tracing and arrow-word reduction.

Encoding
--------
Every edge ribbon is a rectangle with four corners.  A corner ("flag") is
numbered ``4*i + k`` where ``i`` is the position of the edge in
``edge_ids``.  Three fixed-point-free involutions on flags describe the
surface completely:

``attach``
    pairs the two corners of each attaching arc (edge glued to a vertex);
``free``
    pairs the two corners of each free edge arc (unglued side of an edge);
``corner``
    pairs corners joined by a free vertex arc.

Vertex boundaries are the cycles of ``attach``/``corner``; the boundary of
the spanning subgraph ``F`` consists of the cycles of ``corner`` alternating
with ``free`` on edges of ``F`` and ``attach`` on the other edges.  Arrows
live on arcs: ``arrows[(kind, p, q)]`` with ``kind`` ``"e"`` (edge arc,
attaching or free) or ``"v"`` (free vertex arc), ``p < q``, and the word
read from ``p`` towards ``q``; ``True`` means the arrow points along the
reading direction (``W``), ``False`` against it (``A``).  Isolated vertices
carry a cyclic word in ``lone``.

Rotation-system convention (JSON and :func:`from_rotation_system`): each
vertex rotation is listed counterclockwise.  Passing the attaching segment of
end 0 counterclockwise goes from the side-R corner to the side-L corner; at
end 1 the order is L then R for an untwisted edge and R then L for a twisted
one.  Segment arrows are read counterclockwise, ``free_arrows`` on the vertex
arc after the segment are read counterclockwise, and both edge sides are read
from end 0 to end 1.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Any, Hashable, Iterable, Mapping, Sequence

__all__ = [
    "WITH",
    "AGAINST",
    "GraphError",
    "ArrowRibbonGraph",
    "BoundaryComponent",
    "BoundaryReport",
    "reduce_cyclic_arrow_word",
    "reduced_count",
    "from_rotation_system",
    "from_json",
    "from_arrow_presentation",
    "boundary_walks",
    "state_stats",
    "random_graph",
]

WITH = True
AGAINST = False

Word = tuple  # tuple[bool, ...]
ArcKey = tuple  # (kind, p, q)


class GraphError(ValueError):
    """Malformed ribbon graph input."""


def reduced_count(word: Sequence[bool]) -> int:
    """Number of arrows left after cancelling cyclically adjacent equal pairs."""
    stack: list[bool] = []
    for bit in word:
        if stack and stack[-1] == bit:
            stack.pop()
        else:
            stack.append(bit)
    lo, hi = 0, len(stack)
    while hi - lo >= 2 and stack[lo] == stack[hi - 1]:
        lo += 1
        hi -= 1
    return hi - lo


def reduce_cyclic_arrow_word(word: Sequence[bool]) -> Fraction:
    """Index ``i(f)``: half the number of arrows surviving cancellation.

    Neighbouring arrows pointing the same way cancel in pairs, cyclically,
    until none are left to cancel.  ``[W, A]`` gives 1, ``[W, W, A]`` gives
    1/2, the empty word 0.
    """
    return Fraction(reduced_count(word), 2)


def _flip(word: Word) -> Word:
    return tuple(not x for x in reversed(word))


def _parse_arrows(raw: Any, where: str) -> Word:
    if raw is None:
        return ()
    if isinstance(raw, str):
        raw = list(raw)
    if not isinstance(raw, (list, tuple)):
        raise GraphError(f"malformed arrow list at {where}: {raw!r}")
    out = []
    for a in raw:
        if a == "W":
            out.append(WITH)
        elif a == "A":
            out.append(AGAINST)
        else:
            raise GraphError(f"malformed arrow {a!r} at {where}; expected 'W' or 'A'")
    return tuple(out)


def _fmt_arrows(word: Word) -> list[str]:
    return ["W" if x else "A" for x in word]


def _norm_id(raw: Any) -> Hashable:
    if isinstance(raw, str) and raw.isdigit():
        return int(raw)
    if isinstance(raw, (int, str)):
        return raw
    raise GraphError(f"bad edge id {raw!r}")


@dataclass(frozen=True)
class BoundaryComponent:
    """One boundary circle of a spanning subgraph.

    ``walk`` lists arc traversals ``(kind, from_flag, to_flag)`` with kind
    ``"vertex"``, ``"attach"`` or ``"free"``; it is empty for an isolated
    vertex.
    """

    walk: tuple
    arrow_word: Word
    reduced_index: Fraction


@dataclass(frozen=True)
class BoundaryReport:
    components: tuple[BoundaryComponent, ...]
    k: int
    bc: int
    r: int
    n: int
    orientable: bool

    @property
    def genus_like(self) -> int:
        return self.k - self.bc + self.n


@dataclass(frozen=True, eq=False)
class ArrowRibbonGraph:
    """Immutable arrow ribbon graph in corner encoding (see module doc)."""

    edge_ids: tuple
    attach: tuple
    free: tuple
    corner: tuple
    arrows: Mapping[ArcKey, Word] = field(default_factory=dict)
    lone: tuple = ()
    signs: tuple | None = None
    sides: tuple | None = None

    def __post_init__(self):
        self._validate()

    # -- validation ------------------------------------------------------
    def _validate(self) -> None:
        m = len(self.edge_ids)
        n = 4 * m
        if len(set(self.edge_ids)) != m:
            raise GraphError("duplicate edge ids")
        for name in ("attach", "free", "corner"):
            inv = getattr(self, name)
            if len(inv) != n:
                raise GraphError(f"{name} has wrong length")
            for f, g in enumerate(inv):
                if g == f or not 0 <= g < n or inv[g] != f:
                    raise GraphError(f"{name} is not a fixed-point-free involution at {f}")
        for f in range(n):
            a, b = self.attach[f], self.free[f]
            if a >> 2 != f >> 2 or b >> 2 != f >> 2:
                raise GraphError(f"edge arcs leave their edge at flag {f}")
            if a == b or self.attach[b] != self.free[a]:
                raise GraphError(f"edge {self.edge_ids[f >> 2]!r} is not a rectangle")
        for key, word in self.arrows.items():
            kind, p, q = key
            if not p < q:
                raise GraphError(f"arrow key {key} not normalised")
            if kind == "e":
                if self.attach[p] != q and self.free[p] != q:
                    raise GraphError(f"arrows on non-arc {key}")
            elif kind == "v":
                if self.corner[p] != q:
                    raise GraphError(f"arrows on non-arc {key}")
            else:
                raise GraphError(f"bad arc kind in {key}")
        if self.signs is not None and len(self.signs) != m:
            raise GraphError("signs must cover every edge")
        if self.sides is not None and len(self.sides) != n:
            raise GraphError("sides must cover every flag")

    # -- basic structure ---------------------------------------------------
    @property
    def n_edges(self) -> int:
        return len(self.edge_ids)

    @property
    def n_flags(self) -> int:
        return 4 * len(self.edge_ids)

    @cached_property
    def _edge_pos(self) -> dict:
        return {e: i for i, e in enumerate(self.edge_ids)}

    def edge_index(self, e: Hashable) -> int:
        try:
            return self._edge_pos[e]
        except KeyError:
            raise KeyError(f"unknown edge {e!r}") from None

    def flag_name(self, f: int) -> tuple:
        return (self.edge_ids[f >> 2], f & 3)

    def sign(self, e: Hashable) -> int | None:
        if self.signs is None:
            return None
        return self.signs[self.edge_index(e)]

    @property
    def is_signed(self) -> bool:
        return self.signs is not None

    def mask(self, edges: Iterable[Hashable]) -> int:
        m = 0
        for e in edges:
            m |= 1 << self.edge_index(e)
        return m

    def edges_of_mask(self, mask: int) -> frozenset:
        return frozenset(e for i, e in enumerate(self.edge_ids) if mask >> i & 1)

    def arc_word(self, kind: str, p: int, q: int) -> Word:
        """Arrows on the arc ``p``-``q`` read from ``p`` towards ``q``."""
        if p < q:
            return self.arrows.get((kind, p, q), ())
        return _flip(self.arrows.get((kind, q, p), ()))

    @cached_property
    def vertex_cycles(self) -> tuple:
        """Flag cycles of the non-isolated vertices.

        Each cycle starts at a flag ``f`` and continues ``attach[f]``,
        ``corner[attach[f]]``, ...; so entries ``2j, 2j+1`` are the corners of
        one attaching segment in traversal order.
        """
        raw = []
        seen = [False] * self.n_flags
        for f0 in range(self.n_flags):
            if seen[f0]:
                continue
            cyc = []
            f = f0
            while True:
                seen[f] = seen[self.attach[f]] = True
                cyc += (f, self.attach[f])
                f = self.corner[self.attach[f]]
                if f == f0:
                    break
            raw.append(cyc)
        hint = self._orientation_hint()
        cycles = []
        for cyc in raw:
            sides = self.sides
            if sides is not None and all(sides[f] != (j & 1) for j, f in enumerate(cyc)):
                start = 0
            elif sides is not None and all(sides[f] == (j & 1) for j, f in enumerate(cyc)):
                start = 1
            else:
                start = 0 if hint[cyc[0]] else 1
            cycles.append(self._cycle_from(cyc[start]))
        return tuple(cycles)

    def _cycle_from(self, f0: int) -> tuple:
        cyc = []
        f = f0
        while True:
            g = self.attach[f]
            cyc += (f, g)
            f = self.corner[g]
            if f == f0:
                return tuple(cyc)

    def _orientation_hint(self) -> list:
        """Greedy 2-colouring of flags (exact on orientable components)."""
        n = self.n_flags
        colour = [None] * n
        for s in range(n):
            if colour[s] is not None:
                continue
            colour[s] = True if self.sides is None else self.sides[s]
            stack = [s]
            while stack:
                f = stack.pop()
                for g in (self.attach[f], self.corner[f], self.free[f]):
                    if colour[g] is None:
                        colour[g] = not colour[f]
                        stack.append(g)
        return colour

    @cached_property
    def vertex_of(self) -> tuple:
        out = [0] * self.n_flags
        for vi, cyc in enumerate(self.vertex_cycles):
            for f in cyc:
                out[f] = vi
        return tuple(out)

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_cycles) + len(self.lone)

    @cached_property
    def _words(self) -> tuple:
        """Per-flag arrow words along each outgoing arc, or None if arrow-free."""
        if not self.arrows:
            return None
        n = self.n_flags
        att = tuple(self.arc_word("e", f, self.attach[f]) for f in range(n))
        fre = tuple(self.arc_word("e", f, self.free[f]) for f in range(n))
        cor = tuple(self.arc_word("v", f, self.corner[f]) for f in range(n))
        return att, fre, cor

    # -- spanning subgraphs ------------------------------------------------
    def components_count(self, mask: int) -> int:
        """``k(F)`` for the spanning subgraph given by an edge bitmask."""
        nv = len(self.vertex_cycles)
        parent = list(range(nv))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        count = nv
        vof = self.vertex_of
        i = 0
        while mask >> i:
            if mask >> i & 1:
                base = 4 * i
                r0 = find(vof[base])
                for f in (base + 1, base + 2, base + 3):
                    r = find(vof[f])
                    if r != r0:
                        parent[r] = r0
                        count -= 1
            i += 1
        return count + len(self.lone)

    def _trace(self, mask: int, with_walks: bool = False):
        """Boundary circles of ``F``: list of (word, walk) for each circle."""
        n = self.n_flags
        words = self._words
        attach, free, corner = self.attach, self.free, self.corner
        seen = [False] * n
        circles = []
        for f0 in range(n):
            if seen[f0]:
                continue
            word: list = []
            walk: list = []
            f = f0
            while True:
                seen[f] = True
                g = corner[f]
                seen[g] = True
                if words is not None:
                    word.extend(words[2][f])
                if with_walks:
                    walk.append(("vertex", f, g))
                if mask >> (g >> 2) & 1:
                    h = free[g]
                    if words is not None:
                        word.extend(words[1][g])
                    if with_walks:
                        walk.append(("free", g, h))
                else:
                    h = attach[g]
                    if words is not None:
                        word.extend(words[0][g])
                    if with_walks:
                        walk.append(("attach", g, h))
                f = h
                if f == f0:
                    break
            circles.append((tuple(word), tuple(walk)))
        for w in self.lone:
            circles.append((tuple(w), ()))
        return circles

    def state_profile(self, mask: int) -> tuple[int, int, tuple]:
        """``(k(F), bc(F), doubled K indices)`` -- the state-sum inner loop."""
        circles = self._trace(mask)
        ks = tuple(reduced_count(w) for w, _ in circles)
        return self.components_count(mask), len(circles), ks

    def is_orientable_subgraph(self, mask: int) -> bool:
        n = self.n_flags
        colour = [None] * n
        for s in range(n):
            if colour[s] is not None:
                continue
            colour[s] = False
            stack = [s]
            while stack:
                f = stack.pop()
                c = colour[f]
                nbrs = (self.attach[f], self.corner[f],
                        self.free[f] if mask >> (f >> 2) & 1 else None)
                for g in nbrs:
                    if g is None:
                        continue
                    if colour[g] is None:
                        colour[g] = not c
                        stack.append(g)
                    elif colour[g] == c:
                        return False
        return True

    def is_orientable(self) -> bool:
        return self.is_orientable_subgraph((1 << self.n_edges) - 1)

    def boundary_walks(self, F: Iterable[Hashable] = ()) -> BoundaryReport:
        mask = F if isinstance(F, int) else self.mask(F)
        circles = self._trace(mask, with_walks=True)
        comps = tuple(BoundaryComponent(walk, word, reduce_cyclic_arrow_word(word))
                      for word, walk in circles)
        k = self.components_count(mask)
        r = self.n_vertices - k
        n = bin(mask).count("1") - r
        return BoundaryReport(comps, k, len(comps), r, n,
                              self.is_orientable_subgraph(mask))

    def state_stats(self, F: Iterable[Hashable] = ()) -> tuple[int, int, int, int, int, bool]:
        """``(k, bc, r, n, genus_like, orientable)`` of the spanning subgraph ``F``."""
        rep = self.boundary_walks(F)
        return rep.k, rep.bc, rep.r, rep.n, rep.genus_like, rep.orientable

    # -- export ----------------------------------------------------------
    def to_spec(self) -> dict:
        """Rotation-system description (the JSON graph format)."""
        m = self.n_edges
        # per edge: end0 corners (first, second), end1 corners, twist
        end_order: dict[int, list] = {i: [] for i in range(m)}
        for cyc in self.vertex_cycles:
            for j in range(0, len(cyc), 2):
                end_order[cyc[j] >> 2].append((cyc[j], cyc[j + 1]))
        layout = {}
        for i in range(m):
            (f0, s0), (f1, s1) = end_order[i]
            # end 0 is the attaching segment containing corner 4i
            if 4 * i not in (f0, s0):
                (f0, s0), (f1, s1) = (f1, s1), (f0, s0)
            L0, R0 = s0, f0
            L1 = self.free[L0]
            R1 = self.free[R0]
            twist = f1 != L1
            layout[i] = {"L0": L0, "R0": R0, "L1": L1, "R1": R1, "twist": twist,
                         "ends": {(f0, s0): 0, (f1, s1): 1}}
        vertices = []
        for vi, cyc in enumerate(self.vertex_cycles):
            rot = []
            for j in range(0, len(cyc), 2):
                a, b = cyc[j], cyc[j + 1]
                i = a >> 2
                end = layout[i]["ends"].get((a, b))
                if end is None:
                    end = layout[i]["ends"][(b, a)]
                nxt = cyc[(j + 2) % len(cyc)]
                rot.append({
                    "end": f"{self.edge_ids[i]}.{end}",
                    "seg_arrows": _fmt_arrows(self.arc_word("e", a, b)),
                    "free_arrows": _fmt_arrows(self.arc_word("v", b, nxt)),
                })
            vertices.append({"id": f"v{vi}", "rotation": rot})
        for li, word in enumerate(self.lone):
            vertices.append({"id": f"v{len(self.vertex_cycles) + li}", "rotation": [],
                             "lone_arrows": _fmt_arrows(word)})
        edges = []
        for i, e in enumerate(self.edge_ids):
            lay = layout[i]
            item = {
                "id": e,
                "twist": lay["twist"],
                "sideL": _fmt_arrows(self.arc_word("e", lay["L0"], lay["L1"])),
                "sideR": _fmt_arrows(self.arc_word("e", lay["R0"], lay["R1"])),
            }
            if self.signs is not None:
                item["sign"] = "+" if self.signs[i] > 0 else "-"
            edges.append(item)
        return {"vertices": vertices, "edges": edges}

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_spec(), indent=indent)

    def __repr__(self) -> str:
        return (f"ArrowRibbonGraph(v={self.n_vertices}, e={self.n_edges}, "
                f"arrows={sum(len(w) for w in self.arrows.values()) + sum(map(len, self.lone))})")


def _store(arrows: dict, kind: str, p: int, q: int, word: Word) -> None:
    if not word:
        return
    if p > q:
        p, q, word = q, p, _flip(word)
    arrows[(kind, p, q)] = tuple(word)


def make_graph(edge_ids: Sequence, attach: Sequence[int], free: Sequence[int],
               corner: Sequence[int], arcs: Iterable[tuple[str, int, int, Word]] = (),
               lone: Iterable[Word] = (), signs: Sequence[int] | None = None,
               sides: Sequence[bool] | None = None) -> ArrowRibbonGraph:
    """Assemble a graph from raw involutions; ``arcs`` may use either orientation."""
    arrows: dict = {}
    for kind, p, q, word in arcs:
        if word:
            key = (kind, min(p, q), max(p, q))
            if key in arrows:
                raise GraphError(f"arrows given twice for arc {key}")
            _store(arrows, kind, p, q, tuple(word))
    return ArrowRibbonGraph(
        tuple(edge_ids), tuple(attach), tuple(free), tuple(corner), arrows,
        tuple(tuple(w) for w in lone),
        None if signs is None else tuple(signs),
        None if sides is None else tuple(sides),
    )


def _parse_end(raw: Any) -> tuple[Hashable, int]:
    if isinstance(raw, str):
        eid, sep, end = raw.rpartition(".")
        if not sep or end not in ("0", "1"):
            raise GraphError(f"malformed end reference {raw!r}")
        return _norm_id(eid), int(end)
    if isinstance(raw, (list, tuple)) and len(raw) == 2 and raw[1] in (0, 1):
        return _norm_id(raw[0]), raw[1]
    raise GraphError(f"malformed end reference {raw!r}")


def from_rotation_system(spec: Mapping) -> ArrowRibbonGraph:
    """Build a graph from the rotation-system description (see module doc)."""
    try:
        raw_edges = list(spec.get("edges", []))
        raw_vertices = list(spec.get("vertices", []))
    except AttributeError:
        raise GraphError("graph spec must be a mapping with 'vertices' and 'edges'") from None
    edge_ids = []
    twist = {}
    sides_words = {}
    signs = []
    for item in raw_edges:
        if "id" not in item:
            raise GraphError("edge without id")
        e = _norm_id(item["id"])
        if e in twist:
            raise GraphError(f"duplicate edge id {e!r}")
        edge_ids.append(e)
        twist[e] = bool(item.get("twist", False))
        sides_words[e] = (_parse_arrows(item.get("sideL"), f"edge {e} sideL"),
                          _parse_arrows(item.get("sideR"), f"edge {e} sideR"))
        sg = item.get("sign")
        if sg not in (None, "+", "-", 1, -1):
            raise GraphError(f"bad sign {sg!r} on edge {e!r}")
        signs.append(None if sg is None else (1 if sg in ("+", 1) else -1))
    if any(s is None for s in signs) and any(s is not None for s in signs):
        raise GraphError("either every edge or no edge carries a sign")
    pos = {e: i for i, e in enumerate(edge_ids)}
    n = 4 * len(edge_ids)
    attach = [None] * n
    corner = [None] * n
    free = [None] * n
    sides = [False] * n
    arcs = []
    lone = []
    used = set()
    for v in raw_vertices:
        vid = v.get("id")
        rotation = list(v.get("rotation", []))
        lone_word = _parse_arrows(v.get("lone_arrows"), f"vertex {vid} lone_arrows")
        if not rotation:
            lone.append(lone_word)
            continue
        if lone_word:
            raise GraphError(f"vertex {vid!r} has edges and lone arrows")
        entries = []
        for item in rotation:
            e, end = _parse_end(item.get("end"))
            if e not in pos:
                raise GraphError(f"vertex {vid!r} references unknown edge {e!r}")
            if (e, end) in used:
                raise GraphError(f"edge end {e}.{end} used twice")
            used.add((e, end))
            base = 4 * pos[e]
            if end == 0:
                first, second = base + 1, base + 0
            elif twist[e]:
                first, second = base + 3, base + 2
            else:
                first, second = base + 2, base + 3
            entries.append((first, second, item))
        for j, (first, second, item) in enumerate(entries):
            attach[first], attach[second] = second, first
            sides[first] = True
            nxt = entries[(j + 1) % len(entries)][0]
            corner[second], corner[nxt] = nxt, second
            arcs.append(("e", first, second,
                         _parse_arrows(item.get("seg_arrows"), f"vertex {vid} segment")))
            arcs.append(("v", second, nxt,
                         _parse_arrows(item.get("free_arrows"), f"vertex {vid} free arc")))
    for e, i in pos.items():
        for end in (0, 1):
            if (e, end) not in used:
                raise GraphError(f"edge end {e}.{end} is not attached to any vertex")
        base = 4 * i
        free[base], free[base + 2] = base + 2, base
        free[base + 1], free[base + 3] = base + 3, base + 1
        wl, wr = sides_words[e]
        arcs.append(("e", base, base + 2, wl))
        arcs.append(("e", base + 1, base + 3, wr))
    return make_graph(edge_ids, attach, free, corner, arcs, lone,
                      None if not signs or signs[0] is None else signs, sides)


def from_json(text: str) -> ArrowRibbonGraph:
    try:
        spec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid JSON: {exc}") from None
    return from_rotation_system(spec)


def from_arrow_presentation(circles: Sequence[Sequence]) -> ArrowRibbonGraph:
    """Ribbon graph from an arrow presentation.

    Each circle is a cyclic list of ``(label, direction)`` with direction
    ``"W"``/``+1`` (along the circle's reading order) or ``"A"``/``-1``.
    Each label must occur exactly twice; an edge ribbon is glued so that
    both of its marking arrows follow one orientation of the ribbon boundary.
    The marking arrows stay behind as decoration on the attaching arcs.
    """
    occurrences: dict = {}
    for ci, circle in enumerate(circles):
        for j, item in enumerate(circle):
            try:
                label, direction = item
            except (TypeError, ValueError):
                raise GraphError(f"malformed arrow {item!r} on circle {ci}") from None
            if direction in ("W", 1, True):
                w = WITH
            elif direction in ("A", -1, False):
                w = AGAINST
            else:
                raise GraphError(f"bad direction {direction!r} on circle {ci}")
            occurrences.setdefault(label, []).append((ci, j, w))
    for label, occ in occurrences.items():
        if len(occ) != 2:
            raise GraphError(f"label {label!r} occurs {len(occ)} times, expected 2")
    edge_ids = list(occurrences)
    pos = {e: i for i, e in enumerate(edge_ids)}
    n = 4 * len(edge_ids)
    attach = [None] * n
    corner = [None] * n
    free = [None] * n
    sides = [False] * n
    arcs = []
    lone = []
    seen_count: dict = {}
    flags_at: dict = {}
    for ci, circle in enumerate(circles):
        if not circle:
            lone.append(())
            continue
        entries = []
        for j, (label, direction) in enumerate(circle):
            k = seen_count.get(label, 0)
            seen_count[label] = k + 1
            base = 4 * pos[label] + 2 * k
            first, second = base, base + 1
            w = direction in ("W", 1, True)
            tail, head = (first, second) if w else (second, first)
            flags_at.setdefault(label, []).append((tail, head))
            entries.append((first, second))
            arcs.append(("e", first, second, (w,)))
        for j, (first, second) in enumerate(entries):
            attach[first], attach[second] = second, first
            sides[first] = True
            nxt = entries[(j + 1) % len(entries)][0]
            corner[second], corner[nxt] = nxt, second
    for label, ((t0, h0), (t1, h1)) in flags_at.items():
        free[t0], free[h1] = h1, t0
        free[h0], free[t1] = t1, h0
    return make_graph(edge_ids, attach, free, corner, arcs, lone, None, sides)


def boundary_walks(G: ArrowRibbonGraph, F: Iterable[Hashable] = ()) -> BoundaryReport:
    return G.boundary_walks(F)


def state_stats(G: ArrowRibbonGraph, F: Iterable[Hashable] = ()):
    return G.state_stats(F)


def random_graph(rng: random.Random, n_vertices: int, n_edges: int, *,
                 twist_prob: float = 0.3, arrow_prob: float = 0.3,
                 signed: bool = False, max_arrows: int = 2) -> ArrowRibbonGraph:
    """Random arrow ribbon graph built through the rotation-system path."""
    ends = [(f"e{i}", j) for i in range(n_edges) for j in (0, 1)]
    rng.shuffle(ends)
    rotations: list[list] = [[] for _ in range(max(n_vertices, 1))]
    for k, end in enumerate(ends):
        v = k if k < len(rotations) else rng.randrange(len(rotations))
        rotations[v].append(end)

    def arrows():
        if rng.random() >= arrow_prob:
            return []
        return [rng.choice("WA") for _ in range(rng.randint(1, max_arrows))]

    vertices = []
    for vi, rot in enumerate(rotations):
        rng.shuffle(rot)
        item: dict = {"id": f"v{vi}",
                      "rotation": [{"end": f"{e}.{j}", "seg_arrows": arrows(),
                                    "free_arrows": arrows()} for e, j in rot]}
        if not rot:
            item["lone_arrows"] = arrows()
        vertices.append(item)
    edges = []
    for i in range(n_edges):
        item = {"id": f"e{i}", "twist": rng.random() < twist_prob,
                "sideL": arrows(), "sideR": arrows()}
        if signed:
            item["sign"] = rng.choice("+-")
        edges.append(item)
    return from_rotation_system({"vertices": vertices, "edges": edges})
