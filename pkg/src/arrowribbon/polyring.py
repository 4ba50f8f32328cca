"""Exact sparse multivariate Laurent polynomials over the integers.

Exponents are stored as integer multiples of 1/4 so that substitutions such
as ``A = t^(-1/4)`` or ``x = (X/Y)^(1/2)`` stay exact.  Coefficients are
Python integers (arbitrary precision).

Variables belong to a small set of families.  Bare families (``a``, ``c``,
``A``, ``B``, ``d``, ``t``, ``q``, ``X``, ``Y``, ``Z``) carry no index; the
families ``b``, ``x``, ``y`` and ``alpha`` are indexed by an edge id (bare
``x`` and ``y`` are the Tutte variables) and ``K`` by a positive
half-integer.  Any other identifier is a ``named``
variable.

Text form::

    term     = [sign] [coeff "*"] factor ("*" factor)*  |  [sign] coeff
    factor   = var ["^" exponent]
    exponent = ["-"] int ["/2" | "/4"]
    var      = a | c | A | ... | b[<edge>] | x[<edge>] | K[<n>] | K[<n>/2] | name

Terms are printed in ascending graded-lexicographic order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "FAMILIES",
    "Var",
    "Monomial",
    "LaurentPoly",
    "PolyError",
    "NonInvertibleSubstitution",
    "FractionalPowerError",
    "PolySyntaxError",
    "var",
    "b_var",
    "x_var",
    "y_var",
    "alpha_var",
    "K_var",
    "poly_mul",
    "substitute",
    "format_poly",
    "parse_poly",
    "iter_terms",
]

FAMILIES = ("a", "c", "A", "B", "d", "t", "q", "X", "Y", "Z",
            "x", "y", "b", "alpha", "K", "named")
_RANK = {f: i for i, f in enumerate(FAMILIES)}
_BARE = frozenset(("a", "c", "A", "B", "d", "t", "q", "X", "Y", "Z"))
_EDGE_INDEXED = frozenset(("b", "x", "y", "alpha"))

EdgeId = Union[int, str]


class PolyError(ValueError):
    """Base class for polynomial errors."""


class NonInvertibleSubstitution(PolyError):
    """A negative power of a variable was mapped to a non-unit polynomial."""


class FractionalPowerError(PolyError):
    """A fractional power could not be taken exactly."""


class PolySyntaxError(PolyError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _index_key(index) -> tuple:
    if index is None:
        return ()
    if isinstance(index, int):
        return (0, index)
    return (1, str(index))


@dataclass(frozen=True, order=True)
class Var:
    """A polynomial variable.  Compare/sort through ``(rank, ikey)`` only.

    For the ``K`` family ``index`` is the doubled half-integer, so ``K[1/2]``
    has ``index == 1`` and ``K[2]`` has ``index == 4``.
    """

    rank: int
    ikey: tuple
    family: str = field(compare=False)
    index: EdgeId | None = field(compare=False)

    @classmethod
    def of(cls, family: str, index: EdgeId | None = None) -> "Var":
        if family not in _RANK:
            raise PolyError(f"unknown variable family {family!r}")
        if family in _BARE and index is not None:
            raise PolyError(f"family {family!r} takes no index")
        if family == "K":
            if not isinstance(index, int) or index <= 0:
                raise PolyError("K index must be a positive doubled half-integer")
        if family == "named" and not isinstance(index, str):
            raise PolyError("named variables need a string name")
        return cls(_RANK[family], _index_key(index), family, index)

    def __str__(self) -> str:
        if self.family in _BARE or self.index is None:
            return self.family
        if self.family == "named":
            return str(self.index)
        if self.family == "K":
            n = self.index
            return f"K[{n // 2}]" if n % 2 == 0 else f"K[{n}/2]"
        return f"{self.family}[{self.index}]"

    def __repr__(self) -> str:
        return f"Var({self})"


def var(name: str) -> Var:
    """Bare variable ``a``, ``x``, ``A`` ... or a named one such as ``u``."""
    if name in _BARE or name in _EDGE_INDEXED:
        return Var.of(name)
    return Var.of("named", name)


def b_var(e: EdgeId) -> Var:
    return Var.of("b", e)


def x_var(e: EdgeId) -> Var:
    return Var.of("x", e)


def y_var(e: EdgeId) -> Var:
    return Var.of("y", e)


def alpha_var(e: EdgeId) -> Var:
    return Var.of("alpha", e)


def K_var(i) -> Var:
    """``K_i`` for a positive half-integer ``i`` (int, Fraction or str)."""
    doubled = Fraction(i) * 2
    if doubled.denominator != 1 or doubled <= 0:
        raise PolyError(f"K index must be a positive half-integer, got {i}")
    return Var.of("K", int(doubled))


# A monomial is a sorted tuple of (Var, quarters) with nonzero exponents.
Monomial = tuple


def _mono_from_dict(exps: Mapping[Var, int]) -> Monomial:
    return tuple(sorted((v, e) for v, e in exps.items() if e))


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return _mono_from_dict(exps)


def _mono_cmp(m1: Monomial, m2: Monomial) -> int:
    d1 = sum(e for _, e in m1)
    d2 = sum(e for _, e in m2)
    if d1 != d2:
        return -1 if d1 < d2 else 1
    i = j = 0
    while i < len(m1) or j < len(m2):
        if j >= len(m2) or (i < len(m1) and m1[i][0] < m2[j][0]):
            e1, e2 = m1[i][1], 0
            i += 1
        elif i >= len(m1) or m2[j][0] < m1[i][0]:
            e1, e2 = 0, m2[j][1]
            j += 1
        else:
            e1, e2 = m1[i][1], m2[j][1]
            i += 1
            j += 1
        if e1 != e2:
            return -1 if e1 < e2 else 1
    return 0


_mono_key = cmp_to_key(_mono_cmp)


def _fmt_exp(quarters: int) -> str:
    if quarters % 4 == 0:
        return str(quarters // 4)
    if quarters % 2 == 0:
        return f"{quarters // 2}/2"
    return f"{quarters}/4"


def _fmt_mono(m: Monomial) -> str:
    parts = []
    for v, e in m:
        parts.append(str(v) if e == 4 else f"{v}^{_fmt_exp(e)}")
    return "*".join(parts)


class LaurentPoly:
    """Immutable sparse Laurent polynomial with integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self._terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({(): c})

    @classmethod
    def monomial(cls, exps: Mapping[Var, Fraction | int] | None = None,
                 coeff: int = 1) -> "LaurentPoly":
        """Single term ``coeff * prod(v^e)`` with exponents given in ordinary units."""
        quarters = {}
        for v, e in (exps or {}).items():
            q = Fraction(e) * 4
            if q.denominator != 1:
                raise FractionalPowerError(f"exponent {e} is not a multiple of 1/4")
            quarters[v] = int(q)
        return cls({_mono_from_dict(quarters): coeff})

    @classmethod
    def of(cls, v: Var | str, exponent: Fraction | int = 1) -> "LaurentPoly":
        if isinstance(v, str):
            v = var(v)
        return cls.monomial({v: exponent})

    @classmethod
    def coerce(cls, value) -> "LaurentPoly":
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int):
            return cls.constant(value)
        if isinstance(value, Var):
            return cls.of(value)
        if isinstance(value, str):
            return parse_poly(value)
        raise TypeError(f"cannot convert {type(value).__name__} to LaurentPoly")

    # -- inspection ---------------------------------------------------
    @property
    def terms(self) -> Mapping[Monomial, int]:
        return self._terms

    def items(self) -> Iterator[tuple[Monomial, int]]:
        """Terms in canonical (ascending graded-lex) order."""
        for m in sorted(self._terms, key=_mono_key):
            yield m, self._terms[m]

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit_monomial(self) -> bool:
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def variables(self) -> set[Var]:
        return {v for m in self._terms for v, _ in m}

    def exponents_integral(self) -> bool:
        return all(e % 4 == 0 for m in self._terms for _, e in m)

    def coefficient(self, exps: Mapping[Var, Fraction | int] | None = None) -> int:
        key = next(iter(LaurentPoly.monomial(exps)._terms))
        return self._terms.get(key, 0)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({m: c * other for m, c in self._terms.items()})
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n) -> "LaurentPoly":
        return self.power(Fraction(n))

    def power(self, exponent: Fraction | int) -> "LaurentPoly":
        """Raise to a power that is a multiple of 1/4.

        Non-integer and negative powers exist only for monomials (coefficient
        +-1 for negatives, exactly 1 for fractional powers).
        """
        exponent = Fraction(exponent)
        if exponent.denominator == 1 and exponent >= 0:
            result = LaurentPoly.constant(1)
            base = self
            n = int(exponent)
            while n:
                if n & 1:
                    result = result * base
                n >>= 1
                if n:
                    base = base * base
            return result
        if not self.is_monomial():
            if exponent < 0:
                raise NonInvertibleSubstitution(
                    f"cannot invert non-monomial {self}")
            raise FractionalPowerError(f"cannot take power {exponent} of {self}")
        (m, c), = self._terms.items()
        if exponent.denominator == 1:
            if abs(c) != 1:
                raise NonInvertibleSubstitution(f"coefficient {c} is not a unit")
            coeff = c ** int(abs(exponent))
        else:
            if c != 1:
                raise FractionalPowerError(
                    f"cannot take power {exponent} of coefficient {c}")
            coeff = 1
        exps = {}
        for v, e in m:
            q = e * exponent
            if q.denominator != 1:
                raise FractionalPowerError(
                    f"power {exponent} of {v}^{_fmt_exp(e)} is not a quarter power")
            exps[v] = int(q)
        return LaurentPoly({_mono_from_dict(exps): coeff})

    def inverse(self) -> "LaurentPoly":
        return self.power(-1)

    # -- comparison / hashing ------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_poly(self)!r})"

    def substitute(self, mapping: Mapping[Var, object]) -> "LaurentPoly":
        return substitute(self, mapping)


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def substitute(p: LaurentPoly, mapping: Mapping[Var, object]) -> LaurentPoly:
    """Apply the ring homomorphism sending each mapped variable to its image.

    Variables not in ``mapping`` are left alone.  Images may be anything
    ``LaurentPoly.coerce`` accepts.

    Raises:
        NonInvertibleSubstitution: a variable occurring with a negative
            exponent is mapped to something other than a unit monomial.
        FractionalPowerError: a fractional exponent cannot be carried through.
    """
    images = {v: LaurentPoly.coerce(img) for v, img in mapping.items()}
    cache: dict[tuple[Var, int], LaurentPoly] = {}
    out: dict[Monomial, int] = {}
    for m, c in p.terms.items():
        kept = []
        term = LaurentPoly.constant(c)
        for v, e in m:
            img = images.get(v)
            if img is None:
                kept.append((v, e))
                continue
            key = (v, e)
            powered = cache.get(key)
            if powered is None:
                powered = cache[key] = img.power(Fraction(e, 4))
            term = term * powered
        if kept:
            term = term * LaurentPoly({tuple(kept): 1})
        for tm, tc in term.terms.items():
            out[tm] = out.get(tm, 0) + tc
    return LaurentPoly(out)


def format_poly(p: LaurentPoly) -> str:
    """Deterministic text form, e.g. ``"t + t^3 - t^4"``."""
    if p.is_zero():
        return "0"
    chunks = []
    for i, (m, c) in enumerate(p.items()):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if not m:
            body = str(mag)
        elif mag == 1:
            body = _fmt_mono(m)
        else:
            body = f"{mag}*{_fmt_mono(m)}"
        if i == 0:
            chunks.append(("-" if c < 0 else "") + body)
        else:
            chunks.append(f" {sign} {body}")
    return "".join(chunks)


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<sym>[-+*^/\[\]])
""", re.VERBOSE)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str) -> None:
        kind, text, pos = self.take()
        if text != value:
            raise PolySyntaxError(f"expected {value!r}, found {text or 'end of input'!r}", pos)

    def parse(self) -> LaurentPoly:
        out: dict[Monomial, int] = {}
        first = True
        while True:
            kind, text, pos = self.peek()
            if kind == "end":
                if first:
                    raise PolySyntaxError("empty polynomial", pos)
                break
            sign = 1
            if kind == "sym" and text in ("+", "-"):
                self.take()
                sign = -1 if text == "-" else 1
            elif not first:
                raise PolySyntaxError(f"expected '+' or '-', found {text!r}", pos)
            coeff, mono = self.term()
            out[mono] = out.get(mono, 0) + sign * coeff
            first = False
        return LaurentPoly(out)

    def term(self) -> tuple[int, Monomial]:
        coeff = 1
        exps: dict[Var, int] = {}
        kind, text, pos = self.peek()
        if kind == "num":
            self.take()
            coeff = int(text)
            if self.peek()[1] != "*":
                return coeff, ()
            self.take()
        while True:
            v, e = self.factor()
            exps[v] = exps.get(v, 0) + e
            if self.peek()[1] != "*":
                break
            self.take()
        return coeff, _mono_from_dict(exps)

    def factor(self) -> tuple[Var, int]:
        kind, text, pos = self.take()
        if kind != "ident":
            raise PolySyntaxError(f"expected a variable, found {text or 'end of input'!r}", pos)
        if self.peek()[1] == "[":
            self.take()
            index = self.index(text, pos)
            self.expect("]")
            try:
                v = K_var(index) if text == "K" else Var.of(text, index)
            except PolyError as exc:
                raise PolySyntaxError(str(exc), pos) from None
        elif text in _BARE or text in _EDGE_INDEXED:
            v = Var.of(text)
        elif text == "K":
            raise PolySyntaxError(f"variable {text!r} needs an index", pos)
        else:
            v = Var.of("named", text)
        e = 4
        if self.peek()[1] == "^":
            self.take()
            e = self.exponent()
        return v, e

    def index(self, family: str, pos: int):
        kind, text, p = self.take()
        if family == "K":
            if kind != "num":
                raise PolySyntaxError("K index must be a number", p)
            value = Fraction(int(text))
            if self.peek()[1] == "/":
                self.take()
                k2, t2, p2 = self.take()
                if t2 != "2":
                    raise PolySyntaxError("K index denominator must be 2", p2)
                value /= 2
            return value
        if kind == "num":
            return int(text)
        if kind == "ident":
            return text
        raise PolySyntaxError(f"bad index {text!r}", p)

    def exponent(self) -> int:
        sign = 1
        if self.peek()[1] == "-":
            self.take()
            sign = -1
        kind, text, pos = self.take()
        if kind != "num":
            raise PolySyntaxError(f"expected exponent, found {text or 'end of input'!r}", pos)
        num = int(text)
        scale = 4
        if self.peek()[1] == "/":
            self.take()
            k2, t2, p2 = self.take()
            if t2 == "2":
                scale = 2
            elif t2 == "4":
                scale = 1
            else:
                raise PolySyntaxError("exponent denominator must be 2 or 4", p2)
        return sign * num * scale


def parse_poly(text: str) -> LaurentPoly:
    """Inverse of :func:`format_poly`."""
    return _Parser(text).parse()


def iter_terms(p: LaurentPoly) -> Iterable[tuple[dict[Var, Fraction], int]]:
    """Terms in canonical order as ``({var: exponent}, coeff)`` pairs."""
    for m, c in p.items():
        yield {v: Fraction(e, 4) for v, e in m}, c
