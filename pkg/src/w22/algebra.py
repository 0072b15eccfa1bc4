"""
The Lie algebra W(2,2).

Basis ``L_n, W_n (n in Z)`` and a central ``C`` with

    [L_m, L_n] = (n-m) L_{m+n} + delta_{m+n,0} (m^3-m)/12 C
    [L_m, W_n] = (n-m) W_{m+n} + delta_{m+n,0} (m^3-m)/12 C

and every other bracket of basis elements zero.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering

from .exact import Vector, as_scalar

__all__ = ["Generator", "L", "W", "C", "LieElement", "bracket", "grade",
           "basis_generators", "pbw_key"]

_TAGS = ("L", "W", "C")


@total_ordering
class Generator:
    """Basis symbol ``L_n``, ``W_n`` or the central ``C`` (no index).

    Generators are ordered by :func:`pbw_key`.
    """

    __slots__ = ("tag", "index", "_key", "_hash")

    def __init__(self, tag: str, index: int | None = None):
        if tag not in _TAGS:
            raise ValueError("unknown generator tag %r" % (tag,))
        if tag == "C":
            if index is not None:
                raise ValueError("central element carries no index")
        elif not isinstance(index, int) or isinstance(index, bool):
            raise ValueError("%s needs an integer index" % tag)
        self.tag = tag
        self.index = index
        # C first, then grade ascending, W before L inside a grade
        if tag == "C":
            self._key = (0, 0, 0)
        else:
            self._key = (1, index, 0 if tag == "W" else 1)
        self._hash = hash((tag, index))

    def __eq__(self, other):
        if not isinstance(other, Generator):
            return NotImplemented
        return self.tag == other.tag and self.index == other.index

    def __lt__(self, other):
        if not isinstance(other, Generator):
            return NotImplemented
        return self._key < other._key

    def __hash__(self):
        return self._hash

    def __reduce__(self):
        return (Generator, (self.tag, self.index))

    @property
    def grade(self) -> int:
        return 0 if self.tag == "C" else self.index

    def __repr__(self):
        if self.tag == "C":
            return "C"
        return "%s_%d" % (self.tag, self.index)


def L(n: int) -> Generator:
    return Generator("L", n)


def W(n: int) -> Generator:
    return Generator("W", n)


C = Generator("C")


def pbw_key(g: Generator):
    return g._key


def grade(g: Generator) -> int:
    """Degree of ``g`` in the Z-grading; ``C`` sits in degree 0."""
    return g.grade


def basis_generators(bound: int, central: bool = True):
    """All ``L_n, W_n`` with ``|n| <= bound`` (plus ``C``), sorted."""
    gens = [Generator(t, n) for n in range(-bound, bound + 1) for t in ("L", "W")]
    if central:
        gens.append(C)
    return sorted(gens)


class LieElement(Vector):
    """Finite linear combination of generators."""

    __slots__ = ()

    @classmethod
    def of(cls, g: Generator, c=1):
        return cls({g: as_scalar(c)})

    def grades(self):
        return {grade(g) for g in self.terms}


def _cocycle(m):
    return Fraction(m ** 3 - m, 12)


def bracket_generators(x: Generator, y: Generator) -> dict:
    """Bracket of two basis elements as a ``{Generator: coefficient}`` dict."""
    if x.tag == "C" or y.tag == "C":
        return {}
    if x.tag == "W" and y.tag == "W":
        return {}
    if x.tag == "W":
        # [W_m, L_n] = -[L_n, W_m]
        return {g: -c for g, c in bracket_generators(y, x).items()}
    m, n = x.index, y.index
    out = {}
    if n != m:
        out[Generator(y.tag, m + n)] = Fraction(n - m)
    if m + n == 0 and m ** 3 != m:
        out[C] = _cocycle(m)
    return out


def bracket(x, y) -> LieElement:
    """Bilinear bracket of generators or :class:`LieElement` values."""
    if isinstance(x, Generator):
        x = LieElement.of(x)
    if isinstance(y, Generator):
        y = LieElement.of(y)
    terms = {}
    for gx, a in x.terms.items():
        for gy, b in y.terms.items():
            for g, c in bracket_generators(gx, gy).items():
                v = terms.get(g, 0) + a * b * c
                if v == 0:
                    terms.pop(g, None)
                else:
                    terms[g] = v
    return LieElement._raw(terms)
