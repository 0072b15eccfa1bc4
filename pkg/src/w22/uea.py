"""
Words in U(W(2,2)): application to modules and PBW straightening.

A word is a tuple of :class:`~w22.algebra.Generator`; the leftmost factor
acts last.  PBW normal form sorts factors by :func:`~w22.algebra.pbw_key`
(``C`` first, then by grade, ``W`` before ``L`` within a grade).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .algebra import Generator, LieElement, W, bracket_generators
from .exact import Vector, as_scalar

__all__ = ["UeaElement", "word", "apply", "straighten", "is_pbw", "q_element",
           "commutator"]


class UeaElement(Vector):
    """Linear combination of words."""

    __slots__ = ()

    @classmethod
    def of(cls, *gens, coef=1):
        return cls({tuple(gens): as_scalar(coef)})

    @classmethod
    def one(cls):
        return cls({(): Fraction(1)})

    @classmethod
    def from_lie(cls, x: LieElement):
        return cls({(g,): c for g, c in x.terms.items()})

    def __mul__(self, other):
        if isinstance(other, UeaElement):
            terms = {}
            for wa, a in self.terms.items():
                for wb, b in other.terms.items():
                    w = wa + wb
                    c = terms.get(w, 0) + a * b
                    if c == 0:
                        terms.pop(w, None)
                    else:
                        terms[w] = c
            return UeaElement._raw(terms)
        if isinstance(other, Vector):
            return NotImplemented
        return self.scale(other)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            body = "*".join(map(repr, w)) or "1"
            parts.append("%s*%s" % (self.terms[w], body))
        return " + ".join(parts)


def word(*gens) -> UeaElement:
    return UeaElement.of(*gens)


def commutator(x: Generator, y: Generator) -> UeaElement:
    """``x*y - y*x`` as an element of U."""
    return UeaElement({(x, y): Fraction(1)}) - UeaElement({(y, x): Fraction(1)})


def apply(u, v, module):
    """Act with ``u`` (word, UeaElement, LieElement or Generator) on ``v``."""
    module.check(v)
    if isinstance(u, Generator):
        return module.act(u, v)
    if isinstance(u, LieElement):
        return module.act(u, v)
    if isinstance(u, tuple):
        u = UeaElement({u: Fraction(1)})
    acc = module.zero()
    for w, c in u.terms.items():
        x = v
        for g in reversed(w):
            if not x:
                break
            x = module.act(g, x)
        if x:
            acc = acc + x.scale(c)
    return acc


def is_pbw(w) -> bool:
    return all(not (b < a) for a, b in zip(w, w[1:]))


@lru_cache(maxsize=None)
def _straighten_word(w):
    for i in range(len(w) - 1):
        a, b = w[i], w[i + 1]
        if b < a:
            out = {}
            _add(out, _straighten_word(w[:i] + (b, a) + w[i + 2:]), 1)
            for g, c in bracket_generators(a, b).items():
                _add(out, _straighten_word(w[:i] + (g,) + w[i + 2:]), c)
            return out
    return {w: Fraction(1)}


def _add(acc, terms, c):
    for k, v in terms.items():
        y = acc.get(k, 0) + c * v
        if y == 0:
            acc.pop(k, None)
        else:
            acc[k] = y


def straighten(u) -> UeaElement:
    """PBW normal form of ``u`` via ``xy -> yx + [x,y]``."""
    if isinstance(u, tuple):
        u = UeaElement({u: Fraction(1)})
    out = {}
    for w, c in u.terms.items():
        _add(out, _straighten_word(w), c)
    return UeaElement._raw(out)


def q_element(alpha) -> UeaElement:
    """``alpha^-2 (W_0 W_0 - W_-1 W_1)``; acts as the identity on Omega(lambda, alpha, h)."""
    alpha = as_scalar(alpha)
    if alpha == 0:
        raise ValueError("q_element needs alpha != 0")
    c = 1 / (alpha * alpha)
    return UeaElement({(W(0), W(0)): c, (W(-1), W(1)): -c})
