"""
Restricted W(2,2)-modules: the trivial module and Verma modules.

The Verma module M(c, h_L, h_W) has basis the PBW monomials in negative
generators applied to a highest-weight vector v with

    L_0 v = h_L v,  W_0 v = h_W v,  C v = c v,  L_n v = W_n v = 0 (n > 0).

A basis key is the tuple of negative generators sorted by
:func:`~w22.algebra.pbw_key`; the empty tuple is v itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Generator, bracket_generators
from .exact import Vector, as_scalar
from .module import Module, ModuleMismatch

__all__ = [
    "HighestWeightData",
    "RestrictedVector",
    "TrivialModule",
    "VermaModule",
    "act_restricted",
    "restriction_bound",
    "pbw_monomials",
]


class RestrictedVector(Vector):
    """Vector of a restricted module; remembers its parent module."""

    __slots__ = ("module",)

    def __init__(self, terms=None, module=None):
        super().__init__(terms)
        self.module = module

    @classmethod
    def _raw(cls, terms, module=None):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.module = module
        return obj

    def _like(self, terms):
        return RestrictedVector._raw(terms, self.module)

    def __add__(self, other):
        if isinstance(other, RestrictedVector) and other.module is not self.module \
                and self.module is not None and other.module is not None:
            raise ModuleMismatch("adding vectors of different modules")
        out = Vector.__add__(self, other)
        if out is not NotImplemented and out.module is None and isinstance(other, RestrictedVector):
            out.module = other.module
        return out

    def __reduce__(self):
        return (RestrictedVector, (dict(self.terms), self.module))


@dataclass(frozen=True)
class HighestWeightData:
    c: object
    h_L: object
    h_W: object

    def __post_init__(self):
        for name in ("c", "h_L", "h_W"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))


class _Restricted(Module):
    vector_type = RestrictedVector

    def wrap(self, terms):
        return RestrictedVector._raw(terms, self)

    def check(self, vec):
        if not isinstance(vec, RestrictedVector):
            raise ModuleMismatch("expected a RestrictedVector, got %s" % type(vec).__name__)
        if vec.module is not None and vec.module is not self and vec.module != self:
            raise ModuleMismatch("vector belongs to %r, not %r" % (vec.module, self))

    def vector(self, terms):
        return RestrictedVector({tuple(k): as_scalar(c) for k, c in terms.items()}, self)


class TrivialModule(_Restricted):
    """One-dimensional module on which every generator, C included, acts by 0."""

    def act_basis(self, g, key):
        return {}

    def highest(self):
        return RestrictedVector._raw({(): Fraction(1)}, self)

    def restriction_bound(self, v) -> int:
        return 0

    def __eq__(self, other):
        return isinstance(other, TrivialModule)

    def __hash__(self):
        return hash("trivial")

    def __repr__(self):
        return "TrivialModule()"


class VermaModule(_Restricted):
    """Verma module of W(2,2) with highest weight data (c, h_L, h_W)."""

    def __init__(self, data: HighestWeightData):
        super().__init__()
        self.data = data

    def __eq__(self, other):
        return isinstance(other, VermaModule) and other.data == self.data

    def __hash__(self):
        return hash(self.data)

    def __repr__(self):
        d = self.data
        return "VermaModule(c=%s, h_L=%s, h_W=%s)" % (d.c, d.h_L, d.h_W)

    def highest(self):
        return RestrictedVector._raw({(): Fraction(1)}, self)

    def monomial(self, *gens, coef=1):
        """PBW monomial ``gens[0] * gens[1] * ... * v``, normalised via the action."""
        v = self.highest()
        for g in reversed(gens):
            v = self.act(g, v)
        return v.scale(as_scalar(coef))

    def act_basis(self, g: Generator, mono: tuple) -> dict:
        d = self.data
        if g.tag == "C":
            return {mono: d.c}
        if not mono:
            if g.grade > 0:
                return {}
            if g.grade == 0:
                return {(): d.h_L if g.tag == "L" else d.h_W}
            return {(g,): Fraction(1)}
        y = mono[0]
        rest = mono[1:]
        if g.grade < 0 and not (y < g):
            return {(g,) + mono: Fraction(1)}
        # g y rest = y (g rest) + [g, y] rest
        out = {}
        for m, a in self.image(g, rest).items():
            for m2, b in self.image(y, m).items():
                _acc(out, m2, a * b)
        for h, c in bracket_generators(g, y).items():
            for m, a in self.image(h, rest).items():
                _acc(out, m, c * a)
        return out

    def restriction_bound(self, v) -> int:
        depth = max((depth_of(m) for m in v.terms), default=0)
        return depth + 1


def _acc(out, k, c):
    y = out.get(k, 0) + c
    if y == 0:
        out.pop(k, None)
    else:
        out[k] = y


def depth_of(mono) -> int:
    """PBW depth: minus the total grade of a negative monomial."""
    return -sum(g.grade for g in mono)


def act_restricted(g: Generator, v: RestrictedVector) -> RestrictedVector:
    if v.module is None:
        raise ModuleMismatch("vector has no parent module")
    return v.module.act(g, v)


def restriction_bound(v: RestrictedVector) -> int:
    """An i with W_n v = 0 for all n >= i (sound over-approximation)."""
    if v.module is None:
        raise ModuleMismatch("vector has no parent module")
    return v.module.restriction_bound(v)


def _partitions(n, max_part=None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def pbw_monomials(depth: int):
    """All PBW keys of exactly the given depth, sorted."""
    out = set()
    for parts in _partitions(depth):
        # each part of size k is L_{-k} or W_{-k}
        _label(parts, 0, (), out)
    return sorted(out)


def _label(parts, i, acc, out):
    if i == len(parts):
        out.add(tuple(sorted(acc)))
        return
    k = parts[i]
    for tag in ("L", "W"):
        _label(parts, i + 1, acc + (Generator(tag, -k),), out)
