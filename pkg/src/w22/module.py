"""
Common machinery for W(2,2)-modules with a distinguished basis.

A concrete module implements :meth:`Module.act_basis`, returning the
image of one basis key under one generator as a ``{key: coefficient}``
dict.  Linear extension, caching and vector-type checks live here.
"""

from __future__ import annotations

from .algebra import Generator, LieElement, bracket
from .exact import Vector

__all__ = ["Module", "ModuleMismatch", "module_axiom_failures"]


class ModuleMismatch(ValueError):
    """Raised when a vector does not belong to the module it is fed to."""


class Module:
    vector_type = Vector

    def __init__(self):
        self._cache = {}

    # -- to override ---------------------------------------------------

    def act_basis(self, g: Generator, key) -> dict:
        raise NotImplementedError

    def check(self, vec) -> None:
        if not isinstance(vec, self.vector_type):
            raise ModuleMismatch("%r is not a vector of %r" % (type(vec).__name__, self))

    def wrap(self, terms: dict):
        return self.vector_type._raw(terms)

    # -----------------------------------------------------------------

    def zero(self):
        return self.wrap({})

    def image(self, g: Generator, key) -> dict:
        ck = (g, key)
        out = self._cache.get(ck)
        if out is None:
            out = {k: c for k, c in self.act_basis(g, key).items() if c != 0}
            self._cache[ck] = out
        return out

    def act(self, x, vec):
        """Action of a generator or a :class:`LieElement` on ``vec``."""
        self.check(vec)
        if isinstance(x, LieElement):
            acc = {}
            for g, a in x.terms.items():
                self._accumulate(acc, a, g, vec)
            return self.wrap(acc)
        acc = {}
        self._accumulate(acc, 1, x, vec)
        return self.wrap(acc)

    def _accumulate(self, acc, a, g, vec):
        for key, c in vec.terms.items():
            coef = a * c
            for k, x in self.image(g, key).items():
                y = acc.get(k, 0) + coef * x
                if y == 0:
                    acc.pop(k, None)
                else:
                    acc[k] = y


def module_axiom_failures(module, gens, vectors, limit: int = 5):
    """Triples (x, y, v) where (xy - yx) v differs from [x, y] v."""
    from .uea import apply, commutator

    failures = []
    gens = list(gens)
    for v in vectors:
        for i, x in enumerate(gens):
            for y in gens[i + 1:]:
                lhs = apply(commutator(x, y), v, module)
                rhs = module.act(bracket(x, y), v)
                if lhs != rhs:
                    failures.append((x, y, v))
                    if len(failures) >= limit:
                        return failures
    return failures
