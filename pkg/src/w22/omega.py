"""
Non-weight modules Omega(lambda, alpha) on C[s] and Omega(lambda, alpha, h)
on C[s, t], the maps F and G, and intertwiners between Omega modules.

Actions on monomials:

    Omega(lambda, alpha):     L_n s^p = lambda^n (s - n alpha)(s - n)^p,  W_n = C = 0
    Omega(lambda, alpha, h):  L_n s^p t^q = lambda^n (s-n)^p (s t^q + n G(t^q) - n^2 alpha F(t^q))
                              W_n s^p t^q = lambda^n (t - n alpha)(s - n)^p t^q,  C = 0

with g = (h(t) - h(alpha)) / (t - alpha), F(f) = g f - f', G(f) = t F(f) + h(alpha) f.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .algebra import Generator, L, W
from .exact import MultiPoly, UniPoly, as_scalar, divide_linear, monomials_upto, scalar_pow
from .linalg import Subspace, nullspace
from .module import Module, ModuleMismatch

__all__ = [
    "OmegaParams",
    "Omega2",
    "Omega3",
    "f_map",
    "g_map",
    "act_omega2",
    "act_omega3",
    "hom_space",
    "HomPrediction",
    "predicted_hom",
    "reach",
]


@dataclass(frozen=True)
class OmegaParams:
    """Parameters (lambda, alpha, h) of an Omega module; ``h`` defaults to 0."""

    lam: object
    alpha: object
    h: UniPoly = field(default_factory=UniPoly)

    def __post_init__(self):
        lam = as_scalar(self.lam)
        if lam == 0:
            raise ValueError("lambda must be nonzero")
        h = self.h
        if not isinstance(h, UniPoly):
            h = UniPoly.from_coeffs(h)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "alpha", as_scalar(self.alpha))
        object.__setattr__(self, "h", h)

    @property
    def g(self) -> UniPoly:
        g = self.__dict__.get("_g")
        if g is None:
            g = divide_linear(self.h, self.alpha)
            object.__setattr__(self, "_g", g)
        return g

    @property
    def h_at_alpha(self):
        return self.h(self.alpha)

    @property
    def simple(self) -> bool:
        return self.alpha != 0

    def __hash__(self):
        return hash((self.lam, self.alpha, self.h))

    def __repr__(self):
        return "OmegaParams(lam=%s, alpha=%s, h=%r)" % (self.lam, self.alpha, self.h)


def f_map(f: UniPoly, params: OmegaParams) -> UniPoly:
    """F(f) = g f - f'."""
    return params.g * f - f.derivative()


def g_map(f: UniPoly, params: OmegaParams) -> UniPoly:
    """G(f) = t F(f) + h(alpha) f."""
    return f_map(f, params).shift_up(1) + f.scale(params.h_at_alpha)


def _accum(out, key, c):
    y = out.get(key, 0) + c
    if y == 0:
        out.pop(key, None)
    else:
        out[key] = y


def _shifted_powers(p, n):
    """Coefficients of (s - n)^p as {exponent: coefficient}."""
    return {j: comb(p, j) * (-n) ** (p - j) for j in range(p + 1)}


def omega2_image(gen: Generator, p: int, lam, alpha) -> dict:
    """Image of s^p under ``gen`` in Omega(lambda, alpha), keyed by exponent."""
    if gen.tag != "L":
        return {}
    n = gen.index
    ln = scalar_pow(lam, n)
    out = {}
    # (s - n alpha) * (s - n)^p
    for j, b in _shifted_powers(p, n).items():
        _accum(out, j + 1, ln * b)
        _accum(out, j, -ln * n * alpha * b)
    return out


def omega3_image(gen: Generator, p: int, q: int, params: OmegaParams) -> dict:
    """Image of s^p t^q under ``gen`` in Omega(lambda, alpha, h), keyed by (p, q)."""
    if gen.tag == "C":
        return {}
    n = gen.index
    ln = scalar_pow(params.lam, n)
    alpha = params.alpha
    spow = _shifted_powers(p, n)
    out = {}
    if gen.tag == "W":
        for j, b in spow.items():
            _accum(out, (j, q + 1), ln * b)
            _accum(out, (j, q), -ln * n * alpha * b)
        return out
    tq = UniPoly.monomial(q)
    # s t^q + n G(t^q) - n^2 alpha F(t^q)
    inner = {(1, q): Fraction(1)}
    if n:
        for e, c in g_map(tq, params).items():
            _accum(inner, (0, e), n * c)
        for e, c in f_map(tq, params).items():
            _accum(inner, (0, e), -n * n * alpha * c)
    for j, b in spow.items():
        for (a, e), c in inner.items():
            _accum(out, (j + a, e), ln * b * c)
    return out


class Omega2(Module):
    """Omega(lambda, alpha) realised on C[s]."""

    def __init__(self, lam, alpha, var="s"):
        super().__init__()
        self.lam = as_scalar(lam)
        if self.lam == 0:
            raise ValueError("lambda must be nonzero")
        self.alpha = as_scalar(alpha)
        self.vars = (var,)

    vector_type = MultiPoly

    def wrap(self, terms):
        return MultiPoly._raw_in(self.vars, terms)

    def check(self, vec):
        if not isinstance(vec, MultiPoly) or vec.vars != self.vars:
            raise ModuleMismatch("expected a polynomial in %r" % (self.vars,))

    def act_basis(self, gen, key):
        return {(j,): c for j, c in omega2_image(gen, key[0], self.lam, self.alpha).items()}

    def monomial(self, p, c=1):
        return MultiPoly.monomial(self.vars, (p,), c)

    def __repr__(self):
        return "Omega2(lam=%s, alpha=%s)" % (self.lam, self.alpha)


class Omega3(Module):
    """Omega(lambda, alpha, h) realised on C[s, t]."""

    vector_type = MultiPoly

    def __init__(self, params: OmegaParams, vars=("s", "t")):
        super().__init__()
        self.params = params
        self.vars = tuple(vars)

    def wrap(self, terms):
        return MultiPoly._raw_in(self.vars, terms)

    def check(self, vec):
        if not isinstance(vec, MultiPoly) or vec.vars != self.vars:
            raise ModuleMismatch("expected a polynomial in %r" % (self.vars,))

    def act_basis(self, gen, key):
        return omega3_image(gen, key[0], key[1], self.params)

    def monomial(self, p, q, c=1):
        return MultiPoly.monomial(self.vars, (p, q), c)

    def __repr__(self):
        return "Omega3(%r)" % (self.params,)


def act_omega2(gen: Generator, v: MultiPoly, lam, alpha) -> MultiPoly:
    return Omega2(lam, alpha, var=v.vars[0]).act(gen, v)


def act_omega3(gen: Generator, v: MultiPoly, params: OmegaParams) -> MultiPoly:
    return Omega3(params, vars=v.vars).act(gen, v)


# ---------------------------------------------------------------------------
# intertwiners


@dataclass(frozen=True)
class HomPrediction:
    """Closed-form answer for Hom(Omega(p1), Omega(p2)).

    ``flag`` is set when h2 - h1 is non-constant with equal (lambda, alpha=0):
    the closed form is then read as zero.
    """

    dim: int
    basis: tuple
    flag: str | None = None


def _chi_constant(diff: UniPoly):
    """Return n when ``diff`` is the constant natural number n, else None."""
    if diff.degree > 0:
        return None
    c = as_scalar(diff[0])
    if isinstance(c, Fraction) and c.denominator == 1 and c >= 0:
        return int(c)
    return None


def predicted_hom(p1: OmegaParams, p2: OmegaParams) -> HomPrediction:
    """Dimension and basis predicted by the hom classification."""
    vars = ("s", "t")
    if p1.lam != p2.lam or p1.alpha != p2.alpha:
        return HomPrediction(0, ())
    if p1.alpha != 0:
        if p1.h == p2.h:
            return HomPrediction(1, (MultiPoly.const(vars),))
        return HomPrediction(0, ())
    diff = p2.h - p1.h
    n = _chi_constant(diff)
    if n is None:
        flag = "non-constant h2-h1" if diff.degree > 0 else None
        return HomPrediction(0, (), flag)
    return HomPrediction(1, (MultiPoly.monomial(vars, (0, n)),))


def hom_space(p1: OmegaParams, p2: OmegaParams, deg_bound: int, window: int | None = None,
              probe_degree: int = 1):
    """Basis of multiplication intertwiners Omega(p1) -> Omega(p2).

    Solves for v(s, t) of total degree <= ``deg_bound`` such that
    X(u v) = (X u) v for every X in {L_n, W_n : |n| <= window} and every
    probe monomial u of total degree <= ``probe_degree``.
    """
    if deg_bound < 0:
        raise ValueError("deg_bound must be >= 0")
    if window is None:
        window = deg_bound + 2
    if window < 1:
        raise ValueError("window must be >= 1")
    src = Omega3(p1)
    dst = Omega3(p2)
    vars = src.vars
    unknowns = monomials_upto(2, deg_bound)
    gens = [Generator(t, n) for n in range(-window, window + 1) for t in ("L", "W")]
    probes = monomials_upto(2, probe_degree)
    columns = []
    for mono in unknowns:
        col = {}
        vj = MultiPoly.monomial(vars, mono)
        for u in probes:
            uu = MultiPoly.monomial(vars, u)
            for x in gens:
                lhs = dst.act(x, uu * vj)
                rhs = src.act(x, uu) * vj
                for k, c in (lhs - rhs).items():
                    col[(u, x, k)] = c
        columns.append(col)
    out = []
    for sol in nullspace(columns, len(unknowns)):
        out.append(MultiPoly(vars, {m: c for m, c in zip(unknowns, sol) if c != 0}))
    out.sort(key=lambda p: sorted(p.terms, reverse=True), reverse=True)
    return out


def reach(module: Module, start, target, steps: int, window) -> tuple:
    """Iterate operator-window spans from ``start`` and test for ``target``.

    Returns ``(found, steps_used, dimension)``.  ``window`` is an iterable
    of indices n; each step adds L_n b and W_n b for every current basis
    vector b.
    """
    window = list(window)
    span = Subspace([start])
    frontier = [start]
    if target in span:
        return True, 0, span.dim
    for step in range(1, steps + 1):
        new = []
        for b in frontier:
            for n in window:
                for gen in (L(n), W(n)):
                    img = module.act(gen, b)
                    if img and span.add(img):
                        new.append(img)
        if target in span:
            return True, step, span.dim
        if not new:
            break
        frontier = new
    return False, steps, span.dim
