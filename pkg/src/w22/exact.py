"""
Exact scalars and sparse polynomials.

Scalars are :class:`fractions.Fraction` by default.  A small
:class:`GaussianRational` type covers Q(i) when complex parameters are
wanted; it mixes freely with ints and Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb
from numbers import Rational

__all__ = [
    "GaussianRational",
    "as_scalar",
    "scalar_pow",
    "Vector",
    "UniPoly",
    "MultiPoly",
    "divide_linear",
    "derivative",
]


class GaussianRational:
    """Element re + im*i of Q(i), stored as two Fractions."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _lift(x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x, 0)
        return NotImplemented

    def _norm(self):
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return _gauss(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return _gauss(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return _gauss(self.re * o.re - self.im * o.im,
                      self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        n = o._norm()
        if n == 0:
            raise ZeroDivisionError("division by zero")
        return _gauss((self.re * o.re + self.im * o.im) / n,
                      (self.im * o.re - self.re * o.im) / n)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, n):
        return scalar_pow(self, n)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return False
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def sort_key(self):
        return (self.re, self.im)

    def __repr__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return "(%s)*i" % (self.im,)
        return "(%s + (%s)*i)" % (self.re, self.im)


def _gauss(re, im):
    if im == 0:
        return re
    return GaussianRational(re, im)


def as_scalar(x):
    """Coerce ``x`` to an exact scalar.

    Accepts ints, Fractions, GaussianRationals and strings such as
    ``"2/3"``, ``"-5"`` or ``"1/2+3/4i"``.  Floats are rejected.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, GaussianRational):
        return _gauss(x.re, x.im)
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        return _parse_scalar(x)
    raise TypeError("not an exact scalar: %r" % (x,))


def _parse_scalar(text):
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    if s.endswith("i") or s.endswith("j"):
        body = s[:-1]
        # split at the last sign that is not leading and not after '/'
        cut = None
        for pos in range(len(body) - 1, 0, -1):
            if body[pos] in "+-" and body[pos - 1] not in "/eE":
                cut = pos
                break
        if cut is None:
            re_part, im_part = "0", body
        else:
            re_part, im_part = body[:cut], body[cut:]
        if im_part in ("", "+"):
            im_part = "1"
        elif im_part == "-":
            im_part = "-1"
        return _gauss(_parse_rational(re_part, text), _parse_rational(im_part, text))
    return _parse_rational(s, text)


def _parse_rational(s, original):
    if "." in s or "e" in s.lower():
        raise ValueError("floating-point literal not allowed: %r" % (original,))
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError("bad scalar %r: %s" % (original, exc)) from None


def scalar_pow(x, n: int):
    """Exact ``x**n`` for integer ``n``; negative ``n`` needs ``x != 0``."""
    if not isinstance(n, int):
        raise TypeError("exponent must be an integer")
    if n < 0:
        if x == 0:
            raise ZeroDivisionError("zero base with negative exponent")
        return scalar_pow(1 / as_scalar(x), -n)
    if isinstance(x, GaussianRational):
        result = Fraction(1)
        base = x
        while n:
            if n & 1:
                result = base * result
            base = base * base
            n >>= 1
        return result
    return Fraction(x) ** n


class Vector:
    """Finite linear combination of hashable basis keys.

    The ``terms`` dict never stores zeros and is not mutated after
    construction; treat instances as immutable values.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        self.terms = {k: v for k, v in terms.items() if v != 0}

    @classmethod
    def _raw(cls, terms):
        # terms already clean
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    def _like(self, terms):
        return type(self)._raw(terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __getitem__(self, key):
        return self.terms.get(key, 0)

    def keys(self):
        return self.terms.keys()

    def items(self):
        return self.terms.items()

    def __add__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        terms = dict(self.terms)
        for k, v in other.terms.items():
            c = terms.get(k, 0) + v
            if c == 0:
                terms.pop(k, None)
            else:
                terms[k] = c
        return self._like(terms)

    def __neg__(self):
        return self._like({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Vector):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        if c == 0:
            return self._like({})
        return self._like({k: v * c for k, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, Vector):
            return NotImplemented
        return self.scale(c)

    def __eq__(self, other):
        if isinstance(other, Vector):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        try:
            keys = sorted(self.terms)
        except TypeError:
            keys = list(self.terms)
        return " + ".join("%s*%r" % (self.terms[k], k) for k in keys)


def linear_combination(pairs, cls=Vector):
    """Sum of ``c * v`` over ``(c, v)`` pairs, built in one pass."""
    terms = {}
    for c, v in pairs:
        if c == 0:
            continue
        for k, x in v.terms.items():
            y = terms.get(k, 0) + c * x
            if y == 0:
                terms.pop(k, None)
            else:
                terms[k] = y
    return cls._raw(terms)


# ---------------------------------------------------------------------------
# univariate


class UniPoly(Vector):
    """Polynomial in one variable; keys are exponents."""

    __slots__ = ()

    @classmethod
    def from_coeffs(cls, coeffs):
        """Build from a low-to-high coefficient list."""
        return cls({i: as_scalar(c) for i, c in enumerate(coeffs)})

    @classmethod
    def monomial(cls, n, c=1):
        return cls({n: as_scalar(c)})

    @classmethod
    def const(cls, c):
        return cls({0: as_scalar(c)})

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return max(self.terms, default=-1)

    def coeffs(self):
        """Low-to-high coefficient list (empty for zero)."""
        return [self.terms.get(i, Fraction(0)) for i in range(self.degree + 1)]

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            terms = {}
            for i, a in other.terms.items():
                for j, b in self.terms.items():
                    c = terms.get(i + j, 0) + a * b
                    if c == 0:
                        terms.pop(i + j, None)
                    else:
                        terms[i + j] = c
            return UniPoly._raw(terms)
        if isinstance(other, Vector):
            return NotImplemented
        return self.scale(other)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs()):
            acc = acc * x + c
        return acc

    def derivative(self):
        return UniPoly({i - 1: i * c for i, c in self.terms.items() if i > 0})

    def shift_up(self, k=1):
        """Multiply by ``t**k``."""
        return UniPoly._raw({i + k: c for i, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for i in sorted(self.terms, reverse=True):
            c = self.terms[i]
            mono = "" if i == 0 else ("t" if i == 1 else "t^%d" % i)
            parts.append("%s*%s" % (c, mono) if mono else str(c))
        return " + ".join(parts)


def divide_linear(h: UniPoly, alpha) -> UniPoly:
    """Return ``g = (h(t) - h(alpha)) / (t - alpha)``.

    Synthetic division; the remainder is ``h(alpha)`` by construction and
    is checked against direct evaluation.
    """
    alpha = as_scalar(alpha)
    coeffs = h.coeffs()
    if len(coeffs) <= 1:
        return UniPoly()
    d = len(coeffs) - 1
    quotient = [Fraction(0)] * d
    acc = coeffs[d]
    for i in range(d - 1, -1, -1):
        quotient[i] = acc
        acc = acc * alpha + coeffs[i]
    assert acc == h(alpha), "synthetic division remainder mismatch"
    return UniPoly({i: c for i, c in enumerate(quotient)})


# ---------------------------------------------------------------------------
# multivariate


class MultiPoly(Vector):
    """Sparse polynomial in a fixed, ordered tuple of variables.

    Keys are exponent tuples with one slot per variable.
    """

    __slots__ = ("vars",)

    def __init__(self, vars, terms=None):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean = {}
        for k, v in (terms or {}).items():
            if len(k) != n:
                raise ValueError("exponent %r does not match variables %r" % (k, self.vars))
            if v != 0:
                clean[tuple(k)] = v
        self.terms = clean

    def _like(self, terms):
        return MultiPoly._raw_in(self.vars, terms)

    @staticmethod
    def _raw_in(vars, terms):
        obj = MultiPoly.__new__(MultiPoly)
        obj.vars = vars
        obj.terms = terms
        return obj

    @classmethod
    def const(cls, vars, c=1):
        return cls(vars, {(0,) * len(vars): as_scalar(c)})

    @classmethod
    def var(cls, vars, name):
        vars = tuple(vars)
        e = [0] * len(vars)
        e[vars.index(name)] = 1
        return cls(vars, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, vars, exps, c=1):
        return cls(vars, {tuple(exps): as_scalar(c)})

    def _check_ring(self, other):
        if self.vars != other.vars:
            raise ValueError("polynomials live in different rings: %r vs %r"
                             % (self.vars, other.vars))

    def __add__(self, other):
        if isinstance(other, MultiPoly):
            self._check_ring(other)
            return Vector.__add__(self, other)
        if isinstance(other, Vector):
            return NotImplemented
        return self + MultiPoly.const(self.vars, other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, MultiPoly):
            self._check_ring(other)
            return Vector.__sub__(self, other)
        if isinstance(other, Vector):
            return NotImplemented
        return self - MultiPoly.const(self.vars, other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            self._check_ring(other)
            terms = {}
            for ea, a in self.terms.items():
                for eb, b in other.terms.items():
                    e = tuple(x + y for x, y in zip(ea, eb))
                    c = terms.get(e, 0) + a * b
                    if c == 0:
                        terms.pop(e, None)
                    else:
                        terms[e] = c
            return self._like(terms)
        if isinstance(other, Vector):
            return NotImplemented
        return self.scale(other)

    def __rmul__(self, c):
        if isinstance(c, Vector):
            return NotImplemented
        return self.scale(c)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MultiPoly.const(self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, Vector):
            return False
        if not self.terms:
            return other == 0
        zero = (0,) * len(self.vars)
        return len(self.terms) == 1 and self.terms.get(zero) == other

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def index(self, name):
        try:
            return self.vars.index(name)
        except ValueError:
            raise ValueError("unknown variable %r (ring has %r)" % (name, self.vars)) from None

    def degree_in(self, name):
        i = self.index(name)
        return max((e[i] for e in self.terms), default=-1)

    @property
    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), Fraction(0))

    def evaluate(self, values):
        """Evaluate at a mapping ``{name: scalar}`` covering every variable."""
        pts = [as_scalar(values[v]) for v in self.vars]
        acc = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, k in zip(pts, e):
                term = term * scalar_pow(x, k)
            acc = acc + term
        return acc

    def shift(self, name, amount):
        """Substitute ``name -> name + amount``."""
        i = self.index(name)
        amount = as_scalar(amount)
        out = {}
        for e, c in self.terms.items():
            p = e[i]
            for j in range(p + 1):
                coef = c * _binom(p, j) * scalar_pow(amount, p - j)
                if coef == 0:
                    continue
                f = e[:i] + (j,) + e[i + 1:]
                y = out.get(f, 0) + coef
                if y == 0:
                    out.pop(f, None)
                else:
                    out[f] = y
        return self._like(out)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(
                v if k == 1 else "%s^%d" % (v, k) for v, k in zip(self.vars, e) if k)
            c = self.terms[e]
            parts.append("%s*%s" % (c, mono) if mono else str(c))
        return " + ".join(parts)


def derivative(f: MultiPoly, var: str) -> MultiPoly:
    """Formal partial derivative of ``f`` with respect to ``var``."""
    i = f.index(var)
    out = {}
    for e, c in f.terms.items():
        if e[i]:
            out[e[:i] + (e[i] - 1,) + e[i + 1:]] = c * e[i]
    return f._like(out)


def _binom(n, k):
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def monomials_upto(nvars: int, max_total: int):
    """Exponent tuples of total degree <= ``max_total`` in graded-lex order."""
    out = []
    for d in range(max_total + 1):
        layer = [e for e in product(range(d + 1), repeat=nvars) if sum(e) == d]
        layer.sort(reverse=True)
        out.extend(layer)
    return out
