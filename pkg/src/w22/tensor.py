"""
Tensor product modules  T = Omega(lam_1, alpha_1, h_1) x ... x Omega(lam_m, alpha_m, h_m) x V.

A basis key of T is ``(exps, vkey)`` with ``exps = (p_1..p_m, q_1..q_m)``
the exponents of s_k^p_k t_k^q_k in slot k and ``vkey`` a basis key of the
restricted module V.  Generators act by the Leibniz rule across slots;
``C`` acts by 0 on every Omega slot.

Slot numbers ``k`` in the public functions are 1-based, matching the usual
``1 <= k <= m`` indexing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .algebra import Generator, L, W
from .determinant import BlockSpec, build_matrix
from .exact import MultiPoly, UniPoly, Vector, as_scalar
from .linalg import SingularMatrixError, Subspace, solve
from .module import Module, ModuleMismatch
from .omega import OmegaParams, omega3_image
from .restricted import RestrictedVector, TrivialModule

__all__ = [
    "TensorParams",
    "TensorModule",
    "TensorVector",
    "lex_compare",
    "degree",
    "wkj_elements",
    "rank_rg",
    "rank_rg_direct",
    "operator_window_span",
    "default_window",
    "verify_lemma2",
    "ReductionReport",
    "generator_reach",
    "ReachResult",
    "degenerate_submodule_check",
    "DegenerateReport",
    "fingerprint",
    "Fingerprint",
    "FingerprintError",
]


class TensorVector(Vector):
    """Element of T; keys are ``(exps, vkey)``."""

    __slots__ = ()


@dataclass(frozen=True)
class TensorParams:
    """Slot parameters and the restricted module V."""

    omegas: tuple
    V: object = field(default_factory=TrivialModule)

    def __post_init__(self):
        omegas = tuple(self.omegas)
        if not omegas:
            raise ValueError("need at least one Omega factor")
        for k, p in enumerate(omegas, 1):
            if not isinstance(p, OmegaParams):
                raise TypeError("slot %d is not OmegaParams" % k)
            if p.alpha == 0:
                raise ValueError("slot %d: alpha must be nonzero" % k)
        object.__setattr__(self, "omegas", omegas)

    @property
    def m(self) -> int:
        return len(self.omegas)

    @property
    def lambdas(self):
        return [p.lam for p in self.omegas]

    @property
    def distinct(self) -> bool:
        lams = self.lambdas
        return len(set(lams)) == len(lams)


class TensorModule(Module):
    vector_type = TensorVector

    def __init__(self, params: TensorParams):
        super().__init__()
        self.params = params
        self.m = params.m
        self.V = params.V

    def __repr__(self):
        return "TensorModule(m=%d, V=%r)" % (self.m, self.V)

    def act_basis(self, g: Generator, key) -> dict:
        exps, vkey = key
        m = self.m
        out = {}
        if g.tag != "C":
            for k, par in enumerate(self.params.omegas):
                for (p, q), c in omega3_image(g, exps[k], exps[m + k], par).items():
                    e = list(exps)
                    e[k] = p
                    e[m + k] = q
                    _acc(out, (tuple(e), vkey), c)
        for vk, c in self.V.image(g, vkey).items():
            _acc(out, (exps, vk), c)
        return out

    # -- construction helpers -----------------------------------------

    def zero_exps(self):
        return (0,) * (2 * self.m)

    def exps(self, p=None, q=None):
        """Exponent tuple from per-slot lists (missing entries are 0)."""
        p = list(p or [])
        q = list(q or [])
        p += [0] * (self.m - len(p))
        q += [0] * (self.m - len(q))
        return tuple(p) + tuple(q)

    def pure(self, exps, v: RestrictedVector, c=1) -> TensorVector:
        """``s^p t^q (x) v``."""
        exps = tuple(exps)
        if len(exps) != 2 * self.m:
            raise ValueError("exponent tuple must have length 2m")
        c = as_scalar(c)
        return TensorVector({(exps, vk): c * x for vk, x in v.terms.items()})

    def one(self, v: RestrictedVector) -> TensorVector:
        """``1 (x) ... (x) 1 (x) v``."""
        return self.pure(self.zero_exps(), v)

    def vector(self, parts: dict) -> TensorVector:
        """Build from ``{exps: RestrictedVector}``."""
        acc = TensorVector()
        for e, v in parts.items():
            acc = acc + self.pure(e, v)
        return acc

    def components(self, g: TensorVector) -> dict:
        """Split into ``{exps: RestrictedVector}``."""
        out = {}
        for (e, vk), c in g.terms.items():
            out.setdefault(e, {})[vk] = c
        return {e: RestrictedVector._raw(t, self.V) for e, t in out.items()}

    def restriction_bound(self, g: TensorVector) -> int:
        """Largest restriction bound over the V-components of ``g``."""
        return max((self.V.restriction_bound(v) for v in self.components(g).values()),
                   default=0)

    def slot_polynomial(self, g: TensorVector, vkey=()) -> MultiPoly:
        """The coefficient of V-basis key ``vkey`` as a polynomial in s_k, t_k."""
        names = tuple("s%d" % k for k in range(1, self.m + 1)) + \
            tuple("t%d" % k for k in range(1, self.m + 1))
        return MultiPoly(names, {e: c for (e, vk), c in g.terms.items() if vk == vkey})

    def from_polynomial(self, poly: MultiPoly, v: RestrictedVector) -> TensorVector:
        acc = {}
        for e, c in poly.terms.items():
            for vk, x in v.terms.items():
                _acc(acc, (tuple(e), vk), c * x)
        return TensorVector._raw(acc)


def _acc(out, k, c):
    y = out.get(k, 0) + c
    if y == 0:
        out.pop(k, None)
    else:
        out[k] = y


# ---------------------------------------------------------------------------
# degree


def lex_compare(a, b) -> int:
    """-1, 0 or 1 as ``a`` is lex-smaller, equal or larger than ``b``."""
    a = tuple(a)
    b = tuple(b)
    if len(a) != len(b):
        raise ValueError("lex_compare needs equal lengths (%d vs %d)" % (len(a), len(b)))
    for x, y in zip(a, b):
        if x != y:
            return 1 if x > y else -1
    return 0


def degree(g: TensorVector):
    """Lex-maximal exponent tuple in the support of ``g``."""
    if not g:
        raise ValueError("degree of the zero vector")
    return max(e for e, _ in g.terms)


def _support(g):
    return {e for e, _ in g.terms}


def _max_p(g, m):
    """P_k for each slot (0-based list)."""
    P = [0] * m
    for e in _support(g):
        for k in range(m):
            if e[k] > P[k]:
                P[k] = e[k]
    return P


# ---------------------------------------------------------------------------
# coefficient extraction


def _slot(k, m):
    if not 1 <= k <= m:
        raise ValueError("slot k must satisfy 1 <= k <= %d" % m)
    return k - 1


def wkj_elements(g: TensorVector, k: int, module: TensorModule):
    """The elements w_{kj}, j = 0..P_k+1, whose combination

        sum_k sum_j (-1)^j n^j lam_k^n w_{kj}

    equals W_n g for n at or above the restriction bound of g.
    """
    if not g:
        raise ValueError("wkj_elements needs g != 0")
    m = module.m
    k0 = _slot(k, m)
    alpha = module.params.omegas[k0].alpha
    P = _max_p(g, m)[k0]
    out = []
    for j in range(P + 2):
        acc = {}
        for (e, vk), c in g.terms.items():
            p, q = e[k0], e[m + k0]
            b0 = comb(p, j) if j <= p else 0
            if b0:
                f = list(e)
                f[k0] = p - j
                f[m + k0] = q + 1
                _acc(acc, (tuple(f), vk), c * b0)
            b1 = comb(p, j - 1) if 1 <= j <= p + 1 else 0
            if b1:
                f = list(e)
                f[k0] = p - j + 1
                _acc(acc, (tuple(f), vk), c * alpha * b1)
        out.append(TensorVector._raw(acc))
    return out


def rank_rg(g: TensorVector, module: TensorModule) -> int:
    """dim span({g} + {w_kj}), the stable value of dim span{g, W_n g : n >= s}."""
    if not g:
        raise ValueError("rank_rg needs g != 0")
    span = Subspace([g])
    for k in range(1, module.m + 1):
        span.extend(wkj_elements(g, k, module))
    return span.dim


def rank_rg_direct(g: TensorVector, module: TensorModule, start: int | None = None,
                   count: int | None = None) -> int:
    """dim span{g, W_n g : start <= n < start + count}, computed by acting."""
    if not g:
        raise ValueError("rank_rg_direct needs g != 0")
    if start is None:
        start = module.restriction_bound(g)
    if count is None:
        count = sum(p + 2 for p in _max_p(g, module.m)) + 2
    span = Subspace([g])
    for n in range(start, start + count):
        span.add(module.act(W(n), g))
    return span.dim


# ---------------------------------------------------------------------------
# operator windows and the reduction step


def default_window(g: TensorVector, module: TensorModule):
    """n in [i, i + D] with i the restriction bound of g and D = unknowns + 2."""
    i = module.restriction_bound(g)
    unknowns = sum(p + 3 for p in _max_p(g, module.m))
    return range(i, i + unknowns + 3)


def operator_window_span(g: TensorVector, module: TensorModule, window, track: bool = False):
    """Exact span of g and L_n g, W_n g for n in ``window``."""
    span = Subspace(track=track)
    span.add(g, label="id")
    for n in window:
        for gen in (L(n), W(n)):
            span.add(module.act(gen, g), label=repr(gen))
    return span


def _strip(g, k0, m):
    P = _max_p(g, m)[k0]
    acc = {}
    for (e, vk), c in g.terms.items():
        if e[k0] == P:
            f = list(e)
            f[k0] = 0
            _acc(acc, (tuple(f), vk), c)
    return TensorVector._raw(acc)


def _bump(g, idx):
    acc = {}
    for (e, vk), c in g.terms.items():
        f = list(e)
        f[idx] += 1
        acc[(tuple(f), vk)] = c
    return TensorVector._raw(acc)


@dataclass
class ReductionReport:
    outcome: str                      # "pass", "fail" or "window too small"
    checks: list = field(default_factory=list)   # (k, name, ok, witness)
    window: tuple = ()
    needed: int = 0

    @property
    def passed(self) -> bool:
        return self.outcome == "pass"


def verify_lemma2(g: TensorVector, module: TensorModule, window=None,
                  witnesses: bool = False) -> ReductionReport:
    """Check that the strip, t-bump and s-bump elements of every slot lie in
    the operator-window span of ``g``.
    """
    if not module.params.distinct:
        raise ValueError("verify_lemma2 needs pairwise distinct lambdas")
    if not g:
        raise ValueError("verify_lemma2 needs g != 0")
    m = module.m
    i = module.restriction_bound(g)
    needed = sum(p + 3 for p in _max_p(g, m))
    window = tuple(default_window(g, module) if window is None else window)
    usable = len({n for n in window if n >= i})
    if usable < needed:
        return ReductionReport("window too small", window=window, needed=needed)
    span = operator_window_span(g, module, window, track=witnesses)
    checks = []
    for k0 in range(m):
        for name, elem in (("strip", _strip(g, k0, m)),
                           ("t-bump", _bump(g, m + k0)),
                           ("s-bump", _bump(g, k0))):
            if witnesses:
                wit = span.witness(elem)
                checks.append((k0 + 1, name, wit is not None, wit))
            else:
                checks.append((k0 + 1, name, elem in span, None))
    ok = all(c[2] for c in checks)
    return ReductionReport("pass" if ok else "fail", checks, window, needed)


@dataclass
class ReachResult:
    reached: bool
    steps: int
    dim: int
    saturated: bool = False   # span stopped growing before the bound

    def __bool__(self):
        return self.reached


def generator_reach(v0: RestrictedVector, target: TensorVector, module: TensorModule,
                    bound: int) -> ReachResult:
    """Does ``target`` lie in the span reached from 1 (x) ... (x) 1 (x) v0 by
    ``bound`` rounds of operator windows?
    """
    if not module.params.distinct:
        raise ValueError("generator_reach needs pairwise distinct lambdas")
    start = module.one(v0)
    i = module.restriction_bound(start)
    m = module.m
    # enough samples for slots whose s-degree can reach `bound`
    width = sum(bound + 3 for _ in range(m)) + 2
    window = range(i, i + width + 1)
    span = Subspace([start])
    if target in span:
        return ReachResult(True, 0, span.dim)
    frontier = [start]
    for step in range(1, bound + 1):
        new = []
        for b in frontier:
            for n in window:
                for gen in (L(n), W(n)):
                    img = module.act(gen, b)
                    if img and span.add(img):
                        new.append(img)
        if target in span:
            return ReachResult(True, step, span.dim)
        if not new:
            return ReachResult(False, step, span.dim, saturated=True)
        frontier = new
    return ReachResult(False, bound, span.dim)


# ---------------------------------------------------------------------------
# coincident lambdas


@dataclass
class DegenerateReport:
    closure: bool
    proper: bool
    checked: int
    failures: list = field(default_factory=list)
    truncation: tuple = ()

    @property
    def passed(self) -> bool:
        return self.closure and self.proper


def _m_element(module, a, b, r, v):
    # t_1^a t_2^b (s_1 + s_2)^r  (x)  v
    acc = {}
    for j in range(r + 1):
        acc[((j, r - j, a, b), ())] = Fraction(comb(r, j))
    return TensorVector._raw(acc)


def degenerate_submodule_check(params: TensorParams, r_bound: int = 3,
                               window: int = 4) -> DegenerateReport:
    """With lam_1 = lam_2, check that M = span{C[t_1,t_2] (s_1+s_2)^r} is closed
    under L_n, W_n (|n| <= window) and does not contain s_1.
    """
    if params.m != 2:
        raise ValueError("degenerate_submodule_check works on two slots")
    if params.omegas[0].lam != params.omegas[1].lam:
        raise ValueError("degenerate_submodule_check needs lam_1 == lam_2")
    if not isinstance(params.V, TrivialModule):
        params = TensorParams(params.omegas, TrivialModule())
    module = TensorModule(params)
    v = params.V.highest()
    hdeg = max(1, params.omegas[0].h.degree, params.omegas[1].h.degree)
    A = r_bound + hdeg
    R = r_bound + 1
    trunc = Subspace(_m_element(module, a, b, r, v)
                     for a in range(A + 1) for b in range(A + 1) for r in range(R + 1))
    failures = []
    checked = 0
    for a in range(r_bound + 1):
        for b in range(r_bound + 1):
            for r in range(r_bound + 1):
                x = _m_element(module, a, b, r, v)
                for n in range(-window, window + 1):
                    for gen in (L(n), W(n)):
                        checked += 1
                        img = module.act(gen, x)
                        if img not in trunc:
                            failures.append({"generator": repr(gen), "element": (a, b, r)})
    s1 = module.pure((1, 0, 0, 0), v)
    proper = s1 not in trunc
    return DegenerateReport(not failures, proper, checked, failures, (A, R))


# ---------------------------------------------------------------------------
# isomorphism invariants


class FingerprintError(ValueError):
    pass


@dataclass(frozen=True)
class Fingerprint:
    m: int
    r_min: int
    slots: tuple     # sorted ((lam, alpha, h coefficients), ...)


def _sort_scalar(x):
    return x.sort_key() if hasattr(x, "sort_key") else (x, 0)


def _geometric_ratio(seq):
    if seq[0] == 0:
        return None
    rho = seq[1] / seq[0]
    for a, b in zip(seq, seq[1:]):
        if b != rho * a:
            return None
    return rho


def fingerprint(module: TensorModule, sample_v: RestrictedVector | None = None,
                extra_points: int = 3) -> Fingerprint:
    """Recover (m, min R_g, multiset of (lam, alpha, h)) from the action alone.

    The lambdas are read off as ratios of the geometric coefficient
    sequences of W_n (1 (x) ... (x) 1 (x) v); the W_n and L_n sequences are
    then fitted exactly against the functions n^j lam^n (j <= 2) using the
    confluent exponential matrix.
    """
    params = module.params
    if not params.distinct:
        raise ValueError("fingerprint needs pairwise distinct lambdas")
    m = module.m
    v = sample_v if sample_v is not None else module.V.highest()
    if len(v) != 1:
        raise FingerprintError("sample vector must be a single basis vector of V")
    x0 = module.one(v)
    i = module.restriction_bound(x0)

    # smallest R over a sample of elements of N = C[t_1..t_m] (x) V
    samples = [x0]
    for k in range(m):
        samples.append(module.pure(module.exps(q=[1 if j == k else 0 for j in range(m)]), v))
    samples.append(x0 + samples[-1])
    r_min = min(rank_rg(g, module) for g in samples)

    # lambdas from geometric coefficient sequences of W_n x0
    probe = range(i, i + 4)
    w_seq = [module.act(W(n), x0) for n in probe]
    keys = set()
    for x in w_seq:
        keys |= set(x.keys())
    lams = set()
    for key in keys:
        rho = _geometric_ratio([x[key] for x in w_seq])
        if rho is not None:
            lams.add(rho)
    lams = sorted(lams, key=_sort_scalar)
    if not lams:
        raise FingerprintError("no exponential component found")

    spec = BlockSpec(tuple((lam, 3) for lam in lams), r=i)
    size = spec.size
    npts = size + extra_points
    mat = build_matrix(spec, rows=npts)
    ns = list(range(i, i + npts))
    w_data = [module.act(W(n), x0) for n in ns]
    l_data = [module.act(L(n), x0) for n in ns]
    try:
        w_coef = solve(mat[:size], w_data[:size])
        l_coef = solve(mat[:size], l_data[:size])
    except SingularMatrixError as exc:
        raise FingerprintError("fitting matrix is singular: %s" % exc) from None
    # the fit must reproduce every sampled point
    for row, wd, ld in zip(mat, w_data, l_data):
        if _combine(row, w_coef) != wd or _combine(row, l_coef) != ld:
            raise FingerprintError("exponential-polynomial fit does not reproduce the data")

    x0_key = next(iter(x0.keys()))
    x0_c = x0[x0_key]
    slots = []
    for b, lam in enumerate(lams):
        w0, w1 = w_coef[3 * b], w_coef[3 * b + 1]
        l1, l2 = l_coef[3 * b + 1], l_coef[3 * b + 2]
        # w0 = t_k (x) v  identifies the slot; w1 = -alpha_k (x0)
        slot = _slot_of(w0, x0, m)
        alpha = -w1[x0_key] / x0_c
        if w1 != x0.scale(-alpha) or alpha == 0:
            raise FingerprintError("unexpected shape of the n lam^n coefficient")
        # l2 = -alpha F_k(1) (x) v,  l1 = G_k(1) (x) v
        g_poly = _t_polynomial(l2, x0_key, slot, m).scale(-1 / (alpha * x0_c))
        G1 = _t_polynomial(l1, x0_key, slot, m).scale(1 / x0_c)
        h_alpha = (G1 - g_poly.shift_up(1))[0]
        # h(t) = (t - alpha) g(t) + h(alpha)
        h = g_poly.shift_up(1) - g_poly.scale(alpha) + UniPoly.const(h_alpha)
        slots.append((lam, alpha, tuple(h.coeffs())))
    slots.sort(key=lambda s: (_sort_scalar(s[0]), _sort_scalar(s[1]),
                              tuple(_sort_scalar(c) for c in s[2])))
    return Fingerprint(m, r_min, tuple(slots))


def _combine(row, coefs):
    acc = TensorVector()
    for a, c in zip(row, coefs):
        acc = acc + c.scale(a)
    return acc


def _slot_of(w0, x0, m):
    (e0, vk0), = x0.keys()
    for (e, vk), c in w0.terms.items():
        diff = [a - b for a, b in zip(e, e0)]
        if vk == vk0 and sum(diff) == 1 and all(d >= 0 for d in diff):
            idx = diff.index(1)
            if idx >= m:
                return idx - m
    raise FingerprintError("could not identify the slot of a lambda component")


def _t_polynomial(vec, x0_key, slot, m):
    e0, vk0 = x0_key
    out = {}
    for (e, vk), c in vec.terms.items():
        if vk != vk0:
            raise FingerprintError("V-component leaked into the fit")
        diff = [a - b for a, b in zip(e, e0)]
        if any(d for j, d in enumerate(diff) if j != m + slot):
            raise FingerprintError("coefficient not confined to t_%d" % (slot + 1))
        out[diff[m + slot]] = out.get(diff[m + slot], 0) + c
    return UniPoly(out)
