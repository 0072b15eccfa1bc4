"""
Verification suites behind ``w22 verify``.

Every check is an independent job identified by a ``check_id``.  Jobs get
their own RNG seeded from (run seed, check_id), so results do not depend
on scheduling, and the report is sorted by ``check_id``.
"""

from __future__ import annotations

import hashlib
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import product

from .algebra import C, Generator, L, LieElement, W, basis_generators, bracket, grade
from .determinant import BlockSpec, build_matrix, det_bruteforce, det_formula
from .exact import GaussianRational, MultiPoly, UniPoly, Vector, as_scalar, derivative
from .module import module_axiom_failures
from .omega import (Omega2, Omega3, OmegaParams, f_map, g_map, hom_space, predicted_hom,
                    reach)
from .restricted import HighestWeightData, TrivialModule, VermaModule, pbw_monomials
from .linalg import Subspace
from .tensor import (TensorModule, _m_element, TensorParams, degenerate_submodule_check, degree,
                     fingerprint, generator_reach, lex_compare, rank_rg, rank_rg_direct,
                     verify_lemma2)
from .uea import UeaElement, apply, is_pbw, q_element, straighten

__all__ = ["SUITES", "RunConfig", "ConfigError", "load_config", "config_from_dict",
           "plan", "run_suite", "render_report"]

SUITES = ("axioms", "omega", "hom", "tensor-simplicity", "degenerate", "rg",
          "determinant", "q-identity", "fingerprint")

REPORT_SCHEMA = "w22-verify-report/1"


class ConfigError(ValueError):
    pass


# ---------------------------------------------------------------------------
# configuration


@dataclass
class RunConfig:
    seed: int = 0
    lie_index_bound: int = 4
    module_index_bound: int = 3
    random_param_sets: int = 3
    omega_params: list = field(default_factory=list)     # explicit OmegaParams
    verma: HighestWeightData = field(
        default_factory=lambda: HighestWeightData(Fraction(1, 2), Fraction(3), Fraction(5, 2)))
    degree_bound: int = 4
    exponent_bound: int = 2
    det_max_size: int = 5
    det_max_r: int = 3
    det_draws: int = 5
    reduction_instances: int = 10
    rg_samples: int = 10
    nonweight_samples: int = 20
    degenerate_r_bound: int = 3
    degenerate_window: int = 4
    fingerprint_pairs: int = 10


_INT_FIELDS = ("lie_index_bound", "module_index_bound", "random_param_sets", "degree_bound",
               "exponent_bound", "det_max_size", "det_max_r", "det_draws",
               "reduction_instances", "rg_samples", "nonweight_samples",
               "degenerate_r_bound", "degenerate_window", "fingerprint_pairs")


def _scalar_at(value, where):
    if isinstance(value, float):
        raise ConfigError("%s: floating-point value %r not allowed; write it as \"p/q\""
                          % (where, value))
    try:
        return as_scalar(value)
    except (TypeError, ValueError) as exc:
        raise ConfigError("%s: %s" % (where, exc)) from None


def config_from_dict(data: dict, seed: int | None = None) -> RunConfig:
    if not isinstance(data, dict):
        raise ConfigError("config: expected a JSON object")
    cfg = RunConfig()
    known = set(_INT_FIELDS) | {"omega_params", "verma", "seed"}
    for key in data:
        if key not in known:
            raise ConfigError("config.%s: unknown field" % key)
    for name in _INT_FIELDS:
        if name in data:
            v = data[name]
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ConfigError("config.%s: expected a non-negative integer, got %r"
                                  % (name, v))
            setattr(cfg, name, v)
    if "seed" in data:
        s = data["seed"]
        if not isinstance(s, int) or isinstance(s, bool) or s < 0:
            raise ConfigError("config.seed: expected a non-negative integer")
        cfg.seed = s
    if seed is not None:
        cfg.seed = seed
    for i, entry in enumerate(data.get("omega_params", [])):
        where = "config.omega_params[%d]" % i
        if not isinstance(entry, dict):
            raise ConfigError("%s: expected an object" % where)
        for req in ("lambda", "alpha"):
            if req not in entry:
                raise ConfigError("%s: missing field %r" % (where, req))
        lam = _scalar_at(entry["lambda"], where + ".lambda")
        if lam == 0:
            raise ConfigError("%s.lambda: must be nonzero" % where)
        alpha = _scalar_at(entry["alpha"], where + ".alpha")
        h = entry.get("h", [])
        if not isinstance(h, list):
            raise ConfigError("%s.h: expected a list of coefficients (low to high)" % where)
        coeffs = [_scalar_at(c, "%s.h[%d]" % (where, j)) for j, c in enumerate(h)]
        cfg.omega_params.append(OmegaParams(lam, alpha, UniPoly.from_coeffs(coeffs)))
    if "verma" in data:
        vd = data["verma"]
        where = "config.verma"
        if not isinstance(vd, dict):
            raise ConfigError("%s: expected an object" % where)
        vals = {}
        for name in ("c", "h_L", "h_W"):
            if name not in vd:
                raise ConfigError("%s: missing field %r" % (where, name))
            vals[name] = _scalar_at(vd[name], "%s.%s" % (where, name))
        cfg.verma = HighestWeightData(**vals)
    if cfg.det_max_size > 7:
        raise ConfigError("config.det_max_size: at most 7 supported")
    return cfg


def load_config(path, seed: int | None = None) -> RunConfig:
    try:
        with open(path) as f:
            data = json.load(f)
    except OSError as exc:
        raise ConfigError("%s: %s" % (path, exc)) from None
    except json.JSONDecodeError as exc:
        raise ConfigError("%s:%d:%d: %s" % (path, exc.lineno, exc.colno, exc.msg)) from None
    return config_from_dict(data, seed)


def validate(cfg: RunConfig, suites) -> None:
    """Suite-level preconditions on explicit parameter sets."""
    for suite in suites:
        if suite == "q-identity":
            for i, p in enumerate(cfg.omega_params):
                if p.alpha == 0:
                    raise ConfigError("config.omega_params[%d].alpha: suite %r needs alpha != 0"
                                      % (i, suite))


# ---------------------------------------------------------------------------
# helpers


def _rng(seed, check_id):
    digest = hashlib.sha256(("%d:%s" % (seed, check_id)).encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


_NUMS = [n for n in range(-9, 10) if n]


def rand_rational(rng, nonzero=True):
    num = rng.choice(_NUMS) if nonzero else rng.randint(-9, 9)
    return Fraction(num, rng.randint(1, 4))


def rand_poly(rng, maxdeg=2):
    return UniPoly.from_coeffs([rand_rational(rng, nonzero=False)
                                for _ in range(rng.randint(0, maxdeg) + 1)])


def rand_distinct(rng, count):
    out = []
    while len(out) < count:
        x = rand_rational(rng)
        if x not in out:
            out.append(x)
    return out


def rand_omega(rng, lam=None, maxdeg=2):
    return OmegaParams(lam if lam is not None else rand_rational(rng), rand_rational(rng),
                       rand_poly(rng, maxdeg))


def _param_sets(cfg, rng, count=None):
    sets = [p for p in cfg.omega_params]
    count = cfg.random_param_sets if count is None else count
    while len(sets) < count:
        sets.append(rand_omega(rng))
    return sets


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, GaussianRational):
        return repr(x)
    if isinstance(x, (Generator, Vector)):
        return repr(x)
    if isinstance(x, OmegaParams):
        return {"lambda": str(x.lam), "alpha": str(x.alpha),
                "h": [str(c) for c in x.h.coeffs()]}
    if isinstance(x, HighestWeightData):
        return {"c": str(x.c), "h_L": str(x.h_L), "h_W": str(x.h_W)}
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (str, int, bool)) or x is None:
        return x
    return repr(x)


def _verma(cfg):
    return VermaModule(cfg.verma)


def _tensor_vectors(module, rng, count, max_exp, v_choices):
    out = []
    m = module.m
    for _ in range(count):
        g = module.zero()
        for _ in range(rng.randint(1, 3)):
            e = tuple(rng.randint(0, max_exp) for _ in range(2 * m))
            g = g + module.pure(e, rng.choice(v_choices), rand_rational(rng))
        if not g:
            g = module.one(v_choices[0])
        out.append(g)
    return out


def _v_choices(V, depth):
    if isinstance(V, TrivialModule):
        return [V.highest()]
    out = [V.highest()]
    for d in range(1, depth + 1):
        for mono in pbw_monomials(d):
            out.append(V.monomial(*mono))
    return out


# ---------------------------------------------------------------------------
# checks; each returns (passed, params, witness-or-None)


def chk_lie_antisymmetry(cfg, rng):
    gens = basis_generators(max(6, cfg.lie_index_bound))
    bad = [(x, y) for x in gens for y in gens if bracket(x, y) != -bracket(y, x)]
    for _ in range(50):
        x = LieElement({g: rand_rational(rng) for g in rng.sample(gens, 3)})
        y = LieElement({g: rand_rational(rng) for g in rng.sample(gens, 3)})
        if bracket(x, y) != -bracket(y, x):
            bad.append((x, y))
    return not bad, {"index_bound": max(6, cfg.lie_index_bound)}, bad[:3] or None


def chk_lie_jacobi(cfg, rng):
    gens = basis_generators(cfg.lie_index_bound)
    bad = []
    count = 0
    for x, y, z in product(gens, repeat=3):
        count += 1
        j = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        if j:
            bad.append((x, y, z))
    return not bad, {"index_bound": cfg.lie_index_bound, "triples": count}, bad[:3] or None


def chk_lie_grading(cfg, rng):
    gens = basis_generators(cfg.lie_index_bound + 2)
    bad = []
    for x in gens:
        for y in gens:
            target = grade(x) + grade(y)
            if any(grade(g) != target for g in bracket(x, y).terms):
                bad.append((x, y))
        if bracket(C, x) or bracket(x, C):
            bad.append((C, x))
    return not bad, {"index_bound": cfg.lie_index_bound + 2}, bad[:3] or None


def chk_straighten(cfg, rng):
    gens = basis_generators(3)
    P = rand_omega(rng)
    M3 = Omega3(P)
    V = _verma(cfg)
    vecs = [(M3, M3.monomial(1, 1) + M3.monomial(0, 2)),
            (V, V.monomial(L(-1)) + V.monomial(W(-2)))]
    bad = []
    for _ in range(25):
        u = UeaElement({tuple(rng.choice(gens) for _ in range(rng.randint(0, 4))):
                        rand_rational(rng) for _ in range(2)})
        su = straighten(u)
        if not all(is_pbw(w) for w in su.terms):
            bad.append(("not PBW", u))
        for module, v in vecs:
            if apply(su, v, module) != apply(u, v, module):
                bad.append(("action differs", u, module))
    return not bad, {"omega": P, "verma": cfg.verma}, bad[:3] or None


def _axiom_check(module, vectors, cfg, params, bound=None):
    gens = basis_generators(cfg.module_index_bound if bound is None else bound)
    bad = module_axiom_failures(module, gens, vectors)
    return not bad, params, [list(b) for b in bad] or None


def chk_module_omega2(cfg, rng, index):
    P = _param_sets(cfg, rng, index + 1)[index]
    M = Omega2(P.lam, P.alpha)
    vecs = [M.monomial(p) for p in range(4)]
    return _axiom_check(M, vecs, cfg, {"lambda": P.lam, "alpha": P.alpha},
                        cfg.lie_index_bound)


def chk_module_omega3(cfg, rng, index):
    P = _param_sets(cfg, rng, index + 1)[index]
    M = Omega3(P)
    vecs = [M.monomial(p, q) for p in range(4) for q in range(4)]
    return _axiom_check(M, vecs, cfg, {"omega": P}, cfg.lie_index_bound)


def chk_module_verma(cfg, rng):
    V = _verma(cfg)
    vecs = _v_choices(V, 2)
    return _axiom_check(V, vecs, cfg, {"verma": cfg.verma, "depth": 2})


def chk_module_tensor(cfg, rng, m, vmode, index):
    lams = rand_distinct(rng, m)
    omegas = tuple(rand_omega(rng, lam) for lam in lams)
    V = TrivialModule() if vmode == "trivial" else _verma(cfg)
    T = TensorModule(TensorParams(omegas, V))
    vecs = _tensor_vectors(T, rng, 3, cfg.exponent_bound, _v_choices(V, 1))
    return _axiom_check(T, vecs, cfg, {"omegas": omegas, "V": repr(V)})


def chk_fg_identity(cfg, rng):
    bad = []
    for P in _param_sets(cfg, rng, 8):
        one = UniPoly.const(1)
        # G(1) - alpha F(1) = (t - alpha) g + h(alpha) = h
        if g_map(one, P) - f_map(one, P).scale(P.alpha) != P.h:
            bad.append(P)
    return not bad, {"sets": 8}, bad or None


def chk_omega_simplicity(cfg, rng, index):
    P = _param_sets(cfg, rng, index + 1)[index]
    if P.alpha == 0:
        return None, {"omega": P}, "alpha = 0"
    M = Omega3(P)
    one = M.monomial(0, 0)
    bad = []
    for p in range(3):
        for q in range(3):
            steps = p + q + 2 + P.h.degree
            found, used, dim = reach(M, M.monomial(p, q), one, steps, range(0, p + q + 8))
            if not found:
                bad.append({"start": (p, q), "steps": used, "dim": dim})
    return not bad, {"omega": P}, bad or None


def chk_alpha0_intertwiner(cfg, rng):
    bad = []
    for n in range(4):
        lam = rand_rational(rng)
        h1 = rand_poly(rng)
        h2 = h1 + UniPoly.const(n)
        src, dst = Omega3(OmegaParams(lam, 0, h1)), Omega3(OmegaParams(lam, 0, h2))
        tn = MultiPoly.monomial(("s", "t"), (0, n))
        for u in [src.monomial(p, q) for p in range(3) for q in range(3)]:
            for k in range(-4, 5):
                for gen in (L(k), W(k)):
                    if dst.act(gen, u * tn) != src.act(gen, u) * tn:
                        bad.append({"n": n, "gen": gen, "u": u})
    return not bad, {"window": 4}, bad[:3] or None


def _hom_cases():
    t = UniPoly.monomial(1)
    h1 = UniPoly.from_coeffs([1, 2, -1])
    c = UniPoly.const
    return [
        ("equal-alpha-nonzero", OmegaParams(2, 1, t), OmegaParams(2, 1, t)),
        ("equal-alpha-nonzero-quadratic", OmegaParams(Fraction(-3, 2), Fraction(1, 3), h1),
         OmegaParams(Fraction(-3, 2), Fraction(1, 3), h1)),
        ("equal-h-zero", OmegaParams(5, -2), OmegaParams(5, -2)),
        ("lambda-differs", OmegaParams(2, 1, t), OmegaParams(3, 1, t)),
        ("lambda-differs-alpha-zero", OmegaParams(2, 0, t), OmegaParams(3, 0, t)),
        ("alpha-differs", OmegaParams(2, 1, t), OmegaParams(2, 2, t)),
        ("alpha-differs-one-zero", OmegaParams(2, 0, t), OmegaParams(2, 1, t)),
        ("h-differs", OmegaParams(2, 1, t), OmegaParams(2, 1, h1)),
        ("h-shift-alpha-nonzero", OmegaParams(2, 1, t), OmegaParams(2, 1, t + c(1))),
        ("alpha-zero-shift-0", OmegaParams(2, 0, h1), OmegaParams(2, 0, h1)),
        ("alpha-zero-shift-1", OmegaParams(2, 0, h1), OmegaParams(2, 0, h1 + c(1))),
        ("alpha-zero-shift-2", OmegaParams(2, 0, t), OmegaParams(2, 0, t + c(2))),
        ("alpha-zero-shift-minus-1", OmegaParams(2, 0, t), OmegaParams(2, 0, t - c(1))),
        ("alpha-zero-shift-half", OmegaParams(2, 0, t), OmegaParams(2, 0, t + c(Fraction(1, 2)))),
        ("alpha-zero-nonconstant", OmegaParams(2, 0, t), OmegaParams(2, 0, t + t)),
    ]


HOM_CASES = [name for name, _, _ in _hom_cases()]


def chk_hom(cfg, rng, name):
    _, p1, p2 = next(c for c in _hom_cases() if c[0] == name)
    expected = predicted_hom(p1, p2)
    got = hom_space(p1, p2, cfg.degree_bound)
    span = Subspace(got)
    ok = len(got) == expected.dim and all(b in span for b in expected.basis)
    params = {"source": p1, "target": p2, "degree_bound": cfg.degree_bound}
    if expected.flag:
        params["flag"] = expected.flag
    return ok, params, None if ok else {"expected": list(expected.basis), "got": got}


def _compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def det_shapes(max_size):
    return [c for s in range(1, max_size + 1) for c in _compositions(s)]


def chk_determinant(cfg, rng, shape):
    bad = []
    cases = 0
    for r in range(cfg.det_max_r + 1):
        for _ in range(cfg.det_draws):
            lams = rand_distinct(rng, len(shape))
            spec = BlockSpec(tuple(zip(lams, shape)), r)
            lhs = det_bruteforce(build_matrix(spec))
            rhs = det_formula(spec)
            cases += 1
            if lhs != rhs or rhs == 0:
                bad.append({"lambdas": lams, "r": r, "bruteforce": lhs, "formula": rhs})
    return not bad, {"shape": list(shape), "cases": cases}, bad[:3] or None


def chk_q_omega(cfg, rng, index):
    P = _param_sets(cfg, rng, index + 1)[index]
    if P.alpha == 0:
        return None, {"omega": P}, "alpha = 0"
    M = Omega3(P)
    Q = q_element(P.alpha)
    bad = [(p, q) for p in range(5) for q in range(5)
           if apply(Q, M.monomial(p, q), M) != M.monomial(p, q)]
    return not bad, {"omega": P}, bad or None


def chk_q_t1t2(cfg, rng, vmode):
    lam1, lam2 = rand_distinct(rng, 2)
    omegas = (rand_omega(rng, lam1), rand_omega(rng, lam2))
    V = TrivialModule() if vmode == "trivial" else _verma(cfg)
    T = TensorModule(TensorParams(omegas, V))
    bad = []
    for v in _v_choices(V, 1):
        for alpha in (omegas[0].alpha, rand_rational(rng)):
            x = apply(q_element(alpha), T.one(v), T)
            coeff = T.components(x).get((0, 0, 1, 1))
            want = v.scale((2 - lam1 / lam2 - lam2 / lam1) / (alpha * alpha))
            got = coeff if coeff is not None else V.zero()
            if got != want:
                bad.append({"v": v, "alpha": alpha, "got": got, "want": want})
    return not bad, {"omegas": omegas, "V": repr(V)}, bad or None


def _random_tensor(cfg, rng, m, vmode):
    lams = rand_distinct(rng, m)
    omegas = tuple(rand_omega(rng, lam) for lam in lams)
    V = TrivialModule() if vmode == "trivial" else _verma(cfg)
    return TensorModule(TensorParams(omegas, V))


def chk_reduction(cfg, rng, index):
    m = 1 + index % 2
    vmode = "trivial" if index % 4 < 2 else "verma"
    T = _random_tensor(cfg, rng, m, vmode)
    g = _tensor_vectors(T, rng, 1, cfg.exponent_bound, _v_choices(T.V, 1))[0]
    rep = verify_lemma2(g, T)
    failed = [c[:3] for c in rep.checks if not c[2]]
    return rep.passed, {"omegas": T.params.omegas, "V": repr(T.V), "g": g,
                        "window": [rep.window[0], rep.window[-1]] if rep.window else []}, \
        (failed or rep.outcome) if not rep.passed else None


def chk_generator_reach(cfg, rng, index):
    m = 1 + index % 2
    vmode = "trivial" if index % 4 < 2 else "verma"
    T = _random_tensor(cfg, rng, m, vmode)
    v0 = rng.choice(_v_choices(T.V, 1))
    exps = [0] * (2 * m)
    for _ in range(2):
        exps[rng.randrange(2 * m)] += 1
    target = T.pure(tuple(exps), v0)
    res = generator_reach(v0, target, T, 2)
    return res.reached, {"omegas": T.params.omegas, "V": repr(T.V), "v0": v0,
                         "target": target}, None if res.reached else asdict(res)


def chk_nonweight(cfg, rng, index):
    m = 1 + index % 3
    vmode = "trivial" if index % 2 == 0 else "verma"
    T = _random_tensor(cfg, rng, m, vmode)
    g = _tensor_vectors(T, rng, 1, cfg.exponent_bound, _v_choices(T.V, 1))[0]
    d0 = degree(g)
    d1 = degree(T.act(L(0), g))
    ok = lex_compare(d1, d0) == 1
    return ok, {"m": m, "V": repr(T.V), "g": g}, None if ok else {"deg_g": d0, "deg_L0g": d1}


def chk_degenerate(cfg, rng):
    lam = rand_rational(rng)
    omegas = (rand_omega(rng, lam), rand_omega(rng, lam))
    rep = degenerate_submodule_check(TensorParams(omegas), cfg.degenerate_r_bound,
                                     cfg.degenerate_window)
    return rep.passed, {"omegas": omegas, "r_bound": cfg.degenerate_r_bound,
                        "window": cfg.degenerate_window, "images_checked": rep.checked}, \
        None if rep.passed else {"closure": rep.closure, "proper": rep.proper,
                                 "failures": rep.failures[:3]}


def chk_degenerate_control(cfg, rng):
    # with distinct lambdas the same M must fail to be closed
    lam1, lam2 = rand_distinct(rng, 2)
    omegas = (rand_omega(rng, lam1), rand_omega(rng, lam2))
    P = TensorParams(omegas)
    T = TensorModule(P)
    x = _m_element(T, 0, 0, 1, None)
    img = T.act(L(1), x)
    # membership in M <=> (d/ds1 - d/ds2) kills the polynomial
    poly = T.slot_polynomial(img)
    escaped = (derivative(poly, "s1") - derivative(poly, "s2")) != 0
    return escaped, {"omegas": omegas}, None if escaped else "M closed despite distinct lambdas"


def chk_rg(cfg, rng, m, kind, index):
    vmode = "trivial" if index % 2 == 0 else "verma"
    T = _random_tensor(cfg, rng, m, vmode)
    vs = _v_choices(T.V, 1)
    g = T.zero()
    while not g:
        for _ in range(rng.randint(1, 3)):
            e = [0] * m + [rng.randint(0, 2) for _ in range(m)]
            if kind == "s-positive":
                e[rng.randrange(m)] = rng.randint(1, 2)
            g = g + T.pure(tuple(e), rng.choice(vs), rand_rational(rng))
    if kind == "s-positive" and not any(e[k] for e, _ in g.terms for k in range(m)):
        g = g + T.pure(T.exps(p=[1]), vs[0])
    r = rank_rg(g, T)
    direct = rank_rg_direct(g, T)
    ok = r == direct and (r == m + 1 if kind == "N" else r >= m + 2)
    return ok, {"m": m, "V": repr(T.V), "g": g}, None if ok else {"R": r, "direct": direct}


def _fingerprint_pairs():
    t = UniPoly.monomial(1)
    t2 = UniPoly.monomial(2)
    c = UniPoly.const
    A = OmegaParams(2, 1, t)
    B = OmegaParams(3, Fraction(1, 2), t2)
    D = OmegaParams(-1, 2, c(1))
    return [
        ("m1-vs-m2", (A,), (A, B)),
        ("m2-vs-m3", (A, B), (A, B, D)),
        ("lambda-differs", (A,), (OmegaParams(5, 1, t),)),
        ("lambda-multiset", (A, B), (A, OmegaParams(4, Fraction(1, 2), t2))),
        ("alpha-differs", (A,), (OmegaParams(2, 3, t),)),
        ("alpha-swapped", (A, B), (OmegaParams(2, Fraction(1, 2), t), OmegaParams(3, 1, t2))),
        ("h-differs", (OmegaParams(2, 1, t),), (OmegaParams(2, 1, t2),)),
        ("h-constant-differs", (OmegaParams(2, 1, c(1)),), (OmegaParams(2, 1, c(2)),)),
        ("h-differs-second-slot", (A, B), (A, OmegaParams(3, Fraction(1, 2), t2 + t))),
        ("h-swapped", (A, B), (OmegaParams(2, 1, t2), OmegaParams(3, Fraction(1, 2), t))),
        ("m3-alpha", (A, B, D), (A, B, OmegaParams(-1, 3, c(1)))),
    ]


FINGERPRINT_PAIRS = [name for name, _, _ in _fingerprint_pairs()]


def chk_fingerprint_pair(cfg, rng, name):
    _, a, b = next(p for p in _fingerprint_pairs() if p[0] == name)
    fa = fingerprint(TensorModule(TensorParams(a)))
    fb = fingerprint(TensorModule(TensorParams(b)))
    ok = fa != fb
    return ok, {"first": a, "second": b}, None if ok else {"fingerprint": asdict(fa)}


def chk_fingerprint_permutation(cfg, rng, index):
    m = 2 + index % 2
    vmode = "trivial" if index < 2 else "verma"
    T = _random_tensor(cfg, rng, m, vmode)
    omegas = list(T.params.omegas)
    perm = omegas[:]
    while perm == omegas:
        rng.shuffle(perm)
    T2 = TensorModule(TensorParams(tuple(perm), T.V))
    fa, fb = fingerprint(T), fingerprint(T2)
    recovered = sorted((p.lam, p.alpha, tuple(p.h.coeffs())) for p in omegas)
    ok = fa == fb and list(fa.slots) == recovered and fa.r_min == m + 1
    return ok, {"omegas": omegas, "permuted": perm, "V": repr(T.V)}, \
        None if ok else {"first": asdict(fa), "second": asdict(fb)}


# ---------------------------------------------------------------------------
# planning and running

_REFS = {
    "axioms": "W(2,2) defining relations and module structures",
    "omega": "Omega(lambda,alpha) and Omega(lambda,alpha,h) actions",
    "hom": "homomorphisms between Omega(lambda,alpha,h) modules",
    "tensor-simplicity": "reduction step, generation by 1 (x) ... (x) 1 (x) v, non-weight property of T",
    "degenerate": "simplicity converse for coincident lambdas",
    "rg": "R_g invariant of T",
    "determinant": "confluent exponential determinant",
    "q-identity": "Q = alpha^-2 (W_0^2 - W_-1 W_1) acting on Omega and on T",
    "fingerprint": "isomorphism invariants of T",
}


def plan(cfg: RunConfig, suite: str):
    """List of ``(check_id, suite, function name, args)`` for a suite."""
    if suite == "all":
        jobs = []
        for s in SUITES:
            jobs.extend(plan(cfg, s))
        return jobs
    if suite not in SUITES:
        raise ConfigError("unknown suite %r" % suite)
    n_sets = max(cfg.random_param_sets, len(cfg.omega_params))
    J = []
    if suite == "axioms":
        J += [("axioms/lie/antisymmetry", "chk_lie_antisymmetry", ()),
              ("axioms/lie/jacobi", "chk_lie_jacobi", ()),
              ("axioms/lie/grading-central", "chk_lie_grading", ()),
              ("axioms/uea/straighten", "chk_straighten", ()),
              ("axioms/module/verma", "chk_module_verma", ())]
        for i in range(n_sets):
            J.append(("axioms/module/omega2/set%02d" % i, "chk_module_omega2", (i,)))
            J.append(("axioms/module/omega3/set%02d" % i, "chk_module_omega3", (i,)))
        for m in (1, 2):
            for vmode in ("trivial", "verma"):
                for i in range(cfg.random_param_sets):
                    J.append(("axioms/module/tensor-m%d-%s/set%02d" % (m, vmode, i),
                              "chk_module_tensor", (m, vmode, i)))
    elif suite == "omega":
        J.append(("omega/fg-identity", "chk_fg_identity", ()))
        J.append(("omega/alpha0-intertwiner", "chk_alpha0_intertwiner", ()))
        for i in range(n_sets):
            J.append(("omega/simplicity-probe/set%02d" % i, "chk_omega_simplicity", (i,)))
    elif suite == "hom":
        J += [("hom/%s" % name, "chk_hom", (name,)) for name in HOM_CASES]
    elif suite == "tensor-simplicity":
        for i in range(cfg.reduction_instances):
            J.append(("tensor-simplicity/reduction/instance%02d" % i, "chk_reduction", (i,)))
            J.append(("tensor-simplicity/generator-reach/instance%02d" % i,
                      "chk_generator_reach", (i,)))
        for i in range(cfg.nonweight_samples):
            J.append(("tensor-simplicity/nonweight/sample%02d" % i, "chk_nonweight", (i,)))
    elif suite == "degenerate":
        J.append(("degenerate/closure-properness", "chk_degenerate", ()))
        J.append(("degenerate/distinct-lambda-control", "chk_degenerate_control", ()))
    elif suite == "rg":
        for m in (1, 2, 3):
            for kind in ("N", "s-positive"):
                for i in range(cfg.rg_samples):
                    J.append(("rg/m%d/%s/sample%02d" % (m, kind, i), "chk_rg", (m, kind, i)))
    elif suite == "determinant":
        for shape in det_shapes(cfg.det_max_size):
            J.append(("determinant/shape-%s" % "-".join(map(str, shape)),
                      "chk_determinant", (shape,)))
    elif suite == "q-identity":
        for i in range(n_sets):
            J.append(("q-identity/omega/set%02d" % i, "chk_q_omega", (i,)))
        for vmode in ("trivial", "verma"):
            J.append(("q-identity/t1t2-coefficient/%s" % vmode, "chk_q_t1t2", (vmode,)))
    elif suite == "fingerprint":
        J += [("fingerprint/pair/%s" % name, "chk_fingerprint_pair", (name,))
              for name in FINGERPRINT_PAIRS]
        for i in range(4):
            J.append(("fingerprint/permutation/instance%02d" % i,
                      "chk_fingerprint_permutation", (i,)))
    return [(cid, suite, fn, args) for cid, fn, args in J]


def _run_job(job, cfg, timings):
    check_id, suite, fn, args = job
    rng = _rng(cfg.seed, check_id)
    t0 = time.perf_counter()
    try:
        ok, params, witness = globals()[fn](cfg, rng, *args)
    except Exception as exc:  # a crash inside a check is a failure, not a config error
        ok, params, witness = False, {}, "%s: %s" % (type(exc).__name__, exc)
    millis = int((time.perf_counter() - t0) * 1000)
    if ok is None:
        result = "skipped: precondition"
    else:
        result = "pass" if ok else "fail"
    entry = {"check_id": check_id, "paper_ref": _REFS[suite], "params": _jsonable(params),
             "result": result, "millis": millis if timings else None}
    if witness is not None and result != "pass":
        entry["witness"] = _jsonable(witness)
    return entry


def _run_job_star(packed):
    return _run_job(*packed)


def run_suite(cfg: RunConfig, suite: str, jobs: int = 1, timings: bool = False) -> dict:
    """Run a suite (or ``"all"``) and return the report dictionary."""
    suites = SUITES if suite == "all" else (suite,)
    validate(cfg, suites)
    work = plan(cfg, suite)
    packed = [(job, cfg, timings) for job in work]
    if jobs > 1 and len(packed) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            entries = list(pool.map(_run_job_star, packed, chunksize=1))
    else:
        entries = [_run_job_star(p) for p in packed]
    entries.sort(key=lambda e: e["check_id"])
    summary = {"total": len(entries),
               "passed": sum(e["result"] == "pass" for e in entries),
               "failed": sum(e["result"] == "fail" for e in entries),
               "skipped": sum(e["result"].startswith("skipped") for e in entries)}
    return {"schema": REPORT_SCHEMA, "suite": suite, "seed": cfg.seed,
            "config": _config_summary(cfg), "checks": entries, "summary": summary}


def _config_summary(cfg):
    out = {name: getattr(cfg, name) for name in _INT_FIELDS}
    out["omega_params"] = [_jsonable(p) for p in cfg.omega_params]
    out["verma"] = _jsonable(cfg.verma)
    return out


def render_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False) + "\n"
