"""Tensor products T = Omega(lambda_1, ...) (x) ... (x) V and their simplicity evidence.

Run with ``python3 demos/tensor_modules.py``.
"""

from fractions import Fraction

from w22 import HighestWeightData, L, OmegaParams, TensorModule, TensorParams, VermaModule, W
from w22.tensor import (degenerate_submodule_check, degree, fingerprint, generator_reach,
                        rank_rg, verify_lemma2)

A = OmegaParams(2, 1, [0, 1])
B = OmegaParams(Fraction(-1, 3), Fraction(1, 2), [1, 0, -2])
V = VermaModule(HighestWeightData(Fraction(1, 2), 3, Fraction(5, 2)))
T = TensorModule(TensorParams((A, B), V))

v = V.monomial(L(-1))
g = T.pure((1, 0, 2, 0), v) + T.pure((0, 0, 0, 1), V.highest(), 3)
print("g =", g)
print("deg g =", degree(g), "  deg L_0 g =", degree(T.act(L(0), g)))

rep = verify_lemma2(g, T)
print("reduction step:", rep.outcome, "with window", rep.window[0], "..", rep.window[-1])
for k, name, ok, _ in rep.checks:
    print("   slot %d %-7s %s" % (k, name, ok))

res = generator_reach(V.highest(), T.pure((1, 0, 0, 1), V.highest()), T, 2)
print("s_1 t_2 (x) v reached from 1 (x) 1 (x) v:", res.reached, "in", res.steps, "rounds")

print("R_g for g:", rank_rg(g, T), "  for 1 (x) 1 (x) v:", rank_rg(T.one(v), T))

# coincident lambdas give the proper submodule C[t_1, t_2](s_1 + s_2)^r
same = TensorParams((A, OmegaParams(2, 3, [5])))
drep = degenerate_submodule_check(same)
print("lambda_1 = lambda_2: closure", drep.closure, " proper", drep.proper,
      " images checked", drep.checked)

fp = fingerprint(TensorModule(TensorParams((B, A))))
print("fingerprint:", fp)
print("same for swapped slots:", fp == fingerprint(TensorModule(TensorParams((A, B)))))
print("W_3 (1 (x) 1 (x) v) =", T.act(W(3), T.one(V.highest())))
