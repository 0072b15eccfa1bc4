"""Walk through the polynomial modules Omega(lambda, alpha, h).

Run with ``python3 demos/omega_modules.py``.
"""

from fractions import Fraction

from w22 import L, Omega3, OmegaParams, W, apply, q_element
from w22.omega import f_map, g_map, hom_space, predicted_hom, reach
from w22.exact import UniPoly

params = OmegaParams(Fraction(3, 2), Fraction(1, 2), [1, 0, 1])   # h(t) = 1 + t^2
M = Omega3(params)
print("module:", M)
print("g(t) =", params.g, "  h(alpha) =", params.h_at_alpha)

one = M.monomial(0, 0)
print("L_1 . 1 =", M.act(L(1), one), "   (lambda (s + h(t)))")
print("W_1 . 1 =", M.act(W(1), one), "   (lambda (t - alpha))")
print("F(1) =", f_map(UniPoly.const(1), params), "  G(1) =", g_map(UniPoly.const(1), params))

# Q = alpha^-2 (W_0^2 - W_-1 W_1) is the identity here
Q = q_element(params.alpha)
f = M.monomial(2, 3) + M.monomial(1, 0, Fraction(-4, 7))
print("Q f == f:", apply(Q, f, M) == f)

# alpha != 0: every monomial generates 1 within a few operator rounds
found, steps, dim = reach(M, M.monomial(2, 2), one, 6, range(0, 8))
print("1 reached from s^2 t^2:", found, "after", steps, "rounds, span dim", dim)

# homomorphisms are multiplication maps; alpha = 0 admits t^n
for h2 in ([1, 0, 1], [3, 0, 1], [1, 1, 1]):
    p1 = OmegaParams(2, 0, [1, 0, 1])
    p2 = OmegaParams(2, 0, h2)
    print("Hom for h2 - h1 = %s:" % (UniPoly.from_coeffs(h2) - p1.h or 0),
          hom_space(p1, p2, 3), " predicted dim", predicted_hom(p1, p2).dim)
