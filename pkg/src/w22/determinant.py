"""
Confluent exponential determinant.

For distinct nonzero lambda_1..lambda_m and block sizes s_1..s_m the s x s
matrix with columns n^e lambda_j^n (0 <= e < s_j) sampled at
n = r, r+1, ..., r+s-1 has determinant

    prod_j sf(s_j - 1) lambda_j^(s_j (s_j + 2r - 1) / 2) * prod_{i<j} (lambda_j - lambda_i)^(s_i s_j)

where sf(k) = k! (k-1)! ... 1! is the superfactorial.  ``det_bruteforce``
computes determinants by fraction-free elimination and shares no code
with ``det_formula``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, lcm

from .exact import GaussianRational, as_scalar, scalar_pow

__all__ = ["BlockSpec", "build_matrix", "det_bruteforce", "det_formula",
           "double_factorial", "superfactorial"]


@dataclass(frozen=True)
class BlockSpec:
    """Blocks ``((lambda_1, s_1), ..., (lambda_m, s_m))`` and row offset ``r``."""

    blocks: tuple
    r: int = 0

    def __post_init__(self):
        blocks = tuple((as_scalar(lam), int(s)) for lam, s in self.blocks)
        if not blocks:
            raise ValueError("need at least one block")
        for lam, s in blocks:
            if lam == 0:
                raise ValueError("lambda must be nonzero")
            if s < 1:
                raise ValueError("block sizes must be >= 1")
        if self.r < 0:
            raise ValueError("offset r must be >= 0")
        object.__setattr__(self, "blocks", blocks)

    @property
    def size(self) -> int:
        return sum(s for _, s in self.blocks)

    @property
    def lambdas(self):
        return [lam for lam, _ in self.blocks]


def double_factorial(n: int) -> int:
    """n!! in the superfactorial sense: n! (n-1)! ... 1!, with 0!! = 1."""
    if n < 0:
        raise ValueError("double_factorial needs n >= 0")
    out = 1
    for k in range(2, n + 1):
        out *= factorial(k)
    return out


superfactorial = double_factorial


def build_matrix(spec: BlockSpec, rows: int | None = None):
    """Matrix with entry (p, q) = f_q(p + r - 1), 1-based p, q.

    ``rows`` defaults to the square size; more rows give an overdetermined
    sampling matrix (used when fitting).
    """
    if rows is None:
        rows = spec.size
    out = []
    for p in range(1, rows + 1):
        n = p + spec.r - 1
        row = []
        for lam, s in spec.blocks:
            ln = scalar_pow(lam, n)
            for e in range(s):
                # 0**0 == 1
                row.append(Fraction(n ** e) * ln if not isinstance(ln, GaussianRational)
                           else ln * (n ** e))
        out.append(row)
    return out


def det_bruteforce(matrix) -> object:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(matrix)
    if any(len(r) != n for r in matrix):
        raise ValueError("matrix must be square")
    if n == 0:
        return Fraction(1)
    entries = [as_scalar(x) for r in matrix for x in r]
    if all(isinstance(x, Fraction) for x in entries):
        # clear denominators row by row, then integer Bareiss
        a = []
        scale = Fraction(1)
        for r in matrix:
            d = 1
            for x in r:
                d = lcm(d, as_scalar(x).denominator)
            a.append([int(as_scalar(x) * d) for x in r])
            scale /= d
        return _bareiss(a, exact_div=lambda x, y: x // y) * scale
    a = [[as_scalar(x) for x in r] for r in matrix]
    return _bareiss(a, exact_div=lambda x, y: x / y)


def _bareiss(a, exact_div):
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = exact_div(row_i[j] * akk - aik * row_k[j], prev)
            row_i[k] = 0
        prev = akk
    return sign * as_scalar(a[n - 1][n - 1])


def det_formula(spec: BlockSpec):
    """Closed-form value of ``det(build_matrix(spec))``."""
    r = spec.r
    out = Fraction(1)
    for lam, s in spec.blocks:
        # s (s + 2r - 1) is always even
        out = out * double_factorial(s - 1) * scalar_pow(lam, s * (s + 2 * r - 1) // 2)
    blocks = spec.blocks
    for j in range(len(blocks)):
        for i in range(j):
            li, si = blocks[i]
            lj, sj = blocks[j]
            out = out * scalar_pow(lj - li, si * sj)
    return out
