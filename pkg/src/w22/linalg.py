"""
Exact linear algebra over Q (or Q(i)) on sparse vectors.

Vectors are anything with a ``terms`` dict (see :class:`w22.exact.Vector`).
Basis keys must be mutually comparable; the pivot of an echelon row is
its largest key.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import Vector

__all__ = ["Subspace", "nullspace", "solve", "SingularMatrixError", "rank"]


class SingularMatrixError(ValueError):
    pass


def _axpy(target, c, source):
    # target += c * source, in place, dropping zeros
    for k, x in source.items():
        y = target.get(k, 0) + c * x
        if y == 0:
            target.pop(k, None)
        else:
            target[k] = y


class Subspace:
    """Span of sparse vectors kept in semi-echelon form.

    Each stored row has a distinct pivot (its maximal key) with coefficient 1.
    With ``track=True`` every row also records how it was obtained from the
    vectors passed to :meth:`add`, so membership queries can return a
    witness combination.
    """

    def __init__(self, vectors=(), track: bool = False):
        self.track = track
        self._rows = {}   # pivot -> (row dict, combination dict)
        self._labels = []
        for v in vectors:
            self.add(v)

    @property
    def dim(self) -> int:
        return len(self._rows)

    def __len__(self):
        return len(self._rows)

    def _reduce(self, terms, combo):
        rows = self._rows
        terms = dict(terms)
        while terms:
            top = max(terms)
            hit = rows.get(top)
            if hit is None:
                return terms, combo, top
            row, rcombo = hit
            c = -terms[top]
            _axpy(terms, c, row)
            if combo is not None:
                _axpy(combo, c, rcombo)
        return terms, combo, None

    def add(self, vec, label=None) -> bool:
        """Insert ``vec``; return True when the dimension grew."""
        terms = vec.terms if hasattr(vec, "terms") else vec
        combo = None
        if self.track:
            label = len(self._labels) if label is None else label
            self._labels.append(label)
            combo = {label: Fraction(1)}
        rest, combo, top = self._reduce(terms, combo)
        if top is None:
            return False
        inv = 1 / rest[top]
        row = {k: v * inv for k, v in rest.items()}
        if combo is not None:
            combo = {k: v * inv for k, v in combo.items()}
        self._rows[top] = (row, combo)
        return True

    def extend(self, vectors) -> int:
        return sum(1 for v in vectors if self.add(v))

    def residual(self, vec) -> dict:
        terms = vec.terms if hasattr(vec, "terms") else vec
        return self._reduce(terms, None)[0]

    def __contains__(self, vec) -> bool:
        return not self.residual(vec)

    def witness(self, vec):
        """Coefficients over the added vectors expressing ``vec``, or None."""
        if not self.track:
            raise ValueError("subspace was built without tracking")
        terms = vec.terms if hasattr(vec, "terms") else vec
        rest, combo, _ = self._reduce(terms, {})
        if rest:
            return None
        return {k: -v for k, v in combo.items()}

    def basis(self):
        """Canonical reduced echelon basis, sorted by pivot (largest first)."""
        pivots = sorted(self._rows, reverse=True)
        reduced = {}
        # back-substitute from the smallest pivot upward
        for p in reversed(pivots):
            row = dict(self._rows[p][0])
            for q in list(row):
                if q != p and q in reduced:
                    _axpy(row, -row[q], reduced[q])
            reduced[p] = row
        return [Vector(reduced[p]) for p in pivots]

    def pivots(self):
        return sorted(self._rows, reverse=True)


def rank(vectors) -> int:
    return Subspace(vectors).dim


def nullspace(columns, ncols: int | None = None):
    """Basis of ``{x : sum_j x_j * columns[j] = 0}``.

    ``columns`` is a list of sparse column vectors (dicts or Vectors).
    Returns a list of coefficient lists, in reduced form: each basis vector
    has a 1 at its own free column and zeros at the other free columns.
    """
    if ncols is None:
        ncols = len(columns)
    rows = {}
    for j, col in enumerate(columns):
        terms = col.terms if hasattr(col, "terms") else col
        for k, v in terms.items():
            rows.setdefault(k, {})[j] = v
    # Gauss-Jordan on the row dicts; pivot on the lowest column index
    pivot_rows = {}  # column -> row
    for row in rows.values():
        row = dict(row)
        for col, prow in pivot_rows.items():
            if col in row:
                _axpy(row, -row[col], prow)
        if not row:
            continue
        col = min(row)
        inv = 1 / row[col]
        row = {k: v * inv for k, v in row.items()}
        for other in pivot_rows.values():
            if col in other:
                _axpy(other, -other[col], row)
        pivot_rows[col] = row
    free = [j for j in range(ncols) if j not in pivot_rows]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for col, row in pivot_rows.items():
            x[col] = -row.get(f, 0)
        basis.append(x)
    return basis


def solve(matrix, rhs):
    """Solve the square system ``matrix @ x = rhs`` exactly.

    ``matrix`` is a list of rows of scalars.  Entries of ``rhs`` may be
    scalars or :class:`Vector` values (anything supporting ``+`` and scalar
    multiplication), which lets one solve for vector-valued coefficients.
    """
    n = len(matrix)
    if any(len(r) != n for r in matrix) or len(rhs) != n:
        raise ValueError("solve needs a square system")
    a = [list(r) for r in matrix]
    b = list(rhs)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            b[col], b[piv] = b[piv], b[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        b[col] = _scale(b[col], inv)
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                b[r] = _combine(b[r], _scale(b[col], -f))
    return b


def _scale(x, c):
    if isinstance(x, Vector):
        return x.scale(c)
    return x * c


def _combine(x, y):
    return x + y
