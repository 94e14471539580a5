"""Exact rational linear algebra kernels.

All combinatorial computations in this package run over ``fractions.Fraction``
(arbitrary-precision rationals); floating point only appears in the probe
layer.  Matrices are plain lists of row lists, vectors plain sequences.
Elimination uses partial pivoting on absolute value with lowest-row-index tie
breaking, so every function is deterministic.
"""

from fractions import Fraction
from typing import Sequence

from .errors import EmptyInputError, SingularMatrixError

Vec = Sequence[Fraction]
Mat = Sequence[Sequence[Fraction]]


def fr(x) -> Fraction:
    """Convert ints, floats, strings like '3/4' or '0.25' to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def vec(xs) -> tuple:
    return tuple(fr(x) for x in xs)


def mat(rows) -> list:
    return [[fr(x) for x in row] for row in rows]


def dot(a: Vec, b: Vec) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def mat_vec(a: Mat, x: Vec) -> list:
    return [dot(row, x) for row in a]


def transpose(a: Mat) -> list:
    return [list(col) for col in zip(*a)]


def mat_mul(a: Mat, b: Mat) -> list:
    bt = transpose(b)
    return [[dot(row, col) for col in bt] for row in a]


def _pivot_row(rows, col, start):
    """Largest |entry| in ``col`` at or below ``start``; lowest index on ties."""
    best, best_val = -1, Fraction(0)
    for i in range(start, len(rows)):
        v = abs(rows[i][col])
        if v > best_val:
            best, best_val = i, v
    return best if best_val != 0 else -1


def _rref(a: Mat):
    """Reduced row-echelon form. Returns (rref rows, pivot column list)."""
    rows = [list(r) for r in a]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= len(rows):
            break
        i = _pivot_row(rows, c, r)
        if i < 0:
            continue
        rows[r], rows[i] = rows[i], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c] != 0:
                f = rows[k][c]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(a: Mat) -> int:
    """Exact rank via rational elimination."""
    if not a or not a[0]:
        return 0
    _, pivots = _rref(a)
    return len(pivots)


def solve_linear(a: Mat, b: Vec) -> list:
    """Solve the square system a·x = b exactly.

    Raises SingularMatrixError when rank(a) < len(a).
    """
    n = len(a)
    if any(len(row) != n for row in a) or len(b) != n:
        raise SingularMatrixError("solve_linear expects a square system")
    aug = [list(row) + [bb] for row, bb in zip(a, b)]
    for c in range(n):
        i = _pivot_row(aug, c, c)
        if i < 0:
            raise SingularMatrixError(f"matrix is singular (rank < {n})")
        aug[c], aug[i] = aug[i], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for k in range(n):
            if k != c and aug[k][c] != 0:
                f = aug[k][c]
                aug[k] = [x - f * y for x, y in zip(aug[k], aug[c])]
    return [row[n] for row in aug]


def nullspace_basis(a: Mat) -> list:
    """Exact kernel basis of ``a``.

    Returns a list of kernel vectors (each of length a.cols); the list is
    empty when the kernel is trivial.  Basis vectors come from the RREF's
    free columns, so the output is canonical for a given input.
    """
    if not a:
        return []
    ncols = len(a[0])
    rref, pivots = _rref(a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -rref[r][f]
        basis.append(v)
    return basis


def affine_dim(points: Sequence[Vec]) -> int:
    """Dimension of the affine hull of ``points`` (rank of the differences)."""
    if not points:
        raise EmptyInputError("affine_dim needs at least one point")
    base = points[0]
    diffs = [[x - y for x, y in zip(p, base)] for p in points[1:]]
    if not diffs:
        return 0
    return rank(diffs)
