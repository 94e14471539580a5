"""Generalized barycentric coordinate sets.

For a point p inside a validated polytope the feasible coordinate vectors

    { lam >= 0 : V·lam = p, sum(lam) = 1 }

form a polytope of dimension at most n-d-1.  This module computes a feasible
basepoint tau(p), an exact kernel basis N of [V; 1^T], the simplicial
coordinates obtained by zeroing a prescribed index set, the full vertex list
of the coordinate polytope, and its reduced form { c : tau + N c >= 0 } in
kernel coordinates.  All arithmetic is exact; index sets are 1-based to match
the vertex order of the input file.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import (
    InconsistentInputsError,
    InfeasibleError,
    NotAnIntervalError,
    NotMemberError,
    SingularMatrixError,
    SingularPatternError,
    UnboundedDirectionError,
)
from .polytope import Polytope
from .simplex import convex_membership, feasible_point

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class BarycentricVector:
    """One feasible coordinate vector: V·lam = point, sum(lam) = 1, lam >= 0."""

    lam: tuple
    point: tuple


@dataclass(frozen=True)
class SimplicialCoordinate:
    """Unique solution with the entries in ``zero_set`` (1-based) forced to 0."""

    zero_set: frozenset
    sigma: tuple
    feasible: bool


@dataclass(frozen=True)
class LambdaPolytope:
    """Vertex description of the coordinate polytope at ``point``.

    ``theorem_count_match`` records whether the vertex count equals n-d (the
    classical prediction); it is measured, never assumed.
    """

    point: tuple
    vertices: tuple              # BarycentricVector, sorted lexicographically
    vertex_supports: tuple       # frozenset of 1-based indices per vertex
    dim: int
    theorem_count_match: bool

    def vertex_arrays(self) -> list:
        return [v.lam for v in self.vertices]


@dataclass(frozen=True)
class GammaPolytope:
    """Reduced polytope { c : tau + N c >= 0 } in kernel coordinates."""

    tau: BarycentricVector
    nbasis: tuple                # n rows of length n-d-1
    hrep_rows: tuple             # (coefficients, offset): offset + coeffs·c >= 0
    vertices: tuple              # aligned 1:1 with the LambdaPolytope vertices


def nullbasis(p: Polytope) -> list:
    """Exact n x (n-d-1) kernel basis of [V; 1^T], as a list of rows."""
    cols = linalg.nullspace_basis(p.stacked_rows())
    return [[col[i] for col in cols] for i in range(p.n)]


def feasible_tau(p: Polytope, point) -> BarycentricVector:
    """A feasible coordinate vector at ``point`` (phase-one simplex, Bland).

    Deterministic for a given input; raises InfeasibleError when the point is
    outside the polytope.
    """
    pt = linalg.vec(point)
    res = feasible_point(p.stacked_rows(), list(pt) + [_ONE])
    if res.status != "optimal":
        raise InfeasibleError("point is outside the polytope")
    return BarycentricVector(lam=tuple(res.x), point=pt)


def circular_windows(n: int, d: int) -> list:
    """The n circular index windows {i, i+1, ..., i+n-d-2} (1-based, mod n)."""
    size = n - d - 1
    if size < 0:
        raise ValueError("need n > d")
    if size == 0:
        return []
    return [frozenset(((i + k) % n) + 1 for k in range(size)) for i in range(n)]


def _pattern_system(p: Polytope, zero_set):
    """Stacked (d+1)x(d+1) system on the columns not in the 1-based zero set."""
    zero0 = {j - 1 for j in zero_set}
    if not all(1 <= j <= p.n for j in zero_set):
        raise ValueError(f"zero set entries must lie in 1..{p.n}")
    if len(zero0) != p.kernel_dim():
        raise ValueError(
            f"zero set must have size n-d-1 = {p.kernel_dim()}, got {len(zero0)}")
    keep = [j for j in range(p.n) if j not in zero0]
    rows = [[p.vertices[j][l] for j in keep] for l in range(p.d)]
    rows.append([_ONE] * len(keep))
    return keep, rows


def simplicial_coords(p: Polytope, point, zero_set) -> SimplicialCoordinate:
    """Solve for the coordinates of ``point`` with ``zero_set`` forced to zero.

    Raises SingularPatternError when the complementary columns are affinely
    dependent.
    """
    pt = linalg.vec(point)
    keep, rows = _pattern_system(p, zero_set)
    try:
        sol = linalg.solve_linear(rows, list(pt) + [_ONE])
    except SingularMatrixError as exc:
        raise SingularPatternError(
            f"columns outside {sorted(zero_set)} are affinely dependent") from exc
    sigma = [_ZERO] * p.n
    for j, val in zip(keep, sol):
        sigma[j] = val
    return SimplicialCoordinate(
        zero_set=frozenset(zero_set),
        sigma=tuple(sigma),
        feasible=all(x >= 0 for x in sigma),
    )


def _support_affinely_independent(p: Polytope, lam) -> bool:
    support = [j for j, x in enumerate(lam) if x != 0]
    pts = [p.vertices[j] for j in support]
    return linalg.affine_dim(pts) == len(pts) - 1


def lambda_vertices(p: Polytope, point) -> LambdaPolytope:
    """Enumerate the vertex set of the coordinate polytope at ``point``.

    Scans every size-(n-d-1) zero pattern, keeps feasible solutions whose
    support columns are affinely independent, deduplicates exactly and sorts
    lexicographically.  Raises InfeasibleError when the point is outside.
    """
    pt = linalg.vec(point)
    k = p.kernel_dim()
    found = {}
    for combo in itertools.combinations(range(1, p.n + 1), k):
        try:
            sc = simplicial_coords(p, pt, combo)
        except SingularPatternError:
            continue
        if sc.feasible and sc.sigma not in found:
            if _support_affinely_independent(p, sc.sigma):
                found[sc.sigma] = frozenset(
                    j + 1 for j, x in enumerate(sc.sigma) if x != 0)
    if not found:
        raise InfeasibleError("point is outside the polytope")
    ordered = sorted(found)
    vertices = tuple(BarycentricVector(lam=v, point=pt) for v in ordered)
    supports = tuple(found[v] for v in ordered)
    return LambdaPolytope(
        point=pt,
        vertices=vertices,
        vertex_supports=supports,
        dim=linalg.affine_dim(ordered),
        theorem_count_match=(len(ordered) == p.n - p.d),
    )


def gamma_polytope(p: Polytope, point, tau: BarycentricVector, nbasis_rows,
                   lam: LambdaPolytope) -> GammaPolytope:
    """Reduced polytope of ``lam`` in the kernel coordinates of ``nbasis_rows``.

    Each vertex c solves N·c = lam_vertex - tau exactly (via rational normal
    equations, N has full column rank).  Raises InconsistentInputsError when
    some difference is outside the column span of N.
    """
    pt = linalg.vec(point)
    k = p.kernel_dim()
    rows = linalg.mat(nbasis_rows)
    nt = linalg.transpose(rows) if k else []
    gram = linalg.mat_mul(nt, rows) if k else []
    gvertices = []
    for v in lam.vertices:
        diff = [a - b for a, b in zip(v.lam, tau.lam)]
        if k == 0:
            if any(x != 0 for x in diff):
                raise InconsistentInputsError("tau does not match the vertex list")
            gvertices.append(())
            continue
        c = linalg.solve_linear(gram, linalg.mat_vec(nt, diff))
        if linalg.mat_vec(rows, c) != diff:
            raise InconsistentInputsError(
                "vertex - tau is not in the column span of the kernel basis")
        gvertices.append(tuple(c))
    hrep = tuple((tuple(row), tau.lam[j]) for j, row in enumerate(rows))
    return GammaPolytope(
        tau=tau,
        nbasis=tuple(tuple(r) for r in rows),
        hrep_rows=hrep,
        vertices=tuple(gvertices),
    )


def segment_interval(tau: BarycentricVector, n_col) -> tuple:
    """Exact interval [a, b] with { tau + c·N : a <= c <= b } the coordinate set.

    Only defined when the kernel is one-dimensional (n - d - 1 = 1):
    a = max over N_i > 0 of -tau_i / N_i, b = min over N_i < 0 of -tau_i / N_i.
    """
    n, d = len(tau.lam), len(tau.point)
    if n - d - 1 != 1:
        raise NotAnIntervalError(f"kernel dimension is {n - d - 1}, not 1")
    col = linalg.vec(n_col)
    lower = [-t / c for t, c in zip(tau.lam, col, strict=True) if c > 0]
    upper = [-t / c for t, c in zip(tau.lam, col, strict=True) if c < 0]
    if not lower or not upper:
        raise UnboundedDirectionError(
            "kernel direction lacks a positive or negative entry")
    return max(lower), min(upper)


def _affine_dependency(points):
    """A nonzero (gamma_i) with sum gamma = 0 and sum gamma_i·points_i = 0."""
    rows = [[pt[l] for pt in points] for l in range(len(points[0]))]
    rows.append([_ONE] * len(points))
    basis = linalg.nullspace_basis(rows)
    return basis[0] if basis else None


def reduce_convex_combination(points, weights):
    """Prune a convex combination until its support is affinely independent.

    Repeatedly finds an affine dependency among the positively weighted
    points and moves along it until a weight hits zero.  Returns a list of
    (index, weight) pairs with positive weights summing to 1, representing
    the same point exactly.
    """
    w = {i: Fraction(x) for i, x in enumerate(weights) if x != 0}
    while True:
        idx = sorted(w)
        gamma = _affine_dependency([points[i] for i in idx])
        if gamma is None:
            break
        if not any(g > 0 for g in gamma):
            gamma = [-g for g in gamma]
        step = min(w[i] / g for i, g in zip(idx, gamma) if g > 0)
        for i, g in zip(idx, gamma):
            w[i] -= step * g
            if w[i] == 0:
                del w[i]
    return sorted(w.items())


def caratheodory_decompose(lam: LambdaPolytope, x: BarycentricVector) -> list:
    """Write ``x`` as a convex combination of at most n-d vertices of ``lam``.

    Returns (vertex index, weight) pairs with positive rational weights
    summing to one; raises NotMemberError when x is not in the convex hull of
    the vertex list.
    """
    verts = lam.vertex_arrays()
    weights = convex_membership(verts, x.lam)
    if weights is None:
        raise NotMemberError("x is not in the convex hull of the vertices")
    return reduce_convex_combination(verts, weights)
