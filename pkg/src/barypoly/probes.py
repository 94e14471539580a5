"""Floating-point probes of the set-valued coordinate map.

The combinatorial structure is never approximated: vertex lists are computed
exactly at every sample point and only the metric evaluation runs in floats.
Distances to convex hulls use a minimum-norm-point iteration (Frank-Wolfe
with away steps) over simplex weights, followed by an exact affine polish on
the final support.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import linalg
from .coordinates import lambda_vertices, simplicial_coords
from .errors import (
    DimensionMismatchError,
    InfeasibleSelectionError,
    LeavesPolytopeError,
    SingularMatrixError,
    SingularPatternError,
)
from .polytope import Location, Polytope, locate

_MAX_ITER = 10_000


@dataclass(frozen=True, eq=False)
class FloatPolytope:
    """Convex hull of finitely many float vectors."""

    vertices: np.ndarray
    ambient_dim: int

    @classmethod
    def from_exact(cls, points) -> "FloatPolytope":
        arr = np.array([[float(x) for x in pt] for pt in points], dtype=float)
        return cls(vertices=arr, ambient_dim=arr.shape[1])

    def diameter(self) -> float:
        v = self.vertices
        if len(v) < 2:
            return 0.0
        diffs = v[:, None, :] - v[None, :, :]
        return float(np.sqrt((diffs ** 2).sum(-1)).max())


@dataclass(frozen=True)
class ProbeStep:
    t: float
    distance: float
    ratio: float


@dataclass(frozen=True)
class ProbeReport:
    steps: tuple
    verdict: str              # "Converges" | "Inconclusive" | "Diverges"
    tolerance: float
    metadata: dict = field(default_factory=dict)


def _min_norm_point(b_arr: np.ndarray, x: np.ndarray, tol: float):
    """min_w || w·B - x || over the simplex; returns (distance, gap_met)."""
    m = b_arr.shape[0]
    d0 = ((b_arr - x) ** 2).sum(axis=1)
    w = np.zeros(m)
    w[int(np.argmin(d0))] = 1.0
    y = w @ b_arr
    scale = 1.0 + float(d0.max())
    thresh = max(tol * tol / 2.0, 1e-15 * scale)
    gap_met = False
    for _ in range(_MAX_ITER):
        g = b_arr @ (y - x)
        s = int(np.argmin(g))
        wg = float(w @ g)
        fw_gap = wg - float(g[s])
        if fw_gap <= thresh:
            gap_met = True
            break
        support = np.flatnonzero(w > 0)
        a = int(support[np.argmax(g[support])])
        away_gap = float(g[a]) - wg
        if fw_gap >= away_gap:
            direction = b_arr[s] - y
            gamma_max = 1.0
            toward, away = s, None
        else:
            direction = y - b_arr[a]
            gamma_max = w[a] / (1.0 - w[a]) if w[a] < 1.0 else 0.0
            toward, away = None, a
        denom = float(direction @ direction)
        if denom == 0.0 or gamma_max == 0.0:
            gap_met = True
            break
        gamma = min(max(-float((y - x) @ direction) / denom, 0.0), gamma_max)
        if toward is not None:
            w *= 1.0 - gamma
            w[toward] += gamma
        else:
            w *= 1.0 + gamma
            w[away] -= gamma
            if w[away] < 1e-18:
                w[away] = 0.0
        w = np.maximum(w, 0.0)
        w /= w.sum()
        y = w @ b_arr
    dist = float(np.linalg.norm(y - x))
    # exact affine polish on the final support (kills the sqrt(eps) floor)
    support = np.flatnonzero(w > 1e-12)
    if 1 < len(support) <= b_arr.shape[1] + 1:
        bs = b_arr[support]
        k = len(support)
        kkt = np.zeros((k + 1, k + 1))
        kkt[:k, :k] = bs @ bs.T
        kkt[:k, k] = 1.0
        kkt[k, :k] = 1.0
        rhs = np.append(bs @ x, 1.0)
        try:
            sol = np.linalg.solve(kkt, rhs)
        except np.linalg.LinAlgError:
            sol = None
        if sol is not None and np.all(sol[:k] >= -1e-12):
            cand = float(np.linalg.norm(sol[:k] @ bs - x))
            if cand < dist:
                dist = cand
    return dist, gap_met


def point_polytope_distance(x, b: FloatPolytope, tol: float = 1e-9) -> float:
    """Euclidean distance from ``x`` to the hull of ``b`` within additive tol."""
    dist, _ = _point_distance_status(x, b, tol)
    return dist


def _point_distance_status(x, b: FloatPolytope, tol: float):
    xv = np.asarray(x, dtype=float)
    if tol <= 0:
        raise ValueError("tol must be positive")
    if xv.shape != (b.ambient_dim,):
        raise DimensionMismatchError(
            f"point has dim {xv.shape}, polytope ambient dim {b.ambient_dim}")
    for row in b.vertices:
        if np.array_equal(row, xv):
            return 0.0, True
    return _min_norm_point(b.vertices, xv, tol)


def hausdorff(a: FloatPolytope, b: FloatPolytope, tol: float = 1e-9) -> float:
    """Hausdorff distance between two convex hulls given by vertices.

    Correct for convex sets: x -> d(x, hull) is convex, hence maximized at a
    vertex of the other polytope.
    """
    dist, _ = _hausdorff_status(a, b, tol)
    return dist


def _hausdorff_status(a: FloatPolytope, b: FloatPolytope, tol: float):
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError(
            f"ambient dims differ: {a.ambient_dim} vs {b.ambient_dim}")
    worst, ok = 0.0, True
    for src, dst in ((a, b), (b, a)):
        for row in src.vertices:
            d, met = _point_distance_status(row, dst, tol)
            worst = max(worst, d)
            ok = ok and met
    return worst, ok


def _tail_nonincreasing(xs, slack=1e-12):
    tail = xs[-3:] if len(xs) >= 3 else xs
    return all(b <= a + slack for a, b in zip(tail, tail[1:]))


def _probe_samples(p: Polytope, point, h, t0, steps):
    pt = linalg.vec(point)
    hv = linalg.vec(h)
    if len(hv) != p.d:
        raise DimensionMismatchError("direction length must equal d")
    t0 = Fraction(t0)
    if t0 <= 0 or steps < 3:
        raise ValueError("need t0 > 0 and steps >= 3")
    if locate(p, pt).tag == Location.OUTSIDE:
        raise LeavesPolytopeError("basepoint is outside the polytope")
    far = tuple(a + t0 * b for a, b in zip(pt, hv))
    if locate(p, far).tag == Location.OUTSIDE:
        raise LeavesPolytopeError("p + t0*h leaves the polytope")
    ts = [t0 / (1 << k) for k in range(steps)]
    return pt, hv, ts


def continuity_probe(p: Polytope, point, h, t0=Fraction(1, 8), steps: int = 8,
                     tolerance: float = 1e-7, distance_tol: float = 1e-9) -> ProbeReport:
    """Hausdorff distances between coordinate polytopes along p + t·h, t -> 0.

    Parameters
    ----------
    p, point, h : polytope, rational basepoint and rational direction.
    t0, steps : geometric step sequence t_k = t0 / 2^k, k = 0..steps-1.
    tolerance : verdict threshold on the final distance.
    distance_tol : additive tolerance of the underlying distance evaluations.

    Returns a ProbeReport whose steps carry (t_k, d_k, d_k / t_k); the verdict
    is Converges only when the final distance is below ``tolerance`` and the
    tail is nonincreasing.
    """
    pt, hv, ts = _probe_samples(p, point, h, t0, steps)
    base = FloatPolytope.from_exact(lambda_vertices(p, pt).vertex_arrays())
    steps_out = []
    all_met = True
    for t in ts:
        q = tuple(a + t * b for a, b in zip(pt, hv))
        cur = FloatPolytope.from_exact(lambda_vertices(p, q).vertex_arrays())
        d, met = _hausdorff_status(cur, base, distance_tol)
        all_met = all_met and met
        steps_out.append(ProbeStep(t=float(t), distance=d, ratio=d / float(t)))
    dists = [s.distance for s in steps_out]
    if not all_met:
        verdict = "Inconclusive"
    elif dists[-1] < tolerance and _tail_nonincreasing(dists):
        verdict = "Converges"
    elif dists[-1] > max(dists[0], tolerance) and not _tail_nonincreasing(dists):
        verdict = "Diverges"
    else:
        verdict = "Inconclusive"
    meta = {
        "basepoint": [str(x) for x in pt],
        "direction": [str(x) for x in hv],
        "distance_tol": distance_tol,
    }
    return ProbeReport(steps=tuple(steps_out), verdict=verdict,
                       tolerance=tolerance, metadata=meta)


def _selection_jacobian_exact(p: Polytope, zero_set) -> list:
    """Exact n x d Jacobian of the simplicial-coordinate map for ``zero_set``."""
    zero0 = sorted(j - 1 for j in zero_set)
    keep = [j for j in range(p.n) if j not in set(zero0)]
    if len(keep) != p.d + 1:
        raise ValueError(f"zero set must have size n-d-1 = {p.kernel_dim()}")
    rows = [[p.vertices[j][l] for j in keep] for l in range(p.d)]
    rows.append([Fraction(1)] * len(keep))
    jac = [[Fraction(0)] * p.d for _ in range(p.n)]
    for l in range(p.d):
        e = [Fraction(1) if i == l else Fraction(0) for i in range(p.d + 1)]
        try:
            col = linalg.solve_linear(rows, e)
        except SingularMatrixError as exc:
            raise SingularPatternError(
                f"columns outside {sorted(zero_set)} are affinely dependent") from exc
        for j, val in zip(keep, col):
            jac[j][l] = val
    return jac


def selection_jacobian(p: Polytope, zero_set) -> np.ndarray:
    """Constant Jacobian of p -> sigma_Z(p), zero rows on the zero set.

    The map solves a fixed linear system with p on the right side, so the
    Jacobian is the first d columns of the system inverse scattered to the
    complement rows.  Computed exactly, returned as a float n x d matrix.
    """
    jac = _selection_jacobian_exact(p, zero_set)
    return np.array([[float(x) for x in row] for row in jac], dtype=float)


def semidiff_probe(p: Polytope, point, zero_set, h, t0=Fraction(1, 16),
                   steps: int = 8, tolerance: float = 1e-6,
                   distance_tol: float = 1e-9) -> ProbeReport:
    """Difference-quotient sets S_k = (Lambda(p + t_k h) - sigma_Z(p)) / t_k.

    Reports, per step, the distance of the candidate limit direction
    v = J·h to S_k (``distance``) and the Hausdorff distance between
    consecutive quotient sets (``ratio``; NaN at the last step).  The witness
    distance must vanish when the map is semidifferentiable at the selection;
    the consecutive-set series indicates whether the quotient sets themselves
    settle, which is not implied (they grow without bound whenever the
    coordinate polytope at p is not the single point sigma_Z(p)).
    """
    pt, hv, ts = _probe_samples(p, point, h, t0, steps)
    if locate(p, pt).tag != Location.INTERIOR:
        raise LeavesPolytopeError("basepoint must be interior")
    sel = simplicial_coords(p, pt, zero_set)
    if not sel.feasible:
        raise InfeasibleSelectionError(
            f"sigma with zero set {sorted(zero_set)} is infeasible at the basepoint")
    jac = _selection_jacobian_exact(p, zero_set)
    v = [linalg.dot(row, hv) for row in jac]
    v_float = np.array([float(x) for x in v], dtype=float)
    quotient_sets = []
    witness = []
    all_met = True
    for t in ts:
        q = tuple(a + t * b for a, b in zip(pt, hv))
        lam = lambda_vertices(p, q)
        sk = FloatPolytope.from_exact([tuple((m - s) / t
                                             for m, s in zip(vert, sel.sigma))
                                       for vert in lam.vertex_arrays()])
        quotient_sets.append(sk)
        d, met = _point_distance_status(v_float, sk, distance_tol)
        all_met = all_met and met
        witness.append(d)
    pair = []
    for a, b in zip(quotient_sets, quotient_sets[1:]):
        d, met = _hausdorff_status(a, b, distance_tol)
        all_met = all_met and met
        pair.append(d)
    steps_out = tuple(
        ProbeStep(t=float(t), distance=w,
                  ratio=pair[i] if i < len(pair) else math.nan)
        for i, (t, w) in enumerate(zip(ts, witness)))
    diameters = [s.diameter() for s in quotient_sets]
    witness_ok = witness[-1] < tolerance and _tail_nonincreasing(witness)
    sets_settle = _tail_nonincreasing(pair) if pair else True
    if not all_met:
        verdict = "Inconclusive"
    elif witness_ok and sets_settle:
        verdict = "Converges"
    elif not witness_ok and diameters[-1] > 2.0 * diameters[0] > 0.0:
        verdict = "Diverges"
    else:
        verdict = "Inconclusive"
    meta = {
        "basepoint": [str(x) for x in pt],
        "direction": [str(x) for x in hv],
        "zero_set": sorted(zero_set),
        "diameters": diameters,
        "pairwise_hausdorff": pair,
        "distance_tol": distance_tol,
    }
    return ProbeReport(steps=steps_out, verdict=verdict,
                       tolerance=tolerance, metadata=meta)
