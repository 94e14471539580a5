"""Input polytope model: validation, point location, file format.

A polytope is given by its n vertices in R^d (n > d) and must be
full-dimensional: the stacked matrix [V; 1^T] has rank d+1, equivalently its
kernel has dimension n-d-1.  Every listed vertex must be an extreme point of
the hull.  Vertex order in the input fixes the 1-based index order used by
every other module.
"""

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import (
    DimensionMismatchError,
    DuplicateVertexError,
    NonExtremeVertexError,
    ParseError,
    RankDeficientError,
    TooFewVerticesError,
)
from .simplex import convex_membership, feasible_point, solve_lp

_ONE = Fraction(1)


@dataclass(frozen=True)
class Polytope:
    d: int
    n: int
    vertices: tuple          # n vertex tuples, each of length d
    labels: tuple | None = None

    def stacked_rows(self) -> list:
        """Rows of [V; 1^T]: d coordinate rows plus the all-ones row."""
        rows = [[v[l] for v in self.vertices] for l in range(self.d)]
        rows.append([_ONE] * self.n)
        return rows

    def centroid(self) -> tuple:
        w = Fraction(1, self.n)
        return tuple(sum((v[l] for v in self.vertices), Fraction(0)) * w
                     for l in range(self.d))

    def kernel_dim(self) -> int:
        return self.n - self.d - 1


class Location(str, Enum):
    INTERIOR = "Interior"
    BOUNDARY = "Boundary"
    OUTSIDE = "Outside"


@dataclass(frozen=True)
class PointLocation:
    tag: Location
    # feasible coordinates for Interior/Boundary
    barycentric: tuple | None = None
    # (a, b) with a·v_i <= b for all vertices and a·p > b, for Outside
    separator: tuple | None = None


def validate(v_rows: Sequence[Sequence], d: int, labels=None) -> Polytope:
    """Validate a d x n vertex matrix (column i = vertex i) into a Polytope.

    Raises TooFewVerticesError, DuplicateVertexError, RankDeficientError or
    NonExtremeVertexError (with a 1-based index).
    """
    rows = linalg.mat(v_rows)
    if len(rows) != d or any(len(r) != len(rows[0]) for r in rows):
        raise DimensionMismatchError(f"expected {d} coordinate rows of equal length")
    n = len(rows[0]) if rows else 0
    if n <= d:
        raise TooFewVerticesError(f"need n > d, got n={n}, d={d}")
    verts = [tuple(rows[l][i] for l in range(d)) for i in range(n)]
    seen = {}
    for i, v in enumerate(verts):
        if v in seen:
            raise DuplicateVertexError(
                f"vertices {seen[v] + 1} and {i + 1} coincide")
        seen[v] = i
    stacked = rows + [[_ONE] * n]
    if linalg.rank(stacked) != d + 1:
        raise RankDeficientError(
            "hull is not full-dimensional (rank [V;1] < d+1)")
    for i in range(n):
        others = verts[:i] + verts[i + 1:]
        if convex_membership(others, verts[i]) is not None:
            raise NonExtremeVertexError(i + 1)
    if labels is not None:
        labels = tuple(str(s) for s in labels)
        if len(labels) != n:
            raise DimensionMismatchError("labels length must equal n")
    return Polytope(d=d, n=n, vertices=tuple(verts), labels=labels)


def locate(p: Polytope, point: Sequence) -> PointLocation:
    """Classify ``point`` as Interior / Boundary / Outside with a certificate.

    Outside comes with an exact separating functional from the Farkas dual of
    the feasibility system; otherwise the exact LP max s s.t. V·lam = p,
    sum(lam) = 1, lam >= s decides Interior (s* > 0) vs Boundary (s* = 0).
    """
    pt = linalg.vec(point)
    if len(pt) != p.d:
        raise DimensionMismatchError(f"point has length {len(pt)}, expected {p.d}")
    stacked = p.stacked_rows()
    rhs = list(pt) + [_ONE]
    feas = feasible_point(stacked, rhs)
    if feas.status == "infeasible":
        y = feas.farkas
        a, b = tuple(y[: p.d]), -y[p.d]
        assert all(linalg.dot(a, v) <= b for v in p.vertices)
        assert linalg.dot(a, pt) > b
        return PointLocation(Location.OUTSIDE, separator=(a, b))
    # max s via variables (mu_1..mu_n, s+, s-), lam = mu + s·1
    col_sums = [sum(row, Fraction(0)) for row in stacked]
    a_rows = [list(row) + [col_sums[i], -col_sums[i]]
              for i, row in enumerate(stacked)]
    c = [Fraction(0)] * p.n + [Fraction(-1), Fraction(1)]
    res = solve_lp(a_rows, rhs, c)
    assert res.status == "optimal"
    s_star = res.x[p.n] - res.x[p.n + 1]
    lam = tuple(res.x[j] + s_star for j in range(p.n))
    tag = Location.INTERIOR if s_star > 0 else Location.BOUNDARY
    return PointLocation(tag, barycentric=lam)


def parse_polytope(doc) -> Polytope:
    """Build a validated Polytope from a parsed JSON document.

    Expected shape: {"dim": d, "vertices": [[x, ...], ...]} where each
    coordinate is a number (converted exactly from its decimal expansion) or a
    string "p/q".  Vertex order fixes the 1-based index order.
    """
    if not isinstance(doc, dict):
        raise ParseError("top-level JSON value must be an object")
    if "dim" not in doc or "vertices" not in doc:
        raise ParseError('missing required keys "dim" and "vertices"')
    d = doc["dim"]
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise ParseError('"dim" must be a positive integer')
    verts = doc["vertices"]
    if not isinstance(verts, list) or not verts:
        raise ParseError('"vertices" must be a nonempty list')
    cols = []
    for i, v in enumerate(verts):
        if not isinstance(v, list) or len(v) != d:
            raise ParseError(f"vertex {i + 1} must be a list of {d} coordinates")
        if any(isinstance(x, bool) for x in v):
            raise ParseError(f"vertex {i + 1}: bad coordinate (boolean)")
        try:
            cols.append([linalg.fr(x) for x in v])
        except (ValueError, ZeroDivisionError, TypeError) as exc:
            raise ParseError(f"vertex {i + 1}: bad coordinate ({exc})") from exc
    rows = [[col[l] for col in cols] for l in range(d)]
    labels = doc.get("labels")
    if labels is not None and (not isinstance(labels, list) or len(labels) != len(cols)):
        raise ParseError('"labels" must list one string per vertex')
    return validate(rows, d, labels=labels)


def load_polytope(path) -> Polytope:
    """Parse and validate a polytope file (see parse_polytope for the schema)."""
    try:
        with open(path) as fh:
            doc = json.load(fh, parse_float=Fraction)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc
    return parse_polytope(doc)


def polytope_document(p: Polytope) -> dict:
    """Lossless JSON document for a polytope (rationals as 'p/q' strings)."""
    doc = {"dim": p.d, "vertices": [[str(x) for x in v] for v in p.vertices]}
    if p.labels is not None:
        doc["labels"] = list(p.labels)
    return doc
