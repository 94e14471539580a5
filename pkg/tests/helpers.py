"""Shared test utilities: independent mini-oracles and samplers."""

import random
from fractions import Fraction

from barypoly import linalg
from barypoly.errors import SingularMatrixError
from barypoly.polytope import Polytope


def random_square_matrix(rng, n, den=12):
    return [[Fraction(rng.randint(-24, 24), den) for _ in range(n)]
            for _ in range(n)]


def triangle_solve(va, vb, vc, q):
    """Exact barycentric coordinates of q in the triangle (va, vb, vc)."""
    rows = [
        [va[0], vb[0], vc[0]],
        [va[1], vb[1], vc[1]],
        [Fraction(1)] * 3,
    ]
    return linalg.solve_linear(rows, [q[0], q[1], Fraction(1)])


def triangle_contains_strict(va, vb, vc, q):
    try:
        w = triangle_solve(va, vb, vc, q)
    except SingularMatrixError:
        return False
    return all(x > 0 for x in w)


def interior_point(p: Polytope, rng: random.Random):
    """Strictly positive random vertex combination (exact interior point)."""
    raw = [rng.randint(1, 999) for _ in range(p.n)]
    total = Fraction(sum(raw))
    return tuple(
        sum((Fraction(r) / total * v[l] for r, v in zip(raw, p.vertices)),
            Fraction(0))
        for l in range(p.d))


def pentagon_edge_region_point(pent: Polytope, edge: int, rng: random.Random):
    """Random interior point of the pentagon lying in all three triangles that
    share the boundary edge (edge, edge+1); 1-based edge in 1..5.

    Inside that region the coordinate polytope is a triangle: the only
    feasible supports are {edge, edge+1, x} for the three other vertices x.
    """
    i = edge - 1
    j = (edge % 5)
    others = [x for x in range(5) if x not in (i, j)]
    va, vb = pent.vertices[i], pent.vertices[j]
    for _ in range(10_000):
        wa, wb, wc = (rng.randint(1, 999) for _ in range(3))
        wc = max(1, wc // 8)  # stay close to the edge
        total = Fraction(wa + wb + wc)
        vx = pent.vertices[others[0]]
        q = tuple((wa * a + wb * b + wc * c) / total
                  for a, b, c in zip(va, vb, vx))
        if all(triangle_contains_strict(va, vb, pent.vertices[x], q)
               for x in others):
            return q
    raise RuntimeError("could not sample an edge-region point")


def brute_force_vertices(p: Polytope, point):
    """Zero-pattern brute force written independently of the library path."""
    from itertools import combinations
    out = set()
    k = p.n - p.d - 1
    for zero in combinations(range(p.n), k):
        keep = [j for j in range(p.n) if j not in zero]
        rows = [[p.vertices[j][l] for j in keep] for l in range(p.d)]
        rows.append([Fraction(1)] * len(keep))
        try:
            sol = linalg.solve_linear(rows, list(point) + [Fraction(1)])
        except SingularMatrixError:
            continue
        if all(x >= 0 for x in sol):
            full = [Fraction(0)] * p.n
            for jj, val in zip(keep, sol):
                full[jj] = val
            out.add(tuple(full))
    return out
