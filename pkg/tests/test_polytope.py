import json
import random
from fractions import Fraction

import pytest

from barypoly import linalg
from barypoly.errors import (
    DimensionMismatchError,
    DuplicateVertexError,
    NonExtremeVertexError,
    ParseError,
    RankDeficientError,
    TooFewVerticesError,
)
from barypoly.oracle import random_polytope
from barypoly.polytope import (
    Location,
    load_polytope,
    locate,
    parse_polytope,
    polytope_document,
    validate,
)
from helpers import interior_point

F = Fraction

SQUARE_ROWS = [[F(0), F(1), F(1), F(0)], [F(0), F(0), F(1), F(1)]]


def test_validate_square():
    p = validate(SQUARE_ROWS, 2)
    assert p.n == 4 and p.d == 2 and p.kernel_dim() == 1
    assert p.vertices[2] == (F(1), F(1))


def test_validate_non_extreme_centroid():
    rows = [[F(0), F(1), F(0), F(1, 3)],
            [F(0), F(0), F(1), F(1, 3)]]
    with pytest.raises(NonExtremeVertexError) as exc:
        validate(rows, 2)
    assert exc.value.index == 4


def test_validate_collinear_rank_deficient():
    rows = [[F(0), F(1), F(2), F(3)],
            [F(0), F(1), F(2), F(3)]]
    with pytest.raises(RankDeficientError):
        validate(rows, 2)


def test_validate_too_few_and_duplicates():
    with pytest.raises(TooFewVerticesError):
        validate([[F(0), F(1)], [F(0), F(0)]], 2)
    rows = [[F(0), F(1), F(1), F(1)],
            [F(0), F(0), F(1), F(0)]]  # vertices 2 and 4 coincide
    with pytest.raises(DuplicateVertexError):
        validate(rows, 2)


def test_locate_square_examples():
    p = validate(SQUARE_ROWS, 2)
    inn = locate(p, (F(1, 2), F(1, 2)))
    assert inn.tag is Location.INTERIOR
    assert inn.barycentric == (F(1, 4),) * 4

    edge = locate(p, (F(1, 2), F(0)))
    assert edge.tag is Location.BOUNDARY
    lam = edge.barycentric
    assert all(x >= 0 for x in lam) and sum(lam) == 1

    out = locate(p, (F(2), F(2)))
    assert out.tag is Location.OUTSIDE
    a, b = out.separator
    assert all(linalg.dot(a, v) <= b for v in p.vertices)
    assert linalg.dot(a, (F(2), F(2))) > b


def test_locate_dimension_mismatch():
    p = validate(SQUARE_ROWS, 2)
    with pytest.raises(DimensionMismatchError):
        locate(p, (F(1), F(1), F(1)))


def test_locate_invariants_random_polytopes():
    rng = random.Random(42)
    for seed in range(6):
        d = 2 + seed % 2
        p = random_polytope(d, d + 3, seed=seed)
        assert locate(p, p.centroid()).tag is Location.INTERIOR
        for v in p.vertices:
            assert locate(p, v).tag is Location.BOUNDARY
        # Farkas soundness on a point pushed past a random vertex
        v = p.vertices[rng.randrange(p.n)]
        far = tuple(2 * x for x in v)
        loc = locate(p, far)
        if loc.tag is Location.OUTSIDE:
            a, b = loc.separator
            assert all(linalg.dot(a, u) <= b for u in p.vertices)
            assert linalg.dot(a, far) > b


def test_interior_certificate_is_strictly_positive():
    rng = random.Random(7)
    p = random_polytope(2, 6, seed=3)
    q = interior_point(p, rng)
    loc = locate(p, q)
    assert loc.tag is Location.INTERIOR
    assert all(x > 0 for x in loc.barycentric)
    assert sum(loc.barycentric) == 1


def test_parse_exact_decimals(tmp_path):
    doc = {"dim": 2, "vertices": [[0, 0], [1, 0], [1, 1], [0.1, 1]]}
    f = tmp_path / "p.json"
    f.write_text(json.dumps(doc))
    p = load_polytope(f)
    assert p.vertices[3][0] == F(1, 10)  # exact decimal conversion
    f.write_text('{"dim": 2, "vertices": [[0,0],[1,0],[1,1],[2.5e-1,1]]}')
    assert load_polytope(f).vertices[3][0] == F(1, 4)  # exponents too


def test_parse_rational_strings_roundtrip(tmp_path):
    doc = {"dim": 2,
           "vertices": [["0", "0"], ["1", "0"], ["1", "1"], ["-1/3", "2/3"]]}
    f = tmp_path / "p.json"
    f.write_text(json.dumps(doc))
    p = load_polytope(f)
    assert p.vertices[3] == (F(-1, 3), F(2, 3))
    doc2 = polytope_document(p)
    p2 = parse_polytope(doc2)
    assert p2 == p


@pytest.mark.parametrize("doc", [
    [],
    {"dim": 2},
    {"dim": 0, "vertices": [[0]]},
    {"dim": 2, "vertices": []},
    {"dim": 2, "vertices": [[0, 0], [1], [1, 1]]},
    {"dim": 2, "vertices": [[0, "x"], [1, 0], [0, 1]]},
    {"dim": 2, "vertices": [[0, True], [1, 0], [0, 1]]},
    {"dim": 2, "vertices": [[0, "1/0"], [1, 0], [0, 1]]},
])
def test_parse_errors(doc):
    with pytest.raises(ParseError):
        parse_polytope(doc)


def test_load_malformed_json(tmp_path):
    f = tmp_path / "bad.json"
    f.write_text("{not json")
    with pytest.raises(ParseError):
        load_polytope(f)
