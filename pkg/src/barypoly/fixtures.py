"""Built-in example polytopes, shipped for the CLI and the test suite.

The pentagon uses rational coordinates close to the regular pentagon with a
vertex at the top of the unit circle (exact trigonometric coordinates are
irrational); everything asserted about it is combinatorial and stable under
this rounding.
"""

from functools import lru_cache

from .polytope import Polytope, parse_polytope

_DOCS = {
    "square": {
        "dim": 2,
        "vertices": [["0", "0"], ["1", "0"], ["1", "1"], ["0", "1"]],
    },
    "pentagon": {
        "dim": 2,
        "vertices": [
            ["0", "1"],
            ["-951/1000", "309/1000"],
            ["-588/1000", "-809/1000"],
            ["588/1000", "-809/1000"],
            ["951/1000", "309/1000"],
        ],
    },
    "pyramid": {
        "dim": 3,
        "vertices": [
            ["0", "0", "0"],
            ["3", "0", "0"],
            ["2", "2", "0"],
            ["0", "1", "0"],
            ["1", "1", "2"],
        ],
    },
    "prism8": {
        "dim": 3,
        "vertices": [
            ["0", "0", "0"], ["1", "0", "0"], ["1", "1", "0"], ["0", "1", "0"],
            ["0", "0", "1"], ["1", "0", "1"], ["1", "1", "1"], ["0", "1", "1"],
        ],
    },
}


def fixture_names() -> list:
    return sorted(_DOCS)


def fixture_document(name: str) -> dict:
    """JSON document for a named fixture (polytope file format)."""
    if name not in _DOCS:
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(fixture_names())}")
    doc = _DOCS[name]
    return {"dim": doc["dim"], "vertices": [list(v) for v in doc["vertices"]]}


@lru_cache(maxsize=None)
def get_fixture(name: str) -> Polytope:
    return parse_polytope(fixture_document(name))
