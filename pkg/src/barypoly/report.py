"""Lossless analysis report: exact values serialize as 'p/q' strings.

Re-parsing a serialized report reproduces the original exactly; floats (the
timing field and probe data elsewhere) are written with 17 significant
digits, which round-trips IEEE doubles.
"""

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError


def format_float(x: float) -> str:
    return f"{x:.17g}"


def _rvec(xs) -> list:
    return [str(x) for x in xs]


def _parse_rvec(xs) -> tuple:
    return tuple(Fraction(x) for x in xs)


@dataclass(frozen=True)
class LambdaVertexEntry:
    lam: tuple
    support: tuple    # 1-based, ascending
    zeros: tuple      # 1-based, ascending


@dataclass(frozen=True)
class AnalysisReport:
    polytope_dim: int
    polytope_vertices: tuple
    point: tuple
    location: str
    tau: tuple
    nbasis: tuple                # n rows x (n-d-1) cols
    lambda_vertices: tuple       # LambdaVertexEntry
    gamma_vertices: tuple
    dim: int
    theorem_count_match: bool
    timing: float

    def to_dict(self) -> dict:
        return {
            "polytope": {
                "dim": self.polytope_dim,
                "vertices": [_rvec(v) for v in self.polytope_vertices],
            },
            "point": _rvec(self.point),
            "location": self.location,
            "tau": _rvec(self.tau),
            "nullspace_basis": [_rvec(row) for row in self.nbasis],
            "lambda_vertices": [
                {
                    "lambda": _rvec(e.lam),
                    "support": list(e.support),
                    "zeros": list(e.zeros),
                }
                for e in self.lambda_vertices
            ],
            "gamma_vertices": [_rvec(v) for v in self.gamma_vertices],
            "dim": self.dim,
            "theorem_count_match": self.theorem_count_match,
            "timing": format_float(self.timing),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, doc: dict) -> "AnalysisReport":
        try:
            return cls(
                polytope_dim=doc["polytope"]["dim"],
                polytope_vertices=tuple(
                    _parse_rvec(v) for v in doc["polytope"]["vertices"]),
                point=_parse_rvec(doc["point"]),
                location=doc["location"],
                tau=_parse_rvec(doc["tau"]),
                nbasis=tuple(_parse_rvec(row) for row in doc["nullspace_basis"]),
                lambda_vertices=tuple(
                    LambdaVertexEntry(
                        lam=_parse_rvec(e["lambda"]),
                        support=tuple(e["support"]),
                        zeros=tuple(e["zeros"]),
                    )
                    for e in doc["lambda_vertices"]
                ),
                gamma_vertices=tuple(_parse_rvec(v) for v in doc["gamma_vertices"]),
                dim=doc["dim"],
                theorem_count_match=doc["theorem_count_match"],
                timing=float(doc["timing"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad report document: {exc}") from exc

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(doc)
