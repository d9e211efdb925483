"""JSON interchange for polynomials, matroids, matrices, and presentations.

Formats:
  polynomial  {"n": int, "terms": [{"subset": [ints], "re": f, "im": f}, ...]}
              (general polynomials use "exponents" instead of "subset")
  matroid     {"n": int, "bases": [[ints], ...]}
  matrix      {"rows": int, "cols": int, "entries": [[{"re": f, "im": f}]]}
              (nonnegative real matrices may use plain floats as entries)
  presentation {"n": int, "sets": [[ints], ...]}

Round trips are lossless for representable doubles.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .matroids import Matroid, Presentation
from .poly import GeneralPolynomial, MultiAffinePolynomial, mask_of, members_of


def polynomial_to_dict(P: MultiAffinePolynomial | GeneralPolynomial) -> dict:
    if isinstance(P, MultiAffinePolynomial):
        return {
            "n": P.n,
            "terms": [
                {"subset": list(members_of(m)), "re": c.real, "im": c.imag}
                for m, c in P.terms()
            ],
        }
    return {
        "n": P.n,
        "terms": [
            {"exponents": list(m), "re": c.real, "im": c.imag} for m, c in P.terms()
        ],
    }


def polynomial_from_dict(d: dict) -> MultiAffinePolynomial | GeneralPolynomial:
    n = int(d["n"])
    terms = d.get("terms", [])
    if any("exponents" in t for t in terms):
        return GeneralPolynomial(
            n,
            {tuple(t["exponents"]): complex(t.get("re", 0.0), t.get("im", 0.0)) for t in terms},
        )
    return MultiAffinePolynomial(
        n,
        [(mask_of(t["subset"], n), complex(t.get("re", 0.0), t.get("im", 0.0))) for t in terms],
    )


def matroid_to_dict(M: Matroid) -> dict:
    return {"n": M.n, "bases": [list(b) for b in M.basis_sets()]}


def matroid_from_dict(d: dict) -> Matroid:
    return Matroid(int(d["n"]), [tuple(b) for b in d["bases"]])


def matrix_to_dict(A: np.ndarray) -> dict:
    A = np.asarray(A)
    if np.iscomplexobj(A):
        entries = [[{"re": float(v.real), "im": float(v.imag)} for v in row] for row in A]
    else:
        entries = [[float(v) for v in row] for row in A]
    return {"rows": A.shape[0], "cols": A.shape[1], "entries": entries}


def matrix_from_dict(d: dict) -> np.ndarray:
    rows, cols = int(d["rows"]), int(d["cols"])
    entries = d["entries"]
    if rows != len(entries) or any(len(r) != cols for r in entries):
        raise ValueError("entry grid does not match the declared shape")
    if entries and entries[0] and isinstance(entries[0][0], dict):
        return np.array(
            [[complex(v.get("re", 0.0), v.get("im", 0.0)) for v in row] for row in entries]
        )
    return np.array([[float(v) for v in row] for row in entries])


def presentation_to_dict(p: Presentation) -> dict:
    return {"n": p.n, "sets": [list(s) for s in p.set_members()]}


def presentation_from_dict(d: dict) -> Presentation:
    return Presentation.from_sets(int(d["n"]), [tuple(s) for s in d["sets"]])


def load_any(path: str) -> Any:
    """Load a JSON artifact, dispatching on its keys."""
    with open(path) as fh:
        d = json.load(fh)
    return from_dict_any(d)


def from_dict_any(d: dict) -> Any:
    if "bases" in d:
        return matroid_from_dict(d)
    if "terms" in d:
        return polynomial_from_dict(d)
    if "entries" in d:
        return matrix_from_dict(d)
    if "sets" in d:
        return presentation_from_dict(d)
    raise ValueError("unrecognized JSON artifact")


def to_dict_any(obj: Any) -> dict:
    if isinstance(obj, Matroid):
        return matroid_to_dict(obj)
    if isinstance(obj, (MultiAffinePolynomial, GeneralPolynomial)):
        return polynomial_to_dict(obj)
    if isinstance(obj, Presentation):
        return presentation_to_dict(obj)
    if isinstance(obj, np.ndarray):
        return matrix_to_dict(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any, pretty: bool = False) -> str:
    return json.dumps(to_dict_any(obj), indent=2 if pretty else None)
