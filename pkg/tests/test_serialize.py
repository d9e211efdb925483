"""JSON round trips for every interchange format."""

import json

import numpy as np
import pytest

from hppoly.catalog import catalog
from hppoly.matroids import Presentation
from hppoly.poly import GeneralPolynomial, MultiAffinePolynomial
from hppoly.serialize import (
    from_dict_any,
    matrix_from_dict,
    matrix_to_dict,
    matroid_from_dict,
    matroid_to_dict,
    polynomial_from_dict,
    polynomial_to_dict,
    presentation_from_dict,
    presentation_to_dict,
)


def roundtrip(obj, to_dict, from_dict):
    return from_dict(json.loads(json.dumps(to_dict(obj))))


class TestPolynomialJson:
    def test_multiaffine_roundtrip(self):
        rng = np.random.default_rng(60)
        terms = {}
        for mask in range(16):
            if rng.random() < 0.5:
                terms[mask] = complex(rng.normal(), rng.normal())
        P = MultiAffinePolynomial(4, terms)
        assert roundtrip(P, polynomial_to_dict, polynomial_from_dict) == P

    def test_general_roundtrip(self):
        P = GeneralPolynomial(2, {(2, 0): 1.25, (0, 3): -0.5 + 0.125j})
        assert roundtrip(P, polynomial_to_dict, polynomial_from_dict) == P

    def test_representable_doubles_exact(self):
        P = MultiAffinePolynomial(1, {0: 0.1, 1: 1e-300})
        assert roundtrip(P, polynomial_to_dict, polynomial_from_dict) == P


class TestMatroidJson:
    def test_roundtrip(self):
        M = catalog("F7")
        assert roundtrip(M, matroid_to_dict, matroid_from_dict) == M

    def test_validation_on_load(self):
        with pytest.raises(Exception):
            matroid_from_dict({"n": 4, "bases": [[0, 1], [2, 3]]})


class TestMatrixJson:
    def test_complex_roundtrip(self):
        A = np.array([[1 + 2j, 0.5], [0, -1j]])
        B = roundtrip(A, matrix_to_dict, matrix_from_dict)
        assert np.array_equal(A, B)

    def test_real_compact_form(self):
        A = np.array([[1.0, 0.25], [3.0, 4.0]])
        d = matrix_to_dict(A)
        assert d["entries"] == [[1.0, 0.25], [3.0, 4.0]]
        assert np.array_equal(matrix_from_dict(d), A)

    def test_shape_guard(self):
        with pytest.raises(ValueError):
            matrix_from_dict({"rows": 2, "cols": 2, "entries": [[1.0]]})


class TestPresentationJson:
    def test_roundtrip(self):
        p = Presentation.from_sets(5, [(0, 1), (2, 3, 4)])
        assert roundtrip(p, presentation_to_dict, presentation_from_dict) == p


class TestDispatch:
    def test_from_dict_any(self):
        assert isinstance(from_dict_any({"n": 1, "terms": []}), MultiAffinePolynomial)
        assert isinstance(from_dict_any({"n": 3, "bases": [[0], [1], [2]]}), type(catalog("F7")))
        assert isinstance(from_dict_any({"n": 2, "sets": [[0, 1]]}), Presentation)
        assert isinstance(from_dict_any({"rows": 1, "cols": 1, "entries": [[1.0]]}), np.ndarray)
        with pytest.raises(ValueError):
            from_dict_any({"what": 1})
