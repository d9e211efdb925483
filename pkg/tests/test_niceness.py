"""Exact rational weight solving and transversal weight verification."""

from fractions import Fraction as F

import numpy as np
import pytest

from hppoly.catalog import catalog, presentation_of, uniform_matroid
from hppoly.matroids import Presentation
from hppoly.niceness import (
    classify_system,
    nice_cotruncation_solve,
    nice_principal_solve,
    solve_affine,
    transversal_weight_verify,
)
from hppoly.poly import principal_truncation


class TestLinearAlgebra:
    def test_unique_solution(self):
        A = [[F(1), F(1)], [F(1), F(-1)]]
        part, kern = solve_affine(A, [F(2), F(0)])
        assert part == [F(1), F(1)] and kern == []

    def test_inconsistent(self):
        A = [[F(1), F(1)], [F(1), F(1)]]
        assert solve_affine(A, [F(1), F(2)]) is None

    def test_kernel(self):
        A = [[F(1), F(1), F(1)]]
        part, kern = solve_affine(A, [F(1)])
        assert len(kern) == 2

    def test_classify_prefers_symmetric_center(self):
        A = [[F(1), F(1), F(1)]]
        sol = classify_system(A, [F(1)])
        assert sol.status == "nice"
        assert sol.weights == (F(1, 3), F(1, 3), F(1, 3))

    def test_classify_vertex_search(self):
        # x + y = 1 with the additional sign structure x - 2y = 1 removed:
        # center of x+y=1, x-y=3 is (2,-1): not nonnegative, kernel empty
        sol = classify_system([[F(1), F(1)], [F(1), F(-1)]], [F(1), F(3)])
        assert sol.status == "infeasible-nonneg"
        assert sol.weights == (F(2), F(-1))


class TestPrincipalSolve:
    def test_mk4_line(self):
        sol = nice_principal_solve(catalog("MK4"), [0, 1, 2])
        assert sol.status == "nice"
        assert sol.weights == (F(1, 2), F(1, 2), F(1, 2))

    def test_q7_free_extension_infeasible(self):
        sol = nice_principal_solve(catalog("Q7del7"), range(6))
        assert sol.status == "infeasible-nonneg"
        assert sol.weights == (F(-1, 6), F(1, 2), F(1, 2), F(1, 3), F(1, 3), F(1, 3))
        assert sol.kernel_dim == 0

    def test_f7m4_free_extension_nice(self):
        sol = nice_principal_solve(catalog("F7m4"), range(7))
        assert sol.status == "nice"
        assert sol.weights == (F(0),) + (F(1, 4),) * 6

    def test_mk4_free_extension_not_nice(self):
        sol = nice_principal_solve(catalog("MK4"), range(6))
        assert sol.status in ("infeasible-nonneg", "inconsistent")

    def test_uniform_truncations(self):
        for n in range(1, 8):
            for r in range(1, n + 1):
                sol = nice_principal_solve(uniform_matroid(r, n), range(n))
                assert sol.status == "nice", (r, n)
                assert sol.weights == (F(1, n - r + 1),) * n

    def test_empty_set_rejected(self):
        with pytest.raises(ValueError):
            nice_principal_solve(catalog("MK4"), [])

    def test_substitution_recovers_unit_coefficients(self):
        M = catalog("MK4")
        sol = nice_principal_solve(M, [0, 1, 2])
        lam = [float(w) for w in sol.weights] + [0.0, 0.0, 0.0]
        tr = principal_truncation(M.basis_polynomial(), lam)
        want = {m: 1.0 for m in M.truncation_bases([0, 1, 2])}
        assert dict(tr.terms()) == want


class TestCotruncationSolve:
    def test_uniform_cotruncations(self):
        for n in range(1, 8):
            for r in range(1, n + 1):
                sol = nice_cotruncation_solve(uniform_matroid(r - 1, n), range(n))
                assert sol.status == "nice", (r, n)
                assert sol.weights == (F(1, r),) * n

    def test_rank_one_lift(self):
        sol = nice_cotruncation_solve(uniform_matroid(0, 3), range(3))
        assert sol.status == "nice" and sol.weights == (F(1),) * 3

    def test_partial_set(self):
        sol = nice_cotruncation_solve(uniform_matroid(1, 2), [0])
        assert sol.status == "nice"

    def test_degenerate_lift_set_reported(self):
        # the lift set lies inside the single basis, so there is nothing to
        # solve; the solver refuses rather than returning a vacuous answer
        from hppoly.matroids import Matroid

        M = Matroid(2, [(0, 1)])
        with pytest.raises(ValueError):
            nice_cotruncation_solve(M, [0])


class TestTransversalWeights:
    def test_m22_unit_value(self):
        pres = presentation_of("M_{2,2}")
        n1 = n2 = 2
        weights = [
            [1.0] + [0.5] * (n1 + n2),            # first set: {0,...,4}
            [1.0] * 3,                             # {1,2,5}
            [1.0] * 3,                             # {3,4,5}
        ]
        ver = transversal_weight_verify(pres, weights)
        assert ver.uniform and ver.common == pytest.approx(1.0)

    def test_whirl_not_uniform(self):
        pres = presentation_of("W3")
        ver = transversal_weight_verify(pres, [[1.0] * 3] * 3)
        assert not ver.uniform
        vals = ver.values
        assert vals[(0, 2, 4)] == pytest.approx(1.0)
        assert vals[(1, 3, 5)] == pytest.approx(2.0)

    def test_disjoint_lines_doubly_uniform(self):
        pres = presentation_of("L_{3,3,3}")
        ver = transversal_weight_verify(pres, [[1.0] * 6] * 3)
        assert ver.uniform and ver.common == pytest.approx(2.0)

    def test_row_count_guard(self):
        pres = Presentation.from_sets(3, [(0, 1, 2), (0, 1, 2), (0, 1, 2)])
        # rank 3 with three active rows is fine
        ver = transversal_weight_verify(pres, [[1.0] * 3] * 3)
        assert ver.uniform
        # an extra positively weighted row must be explicitly zeroed
        pres4 = Presentation.from_sets(3, [(0, 1, 2)] * 4)
        with pytest.raises(ValueError):
            transversal_weight_verify(pres4, [[1.0] * 3] * 4)
        ver = transversal_weight_verify(pres4, [[1.0] * 3] * 3 + [[0.0] * 3])
        assert ver.uniform

    def test_negative_weight_rejected(self):
        pres = presentation_of("W3")
        with pytest.raises(ValueError):
            transversal_weight_verify(pres, [[1.0, -1.0, 1.0]] + [[1.0] * 3] * 2)

    def test_per_construction_coherence(self):
        # the permanent construction agrees with the matching-weight values
        from hppoly.represent import per_construction

        rng = np.random.default_rng(50)
        L = rng.random((3, 6))
        pres = Presentation.from_sets(6, [tuple(range(6))] * 3)
        weights = [list(L[j]) for j in range(3)]
        ver = transversal_weight_verify(pres, weights)
        P = per_construction(L)
        for elems, val in ver.values.items():
            assert P.coeff(elems) == pytest.approx(val)
