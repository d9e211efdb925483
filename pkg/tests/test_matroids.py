"""Matroid engine: axioms, minors, connections, constructors, support checks."""

import itertools

import numpy as np
import pytest

from hppoly.catalog import catalog, rank3_from_lines, uniform_matroid
from hppoly.matroids import (
    ConnectionPreconditionError,
    Graph,
    Matroid,
    NotMatroidalError,
    Presentation,
    RankDeficiency,
    complete_graph,
    connected,
    constant_sum_jump_check,
    direct_sum,
    exchangeable,
    graphic_matroid,
    matroid_union_fullrank,
    parallel_connection_m,
    series_connection_m,
    support_matroid,
    transversal_matroid,
    two_sum_m,
    verify_basis_axioms,
)
from hppoly.poly import MultiAffinePolynomial, parallel_connection, two_sum

MA = MultiAffinePolynomial.from_subsets


class TestAxioms:
    def test_u23_ok(self):
        assert verify_basis_axioms(3, [(0, 1), (0, 2), (1, 2)]).ok

    def test_disjoint_pairs_fail_b2(self):
        rep = verify_basis_axioms(4, [(0, 1), (2, 3)])
        assert not rep.ok and rep.axiom == "B2"

    def test_empty_fails_b1(self):
        rep = verify_basis_axioms(3, [])
        assert not rep.ok and rep.axiom == "B1"

    def test_mixed_sizes_fail_b1(self):
        rep = verify_basis_axioms(3, [(0,), (0, 1)])
        assert not rep.ok and rep.axiom == "B1"

    def test_constructor_validates(self):
        with pytest.raises(NotMatroidalError):
            Matroid(4, [(0, 1), (2, 3)])


class TestDualMinors:
    def test_dual_uniform(self):
        assert catalog("U_{2,3}").dual() == uniform_matroid(1, 3)

    def test_dual_involution_and_rank(self):
        for name in ("F7", "P8", "W3plus", "Q7"):
            M = catalog(name)
            assert M.dual().dual() == M
            assert M.dual().rank == M.n - M.rank

    def test_basis_polynomial_duality(self):
        for name in ("F7", "Q6", "V8"):
            M = catalog(name)
            assert M.dual().basis_polynomial() == M.basis_polynomial().dual()

    def test_fano_contraction(self):
        got = catalog("F7").contract([3])
        # pairs on the relabeled 6-element set, excluding the leftovers of
        # the three lines through the contracted point
        excluded = [(2, 3), (0, 5), (1, 4)]
        want = [c for c in itertools.combinations(range(6), 2) if c not in excluded]
        assert got == Matroid(6, want)

    def test_direct_sum(self):
        one = uniform_matroid(1, 1)
        assert direct_sum(one, one) == Matroid(2, [(0, 1)])

    def test_minor_split(self):
        M = catalog("F7")
        assert M.minor(delete=[6], contract=[0]) == M.contract([0]).delete([5])

    def test_contract_dependent_set(self):
        M = uniform_matroid(2, 5)
        got = M.contract([0, 1, 2])  # dependent in a rank-2 matroid
        assert got.rank == 0 and got.n == 2


class TestConnections:
    def test_parallel_u12(self):
        M = uniform_matroid(1, 2)
        assert parallel_connection_m(M, M, 0) == uniform_matroid(1, 3)

    def test_series_u12(self):
        M = uniform_matroid(1, 2)
        assert series_connection_m(M, M, 0) == uniform_matroid(2, 3)

    def test_two_sum_u23(self):
        M = uniform_matroid(2, 3)
        assert two_sum_m(M, M, 0) == uniform_matroid(3, 4)

    def test_two_sum_rejects_coloops(self):
        M = uniform_matroid(2, 2)
        with pytest.raises(ConnectionPreconditionError):
            two_sum_m(M, uniform_matroid(2, 3), 0)

    def test_polynomial_coherence(self):
        rng = np.random.default_rng(20)
        names = ["F7", "F7m", "W3", "Q6", "P6", "Q7", "S7", "P7", "MK4"]
        for _ in range(10):
            a, b = rng.choice(names, size=2)
            M, N = catalog(str(a)), catalog(str(b))
            e = int(rng.integers(0, min(M.n, N.n)))
            PM, PN = M.basis_polynomial(), N.basis_polynomial()
            assert parallel_connection_m(M, N, e).basis_polynomial() == parallel_connection(PM, PN, e)
            assert two_sum_m(M, N, e).basis_polynomial() == two_sum(PM, PN, e)


class TestGeneratingPolynomials:
    def test_basis_polynomial_uniform(self):
        assert uniform_matroid(2, 3).basis_polynomial() == MA(
            3, {(0, 1): 1.0, (0, 2): 1.0, (1, 2): 1.0}
        )

    def test_independent_set_polynomial(self):
        got = uniform_matroid(1, 2).independent_set_polynomial()
        assert got == MA(2, {(): 1.0, (0,): 1.0, (1,): 1.0})

    def test_fano_unit_coefficients(self):
        P = catalog("F7").basis_polynomial()
        assert all(c == 1.0 for _m, c in P.terms())
        assert P.evaluate([1.0] * 7) == 28


class TestRelax:
    def test_fano_relaxation(self):
        F7 = catalog("F7")
        got = F7.relax((1, 3, 5))
        assert got == catalog("F7m")
        diff = got.basis_polynomial() - F7.basis_polynomial()
        assert diff == MA(7, {(1, 3, 5): 1.0})

    def test_second_relaxation(self):
        assert catalog("F7m").relax((0, 3, 6)) == catalog("F7mm")

    def test_existing_basis_rejected(self):
        with pytest.raises(ValueError):
            uniform_matroid(2, 3).relax((0, 1))


class TestUnion:
    def test_disjoint_singletons(self):
        M = uniform_matroid(1, 3)
        assert matroid_union_fullrank(M, M) == uniform_matroid(2, 3)

    def test_rank_deficient(self):
        M = uniform_matroid(2, 3)
        out = matroid_union_fullrank(M, M)
        assert isinstance(out, RankDeficiency)
        assert out.achieved == 3 < out.rank_m + out.rank_n

    def test_rank_zero_identity(self):
        M = uniform_matroid(2, 4)
        zero = uniform_matroid(0, 4)
        assert matroid_union_fullrank(M, zero) == M


class TestSupportMatroid:
    def test_weighted_u23(self):
        P = MA(3, {(0, 1): 2.0, (0, 2): 3.0, (1, 2): 5.0})
        assert support_matroid(P) == uniform_matroid(2, 3)

    def test_exchange_failure(self):
        P = MA(4, {(0, 1): 1.0, (2, 3): 1.0})
        with pytest.raises(NotMatroidalError) as err:
            support_matroid(P)
        assert err.value.report.axiom == "B2"

    def test_random_determinant_supports(self):
        from hppoly.represent import det_construction

        rng = np.random.default_rng(21)
        for _ in range(20):
            r = int(rng.integers(2, 4))
            n = int(rng.integers(r + 1, 7))
            A = rng.normal(size=(r, n)) + 1j * rng.normal(size=(r, n))
            M = support_matroid(det_construction(A))
            assert M.rank == r


class TestExchangeability:
    def test_reflexive(self):
        S = [(2, 0), (1, 1)]
        assert exchangeable(S, (2, 0), (2, 0))

    def test_missing_midpoint(self):
        S = [(2, 0), (0, 2)]
        assert not exchangeable(S, (2, 0), (0, 2))

    def test_determinant_support_exchange(self):
        from hppoly.represent import det_construction

        rng = np.random.default_rng(22)
        A = rng.normal(size=(3, 6))
        P = det_construction(A)
        fam = [tuple(1 if m & (1 << e) else 0 for e in range(6)) for m in P.support()]
        for a in fam[:5]:
            for b in fam[:5]:
                assert exchangeable(fam, a, b)

    def test_jump_uniform(self):
        fam = [tuple(1 if i in c else 0 for i in range(4))
               for c in itertools.combinations(range(4), 2)]
        assert constant_sum_jump_check(fam)

    def test_jump_with_square(self):
        assert constant_sum_jump_check([(2, 0), (1, 1), (0, 2)])
        assert not constant_sum_jump_check([(2, 0), (0, 2)])


class TestConnected:
    def test_uniform_connected(self):
        assert connected(uniform_matroid(2, 3))

    def test_direct_sum_disconnected(self):
        one = uniform_matroid(1, 1)
        assert not connected(direct_sum(one, one))

    def test_fano_connected(self):
        assert connected(catalog("F7"))

    def test_singleton(self):
        assert connected(uniform_matroid(1, 1))

    def test_loop_disconnects(self):
        M = Matroid(2, [(0,)])  # element 1 is a loop
        assert not connected(M)


class TestTransversal:
    def test_two_sets_u24(self):
        pres = Presentation.from_sets(4, [(0, 1, 2), (1, 2, 3)])
        assert transversal_matroid(pres) == uniform_matroid(2, 4)

    def test_full_sets_uniform(self):
        pres = Presentation.from_sets(5, [(0, 1, 2, 3, 4)] * 2)
        assert transversal_matroid(pres) == uniform_matroid(2, 5)

    def test_whirl_presentation(self):
        pres = Presentation.from_sets(6, [(3, 4, 5), (0, 1, 5), (1, 2, 3)])
        assert transversal_matroid(pres) == catalog("W3")

    def test_restriction_coherence(self):
        # restricting the presentation matches deleting from the matroid
        pres = Presentation.from_sets(6, [(3, 4, 5), (0, 1, 5), (1, 2, 3)])
        M = transversal_matroid(pres)
        drop = {4, 5}
        keep = [e for e in range(6) if e not in drop]
        remap = {e: i for i, e in enumerate(keep)}
        sub = Presentation.from_sets(
            len(keep), [[remap[e] for e in s if e in remap] for s in pres.set_members()]
        )
        assert transversal_matroid(sub) == M.delete(sorted(drop))


class TestGraphic:
    def test_triangle(self):
        G = Graph.from_edges(3, [(0, 1), (0, 2), (1, 2)])
        assert graphic_matroid(G) == uniform_matroid(2, 3)

    def test_k4_count(self):
        assert len(graphic_matroid(complete_graph(4)).bases) == 16

    def test_parallel_edges(self):
        G = Graph.from_edges(2, [(0, 1), (0, 1)])
        assert graphic_matroid(G) == uniform_matroid(1, 2)

    def test_k4_is_catalog_mk4(self):
        # same matroid up to relabeling: compare invariants
        M = graphic_matroid(complete_graph(4))
        K = catalog("MK4")
        assert (M.n, M.rank, len(M.bases)) == (K.n, K.rank, len(K.bases))

    def test_k4_cographic_duality(self):
        # the dual's basis polynomial is the complemented spanning-tree sum
        M = graphic_matroid(complete_graph(4))
        assert M.dual().basis_polynomial() == M.basis_polynomial().dual()
        assert {b.bit_count() for b in M.dual().bases} == {3}
