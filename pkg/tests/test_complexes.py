import random

import pytest

from hopfcyclic.errors import DegreeOutOfRange, NotAYD, NotStable
from hopfcyclic.fields import GF, QQ
from hopfcyclic.hopf import BialgebraDesc, group_algebra, sweedler_h4, trivial_hopf
from hopfcyclic.equivariant import (
    ComoduleAlgebra,
    ModComod,
    counit_action,
    make_coefficient,
    regular_bicomodule,
    regular_module_coalgebra,
    unit_coaction,
)
from hopfcyclic.complexes import (
    assemble,
    bar,
    bar_complex,
    coinvariants,
    cotensor,
    cotor,
    cyclic_total_complex,
    doi_check,
    shear_map,
    homology,
    induced_complex,
    relative_bar,
    twisted_ch,
    untwist,
)
from hopfcyclic.linalg import (
    GradedComplex,
    Matrix,
    complex_homology,
    invert,
    random_invertible,
)

from groups import cyclic_table
from oracles import dense_rank_of_matrix


class TestBar:
    def test_resolution_dims(self, z2_q):
        res = bar(z2_q, "resolution", 3)
        assert res.dims == [4, 8, 16, 32]

    def test_coface_identities_validated(self, z4_q):
        bar(z4_q, "resolution", 3)  # constructor validates, no raise

    def test_bar_complex_acyclic_for_counital(self, z2_q):
        cx = bar_complex(z2_q, 5)
        assert complex_homology(cx, 4) == [0] * 5

    def test_diagonal_action_commutes_with_left_coaction(self, z2_q):
        # the left coaction on degree 1 of the bar resolution is the first
        # coface into degree 2; equivariance is the commutation with the
        # diagonal action
        mc = regular_module_coalgebra(z2_q)
        res = bar(mc, "resolution", 2)
        rho_l = res.cofaces[1][0]
        for b in range(2):
            assert res.actions[2][b].mul(rho_l) == rho_l.mul(res.actions[1][b])


class TestTwistedCH:
    def test_dims(self, z2_q, k_eps_z2):
        mc = regular_module_coalgebra(z2_q)
        T = twisted_ch(mc, regular_bicomodule(mc), k_eps_z2, 3)
        assert T.dims == [2, 4, 8, 16]

    def test_commutators_vanish_below_last(self, z2_q):
        mc = regular_module_coalgebra(z2_q)
        X = make_coefficient("r_ad", z2_q)
        twisted_ch(mc, regular_bicomodule(mc), X, 3)  # validates [L_b, d_j] = 0

    def test_last_coface_commutator_nonzero_for_sweedler(self, h4_q):
        mc = regular_module_coalgebra(h4_q)
        X = make_coefficient("r_ad", h4_q)
        T = twisted_ch(mc, regular_bicomodule(mc), X, 2)
        n = 1
        found = False
        for b in range(4):
            last = T.cofaces[n][n + 1]
            comm = T.actions[n + 1][b].mul(last).sub(last.mul(T.actions[n][b]))
            if not comm.is_zero():
                found = True
                break
        assert found, "expected a nonzero commutator with the last coface"


class TestCoinvariants:
    def test_regular_action_collapses_to_scalars(self, z4_q):
        dim, proj = coinvariants(QQ, z4_q, z4_q.mult, 4)
        assert dim == 1
        assert proj.rows == 1

    def test_diagonal_square_has_dim_of_b(self, z2_q):
        from hopfcyclic.complexes import diagonal_action

        diag = diagonal_action(z2_q, [(2, z2_q.mult), (2, z2_q.mult)])
        dim, _ = coinvariants(QQ, z2_q, diag, 4)
        assert dim == 2  # trivialization: free of rank dim B over one factor

    def test_trivial_action_leaves_everything(self, z2_q):
        triv = counit_action(z2_q, 3)
        dim, proj = coinvariants(QQ, z2_q, triv, 3)
        assert dim == 3
        assert invert(proj) is not None


class TestInducedComplex:
    def test_z2_r_ad_descends(self, z2_q):
        mc = regular_module_coalgebra(z2_q)
        X = make_coefficient("r_ad", z2_q)
        T = twisted_ch(mc, regular_bicomodule(mc), X, 5)
        ic = induced_complex(T, X)  # well-definedness + d^2 = 0 validated
        assert len(ic.dims) == 6

    def test_trivial_b_reduces_to_plain_ch(self, k_q):
        mc = regular_module_coalgebra(k_q)
        X = make_coefficient("eps", k_q)
        T = twisted_ch(mc, regular_bicomodule(mc), X, 4)
        ic = induced_complex(T, X)
        assert ic.dims == [1, 1, 1, 1, 1]

    def test_not_ayd_refused(self, h4_q):
        # stable but not anti-Yetter-Drinfeld: the trivial coefficient over
        # a Hopf algebra with non-involutive antipode
        mc = regular_module_coalgebra(h4_q)
        X = make_coefficient("eps", h4_q)
        assert X.stable and not X.ayd
        T = twisted_ch(mc, regular_bicomodule(mc), X, 2)
        with pytest.raises(NotAYD):
            induced_complex(T, X)


class TestCotensor:
    def test_counit_identification(self, z2_q):
        # X box_C C = X for counital C
        X_dim, rho_X = 1, Matrix.from_entries(QQ, 2, 1, [(0, 0, QQ.one)])
        dim, _ = cotensor(X_dim, rho_X, z2_q, 2, z2_q.comult)
        assert dim == 1

    def test_c_box_c(self, z2_q):
        dim, incl = cotensor(2, z2_q.comult, z2_q, 2, z2_q.comult)
        assert dim == 2
        assert incl.cols == 2

    def test_group_graded_dimension_count(self, z2_q):
        # X = k_e + k_g, Y = k_e + k_g: matched degrees contribute 1 each
        rho_right = Matrix.from_entries(QQ, 4, 2, [(0, 0, QQ.one), (3, 1, QQ.one)])
        rho_left = Matrix.from_entries(QQ, 4, 2, [(0, 0, QQ.one), (3, 1, QQ.one)])
        dim, _ = cotensor(2, rho_right, z2_q, 2, rho_left)
        assert dim == 2  # e-e and g-g pairs match


class TestCotor:
    def test_degree_zero_is_cotensor(self, z2_q):
        k_e_r = Matrix.from_entries(QQ, 2, 1, [(0, 0, QQ.one)])
        k_e_l = Matrix.from_entries(QQ, 2, 1, [(0, 0, QQ.one)])
        dims = cotor(z2_q, (1, k_e_r), (1, k_e_l), 3)
        d0, _ = cotensor(1, k_e_r, z2_q, 1, k_e_l)
        assert dims[0] == d0 == 1

    def test_cosemisimple_higher_vanishing(self, z2_q):
        k_e_r = Matrix.from_entries(QQ, 2, 1, [(0, 0, QQ.one)])
        k_e_l = Matrix.from_entries(QQ, 2, 1, [(0, 0, QQ.one)])
        assert cotor(z2_q, (1, k_e_r), (1, k_e_l), 3) == [1, 0, 0, 0]

    def test_trivial_coalgebra(self, k_q):
        one = Matrix.identity(QQ, 1)
        dims = cotor(k_q, (1, one), (1, one), 2)
        assert dims == [1, 0, 0]

    def test_equivariant_action_returned(self, z2_q):
        dims, actions = cotor(
            z2_q, (2, z2_q.comult), (2, z2_q.comult), 1,
            equivariant=(z2_q, z2_q.mult, z2_q.mult, z2_q.mult))
        assert len(actions) == 3
        assert all(len(per_b) == 2 for per_b in actions)


class TestDoi:
    def test_group_algebras(self, z2_q, z4_q):
        for B in (z2_q, z4_q):
            assert doi_check(B, (B.dim, B.comult, B.comult), 3)

    def test_trivial_coalgebra(self, k_q):
        assert doi_check(k_q, (1, k_q.comult, k_q.comult), 3)

    def test_sweedler_low_degrees(self, h4_q):
        assert doi_check(h4_q, (4, h4_q.comult, h4_q.comult), 2)


class TestShearUntwist:
    def test_shear_one_is_identity(self, z2_q):
        g, gi = shear_map(1, z2_q)
        assert g == Matrix.identity(QQ, 2)
        assert gi == Matrix.identity(QQ, 2)

    def test_shear_two_on_group_likes(self, z4_q):
        g, _ = shear_map(2, z4_q)
        # Gamma(g (x) h) = g (x) gh
        for a in range(4):
            for b in range(4):
                col = g.col(a * 4 + b)
                assert col == {a * 4 + ((a + b) % 4): QQ.one}

    def test_shear_sweedler_inverse_and_intertwining(self, h4_q):
        for n in (2, 3):
            shear_map(n, h4_q)  # verified internally, raises on failure

    def test_untwist_trivial_b(self, k_q):
        phi, psi = untwist(k_q, (3, counit_action(k_q, 3)), (2, counit_action(k_q, 2)))
        assert phi == Matrix.identity(QQ, 6)
        assert psi == Matrix.identity(QQ, 6)

    def test_untwist_group_algebra(self, z2_q):
        phi, psi = untwist(z2_q, (2, z2_q.mult), (2, z2_q.mult))
        assert phi.rows == phi.cols == 2
        assert phi.mul(psi) == Matrix.identity(QQ, 2)

    def test_untwist_sweedler(self, h4_q):
        phi, psi = untwist(h4_q, (4, h4_q.mult), (4, h4_q.mult))
        assert phi.mul(psi) == Matrix.identity(QQ, phi.rows)


class TestAssemble:
    def test_z2_dims_are_powers_of_two(self, z2_q, k_eps_z2):
        cm = assemble("coalgebra", regular_module_coalgebra(z2_q), k_eps_z2, 5)
        assert cm.dims == [1, 2, 4, 8, 16, 32]

    def test_not_stable_refused(self, z2_q):
        X = ModComod(z2_q, 2, z2_q.mult, z2_q.comult)
        assert not X.stable
        with pytest.raises(NotStable):
            assemble("coalgebra", regular_module_coalgebra(z2_q), X, 2)

    def test_trivial_b_classical_cocyclic(self, k_q):
        X = make_coefficient("eps", k_q)
        cm = assemble("coalgebra", regular_module_coalgebra(k_q), X, 4)
        assert cm.dims == [1, 1, 1, 1, 1]

    def test_algebra_side_group_algebra(self, z2_q):
        A = ComoduleAlgebra(z2_q, z2_q, z2_q.comult)
        X = make_coefficient("eps", z2_q)
        cm = assemble("algebra", A, X, 4)
        assert cm.dims == [1, 2, 4, 8, 16]


class TestHomology:
    def test_trivial_triple_point_values(self, k_q):
        X = make_coefficient("eps", k_q)
        cm = assemble("coalgebra", regular_module_coalgebra(k_q), X, 5)
        assert homology(cm, "cyclic", 4) == [1, 0, 1, 0, 1]
        assert homology(cm, "hochschild", 4) == [1, 0, 0, 0, 0]
        assert homology(cm, "bar", 4) == [0, 0, 0, 0, 0]

    def test_degree_out_of_range(self, k_q):
        X = make_coefficient("eps", k_q)
        cm = assemble("coalgebra", regular_module_coalgebra(k_q), X, 3)
        with pytest.raises(DegreeOutOfRange):
            homology(cm, "cyclic", 3)

    def test_bar_vanishes_for_counital_over_trivial_b(self, k_q, z2_q):
        # B = k, C = Q[Z/2] through the counit action of the trivial Hopf algebra
        from hopfcyclic.equivariant import eps_module_coalgebra

        mc = eps_module_coalgebra(z2_q, k_q)
        X = make_coefficient("eps", k_q)
        cm = assemble("coalgebra", mc, X, 5)
        assert homology(cm, "bar", 4) == [0, 0, 0, 0, 0]

    def test_group_algebra_cyclic_char_2(self):
        B = group_algebra(cyclic_table(2), GF(2))
        A = ComoduleAlgebra(B, B, B.comult)
        X = make_coefficient("eps", B)
        cm = assemble("algebra", A, X, 5)
        assert homology(cm, "cyclic", 4) == [1, 1, 2, 2, 3]
        assert homology(cm, "hochschild", 4) == [1, 1, 1, 1, 1]


class TestRelativeBar:
    def test_direct_sum_acyclic(self, direct_sum_ses_q):
        cx, actions = relative_bar(direct_sum_ses_q, 3)
        assert complex_homology(cx, 3) == [0, 0, 0, 0]

    def test_dims(self, direct_sum_ses_q):
        cx, _ = relative_bar(direct_sum_ses_q, 2)
        # K (x) C^n (x) C/K with dim K = dim C/K = 2, dim C = 4
        assert cx.dims == [4, 16, 64, 256]


class TestBasisIndependence:
    def test_homology_invariant_under_conjugation(self, z2_q, k_eps_z2):
        cm = assemble("coalgebra", regular_module_coalgebra(z2_q), k_eps_z2, 4)
        tot = cyclic_total_complex(cm, 4)
        base = [tot.homology(n) for n in range(4)]
        rng = random.Random(99)
        for _ in range(3):
            gs = [random_invertible(QQ, d, rng) for d in tot.dims]
            diffs = {}
            for n, d in tot.diffs.items():
                diffs[n] = gs[n + 1].mul(d).mul(invert(gs[n]))
            conj = GradedComplex(QQ, +1, tot.dims, diffs)
            assert [conj.homology(n) for n in range(4)] == base
