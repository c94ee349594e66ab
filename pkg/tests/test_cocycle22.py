"""Cocycle target W, the psi map, its verification, and st_sharp assembly."""

import pytest

from superstein.cocycle22 import P1, P2, CocycleTarget, Psi, build_W, build_st_sharp, verify_cocycle
from superstein.errors import PreconditionError
from superstein.liesuper import check_structure, perfectness_and_center
from superstein.matrices import MatrixShape, concretize
from superstein.steinberg import build_model
from superstein.superalgebra import builtin, corpus


@pytest.fixture(scope="module")
def g1_model():
    return build_model(builtin("grassmann1"), MatrixShape(2, 2), verify=False)


@pytest.fixture(scope="module")
def field_model():
    return build_model(builtin("field"), MatrixShape(2, 2), verify=False)


class TestTarget:
    @pytest.mark.parametrize(
        "alg,wdim", [("field", 2), ("grassmann1", 4), ("mat2", 0), ("trunc3", 6)]
    )
    def test_w_dimension(self, alg, wdim):
        assert build_W(builtin(alg)).dim == wdim

    def test_blocks_partition_the_eight_tuples(self):
        W = build_W(builtin("field"))
        assert {t for t, b in W.block_of.items() if b == 0} == set(P1)
        assert {t for t, b in W.block_of.items() if b == 1} == set(P2)

    def test_identified_tuples_share_a_block(self):
        W = build_W(builtin("grassmann1"))
        a = builtin("grassmann1")
        th = a.basis_vector(1)
        vals = [W.eps(t, th) for t in P1]
        assert all(v == vals[0] for v in vals)
        assert vals[0]  # lands in block 0 with coefficient 1

    def test_abelianization_of_matrices_collapses(self):
        W = build_W(builtin("mat2"))
        assert W.a0 is None
        assert W.eps(P1[0], builtin("mat2").unit_vector()) == {}

    def test_grassmann_abelianization_is_identity(self):
        # supercommutative algebras have no supercommutators to kill
        W = build_W(builtin("grassmann1"))
        assert W.a0_dim == 2
        assert W.parity == (0, 1, 0, 1)


class TestPsi:
    def test_p1_value_and_sign(self, field_model):
        # psi(F_31(1), F_42(1)) = (-1)^{1+4} eps_3142(1): block 0, coefficient -1
        m = field_model
        psi = Psi(m, build_W(m.algebra))
        got = psi.on_atoms(m.f_index(3, 1, 0), m.f_index(4, 2, 0))
        assert got == {0: -1}

    def test_p2_value_and_sign(self, field_model):
        # psi(F_13(1), F_24(1)) = (-1)^{3+2} eps_1324(1): block 1, coefficient -1
        m = field_model
        psi = Psi(m, build_W(m.algebra))
        got = psi.on_atoms(m.f_index(1, 3, 0), m.f_index(2, 4, 0))
        assert got == {1: -1}

    def test_off_support_pairs_vanish(self, field_model):
        m = field_model
        psi = Psi(m, build_W(m.algebra))
        assert psi.on_atoms(m.f_index(1, 2, 0), m.f_index(3, 4, 0)) == {}
        assert psi.on_atoms(m.f_index(3, 1, 0), m.d_index(3, 0)) == {}
        assert psi.on_atoms(m.d_index(2, 0), m.f_index(3, 1, 0)) == {}

    def test_argument_parity_enters_the_sign(self, g1_model):
        # psi(F_31(one), F_42(th)) picks up (-1)^{1+4+1} = +1
        m = g1_model
        psi = Psi(m, build_W(m.algebra))
        got = psi.on_atoms(m.f_index(3, 1, 0), m.f_index(4, 2, 1))
        assert got == {1: 1}  # class of th in block 0, coords (one, th)

    def test_wrong_shape_rejected(self):
        m = build_model(builtin("field"), MatrixShape(2, 1), verify=False)
        with pytest.raises(PreconditionError):
            Psi(m, build_W(builtin("field")))


class TestVerification:
    @pytest.mark.parametrize("alg", [a.name for a in corpus()])
    def test_cocycle_holds_on_corpus(self, alg):
        v = verify_cocycle(builtin(alg))
        assert v.ok, v.witnesses

    def test_dropping_argument_parity_breaks_jacobi(self, g1_model):
        m = g1_model
        mut = Psi(m, build_W(m.algebra), drop_argument_parity=True)
        v = verify_cocycle(m.algebra, model=m, psi=mut, max_witnesses=50)
        assert not v.jacobi_ok
        assert any(w[0] == "jacobi" for w in v.witnesses)
        assert not v.skew_ok

    def test_mutation_harmless_for_even_algebras(self, field_model):
        # |b| = 0 throughout, so the mutated sign is the true sign
        m = field_model
        mut = Psi(m, build_W(m.algebra), drop_argument_parity=True)
        assert verify_cocycle(m.algebra, model=m, psi=mut).ok


class TestStSharp:
    @pytest.mark.parametrize("alg,dim", [("field", 17), ("grassmann1", 35), ("mat2", 63)])
    def test_dimensions(self, alg, dim):
        s = build_st_sharp(builtin(alg), verify=False)
        assert s.dim == dim
        assert s.dim == s.model.dim + s.target.dim

    def test_structure_verifies(self):
        s = build_st_sharp(builtin("grassmann1"))
        assert check_structure(s.fin_lie).ok

    def test_w_block_is_central(self):
        s = build_st_sharp(builtin("grassmann1"))
        L = s.fin_lie
        for w in range(s.w_offset, L.dim):
            for y in range(L.dim):
                assert L.table[w][y] == ()
                assert L.table[y][w] == ()
        rep = perfectness_and_center(L)
        assert rep.center.dim >= s.target.dim

    def test_projection_is_a_homomorphism(self):
        # dropping W coordinates from [(x,0),(y,0)] returns the st bracket
        s = build_st_sharp(builtin("grassmann1"), verify=False)
        n0 = s.w_offset
        for x in range(n0):
            for y in range(n0):
                cell = {k: v for k, v in s.fin_lie.table[x][y] if k < n0}
                assert cell == dict(s.model.table[x][y])

    def test_w_parities_follow_the_quotient(self):
        s = build_st_sharp(builtin("grassmann1"), verify=False)
        assert s.fin_lie.parity[s.w_offset:] == (0, 1, 0, 1)

    def test_wrong_shape_rejected(self):
        with pytest.raises(PreconditionError):
            build_st_sharp(builtin("field"), MatrixShape(2, 1))

    def test_concretize_st_sharp(self):
        L = concretize("st_sharp", builtin("field"), MatrixShape(2, 2))
        assert L.dim == 17
        assert check_structure(L).ok
