"""Steinberg model: layout, H normalization, brackets, projection, kernel."""

import pytest

from superstein.errors import ConstructionError, InputError, PreconditionError
from superstein.liesuper import check_structure, perfectness_and_center
from superstein.matrices import GlModel, MatrixShape, concretize
from superstein.steinberg import (
    StModel,
    build_model,
    certify_model,
    check_relations,
    diagram_check,
    kernel_phi,
)
from superstein.superalgebra import builtin


def shape(s):
    return MatrixShape.parse(s)


@pytest.fixture(scope="module")
def field22():
    return build_model(builtin("field"), shape("2|2"))


@pytest.fixture(scope="module")
def g1_21():
    return build_model(builtin("grassmann1"), shape("2|1"))


class TestLayout:
    @pytest.mark.parametrize(
        "alg,shp,total,parts",
        [
            ("field", "2|2", 15, (12, 0, 3)),
            ("field", "3|2", 24, (20, 0, 4)),
            ("grassmann1", "2|1", 17, (12, 1, 4)),
        ],
    )
    def test_segment_dimensions(self, alg, shp, total, parts):
        m = build_model(builtin(alg), shape(shp), verify=False)
        assert (m.f_count, m.h_count, m.d_count) == parts
        assert m.dim == total

    @pytest.mark.parametrize(
        "alg,dims",
        [
            ("field", (8, 15, 15, 24)),
            ("dual", (16, 30, 30, 48)),
            ("grassmann1", (17, 31, 31, 49)),
        ],
    )
    def test_dimension_grid(self, alg, dims):
        a = builtin(alg)
        got = tuple(
            build_model(a, s, verify=False).dim
            for s in map(shape, ("2|1", "3|1", "2|2", "3|2"))
        )
        assert got == dims

    def test_parities(self, g1_21):
        m = g1_21
        # F_13(one): |1|+|3| = 1; F_13(th): 0; D_2(th): 1
        assert m.parity[m.f_index(1, 3, 0)] == 1
        assert m.parity[m.f_index(1, 3, 1)] == 0
        assert m.parity[m.d_index(2, 1)] == 1
        # the single pairing class <<th,th>> is even
        assert m.parity[m.h_index(0)] == 0

    def test_too_small_shape_rejected(self):
        with pytest.raises(PreconditionError):
            build_model(builtin("field"), shape("1|1"))

    def test_bad_expansion_index_rejected(self):
        with pytest.raises(InputError):
            build_model(builtin("field"), shape("2|1"), expansion_index=4)

    def test_dimension_cap(self):
        with pytest.raises(ConstructionError):
            build_model(builtin("field"), shape("3|2"), max_dim=10)

    def test_zero_even_block_swaps(self):
        m = build_model(builtin("grassmann1"), shape("0|3"))
        assert m.swapped
        assert m.shape == shape("3|0")
        ref = build_model(builtin("grassmann1"), shape("3|0"))
        assert m.table == ref.table


class TestNormalization:
    def test_H21_of_units_is_minus_D2(self, field22):
        m = field22
        a = m.algebra
        got = m.normalize_H(2, 1, a.unit_vector(), a.unit_vector())
        assert got == {m.d_index(2, 0): -1}

    def test_H23_of_units_splits_across_D2_D3(self, field22):
        m = field22
        a = m.algebra
        got = m.normalize_H(2, 3, a.unit_vector(), a.unit_vector())
        assert got == {m.d_index(2, 0): -1, m.d_index(3, 0): 1}

    def test_H23_image_matches_matrix_bracket(self, field22):
        # phi(H_23(1,1)) must equal [E_23(1), E_32(1)] computed downstairs
        m = field22
        a = m.algebra
        gl = GlModel(a, m.shape)
        h = m.normalize_H(2, 3, a.unit_vector(), a.unit_vector())
        lhs = m.phi_apply(h, gl)
        rhs = gl.bracket_sparse({gl.index(2, 3, 0): 1}, {gl.index(3, 2, 0): 1})
        assert lhs == rhs == {gl.index(2, 2, 0): 1, gl.index(3, 3, 0): 1}

    def test_H12_normalizes_to_pairing_class_plus_D(self, g1_21):
        # H_12(th, th) = h<<th,th>> - D_2(th*th) and th*th = 0
        m = g1_21
        th = m.algebra.basis_vector(1)
        got = m.normalize_H(1, 2, th, th)
        assert got == {m.h_index(0): 1}

    def test_table_cell_matches_normalization(self, g1_21):
        # [F_12(th), F_21(th)] stored in the table is H_12(th,th)
        m = g1_21
        th = m.algebra.basis_vector(1)
        cell = dict(m.table[m.f_index(1, 2, 1)][m.f_index(2, 1, 1)])
        assert cell == m.normalize_H(1, 2, th, th)

    def test_D_atoms_are_normalization_fixed_points(self, g1_21):
        m = g1_21
        a = m.algebra
        for j in range(2, m.N + 1):
            for t in range(m.dA):
                got = m.normalize_H(1, j, a.unit_vector(), a.basis_vector(t))
                assert got == {m.d_index(j, t): 1}

    def test_inhomogeneous_slot_rejected(self, g1_21):
        mixed = tuple(1 for _ in range(g1_21.dA))
        with pytest.raises(PreconditionError):
            g1_21.normalize_H(1, 2, mixed, g1_21.algebra.unit_vector())


class TestStructure:
    @pytest.mark.parametrize("alg,shp", [("field", "2|2"), ("grassmann1", "2|1"), ("dual", "3|1")])
    def test_build_verifies(self, alg, shp):
        m = build_model(builtin(alg), shape(shp))
        rep = check_structure(m.to_fin_lie(verify=False))
        assert rep.ok
        assert check_relations(m).ok

    @pytest.mark.parametrize(
        "alg,shp",
        [
            ("field", "2|2"),
            ("grassmann1", "2|1"),
            ("grassmann1", "2|2"),
            ("mat2", "2|1"),
            ("mat1_1", "2|1"),
        ],
    )
    def test_full_certificate(self, alg, shp):
        m = build_model(builtin(alg), shape(shp), verify=False)
        cert = certify_model(m)
        assert cert.ok, cert

    def test_perfect(self, field22, g1_21):
        for m in (field22, g1_21):
            rep = perfectness_and_center(m.to_fin_lie(verify=False))
            assert rep.perfect

    def test_expansion_index_changes_nothing(self):
        a = builtin("mat2")
        base = build_model(a, shape("2|1"), verify=False)
        for j in range(2, 4):
            alt = build_model(a, shape("2|1"), expansion_index=j, verify=False)
            assert alt.table == base.table


class TestKernel:
    @pytest.mark.parametrize(
        "alg,shp,ker",
        [
            ("field", "2|2", 0),
            ("dual", "2|1", 0),
            ("mat2", "2|1", 0),
            ("grassmann1", "2|1", 1),
            ("grassmann1", "2|2", 1),
            ("grassmann1", "3|2", 1),
        ],
    )
    def test_kernel_matches_degree_one_cyclic_homology(self, alg, shp, ker):
        m = build_model(builtin(alg), shape(shp), verify=False)
        rep = kernel_phi(m)
        assert rep.kernel.dim == ker
        assert rep.hc1_dim == ker
        assert rep.dims_equal and rep.spans_equal

    def test_kernel_is_central(self):
        m = build_model(builtin("grassmann1"), shape("2|2"), verify=False)
        rep = kernel_phi(m)
        assert rep.central
        # the kernel vector lives purely in the h segment
        (vec,) = rep.kernel.vectors
        support = {c for c, v in enumerate(vec) if v}
        assert support == {m.h_index(0)}

    def test_diagram_commutes(self, field22, g1_21):
        for m in (field22, g1_21):
            assert diagram_check(m).ok

    def test_diagram_commutes_noncommutative(self):
        m = build_model(builtin("mat2"), shape("2|1"), verify=False)
        assert diagram_check(m).ok


class TestConcretize:
    def test_concretize_st(self):
        L = concretize("st", builtin("grassmann1"), shape("2|1"))
        assert L.dim == 17
        assert check_structure(L).ok

    def test_concretize_st_matches_model_names(self, g1_21):
        L = concretize("st", builtin("grassmann1"), shape("2|1"), verify=False)
        assert L.basis_names == g1_21.names
