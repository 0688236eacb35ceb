from fractions import Fraction

import pytest

from berger_lab.exactlin import (RealMatrix, nullspace, subspace_contains,
                                 subspace_equal)
from berger_lab.liealg import (LieAlgebra, algebra_by_name, build_glq, build_h0,
                               build_sp, build_sp1, build_sp_parabolic,
                               direct_sum, preserves_subspace, sp_dimension,
                               sp_parabolic_dimension, stabilizer_of_subspace)
from berger_lab.quatspace import build_space


def eta_skew_commutant_oracle(space):
    """Independent characterization of the realified sp(r, s): all real
    matrices that are eta-skew and commute with I1 and I2, computed as one
    big nullspace over the n^2 matrix entries."""
    n = space.real_dim
    eta, (i1, i2, _) = space.eta, space.I
    rows = []
    # eta*M + M^t*eta = 0
    for a in range(n):
        for b in range(n):
            row = [Fraction(0)] * (n * n)
            for i in range(n):
                row[i * n + b] += eta[a, i]
                row[i * n + a] += eta[b, i]  # (M^t eta)_{ab} = sum_i M_{ia} eta_{ib}
            rows.append(row)
    # M*I - I*M = 0 for I in (I1, I2)
    for imat in (i1, i2):
        for a in range(n):
            for b in range(n):
                row = [Fraction(0)] * (n * n)
                for i in range(n):
                    row[a * n + i] += imat[i, b]
                    row[i * n + b] -= imat[a, i]
                rows.append(row)
    return nullspace(RealMatrix.from_rows(rows))


@pytest.mark.parametrize("r,s,t,expected_dim", [(1, 1, 1, 10), (1, 2, 1, 21)])
def test_sp_matches_skew_commutant_oracle(r, s, t, expected_dim):
    space = build_space(r, s, t)
    sp = build_sp(space)
    assert sp.dim == expected_dim == sp_dimension(r, s)
    oracle = eta_skew_commutant_oracle(space)
    assert oracle.dim == expected_dim
    assert subspace_equal(oracle, sp.span_subspace())


def test_sp_basis_is_eta_skew():
    space = build_space(1, 1, 1)
    assert build_sp(space).check_metric_compatibility()


def test_sp1_dimension_and_brackets():
    space = build_space(1, 1, 1)
    sp1 = build_sp1(space)
    assert sp1.dim == 3
    i1, i2, i3 = sp1.basis
    assert i1.commutator(i2) == i3.scaled(2)
    assert i2.commutator(i3) == i1.scaled(2)
    assert i3.commutator(i1) == i2.scaled(2)


@pytest.mark.parametrize("r,s,t", [(1, 1, 1), (1, 2, 1)])
def test_sp1_centralizes_sp(r, s, t):
    space = build_space(r, s, t)
    sp1 = build_sp1(space)
    sp = build_sp(space)
    for a in sp1.basis:
        for b in sp.basis:
            assert a.commutator(b).is_zero()


@pytest.mark.parametrize("r,s,t,expected", [(1, 1, 1, 7), (1, 2, 1, 14),
                                            (2, 2, 2, 26)])
def test_parabolic_dimension(r, s, t, expected):
    space = build_space(r, s, t)
    spw = build_sp_parabolic(space)
    assert spw.dim == expected == sp_parabolic_dimension(r, s, t)
    assert preserves_subspace(spw, space.isotropic_subspace_W())


@pytest.mark.parametrize("r,s,t", [(1, 1, 1), (1, 2, 1)])
def test_parabolic_is_exact_stabilizer(r, s, t):
    space = build_space(r, s, t)
    sp = build_sp(space)
    spw = build_sp_parabolic(space)
    stab = stabilizer_of_subspace(sp, space.isotropic_subspace_W())
    assert subspace_equal(stab, spw.span_subspace())


def test_full_sp_does_not_preserve_w():
    space = build_space(1, 1, 1)
    assert not preserves_subspace(build_sp(space), space.isotropic_subspace_W())


def test_parabolic_requires_witt_part():
    with pytest.raises(ValueError):
        build_sp_parabolic(build_space(1, 1, 0))


@pytest.mark.parametrize("r,expected", [(1, 4), (2, 16)])
def test_glq_dimension(r, expected):
    space = build_space(r, r, r)
    glq = build_glq(space)
    assert glq.dim == expected
    spw = build_sp_parabolic(space)
    assert subspace_contains(spw.span_subspace(), glq.span_subspace())
    assert preserves_subspace(glq, space.isotropic_subspace_W())
    assert preserves_subspace(glq, space.dual_W1())


def test_glq_requires_split_signature():
    with pytest.raises(ValueError):
        build_glq(build_space(1, 2, 1))


@pytest.mark.parametrize("r,expected", [(1, 7), (2, 19)])
def test_h0_dimension_and_closure(r, expected):
    h0 = build_h0(build_space(r, r, r))
    assert h0.dim == expected
    assert h0.check_closure()


def test_h0_preserves_both_isotropic_blocks():
    space = build_space(1, 1, 1)
    h0 = build_h0(space)
    assert preserves_subspace(h0, space.isotropic_subspace_W())
    assert preserves_subspace(h0, space.dual_W1())


@pytest.mark.parametrize("name,r,s,t,expected", [
    ("sp1+sp", 1, 1, 1, 13),
    ("sp1+sp_w", 1, 1, 1, 10),
    ("sp1+sp_w", 1, 2, 1, 17),
])
def test_direct_sum_dimensions(name, r, s, t, expected):
    assert algebra_by_name(name, build_space(r, s, t)).dim == expected


def test_direct_sum_rejects_overlap():
    space = build_space(1, 1, 1)
    with pytest.raises(ValueError, match="not a direct sum"):
        direct_sum(build_sp1(space), build_sp1(space))


def test_direct_sum_rejects_non_commuting():
    space = build_space(1, 1, 1)
    sp = build_sp(space)
    # B-block vs D-block elements do not commute (they bracket into C)
    upper = LieAlgebra("upper", space, [sp.basis[4]])
    lower = LieAlgebra("lower", space, [sp.basis[-1]])
    assert not sp.basis[4].commutator(sp.basis[-1]).is_zero()
    with pytest.raises(ValueError, match="not a direct sum"):
        direct_sum(upper, lower)


@pytest.mark.parametrize("name", ["sp", "sp_w", "sp1", "glq", "h0",
                                  "sp1+sp", "sp1+sp_w"])
def test_registry_algebras_close_and_respect_metric(name):
    space = build_space(1, 1, 1)
    alg = algebra_by_name(name, space)
    assert alg.check_closure()
    assert alg.check_metric_compatibility()


def test_registry_unknown_name():
    with pytest.raises(KeyError, match="unknown algebra"):
        algebra_by_name("nosuch", build_space(1, 1, 1))


def test_coordinates_round_trip():
    space = build_space(1, 1, 1)
    sp = build_sp(space)
    combo = sp.basis[0].scaled(Fraction(1, 2)) + sp.basis[3].scaled(-2)
    coords = sp.coordinates_of(combo)
    assert coords is not None
    assert coords[0] == Fraction(1, 2) and coords[3] == -2
    assert sum((b.scaled(c) for b, c in zip(sp.basis, coords)),
               RealMatrix.zeros(8, 8)) == combo
    assert sp.coordinates_of(RealMatrix.identity(8)) is None


def test_algebra_json_shape():
    space = build_space(1, 1, 1)
    data = build_sp1(space).to_json()
    assert data["name"] == "sp(1)" and data["dim"] == 3
    assert RealMatrix.from_json(data["basis"][0]) == space.I[0]
