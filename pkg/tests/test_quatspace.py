import pytest
from hypothesis import given, settings, strategies as st

from berger_lab.exactlin import RealMatrix, symmetric_signature
from berger_lab.quatspace import (QuatMatrix, Quaternion, build_space,
                                  left_mult_matrix, realify, right_mult_matrix)

coeffs = st.integers(-5, 5)
quaternions = st.builds(Quaternion, coeffs, coeffs, coeffs, coeffs)


def quat_matrices(n):
    return st.lists(quaternions, min_size=n * n, max_size=n * n).map(
        lambda ent: QuatMatrix(n, n, ent))


# ---------------------------------------------------------------------------
# quaternion algebra
# ---------------------------------------------------------------------------

def test_multiplication_table():
    one, i, j, k = (Quaternion.one(), Quaternion.i(), Quaternion.j(),
                    Quaternion.k())
    minus_one = -one
    assert i * i == minus_one and j * j == minus_one and k * k == minus_one
    assert i * j == k and j * k == i and k * i == j
    assert j * i == -k and k * j == -i and i * k == -j


@given(quaternions, quaternions)
@settings(max_examples=50, deadline=None)
def test_conjugation_reverses_products(a, b):
    assert (a * b).conjugate() == b.conjugate() * a.conjugate()


@given(quaternions)
@settings(max_examples=50, deadline=None)
def test_norm_is_real(q):
    n = q * q.conjugate()
    assert n.x == 0 and n.y == 0 and n.z == 0
    assert n.w == q.w**2 + q.x**2 + q.y**2 + q.z**2


@given(quat_matrices(2), quat_matrices(2))
@settings(max_examples=25, deadline=None)
def test_conjugate_transpose_antihomomorphism(a, b):
    assert (a * b).conjugate_transpose() == b.conjugate_transpose() * a.conjugate_transpose()


# ---------------------------------------------------------------------------
# realification
# ---------------------------------------------------------------------------

def test_realify_one_is_identity():
    m = QuatMatrix(1, 1, [Quaternion.one()])
    assert realify(m) == RealMatrix.identity(4)


def test_realify_i_squares_to_minus_identity():
    m = realify(QuatMatrix(1, 1, [Quaternion.i()]))
    assert m * m == RealMatrix.identity(4).scaled(-1)


@given(quat_matrices(2), quat_matrices(2))
@settings(max_examples=25, deadline=None)
def test_realify_is_an_algebra_homomorphism(a, b):
    # oracle: the quaternionic product computed directly
    assert realify(a * b) == realify(a) * realify(b)


@given(quaternions, quaternions)
@settings(max_examples=50, deadline=None)
def test_realify_on_scalars_is_injective_ring_hom(p, q):
    lp, lq = left_mult_matrix(p), left_mult_matrix(q)
    assert left_mult_matrix(p * q) == lp * lq
    assert left_mult_matrix(p + q) == lp + lq
    if not p.is_zero():
        assert not lp.is_zero()


@given(quaternions, quaternions)
@settings(max_examples=50, deadline=None)
def test_left_and_right_multiplications_commute(p, q):
    assert left_mult_matrix(p) * right_mult_matrix(q) == \
        right_mult_matrix(q) * left_mult_matrix(p)


# ---------------------------------------------------------------------------
# spaces
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("r,s,t", [(1, 1, 1), (1, 2, 1), (2, 2, 2), (1, 1, 0),
                                   (0, 2, 0)])
def test_structure_triple_relations(r, s, t):
    space = build_space(r, s, t)
    n = space.real_dim
    assert n == 4 * (r + s)
    i1, i2, i3 = space.I
    minus_id = RealMatrix.identity(n).scaled(-1)
    for ia in space.I:
        assert ia * ia == minus_id
    assert i1 * i2 == i3
    assert (i2 * i1).scaled(-1) == i3


@pytest.mark.parametrize("r,s,t", [(1, 1, 1), (1, 2, 1), (2, 2, 2)])
def test_eta_symmetric_invertible_signature(r, s, t):
    space = build_space(r, s, t)
    eta = space.eta
    assert eta.is_symmetric()
    assert symmetric_signature(eta) == (4 * r, 4 * s)
    assert eta * space.eta_inverse() == RealMatrix.identity(space.real_dim)


@pytest.mark.parametrize("r,s,t", [(1, 1, 1), (1, 2, 1), (2, 2, 2)])
def test_structure_is_eta_skew(r, s, t):
    space = build_space(r, s, t)
    eta = space.eta
    for ia in space.I:
        assert (eta * ia + ia.transpose() * eta).is_zero()
        # eta(Ia X, Ia Y) = eta(X, Y)
        assert ia.transpose() * eta * ia == eta


def test_hermitian_pairing_pattern():
    space = build_space(1, 2, 1)
    g = space.gram
    # only nonzero pairings: <p_i, q_i> = <q_i, p_i> = 1 and <e_i, e_i> = +-1
    assert g[0, 2] == Quaternion.one() and g[2, 0] == Quaternion.one()
    assert g[1, 1] == Quaternion(1)  # r0 = 0, s0 = 1: e_1 has +1
    for i in range(3):
        for j in range(3):
            if (i, j) not in ((0, 2), (2, 0), (1, 1)):
                assert g[i, j].is_zero()
    assert build_space(2, 1, 1).gram[1, 1] == Quaternion(-1)  # r0 = 1 side


def test_labels():
    assert build_space(1, 2, 1).basis_labels == ("p1", "e1", "q1")
    assert build_space(2, 2, 2).basis_labels == ("p1", "p2", "q1", "q2")
    assert build_space(1, 1, 0).basis_labels == ("e1", "e2")


def test_invalid_parameters_raise():
    with pytest.raises(ValueError):
        build_space(1, 1, 2)
    with pytest.raises(ValueError):
        build_space(0, 0, 0)
    with pytest.raises(ValueError):
        build_space(-1, 2, 0)


# ---------------------------------------------------------------------------
# W, E, W1
# ---------------------------------------------------------------------------

def test_witt_blocks_111():
    space = build_space(1, 1, 1)
    w = space.isotropic_subspace_W()
    assert w.dim == 4
    # eta vanishes identically on W
    for u in w.basis:
        for v in w.basis:
            assert space.eta_pairing(u, v) == 0


def test_witt_blocks_121():
    space = build_space(1, 2, 1)
    w, e, w1 = (space.isotropic_subspace_W(), space.complement_E(),
                space.dual_W1())
    assert (w.dim, e.dim, w1.dim) == (4, 4, 4)
    for u in w1.basis:
        for v in w1.basis:
            assert space.eta_pairing(u, v) == 0
    # E is orthogonal to both W and W1, and eta|_E has signature (0, 4)
    for u in e.basis:
        for v in list(w.basis) + list(w1.basis):
            assert space.eta_pairing(u, v) == 0
    e_gram = RealMatrix.from_rows(
        [[space.eta_pairing(u, v) for v in e.basis] for u in e.basis])
    assert symmetric_signature(e_gram) == (0, 4)


def test_witt_blocks_222_total_and_empty_complement():
    space = build_space(2, 2, 2)
    w, e, w1 = (space.isotropic_subspace_W(), space.complement_E(),
                space.dual_W1())
    assert e.dim == 0
    from berger_lab.exactlin import span_of
    combined = span_of(list(w.basis) + list(w1.basis), space.real_dim)
    assert combined.dim == space.real_dim


def test_w_requires_witt_part():
    space = build_space(1, 1, 0)
    with pytest.raises(ValueError):
        space.isotropic_subspace_W()
    with pytest.raises(ValueError):
        space.dual_W1()
    assert space.complement_E().dim == 8


@pytest.mark.parametrize("r,s,t", [(1, 1, 1), (1, 2, 1), (2, 2, 2)])
def test_structure_preserves_witt_blocks(r, s, t):
    space = build_space(r, s, t)
    blocks = [space.isotropic_subspace_W(), space.complement_E(),
              space.dual_W1()]
    for ia in space.I:
        for block in blocks:
            for v in block.basis:
                assert block.contains_vector(ia.apply(v))


def test_space_json_shape():
    data = build_space(1, 1, 1).to_json()
    assert set(data) == {"r", "s", "t", "eta", "I1", "I2", "I3", "labels"}
    assert data["labels"] == ["p1", "q1"]
    assert RealMatrix.from_json(data["eta"]).is_symmetric()
