from fractions import Fraction

import pytest

from berger_lab.exactlin import RealMatrix
from berger_lab.liealg import build_glq, build_h0, build_sp
from berger_lab.prolong import (first_prolongation, first_prolongation_of,
                                restrict_action, second_prolongation,
                                second_prolongation_of)
from berger_lab.quatspace import build_space


def full_gl(n):
    """Matrix units spanning gl(n, R)."""
    out = []
    for i in range(n):
        for j in range(n):
            ent = [Fraction(0)] * (n * n)
            ent[i * n + j] = Fraction(1)
            out.append(RealMatrix(n, n, ent))
    return out


# ---------------------------------------------------------------------------
# brute-force anchors: for the full gl(V) the prolongations are the
# symmetric tensor spaces S^2 V* (x) V and S^3 V* (x) V
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("n", [2, 3])
def test_full_gl_first_prolongation_dim(n):
    expected = n * n * (n + 1) // 2  # dim S^2 V* (x) V
    assert first_prolongation(full_gl(n)).dim == expected


@pytest.mark.parametrize("n", [2])
def test_full_gl_second_prolongation_dim(n):
    expected = n * n * (n + 1) * (n + 2) // 6  # dim S^3 V* (x) V
    assert second_prolongation(full_gl(n)).dim == expected


def test_first_prolongation_elements_are_symmetric():
    result = first_prolongation(full_gl(2))
    dg = 4
    for vec in result.basis:
        mats = []
        for x in range(2):
            m = [[Fraction(0)] * 2 for _ in range(2)]
            for k in range(dg):
                c = vec.get(x * dg + k, Fraction(0))
                if c:
                    i, j = divmod(k, 2)
                    m[i][j] += c
            mats.append(m)
        # S(e_0) e_1 == S(e_1) e_0
        assert [mats[0][d][1] for d in range(2)] == [mats[1][d][0] for d in range(2)]


# ---------------------------------------------------------------------------
# the algebras from the decision procedure, restricted to W
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("r", [1, 2])
def test_glq_restricted_to_w_has_no_first_prolongation(r):
    space = build_space(r, r, r)
    glq = build_glq(space)
    result = first_prolongation_of(glq, space.isotropic_subspace_W())
    assert result.dim == 0


def test_h0_restriction_dims():
    space = build_space(1, 1, 1)
    h0 = build_h0(space)
    action = restrict_action(h0, space.isotropic_subspace_W())
    assert len(action) == 7  # sp(1) + gl(1,H) acting on R^4


def test_h0_on_w_first_prolongation_nonzero():
    space = build_space(1, 1, 1)
    h0 = build_h0(space)
    result = first_prolongation_of(h0, space.isotropic_subspace_W())
    assert result.dim >= 1
    assert result.dim == 4  # computed value


def test_h0_on_w_second_prolongation_vanishes():
    space = build_space(1, 1, 1)
    h0 = build_h0(space)
    assert second_prolongation_of(h0, space.isotropic_subspace_W()).dim == 0


def test_zero_first_prolongation_forces_zero_second():
    space = build_space(1, 1, 1)
    glq = build_glq(space)
    w = space.isotropic_subspace_W()
    assert first_prolongation_of(glq, w).dim == 0
    assert second_prolongation_of(glq, w).dim == 0


def test_prolongation_monotone_in_the_algebra():
    space = build_space(1, 1, 1)
    w = space.isotropic_subspace_W()
    small = first_prolongation_of(build_glq(space), w)
    large = first_prolongation_of(build_h0(space), w)
    assert small.dim <= large.dim
    small2 = second_prolongation_of(build_glq(space), w)
    large2 = second_prolongation_of(build_h0(space), w)
    assert small2.dim <= large2.dim


def test_restrict_action_rejects_non_invariant_subspace():
    space = build_space(1, 1, 1)
    sp = build_sp(space)
    with pytest.raises(ValueError, match="does not preserve"):
        restrict_action(sp, space.isotropic_subspace_W())


def test_empty_action():
    assert first_prolongation([]).dim == 0
    assert second_prolongation([]).dim == 0


def test_prolongation_json():
    data = first_prolongation(full_gl(2), label="gl(2,R)").to_json()
    assert data["dim"] == 6 and data["order"] == 1
    assert len(data["basis"]) == 6
    assert all(isinstance(v, str) for vec in data["basis"] for v in vec.values())
