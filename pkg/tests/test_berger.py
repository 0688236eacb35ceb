import pytest

from berger_lab.berger import (SCOPE_NOTE, berger_closure, berger_report,
                               holonomy_case_split)
from berger_lab.curvature import CurvatureSpace
from berger_lab.exactlin import SpanSolver


def test_h0_is_berger(session):
    h0 = session.algebra("h0", 1, 1, 1)
    report = berger_report(h0, session.curvature("h0", 1, 1, 1))
    assert report.is_berger
    assert report.closure_dim == 7 == report.algebra_dim
    assert report.curvature_dim == 1


def test_parabolic_with_sp1_is_berger(session):
    alg = session.algebra("sp1+sp_w", 1, 1, 1)
    report = berger_report(alg, session.curvature("sp1+sp_w", 1, 1, 1))
    assert report.is_berger
    assert report.closure_dim == 10 == report.algebra_dim


def test_glq_is_not_berger(session):
    glq = session.algebra("glq", 1, 1, 1)
    report = berger_report(glq, session.curvature("glq", 1, 1, 1))
    assert not report.is_berger
    assert report.curvature_dim == 0
    assert report.closure_dim == 0


def test_closure_contained_in_algebra_coordinates(session):
    alg = session.algebra("sp1+sp_w", 1, 2, 1)
    closure = berger_closure(alg, session.curvature("sp1+sp_w", 1, 2, 1))
    assert closure.ambient_dim == alg.dim
    assert closure.dim <= alg.dim


def test_closure_monotone_in_curvature_input(session):
    alg = session.algebra("sp1+sp_w", 1, 1, 1)
    full = session.curvature("sp1+sp_w", 1, 1, 1)
    partial = CurvatureSpace(full.space, full.algebra, full.basis[:4])
    dim_partial = berger_closure(alg, partial).dim
    dim_full = berger_closure(alg, full).dim
    assert dim_partial <= dim_full


def test_witnesses_span_the_closure(session):
    alg = session.algebra("h0", 1, 1, 1)
    report = berger_report(alg, session.curvature("h0", 1, 1, 1))
    span = SpanSolver(alg.dim)
    curvature = session.curvature("h0", 1, 1, 1)
    from berger_lab.curvature import bivector_pairs
    pairs = bivector_pairs(alg.space.real_dim)
    for (a, b), idx in report.witnesses:
        row = curvature.basis[idx].coeffs[pairs.index((a, b))]
        span.add({k: c for k, c in enumerate(row) if c})
    assert span.dim == report.closure_dim


def test_report_json_carries_scope_note(session):
    alg = session.algebra("glq", 1, 1, 1)
    data = berger_report(alg, session.curvature("glq", 1, 1, 1)).to_json()
    assert data["note"] == SCOPE_NOTE
    assert data["is_berger"] is False


def test_mismatched_curvature_space_rejected(session):
    alg = session.algebra("h0", 1, 1, 1)
    with pytest.raises(ValueError, match="different algebra"):
        berger_closure(alg, session.curvature("sp", 1, 1, 1))


# ---------------------------------------------------------------------------
# the decision procedure
# ---------------------------------------------------------------------------

def test_decision_split_signature_case(session):
    report = holonomy_case_split(1, 1, 1, provider=session)
    assert report.case == "split-signature"
    assert report.passed()
    assert report.verdict == "confirmed"
    ids = [c.check_id for c in report.checks]
    assert ids == ["h0-curvature-line", "parabolic-split", "h0-berger",
                   "parabolic-berger", "restriction-multiple"]


def test_decision_mixed_signature_case(session):
    report = holonomy_case_split(1, 2, 1, provider=session)
    assert report.case == "mixed-signature"
    assert report.passed()
    assert [c.check_id for c in report.checks] == ["collapse-equality"]


def test_decision_rejects_bad_witt_rank():
    with pytest.raises(ValueError):
        holonomy_case_split(1, 1, 0)
    with pytest.raises(ValueError):
        holonomy_case_split(1, 1, 2)


def test_decision_reports_falsification_loudly(session):
    class Tampering:
        """Drops one basis tensor from the sp(r,r)_W curvature space."""

        def curvature_space(self, space, name):
            real = session.curvature_space(space, name)
            if name == "sp_w":
                return CurvatureSpace(real.space, real.algebra, real.basis[:-1])
            return real

    report = holonomy_case_split(1, 1, 1, provider=Tampering())
    assert not report.passed()
    assert report.verdict.startswith("CLAIM FALSIFIED AT (1,1,1)")
    failing = {c.check_id for c in report.checks if c.status == "fail"}
    assert "parabolic-split" in failing


def test_report_json_shape(session):
    data = holonomy_case_split(1, 2, 1, provider=session).to_json()
    assert data["case"] == "mixed-signature"
    assert data["verdict"] == "confirmed"
    assert data["note"] == SCOPE_NOTE
    assert all({"id", "description", "status", "details"} <= set(c)
               for c in data["checks"])
