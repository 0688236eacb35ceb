"""Berger criterion and the two-case holonomy decision procedure.

An algebra is a Berger algebra iff it is spanned by the images of its
algebraic curvature tensors; that is a necessary condition for being a
holonomy algebra.  `holonomy_case_split` runs, mechanically and over exact
arithmetic, the case split that classifies which subalgebras of
sp(1)+sp(r,s) preserving an isotropic quaternionic subspace survive the
criterion.  All verdicts are algebra-level: whether a candidate is
realized by an actual manifold is outside the reach of this computation,
and the reports say so.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .curvature import (CurvatureSpace, bianchi_kernel, bivector_pairs,
                        build_r1, coefficients_over, element_over)
from .exactlin import SpanSolver, Subspace, span_of
from .liealg import (LieAlgebra, algebra_by_name, build_h0, build_sp_parabolic,
                     build_sp1, direct_sum)
from .quatspace import QuaternionicSpace, build_space

__all__ = [
    "BergerReport",
    "CaseSplitCheck",
    "CaseSplitReport",
    "berger_closure",
    "berger_report",
    "holonomy_case_split",
    "SCOPE_NOTE",
]

SCOPE_NOTE = ("verdicts concern algebra-level facts (curvature spaces and "
              "the Berger span criterion); manifold-level holonomy existence "
              "is not decidable by this computation")


def berger_closure(g: LieAlgebra, curvature: CurvatureSpace) -> Subspace:
    """Span of all values R(e_a, e_b), as a subspace of g-coordinates."""
    if curvature.algebra.name != g.name:
        raise ValueError("curvature space was computed for a different algebra")
    vectors = []
    for el in curvature.basis:
        for row in el.coeffs:
            if any(row):
                vectors.append({k: c for k, c in enumerate(row) if c})
    return span_of(vectors, g.dim)


@dataclass(frozen=True)
class BergerReport:
    algebra_name: str
    algebra_dim: int
    curvature_dim: int
    closure_dim: int
    is_berger: bool
    witnesses: tuple = ()

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra_name,
            "dim_algebra": self.algebra_dim,
            "dim_curvature_space": self.curvature_dim,
            "dim_berger_closure": self.closure_dim,
            "is_berger": self.is_berger,
            "witnesses": [
                {"bivector": list(biv), "basis_index": idx}
                for biv, idx in self.witnesses
            ],
            "note": SCOPE_NOTE,
        }


def berger_report(g: LieAlgebra, curvature: CurvatureSpace) -> BergerReport:
    closure = berger_closure(g, curvature)
    witnesses = _closure_witnesses(g, curvature, closure.dim)
    return BergerReport(
        algebra_name=g.name,
        algebra_dim=g.dim,
        curvature_dim=curvature.dim,
        closure_dim=closure.dim,
        is_berger=closure.dim == g.dim,
        witnesses=witnesses,
    )


def _closure_witnesses(g, curvature, closure_dim):
    """First spanning subset in canonical order: basis elements outer,
    bivectors inner."""
    pairs = bivector_pairs(g.space.real_dim)
    span = SpanSolver(g.dim)
    picked = []
    for idx, el in enumerate(curvature.basis):
        for ib, row in enumerate(el.coeffs):
            vec = {k: c for k, c in enumerate(row) if c}
            if vec and span.add(vec):
                picked.append((pairs[ib], idx))
                if span.dim == closure_dim:
                    return tuple(picked)
    return tuple(picked)


# ---------------------------------------------------------------------------
# decision procedure
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CaseSplitCheck:
    check_id: str
    description: str
    status: str  # "pass" | "fail"
    details: dict = field(default_factory=dict)


@dataclass(frozen=True)
class CaseSplitReport:
    r: int
    s: int
    t: int
    case: str  # "mixed-signature" | "split-signature"
    checks: tuple
    verdict: str
    scope_note: str = SCOPE_NOTE

    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def to_json(self) -> dict:
        return {
            "r": self.r,
            "s": self.s,
            "t": self.t,
            "case": self.case,
            "checks": [
                {"id": c.check_id, "description": c.description,
                 "status": c.status, "details": c.details}
                for c in self.checks
            ],
            "verdict": self.verdict,
            "note": self.scope_note,
        }


class CurvatureProvider:
    """Default provider; the CLI harness substitutes a disk-caching one."""

    def curvature_space(self, space: QuaternionicSpace, name: str) -> CurvatureSpace:
        return bianchi_kernel(algebra_by_name(name, space))


def holonomy_case_split(r: int, s: int, t: int,
                      provider: CurvatureProvider | None = None) -> CaseSplitReport:
    """Mechanical two-case decision on which candidates preserving the
    isotropic part W survive the Berger criterion.

    Case r0+s0 != 0: the curvature space over sp(1)+sp(r,s)_W must collapse
    onto the one over sp(r,s)_W, so no Berger subalgebra containing sp(1)
    preserves W.  Case r0+s0 = 0: the split of the curvature space by the
    line through R1, the one-dimensional curvature space of h0, both Berger
    properties, and the restriction identity on W x W1 are verified.
    """
    if not 1 <= t <= min(r, s):
        raise ValueError("need 1 <= t <= min(r, s)")
    provider = provider or CurvatureProvider()
    space = build_space(r, s, t)
    checks = []
    n0 = r + s - 2 * t

    parabolic_full = provider.curvature_space(space, "sp1+sp_w")
    parabolic = provider.curvature_space(space, "sp_w")
    target = direct_sum(build_sp1(space), build_sp_parabolic(space))

    if n0 != 0:
        case = "mixed-signature"
        embedded = coefficients_over(parabolic, target)
        full_sub = parabolic_full.coefficient_subspace()
        equal = (embedded.dim == full_sub.dim and full_sub.contains(embedded))
        checks.append(CaseSplitCheck(
            "collapse-equality",
            "curvature space over sp(1)+sp(r,s)_W equals the one over sp(r,s)_W",
            "pass" if equal else "fail",
            {"dim_with_sp1": parabolic_full.dim, "dim_without_sp1": parabolic.dim},
        ))
    else:
        case = "split-signature"
        h0_curv = provider.curvature_space(space, "h0")
        checks.append(CaseSplitCheck(
            "h0-curvature-line",
            "the curvature space of h0 is one-dimensional",
            "pass" if h0_curv.dim == 1 else "fail",
            {"dim": h0_curv.dim},
        ))
        if h0_curv.dim == 1:
            r1 = build_r1(space, curvature=h0_curv)
            r1_vec = element_over(r1, target)
            sub_embedded = coefficients_over(parabolic, target)
            full_sub = parabolic_full.coefficient_subspace()
            split_ok = (parabolic_full.dim == 1 + parabolic.dim
                        and full_sub.contains_vector(r1_vec)
                        and not sub_embedded.contains_vector(r1_vec)
                        and full_sub.contains(sub_embedded))
            checks.append(CaseSplitCheck(
                "parabolic-split",
                "curvature space over sp(1)+sp(r,r)_W = line(R1) + curvature "
                "space over sp(r,r)_W",
                "pass" if split_ok else "fail",
                {"dim_with_sp1": parabolic_full.dim,
                 "dim_without_sp1": parabolic.dim},
            ))
            h0_alg = build_h0(space)
            rep_h0 = berger_report(h0_alg, h0_curv)
            checks.append(CaseSplitCheck(
                "h0-berger",
                "h0 is spanned by the images of its curvature tensors",
                "pass" if rep_h0.is_berger else "fail",
                {"closure_dim": rep_h0.closure_dim, "algebra_dim": rep_h0.algebra_dim},
            ))
            rep_full = berger_report(target, parabolic_full)
            checks.append(CaseSplitCheck(
                "parabolic-berger",
                "sp(1)+sp(r,r)_W is spanned by the images of its curvature tensors",
                "pass" if rep_full.is_berger else "fail",
                {"closure_dim": rep_full.closure_dim,
                 "algebra_dim": rep_full.algebra_dim},
            ))
            restr_ok, restr_details = _restriction_multiple_check(
                space, parabolic_full, sub_embedded, r1, r1_vec)
            checks.append(CaseSplitCheck(
                "restriction-multiple",
                "on W x W1 every tensor restricts, on the W-block, to its "
                "R1-component times the R1 restriction",
                "pass" if restr_ok else "fail",
                restr_details,
            ))

    failed = [c for c in checks if c.status != "pass"]
    if failed:
        verdict = (f"CLAIM FALSIFIED AT ({r},{s},{t}): "
                   + "; ".join(c.check_id for c in failed))
    else:
        verdict = "confirmed"
    return CaseSplitReport(r=r, s=s, t=t, case=case, checks=tuple(checks),
                          verdict=verdict)


def _restriction_multiple_check(space, parabolic_full, sub_embedded, r1, r1_vec):
    """Decompose each basis tensor as c*R1 + (tensor over sp(r,r)_W) and
    compare W-blocks of values on W x W1 pairs against c times R1's."""
    span = SpanSolver(sub_embedded.ambient_dim)
    for row in sub_embedded.sparse_rows():
        span.add(row)
    r1_index = span.dim
    if not span.add(r1_vec):
        return False, {"reason": "R1 lies in the curvature space of sp(r,r)_W"}
    w_idx = list(space.w_indices())
    w1_idx = list(space.w1_indices())

    r1_blocks = {}
    for p in w_idx:
        for q in w1_idx:
            m = r1.value(p, q)
            r1_blocks[(p, q)] = [[m[i, j] for j in w_idx] for i in w_idx]

    checked = 0
    for el in parabolic_full.basis:
        coords = span.coordinates(el.sparse_vector())
        if coords is None:
            return False, {"reason": "split decomposition failed"}
        c = coords[r1_index]
        for p in w_idx:
            for q in w1_idx:
                m = el.value(p, q)
                expected = r1_blocks[(p, q)]
                for i, wi in enumerate(w_idx):
                    for j, wj in enumerate(w_idx):
                        if m[wi, wj] != c * expected[i][j]:
                            return False, {"element": parabolic_full.basis.index(el),
                                           "pair": (p, q)}
        checked += 1
    return True, {"elements_checked": checked}
