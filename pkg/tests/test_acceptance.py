"""Acceptance gate: the eight release criteria, exact arithmetic throughout.

Target instances (a, b) in {(2,3), (2,5), (3,4), (3,5), (4,3)} crossed with
characteristics {0, 2, 3, 5}.  Each criterion prints a single PASS/FAIL line.
"""

import json

from semigroup_hh import make_context
from semigroup_hh.classify import count_by_bidegree, standard_basis
from semigroup_hh.cochain import hh_dimension, is_coboundary
from semigroup_hh.cup import cup_cochain, cup_labels, verify_lift
from semigroup_hh.hilbert import compare_with_counts, series_for_context
from semigroup_hh.oracle import bar_hh_dimension
from semigroup_hh.presentation import PresentedRing, iso_check
from semigroup_hh.reports import JobConfig, run_verify, _cup_equality
from semigroup_hh.resolution import (
    EMPTY,
    morse_acyclicity_check,
    verify_d_squared,
    verify_homotopy_identity,
)

INSTANCES = [(2, 3), (2, 5), (3, 4), (3, 5), (4, 3)]
CHARS = [0, 2, 3, 5]
COMBOS = [(a, b, p) for (a, b) in INSTANCES for p in CHARS]


def report_line(capsys, number, title, ok):
    with capsys.disabled():
        print(f"\nACCEPTANCE CRITERION {number} ({title}): "
              f"{'PASS' if ok else 'FAIL'}")


def contexts():
    return [make_context(a, b, p) for (a, b, p) in COMBOS]


def test_criterion_1_resolution_soundness(capsys):
    """d o d = 0 and eps o d_1 = 0 for all cells with degree <= 6 and weight
    <= 5ab, every instance and characteristic."""
    failures = []
    for ctx in contexts():
        sp, field = ctx.sp, ctx.field
        report = verify_d_squared(sp, field, 6, 5 * sp.ab)
        if not report["ok"] or report["checked"] == 0:
            failures.append((sp.a, sp.b, field.characteristic, report))
    ok = not failures
    report_line(capsys, 1, "resolution soundness", ok)
    assert ok, failures


def test_criterion_2_homotopy_certificate(capsys):
    """d phi + phi d = id on degrees 1..6, the degree-0 normalization, and
    acyclicity of the matched digraph, all windowed cells."""
    failures = []
    for ctx in contexts():
        sp, field = ctx.sp, ctx.field
        for degree in range(7):
            report = verify_homotopy_identity(sp, field, degree, 5 * sp.ab)
            if not report["ok"] or report["checked"] == 0:
                failures.append((sp.a, sp.b, field.characteristic, degree, report))
        morse = morse_acyclicity_check(sp, field, 6, 5 * sp.ab)
        if not morse["ok"]:
            failures.append((sp.a, sp.b, field.characteristic, "morse", morse))
    ok = not failures
    report_line(capsys, 2, "homotopy certificate", ok)
    assert ok, failures


def test_criterion_3_lift_certificate(capsys):
    """Closed-form lifts satisfy every commuting square for j <= 4 and agree
    cellwise with the homotopy recursion, for all standard generators."""
    failures = []
    for ctx in contexts():
        for lab in PresentedRing(ctx).generator_labels:
            report = verify_lift(ctx, lab, 4)
            if not report["ok"] or report["checked"] == 0:
                failures.append((ctx.sp.a, ctx.sp.b,
                                 ctx.field.characteristic, report))
    ok = not failures
    report_line(capsys, 3, "lift certificate", ok)
    assert ok, failures


def test_criterion_4_three_way_agreement(capsys):
    """hh_dimension = |standard_basis| = series coefficient for m <= 6,
    n in [-5ab, 3ab]; bar_hh_dimension agrees for m <= 2, |n| <= 2ab."""
    failures = []
    for ctx in contexts():
        sp, field = ctx.sp, ctx.field
        lo, hi = -5 * sp.ab, 3 * sp.ab
        series = series_for_context(ctx, 6, lo, hi)
        for m in range(7):
            for n in range(lo, hi + 1):
                ranks = hh_dimension(sp, field, m, n)
                counts = len(standard_basis(ctx, m, n))
                coeff = series.get((m, n), 0)
                if not (ranks == counts == coeff):
                    failures.append((sp.a, sp.b, field.characteristic,
                                     m, n, ranks, counts, coeff))
        for m in range(3):
            for n in range(-2 * sp.ab, 2 * sp.ab + 1):
                got = bar_hh_dimension(sp, field, m, n)
                want = hh_dimension(sp, field, m, n)
                if got != want:
                    failures.append((sp.a, sp.b, field.characteristic,
                                     "bar", m, n, got, want))
    ok = not failures
    report_line(capsys, 4, "three-way dimension agreement", ok)
    assert ok, failures[:5]


def test_criterion_5_cup_product_equality(capsys):
    """Composed-lift cup equals the closed form on every standard pair with
    total degree <= 6 in the window, the case I odd*odd composite is the
    stated coboundary, and the characteristic-2 square branches correctly."""
    failures = []
    for ctx in contexts():
        sp, field = ctx.sp, ctx.field
        report = _cup_equality(ctx, 6, -5 * sp.ab, 3 * sp.ab)
        if not report["ok"] or report["pairs"] == 0:
            failures.append((sp.a, sp.b, field.characteristic, report))
        if not ctx.case_ii:
            # raw odd*odd composite: ab(a-b)/2 (t^(p+q+1), s^(alpha+beta-ab)),
            # always a coboundary
            odd = [lab for m in (1, 3) for n in range(-3 * sp.ab, sp.ab)
                   for lab in standard_basis(ctx, m, n)]
            for lf in odd[:6]:
                for rg in odd[:6]:
                    raw = cup_cochain(ctx, lf, rg)
                    coeff = field.of_int(sp.a * sp.b * (sp.a - sp.b) // 2)
                    key = (EMPTY, lf.q + rg.q + 1, lf.alpha + rg.alpha - sp.ab)
                    want = {} if field.is_zero(coeff) else {key: coeff}
                    if raw.terms != want:
                        failures.append((sp.a, sp.b, field.characteristic,
                                         "raw", lf.compact(), rg.compact()))
                        continue
                    if not raw.is_zero() and not is_coboundary(sp, field, raw)[0]:
                        failures.append((sp.a, sp.b, field.characteristic,
                                         "coboundary", lf.compact(), rg.compact()))
    # the characteristic-2 branches of the odd square
    from semigroup_hh.classify import StandardClassLabel
    ctx = make_context(2, 3, 2)
    y = StandardClassLabel("e1", 0, 0)
    if cup_labels(ctx, y, y) != [(ctx.field.one, StandardClassLabel("t", 1, 0))]:
        failures.append(("char2 nonzero square", 2, 3))
    ctx = make_context(4, 3, 2)
    if cup_labels(ctx, StandardClassLabel("e1", 0, 0),
                  StandardClassLabel("e1", 0, 0)) != []:
        failures.append(("char2 vanishing square", 4, 3))
    ok = not failures
    report_line(capsys, 5, "cup-product equality", ok)
    assert ok, failures[:5]


def test_criterion_6_presentation_certificate(capsys):
    """iso_check passes everywhere: counts per (m, n) match the normal
    monomials, relations map to zero, structure constants match; spot check:
    (2,3) char 0 has total dimension 2 in every degree >= 2 in the window."""
    failures = []
    for ctx in contexts():
        sp = ctx.sp
        report = iso_check(ctx, 6, -5 * sp.ab, 3 * sp.ab,
                           composed_lift_pairs=100)
        if not report["ok"]:
            failures.append((sp.a, sp.b, ctx.field.characteristic, report))
    ctx = make_context(2, 3, 0)
    totals = {}
    for (m, _), k in count_by_bidegree(ctx, 6, -5 * ctx.sp.ab, 3 * ctx.sp.ab).items():
        totals[m] = totals.get(m, 0) + k
    for m in range(2, 7):
        if totals.get(m, 0) != 2:
            failures.append(("spot (2,3) char 0 degree", m, totals.get(m, 0)))
    ok = not failures
    report_line(capsys, 6, "presentation certificate", ok)
    assert ok, failures[:5]


def test_criterion_7_hilbert_adjudication(capsys):
    """In every case II combination exactly the minus-b variant matches, the
    minus-a mismatch is reported, and the bar oracle confirms the degree-1
    class at weight -b."""
    failures = []
    seen_case_ii = 0
    for ctx in contexts():
        sp, field = ctx.sp, ctx.field
        if not ctx.case_ii:
            continue
        seen_case_ii += 1
        report = compare_with_counts(ctx, 6, -5 * sp.ab, 3 * sp.ab)
        if report["matching_variants"] != ["minus-b"]:
            failures.append((sp.a, sp.b, field.characteristic,
                             report["matching_variants"]))
        if report["variants"]["minus-a"].get("first_mismatch") is None:
            failures.append((sp.a, sp.b, field.characteristic,
                             "mismatch not reported"))
        if bar_hh_dimension(sp, field, 1, -sp.b) < 1:
            failures.append((sp.a, sp.b, field.characteristic, "bar at (1,-b)"))
    ok = not failures and seen_case_ii > 0
    report_line(capsys, 7, "hilbert discrepancy adjudication", ok)
    assert ok, failures


def test_criterion_8_determinism(capsys):
    """Repeated verify runs serialize to byte-identical JSON."""
    cfg = JobConfig(2, 3, 2, max_degree=4, weight_min=-12, weight_max=6)
    first = json.dumps(run_verify(cfg), sort_keys=True)
    second = json.dumps(run_verify(cfg), sort_keys=True)
    cfg2 = JobConfig(2, 3, 0, max_degree=4, weight_min=-18, weight_max=9)
    third = json.dumps(run_verify(cfg2), sort_keys=True)
    fourth = json.dumps(run_verify(cfg2), sort_keys=True)
    ok = first == second and third == fourth
    report_line(capsys, 8, "determinism", ok)
    assert ok
