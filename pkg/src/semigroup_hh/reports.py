"""Deterministic report builders shared by the HTTP service and the CLI.

Every builder takes a JobConfig and returns a plain JSON-able dict with the
top-level shape {params, case, results, checks}.  All lists are sorted so that
identical configs always serialize to identical bytes.
"""

from dataclasses import dataclass

from . import hilbert, oracle
from .classify import StandardClassLabel, standard_basis
from .coefficients import make_context
from .cochain import hh_dimension
from .cup import cup_closed_form, cup_labels, is_standard, verify_lift
from .presentation import PresentedRing, iso_check
from .resolution import (
    morse_acyclicity_check,
    verify_d_squared,
    verify_homotopy_identity,
)


class InvalidConfig(ValueError):
    pass


@dataclass(frozen=True)
class JobConfig:
    a: int
    b: int
    characteristic: int = 0
    max_degree: int = 6
    weight_min: int = None
    weight_max: int = None

    def __post_init__(self):
        if self.max_degree < 0:
            raise InvalidConfig("max_degree must be >= 0")
        lo, hi = self.window()
        if lo > hi:
            raise InvalidConfig("weight_min must be <= weight_max")

    def window(self):
        ab = self.a * self.b
        lo = -5 * ab if self.weight_min is None else self.weight_min
        hi = 3 * ab if self.weight_max is None else self.weight_max
        return lo, hi


def make_context_checked(cfg):
    try:
        return make_context(cfg.a, cfg.b, cfg.characteristic)
    except ValueError as exc:
        raise InvalidConfig(str(exc)) from exc


def _params(cfg, ctx):
    lo, hi = cfg.window()
    return {
        "a": cfg.a,
        "b": cfg.b,
        "char": cfg.characteristic,
        "max_degree": cfg.max_degree,
        "weight_min": lo,
        "weight_max": hi,
        "working_pair": [ctx.sp.a, ctx.sp.b],
        "swapped": ctx.swapped,
    }


def _report(cfg, ctx, results, checks):
    return {
        "params": _params(cfg, ctx),
        "case": ctx.case.value,
        "results": results,
        "checks": checks,
    }


def run_dim(cfg):
    ctx = make_context_checked(cfg)
    lo, hi = cfg.window()
    table = []
    agree = True
    for m in range(cfg.max_degree + 1):
        for n in range(lo, hi + 1):
            d = hh_dimension(ctx.sp, ctx.field, m, n)
            if d:
                table.append({"m": m, "n": n, "dim": d})
            if d != len(standard_basis(ctx, m, n)):
                agree = False
    return _report(cfg, ctx, table, {"ok": agree, "matches_standard_basis": agree})


def run_basis(cfg):
    ctx = make_context_checked(cfg)
    lo, hi = cfg.window()
    table = []
    agree = True
    for m in range(cfg.max_degree + 1):
        for n in range(lo, hi + 1):
            labels = standard_basis(ctx, m, n)
            if labels:
                table.append({"m": m, "n": n,
                              "labels": sorted(l.compact() for l in labels)})
            if len(labels) != hh_dimension(ctx.sp, ctx.field, m, n):
                agree = False
    return _report(cfg, ctx, table, {"ok": agree, "matches_dimension": agree})


def run_cup(cfg, left, right):
    ctx = make_context_checked(cfg)
    try:
        lf = StandardClassLabel.parse(left)
        rg = StandardClassLabel.parse(right)
    except ValueError as exc:
        raise InvalidConfig(str(exc)) from exc
    for lab in (lf, rg):
        if not is_standard(ctx, lab):
            raise InvalidConfig(f"{lab.compact()} is not a standard class here")
    lifted = cup_labels(ctx, lf, rg)
    closed = cup_closed_form(ctx, lf, rg)
    as_dict = lambda pairs: {lab.compact(): str(c) for c, lab in pairs}
    agree = as_dict(lifted) == as_dict(closed)
    results = {
        "left": lf.compact(),
        "right": rg.compact(),
        "product": sorted(
            ({"coeff": str(c), "label": lab.compact()} for c, lab in lifted),
            key=lambda e: e["label"]),
    }
    return _report(cfg, ctx, results, {"ok": agree, "closed_form_agrees": agree})


def run_present(cfg):
    ctx = make_context_checked(cfg)
    lo, hi = cfg.window()
    ring = PresentedRing(ctx)
    sp = ctx.sp
    gens = [{"name": name, "degree": lab.degree(), "weight": lab.weight(sp)}
            for name, lab in zip(ring.generator_names, ring.generator_labels)]
    rels = [name for name, _ in ring.relations()]
    by_bidegree = {}
    for mono in ring.monomial_basis(cfg.max_degree, lo, hi):
        key = (ring.degree(mono), ring.weight(mono))
        by_bidegree.setdefault(key, []).append(ring.format(mono))
    basis_table = [{"m": m, "n": n, "monomials": sorted(monos)}
                   for (m, n), monos in sorted(by_bidegree.items())]
    checks = iso_check(ctx, cfg.max_degree, lo, hi)
    results = {"generators": gens, "relations": rels,
               "monomial_basis": basis_table}
    return _report(cfg, ctx, results, checks)


def _series_triples(series):
    return [[m, n, c] for (m, n), c in sorted(series.items())]


def run_hilbert(cfg, variant="both"):
    if variant not in ("minus-a", "minus-b", "both"):
        raise InvalidConfig(f"unknown variant {variant!r}")
    ctx = make_context_checked(cfg)
    lo, hi = cfg.window()
    sp = ctx.sp
    if ctx.case_ii:
        results = {}
        wanted = ("minus-b", "minus-a") if variant == "both" else (variant,)
        for v in wanted:
            s = hilbert.series_case_ii(sp, cfg.max_degree, lo, hi, v)
            results["series_" + v.replace("-", "_")] = _series_triples(s)
    else:
        s = hilbert.series_case_i(sp, cfg.max_degree, lo, hi)
        results = {"series": _series_triples(s)}
    checks = hilbert.compare_with_counts(ctx, cfg.max_degree, lo, hi)
    checks = _jsonable(checks)
    return _report(cfg, ctx, results, checks)


def _jsonable(obj):
    """Recursively turn tuple dict keys and label objects into strings."""
    if isinstance(obj, dict):
        return {str(k) if not isinstance(k, str) else k: _jsonable(v)
                for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def run_verify(cfg, bar_max_degree=2):
    """The full property suite; checks['ok'] aggregates every certificate."""
    ctx = make_context_checked(cfg)
    sp, field = ctx.sp, ctx.field
    lo, hi = cfg.window()
    M = cfg.max_degree
    wmax = 5 * sp.ab
    checks = {}

    checks["d_squared"] = verify_d_squared(sp, field, M, wmax)

    hom = {"ok": True, "checked": 0}
    for degree in range(M + 1):
        r = verify_homotopy_identity(sp, field, degree, wmax)
        hom["checked"] += r["checked"]
        if not r["ok"]:
            hom = {"ok": False, "checked": hom["checked"],
                   "counterexample": r["counterexample"], "degree": degree}
            break
    checks["homotopy"] = hom

    morse = morse_acyclicity_check(sp, field, M, wmax)
    checks["morse"] = {"ok": morse["ok"], "acyclic": morse["acyclic"],
                       "vertices": morse["vertices"]}

    ring = PresentedRing(ctx)
    lifts = {"ok": True, "labels": []}
    for lab in ring.generator_labels:
        r = verify_lift(ctx, lab, 4)
        lifts["labels"].append(r["label"])
        if not r["ok"]:
            lifts = {"ok": False, "failure": r}
            break
    checks["lifts"] = lifts

    checks["three_way"] = _jsonable(
        hilbert.compare_with_counts(ctx, M, lo, hi))

    bar_lo, bar_hi = -2 * sp.ab, 2 * sp.ab
    bar = {"ok": True, "checked": 0}
    for m in range(bar_max_degree + 1):
        for n in range(bar_lo, bar_hi + 1):
            got = oracle.bar_hh_dimension(sp, field, m, n)
            want = hh_dimension(sp, field, m, n)
            if got != want:
                bar = {"ok": False, "checked": bar["checked"],
                       "first_mismatch": {"m": m, "n": n,
                                          "bar": got, "ranks": want}}
                break
            bar["checked"] += 1
        if not bar["ok"]:
            break
    checks["bar"] = bar

    checks["cup_equality"] = _cup_equality(ctx, M, lo, hi)

    checks["presentation"] = iso_check(ctx, M, lo, hi, composed_lift_pairs=200)

    checks["ok"] = all(v["ok"] for v in checks.values())
    return _report(cfg, ctx, {}, checks)


def _cup_equality(ctx, max_degree, n_min, n_max):
    """Composed-lift cup equals the closed form on every pair of standard
    classes in the window with total degree <= max_degree."""
    field, sp = ctx.field, ctx.sp
    labels = []
    for m in range(max_degree + 1):
        for n in range(n_min, n_max + 1):
            labels.extend(standard_basis(ctx, m, n))
    report = {"ok": True, "pairs": 0}
    for lf in labels:
        for rg in labels:
            if lf.degree() + rg.degree() > max_degree:
                continue
            lifted = {lab: c for c, lab in cup_labels(ctx, lf, rg)}
            closed = {lab: c for c, lab in cup_closed_form(ctx, lf, rg)
                      if not field.is_zero(c)}
            if lifted != closed:
                return {"ok": False, "pairs": report["pairs"],
                        "first_mismatch": {"left": lf.compact(),
                                           "right": rg.compact()}}
            report["pairs"] += 1
    return report
