"""Chain-map lifts of standard cocycles and the cup (Yoneda) product.

The product of classes [f] and [g] is represented by the cochain g o lift(f),
where lift(f) is the chain map covering f.  The lifts are implemented in
closed form; the homotopy recursion lift_j = phi o lift_(j-1) o d is kept as
the verification oracle, never as the product path.
"""

from .classify import StandardClassLabel, reduce_to_standard, representative, standard_basis
from .cochain import Cochain, evaluate
from .resolution import (
    E1,
    E2,
    E12,
    EMPTY,
    ResolutionElement,
    augmentation,
    cell_degree,
    cells_of_degree,
    contracting_homotopy,
    differential,
)


class UnsupportedLabel(ValueError):
    pass


def delta_evaluated(ctx, which):
    """The element delta_1 (which=1) or delta_2 (which=2) multiplied out in A:
    returns (scalar, weight)."""
    sp, field = ctx.sp, ctx.field
    if which == 1:
        coeff = sp.a * (sp.a - 1) // 2
        return field.of_int(coeff), sp.b * (sp.a - 2)
    coeff = sp.b * (sp.b - 1) // 2
    return field.of_int(coeff), sp.a * (sp.b - 2)


def lift_cell(ctx, label, J, r):
    """Closed-form value of the chain lift of the labeled cocycle on the basis
    cell e_J t^(r); an element of the resolution in degree
    cell_degree(J, r) - label.degree()."""
    sp, field = ctx.sp, ctx.field
    a, b = sp.a, sp.b
    q0 = label.q
    out = ResolutionElement(field)
    if label.kind in ("unit", "t"):
        if r >= q0:
            out.add_term((0, label.alpha, J, r - q0), field.one)
        return out
    if label.kind == "oddpair":
        a1 = label.alpha - sp.m1
        a2 = label.alpha - sp.m2
        b_k, a_k = field.of_int(b), field.of_int(a)
        if J == E1 and r >= q0:
            out.add_term((0, a1, EMPTY, r - q0), b_k)
            if r - q0 >= 1:
                for i in range(b - 1):
                    out.add_term(((b - 2 - i) * a, a2 + i * a, E12, r - q0 - 1),
                                 field.neg(field.mul(a_k, field.of_int(i + 1))))
        elif J == E2 and r >= q0:
            out.add_term((0, a2, EMPTY, r - q0), a_k)
            if r - q0 >= 1:
                for i in range(a - 1):
                    out.add_term(((a - 2 - i) * b, a1 + i * b, E12, r - q0 - 1),
                                 field.neg(field.mul(b_k, field.of_int(i + 1))))
        elif J == EMPTY and r >= q0 + 1:
            j = r - q0 - 1
            for i in range(a - 1):
                out.add_term(((a - 2 - i) * b, a1 + i * b, E1, j),
                             field.mul(b_k, field.of_int(i + 1)))
            for i in range(b - 1):
                out.add_term(((b - 2 - i) * a, a2 + i * a, E2, j),
                             field.neg(field.mul(a_k, field.of_int(i + 1))))
        elif J == E12 and r >= q0:
            out.add_term((0, a2, E1, r - q0), a_k)
            out.add_term((0, a1, E2, r - q0), field.neg(b_k))
        return out
    if label.kind == "e1":
        alpha = label.alpha
        if J == E1 and r >= q0:
            out.add_term((0, alpha, EMPTY, r - q0), field.one)
        elif J == E2 and r >= q0 + 1:
            for i in range(a - 1):
                out.add_term(((a - 2 - i) * b, alpha + i * b, E12, r - q0 - 1),
                             field.neg(field.of_int(i + 1)))
        elif J == EMPTY and r >= q0 + 1:
            for i in range(a - 1):
                out.add_term(((a - 2 - i) * b, alpha + i * b, E1, r - q0 - 1),
                             field.of_int(i + 1))
        elif J == E12 and r >= q0:
            out.add_term((0, alpha, E2, r - q0), field.neg(field.one))
        return out
    raise UnsupportedLabel(label)


def lift_recursive(ctx, label, J, r, _cache=None):
    """The lift computed by the homotopy recursion lift_j = phi o lift_(j-1) o d;
    this is the oracle the closed forms are checked against."""
    sp, field = ctx.sp, ctx.field
    if _cache is None:
        _cache = {}
    key = (J, r)
    if key in _cache:
        return _cache[key]
    j = cell_degree(J, r) - label.degree()
    if j < 0:
        raise ValueError("cell below the source degree of the lift")
    if j == 0:
        rep = representative(ctx, label)
        out = ResolutionElement(field)
        for (I2, q2, alpha), c in rep.terms.items():
            if (I2, q2) == (J, r):
                out.add_term((0, alpha, EMPTY, 0), c)
        _cache[key] = out
        return out
    d = differential(sp, ResolutionElement.basis(field, 0, 0, J, r))
    acc = ResolutionElement(field)
    for (g, dd, J2, q2), c in d.terms.items():
        prev = lift_recursive(ctx, label, J2, q2, _cache)
        acc = acc + prev.shift(g, dd).scale(c)
    out = ResolutionElement(field) if acc.is_zero() else contracting_homotopy(sp, acc)
    _cache[key] = out
    return out


def verify_lift(ctx, label, j_max):
    """Check the commuting squares and agreement with the homotopy recursion
    for the closed-form lift, through lift stage j_max."""
    sp, field = ctx.sp, ctx.field
    i0 = label.degree()
    rep = representative(ctx, label)
    cache = {}
    checked = 0
    for j in range(j_max + 1):
        for J, r in cells_of_degree(i0 + j):
            closed = lift_cell(ctx, label, J, r)
            rec = lift_recursive(ctx, label, J, r, cache)
            if closed != rec:
                return {"ok": False, "label": label.compact(), "stage": j,
                        "cell": {"I": list(J), "q": r}, "reason": "recursion mismatch"}
            if j == 0:
                # bottom square: eps o lift_0 = f
                lhs = augmentation(closed) if not closed.is_zero() else {}
                rhs = evaluate(field, rep,
                               ResolutionElement.basis(field, 0, 0, J, r))
                if lhs != rhs:
                    return {"ok": False, "label": label.compact(), "stage": 0,
                            "cell": {"I": list(J), "q": r}, "reason": "augmentation square"}
            else:
                lhs = ResolutionElement(field) if closed.is_zero() \
                    else differential(sp, closed)
                d = differential(sp, ResolutionElement.basis(field, 0, 0, J, r))
                rhs = ResolutionElement(field)
                for (g, dd, J2, q2), c in d.terms.items():
                    rhs = rhs + lift_cell(ctx, label, J2, q2).shift(g, dd).scale(c)
                if lhs != rhs:
                    return {"ok": False, "label": label.compact(), "stage": j,
                            "cell": {"I": list(J), "q": r}, "reason": "commuting square"}
            checked += 1
    return {"ok": True, "label": label.compact(), "checked": checked}


def cup_cochain(ctx, f_label, g_label):
    """The representative cochain of [f] cup [g]: compose the representative of
    g with the lift of f on the (at most two) cells of the total degree."""
    field = ctx.field
    g_rep = representative(ctx, g_label)
    m = f_label.degree() + g_label.degree()
    out = Cochain(field)
    for J, r in cells_of_degree(m):
        lifted = lift_cell(ctx, f_label, J, r)
        for w, c in evaluate(field, g_rep, lifted).items():
            out.add_term((J, r, w), c)
    return out


def cup_labels(ctx, f_label, g_label):
    """Cup product of two standard classes via composed lifts, reduced to
    standard coordinates: a list of (scalar, label)."""
    h = cup_cochain(ctx, f_label, g_label)
    if h.is_zero():
        return []
    return reduce_to_standard(ctx, h)


def cup_closed_form(ctx, f_label, g_label):
    """The tabulated product of two standard classes, without lift composition."""
    sp = ctx.sp
    f_even = f_label.kind in ("unit", "t")
    g_even = g_label.kind in ("unit", "t")
    one = ctx.field.one

    def even_class(q, alpha):
        if not sp.contains(alpha):
            raise ValueError("product weight left the semigroup")
        if q == 0:
            return [(one, StandardClassLabel("unit", 0, alpha))]
        if ctx.case_ii:
            dead = sp.contains(alpha - sp.m2)
        else:
            dead = sp.contains(alpha - sp.m1) or sp.contains(alpha - sp.m2)
        return [] if dead else [(one, StandardClassLabel("t", q, alpha))]

    if f_even and g_even:
        return even_class(f_label.q + g_label.q, f_label.alpha + g_label.alpha)
    if f_even != g_even:
        ev, od = (f_label, g_label) if f_even else (g_label, f_label)
        q = ev.q + od.q
        alpha = ev.alpha + od.alpha
        if ctx.case_ii:
            if q > 0 and sp.contains(alpha - sp.m2):
                return []
            return [(one, StandardClassLabel("e1", q, alpha))]
        if q > 0 and sp.contains(alpha - sp.m1 - sp.m2):
            return []
        return [(one, StandardClassLabel("oddpair", q, alpha))]
    # odd times odd
    if not ctx.case_ii:
        return []
    if not ctx.char2_special:
        return []
    q = f_label.q + g_label.q + 1
    alpha = f_label.alpha + g_label.alpha + sp.b * (sp.a - 2)
    return even_class(q, alpha)


def cup_coords(ctx, f_coords, g_coords, closed_form=False):
    """Bilinear extension of the cup product to standard coordinate vectors
    (dicts label -> scalar)."""
    field = ctx.field
    pair = cup_closed_form if closed_form else cup_labels
    out = {}
    for lf, cf in f_coords.items():
        for lg, cg in g_coords.items():
            for c, lab in pair(ctx, lf, lg):
                val = field.mul(field.mul(cf, cg), c)
                cur = out.get(lab)
                s = field.add(cur, val) if cur is not None else val
                if field.is_zero(s):
                    out.pop(lab, None)
                else:
                    out[lab] = s
    return out


def is_standard(ctx, label):
    """Whether the label is a member of the standard basis of its bidegree."""
    return label in standard_basis(ctx, label.degree(), label.weight(ctx.sp))
