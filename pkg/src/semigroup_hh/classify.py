"""Standard cocycles and the standard basis of HH per (degree, weight).

Case I labels:
    unit(alpha)            (1, s^alpha), alpha in S                degree 0
    t(q, alpha)            (t^(q), s^alpha), q > 0                 degree 2q
    oddpair(q, alpha)      b(e_1 t^(q), s^(alpha-m1))
                           + a(e_2 t^(q), s^(alpha-m2))            degree 2q+1

Case II labels (working pair has char k | a):
    unit / t as above, and
    e1(q, alpha)           (e_1 t^(q), s^alpha)                    degree 2q+1
"""

from dataclasses import dataclass

from . import linalg
from .coefficients import Context  # noqa: F401
from .cochain import Cochain, NotACocycle, _matrix_columns, coboundary, graded_keys, hh_dimension
from .resolution import E1, E2, EMPTY, cell_weight

KINDS = ("unit", "t", "oddpair", "e1")


@dataclass(frozen=True, order=True)
class StandardClassLabel:
    kind: str
    q: int
    alpha: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == "unit" and self.q != 0:
            raise ValueError("unit labels have q = 0")
        if self.kind == "t" and self.q <= 0:
            raise ValueError("t labels have q > 0")

    def degree(self):
        if self.kind in ("unit", "t"):
            return 2 * self.q
        return 2 * self.q + 1

    def weight(self, sp):
        if self.kind in ("unit", "t"):
            return self.alpha - self.q * sp.ab
        if self.kind == "oddpair":
            return self.alpha - (self.q + 1) * sp.ab
        return self.alpha - sp.b - self.q * sp.ab  # e1

    def compact(self):
        return f"{self.kind}:q={self.q}:alpha={self.alpha}"

    @classmethod
    def parse(cls, text):
        parts = text.split(":")
        if len(parts) != 3 or not parts[1].startswith("q=") or not parts[2].startswith("alpha="):
            raise ValueError(f"bad class label {text!r}; expected kind:q=<q>:alpha=<alpha>")
        return cls(parts[0], int(parts[1][2:]), int(parts[2][6:]))


def representative(ctx, label):
    """The standard cocycle representing the label, as a Cochain."""
    field, sp = ctx.field, ctx.sp
    if label.kind in ("unit", "t"):
        return Cochain.basis(field, EMPTY, label.q, label.alpha)
    if label.kind == "oddpair":
        c = Cochain(field)
        c.add_term((E1, label.q, label.alpha - sp.m1), field.of_int(sp.b))
        c.add_term((E2, label.q, label.alpha - sp.m2), field.of_int(sp.a))
        return c
    return Cochain.basis(field, E1, label.q, label.alpha)  # e1


def _even_label(q, alpha):
    return StandardClassLabel("unit", 0, alpha) if q == 0 else StandardClassLabel("t", q, alpha)


def standard_basis(ctx, m, n):
    """Labels of the standard k-basis of the (m, n) piece of HH; at most one."""
    sp = ctx.sp
    if m < 0:
        return []
    if m % 2 == 0:
        q = m // 2
        alpha = n + q * sp.ab
        if not sp.contains(alpha):
            return []
        if q == 0:
            return [StandardClassLabel("unit", 0, alpha)]
        if ctx.case_ii:
            ok = not sp.contains(alpha - sp.m2)
        else:
            ok = not sp.contains(alpha - sp.m1) and not sp.contains(alpha - sp.m2)
        return [StandardClassLabel("t", q, alpha)] if ok else []
    q = (m - 1) // 2
    if ctx.case_ii:
        alpha = n + sp.b + q * sp.ab
        if not sp.contains(alpha):
            return []
        if q > 0 and sp.contains(alpha - sp.m2):
            return []
        return [StandardClassLabel("e1", q, alpha)]
    alpha = n + (q + 1) * sp.ab
    if not (sp.contains(alpha) and sp.contains(alpha - sp.m1)
            and sp.contains(alpha - sp.m2)):
        return []
    if q > 0 and sp.contains(alpha - sp.m1 - sp.m2):
        return []
    return [StandardClassLabel("oddpair", q, alpha)]


def standard_cocycles_kernel(ctx, m, n_min, n_max):
    """A spanning set of the kernel of the coboundary in degree m, restricted
    to weights in [n_min, n_max], as Cochains."""
    sp = ctx.sp
    out = []
    if m % 2 == 0:
        q = m // 2
        for n in range(n_min, n_max + 1):
            alpha = n + q * sp.ab
            if sp.contains(alpha):
                out.append(representative(ctx, _even_label(q, alpha)))
        if not ctx.case_ii or m == 0:
            return out
        # Case II also has the e1e2 cells in even degree, but their duals are
        # never cocycles; nothing else to add.
        return out
    q = (m - 1) // 2
    for n in range(n_min, n_max + 1):
        if ctx.case_ii:
            alpha = n + sp.b + q * sp.ab
            if sp.contains(alpha):
                out.append(Cochain.basis(ctx.field, E1, q, alpha))
        else:
            alpha = n + (q + 1) * sp.ab
            if (sp.contains(alpha) and sp.contains(alpha - sp.m1)
                    and sp.contains(alpha - sp.m2)):
                out.append(representative(ctx, StandardClassLabel("oddpair", q, alpha)))
    return out


def count_by_bidegree(ctx, max_degree, n_min, n_max):
    """Table (m, n) -> number of standard basis classes (zero entries omitted)."""
    table = {}
    for m in range(max_degree + 1):
        for n in range(n_min, n_max + 1):
            k = len(standard_basis(ctx, m, n))
            if k:
                table[(m, n)] = k
    return table


def reduce_to_standard(ctx, c):
    """Coordinates of a cocycle in the standard basis of its (degree, weight)
    component: solves c = sum(lambda_i * std_i) + coboundary(x) exactly.

    Returns a list of (scalar, StandardClassLabel) with nonzero scalars.
    """
    field, sp = ctx.field, ctx.sp
    if c.is_zero():
        return []
    if not coboundary(sp, field, c).is_zero():
        raise NotACocycle(c)
    m = c.degree()
    n = c.weight(sp)
    labels = standard_basis(ctx, m, n)
    cod = {key: i for i, key in enumerate(graded_keys(sp, m, n))}
    cols = []
    for lab in labels:
        rep = representative(ctx, lab)
        cols.append({cod[k]: v for k, v in rep.terms.items()})
    n_std = len(cols)
    if m >= 1:
        _, _, img_cols = _matrix_columns(sp, field, m - 1, n)
        cols.extend(img_cols)
    rhs = {cod[k]: v for k, v in c.terms.items()}
    x = linalg.solve_dense(field, cols, rhs, len(cod))
    if x is None:
        raise NotACocycle(c)
    return [(x[i], labels[i]) for i in range(n_std) if not field.is_zero(x[i])]
