"""The Hochschild cochain complex Hom_k(F_m, A) and its exact linear algebra.

A cochain is a finitely supported map (I, q, alpha) -> scalar, standing for a
k-combination of the dual basis maps (e_I t^(q), s^alpha).  The coboundary
raises degree by one and preserves the weight alpha - w(I, q).  Every graded
piece (degree, weight) is a k-space of dimension at most two, so kernels and
ranks come from tiny dense solves.
"""

from . import linalg
from .resolution import E1, E2, E12, EMPTY, cell_degree, cell_weight, cells_of_degree


class NotACocycle(ValueError):
    pass


class Cochain:
    """Finitely supported map from cells e_I t^(q) to monomials of A."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms=None):
        self.field = field
        self.terms = {}
        if terms:
            for key, c in terms.items():
                self.add_term(key, c)

    @classmethod
    def basis(cls, field, I, q, alpha):
        c = cls(field)
        c.terms[(I, q, alpha)] = field.one
        return c

    def add_term(self, key, c):
        cur = self.terms.get(key)
        c = self.field.add(cur, c) if cur is not None else c
        if self.field.is_zero(c):
            self.terms.pop(key, None)
        else:
            self.terms[key] = c

    def __add__(self, other):
        out = Cochain(self.field, dict(self.terms))
        for key, c in other.terms.items():
            out.add_term(key, c)
        return out

    def __sub__(self, other):
        out = Cochain(self.field, dict(self.terms))
        for key, c in other.terms.items():
            out.add_term(key, self.field.neg(c))
        return out

    def scale(self, c):
        out = Cochain(self.field)
        if self.field.is_zero(c):
            return out
        for key, val in self.terms.items():
            out.terms[key] = self.field.mul(c, val)
        return out

    def is_zero(self):
        return not self.terms

    def degree(self):
        degs = {cell_degree(I, q) for (I, q, _) in self.terms}
        if len(degs) != 1:
            raise ValueError("cochain is zero or not homogeneous in degree")
        return degs.pop()

    def weight(self, sp):
        ws = {alpha - cell_weight(sp, I, q) for (I, q, alpha) in self.terms}
        if len(ws) != 1:
            raise ValueError("cochain is zero or not weight-homogeneous")
        return ws.pop()

    def __eq__(self, other):
        return self.field == other.field and self.terms == other.terms

    def __repr__(self):
        return f"Cochain({self.terms!r})"


def coboundary(sp, field, c):
    """The coboundary derived from composing with the resolution differential.

    The integer coefficients a and b are mapped into k, so the same formula
    covers both structural cases: when char k divides a the e_1 component dies.
    """
    a_k = field.of_int(sp.a)
    b_k = field.of_int(sp.b)
    out = Cochain(field)
    for (I, q, alpha), coef in c.terms.items():
        if I == EMPTY:
            continue
        if I == E1:
            out.add_term((EMPTY, q + 1, alpha + sp.m1), field.mul(a_k, coef))
        elif I == E2:
            out.add_term((EMPTY, q + 1, alpha + sp.m2),
                         field.neg(field.mul(b_k, coef)))
        else:  # E12
            out.add_term((E1, q + 1, alpha + sp.m2), field.mul(b_k, coef))
            out.add_term((E2, q + 1, alpha + sp.m1), field.mul(a_k, coef))
    return out


def evaluate(field, c, element):
    """Evaluate a cochain on a ResolutionElement via the A^e-action:
    (e_I t^(q), s^alpha) sends (s^g (x) s^d) e_I t^(q) to s^(g+d+alpha).
    Returns a dict weight -> scalar (an element of A)."""
    out = {}
    for (g, d, I, q), rc in element.terms.items():
        for (I2, q2, alpha), cc in c.terms.items():
            if I2 != I or q2 != q:
                continue
            w = g + d + alpha
            val = field.mul(rc, cc)
            cur = out.get(w)
            s = field.add(cur, val) if cur is not None else val
            if field.is_zero(s):
                out.pop(w, None)
            else:
                out[w] = s
    return out


def graded_keys(sp, m, n):
    """Basis keys (I, q, alpha) of the weight-n piece of the degree-m cochains."""
    keys = []
    for I, q in cells_of_degree(m):
        alpha = n + cell_weight(sp, I, q)
        if alpha >= 0 and sp.contains(alpha):
            keys.append((I, q, alpha))
    return keys


def _matrix_columns(sp, field, m, n):
    """Columns of the coboundary from the (m, n) piece to the (m+1, n) piece,
    as sparse dicts indexed by position in graded_keys(sp, m+1, n)."""
    dom = graded_keys(sp, m, n)
    cod = {key: i for i, key in enumerate(graded_keys(sp, m + 1, n))}
    cols = []
    for key in dom:
        img = coboundary(sp, field, Cochain.basis(field, *key))
        cols.append({cod[k]: c for k, c in img.terms.items()})
    return dom, cod, cols


def hh_dimension(sp, field, m, n):
    """dim of the weight-n piece of HH^m, from kernel and image ranks."""
    dom, _, cols = _matrix_columns(sp, field, m, n)
    rank_out = linalg.rank_sparse(field, cols)
    dim_ker = len(dom) - rank_out
    if m == 0:
        return dim_ker
    _, _, cols_in = _matrix_columns(sp, field, m - 1, n)
    return dim_ker - linalg.rank_sparse(field, cols_in)


def is_coboundary(sp, field, c):
    """Decide whether the cocycle c lies in the image of the coboundary;
    returns (flag, witness) with coboundary(witness) == c on success."""
    if c.is_zero():
        return True, Cochain(field)
    if not coboundary(sp, field, c).is_zero():
        raise NotACocycle(c)
    m = c.degree()
    n = c.weight(sp)
    if m == 0:
        return False, None
    dom, cod, cols = _matrix_columns(sp, field, m - 1, n)
    rhs = {cod[k]: v for k, v in c.terms.items()}
    x = linalg.solve_dense(field, cols, rhs, len(cod))
    if x is None:
        return False, None
    witness = Cochain(field)
    for key, coef in zip(dom, x):
        witness.add_term(key, coef)
    return True, witness
