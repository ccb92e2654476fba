"""The free resolution of A over its enveloping algebra.

Elements of the resolution are finitely supported maps

    (alpha, beta, I, q)  ->  scalar

standing for sums of terms  c * (s^alpha (x) s^beta) * e_I t^(q), where
I is a subset of {1, 2} stored as a sorted tuple and the homological degree of
a cell is |I| + 2q.  The differential, the augmentation and the contracting
homotopy built from the Morse matching all live here, together with the
symbolic sweeps that certify them.
"""

from .semigroup import SemigroupPair  # noqa: F401  (re-exported for callers)

EMPTY = ()
E1 = (1,)
E2 = (2,)
E12 = (1, 2)

ALL_I = (EMPTY, E1, E2, E12)


class DegreeZero(ValueError):
    """Differential requested on a degree-0 element."""


def cell_degree(I, q):
    return len(I) + 2 * q


def cell_weight(sp, I, q):
    w = q * sp.ab
    if 1 in I:
        w += sp.b
    if 2 in I:
        w += sp.a
    return w


def cells_of_degree(m):
    """The (I, q) shapes in homological degree m; there are at most two."""
    if m < 0:
        return []
    if m % 2 == 0:
        shapes = [(EMPTY, m // 2)]
        if m >= 2:
            shapes.append((E12, (m - 2) // 2))
        return shapes
    return [(E1, (m - 1) // 2), (E2, (m - 1) // 2)]


class ResolutionElement:
    """A k-combination of basis terms (s^alpha (x) s^beta) e_I t^(q)."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms=None):
        self.field = field
        self.terms = {}
        if terms:
            for key, c in terms.items():
                self.add_term(key, c)

    @classmethod
    def basis(cls, field, alpha, beta, I, q):
        el = cls(field)
        el.terms[(alpha, beta, I, q)] = field.one
        return el

    def add_term(self, key, c):
        cur = self.terms.get(key)
        c = self.field.add(cur, c) if cur is not None else c
        if self.field.is_zero(c):
            self.terms.pop(key, None)
        else:
            self.terms[key] = c

    def __add__(self, other):
        out = ResolutionElement(self.field, dict(self.terms))
        for key, c in other.terms.items():
            out.add_term(key, c)
        return out

    def __sub__(self, other):
        out = ResolutionElement(self.field, dict(self.terms))
        for key, c in other.terms.items():
            out.add_term(key, self.field.neg(c))
        return out

    def scale(self, c):
        out = ResolutionElement(self.field)
        if self.field.is_zero(c):
            return out
        for key, val in self.terms.items():
            out.terms[key] = self.field.mul(c, val)
        return out

    def shift(self, gamma, delta):
        """Multiply by s^gamma (x) s^delta."""
        out = ResolutionElement(self.field)
        for (alpha, beta, I, q), c in self.terms.items():
            out.add_term((alpha + gamma, beta + delta, I, q), c)
        return out

    def is_zero(self):
        return not self.terms

    def degree(self):
        degs = {cell_degree(I, q) for (_, _, I, q) in self.terms}
        if len(degs) != 1:
            raise ValueError("element is zero or not homogeneous in degree")
        return degs.pop()

    def weight(self, sp):
        ws = {a + b + cell_weight(sp, I, q) for (a, b, I, q) in self.terms}
        if len(ws) != 1:
            raise ValueError("element is zero or not weight-homogeneous")
        return ws.pop()

    def __eq__(self, other):
        return self.field == other.field and self.terms == other.terms

    def __repr__(self):
        return f"ResolutionElement({self.terms!r})"


def differential(sp, x):
    """The A^e-linear differential; lowers homological degree by one and
    preserves weight.  Products in A reduce to the basis s^gamma, gamma in S."""
    field = x.field
    a, b = sp.a, sp.b
    m = x.degree()
    if m == 0:
        raise DegreeZero("differential undefined in degree 0")
    out = ResolutionElement(field)
    for (al, be, I, q), c in x.terms.items():
        if I == EMPTY:
            # d(t) t^(q-1)
            for i in range(a):
                out.add_term((al + i * b, be + (a - 1 - i) * b, E1, q - 1), c)
            for i in range(b):
                out.add_term((al + i * a, be + (b - 1 - i) * a, E2, q - 1),
                             field.neg(c))
        elif I == E1:
            out.add_term((al + b, be, EMPTY, q), c)
            out.add_term((al, be + b, EMPTY, q), field.neg(c))
            if q > 0:
                # -e1 d(t) t^(q-1): only the e2 part of d(t) survives
                for i in range(b):
                    out.add_term((al + i * a, be + (b - 1 - i) * a, E12, q - 1), c)
        elif I == E2:
            out.add_term((al + a, be, EMPTY, q), c)
            out.add_term((al, be + a, EMPTY, q), field.neg(c))
            if q > 0:
                for i in range(a):
                    out.add_term((al + i * b, be + (a - 1 - i) * b, E12, q - 1), c)
        else:  # E12
            out.add_term((al + b, be, E2, q), c)
            out.add_term((al, be + b, E2, q), field.neg(c))
            out.add_term((al + a, be, E1, q), field.neg(c))
            out.add_term((al, be + a, E1, q), c)
    return out


def augmentation(x):
    """F_0 -> A, (s^alpha (x) s^beta) -> s^(alpha+beta), as a dict weight -> scalar."""
    field = x.field
    out = {}
    for (al, be, I, q), c in x.terms.items():
        if I != EMPTY or q != 0:
            raise ValueError("augmentation needs a degree-0 element")
        g = al + be
        cur = out.get(g)
        s = field.add(cur, c) if cur is not None else c
        if field.is_zero(s):
            out.pop(g, None)
        else:
            out[g] = s
    return out


def contracting_homotopy(sp, x):
    """The degree +1 homotopy; the left tensor factor of each term is first
    decomposed as x1^u x2^v (u >= 0, 0 <= v < b), the right factor passes
    through untouched."""
    field = x.field
    a, b = sp.a, sp.b
    out = ResolutionElement(field)
    for (al, be, I, q), c in x.terms.items():
        if 1 in I:
            continue
        u, v = sp.monomial_exponents(al)
        if I == EMPTY:
            for i in range(u):
                out.add_term((i * b + v * a, be + (u - 1 - i) * b, E1, q), c)
            for i in range(v):
                out.add_term((i * a, be + u * b + (v - 1 - i) * a, E2, q), c)
        else:  # E2
            for i in range(u):
                out.add_term((i * b + v * a, be + (u - 1 - i) * b, E12, q), c)
            if v == b - 1:
                out.add_term((0, be + u * b, EMPTY, q + 1), field.neg(c))
    return out


def basis_cells(sp, max_degree, max_weight):
    """All (u, v, I, q) indices of the k (x) A cell basis x1^u x2^v (x) 1 e_I t^(q)
    with degree <= max_degree and weight <= max_weight."""
    out = []
    for m in range(max_degree + 1):
        for I, q in cells_of_degree(m):
            base = cell_weight(sp, I, q)
            if base > max_weight:
                continue
            for v in range(sp.b):
                if base + v * sp.a > max_weight:
                    break
                u = 0
                while base + u * sp.b + v * sp.a <= max_weight:
                    out.append((u, v, I, q))
                    u += 1
    return out


def _as_element(field, sp, u, v, I, q):
    return ResolutionElement.basis(field, u * sp.b + v * sp.a, 0, I, q)


def verify_homotopy_identity(sp, field, degree, max_weight):
    """Check d(phi(x)) + phi(d(x)) = x on every windowed basis cell of the given
    degree (and the degree-0 normalization d(phi(x)) = x - 1 (x) eps(x)).

    Returns a dict report with 'ok' and the first counterexample, if any.
    """
    checked = 0
    for (u, v, I, q) in basis_cells(sp, degree, max_weight):
        if cell_degree(I, q) != degree:
            continue
        x = _as_element(field, sp, u, v, I, q)
        phix = contracting_homotopy(sp, x)
        dphix = ResolutionElement(field) if phix.is_zero() else differential(sp, phix)
        if degree == 0:
            lhs = dphix
            rhs = x - ResolutionElement.basis(field, 0, u * sp.b + v * sp.a, EMPTY, 0)
        else:
            lhs = dphix + contracting_homotopy(sp, differential(sp, x))
            rhs = x
        if lhs != rhs:
            return {"ok": False, "checked": checked,
                    "counterexample": {"u": u, "v": v, "I": list(I), "q": q}}
        checked += 1
    return {"ok": True, "checked": checked, "counterexample": None}


def matched_partner(sp, u, v, I, q):
    """The higher-degree partner of a cell under the Morse matching, or None.

    The matching pairs, for u > 0:
        x1^u x2^v t^(q)        <->  x1^(u-1) x2^v e1 t^(q)
        x1^u x2^v e2 t^(q)     <->  x1^(u-1) x2^v e1e2 t^(q)
    and for u = 0:
        x2^v t^(q)       <-> x2^(v-1) e2 t^(q)   (0 < v < b)
        x2^(b-1) e2 t^(q) <-> t^(q+1)
    Returned only for the lower-degree member; higher members return None.
    """
    if I == EMPTY:
        if u > 0:
            return (u - 1, v, E1, q)
        if v > 0:
            return (0, v - 1, E2, q)
        return None
    if I == E2:
        if u > 0:
            return (u - 1, v, E12, q)
        if v == sp.b - 1:
            return (0, 0, EMPTY, q + 1)
        return None
    return None


def _components(sp, element):
    """Decompose an element's terms into k (x) A cell components.

    Yields ((u, v, I, q), beta, coeff): the component at the basis cell
    x1^u x2^v (x) 1 e_I t^(q) multiplied on the right by s^beta.
    """
    for (al, be, I, q), c in element.terms.items():
        u, v = sp.monomial_exponents(al)
        yield (u, v, I, q), be, c


def morse_acyclicity_check(sp, field, max_degree, max_weight):
    """Build the matched digraph on the windowed cells and certify it is a DAG,
    and that each matched differential component is a unit times a basis cell."""
    cells = basis_cells(sp, max_degree + 1, max_weight)
    cellset = set(cells)
    edges = {cell: set() for cell in cells}
    matched = {}
    for cell in cells:
        partner = matched_partner(sp, *cell)
        if partner is not None:
            matched[cell] = partner
            if partner in cellset:
                matched[partner] = cell

    unit_failures = []
    for cell in cells:
        u, v, I, q = cell
        if cell_degree(I, q) == 0:
            continue
        d = differential(sp, _as_element(field, sp, u, v, I, q))
        partner = matched.get(cell)
        partner_seen = False
        for target, beta, coeff in _components(sp, d):
            if target == partner:
                # matched component must be an isomorphism: unit coefficient,
                # trivial right factor, and must appear exactly once
                if beta != 0 or field.is_zero(coeff) or partner_seen:
                    unit_failures.append({"cell": cell, "partner": partner})
                partner_seen = True
                continue
            if target in edges and cell in edges:
                edges[cell].add(target)
    # reverse matched edges: for each matched pair (low, high) replace the
    # d-edge high -> low by low -> high
    for low, high in list(matched.items()):
        if cell_degree(low[2], low[3]) + 1 != cell_degree(high[2], high[3]):
            continue
        if low in edges and high in edges:
            edges[high].discard(low)
            edges[low].add(high)

    order, cyclic = _topological_order(edges)
    return {
        "ok": not cyclic and not unit_failures,
        "acyclic": not cyclic,
        "vertices": len(cells),
        "unit_failures": unit_failures,
    }


def _topological_order(edges):
    indeg = {v: 0 for v in edges}
    for v, outs in edges.items():
        for w in outs:
            indeg[w] += 1
    stack = [v for v, d in indeg.items() if d == 0]
    order = []
    while stack:
        v = stack.pop()
        order.append(v)
        for w in edges[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return order, len(order) != len(edges)


def verify_d_squared(sp, field, max_degree, max_weight):
    """d o d = 0 on every windowed basis cell; eps o d = 0 in degree 1."""
    checked = 0
    for (u, v, I, q) in basis_cells(sp, max_degree, max_weight):
        m = cell_degree(I, q)
        if m == 0:
            continue
        x = _as_element(field, sp, u, v, I, q)
        dx = differential(sp, x)
        if m >= 2:
            if not differential(sp, dx).is_zero():
                return {"ok": False, "checked": checked,
                        "counterexample": {"u": u, "v": v, "I": list(I), "q": q}}
        else:
            if augmentation(dx):
                return {"ok": False, "checked": checked,
                        "counterexample": {"u": u, "v": v, "I": list(I), "q": q}}
        checked += 1
    return {"ok": True, "checked": checked, "counterexample": None}
