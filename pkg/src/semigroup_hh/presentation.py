"""Presentations of the cohomology ring by generators and relations.

Case I (char k divides neither a nor b):
    k[X1, X2, Y1, Y2, T] modulo
        X1^b - X2^a,
        X1^(b-1) T,  X2^(a-1) T,  Y2 T,
        Y1^2,  Y2^2,  Y1 Y2,
        X1 Y2 - X2^(a-1) Y1,  X2 Y2 - X1^(b-1) Y1.

Case II (char k divides a, after swapping so the working pair puts the
divisible generator first):
    k[X1, X2, Y, T] modulo
        X1^b - X2^a,  X1^(b-1) T,
        Y^2 - X2^(a-2) T   when char k = 2 and 4 does not divide a,
        Y^2                otherwise.

Monomials are exponent tuples; every rewrite sends a monomial to at most one
monomial with coefficient one, so normal forms need no coefficient tracking
(all products of two odd generators are relations, killing the sign issue).
"""

from .classify import StandardClassLabel, count_by_bidegree
from .cup import cup_closed_form, cup_coords, cup_labels


class PresentedRing:
    """The presented graded-commutative ring for a context."""

    def __init__(self, ctx):
        self.ctx = ctx
        sp = ctx.sp
        self.a = sp.a
        self.b = sp.b
        self.case_ii = ctx.case_ii
        self.char2_special = ctx.char2_special
        if self.case_ii:
            self.generator_names = ("X1", "X2", "Y", "T")
            self.generator_labels = (
                StandardClassLabel("unit", 0, self.a),
                StandardClassLabel("unit", 0, self.b),
                StandardClassLabel("e1", 0, 0),
                StandardClassLabel("t", 1, 0),
            )
        else:
            self.generator_names = ("X1", "X2", "Y1", "Y2", "T")
            self.generator_labels = (
                StandardClassLabel("unit", 0, self.a),
                StandardClassLabel("unit", 0, self.b),
                StandardClassLabel("oddpair", 0, sp.ab),
                StandardClassLabel("oddpair", 0, sp.m1 + sp.m2),
                StandardClassLabel("t", 1, 0),
            )

    # --- gradings ---------------------------------------------------------

    def degree(self, mono):
        if self.case_ii:
            u, v, y, q = mono
            return y + 2 * q
        u, v, y1, y2, q = mono
        return y1 + y2 + 2 * q

    def weight(self, mono):
        a, b = self.a, self.b
        if self.case_ii:
            u, v, y, q = mono
            return u * a + v * b - y * b - q * a * b
        u, v, y1, y2, q = mono
        return u * a + v * b + y2 * (a * b - a - b) - q * a * b

    def format(self, mono):
        parts = []
        for name, e in zip(self.generator_names, mono):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    # --- rewriting to normal form ------------------------------------------

    def normal_form(self, mono):
        """Iterated rewriting by the leading terms; returns the normal
        monomial or None when the monomial reduces to zero."""
        a, b = self.a, self.b
        if self.case_ii:
            u, v, y, q = mono
            while True:
                if y >= 2:
                    if not self.char2_special:
                        return None
                    y -= 2
                    v += a - 2
                    q += 1
                    continue
                if q > 0 and u >= b - 1:
                    return None
                if q > 0 and v >= a:
                    return None
                if u >= b:
                    u -= b
                    v += a
                    continue
                return (u, v, y, q)
        u, v, y1, y2, q = mono
        while True:
            if y1 >= 2 or y2 >= 2 or (y1 >= 1 and y2 >= 1):
                return None
            if y2 == 1 and q > 0:
                return None
            if q > 0 and (u >= b - 1 or v >= a - 1):
                return None
            if y2 == 1 and u >= 1:
                u -= 1
                v += a - 1
                y1, y2 = 1, 0
                continue
            if y2 == 1 and v >= 1:
                u += b - 1
                v -= 1
                y1, y2 = 1, 0
                continue
            if v >= a:
                u += b
                v -= a
                continue
            return (u, v, y1, y2, q)

    def multiply(self, m1, m2):
        """Normal form of the product of two normal monomials (or None).
        Coefficients are always one: odd-odd products rewrite to zero."""
        return self.normal_form(tuple(x + y for x, y in zip(m1, m2)))

    # --- normal monomials in a window ---------------------------------------

    def monomial_basis(self, max_degree, n_min, n_max):
        """All normal monomials with degree <= max_degree and weight in
        [n_min, n_max], sorted."""
        a, b = self.a, self.b
        out = []

        def emit(mono):
            if self.degree(mono) <= max_degree and n_min <= self.weight(mono) <= n_max:
                out.append(mono)

        if self.case_ii:
            for y in range(2):
                # q = 0: u < b, v bounded by the weight window
                for u in range(b):
                    v = 0
                    while u * a + v * b - y * b <= n_max:
                        emit((u, v, y, 0))
                        v += 1
                # q > 0: u < b - 1, v < a
                for q in range(1, max_degree // 2 + 1):
                    for u in range(b - 1):
                        for v in range(a):
                            emit((u, v, y, q))
            return sorted(out)
        for y1, y2 in ((0, 0), (1, 0)):
            # q = 0: v < a, u bounded by the weight window
            for v in range(a):
                u = 0
                while u * a + v * b <= n_max:
                    emit((u, v, y1, y2, 0))
                    u += 1
            # q > 0: u < b - 1, v < a - 1, and no Y2
            for q in range(1, max_degree // 2 + 1):
                for u in range(b - 1):
                    for v in range(a - 1):
                        emit((u, v, y1, y2, q))
        emit((0, 0, 0, 1, 0))  # Y2
        return sorted(out)

    def monomial_label(self, mono):
        """Standard class label of the image of a normal monomial."""
        a, b = self.a, self.b
        sp = self.ctx.sp
        if self.case_ii:
            u, v, y, q = mono
            alpha = u * a + v * b
            if y == 1:
                return StandardClassLabel("e1", q, alpha)
            if q == 0:
                return StandardClassLabel("unit", 0, alpha)
            return StandardClassLabel("t", q, alpha)
        u, v, y1, y2, q = mono
        alpha = u * a + v * b
        if y2 == 1:
            return StandardClassLabel("oddpair", 0, sp.m1 + sp.m2)
        if y1 == 1:
            return StandardClassLabel("oddpair", q, alpha + sp.ab)
        if q == 0:
            return StandardClassLabel("unit", 0, alpha)
        return StandardClassLabel("t", q, alpha)

    # --- relations -----------------------------------------------------------

    def relations(self):
        """The defining relations as lists of (int coefficient, exponent tuple)."""
        a, b = self.a, self.b
        if self.case_ii:
            rels = [
                ("X1^b - X2^a", [(1, (b, 0, 0, 0)), (-1, (0, a, 0, 0))]),
                ("X1^(b-1)*T", [(1, (b - 1, 0, 0, 1))]),
            ]
            if self.char2_special:
                rels.append(("Y^2 - X2^(a-2)*T",
                             [(1, (0, 0, 2, 0)), (-1, (0, a - 2, 0, 1))]))
            else:
                rels.append(("Y^2", [(1, (0, 0, 2, 0))]))
            return rels
        return [
            ("X1^b - X2^a", [(1, (b, 0, 0, 0, 0)), (-1, (0, a, 0, 0, 0))]),
            ("X1^(b-1)*T", [(1, (b - 1, 0, 0, 0, 1))]),
            ("X2^(a-1)*T", [(1, (0, a - 1, 0, 0, 1))]),
            ("Y2*T", [(1, (0, 0, 0, 1, 1))]),
            ("Y1^2", [(1, (0, 0, 2, 0, 0))]),
            ("Y2^2", [(1, (0, 0, 0, 2, 0))]),
            ("Y1*Y2", [(1, (0, 0, 1, 1, 0))]),
            ("X1*Y2 - X2^(a-1)*Y1",
             [(1, (1, 0, 0, 1, 0)), (-1, (0, a - 1, 1, 0, 0))]),
            ("X2*Y2 - X1^(b-1)*Y1",
             [(1, (0, 1, 0, 1, 0)), (-1, (b - 1, 0, 1, 0, 0))]),
        ]

    def monomial_class_via_generators(self, mono, composed_lifts=False):
        """Image class of a raw monomial computed by repeated cup products of
        the generator images; independent of the rewriting system."""
        ctx = self.ctx
        field = ctx.field
        acc = {StandardClassLabel("unit", 0, 0): field.one}
        for label, e in zip(self.generator_labels, mono):
            gen = {label: field.one}
            for _ in range(e):
                acc = cup_coords(ctx, acc, gen, closed_form=not composed_lifts)
                if not acc:
                    return acc
        return acc


def iso_check(ctx, max_degree, n_min, n_max, composed_lift_pairs=0):
    """Cross-validation of the presentation against the cochain-level ring.

    Checks, in order:
      counts     -- normal monomials per (degree, weight) match the standard
                    basis counts;
      labels     -- each normal monomial maps to the standard class of its
                    bidegree;
      relations  -- every defining relation vanishes when evaluated on the
                    generator images (by cup products);
      products   -- structure constants agree: for normal monomials p, r in the
                    window with compatible total degree, the normal form of
                    p * r maps to the cup product of their classes.  The first
                    composed_lift_pairs pairs also recompute the cup product
                    through composed chain lifts rather than the closed form.
    """
    field = ctx.field
    ring = PresentedRing(ctx)
    report = {"ok": True}

    monos = ring.monomial_basis(max_degree, n_min, n_max)
    table = {}
    for mono in monos:
        key = (ring.degree(mono), ring.weight(mono))
        table[key] = table.get(key, 0) + 1
    expected = count_by_bidegree(ctx, max_degree, n_min, n_max)
    report["counts_match"] = table == expected
    if not report["counts_match"]:
        diff = sorted(set(table.items()) ^ set(expected.items()))
        report["ok"] = False
        report["first_count_mismatch"] = [list(map(int, k)) + [v] for k, v in diff[:3]]

    bad_label = None
    for mono in monos:
        lab = ring.monomial_label(mono)
        if (lab.degree(), lab.weight(ctx.sp)) != (ring.degree(mono), ring.weight(mono)):
            bad_label = mono
            break
    report["labels_match"] = bad_label is None
    if bad_label is not None:
        report["ok"] = False
        report["bad_label_monomial"] = ring.format(bad_label)

    bad_rel = None
    for name, terms in ring.relations():
        acc = {}
        for coef, mono in terms:
            cls = ring.monomial_class_via_generators(mono, composed_lifts=True)
            for lab, c in cls.items():
                val = field.mul(field.of_int(coef), c)
                cur = acc.get(lab)
                s = field.add(cur, val) if cur is not None else val
                if field.is_zero(s):
                    acc.pop(lab, None)
                else:
                    acc[lab] = s
        if acc:
            bad_rel = name
            break
    report["relations_vanish"] = bad_rel is None
    if bad_rel is not None:
        report["ok"] = False
        report["nonzero_relation"] = bad_rel

    bad_pair = None
    pairs_checked = 0
    lifted_checked = 0
    for p in monos:
        for r in monos:
            if ring.degree(p) + ring.degree(r) > max_degree:
                continue
            prod = ring.multiply(p, r)
            lhs = {} if prod is None else {ring.monomial_label(prod): field.one}
            lp, lr = ring.monomial_label(p), ring.monomial_label(r)
            rhs = {lab: c for c, lab in cup_closed_form(ctx, lp, lr)
                   if not field.is_zero(c)}
            if lhs != rhs:
                bad_pair = (p, r)
                break
            if lifted_checked < composed_lift_pairs:
                lifted = {lab: c for c, lab in cup_labels(ctx, lp, lr)}
                if lifted != rhs:
                    bad_pair = (p, r)
                    break
                lifted_checked += 1
            pairs_checked += 1
        if bad_pair:
            break
    report["products_match"] = bad_pair is None
    report["pairs_checked"] = pairs_checked
    if bad_pair is not None:
        report["ok"] = False
        report["bad_pair"] = [ring.format(bad_pair[0]), ring.format(bad_pair[1])]
    return report
