"""Exact Gaussian elimination over the coefficient field.

Dense routines serve the tiny per-(degree, weight) blocks of the cochain
complex; the sparse column routine serves the bar-complex oracle, whose
matrices are large but very sparse.
"""


def rank_dense(field, rows):
    """Rank of a dense matrix given as a list of row lists."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, len(rows)):
            if not field.is_zero(rows[r][col]):
                pivot = r
                break
        if pivot is None:
            continue
        rows[row], rows[pivot] = rows[pivot], rows[row]
        inv = field.inv(rows[row][col])
        rows[row] = [field.mul(inv, x) for x in rows[row]]
        for r in range(len(rows)):
            if r != row and not field.is_zero(rows[r][col]):
                f = rows[r][col]
                rows[r] = [field.sub(x, field.mul(f, y))
                           for x, y in zip(rows[r], rows[row])]
        row += 1
        rank += 1
        if row == len(rows):
            break
    return rank


def solve_dense(field, columns, rhs, nrows):
    """Solve sum_j x_j * columns[j] = rhs.

    columns and rhs are dicts {row_index: scalar}; returns a list of
    coefficients (one per column) or None when the system is inconsistent.
    """
    ncols = len(columns)
    aug = []
    for i in range(nrows):
        row = [col.get(i, field.zero) for col in columns]
        row.append(rhs.get(i, field.zero))
        aug.append(row)
    pivots = []
    row = 0
    for col in range(ncols):
        pivot = None
        for r in range(row, nrows):
            if not field.is_zero(aug[r][col]):
                pivot = r
                break
        if pivot is None:
            continue
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv = field.inv(aug[row][col])
        aug[row] = [field.mul(inv, x) for x in aug[row]]
        for r in range(nrows):
            if r != row and not field.is_zero(aug[r][col]):
                f = aug[r][col]
                aug[r] = [field.sub(x, field.mul(f, y))
                          for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
        if row == nrows:
            break
    # inconsistency: a zero row with nonzero rhs
    for r in range(row, nrows):
        if not field.is_zero(aug[r][ncols]):
            return None
    x = [field.zero] * ncols
    for r, col in enumerate(pivots):
        x[col] = aug[r][ncols]
    return x


def rank_sparse(field, vectors):
    """Rank of a matrix given as a list of sparse vectors {index: scalar}.

    Greedy min-fill (Markowitz-style) pivoting: always eliminate in the
    position with the smallest support, which keeps fill-in negligible on the
    incidence-like matrices this package produces.
    """
    rows = {i: dict(r) for i, r in enumerate(vectors) if r}
    cols = {}
    for i, r in rows.items():
        for j in r:
            cols.setdefault(j, set()).add(i)
    rank = 0
    while rows:
        j = min(cols, key=lambda c: len(cols[c]))
        i = min(cols[j], key=lambda r: len(rows[r]))
        piv = rows.pop(i)
        rank += 1
        inv = field.inv(piv[j])
        piv = {c: field.mul(inv, v) for c, v in piv.items()}
        for c in piv:
            cols[c].discard(i)
            if not cols[c]:
                del cols[c]
        for r in list(cols.get(j, ())):
            row = rows[r]
            factor = row[j]
            for c, v in piv.items():
                cur = row.get(c)
                if cur is None:
                    nv = field.neg(field.mul(factor, v))
                else:
                    nv = field.sub(cur, field.mul(factor, v))
                if field.is_zero(nv):
                    if cur is not None:
                        del row[c]
                        cols[c].discard(r)
                        if not cols[c]:
                            del cols[c]
                elif cur is None:
                    cols.setdefault(c, set()).add(r)
                    row[c] = nv
                else:
                    row[c] = nv
            if not row:
                del rows[r]
    return rank
