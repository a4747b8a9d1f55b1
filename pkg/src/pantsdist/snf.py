"""Integer Smith normal form, for homology invariant factors."""

from __future__ import annotations


def smith_normal_form(rows, ncols):
    """Diagonal invariant factors d1 | d2 | ... of an integer matrix.

    rows: list of length-ncols integer rows.  Returns the non-negative
    diagonal entries (length min(nrows, ncols) truncated to the nonzero
    rank part is NOT done here; trailing zeros are included up to the
    diagonal length).
    """
    m = [list(r) for r in rows]
    nr = len(m)
    nc = ncols
    for r in m:
        if len(r) != nc:
            raise ValueError("ragged matrix")
    diag = []
    top = 0
    left = 0
    while top < nr and left < nc:
        # find a pivot
        pivot = None
        best = None
        for i in range(top, nr):
            for j in range(left, nc):
                v = abs(m[i][j])
                if v and (best is None or v < best):
                    best = v
                    pivot = (i, j)
        if pivot is None:
            break
        i0, j0 = pivot
        m[top], m[i0] = m[i0], m[top]
        for row in m:
            row[left], row[j0] = row[j0], row[left]
        # clear the row and column; restart if a remainder appears
        while True:
            dirty = False
            for i in range(top + 1, nr):
                if m[i][left]:
                    q = m[i][left] // m[top][left]
                    for j in range(left, nc):
                        m[i][j] -= q * m[top][j]
                    if m[i][left]:
                        m[top], m[i] = m[i], m[top]
                        dirty = True
            for j in range(left + 1, nc):
                if m[top][j]:
                    q = m[top][j] // m[top][left]
                    for i in range(top, nr):
                        m[i][j] -= q * m[i][left]
                    if m[top][j]:
                        for i in range(top, nr):
                            m[i][left], m[i][j] = m[i][j], m[i][left]
                        dirty = True
            if not dirty:
                break
        # ensure the pivot divides the rest of the block
        d = abs(m[top][left])
        fixed = True
        for i in range(top + 1, nr):
            for j in range(left + 1, nc):
                if m[i][j] % d:
                    for jj in range(left, nc):
                        m[top][jj] += m[i][jj]
                    fixed = False
                    break
            if not fixed:
                break
        if not fixed:
            continue
        diag.append(d)
        top += 1
        left += 1
    while len(diag) < min(nr, nc):
        diag.append(0)
    return diag


def invariant_factors(rows, ncols):
    """Invariant factors of Z^ncols modulo the row span: the torsion
    factors greater than one followed by one 0 per free rank."""
    diag = [d for d in smith_normal_form(rows, ncols) if d != 0]
    rank = len(diag)
    out = [d for d in diag if d > 1]
    out.extend([0] * (ncols - rank))
    return out
