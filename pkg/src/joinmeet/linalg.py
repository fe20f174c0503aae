"""Small exact linear algebra: row reduction over the coefficient field.

Used for degree-1 span comparisons (linear parts of ideals are tiny, at most
n x n with n = number of lattice elements), never for anything large.
"""

from __future__ import annotations


def rref(rows):
    """Reduced row echelon form of a list of coefficient rows.

    Returns the nonzero rows, pivots scaled to 1, zeros above and below each
    pivot, sorted by pivot column.  The result is a canonical basis of the row
    space, so two row spaces are equal iff their rrefs are equal.
    """
    mat = [list(r) for r in rows]
    if not mat:
        return []
    ncols = len(mat[0])
    pivot_row = 0
    for col in range(ncols):
        sel = None
        for r in range(pivot_row, len(mat)):
            if mat[r][col]:
                sel = r
                break
        if sel is None:
            continue
        mat[pivot_row], mat[sel] = mat[sel], mat[pivot_row]
        inv = mat[pivot_row][col]
        mat[pivot_row] = [v / inv for v in mat[pivot_row]]
        for r in range(len(mat)):
            if r != pivot_row and mat[r][col]:
                factor = mat[r][col]
                mat[r] = [a - factor * b for a, b in zip(mat[r], mat[pivot_row])]
        pivot_row += 1
        if pivot_row == len(mat):
            break
    return [row for row in mat[:pivot_row]]


def rank(rows):
    return len(rref(rows))


def in_row_space(rows, vec):
    """Whether vec lies in the row space of rows."""
    return rank(list(rows) + [list(vec)]) == rank(rows)


def row_space_contains(big, small):
    """Whether every row of small lies in the row space of big."""
    r = rref(big)
    return all(in_row_space(r, v) for v in small)


def row_space_equal(a, b):
    return rref(a) == rref(b)
