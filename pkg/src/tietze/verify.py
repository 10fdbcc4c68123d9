"""Abelianization oracle: exponent matrix and integer Smith normal form.

Every Tietze move preserves the group, hence its abelianization; equal
abelian invariants are a necessary (not sufficient) condition for two
presentations to present the same group.  Python ints keep the reduction
exact despite coefficient growth.
"""

from __future__ import annotations

from .presentation import Presentation

IntMatrix = list[list[int]]


def exponent_matrix(p: Presentation) -> IntMatrix:
    """Row per relator, column per generator, entries are exponent sums."""
    rows = []
    for r in p.rel:
        row = [0] * p.d
        for s in r.word:
            row[abs(s) - 1] += 1 if s > 0 else -1
        rows.append(row)
    return rows


def smith_normal_form(matrix: IntMatrix) -> list[int]:
    """Nonzero elementary divisors d_1 | d_2 | ... of an integer matrix."""
    a = [row[:] for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    divisors: list[int] = []
    k = 0
    while True:
        pivot = None
        for i in range(k, rows):
            for j in range(k, cols):
                if a[i][j] != 0 and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        a[k], a[pi] = a[pi], a[k]
        for row in a:
            row[k], row[pj] = row[pj], row[k]
        while True:
            # clear column k with row operations
            dirty = False
            for i in range(k + 1, rows):
                if a[i][k] != 0:
                    q = a[i][k] // a[k][k]
                    for j in range(cols):
                        a[i][j] -= q * a[k][j]
                    if a[i][k] != 0:  # remainder becomes the smaller pivot
                        a[k], a[i] = a[i], a[k]
                        dirty = True
            if dirty:
                continue
            for j in range(k + 1, cols):
                if a[k][j] != 0:
                    q = a[k][j] // a[k][k]
                    for row in a:
                        row[j] -= q * row[k]
                    if a[k][j] != 0:
                        for row in a:
                            row[k], row[j] = row[j], row[k]
                        dirty = True
            if not dirty:
                break
        # pivot must divide every remaining entry for the divisor chain
        offender = None
        for i in range(k + 1, rows):
            for j in range(k + 1, cols):
                if a[i][j] % a[k][k] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            for j in range(cols):
                a[k][j] += a[offender][j]
            continue
        divisors.append(abs(a[k][k]))
        k += 1
    return divisors


def abelian_invariants(p: Presentation) -> tuple[list[int], int]:
    """(torsion coefficients with 1s removed, free rank)."""
    divisors = smith_normal_form(exponent_matrix(p))
    torsion = [d for d in divisors if d != 1]
    return torsion, p.d - len(divisors)
