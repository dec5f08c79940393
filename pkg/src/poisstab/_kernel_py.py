"""Fraction-free integer row echelon, pure-Python kernel.

The compiled twin (_kernel.pyx) implements the identical algorithm and must
produce bit-identical output; linalg selects whichever is importable.
"""

from math import gcd

BACKEND = "python"


def echelon(rows, ncols):
    """Reduce integer rows to echelon form under first-nonzero pivoting.

    Rows are processed in order; each is reduced against the pivots chosen
    so far, and its leading nonzero column (if any) becomes the next pivot.
    This realizes lexicographically-first pivot selection: smallest row,
    then smallest column.

    Returns (pivots, ech).  pivots[k] is the leading column of ech[k];
    ech[k] is zero at pivots[j] for every j < k, content-normalized, with
    a positive leading entry.  Input rows are not mutated.
    """
    pivots = []
    ech = []
    for row in rows:
        r = list(row)
        for k in range(len(pivots)):
            c = pivots[k]
            b = r[c]
            if not b:
                continue
            p = ech[k]
            a = p[c]
            g = 0
            for j in range(ncols):
                pj = p[j]
                rj = r[j]
                if pj:
                    rj = a * rj - b * pj
                    r[j] = rj
                elif rj:
                    rj = a * rj
                    r[j] = rj
                if rj:
                    g = gcd(g, rj)
            if g > 1:
                for j in range(ncols):
                    if r[j]:
                        r[j] //= g
        lead = -1
        for j in range(ncols):
            if r[j]:
                lead = j
                break
        if lead < 0:
            continue
        g = 0
        for j in range(lead, ncols):
            if r[j]:
                g = gcd(g, r[j])
        if r[lead] < 0:
            g = -g
        if g != 1:
            for j in range(lead, ncols):
                if r[j]:
                    r[j] //= g
        pivots.append(lead)
        ech.append(r)
    return pivots, ech
