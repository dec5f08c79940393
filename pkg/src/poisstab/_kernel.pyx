# cython: language_level=3
"""Fraction-free integer row echelon, compiled kernel.

Same algorithm as _kernel_py, loop machinery compiled; output is
bit-identical.  Matrix entries stay Python ints (arbitrary precision).
"""

from math import gcd

BACKEND = "cython"


def echelon(rows, ncols):
    """Reduce integer rows to echelon form under first-nonzero pivoting.

    See _kernel_py.echelon for the contract.
    """
    cdef Py_ssize_t n = ncols
    cdef Py_ssize_t j, k, c, lead, npiv
    cdef list pivots = []
    cdef list ech = []
    cdef list r, p
    cdef object a, b, g, rj, pj
    for row in rows:
        r = list(row)
        npiv = len(pivots)
        for k in range(npiv):
            c = <Py_ssize_t> pivots[k]
            b = r[c]
            if not b:
                continue
            p = <list> ech[k]
            a = p[c]
            g = 0
            for j in range(n):
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
                for j in range(n):
                    if r[j]:
                        r[j] = r[j] // g
        lead = -1
        for j in range(n):
            if r[j]:
                lead = j
                break
        if lead < 0:
            continue
        g = 0
        for j in range(lead, n):
            if r[j]:
                g = gcd(g, r[j])
        if r[lead] < 0:
            g = -g
        if g != 1:
            for j in range(lead, n):
                if r[j]:
                    r[j] = r[j] // g
        pivots.append(lead)
        ech.append(r)
    return pivots, ech
