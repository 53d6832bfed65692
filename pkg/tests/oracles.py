"""Independent reference computations, deliberately naive.

None of these reuse the corner lists of ``fddof.lp``.
"""

from fractions import Fraction
from itertools import combinations

import numpy as np


def grid_max_achievable(m1, m2, n1, n2):
    """Max of N1*l1 + N2*l2 over the rational grid with step 1/(4*N1*N2)."""
    d = 4 * n1 * n2
    i = np.arange(d + 1)[:, None]
    j = np.arange(d + 1)[None, :]
    ok = (i + j <= d) & (n1 * i <= m1 * d) & (n2 * j <= m2 * d)
    obj = np.where(ok, n1 * i + n2 * j, -1)
    return Fraction(int(obj.max()), d)


def grid_max_converse(m1, m2, n1, n2):
    """Max of x + y over the rational grid with step 1/(4*N1*N2)."""
    d = 4 * n1 * n2
    c1, c2 = min(m1, n1), min(m2, n2)
    x = np.arange(c1 * d + 1)[:, None]
    y = np.arange(c2 * d + 1)[None, :]
    ok = n2 * x + n1 * y <= n1 * n2 * d
    obj = np.where(ok, x + y, -1)
    return Fraction(int(obj.max()), d)


def _halfplanes(program, m1, m2, n1, n2):
    """Constraints a*x + b*y <= c as integer triples."""
    if program == "achievable":
        return [(-1, 0, 0), (0, -1, 0), (1, 1, 1), (n1, 0, m1), (0, n2, m2)]
    return [
        (-1, 0, 0),
        (0, -1, 0),
        (1, 0, min(m1, n1)),
        (0, 1, min(m2, n2)),
        (n2, n1, n1 * n2),
    ]


def vertices_by_line_pairs(program, m1, m2, n1, n2):
    """Feasible intersections of every pair of constraint lines (Cramer's rule)."""
    hs = _halfplanes(program, m1, m2, n1, n2)
    out = set()
    for (a1, b1, c1), (a2, b2, c2) in combinations(hs, 2):
        det = a1 * b2 - a2 * b1
        if det == 0:
            continue
        p = (Fraction(c1 * b2 - c2 * b1, det), Fraction(a1 * c2 - a2 * c1, det))
        if all(a * p[0] + b * p[1] <= c for a, b, c in hs):
            out.add(p)
    return out


def min_form_direct(m1, m2, n1, n2):
    """The min-form sum DoF written out inline."""
    a1 = Fraction(m1) + Fraction(n2 * (n1 - m1), n1)
    a2 = Fraction(m2) + Fraction(n1 * (n2 - m2), n2)
    return min(Fraction(m1 + m2), Fraction(max(n1, n2)), max(a1, a2))
