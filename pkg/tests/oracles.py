"""Slow reference implementations, independent of the package internals."""

from fractions import Fraction
from itertools import product

import sympy as sp


def naive_rank_mod_p(rows, p):
    """Row reduction on Python ints, one entry at a time."""
    m = [[int(x) % p for x in row] for row in rows]
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], p - 2, p)
        m[r] = [x * inv % p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[r])]
        r += 1
    return r


def rational_rank(rows):
    """Exact rank over Q by Fraction elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


def symbolic_monomials(shape, degree):
    """Multigraded monomials as sympy expressions, plus their variables per factor."""
    blocks, variables = [], []
    for i, (n, a) in enumerate(zip(shape, degree)):
        xs = sp.symbols(f"x{i}_0:{n + 1}")
        variables.append(xs)
        exps = [e for e in product(range(a + 1), repeat=n + 1) if sum(e) == a]
        exps.sort(reverse=True)
        blocks.append([sp.Mul(*(x**k for x, k in zip(xs, e))) for e in exps])
    monos = [sp.Mul(*combo) for combo in product(*blocks)]
    return monos, variables


def symbolic_conditions(shape, degree, points, multiplicity, p=None):
    """Rows by sympy differentiation and substitution, reduced mod p unless p is None."""
    monos, variables = symbolic_monomials(shape, degree)
    flat = [x for xs in variables for x in xs]
    rows = []
    for pt in points:
        subs = dict(zip(flat, [c for block in pt for c in block]))
        if multiplicity == 1:
            rows.append([_red(m.subs(subs), p) for m in monos])
        else:
            for v in flat:
                rows.append([_red(sp.diff(m, v).subs(subs), p) for m in monos])
    return rows


def _red(value, p):
    return int(value) if p is None else int(value) % p
