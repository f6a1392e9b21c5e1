"""Shared helpers for the test suite."""

import random
from itertools import combinations_with_replacement, product as iproduct

from tameprod.linalg import identity, matmul
from tameprod.polynomials import MultiPoly, Var, wvar, zvar
from tameprod.signatures import normalize


def random_signature(rng, max_entry=4, max_len=2, allow_empty=False):
    length = rng.randint(0 if allow_empty else 1, max_len)
    entries = sorted((rng.randint(1, max_entry) for _ in range(length)), reverse=True)
    return normalize(entries)


def random_unimodular(n, rng, shears=6, span=3):
    """Product of integer elementary shears: unimodular with modest entries."""
    m = identity(n)
    for _ in range(shears):
        a, b = rng.sample(range(n), 2)
        e = identity(n)
        e[a][b] = rng.randint(-span, span)
        m = matmul(m, e)
    return m


def random_poly(rng, nvars=3, nterms=3, max_exp=3, max_coeff=5, rows=2, cols=2):
    """Small random polynomial in mixed Z/W variables with int coefficients."""
    pool = [zvar(r, c) for r in range(1, rows + 1) for c in range(1, cols + 1)]
    pool += [wvar(r, c) for r in range(1, rows + 1) for c in range(1, cols + 1)]
    terms = {}
    for _ in range(rng.randint(1, nterms)):
        chosen = rng.sample(pool, rng.randint(1, min(nvars, len(pool))))
        mono = tuple(sorted((v, rng.randint(1, max_exp)) for v in chosen))
        c = rng.randint(-max_coeff, max_coeff)
        if c:
            terms[mono] = terms.get(mono, 0) + c
    return MultiPoly(terms)


def weight_monomials(matrix, row_degrees, cmax, row_offset=0):
    """All monomials in the given matrix with prescribed row degrees and
    columns 1..cmax; returned as single-term MultiPoly objects."""
    per_row = []
    for j, deg in enumerate(row_degrees, start=1):
        monos = []
        for combo in combinations_with_replacement(range(1, cmax + 1), deg):
            counts = {}
            for c in combo:
                v = Var(matrix, row_offset + j, c)
                counts[v] = counts.get(v, 0) + 1
            monos.append(tuple(sorted(counts.items())))
        per_row.append(monos)
    out = []
    for pick in iproduct(*per_row):
        merged = {}
        for mono in pick:
            for v, e in mono:
                merged[v] = merged.get(v, 0) + e
        out.append(MultiPoly({tuple(sorted(merged.items())): 1}))
    return out
