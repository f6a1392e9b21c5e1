"""Dual (contragredient) labels realized by index reversal.

The dual of the representation labeled m is labeled by the negated,
reversed tuple; its lowest-weight model in the W variables is obtained
from the usual highest-weight vector by the double reversal of rows and
columns, which on labeled entries reduces to renaming Z[i,j] -> W[i,j].
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import RankTooSmall
from .polynomials import MultiPoly, Var, zvar
from .signatures import Signature, normalize


@dataclass(frozen=True)
class ReversalMatrix:
    """The anti-diagonal permutation s with s = s^{-1} = s^T."""

    size: int

    def entry(self, i: int, j: int) -> int:
        return 1 if i + j == self.size + 1 else 0

    @property
    def rows(self):
        n = self.size
        return [[self.entry(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)]

    def apply_index(self, i: int) -> int:
        return self.size + 1 - i


def reversal(k: int):
    return ReversalMatrix(k).rows


def _perm_sign(p) -> int:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inv % 2 else 1


def _minor_det(rows, cols) -> MultiPoly:
    """Determinant of the Z submatrix on the given 1-based rows/columns."""
    n = len(rows)
    terms: dict = {}
    for sigma in permutations(range(n)):
        mono = tuple(sorted((zvar(rows[i], cols[sigma[i]]), 1) for i in range(n)))
        terms[mono] = terms.get(mono, 0) + _perm_sign(sigma)
    return MultiPoly(terms)


def highest_weight_vector(m: Signature, row_offset: int = 0, k: int | None = None) -> MultiPoly:
    """Product of powers of leading principal minors realizing weight m.

    Uses Z rows row_offset+1 .. row_offset+len(m) and columns 1..len(m);
    the i-th leading minor enters with exponent m_i - m_{i+1}.
    """
    l = m.length
    if k is None:
        k = l
    if k < l:
        raise RankTooSmall(f"k={k} below length of {m}")
    if m.entries and m.entries[-1] < 0:
        raise RankTooSmall(f"highest weight vectors need nonnegative labels, got {m}")
    poly = MultiPoly.const(1)
    for i in range(1, l + 1):
        e = m.entries[i - 1] - (m.entries[i] if i < l else 0)
        if e:
            rows = [row_offset + r for r in range(1, i + 1)]
            cols = list(range(1, i + 1))
            poly = poly * (_minor_det(rows, cols) ** e)
    return poly


def lowest_weight_vector_check(m: Signature, q: int) -> MultiPoly:
    """Lowest-weight model of the dual of m inside the W variables.

    The double reversal (rows and columns) cancels on labeled entries,
    so this is the highest-weight vector with Z renamed to W.
    """
    if m.length > q:
        raise RankTooSmall(f"q={q} below length of {m}")
    f = highest_weight_vector(m, 0, q)
    return f.rename_vars(lambda v: Var("W", v.row, v.col))


def negate_signature(m: Signature) -> Signature:
    """Label of the dual: entries negated and reversed."""
    return normalize(sorted((-e for e in m.entries), reverse=True))
