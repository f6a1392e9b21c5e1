"""Tensor product decomposition via simple and determinant multipliers.

A simple multiplier of order a adds a total of a boxes to a signature,
at most s_i = beta_i - beta_{i+1} of them in row i+1 (the first row takes
any number).  A compound multiplier for a signature alpha is the l x l
determinant with (i, j) entry the simple multiplier of order
alpha_i - i + j, expanded over permutations with sign and applied
factor by factor (simple multipliers commute).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

from .errors import EmptyProduct, NotDominant, RankTooSmall
from .signatures import Signature, SignedSpectrum


def _trimmed(entries) -> Signature:
    t = tuple(entries)
    while t and t[-1] == 0:
        t = t[:-1]
    return Signature(t)


def _compositions(total, k, caps):
    """Weak compositions (nu_1..nu_k) of total with nu_{i+1} <= caps[i-1]."""
    if k == 0:
        if total == 0:
            yield ()
        return

    def rec(i, remaining, prefix):
        if i == k:
            if remaining == 0:
                yield prefix
            return
        hi = remaining if i == 0 else min(remaining, caps[i - 1])
        for v in range(hi, -1, -1):
            yield from rec(i + 1, remaining - v, prefix + (v,))

    yield from rec(0, total, ())


def _apply_simple(order, beta: Signature, k: int):
    """Yield the signatures produced by one simple multiplier (each once)."""
    if order < 0:
        return
    b = beta.pad(k)
    caps = [b[i] - b[i + 1] for i in range(k - 1)]
    for nu in _compositions(order, k, caps):
        yield _trimmed(b[i] + nu[i] for i in range(k))


@lru_cache(maxsize=None)
def simple_multiplier(order: int, beta: Signature, k: int) -> SignedSpectrum:
    """Spectrum of the order-a simple multiplier applied to beta at rank k."""
    if k < beta.length:
        raise RankTooSmall(f"k={k} below length of {beta}")
    counts: dict[Signature, int] = {}
    for out in _apply_simple(order, beta, k):
        counts[out] = counts.get(out, 0) + 1
    return SignedSpectrum(counts)


def _perm_sign(p) -> int:
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inv % 2 else 1


@lru_cache(maxsize=None)
def compound_multiplier(alpha: Signature, beta: Signature, k: int) -> SignedSpectrum:
    """Decomposition of the product of alpha and beta at rank k."""
    if k < beta.length or k < alpha.length:
        raise RankTooSmall(f"k={k} below length of a factor")
    if (alpha.entries and alpha.entries[-1] < 0) or (beta.entries and beta.entries[-1] < 0):
        raise NotDominant("multipliers are defined for nonnegative signatures")
    l = alpha.length
    a = alpha.entries
    total: dict[Signature, int] = {}
    for sigma in permutations(range(l)):
        orders = [a[i] - i + sigma[i] for i in range(l)]
        if any(o < 0 for o in orders):
            continue
        sign = _perm_sign(sigma)
        spec = {beta: 1}
        for order in orders:
            nxt: dict[Signature, int] = {}
            for s, m in spec.items():
                for out in _apply_simple(order, s, k):
                    nxt[out] = nxt.get(out, 0) + m
            spec = nxt
            if not spec:
                break
        for s, m in spec.items():
            total[s] = total.get(s, 0) + sign * m
    result = SignedSpectrum(total)
    assert result.is_nonnegative(), f"negative multiplicity in {alpha} x {beta} at k={k}"
    return result


def tensor_decompose(factors, k: int) -> SignedSpectrum:
    """Left fold of compound multipliers over the factor list at rank k."""
    factors = list(factors)
    if not factors:
        raise EmptyProduct("no factors given")
    for f in factors:
        if k < f.length:
            raise RankTooSmall(f"k={k} below length of {f}")
    running = SignedSpectrum({factors[0]: 1})
    for alpha in factors[1:]:
        acc: dict[Signature, int] = {}
        for s, m in running.items():
            for s2, m2 in compound_multiplier(alpha, s, k).items():
                acc[s2] = acc.get(s2, 0) + m * m2
        running = SignedSpectrum(acc)
    return running


def stabilization_index(factors) -> int:
    """Least k at which the spectrum stops changing (bounded by sum of lengths)."""
    factors = list(factors)
    if not factors:
        raise EmptyProduct("no factors given")
    k = max((f.length for f in factors), default=0)
    bound = sum(f.length for f in factors)
    prev = tensor_decompose(factors, k) if k else SignedSpectrum({factors[0]: 1})
    while True:
        nxt = tensor_decompose(factors, k + 1)
        if nxt == prev:
            return k
        assert k < bound, "stabilization bound exceeded"
        prev = nxt
        k += 1


def stable_decompose(factors) -> SignedSpectrum:
    """Decomposition at the stabilization index: the rank-free spectrum."""
    return tensor_decompose(factors, stabilization_index(factors))


def multiplicity(factors, target: Signature) -> int:
    """Multiplicity of target in the stable decomposition of the product."""
    return stable_decompose(factors)[target]
