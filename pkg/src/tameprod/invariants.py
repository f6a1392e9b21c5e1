"""Invariant generators, weight systems, and invariant bases.

The space of lowest-weight-covariant vectors for a tensor problem is cut
out inside the span of monomials in the quadratic generators
P[a,b] = sum_t Z[a,t] * W[b,t] by two requirements: the weight under the
diagonal torus (a Diophantine system on exponent matrices) and annihilation
by the unipotent polarizations.  For k >= min(p, q) the generators are
algebraically independent, so the whole computation can run on exponent
matrices; expansion into Z/W variables happens only on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import weyl_calculus
from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    SelfCheckError,
    WeightMismatch,
)
from .linalg import contragredient_matrix, nullspace_primitive
from .polynomials import MultiPoly, act_cols, wvar, zvar
from .signatures import Signature


@lru_cache(maxsize=None)
def generator(alpha: int, beta: int, k: int) -> MultiPoly:
    """P[alpha,beta] truncated to k columns: sum_t Z[alpha,t] W[beta,t]."""
    if alpha < 1 or beta < 1:
        raise IndexOutOfRange(f"generator indices must be >= 1, got ({alpha},{beta})")
    if k < 1:
        raise IndexOutOfRange(f"need k >= 1, got {k}")
    terms = {}
    for t in range(1, k + 1):
        mono = tuple(sorted(((zvar(alpha, t), 1), (wvar(beta, t), 1))))
        terms[mono] = 1
    return MultiPoly(terms)


@dataclass(frozen=True)
class ExponentMatrix:
    """p x q exponent matrix of a monomial in the generators P[a,b]."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in r) for r in self.rows))

    @property
    def shape(self):
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def row_sums(self):
        return tuple(sum(r) for r in self.rows)

    def col_sums(self):
        return tuple(sum(col) for col in zip(*self.rows)) if self.rows else ()

    def entry(self, a: int, b: int) -> int:
        return self.rows[a - 1][b - 1]

    def bumped(self, a_from: int, b_from: int, a_to: int, b_to: int) -> "ExponentMatrix":
        """Move one unit from (a_from, b_from) to (a_to, b_to); 1-based."""
        rows = [list(r) for r in self.rows]
        rows[a_from - 1][b_from - 1] -= 1
        rows[a_to - 1][b_to - 1] += 1
        return ExponentMatrix(tuple(tuple(r) for r in rows))

    def label(self) -> str:
        parts = []
        for a, row in enumerate(self.rows, start=1):
            for b, e in enumerate(row, start=1):
                if e == 1:
                    parts.append(f"P[{a},{b}]")
                elif e:
                    parts.append(f"P[{a},{b}]^{e}")
        return "*".join(parts) if parts else "1"

    def __str__(self):
        return self.label()


@dataclass(frozen=True)
class TensorProblem:
    """Factors, target, and the rank everything is computed at.

    Z rows are allocated in blocks: factor i owns rows
    row_offsets[i]+1 .. row_offsets[i]+len(factor_i); W rows 1..q carry
    the dual of the target.
    """

    factors: tuple[Signature, ...]
    target: Signature
    k: int

    @classmethod
    def build(cls, factors, target, k=None) -> "TensorProblem":
        factors = tuple(factors)
        if not factors:
            raise DimensionMismatch("a tensor problem needs at least one factor")
        for f in factors:
            if f.entries and f.entries[-1] < 0:
                raise DimensionMismatch(f"factors must be nonnegative, got {f}")
        if target.entries and target.entries[-1] < 0:
            raise DimensionMismatch(f"target must be nonnegative, got {target}")
        if k is None:
            n = sum(f.length for f in factors) + target.length
            k = max(n, weyl_calculus.stabilization_index(factors))
        return cls(factors, target, int(k))

    @property
    def row_alloc(self):
        return tuple(f.length for f in self.factors)

    @property
    def p(self) -> int:
        return sum(self.row_alloc)

    @property
    def q(self) -> int:
        return self.target.length

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def row_offsets(self):
        offs = []
        acc = 0
        for l in self.row_alloc:
            offs.append(acc)
            acc += l
        return tuple(offs)

    @property
    def mu(self):
        """Stacked weight: factor entries concatenated, then target entries."""
        flat = []
        for f in self.factors:
            flat.extend(f.entries)
        flat.extend(self.target.entries)
        return tuple(flat)

    def factor_of_row(self, row: int) -> int:
        """0-based index of the factor owning the given Z row."""
        for i, off in enumerate(self.row_offsets):
            if off < row <= off + self.row_alloc[i]:
                return i
        raise IndexOutOfRange(f"Z row {row} outside 1..{self.p}")

    def generator(self, alpha: int, beta: int, k: int | None = None) -> MultiPoly:
        if not 1 <= alpha <= self.p:
            raise IndexOutOfRange(f"alpha={alpha} outside 1..{self.p}")
        if not 1 <= beta <= self.q:
            raise IndexOutOfRange(f"beta={beta} outside 1..{self.q}")
        return generator(alpha, beta, self.k if k is None else k)


def diophantine_solutions(problem: TensorProblem):
    """All nonnegative p x q matrices with the required row and column sums.

    Row sums are the concatenated factor entries, column sums the target
    entries; returned in ascending lexicographic order of the flattened
    matrix.
    """
    row_sums = []
    for f in problem.factors:
        row_sums.extend(f.entries)
    col_sums = list(problem.target.entries)
    if sum(row_sums) != sum(col_sums):
        return []
    q = len(col_sums)
    if q == 0:
        return [ExponentMatrix(tuple(() for _ in row_sums))] if not any(row_sums) else []

    out = []

    def rows_for(total, remaining):
        def rec(j, rem, prefix):
            if j == q - 1:
                if rem <= remaining[j]:
                    yield prefix + (rem,)
                return
            for v in range(min(rem, remaining[j]) + 1):
                yield from rec(j + 1, rem - v, prefix + (v,))

        yield from rec(0, total, ())

    def fill(i, remaining, acc):
        if i == len(row_sums):
            if all(r == 0 for r in remaining):
                out.append(ExponentMatrix(tuple(acc)))
            return
        for row in rows_for(row_sums[i], remaining):
            fill(i + 1, [r - v for r, v in zip(remaining, row)], acc + [row])

    fill(0, col_sums, [])
    return out


def monomial(problem: TensorProblem, ell: ExponentMatrix, k: int | None = None) -> MultiPoly:
    """Expansion of the generator monomial P^ell at rank k."""
    if k is None:
        k = problem.k
    poly = MultiPoly.const(1)
    for a, row in enumerate(ell.rows, start=1):
        for b, e in enumerate(row, start=1):
            if e:
                poly = poly * (problem.generator(a, b, k) ** e)
    return poly


def unipotent_generators(problem: TensorProblem):
    """One-parameter shears whose polarizations must kill an invariant.

    Yields ("Z", a, b): Z row a feeds row b (a below b in the same factor
    block), and ("W", w1, w2): W row w1 feeds row w2 (w1 > w2), coming from
    the strictly upper triangle of the reversed target block.
    """
    for off, l in zip(problem.row_offsets, problem.row_alloc):
        for b in range(1, l + 1):
            for a in range(b + 1, l + 1):
                yield ("Z", off + a, off + b)
    for w2 in range(1, problem.q + 1):
        for w1 in range(w2 + 1, problem.q + 1):
            yield ("W", w1, w2)


def _polarize(ell: ExponentMatrix, gen):
    """First-order action of one shear on a generator monomial.

    Returns [(image ExponentMatrix, integer coefficient)]: the shear sends
    P^ell to P^ell + eps * sum(coeff * P^image) + O(eps^2).
    """
    kind, x, y = gen
    images = []
    if kind == "Z":
        # row x of Z gains eps * row y: P[x,b] -> P[x,b] + eps P[y,b]
        for b in range(1, len(ell.rows[0]) + 1):
            e = ell.entry(x, b)
            if e:
                images.append((ell.bumped(x, b, y, b), e))
    else:
        # W row x gains eps * W row y: P[a,x] -> P[a,x] + eps P[a,y]
        for a in range(1, len(ell.rows) + 1):
            e = ell.entry(a, x)
            if e:
                images.append((ell.bumped(a, x, a, y), e))
    return images


def unipotent_constraints(problem: TensorProblem, solutions):
    """Linear constraints forcing a combination of P^ell to be killed by
    every shear; one row per (shear, image monomial) pair."""
    solutions = list(solutions)
    if not solutions:
        return []
    weights = {(s.row_sums(), s.col_sums()) for s in solutions}
    if len(weights) > 1:
        raise WeightMismatch("monomials do not share a single weight")
    rows = []
    for gen in unipotent_generators(problem):
        images: dict[ExponentMatrix, list] = {}
        for j, sol in enumerate(solutions):
            for image, coeff in _polarize(sol, gen):
                images.setdefault(image, [0] * len(solutions))[j] += coeff
        for image in sorted(images, key=lambda m: m.rows):
            rows.append(images[image])
    return rows


@dataclass
class InvariantBasis:
    """Integer basis of the covariant space in the P-monomial coordinates."""

    problem: TensorProblem
    monomials: list
    vectors: list

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def element(self, i: int, k: int | None = None) -> MultiPoly:
        """Expand basis element i at rank k (default: the target length,
        enough for the Fock pairing against the dual model)."""
        if k is None:
            k = max(1, self.problem.q)
        poly = MultiPoly.zero()
        for c, mono in zip(self.vectors[i], self.monomials):
            if c:
                poly = poly + c * monomial(self.problem, mono, k)
        return poly

    def elements(self, k: int | None = None):
        return [self.element(i, k) for i in range(self.dimension)]

    def combination_label(self, i: int) -> str:
        parts = []
        for c, mono in zip(self.vectors[i], self.monomials):
            if not c:
                continue
            body = mono.label()
            if c == 1:
                parts.append(("+ " if parts else "") + body)
            elif c == -1:
                parts.append("- " + body)
            else:
                sign = "- " if c < 0 else ("+ " if parts else "")
                parts.append(f"{sign}{abs(c)}*{body}")
        return " ".join(parts) if parts else "0"

    def to_json_obj(self):
        return {
            "dimension": self.dimension,
            "monomials": [m.label() for m in self.monomials],
            "basis": [list(v) for v in self.vectors],
        }


def invariant_basis(problem: TensorProblem) -> InvariantBasis:
    """Solve the weight system and shear constraints; cross-check dimension.

    The dimension must equal the stable tensor multiplicity of the target;
    a mismatch raises SelfCheckError.
    """
    sols = diophantine_solutions(problem)
    rows = unipotent_constraints(problem, sols)
    vectors = nullspace_primitive(rows, len(sols))
    mult = weyl_calculus.multiplicity(problem.factors, problem.target)
    if len(vectors) != mult:
        raise SelfCheckError(
            f"invariant dimension {len(vectors)} != tensor multiplicity {mult} "
            f"for {problem.factors} -> {problem.target}"
        )
    return InvariantBasis(problem, sols, vectors)


def diagonal_right_action(f: MultiPoly, g) -> MultiPoly:
    """Right action in labeled coordinates: Z -> Z.g and W -> W.(g^T)^{-1}.

    Every generator P[a,b] is fixed, hence so is any expanded invariant
    (at rank k = len(g))."""
    gv = contragredient_matrix(g)
    return act_cols(act_cols(f, g, matrix="Z"), gv, matrix="W")
