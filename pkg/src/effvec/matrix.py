"""Reciprocal pairwise-comparison matrices.

A reciprocal matrix is a positive square matrix with a_ji = 1/a_ij.  Two
numeric backends are supported: exact rationals (``fractions.Fraction``,
the default for all combinatorial logic, so that boundary ties are decided
exactly) and binary floats with explicit tolerances.  A matrix whose
entries are all Fraction/int is "exact"; any float entry demotes the whole
matrix to the float backend.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import (
    BadShape,
    DimensionMismatch,
    EmptySubset,
    NonPositiveEntry,
    ReciprocityViolation,
)

Scalar = Union[int, Fraction, float]
Vector = tuple  # positive weight vector, entries are Scalars

#: relative tolerance for a_ij * a_ji == 1 on the float backend
TOL_RECIP = 1e-12
#: relative tolerance for consistency triples on the float backend
TOL_CONS = 1e-9


def is_exact_scalar(x: Scalar) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def check_positive_vector(w: Sequence[Scalar]) -> Vector:
    if len(w) == 0:
        raise BadShape("empty vector")
    for x in w:
        if not x > 0:
            raise NonPositiveEntry(f"vector entry {x!r} is not positive")
    return tuple(w)


def vector_is_exact(w: Sequence[Scalar]) -> bool:
    return all(is_exact_scalar(x) for x in w)


def as_float_vector(w: Sequence[Scalar]) -> tuple:
    return tuple(float(x) for x in w)


@dataclass(frozen=True)
class ReciprocalMatrix:
    """Validated reciprocal matrix.  Immutable; construct via validate_reciprocal."""

    entries: tuple
    exact: bool

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def submatrix(self, keep: Sequence[int]) -> "ReciprocalMatrix":
        """Principal submatrix A[keep] (order of `keep` is preserved)."""
        rows = tuple(tuple(self.entries[i][j] for j in keep) for i in keep)
        return ReciprocalMatrix(rows, self.exact)

    def delete(self, i: int) -> "ReciprocalMatrix":
        """Principal submatrix A(i), deleting row and column i."""
        keep = [k for k in range(self.n) if k != i]
        return self.submatrix(keep)

    def to_float(self) -> "ReciprocalMatrix":
        if not self.exact:
            return self
        rows = tuple(tuple(float(x) for x in r) for r in self.entries)
        return ReciprocalMatrix(rows, False)

    def as_lists(self) -> list:
        return [list(r) for r in self.entries]


def validate_reciprocal(grid: Sequence[Sequence[Scalar]]) -> ReciprocalMatrix:
    """Validate a square grid of positive entries as a reciprocal matrix.

    Exact entries must satisfy a_ij * a_ji == 1 exactly; on the float
    backend the product may deviate by TOL_RECIP and a_ji is then
    renormalized to exactly 1/a_ij.  Mixed exact/float grids are promoted
    to the float backend.
    """
    n = len(grid)
    if n < 2:
        raise BadShape(f"need n >= 2, got {n}")
    for r in grid:
        if len(r) != n:
            raise BadShape("grid is not square")
    exact = all(is_exact_scalar(x) for r in grid for x in r)
    if exact:
        rows = [[Fraction(x) for x in r] for r in grid]
    else:
        rows = [[float(x) for x in r] for r in grid]
    for i in range(n):
        for j in range(n):
            if not rows[i][j] > 0:
                raise NonPositiveEntry(f"entry ({i},{j}) = {rows[i][j]!r} is not positive")
    for i in range(n):
        if rows[i][i] != 1:
            raise ReciprocityViolation(f"diagonal entry ({i},{i}) = {rows[i][i]!r} != 1")
        for j in range(i + 1, n):
            prod = rows[i][j] * rows[j][i]
            if exact:
                if prod != 1:
                    raise ReciprocityViolation(
                        f"a[{i}][{j}] * a[{j}][{i}] = {prod} != 1"
                    )
            else:
                if abs(prod - 1.0) > TOL_RECIP:
                    raise ReciprocityViolation(
                        f"a[{i}][{j}] * a[{j}][{i}] = {prod} deviates from 1 beyond {TOL_RECIP}"
                    )
                rows[j][i] = 1.0 / rows[i][j]
    return ReciprocalMatrix(tuple(tuple(r) for r in rows), exact)


def consistent_from_vector(w: Sequence[Scalar]) -> ReciprocalMatrix:
    """The consistent matrix w * w^(-T), i.e. a_ij = w_i / w_j."""
    w = check_positive_vector(w)
    if vector_is_exact(w):
        w = tuple(Fraction(x) for x in w)
    return validate_reciprocal([[wi / wj for wj in w] for wi in w])


def is_consistent(A: ReciprocalMatrix, tol: float = TOL_CONS) -> bool:
    """True iff a_ij * a_jk == a_ik for every triple (exact backend: exactly)."""
    n = A.n
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = A[i, j] * A[j, k]
                if A.exact:
                    if lhs != A[i, k]:
                        return False
                else:
                    if abs(lhs / A[i, k] - 1.0) > tol:
                        return False
    return True


# ---------------------------------------------------------------------------
# Monomial similarities


@dataclass(frozen=True)
class MonomialSimilarity:
    """A positive diagonal scaling D followed by a permutation P.

    Applied to a matrix this computes P D A D^{-1} P^T; applied to a vector,
    P D w.  ``perm[i]`` is the image position of index i.
    """

    diag: tuple
    perm: tuple

    @property
    def n(self) -> int:
        return len(self.diag)

    def __post_init__(self):
        if len(self.perm) != len(self.diag):
            raise DimensionMismatch("diag and perm sizes differ")
        if sorted(self.perm) != list(range(len(self.perm))):
            raise BadShape(f"perm {self.perm!r} is not a permutation")
        for d in self.diag:
            if not d > 0:
                raise NonPositiveEntry(f"diagonal entry {d!r} is not positive")

    @classmethod
    def identity(cls, n: int) -> "MonomialSimilarity":
        return cls(tuple([1] * n), tuple(range(n)))

    @classmethod
    def permutation(cls, perm: Sequence[int]) -> "MonomialSimilarity":
        return cls(tuple([1] * len(perm)), tuple(perm))

    @classmethod
    def scaling(cls, diag: Sequence[Scalar]) -> "MonomialSimilarity":
        return cls(tuple(diag), tuple(range(len(diag))))

    def inverse(self) -> "MonomialSimilarity":
        n = self.n
        inv_perm = [0] * n
        for i, p in enumerate(self.perm):
            inv_perm[p] = i
        inv_diag = [None] * n
        for i in range(n):
            inv_diag[self.perm[i]] = 1 / Fraction(self.diag[i]) \
                if is_exact_scalar(self.diag[i]) else 1.0 / self.diag[i]
        return MonomialSimilarity(tuple(inv_diag), tuple(inv_perm))

    def then(self, other: "MonomialSimilarity") -> "MonomialSimilarity":
        """Composition: apply self first, then other."""
        if other.n != self.n:
            raise DimensionMismatch("similarity sizes differ")
        diag = tuple(self.diag[i] * other.diag[self.perm[i]] for i in range(self.n))
        perm = tuple(other.perm[self.perm[i]] for i in range(self.n))
        return MonomialSimilarity(diag, perm)


def apply_similarity(A: ReciprocalMatrix, M: MonomialSimilarity) -> ReciprocalMatrix:
    """P D A D^{-1} P^T.  Preserves reciprocity and efficiency status."""
    if M.n != A.n:
        raise DimensionMismatch(f"matrix size {A.n} vs similarity size {M.n}")
    n = A.n
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            out[M.perm[i]][M.perm[j]] = M.diag[i] * A[i, j] / M.diag[j]
    return validate_reciprocal(out)


def transform_vector(M: MonomialSimilarity, w: Sequence[Scalar]) -> Vector:
    """P D w, the vector matching apply_similarity on the matrix side."""
    if M.n != len(w):
        raise DimensionMismatch(f"vector size {len(w)} vs similarity size {M.n}")
    out = [None] * M.n
    for i in range(M.n):
        out[M.perm[i]] = M.diag[i] * w[i]
    return tuple(out)


# ---------------------------------------------------------------------------
# Block-perturbed canonical form A_n(B)


@dataclass(frozen=True)
class BlockPerturbedForm:
    """Canonical form A_n(B): block B in the leading s-by-s corner, 1s elsewhere.

    back_map is the monomial similarity that maps the canonical matrix back
    to the matrix it was derived from.
    """

    block: ReciprocalMatrix
    s: int
    n: int
    back_map: MonomialSimilarity

    def matrix(self) -> ReciprocalMatrix:
        """The canonical matrix A_n(B)."""
        return block_matrix(self.block, self.n)

    def original(self) -> ReciprocalMatrix:
        return apply_similarity(self.matrix(), self.back_map)


def block_matrix(B: ReciprocalMatrix, n: int) -> ReciprocalMatrix:
    """Build A_n(B): B as leading principal block, all other entries 1."""
    s = B.n
    if n < s:
        raise BadShape(f"n = {n} smaller than block size {s}")
    one = Fraction(1) if B.exact else 1.0
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(B[i, j] if i < s and j < s else one)
        rows.append(row)
    return validate_reciprocal(rows)


def is_block_perturbation(
    A: ReciprocalMatrix, K: Iterable[int], tol: float = TOL_CONS
) -> Optional[BlockPerturbedForm]:
    """Canonicalize A as an s-block perturbation with perturbed indices K.

    Permutes K to the front, scales by the column of the smallest index
    outside K, and checks that everything outside the leading |K|-by-|K|
    block becomes 1.  Returns None when A is not consistent outside K.
    """
    K = sorted(set(K))
    n = A.n
    if not K or len(K) >= n:
        raise BadShape(f"K must be a nonempty proper subset of 0..{n - 1}")
    if K[0] < 0 or K[-1] >= n:
        raise BadShape(f"K {K!r} out of range for n = {n}")
    s = len(K)
    rest = [i for i in range(n) if i not in set(K)]
    order = K + rest  # order[p] = original index at canonical position p
    perm = [0] * n
    for p, i in enumerate(order):
        perm[i] = p
    M_perm = MonomialSimilarity.permutation(perm)
    Ap = apply_similarity(A, M_perm)
    # reference column: smallest index not in K, now sitting at position s
    d = Ap.column(s)
    M_scale = MonomialSimilarity.scaling(tuple(1 / x for x in d))
    Acan = apply_similarity(Ap, M_scale)
    for i in range(n):
        for j in range(n):
            if i < s and j < s:
                continue
            x = Acan[i, j]
            if Acan.exact:
                if x != 1:
                    return None
            elif abs(x - 1.0) > tol:
                return None
    fwd = M_perm.then(M_scale)
    block = Acan.submatrix(range(s))
    return BlockPerturbedForm(block=block, s=s, n=n, back_map=fwd.inverse())


@dataclass(frozen=True)
class DetectedBlock:
    K: tuple
    form: BlockPerturbedForm
    minimal_guaranteed: bool


def _inconsistent_triple_counts(A: ReciprocalMatrix, tol: float) -> list:
    counts = [0] * A.n
    for i, j, k in itertools.combinations(range(A.n), 3):
        lhs = A[i, j] * A[j, k]
        bad = lhs != A[i, k] if A.exact else abs(lhs / A[i, k] - 1.0) > tol
        if bad:
            counts[i] += 1
            counts[j] += 1
            counts[k] += 1
    return counts


def detect_minimal_block(
    A: ReciprocalMatrix, tol: float = TOL_CONS
) -> Optional[DetectedBlock]:
    """Smallest index set K (lexicographic tie-break) making A a block perturbation.

    Exhaustive over subsets for n <= 8; greedy for larger n (grow K by the
    index participating in most inconsistent triples), in which case the
    result is advisory and flagged minimal_guaranteed=False.
    """
    n = A.n
    if n <= 8:
        for size in range(1, n):
            for K in itertools.combinations(range(n), size):
                form = is_block_perturbation(A, K, tol)
                if form is not None:
                    return DetectedBlock(K, form, True)
        return None
    counts = _inconsistent_triple_counts(A, tol)
    order = sorted(range(n), key=lambda i: (-counts[i], i))
    K: list = []
    for idx in order:
        K.append(idx)
        if len(K) >= n:
            break
        form = is_block_perturbation(A, K, tol)
        if form is not None:
            return DetectedBlock(tuple(sorted(K)), form, False)
    return None


# ---------------------------------------------------------------------------
# Geometric means


def geometric_mean_vector(A: ReciprocalMatrix, cols: Iterable[int]) -> Vector:
    """Entry-wise geometric mean of the selected columns (always efficient).

    A single column is returned as-is on its native backend; genuine means
    involve k-th roots and are computed in floats.
    """
    cols = sorted(set(cols))
    if not cols:
        raise EmptySubset("need at least one column")
    if cols[0] < 0 or cols[-1] >= A.n:
        raise BadShape(f"column subset {cols!r} out of range for n = {A.n}")
    if len(cols) == 1:
        return A.column(cols[0])
    k = len(cols)
    return tuple(
        math.exp(sum(math.log(float(A[i, j])) for j in cols) / k) for i in range(A.n)
    )
