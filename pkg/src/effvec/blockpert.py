"""Closed-form efficiency characterizations for block-perturbed matrices.

Covers the 2-block chain conditions, the 3-by-3 chain, extension of an
efficient block head by bounded tail entries, the union-over-j route for
3-block matrices, and the constant-block sufficient class -- each paired in
the tests with the digraph verdict it must agree with.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence, Tuple

from .errors import (
    BadShape,
    CharacterizationMismatch,
    DimensionMismatch,
    HeadNotEfficient,
)
from .efficiency import is_efficient
from .matrix import (
    BlockPerturbedForm,
    MonomialSimilarity,
    ReciprocalMatrix,
    Scalar,
    Vector,
    block_matrix,
    check_positive_vector,
    is_exact_scalar,
    transform_vector,
    validate_reciprocal,
    vector_is_exact,
)


# ---------------------------------------------------------------------------
# Parameterized matrix families


@dataclass(frozen=True)
class TwoBlockMatrix:
    """S(x): entries (1,2) -> x, (2,1) -> 1/x, all else 1."""

    x: Scalar
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise BadShape("two-block form needs n >= 3")
        if not self.x > 0:
            raise BadShape("x must be positive")

    def matrix(self) -> ReciprocalMatrix:
        x = Fraction(self.x) if is_exact_scalar(self.x) else float(self.x)
        one = Fraction(1) if is_exact_scalar(self.x) else 1.0
        rows = [[one] * self.n for _ in range(self.n)]
        rows[0][1] = x
        rows[1][0] = 1 / x
        return validate_reciprocal(rows)


@dataclass(frozen=True)
class ThreeBlockMatrix:
    """A_n(B) with a 3-by-3 perturbed block B."""

    block: ReciprocalMatrix
    n: int

    def __post_init__(self):
        if self.block.n != 3:
            raise BadShape("block must be 3-by-3")
        if self.n < 4:
            raise BadShape("three-block form needs n >= 4")

    @property
    def a12(self):
        return self.block[0, 1]

    @property
    def a13(self):
        return self.block[0, 2]

    @property
    def a23(self):
        return self.block[1, 2]

    @property
    def normalized(self) -> bool:
        return self.a13 >= 1

    def matrix(self) -> ReciprocalMatrix:
        return block_matrix(self.block, self.n)

    def normalize(self) -> Tuple["ThreeBlockMatrix", MonomialSimilarity]:
        """Reverse the block indices when a13 < 1 so that a13 >= 1 holds.

        Returns the normalized form and the similarity mapping original
        vectors to normalized ones.
        """
        if self.normalized:
            return self, MonomialSimilarity.identity(self.n)
        perm = [2, 1, 0] + list(range(3, self.n))
        sim = MonomialSimilarity.permutation(perm)
        b = self.block
        block = validate_reciprocal(
            [
                [b[2, 2], b[2, 1], b[2, 0]],
                [b[1, 2], b[1, 1], b[1, 0]],
                [b[0, 2], b[0, 1], b[0, 0]],
            ]
        )
        return ThreeBlockMatrix(block, self.n), sim


@dataclass(frozen=True)
class ConstantBlockMatrix:
    """A_n(C_s(x)) where C_s(x) has every above-diagonal entry equal to x."""

    x: Scalar
    s: int
    n: int

    def __post_init__(self):
        if self.s < 2:
            raise BadShape("constant block needs s >= 2")
        if self.n < self.s:
            raise BadShape("need n >= s")
        if not self.x > 0:
            raise BadShape("x must be positive")

    def block(self) -> ReciprocalMatrix:
        x = Fraction(self.x) if is_exact_scalar(self.x) else float(self.x)
        rows = [
            [x if j > i else (1 / x if j < i else x ** 0) for j in range(self.s)]
            for i in range(self.s)
        ]
        return validate_reciprocal(rows)

    def matrix(self) -> ReciprocalMatrix:
        return block_matrix(self.block(), self.n)

    def normalize(self) -> Tuple["ConstantBlockMatrix", MonomialSimilarity]:
        """A_n(C_s(x)) with x < 1 is permutation similar to A_n(C_s(1/x))
        via reversal of the block indices."""
        if self.x >= 1:
            return self, MonomialSimilarity.identity(self.n)
        perm = list(range(self.s - 1, -1, -1)) + list(range(self.s, self.n))
        return (
            ConstantBlockMatrix(1 / self.x, self.s, self.n),
            MonomialSimilarity.permutation(perm),
        )


# ---------------------------------------------------------------------------
# Chain characterizations


def two_block_is_efficient(S: TwoBlockMatrix, w: Sequence[Scalar]) -> bool:
    """Chain test: w_2 <= w_3..w_n <= w_1 <= x*w_2, or all reversed."""
    if len(w) != S.n:
        raise DimensionMismatch(f"vector size {len(w)} != {S.n}")
    w = check_positive_vector(w)
    x = S.x
    asc = all(w[1] <= w[i] <= w[0] for i in range(2, S.n)) and w[0] <= x * w[1]
    desc = all(w[1] >= w[i] >= w[0] for i in range(2, S.n)) and w[0] >= x * w[1]
    return asc or desc


def three_by_three_is_efficient(B: ReciprocalMatrix, w: Sequence[Scalar]) -> bool:
    """Chain test for an arbitrary 3-by-3 reciprocal matrix."""
    if B.n != 3 or len(w) != 3:
        raise DimensionMismatch("need a 3-by-3 matrix and 3-vector")
    w = check_positive_vector(w)
    a12, a13, a23 = B[0, 1], B[0, 2], B[1, 2]
    asc = a23 * w[2] <= w[1] <= w[0] / a12 <= (a13 / a12) * w[2]
    desc = a23 * w[2] >= w[1] >= w[0] / a12 >= (a13 / a12) * w[2]
    return asc or desc


# ---------------------------------------------------------------------------
# Extending efficient block heads


def _head_bounds(head: Sequence[Scalar]):
    return min(head), max(head)


def lcompl_membership(form: BlockPerturbedForm, w: Sequence[Scalar]) -> bool:
    """Given w[0:s] efficient for the block, w is efficient for A_n(B) iff
    every tail entry lies in [min(head), max(head)]."""
    if len(w) != form.n:
        raise DimensionMismatch(f"vector size {len(w)} != {form.n}")
    w = check_positive_vector(w)
    head = w[: form.s]
    if not is_efficient(form.block, head).efficient:
        raise HeadNotEfficient("w[0:s] is not efficient for the perturbed block")
    lo, hi = _head_bounds(head)
    return all(lo <= w[i] <= hi for i in range(form.s, form.n))


@dataclass(frozen=True)
class GeneratedVector:
    """One generated efficient vector with its provenance."""

    vector: Vector
    seed_head: Vector
    tail_bounds: tuple
    permutation: Optional[tuple] = None


def _sample_in(lo, hi, rng: random.Random, exact: bool):
    # endpoints drawn with positive probability so boundary ties are exercised
    if lo == hi:
        return lo
    u = rng.random()
    if u < 0.1:
        return lo
    if u < 0.2:
        return hi
    if exact:
        return lo + (hi - lo) * Fraction(rng.randint(1, 9999), 10000)
    return lo + (hi - lo) * rng.uniform(0.0001, 0.9999)


def lcompl_sample(
    form: BlockPerturbedForm,
    head: Sequence[Scalar],
    rng: random.Random,
    count: Optional[int] = None,
) -> Iterator[GeneratedVector]:
    """Stream of efficient extensions of an efficient block head."""
    head = check_positive_vector(head)
    if len(head) != form.s:
        raise DimensionMismatch(f"head size {len(head)} != block size {form.s}")
    if not is_efficient(form.block, head).efficient:
        raise HeadNotEfficient("head is not efficient for the perturbed block")
    lo, hi = _head_bounds(head)
    exact = vector_is_exact(head)
    made = 0
    while count is None or made < count:
        tail = tuple(_sample_in(lo, hi, rng, exact) for _ in range(form.n - form.s))
        yield GeneratedVector(head + tail, head, (lo, hi))
        made += 1


def tail_permute(
    form: BlockPerturbedForm, w: Sequence[Scalar], perm: Sequence[int]
) -> Vector:
    """Permute the tail entries; efficiency for A_n(B) is preserved."""
    w = check_positive_vector(w)
    if len(w) != form.n:
        raise DimensionMismatch(f"vector size {len(w)} != {form.n}")
    t = form.n - form.s
    if sorted(perm) != list(range(t)):
        raise BadShape(f"{perm!r} is not a permutation of the {t} tail positions")
    tail = w[form.s :]
    new_tail = [None] * t
    for i in range(t):
        new_tail[perm[i]] = tail[i]
    return w[: form.s] + tuple(new_tail)


# ---------------------------------------------------------------------------
# 3-block: union over E(A, {1,2,3,j})


def three_block_membership(
    A: ThreeBlockMatrix, w: Sequence[Scalar]
) -> Tuple[bool, Optional[int]]:
    """Membership via the union route: w is efficient iff for some j >= 3
    (0-based) the 4-subvector (w_0, w_1, w_2, w_j) is efficient for the
    4-by-4 leading form and all other tail entries lie within its min/max.
    Returns the smallest witness j."""
    if len(w) != A.n:
        raise DimensionMismatch(f"vector size {len(w)} != {A.n}")
    w = check_positive_vector(w)
    A4 = block_matrix(A.block, 4)
    for j in range(3, A.n):
        sub = (w[0], w[1], w[2], w[j])
        if not is_efficient(A4, sub).efficient:
            continue
        lo, hi = min(sub), max(sub)
        if all(lo <= w[i] <= hi for i in range(3, A.n) if i != j):
            return True, j
    return False, None


def three_block_generate(
    A: ThreeBlockMatrix,
    four_vectors: Iterable[Sequence[Scalar]],
    rng: random.Random,
) -> Iterator[GeneratedVector]:
    """Extend certified efficient 4-vectors to full efficient vectors.

    Each seed is filtered through the 4-by-4 digraph test, extended by tail
    entries inside its min/max bounds, and finished with a random tail
    permutation.
    """
    A4 = block_matrix(A.block, 4)
    t = A.n - 3
    for seed in four_vectors:
        seed = check_positive_vector(seed)
        if len(seed) != 4:
            raise DimensionMismatch("seeds must be 4-vectors")
        if not is_efficient(A4, seed).efficient:
            continue
        lo, hi = min(seed), max(seed)
        exact = vector_is_exact(seed)
        tail = tuple(_sample_in(lo, hi, rng, exact) for _ in range(A.n - 4))
        perm = list(range(t))
        rng.shuffle(perm)
        base = seed[:3] + (seed[3],) + tail
        vec = [None] * A.n
        for i in range(3):
            vec[i] = base[i]
        for i in range(t):
            vec[3 + perm[i]] = base[3 + i]
        yield GeneratedVector(tuple(vec), seed, (lo, hi), tuple(perm))


def two_block_full_set_check(S: TwoBlockMatrix, w: Sequence[Scalar]) -> bool:
    """Cross-validate the chain test against the {1,2,j} route for every j.

    Each j must individually reproduce the chain verdict; a disagreement is
    an implementation bug, not a verdict.
    """
    if S.n < 4:
        raise BadShape("full-set cross-check needs n >= 4")
    w = check_positive_vector(w)
    if len(w) != S.n:
        raise DimensionMismatch(f"vector size {len(w)} != {S.n}")
    chain = two_block_is_efficient(S, w)
    S3 = TwoBlockMatrix(S.x, 3).matrix()
    for j in range(2, S.n):
        sub = (w[0], w[1], w[j])
        ok = is_efficient(S3, sub).efficient
        if ok:
            lo, hi = min(sub), max(sub)
            ok = all(lo <= w[i] <= hi for i in range(2, S.n) if i != j)
        if ok != chain:
            raise CharacterizationMismatch(
                f"route j={j} gives {ok}, chain gives {chain} for w={w!r}"
            )
    return chain


# ---------------------------------------------------------------------------
# Constant-block class


def constant_block_class_check(M: ConstantBlockMatrix, w: Sequence[Scalar]) -> bool:
    """Sufficient (not necessary) conditions for efficiency on A_n(C_s(x)).

    For the normalized x >= 1 orientation: w_3 <= w_1/x <= w_2 <= x*w_3,
    then (1/x)*min(w_3..w_{i-1}) <= w_i <= w_1/x for i = 4..s, and the tail
    entries within [min, max] of the head.
    """
    w = check_positive_vector(w)
    if len(w) != M.n:
        raise DimensionMismatch(f"vector size {len(w)} != {M.n}")
    if M.x < 1:
        M2, sim = M.normalize()
        return constant_block_class_check(M2, transform_vector(sim, w))
    x = M.x
    if M.s == 2:
        # 2-by-2 block is consistent; efficient heads are column multiples
        head_ok = w[1] * x == w[0] if vector_is_exact(w) and is_exact_scalar(x) \
            else abs(float(w[1]) * float(x) / float(w[0]) - 1.0) <= 1e-12
    else:
        head_ok = w[2] <= w[0] / x <= w[1] <= x * w[2]
        for i in range(3, M.s):
            if not head_ok:
                break
            head_ok = min(w[2:i]) / x <= w[i] <= w[0] / x
    if not head_ok:
        return False
    head = w[: M.s]
    lo, hi = min(head), max(head)
    return all(lo <= w[i] <= hi for i in range(M.s, M.n))


def constant_block_sample(
    M: ConstantBlockMatrix, rng: random.Random, count: Optional[int] = None
) -> Iterator[GeneratedVector]:
    """Stream of vectors from the constant-block sufficient class.

    Every emitted vector passes constant_block_class_check and hence the
    digraph test.
    """
    if M.x < 1:
        M2, sim = M.normalize()
        back = sim.inverse()
        for g in constant_block_sample(M2, rng, count):
            vec = transform_vector(back, g.vector)
            yield GeneratedVector(vec, vec[: M.s], g.tail_bounds, g.permutation)
        return
    if M.s < 3:
        raise BadShape("class sampler needs block size s >= 3")
    x = Fraction(M.x) if is_exact_scalar(M.x) else float(M.x)
    exact = is_exact_scalar(x)
    one = Fraction(1) if exact else 1.0
    made = 0
    while count is None or made < count:
        w = [one]
        u = one / x  # = w_1 / x
        w3 = _sample_in(u / x, u, rng, exact)
        w2 = _sample_in(u, x * w3, rng, exact)
        w += [w2, w3]
        for _ in range(3, M.s):
            w.append(_sample_in(min(w[2:]) / x, u, rng, exact))
        head = tuple(w)
        lo, hi = min(head), max(head)
        tail = tuple(_sample_in(lo, hi, rng, exact) for _ in range(M.n - M.s))
        yield GeneratedVector(head + tail, head, (lo, hi))
        made += 1
