"""Independent brute-force oracles for cross-validating the digraph test.

The grid search finitizes the dominance definition over a multiplicative
lattice around a base vector.  It is one-sided: finding a lattice point
that dominates proves inefficiency; finding none proves nothing.  Strong
connectivity remains the only efficiency proof.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .efficiency import V_DOMINATES, dominance_compare, is_efficient
from .errors import GridTooLarge
from .matrix import (
    ReciprocalMatrix,
    Scalar,
    Vector,
    check_positive_vector,
    validate_reciprocal,
    vector_is_exact,
)

GRID_GUARD = 10_000_000
_CHUNK = 100_000


@dataclass(frozen=True)
class GridSpec:
    """Log-uniform lattice around a base point, first coordinate pinned.

    Per free coordinate the multipliers are rho**(k/m), k = -m..m; dominance
    is scale invariant so pinning coordinate 0 loses nothing.
    """

    base: Vector
    rho: float = 2.0
    m: int = 6

    def __post_init__(self):
        check_positive_vector(self.base)
        if not self.rho > 1:
            raise GridTooLarge(f"rho must exceed 1, got {self.rho}")
        if self.m < 1:
            raise GridTooLarge(f"m must be >= 1, got {self.m}")

    @property
    def candidate_count(self) -> int:
        return (2 * self.m + 1) ** (len(self.base) - 1)

    def factor_values(self) -> list:
        return [self.rho ** (k / self.m) for k in range(-self.m, self.m + 1)]


def grid_dominator_search(
    A: ReciprocalMatrix, w: Sequence[Scalar], g: GridSpec
) -> Optional[Vector]:
    """First lattice point strictly dominating w, or None.

    Candidates are prefiltered with a tolerant float comparison, then
    verified exactly (the float factors convert to rationals losslessly),
    so a returned vector is a true dominator and an efficient w can never
    produce one.
    """
    n = A.n
    if len(w) != n or len(g.base) != n:
        raise GridTooLarge("grid base and vector must match the matrix size")
    if g.candidate_count > GRID_GUARD:
        raise GridTooLarge(
            f"{g.candidate_count} candidates exceed the {GRID_GUARD} guard"
        )
    exact = A.exact and vector_is_exact(w)
    Af = np.array(A.to_float().entries, dtype=float)
    wf = np.array([float(x) for x in g.base], dtype=float)
    off = ~np.eye(n, dtype=bool)
    err_w = np.abs(Af - np.array([float(x) for x in w], dtype=float)[:, None]
                   / np.array([float(x) for x in w], dtype=float)[None, :])
    budget = err_w * (1 + 1e-9) + 1e-15
    factors = g.factor_values()
    combo_iter = itertools.product(factors, repeat=n - 1)
    while True:
        chunk = list(itertools.islice(combo_iter, _CHUNK))
        if not chunk:
            return None
        F = np.concatenate(
            [np.ones((len(chunk), 1)), np.array(chunk, dtype=float)], axis=1
        )
        V = wf[None, :] * F
        R = V[:, :, None] / V[:, None, :]
        ok = np.all((np.abs(Af[None, :, :] - R) <= budget[None, :, :])[:, off], axis=1)
        for idx in np.nonzero(ok)[0]:
            if exact:
                v = tuple(
                    Fraction(g.base[i]) * Fraction(float(F[idx, i])) for i in range(n)
                )
            else:
                v = tuple(float(x) for x in V[idx])
            if dominance_compare(A, w, v) == V_DOMINATES:
                return v


@dataclass
class OracleReport:
    trials: int
    n: int
    efficient: int = 0
    inefficient: int = 0
    contradictions: list = field(default_factory=list)
    runtime_ms: float = 0.0

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "n": self.n,
            "efficient": self.efficient,
            "inefficient": self.inefficient,
            "contradictions": self.contradictions,
            "runtime_ms": self.runtime_ms,
        }


def random_pow2_instance(n: int, rng: random.Random):
    """Random exact instance with power-of-two entries and weights.

    Powers of two keep the arithmetic exact, produce plenty of boundary
    ties, and guarantee that whenever w is inefficient the grid (rho=2,
    m>=1) contains a dominating point: the source-component scaling factor
    is a power of two <= 1/2, so halving the source coordinates stays on
    the lattice.
    """
    rows = [[Fraction(1)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            e = rng.randint(-3, 3)
            rows[i][j] = Fraction(2) ** e
            rows[j][i] = Fraction(2) ** (-e)
    w = tuple(Fraction(2) ** rng.randint(-2, 2) for _ in range(n))
    return validate_reciprocal(rows), w


def exhaustive_small_equivalence(
    trials: int, rng: random.Random, n: int = 3, rho: float = 2.0, m: int = 6
) -> OracleReport:
    """Cross-check digraph verdicts, constructed dominators, and grid search.

    For each random instance: a digraph-inefficient verdict must carry a
    confirmed dominating vector AND the grid search must find a dominator;
    a digraph-efficient verdict must leave the grid empty-handed.  Any
    contradiction is fatal to the build.
    """
    t0 = time.perf_counter()
    report = OracleReport(trials=trials, n=n)
    for trial in range(trials):
        A, w = random_pow2_instance(n, rng)
        verdict = is_efficient(A, w)
        g = GridSpec(w, rho, m)
        found = grid_dominator_search(A, w, g)
        if verdict.efficient:
            report.efficient += 1
            if found is not None:
                report.contradictions.append(
                    {
                        "trial": trial,
                        "kind": "grid dominator for digraph-efficient vector",
                        "w": [str(x) for x in w],
                        "v": [str(x) for x in found],
                    }
                )
        else:
            report.inefficient += 1
            if dominance_compare(A, w, verdict.dominator) != V_DOMINATES:
                report.contradictions.append(
                    {
                        "trial": trial,
                        "kind": "constructed dominator fails dominance check",
                        "w": [str(x) for x in w],
                    }
                )
            if found is None:
                report.contradictions.append(
                    {
                        "trial": trial,
                        "kind": "grid found no dominator for inefficient vector",
                        "w": [str(x) for x in w],
                    }
                )
    report.runtime_ms = (time.perf_counter() - t0) * 1000.0
    return report
