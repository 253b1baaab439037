"""Perron eigenpair computation and efficiency results for block forms.

Power iteration is sufficient here: the matrices are entry-wise positive,
so the dominant eigenpair is simple and the iteration converges from the
all-ones start.  The residual makes every result self-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .blockpert import ConstantBlockMatrix
from .efficiency import EfficiencyVerdict, build_digraph, is_efficient
from .errors import NoConvergence, NotNormalized, StructureViolation, TheoremViolation
from .matrix import BlockPerturbedForm, ReciprocalMatrix

TOL_PERRON = 1e-12


@dataclass(frozen=True)
class PerronResult:
    lam: float
    w: tuple  # float entries, normalized so the last entry is 1
    residual: float
    iterations: int


def perron(
    A: ReciprocalMatrix, tol: float = TOL_PERRON, max_iter: int = 200000
) -> PerronResult:
    """Dominant eigenpair by power iteration from the all-ones vector."""
    M = np.array(A.to_float().entries, dtype=float)
    n = A.n
    v = np.ones(n)
    lam_prev = 0.0
    for it in range(1, max_iter + 1):
        u = M @ v
        lam = u.sum() / v.sum()
        residual = float(np.max(np.abs(u - lam * v) / (lam * v)))
        if residual < tol and abs(lam - lam_prev) < tol * lam:
            w = u / u[-1]
            return PerronResult(float(lam), tuple(w), residual, it)
        lam_prev = lam
        v = u / u[-1]
    raise NoConvergence(f"power iteration did not reach {tol} in {max_iter} steps")


@dataclass(frozen=True)
class TailStructure:
    ok: bool
    vacuous: bool  # n == s + 1: no pair of tail entries to compare

    def __bool__(self) -> bool:
        return self.ok


def perron_tail_structure(
    form: BlockPerturbedForm, r: PerronResult, tol: float = TOL_PERRON
) -> TailStructure:
    """Eigenvectors of A_n(B) have equal trailing n - s entries."""
    tail = r.w[form.s :]
    if len(tail) <= 1:
        return TailStructure(True, True)
    lo, hi = min(tail), max(tail)
    return TailStructure(bool(hi - lo <= 10 * tol * hi), False)


def perron_efficiency_via_submatrix(
    form: BlockPerturbedForm, r: PerronResult
) -> EfficiencyVerdict:
    """Verdict from the leading (s+1)-by-(s+1) pair only; by the equal-tail
    structure it equals the full-matrix verdict."""
    if not perron_tail_structure(form, r):
        raise StructureViolation("Perron tail entries are not equal within tolerance")
    sub = form.matrix().to_float().submatrix(range(form.s + 1))
    return is_efficient(sub, r.w[: form.s + 1])


@dataclass(frozen=True)
class ThreeBlockPerronConditions:
    a12: float
    a13: float
    a23: float
    q: float
    matched: Optional[str]  # None | "cond1" | "cond2" | "cond3"


def three_block_sufficient(B: ReciprocalMatrix) -> ThreeBlockPerronConditions:
    """Sufficient conditions (on a13-normalized blocks) for the Perron
    eigenvector of A_n(B) to be efficient, every n >= 4."""
    if B.n != 3:
        raise StructureViolation("need a 3-by-3 block")
    a12, a13, a23 = B[0, 1], B[0, 2], B[1, 2]
    if a13 < 1:
        raise NotNormalized("a13 < 1; apply the block reversal similarity first")
    q = a13 - a23 * a12
    if a12 >= 1 and a23 >= 1 and q <= 0:
        matched = "cond1"
    elif a12 >= 1 and a23 <= 1 and q >= 0:
        matched = "cond2"
    elif a12 <= 1 and a23 >= 1 and q >= 0:
        matched = "cond3"
    else:
        matched = None
    return ThreeBlockPerronConditions(a12, a13, a23, q, matched)


def three_block_proof_residuals(
    B: ReciprocalMatrix, n: int, r: PerronResult
) -> dict:
    """Linear identities satisfied by the eigenpair of A_n(B), B 3-by-3.

    Diagnostic only: all six values must vanish up to rounding.
    """
    a12, a13, a23 = float(B[0, 1]), float(B[0, 2]), float(B[1, 2])
    lam = r.lam
    w1, w2, w3, w4 = r.w[0], r.w[1], r.w[2], r.w[3]
    m = n - 3
    return {
        "e1": lam * (w4 - w1) + (a12 - 1) * w2 + (a13 - 1) * w3,
        "e2": lam * (w3 - w4) + (1 - 1 / a13) * w1 + (1 - 1 / a23) * w2,
        "e6": lam * (w4 - w2) + (1 / a12 - 1) * w1 + (a23 - 1) * w3,
        "e3": lam * (a12 * w2 - w1) + (a13 - a23 * a12) * w3 + (1 - a12) * m * w4,
        "e4": lam * (a23 * w3 - w2) + (1 / a12 - a23 / a13) * w1 + (1 - a23) * m * w4,
        "e5": lam * (a13 * w3 - w1) + (a12 - a13 / a23) * w2 + (1 - a13) * m * w4,
    }


def constant_block_perron_check(M: ConstantBlockMatrix) -> EfficiencyVerdict:
    """The Perron eigenvector of A_n(C_s(x)) is always efficient.

    Asserts the proof's witness cycle s+1 -> s -> ... -> 1 -> s+1 in the
    digraph of the leading (s+1)-pair; a missing edge signals a bug, not an
    inefficiency verdict.
    """
    if M.n <= M.s:
        raise StructureViolation("need n > s for the Perron check")
    Mn, _ = M.normalize()
    A = Mn.matrix().to_float()
    r = perron(A)
    s = Mn.s
    sub = A.submatrix(range(s + 1))
    wsub = r.w[: s + 1]
    G = build_digraph(sub, wsub)
    cycle = tuple(range(s, -1, -1))  # s -> s-1 -> ... -> 0 -> s
    if not G.has_cycle(cycle):
        raise TheoremViolation(
            f"witness cycle missing for x={M.x}, s={M.s}, n={M.n}"
        )
    verdict = is_efficient(sub, wsub)
    if not verdict.efficient:
        raise TheoremViolation(
            f"Perron vector tested inefficient for x={M.x}, s={M.s}, n={M.n}"
        )
    return verdict
