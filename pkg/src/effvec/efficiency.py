"""Digraph-based Pareto efficiency test and certificates.

A weight vector w is efficient for a reciprocal matrix A exactly when the
digraph G(A, w) -- edge i->j iff w_i/w_j >= a_ij -- is strongly connected.
Inefficiency comes with a constructive certificate: a source component S of
the condensation, scaled down by the extremal feasible factor, yields a
vector that strictly dominates w.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import (
    DimensionMismatch,
    InvalidWitness,
    SubvectorNotEfficient,
)
from .matrix import (
    ReciprocalMatrix,
    Scalar,
    Vector,
    check_positive_vector,
    is_exact_scalar,
    vector_is_exact,
)

#: one-sided relative tolerance for the edge rule on the float backend;
#: deliberately favors edge inclusion so boundary ties never disconnect
TOL_EDGE = 1e-9

V_DOMINATES = "v_dominates"
W_DOMINATES = "w_dominates"
EQUAL = "equal"
INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class ComparisonDigraph:
    """G(A, w): for every ordered pair at least one direction is present."""

    n: int
    succ: tuple  # succ[i] = frozenset of j with edge i -> j

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.succ[i]

    def edge_list(self) -> list:
        return [(i, j) for i in range(self.n) for j in sorted(self.succ[i])]

    def has_cycle(self, cycle: Sequence[int]) -> bool:
        """True iff consecutive edges of the closed walk are all present."""
        m = len(cycle)
        return all(self.has_edge(cycle[k], cycle[(k + 1) % m]) for k in range(m))


def build_digraph(
    A: ReciprocalMatrix, w: Sequence[Scalar], tol_edge: float = TOL_EDGE
) -> ComparisonDigraph:
    """Edge i->j iff w_i/w_j >= a_ij (float backend: >= a_ij*(1 - tol_edge))."""
    if len(w) != A.n:
        raise DimensionMismatch(f"matrix size {A.n} vs vector size {len(w)}")
    w = check_positive_vector(w)
    exact = A.exact and vector_is_exact(w)
    n = A.n
    succ = []
    for i in range(n):
        out = set()
        for j in range(n):
            if i == j:
                continue
            if exact:
                if w[i] >= A[i, j] * w[j]:
                    out.add(j)
            else:
                if float(w[i]) / float(w[j]) >= float(A[i, j]) * (1.0 - tol_edge):
                    out.add(j)
        succ.append(frozenset(out))
    return ComparisonDigraph(n, tuple(succ))


def strongly_connected_components(G: ComparisonDigraph) -> list:
    """Tarjan's algorithm, iterative.  Components are sorted vertex tuples."""
    n = G.n
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list = []
    comps = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, iter(sorted(G.succ[root])))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for u in it:
                if index[u] == -1:
                    index[u] = low[u] = counter
                    counter += 1
                    stack.append(u)
                    on_stack[u] = True
                    work.append((u, iter(sorted(G.succ[u]))))
                    advanced = True
                    break
                if on_stack[u]:
                    low[v] = min(low[v], index[u])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    u = stack.pop()
                    on_stack[u] = False
                    comp.append(u)
                    if u == v:
                        break
                comps.append(tuple(sorted(comp)))
    return comps


def source_components(G: ComparisonDigraph, comps: list) -> list:
    """Components of the condensation with no incoming edge from outside."""
    member = {}
    for ci, comp in enumerate(comps):
        for v in comp:
            member[v] = ci
    has_incoming = [False] * len(comps)
    for i in range(G.n):
        for j in G.succ[i]:
            if member[i] != member[j]:
                has_incoming[member[j]] = True
    return sorted(
        (comp for ci, comp in enumerate(comps) if not has_incoming[ci])
    )


def is_strongly_connected(G: ComparisonDigraph):
    """(connected?, component list, source component or None)."""
    comps = strongly_connected_components(G)
    if len(comps) == 1:
        return True, comps, None
    return False, comps, source_components(G, comps)[0]


@dataclass(frozen=True)
class EfficiencyVerdict:
    efficient: bool
    components: tuple
    digraph: ComparisonDigraph
    source_set: Optional[tuple] = None
    dominator: Optional[Vector] = None

    @property
    def status(self) -> str:
        return "efficient" if self.efficient else "inefficient"

    def to_dict(self, one_based: bool = True) -> dict:
        off = 1 if one_based else 0
        d = {
            "status": self.status,
            "scc_partition": [[v + off for v in c] for c in self.components],
            "edge_list": [(i + off, j + off) for i, j in self.digraph.edge_list()],
        }
        if not self.efficient:
            d["source_set"] = [v + off for v in self.source_set]
            d["dominator"] = [float(x) for x in self.dominator]
        return d


def construct_dominating_vector(
    A: ReciprocalMatrix, w: Sequence[Scalar], source_set: Iterable[int]
) -> Vector:
    """Scale the source component down by the extremal feasible factor.

    With S a source component of a non-strongly-connected G(A, w) we have
    w_i/w_j > a_ij strictly for i in S, j outside; t = max a_ij*w_j/w_i < 1
    and v = w with S scaled by t leaves within-group errors unchanged and
    strictly shrinks every cross error.
    """
    S = frozenset(source_set)
    n = A.n
    if len(w) != n:
        raise DimensionMismatch(f"matrix size {n} vs vector size {len(w)}")
    if not S or len(S) >= n:
        raise InvalidWitness(f"source set {sorted(S)!r} must be nonempty and proper")
    exact = A.exact and vector_is_exact(w)
    t = None
    for i in S:
        for j in range(n):
            if j in S:
                continue
            cand = A[i, j] * w[j] / w[i]
            if not cand < 1:
                raise InvalidWitness(
                    f"edge {j}->{i} enters the claimed source set (ratio {cand})"
                )
            if t is None or cand > t:
                t = cand
    if exact:
        t = Fraction(t)
    return tuple(w[i] * t if i in S else w[i] for i in range(n))


def is_efficient(
    A: ReciprocalMatrix, w: Sequence[Scalar], tol_edge: float = TOL_EDGE
) -> EfficiencyVerdict:
    """Full verdict: strong connectivity witness, or source set + dominator."""
    G = build_digraph(A, w, tol_edge)
    connected, comps, source = is_strongly_connected(G)
    if connected:
        return EfficiencyVerdict(True, tuple(comps), G)
    dom = construct_dominating_vector(A, w, source)
    return EfficiencyVerdict(False, tuple(comps), G, tuple(source), dom)


def _normalized_copy(w: Sequence[Scalar], v: Sequence[Scalar]):
    scale = w[0] / v[0]
    return tuple(x * scale for x in v)


def dominance_compare(
    A: ReciprocalMatrix, w: Sequence[Scalar], v: Sequence[Scalar]
) -> str:
    """Entry-wise comparison of approximation errors |a_ij - v_i/v_j|.

    Scale-normalizes v to w first; scalar multiples compare as "equal".
    """
    n = A.n
    if len(w) != n or len(v) != n:
        raise DimensionMismatch("vector sizes do not match the matrix")
    w = check_positive_vector(w)
    v = check_positive_vector(v)
    exact = A.exact and vector_is_exact(w) and vector_is_exact(v)
    if not exact:
        w = tuple(float(x) for x in w)
        v = tuple(float(x) for x in v)
    vn = _normalized_copy(w, v)
    if exact:
        if vn == w:
            return EQUAL
    elif all(abs(a / b - 1.0) <= 1e-12 for a, b in zip(vn, w)):
        return EQUAL
    v_le = w_le = True
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            ew = abs(A[i, j] - w[i] / w[j])
            ev = abs(A[i, j] - vn[i] / vn[j])
            if ev > ew:
                v_le = False
            if ew > ev:
                w_le = False
    if v_le:
        return V_DOMINATES
    if w_le:
        return W_DOMINATES
    return INCOMPARABLE


# ---------------------------------------------------------------------------
# Extension of efficient subvectors


@dataclass(frozen=True)
class ExtensionInterval:
    lo: Scalar
    hi: Scalar
    k: int


def extension_interval(
    A: ReciprocalMatrix, w_minus_k: Sequence[Scalar], k: int, check: bool = True
) -> ExtensionInterval:
    """Closed interval of w_k values extending an efficient subvector.

    w_minus_k must be efficient for A(k); the extension w is efficient iff
    lo <= w_k <= hi with lo/hi the min/max of w_i / a_ik over i != k.
    """
    n = A.n
    if len(w_minus_k) != n - 1:
        raise DimensionMismatch(f"subvector size {len(w_minus_k)} != {n - 1}")
    if check and not is_efficient(A.delete(k), w_minus_k).efficient:
        raise SubvectorNotEfficient(
            f"subvector is not efficient for A({k}); the interval rule does not apply"
        )
    others = [i for i in range(n) if i != k]
    ratios = [w_minus_k[p] / A[i, k] for p, i in enumerate(others)]
    return ExtensionInterval(min(ratios), max(ratios), k)


def extend_one(
    A: ReciprocalMatrix,
    w_minus_k: Sequence[Scalar],
    k: int,
    w_k: Scalar,
    check: bool = True,
) -> bool:
    iv = extension_interval(A, w_minus_k, k, check)
    return iv.lo <= w_k <= iv.hi


def subvector_efficiency_profile(
    A: ReciprocalMatrix, w: Sequence[Scalar]
) -> frozenset:
    """Indices i with w(i) efficient for A(i).  Every efficient w with
    n >= 4 has at least two."""
    if len(w) != A.n:
        raise DimensionMismatch("vector size does not match the matrix")
    return frozenset(
        i
        for i in range(A.n)
        if is_efficient(A.delete(i), tuple(w[j] for j in range(A.n) if j != i)).efficient
    )


def equal_tail_reduce(form, w: Sequence[Scalar]):
    """Delete one of two equal tail entries of the canonical pair (A_n(B), w).

    Efficiency of the reduced pair is equivalent to that of the original.
    Returns (A, w) unchanged when the tail has no equal pair.
    """
    w = check_positive_vector(w)
    A = form.matrix()
    if len(w) != form.n:
        raise DimensionMismatch(f"vector size {len(w)} != {form.n}")
    for p in range(form.s, form.n):
        for q in range(p + 1, form.n):
            if w[p] == w[q]:
                keep = [i for i in range(form.n) if i != p]
                return A.delete(p), tuple(w[i] for i in keep)
    return A, w
