"""Command-line surface: check, perron, generate, reproduce.

Exit codes: 0 success (check: efficient), 1 inefficient / reproduction
mismatch, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from . import fixtures
from .blockpert import (
    ConstantBlockMatrix,
    ThreeBlockMatrix,
    TwoBlockMatrix,
    constant_block_sample,
    three_block_generate,
    two_block_is_efficient,
    _sample_in,
)
from .efficiency import TOL_EDGE, is_efficient
from .errors import EffvecError, InvalidSpec, TheoremViolation
from .io import load_matrix, load_vector, parse_scalar, scalar_repr
from .matrix import detect_minimal_block, is_exact_scalar, validate_reciprocal
from .perron import (
    TOL_PERRON,
    perron,
    perron_efficiency_via_submatrix,
    perron_tail_structure,
    three_block_sufficient,
)


def _use_color() -> bool:
    return os.environ.get("PCM_NO_COLOR") is None and sys.stdout.isatty()


def _paint(text: str, good: bool) -> str:
    if not _use_color():
        return text
    return f"\033[32m{text}\033[0m" if good else f"\033[31m{text}\033[0m"


def _check_tol(name: str, value: float) -> float:
    if not 0 < value < 1e-3:
        raise InvalidSpec(f"{name} override {value} outside (0, 1e-3)")
    return value


def cmd_check(args) -> int:
    A = load_matrix(args.matrix, args.backend)
    w = load_vector(args.vector, args.backend)
    tol_edge = _check_tol("--tol-edge", args.tol_edge)
    verdict = is_efficient(A, w, tol_edge)
    if args.format == "json":
        print(json.dumps(verdict.to_dict()))
    elif args.format == "csv":
        print(f"status,{verdict.status}")
        if not verdict.efficient:
            print("dominator," + ",".join(str(scalar_repr(x)) for x in verdict.dominator))
    else:
        print(_paint(verdict.status.upper(), verdict.efficient))
        print("components:", [[v + 1 for v in c] for c in verdict.components])
        if not verdict.efficient:
            print("source set:", [v + 1 for v in verdict.source_set])
            print(
                "dominating vector:",
                " ".join(str(scalar_repr(x)) for x in verdict.dominator),
            )
    return 0 if verdict.efficient else 1


def cmd_perron(args) -> int:
    A = load_matrix(args.matrix, args.backend)
    tol = _check_tol("--tol-perron", args.tol_perron)
    r = perron(A, tol)
    out = {
        "lambda": r.lam,
        "vector": list(r.w),
        "residual": r.residual,
        "structure_ok": None,
        "sufficient_condition": None,
    }
    detected = detect_minimal_block(A) if A.n <= 8 else None
    if detected is not None:
        form = detected.form
        # the Perron vector of the canonical form relates to A's by the
        # back map; recompute on the canonical matrix for structure checks
        r_can = perron(form.matrix(), tol)
        ts = perron_tail_structure(form, r_can)
        out["structure_ok"] = ts.ok
        out["block_indices"] = [i + 1 for i in detected.K]
        if form.s == 3:
            tbm = ThreeBlockMatrix(form.block, form.n)
            norm, _ = tbm.normalize()
            cond = three_block_sufficient(norm.block)
            out["sufficient_condition"] = cond.matched
        verdict = perron_efficiency_via_submatrix(form, r_can)
    else:
        verdict = is_efficient(A.to_float(), r.w)
    out["verdict"] = verdict.to_dict()
    if args.format == "table":
        print(f"lambda   = {r.lam:.12g}")
        print(f"residual = {r.residual:.3e}")
        print("vector   =", " ".join(f"{x:.12g}" for x in r.w))
        if out["sufficient_condition"] is not None:
            print("matched sufficient condition:", out["sufficient_condition"])
        print("Perron vector:", _paint(verdict.status, verdict.efficient))
    else:
        print(json.dumps(out))
    return 0 if verdict.efficient else 1


def _two_block_stream(x, n, rng):
    S = TwoBlockMatrix(x, n)
    one = Fraction(1) if is_exact_scalar(x) else 1.0
    asc = x >= 1
    while True:
        w2 = one
        if asc:
            w1 = _sample_in(w2, x * w2, rng, is_exact_scalar(x))
            lo, hi = w2, w1
        else:
            w1 = _sample_in(x * w2, w2, rng, is_exact_scalar(x))
            lo, hi = w1, w2
        mids = tuple(_sample_in(lo, hi, rng, is_exact_scalar(x)) for _ in range(n - 2))
        w = (w1, w2) + mids
        if not two_block_is_efficient(S, w):
            raise TheoremViolation(f"two-block sampler produced non-chain vector {w}")
        yield {"vector": w, "seed_head": (w1, w2), "tail_bounds": (lo, hi),
               "permutation": None, "matrix": S.matrix()}


def _three_block_seed_stream(rng):
    while True:
        yield tuple(Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(4))


def _generate_records(args, rng):
    if args.family == "2block":
        x = parse_scalar(args.x)
        for rec in _two_block_stream(x, args.n, rng):
            yield rec
    elif args.family == "3block":
        a12, a13, a23 = (parse_scalar(args.a12), parse_scalar(args.a13),
                         parse_scalar(args.a23))
        tbm = ThreeBlockMatrix(fixtures.three_block_from_triple(a12, a13, a23), args.n)
        A = tbm.matrix()
        for g in three_block_generate(tbm, _three_block_seed_stream(rng), rng):
            yield {"vector": g.vector, "seed_head": g.seed_head,
                   "tail_bounds": g.tail_bounds, "permutation": g.permutation,
                   "matrix": A}
    elif args.family == "constant":
        x = parse_scalar(args.x)
        M = ConstantBlockMatrix(x, args.s, args.n)
        A = M.matrix()
        for g in constant_block_sample(M, rng):
            yield {"vector": g.vector, "seed_head": g.seed_head,
                   "tail_bounds": g.tail_bounds, "permutation": g.permutation,
                   "matrix": A}
    else:
        raise InvalidSpec(f"unknown family {args.family!r}")


def cmd_generate(args) -> int:
    if args.family in ("2block", "constant") and args.x is None:
        raise InvalidSpec(f"--x is required for {args.family}")
    if args.family == "3block" and None in (args.a12, args.a13, args.a23):
        raise InvalidSpec("--a12/--a13/--a23 are required for 3block")
    if args.family == "constant" and args.s is None:
        raise InvalidSpec("--s is required for constant")
    rng = random.Random(args.seed)
    emitted = 0
    for rec in _generate_records(args, rng):
        # self-certify before emission
        if not is_efficient(rec["matrix"], rec["vector"]).efficient:
            raise TheoremViolation(f"generated vector failed the digraph test: {rec}")
        print(
            json.dumps(
                {
                    "vector": [scalar_repr(v) for v in rec["vector"]],
                    "seed_head": [scalar_repr(v) for v in rec["seed_head"]],
                    "tail_bounds": [scalar_repr(v) for v in rec["tail_bounds"]],
                    "permutation": rec["permutation"],
                }
            )
        )
        emitted += 1
        if emitted >= args.count:
            break
    return 0


def cmd_reproduce(args) -> int:
    if args.target == "table1":
        checks = fixtures.reproduce_table1()
    elif args.target == "examples":
        checks = fixtures.reproduce_examples()
    else:
        checks = fixtures.reproduce_all()
    failures = 0
    for c in checks:
        tag = _paint("PASS", True) if c.ok else _paint("FAIL", False)
        line = f"[{tag}] {c.name}"
        if c.detail:
            line += f"  ({c.detail})"
        print(line)
        failures += 0 if c.ok else 1
    print(f"{len(checks) - failures}/{len(checks)} checks passed")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="effvec",
        description="Pareto-efficient weight vectors for reciprocal matrices",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--backend", choices=["exact", "float"], default=None,
                        help="force a numeric backend (default: inferred from input)")
        sp.add_argument("--format", choices=["json", "csv", "table"], default="table")
        sp.add_argument("--tol-edge", type=float, default=TOL_EDGE)
        sp.add_argument("--tol-perron", type=float, default=TOL_PERRON)
        sp.add_argument("--seed", type=int, default=0)

    sp = sub.add_parser("check", help="decide efficiency of a vector for a matrix")
    sp.add_argument("matrix")
    sp.add_argument("vector")
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("perron", help="Perron eigenpair and its efficiency")
    sp.add_argument("matrix")
    common(sp)
    sp.set_defaults(func=cmd_perron)

    sp = sub.add_parser("generate", help="stream certified efficient vectors")
    sp.add_argument("family", choices=["2block", "3block", "constant"])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--s", type=int, default=None)
    sp.add_argument("--x", default=None)
    sp.add_argument("--a12", default=None)
    sp.add_argument("--a13", default=None)
    sp.add_argument("--a23", default=None)
    sp.add_argument("--count", type=int, default=10)
    common(sp)
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("reproduce", help="replay bundled fixtures")
    sp.add_argument("target", choices=["table1", "examples", "all"])
    common(sp)
    sp.set_defaults(func=cmd_reproduce)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (EffvecError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
