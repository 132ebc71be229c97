"""Command-line entry point: ``pumdp <subcommand> ...``.

Exit codes: 0 success (or MDP), 1 verified not MDP, 2 usage / parameter /
parse error, 3 capacity (field too small or over budget).
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import io as pio
from .bounds import bound_report, column_bound
from .codes import fixed_degree_construct, default_q, cauchy_construct
from .encoder import asymptotic_note, count_report, encode, message_report
from .errors import CapacityError, FieldError, FormatError, ParameterError, UsageError
from .mdp import (
    DEFAULT_BUDGET,
    L_of,
    column_distance_bruteforce,
    count_nontrivial,
    free_distance_check,
    is_mdp,
)

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


def _emit(args, obj: dict) -> None:
    if args.format == "structured":
        sys.stdout.write(pio.dumps_report(obj))
    else:
        print(pio.text_report(obj))


def _witness(verdict) -> dict | None:
    if verdict.witness is None:
        return None
    return {"j": verdict.witness.j, "columns": list(verdict.witness.indices)}


# ---------------------------------------------------------------------------
# construct


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def cmd_construct(args) -> int:
    code = cauchy_construct(args.n, args.k, q=args.q, d=args.d, f=args.f, seed=args.seed)
    t = code.tower
    text = pio.dumps_code(code)
    summary = {
        "n": code.n, "k": code.k, "delta": code.delta, "L": code.L,
        "p": t.p, "m": t.m, "q": t.q, "d": t.d,
        "base_field_size": t.q, "extension_field_size": t.order,
        "f": list(t.f) if t.f is not None else None,
    }
    if args.out:
        pio.write_code(code, args.out)
        summary["out"] = args.out
        _emit(args, summary)
    else:
        sys.stdout.write(text)
        print(pio.text_report(summary), file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def cmd_verify(args) -> int:
    code = pio.read_code(args.input)
    j = code.L
    windows = range(j + 1) if args.all_j else (j,)
    cost = sum(count_nontrivial(code.n, code.k, w) for w in windows)
    if cost > args.budget:
        raise CapacityError(f"verification needs {cost} determinants, over the budget of {args.budget}")
    v = is_mdp(code, all_j=args.all_j, full_scan=args.full_scan, check_degree=args.check_degree, workers=args.threads)
    report = {
        "is_mdp": v.is_mdp,
        "n": code.n, "k": code.k, "delta": code.delta, "L": j,
        "windows": list(v.windows),
        "minors_checked": v.minors_checked,
        "witness": _witness(v),
    }
    if args.full_scan:
        report["zero_minors"] = v.zero_minors
    if args.check_degree:
        report["computed_degree"] = v.computed_degree
    _emit(args, report)
    return EXIT_OK if v.is_mdp else EXIT_FALSE


# ---------------------------------------------------------------------------
# search


@dataclass(frozen=True)
class ExperimentConfig:
    n: int
    k: int
    d: int
    samples: int
    seed: int
    q: int
    workers: int = 1

    def __post_init__(self) -> None:
        if self.samples < 1:
            raise UsageError("samples must be >= 1")
        if not self.k > self.n - self.k >= 1:
            raise ParameterError(f"search needs k > n - k >= 1, got n={self.n}, k={self.k}")


def _search_one(job: tuple[ExperimentConfig, int]) -> dict:
    cfg, index = job
    ss = np.random.SeedSequence([cfg.seed, index])
    code = fixed_degree_construct(cfg.n, cfg.k, cfg.d, seed=ss, q=cfg.q)
    v = is_mdp(code)
    t = code.tower
    f = [t.base_digits(c) for c in t.f] if t.f is not None else None
    return {"index": index, "f": f, "is_mdp": v.is_mdp, "witness": _witness(v)}


def run_search(cfg: ExperimentConfig, budget: int = DEFAULT_BUDGET) -> dict:
    """Random-f experiment; the result (minus wall time) does not depend on ``cfg.workers``."""
    per_sample = count_nontrivial(cfg.n, cfg.k, L_of(cfg.n, cfg.k, cfg.n - cfg.k))
    cost = per_sample * cfg.samples
    if cost > budget:
        raise CapacityError(
            f"search needs about {cost} determinants ({cfg.samples} samples x {per_sample}), over the budget of {budget}"
        )
    start = time.perf_counter()
    jobs = [(cfg, i) for i in range(cfg.samples)]
    if cfg.workers > 1 and cfg.samples > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as ex:
            records = list(ex.map(_search_one, jobs, chunksize=max(1, cfg.samples // (4 * cfg.workers))))
    else:
        records = [_search_one(j) for j in jobs]
    hits = sum(r["is_mdp"] for r in records)
    return {
        "config": asdict(cfg),
        "mdp_count": hits,
        "proportion_mdp": f"{hits}/{cfg.samples}",
        "proportion_reduced": str(Fraction(hits, cfg.samples)),
        "proportion_decimal": f"{hits / cfg.samples:.3f}",
        "records": records,
        "wall_time_s": round(time.perf_counter() - start, 3),
    }


def cmd_search(args) -> int:
    q = args.q if args.q is not None else default_q(args.n, args.k)
    d = args.d if args.d is not None else args.n - args.k
    cfg = ExperimentConfig(args.n, args.k, d, args.samples, args.seed, q, args.threads)
    report = run_search(cfg, args.budget)
    if args.format == "structured":
        _emit(args, report)
    else:
        failed = [r for r in report["records"] if not r["is_mdp"]]
        print(f"n={cfg.n} k={cfg.k} delta={cfg.n - cfg.k} q={cfg.q} d={cfg.d} samples={cfg.samples} seed={cfg.seed}")
        print(f"proportion MDP: {report['proportion_mdp']} = {report['proportion_decimal']}")
        for r in failed:
            print(f"  sample {r['index']}: f={r['f']} witness={r['witness']}")
        print(f"wall time: {report['wall_time_s']} s")
    return EXIT_OK


# ---------------------------------------------------------------------------
# bounds, distance


def cmd_bounds(args) -> int:
    _emit(args, bound_report(args.n, args.k, args.delta).as_dict())
    return EXIT_OK


def cmd_distance(args) -> int:
    code = pio.read_code(args.input)
    js = [args.j] if args.j is not None else list(range(code.L + 1))
    out: dict = {"column_distances": {}, "column_bounds": {}}
    for j in js:
        out["column_distances"][str(j)] = column_distance_bruteforce(code, j, args.budget)
        out["column_bounds"][str(j)] = column_bound(code.n, code.k, j)
    if args.free_cap is not None:
        out["free_distance_upper"] = free_distance_check(code, args.free_cap, args.budget)
    if args.format == "text" and args.j is not None and args.free_cap is None:
        print(out["column_distances"][str(args.j)])
    else:
        _emit(args, out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# encode, complexity


def cmd_encode(args) -> int:
    code = pio.read_code(args.input)
    try:
        text = open(args.msg).read()
    except OSError as exc:
        raise FormatError(f"cannot read {args.msg}: {exc.strerror}") from None
    msg = pio.loads_blocks(text, code)
    if not isinstance(msg, pio.MessageStream):
        raise FormatError(f"{args.msg} holds codeword blocks, expected a message")
    cw = encode(code, msg, args.mode)
    body = pio.dumps_blocks(cw)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)
    if args.counts and msg.blocks:
        rep = message_report(code, msg).as_dict()
        if args.out:
            _emit(args, rep)
        else:
            print(pio.text_report(rep), file=sys.stderr)
    return EXIT_OK


def cmd_complexity(args) -> int:
    code = cauchy_construct(args.n, args.k, d=args.d, seed=args.seed)
    rep = count_report(code, args.steps, seed=args.seed)
    out = {
        "note": asymptotic_note(code.n, code.k, code.tower.d, args.c_q).splitlines(),
        "q": code.tower.q,
        "d": code.tower.d,
        "interior_step": {
            "structured": {"g0_mults": code.k * code.n, "g1_mults": rep.g1_nonzeros},
            "dense": {"g0_mults": code.k * code.n, "g1_mults": code.k * code.n},
        },
        "totals": rep.totals,
        "baseline_totals": rep.baseline_totals,
    }
    if args.c_q is not None:
        out["base_field_units"] = rep.base_field_units(code.tower.d, args.c_q)
    if args.format == "structured":
        _emit(args, out)
    else:
        print("\n".join(out.pop("note")))
        print(pio.text_report(out))
    return EXIT_OK


# ---------------------------------------------------------------------------


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _common(suppress: bool) -> argparse.ArgumentParser:
    # subcommands repeat the global flags; SUPPRESS keeps them from
    # overwriting a value given before the subcommand name
    def dflt(v):
        return argparse.SUPPRESS if suppress else v

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=dflt(0), help="RNG seed (default 0)")
    common.add_argument("--threads", type=_positive, default=dflt(1), help="worker processes (default 1)")
    common.add_argument("--budget", type=_positive, default=dflt(DEFAULT_BUDGET), help="work budget (default 10^7)")
    common.add_argument("--format", choices=("text", "structured"), default=dflt("text"))
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common(suppress=True)
    ap = argparse.ArgumentParser(prog="pumdp", description=__doc__.splitlines()[0], parents=[_common(suppress=False)])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build the Cauchy-based (n, k, n-k) code")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--f", type=_int_list, help="modulus of F_(q^d) as F_q codes, lowest first, monic")
    p.add_argument("--out", help="code-spec file (default: stdout)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="check the MDP property of a code-spec file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--all-j", action="store_true", help="scan every window 0..L, not just L")
    p.add_argument("--full-scan", action="store_true", help="count all vanishing minors instead of stopping")
    p.add_argument("--check-degree", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="proportion of MDP codes over random f")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--d", type=int, help="extension degree (default n - k)")
    p.add_argument("--q", type=int)
    p.add_argument("--samples", type=int, default=1000)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("bounds", parents=[common], help="distance bounds and degree counts")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("delta", type=int)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("distance", parents=[common], help="brute-force column distances")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--j", type=int)
    p.add_argument("--free-cap", type=int, help="also bound the free distance over messages of degree <= this")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("encode", parents=[common], help="encode a message block file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--msg", required=True)
    p.add_argument("--mode", choices=("dense", "structured"), default="structured")
    p.add_argument("--counts", action="store_true", help="report multiplication counts")
    p.add_argument("--out")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("complexity", parents=[common], help="multiplication counts and the asymptotic note")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--steps", type=_positive, default=10)
    p.add_argument("--c-q", type=float, dest="c_q")
    p.set_defaults(func=cmd_complexity)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"pumdp: capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (UsageError, ParameterError, FieldError, FormatError) as exc:
        print(f"pumdp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
