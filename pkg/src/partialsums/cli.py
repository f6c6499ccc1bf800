"""Command-line front end.

Exit codes: 0 success, 1 contract violation (index or target out of range,
overflow, failed self-test), 2 malformed input or usage.
"""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .arrayfile import ArrayFileError, read_array, write_array
from .bench import DEFAULT_MIX, run_bench
from .groups import INT64
from .oracle import differential_check
from .sampler import RNG_NAME, WeightedSampler
from .sumtree import PartialSumTree


class UsageError(Exception):
    pass


def _load(path) -> PartialSumTree:
    values = read_array(path)
    try:
        return PartialSumTree.build(values, INT64)
    except OverflowError as exc:
        raise ArrayFileError(f"{path}: {exc}") from None


def _mix(text: str):
    mix = {}
    for part in text.split(","):
        name, sep, weight = part.partition("=")
        if not sep or name not in DEFAULT_MIX:
            raise argparse.ArgumentTypeError(f"bad mix entry {part!r}")
        try:
            mix[name] = float(weight)
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad mix weight {weight!r}") from None
    return mix


def cmd_build(args) -> List[str]:
    write_array(args.out, _load(args.input).values())
    return []


def cmd_dump(args) -> List[str]:
    tree = _load(args.file)
    return [f"N {tree.capacity}"] + [str(v) for v in tree.cells]


def cmd_get(args):
    return [str(_load(args.file).get(args.k))]


def cmd_sum(args):
    return [str(_load(args.file).range_sum(args.j, args.k))]


def cmd_suffix(args):
    return [str(_load(args.file).suffix_sum(args.k))]


def cmd_find(args):
    return [str(_load(args.file).find(args.x))]


def cmd_inc(args):
    tree = _load(args.file)
    tree.inc(args.k, args.d)
    write_array(args.file, tree.values())
    return []


def cmd_set(args):
    tree = _load(args.file)
    tree.set(args.k, args.x)
    write_array(args.file, tree.values())
    return []


def cmd_sample(args):
    sampler = WeightedSampler(_load(args.file).values(), seed=args.seed)
    counts = sampler.histogram(args.draws)
    head = f"# rng={RNG_NAME} seed={args.seed} draws={args.draws} total={sampler.total()}"
    return [head] + [f"{k} {c}" for k, c in enumerate(counts)]


def cmd_bench(args):
    report = run_bench(args.sizes, args.ops, mix=args.mix, seed=args.seed)
    lines = report.lines()
    if not report.ok:
        raise ValueError("bench: counter bound or oracle check failed\n" + "\n".join(lines))
    return lines


def cmd_selftest(args):
    res = differential_check(
        max_m=args.max_m, cases=args.cases, length=args.length, seed=args.seed
    )
    lines = [
        f"sequences={res.sequences} operations={res.operations} "
        f"finds={res.finds} mismatches={len(res.mismatches)}"
    ]
    if not res.ok:
        raise ValueError("selftest failed:\n" + "\n".join(res.mismatches))
    return lines


_TRACE_ARITY = {"sumN": 1, "get": 1, "inc": 2, "find": 1}


def cmd_trace(args):
    op = "sumN" if args.op == "suffix" else args.op
    if op not in _TRACE_ARITY:
        raise UsageError(f"trace: unknown op {args.op!r} (sumN, get, inc, find)")
    if len(args.args) != _TRACE_ARITY[op]:
        raise UsageError(f"trace {op}: expected {_TRACE_ARITY[op]} argument(s)")
    try:
        nums = [int(a) for a in args.args]
    except ValueError:
        raise UsageError(f"trace {op}: arguments must be integers") from None
    tree = _load(args.file)
    if op == "sumN":
        _, tr = tree.suffix_sum_traced(nums[0])
    elif op == "get":
        _, tr = tree.get_traced(nums[0])
    elif op == "inc":
        # read-only: the file is not rewritten
        tr = tree.inc_traced(nums[0], nums[1])
    else:
        _, tr = tree.find_traced(nums[0])
    return tr.lines()


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="partialsums", description="Logarithmic-time partial sums over array files."
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("build", help="validate and normalize an array file")
    s.add_argument("input")
    s.add_argument("out")
    s.set_defaults(func=cmd_build)

    s = sub.add_parser("dump", help="print capacity and stored cells")
    s.add_argument("file")
    s.set_defaults(func=cmd_dump)

    s = sub.add_parser("get", help="print X[k]")
    s.add_argument("file")
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_get)

    s = sub.add_parser("sum", help="print X[j] + ... + X[k]")
    s.add_argument("file")
    s.add_argument("j", type=int)
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_sum)

    s = sub.add_parser("suffix", help="print X[k] + ... + X[M-1]")
    s.add_argument("file")
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_suffix)

    s = sub.add_parser("inc", help="add d to X[k] in place")
    s.add_argument("file")
    s.add_argument("k", type=int)
    s.add_argument("d", type=int)
    s.set_defaults(func=cmd_inc)

    s = sub.add_parser("set", help="assign X[k] = x in place")
    s.add_argument("file")
    s.add_argument("k", type=int)
    s.add_argument("x", type=int)
    s.set_defaults(func=cmd_set)

    s = sub.add_parser("find", help="print k with suffix(k+1) <= x < suffix(k)")
    s.add_argument("file")
    s.add_argument("x", type=int)
    s.set_defaults(func=cmd_find)

    s = sub.add_parser("sample", help="draw events by weight and print counts")
    s.add_argument("file")
    s.add_argument("--draws", type=int, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_sample)

    s = sub.add_parser("bench", help="loop counters and timings vs. the naive array")
    s.add_argument("--sizes", type=int, nargs="+", default=[16, 1024])
    s.add_argument("--ops", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--mix", type=_mix, default=None,
                   help="e.g. inc=0.5,sum=0.2,get=0.2,find=0.1")
    s.set_defaults(func=cmd_bench)

    s = sub.add_parser("selftest", help="randomized differential test against the oracle")
    s.add_argument("--max-m", type=int, default=64)
    s.add_argument("--cases", type=int, default=200)
    s.add_argument("--length", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_selftest)

    s = sub.add_parser("trace", help="print loop traces of sumN, get, inc or find")
    s.add_argument("file")
    s.add_argument("op")
    s.add_argument("args", nargs="*")
    s.set_defaults(func=cmd_trace)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        lines = args.func(args)
    except (ArrayFileError, UsageError) as exc:
        print(f"partialsums: {exc}", file=sys.stderr)
        return 2
    except (IndexError, ValueError, OverflowError, TypeError) as exc:
        print(f"partialsums: {exc}", file=sys.stderr)
        return 1
    for line in lines:
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
