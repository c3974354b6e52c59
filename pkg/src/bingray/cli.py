"""Command-line front end.

Exit status: 0 on success, 1 for usage or parse errors, 2 for domain
errors such as a part of size 1 or stepping back from the empty partition.
Indices are 1-based: ``unrank 1`` is the empty partition.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import gray_oracle, ranking, selftest
from .counting import bpc
from .errors import DomainError, PartitionSyntaxError
from .partition import BinaryPartition, parse
from .stepper import GrayCursor

# stepping keeps digits within machine range
MAX_STEP_SIZE = 1 << 62
# above this size the trace omits the index rather than build b() that far
MAX_RANKED_SIZE = 1 << 16


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


class _Out:
    def __init__(self, fmt, stream):
        self.jsonl = fmt == "jsonl"
        self.stream = stream

    def emit(self, text, record):
        if self.jsonl:
            self.stream.write(json.dumps(record) + "\n")
        else:
            self.stream.write(text + "\n")


def _nonneg(text):
    try:
        value = int(text)
    except ValueError:
        raise UsageError(f"expected a nonnegative integer, got {text!r}") from None
    if value < 0:
        raise UsageError(f"expected a nonnegative integer, got {text!r}")
    return value


def _index_arg(text):
    text = text.strip()
    if not text.isdigit():
        raise UsageError(f"index must be a positive decimal integer, got {text!r}")
    return int(text)


def _check_steppable(p):
    if p.size > MAX_STEP_SIZE:
        raise DomainError(f"partition size {p.size} exceeds the stepping limit 2^62")


def _cmd_count(args, out):
    value = bpc(args.n)
    out.emit(str(value), {"n": args.n, "count": value})


def _cmd_list(args, out):
    for pos, pp in enumerate(gray_oracle.gray_B_n(args.n), start=1):
        text = str(pp) if args.pad else str(pp.even_part)
        out.emit(text, {"index": pos, "partition": text, "ones": pp.ones})


def _cmd_seq(args, out):
    c = GrayCursor(index=1)
    for k in range(1, args.limit + 1):
        if k > 1:
            c.step(True)
        text = str(c.partition())
        out.emit(text, {"index": k, "partition": text})


def _trace_record(index, p, eps, move):
    text = str(p)
    rec = {}
    if index is not None:
        rec["index"] = index
    rec["partition"] = text
    rec["epsilon"] = eps
    fields = ["-" if index is None else str(index), text, f"{eps:+d}"]
    if move is None:
        fields += ["-", "-", "-"]
    else:
        rec.update(rule=move.rule, action=move.action, level=move.level)
        fields += [move.rule, move.action, str(move.level)]
    return " ".join(fields), rec


def _step_command(args, out, forward, trace):
    p = args.partition
    _check_steppable(p)
    index = ranking.rank(p) if p.size <= MAX_RANKED_SIZE else None
    c = GrayCursor(p, index)
    for _ in range(args.steps):
        if trace:
            before, eps, idx = c.partition(), c.epsilon, c.index
            move = c.step(forward)
            out.emit(*_trace_record(idx, before, eps, move))
        else:
            c.step(forward)
    final = c.partition()
    if trace:
        out.emit(*_trace_record(c.index, final, c.epsilon, None))
    else:
        text = str(final)
        rec = {"partition": text}
        if c.index is not None:
            rec = {"index": c.index, **rec}
        out.emit(text, rec)


def _cmd_next(args, out):
    _step_command(args, out, True, args.trace)


def _cmd_prev(args, out):
    _step_command(args, out, False, args.trace)


def _cmd_walk(args, out):
    _step_command(args, out, True, True)


def _cmd_rank(args, out):
    k = ranking.rank(args.partition)
    out.emit(str(k), {"index": k, "partition": str(args.partition)})


def _cmd_unrank(args, out):
    if args.k < 1:
        raise DomainError("indices start at 1")
    p = ranking.unrank(args.k)
    out.emit(str(p), {"index": args.k, "partition": str(p)})


def _cmd_trail(args, out):
    t = ranking.trail(args.partition)
    out.emit(",".join(map(str, t)) or "-", {"partition": str(args.partition), "trail": list(t)})


def _cmd_selftest(args, out):
    ok = True
    for name, passed, detail in selftest.run(args.max_n):
        ok &= passed
        status = "PASS" if passed else "FAIL"
        text = f"{status} {name}" + (f": {detail}" if detail else "")
        out.emit(text, {"check": name, "passed": passed, "detail": detail})
    return 0 if ok else 1


def _cmd_bench(args, out):
    start = args.start if args.start is not None else BinaryPartition()
    _check_steppable(start)
    c = GrayCursor(start)
    step = c.step
    worst = 0
    t0 = time.perf_counter()
    for _ in range(args.steps):
        step(True)
        if c.touches > worst:
            worst = c.touches
    elapsed = time.perf_counter() - t0
    rate = args.steps / elapsed if elapsed > 0 else float("inf")
    text = f"steps {args.steps}\nseconds {elapsed:.3f}\nsteps_per_second {rate:.0f}\nmax_touches {worst}"
    out.emit(text, {"steps": args.steps, "seconds": elapsed, "steps_per_second": rate, "max_touches": worst})


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "jsonl"), default=argparse.SUPPRESS)

    parser = _Parser(prog="bingray", description="Gray sequence of binary partitions.", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", parents=[common], help="print b(n)")
    p.add_argument("n", type=_nonneg)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("list", parents=[common], help="print B(n), one partition per line")
    p.add_argument("n", type=_nonneg)
    p.add_argument("--pad", action="store_true", help="show the parts of size 1 as 1^m")
    p.set_defaults(func=_cmd_list)

    p = sub.add_parser("seq", parents=[common], help="print B_1 .. B_K")
    p.add_argument("--limit", type=_nonneg, required=True)
    p.set_defaults(func=_cmd_seq)

    for name, func, help_ in (("next", _cmd_next, "step forward"), ("prev", _cmd_prev, "step backward")):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("partition", type=str)
        p.add_argument("--steps", type=_nonneg, default=1)
        p.add_argument("--trace", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("walk", parents=[common], help="step forward, tracing every move")
    p.add_argument("partition", type=str)
    p.add_argument("--steps", type=_nonneg, required=True)
    p.add_argument("--trace", action="store_true", help="accepted for symmetry; always on")
    p.set_defaults(func=_cmd_walk)

    p = sub.add_parser("rank", parents=[common], help="1-based index of a partition")
    p.add_argument("partition", type=str)
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("unrank", parents=[common], help="partition at a 1-based index")
    p.add_argument("k", type=_index_arg)
    p.set_defaults(func=_cmd_unrank)

    p = sub.add_parser("trail", parents=[common], help="sizes under repeated halving")
    p.add_argument("partition", type=str)
    p.set_defaults(func=_cmd_trail)

    p = sub.add_parser("selftest", parents=[common], help="run the invariant checks")
    p.add_argument("--max-n", type=_nonneg, default=64)
    p.set_defaults(func=_cmd_selftest)

    p = sub.add_parser("bench", parents=[common], help="time forward stepping")
    p.add_argument("--steps", type=_nonneg, required=True)
    p.add_argument("--start", type=str, default=None)
    p.set_defaults(func=_cmd_bench)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        for name in ("partition", "start"):
            if getattr(args, name, None) is not None:
                setattr(args, name, parse(getattr(args, name)))
        out = _Out(getattr(args, "format", "text"), stdout)
        code = args.func(args, out)
        return code or 0
    except DomainError as exc:
        stderr.write(f"bingray: {exc}\n")
        return 2
    except (UsageError, PartitionSyntaxError) as exc:
        stderr.write(f"{exc}\n")
        return 1


def main():
    sys.exit(run())
