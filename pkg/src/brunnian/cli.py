"""Command-line front end: rank tables, generator listings, verification."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional, Sequence

from . import verify
from .free_lie import lyndon_words_of_length, monomial_degree, monomial_text, monomial_to_json
from .generators import kset, lemma4_generators, prop5_generators, prop6_generators
from .laws import run_laws
from .ranks import rank_table, witt_rank

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# desk-scale envelope
MAX_N, MAX_Q = 5, 6
MAX_GEN_N, MAX_GEN_DEG = 6, 8

CHECKS = ("all", "kernel", "theorem8", "symmetric", "decomposition", "bidelta", "props")
FORMATS = ("text", "csv", "json", "latex")


class UsageError(Exception):
    pass


def _threads() -> int:
    raw = os.environ.get("BRUNNIAN_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise UsageError(f"BRUNNIAN_THREADS must be an integer, got {raw!r}")


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _require_n(n: int) -> None:
    if n < 2:
        raise UsageError("--n must be at least 2")


# ---------------------------------------------------------------------------

def cmd_rank(args) -> int:
    _require_n(args.n)
    if args.qmax < 1:
        raise UsageError("--qmax must be at least 1")
    table = rank_table(args.n, args.qmax)
    render = {"text": table.to_text, "csv": table.to_csv,
              "json": lambda: table.to_json() + "\n", "latex": table.to_latex}[args.format]
    _emit(render(), args.output)
    return EXIT_OK


def _generator_family(args):
    n, D = args.n, args.degmax
    level = 1 if args.level is None else args.level
    if args.family == "kset":
        if not 1 <= level <= n:
            raise UsageError(f"--level must lie in 1..{n}")
        return kset(n, level, D).monomials
    if args.family in ("prop5", "prop6"):
        if args.level is None:
            raise UsageError(f"--family {args.family} needs --level k with 1 <= k <= {n - 1}")
        if not 1 <= level <= n - 1:
            raise UsageError(f"--level must lie in 1..{n - 1}")
        fn = prop5_generators if args.family == "prop5" else prop6_generators
        return fn(n, level, D)
    # lemma4: X = {A[level,n]}, Y = the remaining letters
    if not 1 <= level <= n - 1:
        raise UsageError(f"--level must lie in 1..{n - 1}")
    X = [f"A[{level},{n}]"]
    Y = [f"A[{j},{n}]" for j in range(1, n) if j != level]
    return lemma4_generators(X, Y, D)


def cmd_generators(args) -> int:
    _require_n(args.n)
    if args.degmax < 1:
        raise UsageError("--degmax must be at least 1")
    if not args.force and (args.n > MAX_GEN_N or args.degmax > MAX_GEN_DEG):
        raise UsageError(f"generator listing limited to n <= {MAX_GEN_N}, degmax <= {MAX_GEN_DEG}; "
                         "pass --force to override")
    mons = _generator_family(args)
    if args.format == "json":
        text = json.dumps([{"degree": monomial_degree(m), "monomial": monomial_to_json(m),
                            "text": monomial_text(m)} for m in mons]) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(["degree", "monomial"])
        w.writerows((monomial_degree(m), monomial_text(m)) for m in mons)
        text = buf.getvalue()
    elif args.format == "latex":
        lines = [r"\begin{tabular}{|c|l|}", r"\hline", r"degree & monomial \\", r"\hline"]
        lines += [rf"{monomial_degree(m)} & \verb|{monomial_text(m)}| \\" for m in mons]
        lines += [r"\hline", r"\end{tabular}"]
        text = "\n".join(lines) + "\n"
    else:
        text = "".join(f"{monomial_degree(m)} {monomial_text(m)}\n" for m in mons)
    _emit(text, args.output)
    return EXIT_OK


def plan_checks(check: str, n: int, q_max: int) -> List[Callable[[], verify.CheckReport]]:
    """Independent check thunks in the order their reports are printed."""
    jobs: List[Callable[[], verify.CheckReport]] = []
    want = (lambda name: check in ("all", name))
    if want("kernel"):
        jobs.append(lambda: verify.check_kernel_ranks(n, q_max))
    if want("theorem8"):
        jobs.append(lambda: verify.check_theorem8(n, q_max))
    if want("props"):
        jobs += [lambda k=k: verify.check_prop3_prop5_prop6(n, k, q_max) for k in range(1, n)]
    if want("symmetric"):
        jobs.append(lambda: verify.check_symmetric_sum(n, q_max))
    if want("decomposition"):
        jobs += [lambda q=q: verify.check_decomposition(n, q) for q in range(1, q_max + 1)]
    if want("bidelta"):
        jobs += [lambda q=q: verify.check_bidelta(n, q) for q in range(1, q_max + 1)]
    return jobs


def run_checks(jobs, threads: int) -> List[verify.CheckReport]:
    if threads <= 1:
        return [job() for job in jobs]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda job: job(), jobs))


def cmd_verify(args) -> int:
    _require_n(args.n)
    if args.qmax < 1:
        raise UsageError("--qmax must be at least 1")
    if not args.force and (args.n > MAX_N or args.qmax > MAX_Q):
        raise UsageError(f"resource guard: verification limited to n <= {MAX_N}, qmax <= {MAX_Q}; "
                         "pass --force to override")
    if args.format == "latex":
        raise UsageError("verify supports --format text, csv or json")
    reports = run_checks(plan_checks(args.check, args.n, args.qmax), _threads())
    ok = all(r.passed for r in reports)
    if args.format == "json":
        text = json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow(["check", "n", "q_max", "status", "witness"])
        w.writerows((r.check, r.n, r.q_max, r.status, r.witness or "") for r in reports)
        text = buf.getvalue()
    else:
        text = "".join(r.to_text() + "\n" for r in reports)
        text += f"{sum(r.passed for r in reports)}/{len(reports)} checks passed\n"
    _emit(text, args.output)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_selftest(args) -> int:
    laws = run_laws(args.seed)
    lines = [law.line() for law in laws]
    ok = all(law.passed for law in laws)
    witt_ok = all(witt_rank(q, k) == len(lyndon_words_of_length(k, q))
                  for k in range(1, 5) for q in range(1, 9))
    lines.append(f"witt vs lyndon counts: {'pass' if witt_ok else 'FAIL'}")
    reports = run_checks(plan_checks("all", 3, 4), _threads())
    lines += [f"{r.check} n={r.n} q_max={r.q_max}: {r.status}" for r in reports]
    ok = ok and witt_ok and all(r.passed for r in reports)
    lines.append("selftest " + ("passed" if ok else "FAILED"))
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="brunnian",
                                     description="Exact computations in L(P_n) and its Brunnian ideal.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, n_required=True):
        p.add_argument("--n", type=int, required=n_required, help="number of strands (>= 2)")
        p.add_argument("--format", choices=FORMATS, default="text")
        p.add_argument("--output", help="write to this file (UTF-8) instead of stdout")
        p.add_argument("--force", action="store_true", help="bypass the desk-scale guard")

    p = sub.add_parser("rank", help="rank table of L_q(P_n) and the Brunnian part")
    common(p)
    p.add_argument("--qmax", type=int, default=6)
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("generators", help="list generator monomials in canonical order")
    common(p)
    p.add_argument("--degmax", type=int, default=4)
    p.add_argument("--level", type=int, default=None, help="level k (default 1 for kset)")
    p.add_argument("--family", choices=("kset", "prop5", "prop6", "lemma4"), default="kset")
    p.set_defaults(func=cmd_generators)

    p = sub.add_parser("verify", help="run brute-force verification checks")
    common(p)
    p.add_argument("--qmax", type=int, default=4)
    p.add_argument("--check", choices=CHECKS, default="all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", help="seeded algebra-law trials plus a small verification suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"brunnian: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"brunnian: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
