"""
Командная строка: вычисление F, проверка теорем, поиск и замеры.

Коды выхода: 0 - успех (все проверки прошли), 1 - проверка не прошла,
2 - ошибка использования или разбора входа.
"""

import argparse
import random
import sys
from collections.abc import Sequence
from pathlib import Path

from app.analysis.service import analyze_graph, load_graph
from app.bounds.schema import GraphClass
from app.counting.service import FibonacciCounter, fibonacci_index, fibonacci_index_naive
from app.generators.service import random_graph
from app.search.service import (
    build_extremal_report,
    build_size_report,
    counterexample_size_vs_fib,
    verify_theorems,
    write_report,
    write_verdicts,
)
from cli.output import format_compute, format_counterexample, format_verdict
from core.base.config import settings
from core.base.exceptions import FibIndexError
from core.base.logger import LogLevel, get_logger, setup_logging

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def cmd_compute(args: argparse.Namespace) -> int:
    g = load_graph(path=args.file, generator=args.gen)
    report = analyze_graph(g)
    if args.json:
        print(report.model_dump_json(indent=2))
    else:
        print(format_compute(report))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Проверка на всех графах порядка n; отчёты пишутся в --report-dir."""
    verdicts = verify_theorems(
        args.n, threads=args.threads, allow_n8=args.allow_n8, progress=args.progress
    )
    for graph_class in (GraphClass.GENERAL, GraphClass.CONNECTED):
        report = build_extremal_report(
            args.n, graph_class, threads=args.threads, allow_n8=args.allow_n8
        )
        write_report(report, args.report_dir)
    write_verdicts(verdicts, args.n, args.report_dir)

    for verdict in verdicts:
        print(format_verdict(verdict))
    return EXIT_OK if all(v.passed for v in verdicts) else EXIT_FAILED


def cmd_search(args: argparse.Namespace) -> int:
    graph_class = GraphClass(args.graph_class)
    if args.by_size:
        report = build_size_report(
            args.n, graph_class, threads=args.threads, allow_n8=args.allow_n8
        )
        print(report.model_dump_json(indent=2))
        return EXIT_OK

    report = build_extremal_report(
        args.n,
        graph_class,
        threads=args.threads,
        allow_n8=args.allow_n8,
        progress=args.progress,
    )
    if args.out is not None:
        print(write_report(report, args.out))
    else:
        print(report.model_dump_json(indent=2))
    return EXIT_OK


def cmd_oracle_check(args: argparse.Namespace) -> int:
    """Сравнить быстрый подсчёт с полным перебором на случайных графах."""
    rng = random.Random(args.seed)
    mismatches = 0
    for _ in range(args.count):
        n = rng.randint(0, args.max_n)
        p = rng.random()
        seed = rng.randrange(1 << 32)
        g = random_graph(n, p, seed)
        fast, naive = fibonacci_index(g), fibonacci_index_naive(g)
        if fast != naive:
            mismatches += 1
            logger.error("n=%d p=%.3f seed=%d: F=%d, перебор=%d", n, p, seed, fast, naive)
    print(f"oracle-check: {args.count} graphs, {mismatches} mismatches")
    return EXIT_OK if mismatches == 0 else EXIT_FAILED


def cmd_counterexample(args: argparse.Namespace) -> int:
    report = counterexample_size_vs_fib()
    if args.json:
        print(report.model_dump_json(indent=2))
    else:
        print(format_counterexample(report))
    return EXIT_OK if report.holds else EXIT_FAILED


def cmd_bench(args: argparse.Namespace) -> int:
    """
    Замер подсчёта на случайных графах G(n, p).

    Повтор i использует зерно seed + i, так что одинаковые аргументы
    дают одинаковые графы и значения F.
    """
    check_naive = args.check_naive and args.n <= settings.NAIVE_COUNT_LIMIT
    status = EXIT_OK
    print("seed\tm\tF\tbranch_nodes\tmemo_hits\telapsed_s" + ("\tnaive" if check_naive else ""))
    for rep in range(args.reps):
        seed = args.seed + rep
        g = random_graph(args.n, args.density, seed)
        result = FibonacciCounter(g).run()
        row = (
            f"{seed}\t{g.m}\t{result.fib}\t{result.stats.branch_nodes}"
            f"\t{result.stats.memo_hits}\t{result.stats.elapsed:.4f}"
        )
        if check_naive:
            agrees = fibonacci_index_naive(g) == result.fib
            row += "\tok" if agrees else "\tMISMATCH"
            if not agrees:
                status = EXIT_FAILED
        print(row)
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibindex",
        description="Fibonacci index (number of stable sets) of graphs: "
        "counting, bounds and exhaustive extremal search.",
    )
    parser.add_argument(
        "--log-level",
        choices=[level.value for level in LogLevel],
        default=settings.LOG_LEVEL.value,
        help="logging level (logs go to stderr)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="n, m, alpha, F, criticality and bounds")
    source = compute.add_mutually_exclusive_group(required=True)
    source.add_argument("--file", type=Path, help="edge-list file")
    source.add_argument("--gen", help="generator spec, e.g. turan:n=7,alpha=3")
    compute.add_argument("--json", action="store_true", help="structured output")
    compute.set_defaults(func=cmd_compute)

    def add_search_options(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, required=True, help="graph order")
        p.add_argument("--threads", type=int, default=settings.SEARCH_THREADS)
        p.add_argument("--allow-n8", action="store_true", help="permit the long n = 8 run")
        p.add_argument("--progress", action="store_true", help="progress bars on stderr")

    verify = sub.add_parser("verify", help="verify the extremal theorems for order n")
    add_search_options(verify)
    verify.add_argument("--report-dir", type=Path, default=settings.REPORT_DIR)
    verify.set_defaults(func=cmd_verify)

    search = sub.add_parser("search", help="extremal graphs per alpha for order n")
    add_search_options(search)
    search.add_argument(
        "--class",
        dest="graph_class",
        choices=[GraphClass.GENERAL.value, GraphClass.CONNECTED.value],
        default=GraphClass.GENERAL.value,
    )
    search.add_argument("--by-size", action="store_true", help="F ranges per (alpha, m)")
    search.add_argument("--out", type=Path, help="directory for the report file")
    search.set_defaults(func=cmd_search)

    oracle = sub.add_parser("oracle-check", help="fast count against brute force")
    oracle.add_argument("--count", type=int, default=500)
    oracle.add_argument("--max-n", type=int, default=18)
    oracle.add_argument("--seed", type=int, default=0)
    oracle.set_defaults(func=cmd_oracle_check)

    counter = sub.add_parser("counterexample", help="more edges, more stable sets")
    counter.add_argument("--json", action="store_true", help="structured output")
    counter.set_defaults(func=cmd_counterexample)

    bench = sub.add_parser("bench", help="time the count on seeded random graphs")
    bench.add_argument("--n", type=int, required=True)
    bench.add_argument("--density", type=float, default=0.5)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--reps", type=int, default=1)
    bench.add_argument(
        "--check-naive", action="store_true", help="cross-check against brute force"
    )
    bench.set_defaults(func=cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """
    Точка входа CLI.

    Args:
        argv: Аргументы без имени программы (по умолчанию sys.argv[1:]).

    Returns:
        int: Код выхода.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    setup_logging(LogLevel(args.log_level), settings.LOG_FILE)
    try:
        return args.func(args)
    except FibIndexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
