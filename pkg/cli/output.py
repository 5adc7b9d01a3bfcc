"""Текстовое представление отчётов для stdout."""

from app.analysis.schema import ComputeReport
from app.search.schema import CounterexampleReport, VerificationVerdict


def _flag(value: bool) -> str:
    return "true" if value else "false"


def format_compute(report: ComputeReport) -> str:
    lines = [
        f"n: {report.n}",
        f"m: {report.m}",
        f"alpha: {report.alpha}",
        f"F: {report.fib}",
        f"alpha-critical: {_flag(report.alpha_critical)}",
        f"connected: {_flag(report.connected)}",
        f"tree: {_flag(report.tree)}",
        f"class: {report.graph_class.value}",
    ]
    if report.bounds is not None:
        b = report.bounds
        lines += [
            f"lower: {b.lower} (tight: {_flag(b.lower_tight)})",
            f"upper: {b.upper} (tight: {_flag(b.upper_tight)})",
            f"within bounds: {_flag(b.within_bounds)}",
            f"trivial range: {b.trivial_lower}..{b.trivial_upper}",
        ]
    if report.decomposition is not None:
        d = report.decomposition
        lines.append(
            f"decomposition: bridge {d.bridge[0]}-{d.bridge[1]}, "
            f"G1 n={d.g1.n} v1={d.v1} (alpha-critical: {_flag(d.g1_alpha_critical)}), "
            f"G2 n={d.g2.n} v2={d.v2}"
        )
    return "\n".join(lines)


def format_verdict(verdict: VerificationVerdict) -> str:
    head = f"{verdict.theorem.value} n={verdict.n}: {'pass' if verdict.passed else 'FAIL'}"
    details = [
        f"  alpha={d.alpha} {d.graph_class.value}: expected {d.expected}, observed {d.observed}"
        + (f" ({d.note})" if d.note else "")
        for d in verdict.discrepancies
    ]
    notes = [f"  note: {note}" for note in verdict.notes]
    return "\n".join([head, *details, *notes])


def format_counterexample(report: CounterexampleReport) -> str:
    g3, g4 = report.g3, report.g4
    lines = [
        f"G3 = P3+P3: n={g3.n} alpha={g3.alpha} m={g3.m} F={g3.fib}",
        f"G4 = spider: n={g4.n} alpha={g4.alpha} m={g4.m} F={g4.fib}",
    ]
    for c in report.scaling:
        lines.append(
            f"{c.copies} copies: m {c.g3.m} < {c.g4.m}, F {c.g3.fib} < {c.g4.fib}: {_flag(c.holds)}"
        )
    for p in report.star_turan:
        lines.append(
            f"r={p.r}: T(2r,r) m={p.turan_m} F={p.turan_fib} < S_2r m={p.star_m} "
            f"F={p.star_fib}: {_flag(p.holds)}"
        )
    lines.append(f"holds: {_flag(report.holds)}")
    return "\n".join(lines)
