"""Script checking, the constant calculator and certificate verification.

The ``numerics`` management command is a thin shell around these
functions; they return exit codes and text instead of printing so they
can be tested directly.
"""

import json
import logging
from dataclasses import dataclass, replace
from pathlib import Path

from numerics_app.exceptions import DomainError, NumericsError
from numerics_app.expr import eval_interval, free_vars, parse
from numerics_app.interval import Interval
from numerics_app.rational import format_rational, to_decimal

from .certificate import outcome_to_certificate, replay
from .prover import Method, ProofOutcome, ProverConfig, Verdict, decide, decide_with_escalation
from .script import Assertion, parse_script

logger = logging.getLogger(__name__)

EXIT_PROVED = 0
EXIT_UNKNOWN = 1
EXIT_REFUTED = 2
EXIT_ERROR = 3

DECIMAL_DIGITS = 12


@dataclass(frozen=True)
class CheckFlags:
    """Command-line overrides; ``None`` leaves the script's value alone."""

    approx: int | None = None
    split: int | None = None
    taylor: int | None = None
    round_bits: int | None = None
    parallel: int | None = None
    escalate: int | None = None

    def apply(self, config: ProverConfig) -> ProverConfig:
        updates = {}
        if self.approx is not None:
            updates["approx"] = self.approx
        if self.split is not None:
            updates["default_split"] = self.split
            updates["splits"] = {}
        if self.taylor is not None:
            updates["taylor_degree"] = self.taylor
        if self.round_bits is not None:
            updates["round_bits"] = self.round_bits
        if self.parallel is not None:
            updates["parallel_tiles"] = self.parallel
        return replace(config, **updates)


@dataclass
class AssertReport:
    assertion: Assertion
    outcome: ProofOutcome

    def summary(self) -> str:
        config = self.outcome.config
        tiles = [tile for tile in self.outcome.tiles if tile.method is not Method.PROBE]
        parts = [
            f"line {self.assertion.line}: {self.outcome.verdict.value.upper()}",
            f"  {self.outcome.proposition}",
            f"  enclosure {describe_interval(self.outcome.enclosure)}",
            f"  approx={config.approx} tiles={len(tiles)}"
            f" method={'taylor' if self.outcome.taylor_var else 'direct'} time={self.outcome.timing_ms:.1f}ms",
        ]
        failing = self.outcome.failing_tiles
        if failing and self.outcome.verdict is not Verdict.PROVED:
            tile = failing[-1]
            box = ", ".join(f"{name} in {X}" for name, X in tile.box.items())
            parts.append(f"  {tile.check.value} tile ({tile.method.value}): {box or 'no variables'}")
        return "\n".join(parts)


def describe_interval(X: Interval) -> str:
    if X.empty:
        return "empty (side condition violated)"
    low = to_decimal(X.lb, DECIMAL_DIGITS, "down")
    high = to_decimal(X.ub, DECIMAL_DIGITS, "up")
    return f"[{format_rational(X.lb)}, {format_rational(X.ub)}] ~ [{low}, {high}]"


def exit_code(outcomes: list[ProofOutcome]) -> int:
    verdicts = {outcome.verdict for outcome in outcomes}
    if Verdict.REFUTED in verdicts:
        return EXIT_REFUTED
    if Verdict.UNKNOWN in verdicts:
        return EXIT_UNKNOWN
    return EXIT_PROVED


def check_source(source: str, flags: CheckFlags, base: ProverConfig) -> list[AssertReport]:
    reports = []
    for assertion in parse_script(source, base).assertions:
        config = flags.apply(assertion.config)
        logger.info("Checking line %d: %s", assertion.line, assertion.text)
        if flags.escalate is not None:
            outcome = decide_with_escalation(assertion.proposition, assertion.context, config, flags.escalate)
        else:
            outcome = decide(assertion.proposition, assertion.context, config)
        reports.append(AssertReport(assertion, outcome))
    return reports


def run_file(path, flags: CheckFlags, base: ProverConfig, as_json: bool = False) -> tuple[int, str]:
    """Check every assert of a script file.

    Returns:
        tuple: Exit code (0 all proved, 1 some unknown, 2 some refuted,
        3 on error) and the report text, or the certificates as JSON.
    """
    try:
        source = Path(path).read_text(encoding="utf-8")
        reports = check_source(source, flags, base)
    except (NumericsError, OSError) as exc:
        logger.error("Cannot check %s: %s", path, exc)
        return EXIT_ERROR, f"error: {exc}"
    code = exit_code([report.outcome for report in reports])
    if as_json:
        certificates = [outcome_to_certificate(report.outcome) for report in reports]
        return code, json.dumps(certificates, indent=2)
    return code, "\n".join(report.summary() for report in reports)


def eval_expr(text: str, approx: int, round_bits: int | None = None) -> Interval:
    """Enclose a constant expression.

    Raises:
        DomainError: If the expression has free variables.
        ExpressionSyntaxError: If it does not parse.
    """
    e = parse(text)
    names = free_vars(e)
    if names:
        raise DomainError(f"Expression has free variables: {', '.join(sorted(names))}.")
    return eval_interval(e, {}, approx, round_bits)


def verify_file(path) -> tuple[int, str]:
    """Replay every certificate stored in a ``--json`` output file."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
        certificates = data if isinstance(data, list) else [data]
        reports = [replay(certificate) for certificate in certificates]
    except (NumericsError, OSError, ValueError) as exc:
        logger.error("Cannot verify %s: %s", path, exc)
        return EXIT_ERROR, f"error: {exc}"
    lines = []
    for index, report in enumerate(reports):
        status = "reproduced" if report.reproduced else "MISMATCH"
        lines.append(f"certificate {index}: {status} ({report.verdict})")
        lines.extend(f"  {mismatch}" for mismatch in report.mismatches)
    code = EXIT_PROVED if all(report.reproduced for report in reports) else EXIT_ERROR
    return code, "\n".join(lines)
