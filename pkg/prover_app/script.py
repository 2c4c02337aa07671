"""Proposition scripts.

A script is a sequence of statements separated by newlines or ``;``,
with ``#`` starting a comment::

    const g = 9.8
    var x in [0, 1]
    option approx = 4
    assert x*(1-x) in [0, 9/32] with split(x, 16)
    assert atan(x) - x <= 0 with taylor(x, 2, 1/2), approx(5)

Constants are expanded into every later expression. Options change the
configuration of the asserts that follow them; ``with`` clauses apply to
one assert only.
"""

import logging
from dataclasses import dataclass, field, replace
from typing import Any

from numerics_app.exceptions import ExpressionSyntaxError, NumericsError, ScriptError
from numerics_app.expr import Expr, Parser, fold_rational
from numerics_app.interval import Interval

from .propositions import Proposition, read_interval, read_proposition
from .prover import TAYLOR_SCOPES, ProverConfig

logger = logging.getLogger(__name__)

SWITCHES = {"on": True, "off": False}


@dataclass
class Assertion:
    line: int
    text: str
    proposition: Proposition
    context: dict[str, Interval]
    config: ProverConfig


@dataclass
class ScriptFile:
    constants: dict[str, Expr] = field(default_factory=dict)
    context: dict[str, Interval] = field(default_factory=dict)
    assertions: list[Assertion] = field(default_factory=list)


def _statements(source: str):
    for number, raw in enumerate(source.splitlines(), start=1):
        for piece in raw.split("#", 1)[0].split(";"):
            if piece.strip():
                yield number, piece.strip()


def _natural(parser: Parser, what: str) -> int:
    token = parser.current
    if token.kind != "number" or not token.text.isdigit():
        parser.fail(f"Expected a natural number for {what}")
    parser.advance()
    return int(token.text)


def _switch(parser: Parser, what: str) -> bool:
    word = parser.expect_ident()
    if word not in SWITCHES:
        raise ExpressionSyntaxError(f"{what} takes on or off, found '{word}'")
    return SWITCHES[word]


def _apply_option(parser: Parser, config: ProverConfig) -> ProverConfig:
    key = parser.expect_ident()
    parser.expect("=")
    match key:
        case "approx":
            return replace(config, approx=_natural(parser, key))
        case "splits":
            return replace(config, default_split=_natural(parser, key))
        case "round_bits":
            if parser.current.kind == "ident":
                if parser.expect_ident() != "off":
                    parser.fail("round_bits takes a number or off")
                return replace(config, round_bits=None)
            return replace(config, round_bits=_natural(parser, key))
        case "rewrites":
            return replace(config, rewrite_exact_enabled=_switch(parser, key))
        case "simplify":
            return replace(config, simplify_enabled=_switch(parser, key))
        case "probe":
            return replace(config, probe=_switch(parser, key))
        case "taylor_scope":
            scope = parser.expect_ident()
            if scope not in TAYLOR_SCOPES:
                raise ExpressionSyntaxError(f"Unknown Taylor scope '{scope}'")
            return replace(config, taylor_scope=scope)
    raise ExpressionSyntaxError(f"Unknown option '{key}'")


def _apply_clause(parser: Parser, config: ProverConfig, updates: dict[str, Any]) -> None:
    name = parser.expect_ident()
    parser.expect("(")
    match name:
        case "taylor":
            updates["taylor_var"] = parser.expect_ident()
            parser.expect(",")
            updates["taylor_degree"] = _natural(parser, "the Taylor degree")
            if parser.accept(","):
                updates["taylor_center"] = fold_rational(parser.expression())
        case "split":
            var = parser.expect_ident()
            parser.expect(",")
            splits = dict(updates.get("splits", config.splits))
            splits[var] = _natural(parser, "the tile count")
            updates["splits"] = splits
        case "approx":
            updates["approx"] = _natural(parser, "approx")
        case _:
            raise ExpressionSyntaxError(f"Unknown clause '{name}'")
    parser.expect(")")


def parse_script(source: str, base: ProverConfig | None = None) -> ScriptFile:
    """Read a script into its assertions, each with its own context and config.

    Raises:
        ScriptError: With the line number, for any syntax or naming error.
    """
    config = base or ProverConfig()
    script = ScriptFile()
    for line, statement in _statements(source):
        keyword, _, rest = statement.partition(" ")
        rest = rest.strip()
        try:
            parser = Parser(rest, script.constants)
            match keyword:
                case "const":
                    name = parser.expect_ident()
                    _check_fresh(name, script)
                    parser.expect("=")
                    script.constants[name] = parser.expression()
                case "var":
                    name = parser.expect_ident()
                    _check_fresh(name, script)
                    if parser.expect_ident() != "in":
                        parser.fail("Expected 'in'")
                    script.context[name] = read_interval(parser)
                case "option":
                    config = _apply_option(parser, config)
                case "assert":
                    proposition = read_proposition(parser)
                    updates: dict[str, Any] = {}
                    if parser.current.kind == "ident" and parser.current.text == "with":
                        parser.advance()
                        _apply_clause(parser, config, updates)
                        while parser.accept(","):
                            _apply_clause(parser, config, updates)
                    script.assertions.append(
                        Assertion(line, rest, proposition, dict(script.context), replace(config, **updates))
                    )
                case _:
                    raise ScriptError(f"Unknown statement '{keyword}'", line)
            parser.expect_end()
        except ScriptError:
            raise
        except NumericsError as exc:
            raise ScriptError(str(exc), line)
    logger.debug("Parsed script with %d assertion(s).", len(script.assertions))
    return script


def _check_fresh(name: str, script: ScriptFile) -> None:
    if name in script.constants or name in script.context:
        raise ExpressionSyntaxError(f"'{name}' is already declared")
    if name in ("pi", "in", "with"):
        raise ExpressionSyntaxError(f"'{name}' is reserved")
