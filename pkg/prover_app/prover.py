"""Deciding numerical propositions by interval evaluation.

A decision prepares the expression (notable-angle rewrites, then
simplification), splits the context into tiles, encloses the expression
on every tile (directly or through a Taylor form) and judges each
enclosure:

* Proved when the enclosure satisfies the relation (or lies inside the
  membership target) on every tile,
* Refuted when some tile's enclosure satisfies the negated relation (or
  misses the target) entirely,
* Unknown otherwise. The approximation parameter is never raised
  automatically; :func:`decide_with_escalation` does that on request.
"""

import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from typing import Mapping

from numerics_app.exceptions import ConfigurationError, DomainError, UnboundVariableError
from numerics_app.expr import Expr, check_context, eval_interval, free_vars, rewrite_exact, simplify
from numerics_app.interval import (
    Interval,
    disjoint,
    hull_all,
    midpoint,
    point,
    rel_cmp,
    split_even,
    subset,
)

from .propositions import Membership, Proposition, Relational
from .taylor import TaylorForm, derivative_chain, eval_taylor_form, taylor_form_from_derivatives

logger = logging.getLogger(__name__)

TAYLOR_SCOPES = ("tile", "global")


class Verdict(str, Enum):
    PROVED = "proved"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


class Method(str, Enum):
    DIRECT = "direct"
    TAYLOR = "taylor"
    PROBE = "probe"


@dataclass(frozen=True)
class ProverConfig:
    """Parameters of one decision.

    ``splits`` gives a tile count per variable; variables it does not
    name are cut into ``default_split`` tiles. ``taylor_degree`` 0
    disables Taylor forms.
    """

    approx: int = 3
    splits: Mapping[str, int] = field(default_factory=dict)
    default_split: int = 1
    taylor_degree: int = 0
    taylor_var: str | None = None
    taylor_center: Fraction | None = None
    taylor_scope: str = "tile"
    round_bits: int | None = None
    rewrite_exact_enabled: bool = True
    simplify_enabled: bool = True
    probe: bool = True
    parallel_tiles: int = 1

    def __post_init__(self):
        object.__setattr__(self, "splits", dict(self.splits))
        if self.approx < 0:
            raise ConfigurationError("approx must be a natural number.")
        for name, k in self.splits.items():
            if k < 1:
                raise ConfigurationError(f"Tile count for '{name}' must be at least 1.")
        if self.default_split < 1:
            raise ConfigurationError("Default tile count must be at least 1.")
        if self.taylor_degree < 0:
            raise ConfigurationError("Taylor degree must be a natural number.")
        if self.taylor_scope not in TAYLOR_SCOPES:
            raise ConfigurationError(f"Taylor scope must be one of {', '.join(TAYLOR_SCOPES)}.")
        if self.round_bits is not None and self.round_bits < 1:
            raise ConfigurationError("round_bits must be at least 1.")
        if self.parallel_tiles < 1:
            raise ConfigurationError("parallel_tiles must be at least 1.")
        if self.taylor_center is not None:
            object.__setattr__(self, "taylor_center", Fraction(self.taylor_center))

    @classmethod
    def from_settings(cls, **overrides) -> "ProverConfig":
        """Defaults from ``settings.NUMERICS`` with ``overrides`` applied."""
        from django.conf import settings

        numerics = getattr(settings, "NUMERICS", {})
        values = {
            "approx": numerics.get("DEFAULT_APPROX", 3),
            "round_bits": numerics.get("ROUND_BITS"),
            "parallel_tiles": numerics.get("PARALLEL_TILES", 1),
        }
        values.update(overrides)
        return cls(**values)

    def tile_count(self, context: Mapping[str, Interval]) -> int:
        count = 1
        for name in context:
            count *= self.splits.get(name, self.default_split)
        return count


@dataclass(frozen=True)
class TileResult:
    box: dict[str, Interval]
    enclosure: Interval
    check: Verdict
    method: Method
    center: Fraction | None = None

    @property
    def empty(self) -> bool:
        return self.enclosure.empty


@dataclass
class ProofOutcome:
    verdict: Verdict
    enclosure: Interval
    tiles: list[TileResult]
    proposition: Proposition
    context: dict[str, Interval]
    expression: Expr
    config: ProverConfig
    taylor: TaylorForm | None = None
    taylor_var: str | None = None
    timing_ms: float = 0.0

    @property
    def failing_tiles(self) -> list[TileResult]:
        return [tile for tile in self.tiles if tile.check is not Verdict.PROVED]


def prepare_expression(proposition: Proposition, config: ProverConfig) -> Expr:
    e = proposition.expression()
    if config.rewrite_exact_enabled:
        e = rewrite_exact(e)
    if config.simplify_enabled:
        e = simplify(e)
    return e


def split_plan_apply(
    context: Mapping[str, Interval], splits: Mapping[str, int], default_split: int = 1
) -> list[dict[str, Interval]]:
    """Cartesian product of the even splits of every context variable.

    Tiles come out in lexicographic order of the per-variable tile
    indices, variables taken in context order.

    Raises:
        ConfigurationError: If ``splits`` names a variable outside ``context``.
    """
    unknown = set(splits) - set(context)
    if unknown:
        raise ConfigurationError(f"Cannot split unbound variable(s) {', '.join(sorted(unknown))}.")
    names = list(context)
    pieces = [split_even(context[name], splits.get(name, default_split)) for name in names]
    return [dict(zip(names, combo)) for combo in itertools.product(*pieces)]


@dataclass(frozen=True)
class Plan:
    """Everything a tile worker needs, picklable for process pools."""

    proposition: Proposition
    expression: Expr
    config: ProverConfig
    taylor_var: str | None = None
    chain: tuple[Expr, ...] = ()
    global_form: TaylorForm | None = None

    def judge(self, enclosure: Interval) -> Verdict:
        if enclosure.empty:
            return Verdict.UNKNOWN
        match self.proposition:
            case Relational(rel=rel):
                if rel_cmp(enclosure, rel, 0):
                    return Verdict.PROVED
                if rel_cmp(enclosure, rel.negated, 0):
                    return Verdict.REFUTED
            case Membership(target=target):
                if subset(enclosure, target):
                    return Verdict.PROVED
                if disjoint(enclosure, target):
                    return Verdict.REFUTED
        return Verdict.UNKNOWN

    def tile_center(self, X: Interval) -> Fraction:
        center = self.config.taylor_center
        if center is not None and X.lb <= center <= X.ub:
            return center
        return midpoint(X)

    def enclose(
        self, box: Mapping[str, Interval], method: Method, center: Fraction | None = None
    ) -> Interval:
        n, bits = self.config.approx, self.config.round_bits
        if method is not Method.TAYLOR:
            return eval_interval(self.expression, box, n, bits)
        X = box[self.taylor_var]
        if self.global_form is not None:
            return eval_taylor_form(self.global_form, X, bits)
        form = taylor_form_from_derivatives(self.chain, self.taylor_var, X, n, center, bits)
        return eval_taylor_form(form, X, bits)

    def evaluate_tile(self, box: dict[str, Interval]) -> list[TileResult]:
        """Enclose and judge one tile, adding a midpoint probe when inconclusive."""
        if self.taylor_var is None:
            method, center = Method.DIRECT, None
        elif self.global_form is not None:
            method, center = Method.TAYLOR, self.global_form.center
        else:
            method, center = Method.TAYLOR, self.tile_center(box[self.taylor_var])
        enclosure = self.enclose(box, method, center)
        results = [TileResult(box, enclosure, self.judge(enclosure), method, center)]
        logger.debug("Tile %s: %s (%s).", _box_text(box), enclosure, results[0].check.value)
        if results[0].check is Verdict.UNKNOWN and self.config.probe:
            probe_box = {name: point(midpoint(X)) for name, X in box.items()}
            probe_enclosure = self.enclose(probe_box, Method.PROBE)
            if self.judge(probe_enclosure) is Verdict.REFUTED:
                results.append(TileResult(probe_box, probe_enclosure, Verdict.REFUTED, Method.PROBE))
        return results


def _box_text(box: Mapping[str, Interval]) -> str:
    return ", ".join(f"{name} in {X}" for name, X in box.items())


def _run_tile(plan: Plan, box: dict[str, Interval]) -> list[TileResult]:
    return plan.evaluate_tile(box)


def make_plan(proposition: Proposition, context: Mapping[str, Interval], config: ProverConfig) -> Plan:
    """Prepare the expression and, when requested, its Taylor data.

    Raises:
        UnboundVariableError: If the proposition uses a variable outside ``context``.
        ConfigurationError: On an unusable Taylor request.
    """
    expression = prepare_expression(proposition, config)
    missing = sorted(free_vars(proposition.expression()) - set(context))
    if missing:
        raise UnboundVariableError(missing[0])
    if config.taylor_degree == 0:
        return Plan(proposition, expression, config)

    var = config.taylor_var
    if var is None:
        names = free_vars(expression)
        if len(names) != 1:
            raise ConfigurationError("Taylor forms need the variable named when the expression is not univariate.")
        var = next(iter(names))
    if var not in context:
        raise ConfigurationError(f"Taylor variable '{var}' is not bound in the context.")
    if not context[var].strictly_proper:
        raise DomainError(f"Taylor domain {context[var]} of '{var}' must have lb < ub.")

    chain = derivative_chain(expression, var, config.taylor_degree)
    global_form = None
    if config.taylor_scope == "global":
        global_form = taylor_form_from_derivatives(
            chain, var, context[var], config.approx, config.taylor_center, config.round_bits
        )
    return Plan(proposition, expression, config, var, chain, global_form)


def aggregate(tiles: list[TileResult]) -> tuple[Verdict, Interval]:
    main = [tile for tile in tiles if tile.method is not Method.PROBE]
    enclosure = hull_all(tile.enclosure for tile in main)
    if any(tile.check is Verdict.REFUTED for tile in tiles):
        return Verdict.REFUTED, enclosure
    if all(tile.check is Verdict.PROVED for tile in main):
        return Verdict.PROVED, enclosure
    return Verdict.UNKNOWN, enclosure


def evaluate_tiles(plan: Plan, boxes: list[dict[str, Interval]]) -> list[TileResult]:
    workers = min(plan.config.parallel_tiles, len(boxes))
    if workers <= 1:
        batches = [_run_tile(plan, box) for box in boxes]
    else:
        chunksize = max(1, len(boxes) // (4 * workers))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            batches = list(pool.map(_run_tile, itertools.repeat(plan), boxes, chunksize=chunksize))
    return [tile for batch in batches for tile in batch]


def decide(
    proposition: Proposition, context: Mapping[str, Interval], config: ProverConfig | None = None
) -> ProofOutcome:
    """Prove, refute or give up on ``proposition`` over ``context``.

    Args:
        proposition: A :class:`Relational` or :class:`Membership` proposition.
        context: Nonempty interval per variable, in tile order.
        config: Prover parameters; defaults when omitted.

    Returns:
        ProofOutcome: Verdict, hull of the tile enclosures and every tile.

    Raises:
        UnboundVariableError: If a variable has no interval.
        DomainError: If a context interval is empty.
        ConfigurationError: On a conflicting configuration.
    """
    config = config or ProverConfig()
    started = time.perf_counter()
    context = check_context(context)
    plan = make_plan(proposition, context, config)
    boxes = split_plan_apply(context, config.splits, config.default_split)
    tiles = evaluate_tiles(plan, boxes)
    verdict, enclosure = aggregate(tiles)
    elapsed = (time.perf_counter() - started) * 1000
    logger.info(
        "%s: %s over %d tile(s), approx=%d, method=%s, %.1f ms.",
        proposition,
        verdict.value,
        len(boxes),
        config.approx,
        "taylor" if plan.taylor_var else "direct",
        elapsed,
    )
    return ProofOutcome(
        verdict=verdict,
        enclosure=enclosure,
        tiles=tiles,
        proposition=proposition,
        context=context,
        expression=plan.expression,
        config=config,
        taylor=plan.global_form,
        taylor_var=plan.taylor_var,
        timing_ms=elapsed,
    )


def check_relational(p: Relational, context: Mapping[str, Interval], config: ProverConfig | None = None) -> ProofOutcome:
    return decide(p, context, config)


def check_membership(p: Membership, context: Mapping[str, Interval], config: ProverConfig | None = None) -> ProofOutcome:
    return decide(p, context, config)


def escalation_steps(start: int, max_n: int) -> list[int]:
    """Approximation parameters tried by escalation: ``start``, then doubling."""
    steps = [start]
    while True:
        nxt = 1 if steps[-1] == 0 else steps[-1] * 2
        if nxt > max_n:
            return steps
        steps.append(nxt)


def decide_with_escalation(
    proposition: Proposition, context: Mapping[str, Interval], config: ProverConfig, max_n: int
) -> ProofOutcome:
    """Re-run Unknown decisions with a doubled approximation parameter up to ``max_n``."""
    outcome = None
    for n in escalation_steps(config.approx, max_n):
        outcome = decide(proposition, context, replace(config, approx=n))
        if outcome.verdict is not Verdict.UNKNOWN:
            break
        logger.info("Unknown at approx=%d.", n)
    return outcome
