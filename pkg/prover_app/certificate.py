"""JSON certificates of decisions and their replay.

A certificate lists every tile with its box, enclosure, check and
method, together with the parameters needed to recompute them. Replay
re-derives each tile enclosure from the recorded parameters, checks the
tiles cover the context and re-aggregates the verdict.
"""

import logging
from dataclasses import dataclass, field

from numerics_app.exceptions import CertificateError, NumericsError
from numerics_app.expr import to_text
from numerics_app.interval import Interval, from_json, to_json
from numerics_app.rational import format_rational, parse_rational

from .propositions import parse_proposition
from .prover import Method, ProofOutcome, ProverConfig, TileResult, Verdict, aggregate, make_plan, split_plan_apply

logger = logging.getLogger(__name__)

CERTIFICATE_VERSION = 1


def _box_json(box: dict[str, Interval]) -> dict:
    return {name: to_json(X) for name, X in box.items()}


def _tile_json(tile: TileResult) -> dict:
    data = {
        "box": _box_json(tile.box),
        "enclosure": to_json(tile.enclosure),
        "check": tile.check.value,
        "method": tile.method.value,
        "empty": tile.empty,
    }
    if tile.center is not None:
        data["center"] = format_rational(tile.center)
    return data


def outcome_to_certificate(outcome: ProofOutcome) -> dict:
    config = outcome.config
    taylor = None
    if outcome.taylor_var is not None:
        form = outcome.taylor
        center = form.center if form is not None else config.taylor_center
        taylor = {
            "degree": config.taylor_degree,
            "var": outcome.taylor_var,
            "scope": config.taylor_scope,
            "center": format_rational(center) if center is not None else None,
            "coeffs": [to_json(X) for X in form.coeffs] if form is not None else None,
        }
    return {
        "version": CERTIFICATE_VERSION,
        "proposition": str(outcome.proposition),
        "context": _box_json(outcome.context),
        "expression": to_text(outcome.expression),
        "verdict": outcome.verdict.value,
        "enclosure": to_json(outcome.enclosure),
        "approx": config.approx,
        "splits": dict(config.splits),
        "default_split": config.default_split,
        "taylor": taylor,
        "round_bits": config.round_bits,
        "rewrites": config.rewrite_exact_enabled,
        "simplify": config.simplify_enabled,
        "probe": config.probe,
        "tiles": [_tile_json(tile) for tile in outcome.tiles],
        "timing_ms": round(outcome.timing_ms, 3),
    }


@dataclass
class ReplayReport:
    reproduced: bool
    verdict: str | None
    mismatches: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"reproduced": self.reproduced, "verdict": self.verdict, "mismatches": self.mismatches}


def config_from_certificate(certificate: dict) -> ProverConfig:
    taylor = certificate.get("taylor") or {}
    center = taylor.get("center")
    return ProverConfig(
        approx=certificate["approx"],
        splits=certificate.get("splits", {}),
        default_split=certificate.get("default_split", 1),
        taylor_degree=taylor.get("degree", 0),
        taylor_var=taylor.get("var"),
        taylor_center=parse_rational(center) if center is not None else None,
        taylor_scope=taylor.get("scope", "tile"),
        round_bits=certificate.get("round_bits"),
        rewrite_exact_enabled=certificate.get("rewrites", True),
        simplify_enabled=certificate.get("simplify", True),
        probe=certificate.get("probe", True),
    )


def _tile_from_json(data: dict) -> TileResult:
    center = data.get("center")
    return TileResult(
        box={name: from_json(X) for name, X in data["box"].items()},
        enclosure=from_json(data["enclosure"]),
        check=Verdict(data["check"]),
        method=Method(data["method"]),
        center=parse_rational(center) if center is not None else None,
    )


def replay(certificate: dict) -> ReplayReport:
    """Recompute a certificate and list every disagreement.

    Raises:
        CertificateError: If the certificate is malformed.
    """
    try:
        proposition = parse_proposition(certificate["proposition"])
        context = {name: from_json(X) for name, X in certificate["context"].items()}
        config = config_from_certificate(certificate)
        recorded = [_tile_from_json(tile) for tile in certificate["tiles"]]
        plan = make_plan(proposition, context, config)
        boxes = split_plan_apply(context, config.splits, config.default_split)
    except (KeyError, TypeError) as exc:
        raise CertificateError(f"Malformed certificate: {exc}")
    except NumericsError as exc:
        raise CertificateError(f"Certificate cannot be replayed: {exc}")

    mismatches = []
    if certificate.get("expression") != to_text(plan.expression):
        mismatches.append("prepared expression differs")
    if plan.global_form is not None:
        coeffs = [to_json(X) for X in plan.global_form.coeffs]
        if (certificate.get("taylor") or {}).get("coeffs") != coeffs:
            mismatches.append("global Taylor coefficients differ")

    main = [tile for tile in recorded if tile.method is not Method.PROBE]
    if [tile.box for tile in main] != boxes:
        mismatches.append(f"tiles do not cover the context with the recorded splits ({len(main)} vs {len(boxes)})")

    for index, tile in enumerate(recorded):
        try:
            enclosure = plan.enclose(tile.box, tile.method, tile.center)
        except NumericsError as exc:
            mismatches.append(f"tile {index}: {exc}")
            continue
        if enclosure != tile.enclosure:
            mismatches.append(f"tile {index}: enclosure {enclosure} recorded as {tile.enclosure}")
        check = plan.judge(enclosure)
        if check is not tile.check:
            mismatches.append(f"tile {index}: check {check.value} recorded as {tile.check.value}")

    verdict, enclosure = aggregate(recorded)
    if verdict.value != certificate.get("verdict"):
        mismatches.append(f"verdict {verdict.value} recorded as {certificate.get('verdict')}")
    if to_json(enclosure) != certificate.get("enclosure"):
        mismatches.append("overall enclosure differs")

    reproduced = not mismatches
    if not reproduced:
        logger.warning("Certificate replay found %d mismatch(es).", len(mismatches))
    return ReplayReport(reproduced, verdict.value, mismatches)
