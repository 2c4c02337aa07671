"""Service layer for proof runs"""

import logging

from django.conf import settings
from django.db import transaction

from numerics_app.exceptions import ConfigurationError
from prover_app.certificate import outcome_to_certificate, replay
from prover_app.cli import eval_expr
from prover_app.models import ProofRun
from prover_app.propositions import parse_proposition
from prover_app.prover import ProofOutcome, ProverConfig, decide
from numerics_app.rational import format_rational
from .utils import interval_payload, parse_context, parse_endpoint

logger = logging.getLogger(__name__)


class ProofService:
    """Service class for deciding propositions and managing stored runs."""

    @staticmethod
    def create_proof_run(data: dict) -> ProofRun:
        """Decide a proposition and store the run.

        Orchestrates the whole request:
        1. Parses the proposition and the context
        2. Resolves the prover configuration from settings and request
        3. Rejects requests above the configured tile limit
        4. Decides the proposition
        5. Saves the run with its certificate

        Args:
            data: Validated request data from CreateProofSerializer

        Returns:
            ProofRun: The stored run

        Raises:
            ValueError: If the proposition, context or options are invalid
        """
        proposition = parse_proposition(data["proposition"])
        context = parse_context(data.get("context", {}))
        config = ProofService.build_config(data)

        max_tiles = settings.NUMERICS["MAX_TILES"]
        if config.tile_count(context) > max_tiles:
            raise ConfigurationError(f"Requests are limited to {max_tiles} tiles.")

        outcome = decide(proposition, context, config)
        return ProofService.save_proof_run(outcome)

    @staticmethod
    def build_config(data: dict) -> ProverConfig:
        """Layer request options over the settings defaults.

        Args:
            data: Validated request data

        Returns:
            ProverConfig: Configuration for the decision

        Raises:
            ConfigurationError: If approx is above the configured cap
        """
        overrides = {}
        for field, option in [
            ("approx", "approx"),
            ("splits", "splits"),
            ("default_split", "default_split"),
            ("round_bits", "round_bits"),
            ("rewrites", "rewrite_exact_enabled"),
            ("simplify", "simplify_enabled"),
            ("probe", "probe"),
        ]:
            if field in data:
                overrides[option] = data[field]

        taylor = data.get("taylor")
        if taylor:
            overrides["taylor_degree"] = taylor["degree"]
            overrides["taylor_var"] = taylor.get("var")
            overrides["taylor_scope"] = taylor.get("scope", "tile")
            if taylor.get("center") is not None:
                overrides["taylor_center"] = parse_endpoint(taylor["center"])

        # tile workers stay in-process for web requests
        overrides["parallel_tiles"] = 1
        config = ProverConfig.from_settings(**overrides)
        ProofService.check_approx(config.approx)
        return config

    @staticmethod
    def check_approx(n: int) -> None:
        """Reject approximation parameters above ``NUMERICS["MAX_APPROX"]``.

        Raises:
            ConfigurationError: If ``n`` is above the configured cap
        """
        max_approx = settings.NUMERICS["MAX_APPROX"]
        if n > max_approx:
            raise ConfigurationError(f"approx is limited to {max_approx}.")

    @staticmethod
    def save_proof_run(outcome: ProofOutcome) -> ProofRun:
        """Save the outcome and its certificate in a transaction.

        Args:
            outcome: The decided proof outcome

        Returns:
            ProofRun: The created instance
        """
        certificate = outcome_to_certificate(outcome)
        enclosure = outcome.enclosure

        with transaction.atomic():
            run = ProofRun.objects.create(
                proposition=certificate["proposition"],
                context=certificate["context"],
                verdict=outcome.verdict.value,
                enclosure_lb="" if enclosure.empty else format_rational(enclosure.lb),
                enclosure_ub="" if enclosure.empty else format_rational(enclosure.ub),
                certificate=certificate,
                elapsed_ms=outcome.timing_ms,
            )

        logger.info("Stored proof run %s (%s).", run.id, run.verdict)
        return run

    @staticmethod
    def verify_proof_run(run: ProofRun) -> dict:
        """Replay the stored certificate.

        Returns:
            dict: reproduced flag, replayed verdict and mismatches
        """
        return replay(run.certificate).to_dict()

    @staticmethod
    def evaluate_expression(expression: str, approx: int | None = None) -> dict:
        """Enclose a constant expression for the calculator endpoint.

        Raises:
            ValueError: If the expression does not parse or has variables
        """
        n = settings.NUMERICS["DEFAULT_APPROX"] if approx is None else approx
        ProofService.check_approx(n)
        X = eval_expr(expression, n, settings.NUMERICS["ROUND_BITS"])
        return {"expression": expression, "approx": n, **interval_payload(X)}
