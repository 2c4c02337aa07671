"""``manage.py numerics check|eval|verify``"""

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from numerics_app.exceptions import NumericsError
from prover_app.cli import (
    EXIT_ERROR,
    EXIT_PROVED,
    CheckFlags,
    describe_interval,
    eval_expr,
    run_file,
    verify_file,
)
from prover_app.prover import ProverConfig


class Command(BaseCommand):
    help = "Check proposition files, enclose constant expressions and replay certificates."

    def add_arguments(self, parser):
        actions = parser.add_subparsers(dest="action", required=True)

        check = actions.add_parser("check", help="Decide every assert of a proposition file.")
        check.add_argument("file")
        check.add_argument("--approx", type=int)
        check.add_argument("--split", type=int, help="Tiles per variable, overriding the file.")
        check.add_argument("--taylor", type=int, metavar="DEGREE")
        check.add_argument("--round-bits", type=int, dest="round_bits")
        check.add_argument("--parallel", type=int, help="Worker processes for tile evaluation.")
        check.add_argument("--json", action="store_true", help="Print certificates instead of the report.")
        check.add_argument(
            "--escalate", type=int, nargs="?", const=settings.NUMERICS["ESCALATE_CAP"], metavar="MAX_N",
            help="Double approx on Unknown asserts up to MAX_N (default: ESCALATE_CAP).",
        )

        calculator = actions.add_parser("eval", help="Guaranteed enclosure of a constant expression.")
        calculator.add_argument("expression")
        calculator.add_argument("--approx", type=int)

        verify = actions.add_parser("verify", help="Replay certificates written by check --json.")
        verify.add_argument("certificates")

    def handle(self, *args, **options):
        match options["action"]:
            case "check":
                code, text = self.check(options)
            case "eval":
                code, text = self.evaluate(options)
            case "verify":
                code, text = verify_file(options["certificates"])

        if code == EXIT_ERROR:
            raise CommandError(text, returncode=EXIT_ERROR)
        self.stdout.write(text)
        if code != EXIT_PROVED:
            raise SystemExit(code)

    def approx_error(self, *values):
        max_approx = settings.NUMERICS["MAX_APPROX"]
        if any(value is not None and value > max_approx for value in values):
            return f"error: approx is limited to {max_approx}."
        return None

    def check(self, options):
        error = self.approx_error(options["approx"], options["escalate"])
        if error:
            return EXIT_ERROR, error
        flags = CheckFlags(
            approx=options["approx"],
            split=options["split"],
            taylor=options["taylor"],
            round_bits=options["round_bits"],
            parallel=options["parallel"],
            escalate=options["escalate"],
        )
        try:
            base = ProverConfig.from_settings()
        except NumericsError as exc:
            return EXIT_ERROR, f"error: {exc}"
        return run_file(options["file"], flags, base, as_json=options["json"])

    def evaluate(self, options):
        approx = options["approx"]
        if approx is None:
            approx = settings.NUMERICS["DEFAULT_APPROX"]
        error = self.approx_error(approx)
        if error:
            return EXIT_ERROR, error
        try:
            X = eval_expr(options["expression"], approx, settings.NUMERICS["ROUND_BITS"])
        except NumericsError as exc:
            return EXIT_ERROR, f"error: {exc}"
        return EXIT_PROVED, describe_interval(X)
