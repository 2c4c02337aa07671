"""Reference lemmas with the time and tile limits they are expected to meet."""

import time
from fractions import Fraction

from django.test import SimpleTestCase

from numerics_app.interval import Interval
from prover_app.propositions import parse_proposition
from prover_app.prover import Method, ProverConfig, Verdict, decide

UNIT = {"x": Interval(0, 1)}

FAIR_ATAN = "atan(x) - (x - 11184811/33554432*x^3 - 13421773/67108864*x^5)"
ATAN_DOMAIN = {"x": Interval(Fraction(-1, 30), Fraction(1, 30))}


def timed_decide(proposition, context, config):
    started = time.perf_counter()
    outcome = decide(parse_proposition(proposition), context, config)
    return outcome, time.perf_counter() - started


def first_proof(proposition, context, max_n):
    """Decide at n = 0, 1, ... and return the first Proved run with its time."""
    for n in range(max_n + 1):
        outcome, seconds = timed_decide(proposition, context, ProverConfig(approx=n))
        if outcome.verdict is Verdict.PROVED:
            return outcome, seconds
    return outcome, seconds


class CaseStudyTests(SimpleTestCase):

    def test_tr35(self):
        outcome, seconds = first_proof("(9.8*tan(35*pi/180)/(250*0.514))*180/pi in [3, 3.1]", {}, 8)
        self.assertEqual(outcome.verdict, Verdict.PROVED)
        self.assertLess(seconds, 5)

    def test_abramowitz_stegun(self):
        outcome, seconds = first_proof("3*0.5828/2 - ln(1 - 0.5828) > 0", {}, 16)
        self.assertEqual(outcome.verdict, Verdict.PROVED)
        self.assertLess(seconds, 5)

    def test_fair(self):
        outcome, seconds = timed_decide("x*(1-x) in [0, 9/32]", UNIT, ProverConfig(splits={"x": 16}))
        self.assertEqual(outcome.verdict, Verdict.PROVED)
        self.assertEqual(outcome.config.approx, 3)
        self.assertLess(seconds, 2)

    def test_best(self):
        outcome, seconds = timed_decide("x*(1-x) in [0, 1/4]", UNIT, ProverConfig(taylor_degree=2, taylor_var="x"))
        self.assertEqual(outcome.verdict, Verdict.PROVED)
        self.assertEqual(len(outcome.tiles), 1)
        self.assertLess(seconds, 1)

    def test_best_needs_taylor(self):
        for k in range(1, 65):
            outcome, _ = timed_decide("x*(1-x) in [0, 1/4]", UNIT, ProverConfig(default_split=k))
            with self.subTest(split=k):
                self.assertEqual(outcome.verdict, Verdict.UNKNOWN)


class FairAtanTests(SimpleTestCase):

    @staticmethod
    def proposition(i):
        return f"{FAIR_ATAN} in [-2^-{i}, 2^-{i}]"

    def test_splitting_only(self):
        outcome, seconds = timed_decide(self.proposition(8), ATAN_DOMAIN, ProverConfig(default_split=128))
        self.assertEqual(outcome.verdict, Verdict.PROVED)
        self.assertLessEqual(len(outcome.tiles), 512)
        self.assertTrue(all(tile.method is Method.DIRECT for tile in outcome.tiles))
        self.assertLess(seconds, 60)

    def test_first_degree_without_splitting(self):
        outcome, seconds = timed_decide(self.proposition(14), ATAN_DOMAIN, ProverConfig(taylor_degree=1))
        self.assertEqual(outcome.verdict, Verdict.PROVED)
        self.assertEqual(len(outcome.tiles), 1)
        self.assertLess(seconds, 10)

    def test_second_degree_needs_two_tiles(self):
        started = time.perf_counter()
        unsplit, _ = timed_decide(self.proposition(14), ATAN_DOMAIN, ProverConfig(taylor_degree=2))
        split, _ = timed_decide(self.proposition(14), ATAN_DOMAIN, ProverConfig(taylor_degree=2, default_split=2))
        self.assertEqual(unsplit.verdict, Verdict.UNKNOWN)
        self.assertEqual(split.verdict, Verdict.PROVED)
        self.assertLess(time.perf_counter() - started, 10)

    def test_second_degree_at_high_accuracy(self):
        outcome, seconds = timed_decide(self.proposition(20), ATAN_DOMAIN, ProverConfig(taylor_degree=2, default_split=16))
        self.assertEqual(outcome.verdict, Verdict.PROVED)
        self.assertLessEqual(len(outcome.tiles), 256)
        self.assertLess(seconds, 120)
