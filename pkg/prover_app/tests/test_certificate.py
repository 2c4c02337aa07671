import copy
import json
from fractions import Fraction

from django.test import SimpleTestCase

from numerics_app.exceptions import CertificateError
from numerics_app.interval import Interval
from prover_app.certificate import config_from_certificate, outcome_to_certificate, replay
from prover_app.propositions import parse_proposition
from prover_app.prover import ProverConfig, decide

UNIT = {"x": Interval(0, 1)}

FAIR_ATAN = "atan(x) - (x - 11184811/33554432*x^3 - 13421773/67108864*x^5)"


def certify(text, context=UNIT, **config):
    return outcome_to_certificate(decide(parse_proposition(text), context, ProverConfig(**config)))


class EmitTests(SimpleTestCase):

    def test_fields(self):
        certificate = certify("x*(1-x) in [0, 9/32]", default_split=16)
        self.assertEqual(certificate["verdict"], "proved")
        self.assertEqual(certificate["proposition"], "x * (1 - x) in [0, 9/32]")
        self.assertEqual(certificate["context"], {"x": {"lb": "0", "ub": "1"}})
        self.assertEqual(certificate["expression"], "x * (1 - x)")
        self.assertEqual(certificate["approx"], 3)
        self.assertEqual(certificate["default_split"], 16)
        self.assertIsNone(certificate["taylor"])
        self.assertEqual(len(certificate["tiles"]), 16)
        self.assertEqual(certificate["tiles"][0]["box"], {"x": {"lb": "0", "ub": "1/16"}})
        self.assertEqual(certificate["tiles"][0]["method"], "direct")
        self.assertEqual(certificate["tiles"][0]["check"], "proved")

    def test_tile_scope_taylor(self):
        certificate = certify("x*(1-x) in [0, 1/4]", taylor_degree=2, default_split=2)
        self.assertEqual(certificate["taylor"]["scope"], "tile")
        self.assertEqual(certificate["taylor"]["var"], "x")
        self.assertIsNone(certificate["taylor"]["coeffs"])
        self.assertEqual([tile["center"] for tile in certificate["tiles"]], ["1/4", "3/4"])

    def test_global_scope_taylor(self):
        certificate = certify("x*(1-x) in [0, 1/4]", taylor_degree=2, taylor_scope="global")
        self.assertEqual(certificate["taylor"]["center"], "1/2")
        self.assertEqual(
            certificate["taylor"]["coeffs"],
            [{"lb": "1/4", "ub": "1/4"}, {"lb": "0", "ub": "0"}, {"lb": "-2", "ub": "-2"}],
        )

    def test_empty_tile(self):
        certificate = certify("1/x > 0", {"x": Interval(-1, 1)})
        self.assertEqual(certificate["verdict"], "unknown")
        self.assertTrue(certificate["tiles"][0]["empty"])
        self.assertEqual(certificate["enclosure"], {"empty": True})

    def test_config_round_trip(self):
        config = ProverConfig(
            approx=5, splits={"x": 3}, taylor_degree=2, taylor_var="x",
            taylor_center=Fraction(1, 3), round_bits=24, probe=False,
        )
        outcome = decide(parse_proposition("x*(1-x) in [0, 1/4]"), UNIT, config)
        restored = config_from_certificate(outcome_to_certificate(outcome))
        self.assertEqual(restored, config)


class ReplayTests(SimpleTestCase):

    def assertReproduced(self, certificate):
        report = replay(json.loads(json.dumps(certificate)))
        self.assertEqual(report.mismatches, [])
        self.assertTrue(report.reproduced)
        self.assertEqual(report.verdict, certificate["verdict"])

    def test_reproduces_every_kind_of_run(self):
        cases = [
            ("x*(1-x) in [0, 9/32]", UNIT, {"default_split": 16}),
            ("x*(1-x) in [1/2, 1]", UNIT, {}),
            ("2*x >= x", UNIT, {"simplify_enabled": False}),
            ("1/x > 0", {"x": Interval(-1, 1)}, {}),
            ("x*(1-x) in [0, 1/4]", UNIT, {"taylor_degree": 2, "default_split": 3}),
            ("x*(1-x) in [0, 1/4]", UNIT, {"taylor_degree": 2, "default_split": 4, "taylor_scope": "global"}),
            ("x*(1-x) + sin(x) >= 0", UNIT, {"default_split": 4, "round_bits": 20}),
            ("sin(x)*y < 1", {"x": Interval(0, 1), "y": Interval(-1, 1)}, {"splits": {"x": 2, "y": 3}}),
            ("pi > 3.1415", {}, {"approx": 1}),
            (f"{FAIR_ATAN} in [-2^-14, 2^-14]", {"x": Interval(Fraction(-1, 30), Fraction(1, 30))}, {"taylor_degree": 1}),
        ]
        for text, context, config in cases:
            with self.subTest(p=text, config=config):
                self.assertReproduced(certify(text, context, **config))

    def test_detects_tampered_enclosure(self):
        certificate = certify("x*(1-x) in [0, 9/32]", default_split=16)
        certificate["tiles"][3]["enclosure"] = {"lb": "0", "ub": "1/100"}
        report = replay(certificate)
        self.assertFalse(report.reproduced)
        self.assertTrue(any(mismatch.startswith("tile 3:") for mismatch in report.mismatches))

    def test_detects_tampered_verdict(self):
        certificate = certify("x*(1-x) in [0, 1/4]", default_split=4)
        self.assertEqual(certificate["verdict"], "unknown")
        certificate["verdict"] = "proved"
        self.assertFalse(replay(certificate).reproduced)

    def test_detects_tampered_check(self):
        certificate = certify("x*(1-x) in [0, 1/4]", default_split=4)
        for tile in certificate["tiles"]:
            tile["check"] = "proved"
        report = replay(certificate)
        self.assertFalse(report.reproduced)
        self.assertEqual(report.verdict, "proved")

    def test_detects_missing_tile(self):
        certificate = certify("x*(1-x) in [0, 9/32]", default_split=16)
        del certificate["tiles"][7]
        report = replay(certificate)
        self.assertFalse(report.reproduced)
        self.assertIn("tiles do not cover", report.mismatches[0])

    def test_detects_changed_parameters(self):
        certificate = certify("x*(1-x) + sin(x) >= 0", default_split=2)
        tampered = copy.deepcopy(certificate)
        tampered["approx"] = 1
        self.assertFalse(replay(tampered).reproduced)

    def test_detects_tampered_global_coefficients(self):
        certificate = certify("x*(1-x) in [0, 1/4]", taylor_degree=2, taylor_scope="global")
        certificate["taylor"]["coeffs"][2] = {"lb": "-3", "ub": "-2"}
        report = replay(certificate)
        self.assertIn("global Taylor coefficients differ", report.mismatches)

    def test_malformed(self):
        good = certify("x >= 0")
        broken = [
            {},
            {**good, "tiles": None},
            {**good, "proposition": "x >"},
            {**good, "approx": -1},
            {**good, "context": {"x": {"lb": "1"}}},
        ]
        for certificate in broken:
            with self.subTest(certificate=certificate), self.assertRaises(CertificateError):
                replay(certificate)
