import random
from fractions import Fraction

import mpmath
from django.test import SimpleTestCase

from numerics_app import bounds
from numerics_app.exceptions import DomainError
from numerics_app.tests.oracle import encloses, fuzz_cases, random_rational, reference, to_mpf

PI_50 = mpmath.mpf("3.14159265358979323846264338327950288419716939937510")

BOUND_FUNCTIONS = {
    "sqrt": bounds.sqrt_bounds,
    "sin": bounds.sin_bounds,
    "cos": bounds.cos_bounds,
    "atan": bounds.atan_bounds,
    "exp": bounds.exp_bounds,
    "ln": bounds.ln_bounds,
}

# Sampling domains for the enclosure suite.
DOMAINS = {
    "sqrt": (0, 100),
    "sin": (-10, 10),
    "cos": (-10, 10),
    "atan": (-100, 100),
    "exp": (-10, 10),
    "ln": (0, 100),
}

# Domains where the partial sums reach 10^-6 within n <= 30.
CONVERGENCE_DOMAINS = {
    "sqrt": [(0, 100)],
    "sin": [(-10, 10)],
    "cos": [(-10, 10)],
    "exp": [(-10, 10)],
    "atan": [(Fraction(-1, 2), Fraction(1, 2)), (2, 100), (-100, -2)],
    "ln": [(Fraction(2, 3), Fraction(3, 2))],
}


def _pi_lb3():
    return bounds.pi_bounds(3)[0]


# Domains where increasing n never loosens either bound.
REFINEMENT_DOMAINS = {
    "sqrt": (0, 100),
    "atan": (-100, 100),
    "exp": (-10, 10),
    "ln": (0, 100),
    "sin": (-_pi_lb3(), _pi_lb3()),
    "cos": (-_pi_lb3(), _pi_lb3()),
}


def _sample(rng, name, low, high):
    x = random_rational(rng, low, high)
    if name == "ln" and x == 0:
        x = Fraction(1, 1000)
    return x


class ExampleTests(SimpleTestCase):

    def test_sqrt(self):
        self.assertEqual(bounds.sqrt_bounds(4, 0), (Fraction(4, 5), 5))
        self.assertEqual(bounds.sqrt_bounds(4, 1), (Fraction(40, 29), Fraction(29, 10)))
        self.assertEqual(bounds.sqrt_bounds(0, 0), (0, 1))

    def test_sin(self):
        for n in range(4):
            self.assertEqual(bounds.sin_bounds(0, n), (0, 0))
        self.assertEqual(bounds.sin_bounds(1, 0), (Fraction(5, 6), 1))
        self.assertEqual(bounds.sin_bounds(-1, 0), (-1, Fraction(-5, 6)))

    def test_cos(self):
        for n in range(4):
            self.assertEqual(bounds.cos_bounds(0, n), (1, 1))
        self.assertEqual(bounds.cos_bounds(1, 0), (Fraction(1, 2), Fraction(13, 24)))
        self.assertEqual(bounds.cos_bounds(-1, 0), (Fraction(1, 2), Fraction(13, 24)))

    def test_atan(self):
        for n in range(4):
            self.assertEqual(bounds.atan_bounds(0, n), (0, 0))
        self.assertEqual(bounds.atan_bounds(Fraction(1, 5), 0), (Fraction(74, 375), Fraction(1, 5)))
        self.assertEqual(bounds.atan_bounds(Fraction(-1, 5), 0), (Fraction(-1, 5), Fraction(-74, 375)))

    def test_pi(self):
        lb, ub = bounds.pi_bounds(0)
        self.assertEqual(lb, Fraction(281476, 89625))
        A1 = Fraction(1, 239) - Fraction(1, 3 * 239**3)
        self.assertEqual(ub, 4 * (Fraction(4, 5) - A1))
        lb, ub = bounds.pi_bounds(3)
        self.assertLess(ub - lb, Fraction(1, 100))
        self.assertTrue(lb < Fraction(314159, 100000) < ub)

    def test_exp(self):
        for n in range(4):
            self.assertEqual(bounds.exp_bounds(0, n), (1, 1))
        self.assertEqual(bounds.exp_bounds(-1, 0), (Fraction(1, 3), Fraction(1, 2)))
        self.assertEqual(bounds.exp_bounds(1, 0), (2, 3))

    def test_lnnat(self):
        self.assertEqual(bounds.lnnat(Fraction(3, 2), 2), (0, Fraction(3, 2)))
        self.assertEqual(bounds.lnnat(Fraction(10), 2), (3, Fraction(5, 4)))
        self.assertEqual(bounds.lnnat(Fraction(16), 2), (4, 1))

    def test_ln(self):
        for n in range(4):
            self.assertEqual(bounds.ln_bounds(1, n), (0, 0))
        self.assertEqual(bounds.ln_bounds(2, 1), (Fraction(1, 2), Fraction(5, 6)))
        self.assertEqual(bounds.ln_bounds(Fraction(1, 2), 1), (Fraction(-5, 6), Fraction(-1, 2)))


class DomainTests(SimpleTestCase):

    def test_sqrt_of_negative(self):
        with self.assertRaises(DomainError):
            bounds.sqrt_bounds(Fraction(-1), 2)

    def test_ln_of_nonpositive(self):
        for x in (0, -1):
            with self.subTest(x=x), self.assertRaises(DomainError):
                bounds.ln_bounds(Fraction(x), 2)

    def test_lnnat_preconditions(self):
        with self.assertRaises(DomainError):
            bounds.lnnat(Fraction(1, 2), 2)
        with self.assertRaises(DomainError):
            bounds.lnnat(Fraction(4), 1)

    def test_negative_approximation_parameter(self):
        with self.assertRaises(DomainError):
            bounds.exp_bounds(Fraction(1), -1)


class EnclosureTests(SimpleTestCase):

    def test_bounds_enclose_reference(self):
        rng = random.Random(20240601)
        names = sorted(BOUND_FUNCTIONS)
        for case in range(fuzz_cases()):
            name = rng.choice(names)
            x = _sample(rng, name, *DOMAINS[name])
            n = rng.randint(0, 4 if name == "sqrt" else 6)
            lb, ub = BOUND_FUNCTIONS[name](x, n)
            with self.subTest(case=case, f=name, x=x, n=n):
                self.assertLessEqual(lb, ub)
                self.assertTrue(encloses(lb, ub, reference(name, x)))

    def test_pi_contains_reference(self):
        widths = []
        for n in range(11):
            lb, ub = bounds.pi_bounds(n)
            with self.subTest(n=n):
                self.assertTrue(to_mpf(lb) < PI_50 < to_mpf(ub))
            widths.append(ub - lb)
        for narrow, wide in zip(widths[1:], widths):
            self.assertLess(narrow, wide)

    def test_positivity(self):
        rng = random.Random(5)
        for _ in range(fuzz_cases(20)):
            x = random_rational(rng, -10, 10)
            n = rng.randint(0, 5)
            self.assertGreater(bounds.exp_bounds(x, n)[0], 0)
            y = random_rational(rng, 0, 100)
            lb, ub = bounds.sqrt_bounds(y, min(n, 4))
            self.assertGreater(ub, 0)
            if y > 0:
                self.assertGreater(lb, 0)

    def test_lnnat_reconstruction(self):
        rng = random.Random(9)
        for _ in range(fuzz_cases(20)):
            x = random_rational(rng, 1, 10**6)
            k = rng.randint(2, 10)
            m, y = bounds.lnnat(x, k)
            self.assertEqual(Fraction(k) ** m * y, x)
            self.assertLess(y, k)
            self.assertLessEqual(k**m, x)


class RefinementTests(SimpleTestCase):

    def test_bounds_never_loosen(self):
        rng = random.Random(77)
        names = sorted(REFINEMENT_DOMAINS)
        for case in range(fuzz_cases(10)):
            name = rng.choice(names)
            x = _sample(rng, name, *REFINEMENT_DOMAINS[name])
            n = rng.randint(0, 3 if name == "sqrt" else 6)
            lb, ub = BOUND_FUNCTIONS[name](x, n)
            lb_next, ub_next = BOUND_FUNCTIONS[name](x, n + 1)
            with self.subTest(case=case, f=name, x=x, n=n):
                self.assertLessEqual(lb, lb_next)
                self.assertLessEqual(ub_next, ub)

    def test_width_converges(self):
        rng = random.Random(123)
        target = Fraction(1, 10**6)
        for name, domains in CONVERGENCE_DOMAINS.items():
            for _ in range(fuzz_cases(500)):
                x = _sample(rng, name, *rng.choice(domains))
                with self.subTest(f=name, x=x):
                    for n in range(31):
                        lb, ub = BOUND_FUNCTIONS[name](x, n)
                        if ub - lb < target:
                            break
                    self.assertLess(ub - lb, target)

    def test_width_decreases_outside_fast_domains(self):
        for name, x in (("atan", Fraction(1)), ("atan", Fraction(-9, 10)), ("ln", Fraction(50))):
            widths = [BOUND_FUNCTIONS[name](x, n) for n in range(0, 12, 2)]
            widths = [ub - lb for lb, ub in widths]
            with self.subTest(f=name, x=x):
                for narrow, wide in zip(widths[1:], widths):
                    self.assertLess(narrow, wide)
