import unittest
import itertools

import numpy as np

from petitcode.errors import BudgetExceeded, NonInvertibleLeadingCoefficient, NotAFiniteField
from petitcode.fields import FieldDerivation, IntegralIdeal, load_field
from petitcode.rings import IntegralRing, build_quotient, induce_map
from petitcode.skew import NEG_INF, SkewPolyRing


def _reducible_monic(R, degree):
    """Every monic product ``g h`` of total degree ``degree`` with ``deg g, deg h >= 1``"""
    products = set()
    for k in range(1, degree):
        for g in R.monic_polynomials(degree - k):
            for h in R.monic_polynomials(k):
                products.add(R.skew_mul(g, h))
    return products


class TestCase(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(42)

        self.K = load_field("gaussian_sqrt5")
        self.F4 = build_quotient(self.K, IntegralIdeal(self.K.subfield("F"), [self.K.element([1, 1, 0, 0])]))
        self.R4 = SkewPolyRing(self.F4, induce_map(self.K.automorphism("sigma"), self.F4))

        field = load_field("gaussian_omega15")
        self.F16 = build_quotient(field, IntegralIdeal(field.subfield("F"), [field.element([1, 1, 0, 0, 0, 0, 0, 0])]))
        self.R16 = SkewPolyRing(self.F16, induce_map(field.automorphism("sigma"), self.F16))

        sigma = self.K.automorphism("sigma")
        self.delta = FieldDerivation.inner("d", sigma, self.K.generator("i"))
        self.RK = SkewPolyRing(IntegralRing(self.K), sigma, self.delta)

    def tearDown(self):
        pass

    def test_method_degree(self):
        R = self.R4
        self.assertEqual(R.zero().degree, NEG_INF)
        self.assertTrue(NEG_INF < 0)
        self.assertEqual(R.one().degree, 0)
        self.assertEqual(R.t(3).degree, 3)
        self.assertTrue(R.t(3).is_monic())
        # trailing zeros are stripped
        self.assertEqual(R.poly([1, 0, 0]).degree, 0)

    def test_method_skew_mul(self):
        # t a = sigma(a) t + delta(a)
        R = self.RK
        for a in self.K.basis():
            self.assertEqual(R.skew_mul(R.t(), R.constant(a)),
                             R.poly([self.delta(a), R.sigma(a)]))
        ring = R.ring
        for _ in range(10):
            g, h, k = (R.poly([ring.random_element(self.rng) for _ in range(3)]) for _ in range(3))
            self.assertEqual(R.skew_mul(R.skew_mul(g, h), k), R.skew_mul(g, R.skew_mul(h, k)))
            self.assertEqual(R.skew_mul(g, h + k), R.skew_mul(g, h) + R.skew_mul(g, k))

        # over F_4 the twist is the Frobenius: t w = w^2 t
        R = self.R4
        w = self.F4.project(self.K.generator("phi"))
        self.assertEqual(R.skew_mul(R.t(), R.constant(w)), R.monomial(self.F4.mul(w, w), 1))
        self.assertNotEqual(R.skew_mul(R.t(), R.constant(w)), R.skew_mul(R.constant(w), R.t()))

    def test_method_right_divmod(self):
        for R in (self.R4, self.R16, self.RK):
            ring = R.ring
            for _ in range(500):
                g = R.poly([ring.random_element(self.rng) for _ in range(5)])
                f = R.poly([ring.random_element(self.rng) for _ in range(2)] + [ring.one()])
                q, r = R.right_divmod(g, f)
                self.assertEqual(R.skew_mul(q, f) + r, g)
                self.assertTrue(r.is_zero() or r.degree < f.degree)
            # dividend of smaller degree
            f = R.t(3)
            q, r = R.right_divmod(R.t(), f)
            self.assertTrue(q.is_zero())
            self.assertEqual(r, R.t())

    def test_method_twisted_norm(self):
        R = self.R4
        for a in self.F4.elements():
            for m in (1, 2, 3):
                self.assertEqual(R.mod_r(R.t(m), R.poly([self.F4.neg(a), self.F4.one()])),
                                 R.constant(R.twisted_norm(a, m)))

    def test_method_non_invertible_leading_coefficient(self):
        R = self.RK
        two = self.K.from_int(2)
        with self.assertRaises(NonInvertibleLeadingCoefficient):
            R.right_divmod(R.t(3), R.poly([self.K.one(), two]))
        with self.assertRaises(NonInvertibleLeadingCoefficient):
            R.right_divmod(R.t(3), R.zero())

    def test_method_is_invariant(self):
        # t^2 is central modulo the order 2 twist of F_4
        R = self.R4
        self.assertTrue(R.is_invariant(R.t(2)))
        self.assertTrue(R.is_invariant(R.t(2) - R.one()))
        w = self.F4.project(self.K.generator("phi"))
        self.assertFalse(R.is_invariant(R.t(2) - R.constant(w)))
        self.assertEqual(len(R.fixed_elements()), 2)

    def test_method_is_irreducible_finite(self):
        cases = [(self.R4, 2), (self.R4, 3), (self.R16, 2)]
        for R, degree in cases:
            reducible = _reducible_monic(R, degree)
            for f in R.monic_polynomials(degree):
                self.assertEqual(R.is_irreducible_finite(f), f not in reducible)
                found = R.find_right_factor(f)
                if found is not None:
                    h, q = found
                    self.assertEqual(R.skew_mul(q, h), f)

        # t^2 - c is irreducible over F_4 exactly when c is outside F_2
        R = self.R4
        fixed = R.fixed_elements()
        for c in self.F4.elements():
            self.assertEqual(R.is_irreducible_finite(R.t(2) - R.constant(c)), c not in fixed)

    def test_method_find_right_factor_threads(self):
        R = self.R4
        for f in itertools.islice(R.monic_polynomials(3), 0, 64, 7):
            self.assertEqual(R.find_right_factor(f, threads=1), R.find_right_factor(f, threads=4))

    def test_method_find_right_factor_errors(self):
        with self.assertRaises(NotAFiniteField):
            self.RK.find_right_factor(self.RK.t(2))
        with self.assertRaises(BudgetExceeded):
            self.R16.find_right_factor(self.R16.t(3), budget=10)
        with self.assertRaises(ValueError):
            self.R4.is_irreducible_finite(self.R4.one())


if __name__ == '__main__':
    import sys

    if not sys.argv[-1] == '--debug':
        raise RuntimeError('Test can only be runned manually with --debug flag')

    test = TestCase()
    test.setUp()
    for method in dir(test):
        if method.startswith('test_'):
            print('Running test: {}'.format(method))
            getattr(test, method)()
    test.tearDown()

    print('All tests passed.')
