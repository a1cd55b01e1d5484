import unittest

import numpy as np

from petitcode.algebras import (DivisionStatus, cyclic_modulus, division_agreement, find_zero_divisor, gamma,
                                gamma_compatibility, is_division, make_petit, matrix_vector, nuclei, orbit_length,
                                right_matrix, right_nucleus_by_invariance, scalars_in_nuclei, two_sided_ideals)
from petitcode.errors import BudgetExceeded, ConfigError, NonMonicModulus, NotAFiniteField
from petitcode.fields import IntegralIdeal, load_field
from petitcode.rings import IntegralRing, build_quotient, induce_map
from petitcode.skew import SkewPolyRing


class TestCase(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(42)

        self.K = load_field("gaussian_sqrt5")
        ideal = IntegralIdeal(self.K.subfield("F"), [self.K.element([1, 1, 0, 0])])
        self.F4 = build_quotient(self.K, ideal)
        self.R = SkewPolyRing(self.F4, induce_map(self.K.automorphism("sigma"), self.F4))
        self.w = self.F4.project(self.K.generator("phi"))
        # nonassociative cyclic algebra (F_4 / F_2, frobenius, w) of 16 elements
        self.A = make_petit(self.R, cyclic_modulus(self.R, self.w, 2), name="A")

        self.Q16 = build_quotient(self.K, ideal, exponent=2)
        self.RK = SkewPolyRing(IntegralRing(self.K), self.K.automorphism("sigma"))

    def tearDown(self):
        pass

    def test_method_make_petit(self):
        A = self.A
        self.assertEqual(A.m, 2)
        self.assertEqual(A.cardinality(), 16)
        self.assertEqual(len(list(A.elements())), 16)
        self.assertTrue(A.is_cyclic_form())
        self.assertEqual(A.cyclic_parameter(), self.w)
        for index in range(A.cardinality()):
            self.assertEqual(A.index(A.element_at(index)), index)

        R = self.R
        with self.assertRaises(NonMonicModulus):
            make_petit(R, R.monomial(self.w, 2) + R.one())
        with self.assertRaises(ConfigError):
            make_petit(R, R.t() + R.one())
        with self.assertRaises(ValueError):
            make_petit(self.RK, R.t(2))
        with self.assertRaises(ValueError):
            A.element([0, 0, 1])

    def test_method_mul(self):
        A = self.A
        # t ∘ t = w and t ∘ a = sigma(a) t
        self.assertEqual(A.mul(A.t(), A.t()), A.constant(self.w))
        self.assertEqual(A.power(A.t(), 2), A.constant(self.w))
        self.assertEqual(A.mul(A.t(), A.constant(self.w)), A.element([self.F4.zero(), self.F4.mul(self.w, self.w)]))
        self.assertFalse(A.is_associative())
        # (t t) t = w t while t (t t) = w^2 t
        self.assertFalse(A.associator(A.t(), A.t(), A.t()).is_zero())
        self.assertTrue(scalars_in_nuclei(A))

        # t^2 - 1 is two-sided, so the quotient is associative
        B = make_petit(self.R, cyclic_modulus(self.R, self.F4.one(), 2))
        self.assertTrue(B.is_associative())

    def test_method_gamma(self):
        A = self.A
        zero, one = self.F4.zero(), self.F4.one()
        self.assertEqual(gamma(A, A.t()), [[zero, self.w], [one, zero]])
        elements = list(A.elements())
        for x in elements:
            matrix = gamma(A, x)
            self.assertEqual(matrix, right_matrix(A, x))
            for g in elements:
                self.assertEqual(list(A.mul(g, x).coefficients), matrix_vector(matrix, g.coefficients, self.F4))
        self.assertEqual(gamma_compatibility(A, self.rng, 1000), 1000)

        # t^2 + t + w is not of cyclic form, right multiplication is still linear
        B = make_petit(self.R, self.R.t(2) + self.R.t() + self.R.constant(self.w))
        self.assertEqual(gamma_compatibility(B, self.rng, 1000), 1000)

        sigma_bar = induce_map(self.K.automorphism("sigma"), self.Q16)
        R = SkewPolyRing(self.Q16, sigma_bar)
        C = make_petit(R, cyclic_modulus(R, self.Q16.project(self.K.generator("phi")), 2))
        self.assertEqual(gamma_compatibility(C, self.rng, 1000), 1000)

    def test_method_is_division_finite(self):
        A = self.A
        report = is_division(A)
        self.assertEqual(report.status, DivisionStatus.PROVED)
        self.assertTrue(report.is_division)
        # every c outside F_2 gives a division algebra
        fixed = self.R.fixed_elements()
        for c in self.F4.elements():
            B = make_petit(self.R, cyclic_modulus(self.R, c, 2))
            self.assertEqual(is_division(B).is_division, c not in fixed)
            self.assertTrue(division_agreement(B).agrees)
            self.assertEqual(find_zero_divisor(B) is None, c not in fixed)

        # coefficient ring with zero divisors
        sigma_bar = induce_map(self.K.automorphism("sigma"), self.Q16)
        R = SkewPolyRing(self.Q16, sigma_bar)
        B = make_petit(R, cyclic_modulus(R, self.Q16.project(self.K.generator("phi")), 2))
        self.assertEqual(is_division(B).status, DivisionStatus.REFUTED)
        y, x = find_zero_divisor(B)
        self.assertTrue(B.mul(y, x).is_zero())
        self.assertFalse(y.is_zero() or x.is_zero())

    def test_method_is_division_extensions(self):
        # (F_64 / F_4, tau, c) of degree 3
        field = load_field("eisenstein_omega7")
        F64 = build_quotient(field, IntegralIdeal(field.subfield("F"), [field.from_int(2)]))
        R = SkewPolyRing(F64, induce_map(field.automorphism("tau"), F64))
        theta, omega = F64.project(field.generator("theta")), F64.project(field.generator("omega"))
        self.assertEqual(orbit_length(R.sigma, theta), 3)
        self.assertTrue(is_division(make_petit(R, cyclic_modulus(R, theta, 3))).is_division)
        self.assertEqual(gamma_compatibility(make_petit(R, cyclic_modulus(R, theta, 3)), self.rng, 1000), 1000)
        # the twisted norm maps onto F_4^*, so t^3 - omega has a linear right factor
        self.assertFalse(is_division(make_petit(R, cyclic_modulus(R, omega, 3))).is_division)

        # (F_16 / F_2, sigma, 1) has t - 1 as a right factor of t^4 - 1
        field = load_field("gaussian_omega15")
        F16 = build_quotient(field, IntegralIdeal(field.subfield("F"), [field.element([1, 1, 0, 0, 0, 0, 0, 0])]))
        R = SkewPolyRing(F16, induce_map(field.automorphism("sigma"), F16))
        B = make_petit(R, cyclic_modulus(R, F16.one(), 4))
        report = is_division(B)
        self.assertEqual(report.status, DivisionStatus.REFUTED)
        h, q = report.witness
        self.assertEqual(R.skew_mul(q, h), B.f)
        one = F16.one()
        self.assertTrue(B.mul(B.element([one, one, one, one]), B.element([one, one])).is_zero())

    def test_method_is_division_number_field(self):
        R = self.RK
        phi, i = self.K.generator("phi"), self.K.generator("i")
        report = is_division(make_petit(R, cyclic_modulus(R, phi, 2)))
        self.assertEqual(report.status, DivisionStatus.PROVED)

        A = make_petit(R, cyclic_modulus(R, i, 2))
        self.assertTrue(A.is_associative())
        self.assertFalse(make_petit(R, cyclic_modulus(R, phi, 2)).is_associative())
        self.assertEqual(is_division(A).status, DivisionStatus.UNKNOWN)
        self.assertIsNone(is_division(A).is_division)
        report = is_division(A, assertion={"status": "refuted", "provenance": "norm equation"})
        self.assertEqual(report.status, DivisionStatus.REFUTED)
        self.assertEqual(report.provenance, "norm equation")

        with self.assertRaises(NotAFiniteField):
            nuclei(A)
        with self.assertRaises(NotAFiniteField):
            find_zero_divisor(A)

    def test_method_nuclei(self):
        report = nuclei(self.A)
        self.assertEqual(report.mode, "linear")
        expected = {"left": 4, "middle": 4, "right": 4, "nucleus": 4, "commuter": 2, "center": 2}
        self.assertEqual(report.cardinalities, expected)
        self.assertEqual(right_nucleus_by_invariance(self.A).cardinality(), 4)

        # coefficient ring with zero divisors
        sigma_bar = induce_map(self.K.automorphism("sigma"), self.Q16)
        R = SkewPolyRing(self.Q16, sigma_bar)
        B = make_petit(R, cyclic_modulus(R, self.Q16.project(self.K.generator("phi")), 2))
        report = nuclei(B)
        self.assertIn(report.mode, ("linear", "exhaustive"))
        self.assertGreaterEqual(report.cardinalities["left"], 16)
        sampled = nuclei(B, budget=1, rng=np.random.default_rng(0), sample_size=8)
        if sampled.mode == "sampled":
            self.assertIsNone(sampled.cardinalities["left"])

    def test_method_two_sided_ideals(self):
        A = self.A
        self.assertEqual([ideal.cardinality for ideal in two_sided_ideals(A)], [1, 16])
        self.assertEqual([ideal.cardinality for ideal in two_sided_ideals(A, division=is_division(A))], [1, 16])

        # A / t^2 is local with the ideal generated by t
        B = make_petit(self.R, self.R.t(2))
        self.assertEqual([ideal.cardinality for ideal in two_sided_ideals(B)], [1, 4, 16])
        with self.assertRaises(BudgetExceeded):
            two_sided_ideals(B, budget=8)


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
