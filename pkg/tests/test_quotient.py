import unittest

import numpy as np

from petitcode.errors import BudgetExceeded, NotWellDefined
from petitcode.fields import FieldElement, IntegralIdeal, load_field
from petitcode.rings import (build_quotient, crt_decompose, fixed_subring, induce_map, local_ring_report, order_slots,
                             powers_rank, splitting_report)


class TestCase(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(42)
        self.K = load_field("gaussian_sqrt5")
        self.F = self.K.subfield("F")
        self.F4 = build_quotient(self.K, IntegralIdeal(self.F, [self.K.element([1, 1, 0, 0])]))
        self.gaussian = load_field("gaussian")

    def tearDown(self):
        pass

    def _random(self, field, box=4):
        return FieldElement(field, [int(c) for c in self.rng.integers(-box, box + 1, size=field.degree)])

    def test_method_build_quotient(self):
        Q = self.F4
        self.assertEqual(Q.cardinality(), 4)
        self.assertEqual(Q.moduli, [2, 2])
        self.assertEqual(Q.characteristic, 2)
        self.assertTrue(Q.is_field())
        self.assertEqual(Q.prime_coordinates(), (2, 2))

        ideal = IntegralIdeal(self.F, [self.K.element([1, 1, 0, 0])])
        self.assertEqual(build_quotient(self.K, ideal, exponent=2).cardinality(), 16)
        self.assertFalse(build_quotient(self.K, ideal, exponent=2).is_field())

        field = load_field("eisenstein_omega7")
        F64 = build_quotient(field, IntegralIdeal(field.subfield("F"), [field.from_int(2)]))
        self.assertEqual(F64.cardinality(), 64)
        self.assertTrue(F64.is_field())

    def test_method_project(self):
        for Q in [self.F4, build_quotient(self.gaussian, IntegralIdeal(self.gaussian.subfield("Q"), [self.gaussian.from_int(5)]))]:
            field = Q.field
            for _ in range(100):
                x, y = self._random(field), self._random(field)
                self.assertEqual(Q.project(x + y), Q.add(Q.project(x), Q.project(y)))
                self.assertEqual(Q.project(x * y), Q.mul(Q.project(x), Q.project(y)))
            self.assertEqual(Q.project(field.one()), Q.one())
            # canonical lifts reduce back
            for a in Q.elements():
                self.assertEqual(Q.project(Q.lift(a)), a)
            # ideal elements reduce to zero
            for g in Q.ideal.generators:
                self.assertTrue(Q.is_zero(Q.project(g * self._random(field))))
        with self.assertRaises(ValueError):
            self.F4.project(self.K.element(["1/2", 0, 0, 0]))

    def test_method_induce_map(self):
        Q = self.F4
        sigma_bar = induce_map(self.K.automorphism("sigma"), Q)
        self.assertEqual(sigma_bar.order(), 2)
        self.assertFalse(sigma_bar.is_identity())
        self.assertEqual(fixed_subring(sigma_bar).cardinality(), 2)
        # i = 1 modulo 1 + i, so complex conjugation becomes trivial
        self.assertTrue(induce_map(self.K.automorphism("conj"), Q).is_identity())
        for a in Q.elements():
            for b in Q.elements():
                self.assertEqual(sigma_bar(Q.mul(a, b)), Q.mul(sigma_bar(a), sigma_bar(b)))

        # conjugation does not stabilize <2 + i>
        Q = build_quotient(self.gaussian, IntegralIdeal(self.gaussian.subfield("K"), [self.gaussian.element([2, 1])]))
        with self.assertRaises(NotWellDefined):
            induce_map(self.gaussian.automorphism("conj"), Q)

    def test_method_crt_decompose(self):
        Q = self.gaussian.subfield("Q")
        inert = build_quotient(self.gaussian, IntegralIdeal(Q, [self.gaussian.from_int(3)]))
        split = build_quotient(self.gaussian, IntegralIdeal(Q, [self.gaussian.from_int(5)]))

        components = crt_decompose(inert)
        self.assertEqual([c.cardinality for c in components], [9])
        self.assertTrue(components[0].is_field())

        components = crt_decompose(split)
        self.assertEqual([c.cardinality for c in components], [5, 5])
        self.assertTrue(all(c.is_field() for c in components))
        total = split.zero()
        for c in components:
            total = split.add(total, c.idempotent)
        self.assertEqual(total, split.one())
        # thread partitioning does not change the result
        self.assertEqual([c.idempotent for c in crt_decompose(split, threads=3)], [c.idempotent for c in components])

        # conjugation swaps the two components of Z[i] / 5
        conj_bar = induce_map(self.gaussian.automorphism("conj"), split)
        cycles = order_slots(components, conj_bar)
        self.assertEqual([len(cycle) for cycle in cycles], [2])
        self.assertEqual(conj_bar(cycles[0][0].idempotent), cycles[0][1].idempotent)

        with self.assertRaises(BudgetExceeded):
            crt_decompose(split, budget=10)

    def test_method_splitting_report(self):
        Q = self.gaussian.subfield("Q")
        cases = [(self.gaussian, Q, 3, 1, (1, 2, 1)),
                 (self.gaussian, Q, 5, 1, (1, 1, 2)),
                 (self.K, self.F, [1, 1, 0, 0], 1, (1, 2, 1)),
                 (self.K, self.F, [1, 1, 0, 0], 2, (1, 2, 1))]
        for field, center, generator, exponent, expected in cases:
            element = field.from_int(generator) if isinstance(generator, int) else field.element(generator)
            ring = build_quotient(field, IntegralIdeal(center, [element]), exponent=exponent)
            report = splitting_report(ring, center)
            self.assertEqual((report.e, report.f, report.g), expected)
            self.assertTrue(report.consistent)
        self.assertEqual(report.kind, "inert")

        field = load_field("eisenstein_omega7")
        ring = build_quotient(field, IntegralIdeal(field.subfield("F"), [field.from_int(2)]))
        report = splitting_report(ring, field.subfield("F"))
        self.assertEqual((report.e, report.f, report.g), (1, 3, 1))

        # 15 = 3 * 5 is not a prime power
        ring = build_quotient(self.gaussian, IntegralIdeal(Q, [self.gaussian.from_int(15)]))
        with self.assertRaises(ValueError):
            splitting_report(ring, Q)

    def test_method_local_ring_report(self):
        ideal = IntegralIdeal(self.F, [self.K.element([1, 1, 0, 0])])
        report = local_ring_report(build_quotient(self.K, ideal, exponent=2))
        self.assertTrue(report.is_local)
        self.assertEqual(report.cardinality, 16)
        self.assertEqual(report.residue_cardinality, 4)
        self.assertEqual(report.units, 12)

        Q = self.gaussian.subfield("Q")
        report = local_ring_report(build_quotient(self.gaussian, IntegralIdeal(Q, [self.gaussian.from_int(5)])))
        self.assertFalse(report.is_local)

    def test_method_powers_rank(self):
        field = load_field("gaussian_omega15")
        F16 = build_quotient(field, IntegralIdeal(field.subfield("F"), [field.element([1, 1, 0, 0, 0, 0, 0, 0])]))
        self.assertEqual(F16.cardinality(), 16)
        self.assertEqual(powers_rank(F16, F16.project(field.generator("theta")), 4), 4)
        self.assertEqual(powers_rank(F16, F16.one(), 4), 1)
        sigma_bar = induce_map(field.automorphism("sigma"), F16)
        self.assertEqual(sigma_bar.order(), 4)


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
