import unittest

import numpy as np

from petitcode.algebras import (cyclic_modulus, cyclic_quotient_report, forms_agree, gamma_compatibility,
                                iterated_coordinates, iterated_matrix, make_iterated, make_petit, matrix_vector)
from petitcode.errors import CoefficientsNotIntegral, ConfigError, SpecMismatch
from petitcode.fields import IntegralIdeal, load_field
from petitcode.orders import (charpoly_annihilation_check, decompose_quotient, natural_order, project_component,
                              reduce_mod, slot_permutation_holds)
from petitcode.rings import IntegralRing
from petitcode.skew import SkewPolyRing


class TestCase(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(42)

        self.K = load_field("gaussian_sqrt5")
        self.F = self.K.subfield("F")
        self.R = SkewPolyRing(IntegralRing(self.K), self.K.automorphism("sigma"))
        self.A = make_petit(self.R, cyclic_modulus(self.R, self.K.generator("phi"), 2), name="A")
        self.order = natural_order(self.A)

    def tearDown(self):
        pass

    def test_method_natural_order(self):
        order = self.order
        self.assertEqual(order.rank, 2)
        self.assertIs(order.center, self.F)
        self.assertEqual(len(order.module_basis()), 2)
        for _ in range(10):
            x = order.random_element(self.rng)
            self.assertTrue(order.contains(x))
            self.assertEqual(order.from_coordinates(order.coordinates(x)), x)
        self.assertFalse(order.contains(self.A.constant(self.K.element(["1/2", 0, 0, 0]))))

        half = self.K.element(["1/2", 0, 0, 0])
        with self.assertRaises(CoefficientsNotIntegral):
            natural_order(make_petit(self.R, cyclic_modulus(self.R, half, 2)))

    def test_method_charpoly_annihilation_check(self):
        order = self.order
        self.assertTrue(charpoly_annihilation_check(order, self.A.t()))
        self.assertTrue(charpoly_annihilation_check(order, self.A.constant(self.K.generator("phi"))))

        # the associative (K/F, sigma, i) satisfies it for every element
        A = make_petit(self.R, cyclic_modulus(self.R, self.K.generator("i"), 2))
        order = natural_order(A)
        for _ in range(10):
            self.assertTrue(charpoly_annihilation_check(order, order.random_element(self.rng)))

    def test_method_reduce_mod(self):
        ideal = IntegralIdeal(self.F, [self.K.element([1, 1, 0, 0])])
        quotient = reduce_mod(self.order, ideal, samples=50, seed=0)
        self.assertEqual(quotient.cardinality(), 16)
        self.assertEqual(quotient.quotient_ring.cardinality(), 4)
        self.assertEqual(quotient.psi(self.A.t()), quotient.target.t())
        self.assertEqual(quotient.psi(self.A.one()), quotient.target.one())
        for y in quotient.target.elements():
            self.assertEqual(quotient.psi(quotient.lift(y)), y)
        # IΛ is the kernel
        g = ideal.generators[0]
        for _ in range(10):
            x = self.order.random_element(self.rng)
            self.assertTrue(quotient.psi(quotient.scaled(g, x)).is_zero())
            self.assertTrue(quotient.in_ideal_lattice(quotient.scaled(g, x)))

        self.assertEqual(reduce_mod(self.order, ideal, exponent=2, samples=10).cardinality(), 256)

        # generator outside the center subring
        outside = IntegralIdeal(self.K.subfield("K"), [self.K.element([0, 0, 2, 0])])
        with self.assertRaises(ConfigError):
            reduce_mod(self.order, outside, samples=0)

    def test_method_decompose_mixed_primes(self):
        ideal = IntegralIdeal(self.F, [self.K.element([3, 3, 0, 0])])
        quotient = reduce_mod(self.order, ideal, samples=20)
        self.assertEqual(quotient.cardinality(), 104976)

        report = decompose_quotient(quotient)
        self.assertEqual(len(report.ring_components), 3)
        self.assertEqual(sorted(report.component_cardinalities), [16, 6561])
        self.assertEqual(report.cardinality, 104976)
        for component in report.components:
            # F_4 stays whole, the two copies of F_9 are swapped by sigma
            self.assertEqual(component.split, component.cardinality == 6561)
            for cycle in component.cycles:
                self.assertTrue(slot_permutation_holds(cycle, quotient.sigma_bar))

        # projections onto the components are multiplicative
        target = quotient.target
        for _ in range(10):
            x, y = target.random_element(self.rng), target.random_element(self.rng)
            for component in report.components:
                self.assertEqual(project_component(quotient, component, target.mul(x, y)),
                                 component.algebra.mul(project_component(quotient, component, x),
                                                       project_component(quotient, component, y)))

    def test_method_decompose_conjugation(self):
        field = load_field("gaussian")
        R = SkewPolyRing(IntegralRing(field), field.automorphism("conj"))
        A = make_petit(R, cyclic_modulus(R, field.generator("i"), 2))
        order = natural_order(A)
        self.assertIs(order.center, field.subfield("Q"))
        quotient = reduce_mod(order, IntegralIdeal(field.subfield("Q"), [field.from_int(5)]), samples=20)
        self.assertEqual(quotient.cardinality(), 625)

        report = decompose_quotient(quotient)
        self.assertEqual(len(report.ring_components), 2)
        self.assertEqual(report.component_cardinalities, [625])
        component = report.components[0]
        self.assertEqual(component.slots, 2)
        self.assertTrue(component.split)
        self.assertTrue(slot_permutation_holds(component.cycles[0], quotient.sigma_bar))

        # 3 stays inert: one local factor F_9 and a single component
        quotient = reduce_mod(order, IntegralIdeal(field.subfield("Q"), [field.from_int(3)]), samples=20)
        self.assertEqual(quotient.cardinality(), 81)
        self.assertEqual(quotient.quotient_ring.cardinality(), 9)
        report = decompose_quotient(quotient)
        self.assertEqual(len(report.ring_components), 1)
        self.assertEqual(len(report.components), 1)
        self.assertEqual(report.component_cardinalities, [81])
        component = report.components[0]
        self.assertEqual(component.slots, 1)
        self.assertFalse(component.split)
        self.assertEqual(component.algebra.ring.cardinality(), 9)

    def test_method_iterated(self):
        field = load_field("eisenstein_omega7")
        ring = IntegralRing(field)
        rho, tau = field.automorphism("sigma"), field.automorphism("tau")
        omega = field.generator("omega")

        A = make_iterated(ring, rho, field.from_int(-1), 2, tau, omega, name="iterated")
        self.assertEqual((A.m, A.ring.n), (3, 2))
        order = natural_order(A, center=field.subfield("Q"))
        self.assertEqual(order.rank, 6)

        # the regular form represents right multiplication
        base = A.ring.base
        for _ in range(3):
            x, g = order.random_element(self.rng, 1), order.random_element(self.rng, 1)
            self.assertEqual(iterated_coordinates(A, A.mul(g, x)),
                             matrix_vector(iterated_matrix(A, x), iterated_coordinates(A, g), base))

        # both forms agree when d is fixed by rho and tau
        B = make_iterated(ring, rho, field.from_int(-1), 2, tau, field.from_int(-1))
        order_B = natural_order(B, center=field.subfield("Q"))
        for _ in range(3):
            self.assertTrue(forms_agree(B, order_B.random_element(self.rng, 1)))

        with self.assertRaises(SpecMismatch):
            make_iterated(ring, rho, field.generator("theta"), 2, tau, omega)

        quotient = reduce_mod(order, IntegralIdeal(field.subfield("Q"), [field.from_int(2)]), samples=5)
        report = cyclic_quotient_report(quotient.target)
        self.assertTrue(report.split)
        self.assertEqual(report.cardinality, 64 ** 2)
        self.assertEqual((report.fix_rho, report.fix_sigma), (8, 4))
        self.assertEqual(gamma_compatibility(quotient.target, self.rng, 100), 100)


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
