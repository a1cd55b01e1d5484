import unittest
import itertools

import numpy as np

from petitcode.errors import ShapeMismatch, ZeroInverse
from petitcode.exact import (ModPPoly, charpoly, det_exact, det_permutation, elementary_divisors, factor_mod_p,
                             is_irreducible_mod_p, matmul, monic_polynomials, rational_inverse, smith_normal_form)
from petitcode.fields import IntegralIdeal, load_field
from petitcode.rings import IntegralRing, build_quotient


def _has_root(f):
    return any(f(x) == 0 for x in range(f.p))


class TestCase(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(42)
        self.shapes = [(1, 1), (2, 2), (2, 3), (3, 2), (3, 3), (4, 4)]

    def tearDown(self):
        pass

    def test_method_smith_normal_form(self):
        U, D, V = smith_normal_form([[1, 0], [0, 1]])
        self.assertEqual(D, [[1, 0], [0, 1]])
        self.assertEqual(U, [[1, 0], [0, 1]])
        self.assertEqual(V, [[1, 0], [0, 1]])

        self.assertEqual(elementary_divisors([[2, 0], [0, 3]]), [1, 6])
        # relation matrix of (1 + i) Z[i] in the basis {1, i}
        self.assertEqual(elementary_divisors([[1, -1], [1, 1]]), [1, 2])

    def test_method_smith_normal_form_random(self):
        for rows, columns in self.shapes:
            for _ in range(10):
                M = [[int(v) for v in row] for row in self.rng.integers(-6, 7, size=(rows, columns))]
                U, D, V = smith_normal_form(M)
                # U M V = D with unimodular transformations
                self.assertEqual(matmul(matmul(U, M), V), D)
                self.assertIn(det_exact(U), (1, -1))
                self.assertIn(det_exact(V), (1, -1))
                # diagonal, nonnegative, divisibility chain
                diagonal = [D[k][k] for k in range(min(rows, columns))]
                for i in range(rows):
                    for j in range(columns):
                        if i != j:
                            self.assertEqual(D[i][j], 0)
                self.assertTrue(all(d >= 0 for d in diagonal))
                for a, b in zip(diagonal, diagonal[1:]):
                    if a:
                        self.assertEqual(b % a, 0)
                    else:
                        self.assertEqual(b, 0)

    def test_method_factor_mod_p(self):
        self.assertEqual(factor_mod_p(ModPPoly([1, 0, 1], 5)),
                         [(ModPPoly([2, 1], 5), 1), (ModPPoly([3, 1], 5), 1)])
        self.assertTrue(is_irreducible_mod_p(ModPPoly([1, 0, 1], 3)))
        self.assertEqual(factor_mod_p(ModPPoly([0, 1], 2)), [(ModPPoly([0, 1], 2), 1)])
        self.assertEqual(factor_mod_p(ModPPoly([0, 0, 1], 2)), [(ModPPoly([0, 1], 2), 2)])

        with self.assertRaises(ValueError):
            ModPPoly([1, 1], 4)
        with self.assertRaises(ValueError):
            factor_mod_p(ModPPoly([], 3))

    def test_method_factor_mod_p_exhaustive(self):
        for p in (2, 3, 5):
            for degree in (1, 2, 3):
                for f in monic_polynomials(degree, p):
                    factors = factor_mod_p(f)
                    # factors multiply back to f
                    product = ModPPoly([1], p)
                    for factor, multiplicity in factors:
                        for _ in range(multiplicity):
                            product = product * factor
                    self.assertEqual(product, f)
                    # every factor is irreducible (no roots suffices up to degree 3)
                    for factor, _ in factors:
                        self.assertTrue(factor.is_monic())
                        if factor.degree > 1:
                            self.assertFalse(_has_root(factor))
                    self.assertEqual(is_irreducible_mod_p(f), degree == 1 or not _has_root(f))

    def test_method_det_exact(self):
        self.assertEqual(det_exact([[2, 0], [0, 3]]), 6)
        self.assertEqual(det_exact([[1, 0, 0], [0, 1, 0], [0, 0, 1]]), 1)
        self.assertEqual(det_exact([]), 1)
        with self.assertRaises(ShapeMismatch):
            det_exact([[1, 2, 3], [4, 5, 6]])

        for size in range(1, 5):
            for _ in range(20):
                M = [[int(v) for v in row] for row in self.rng.integers(-4, 5, size=(size, size))]
                self.assertEqual(det_exact(M), det_permutation(M))

    def test_method_det_exact_rings(self):
        # Z[i]
        field = load_field("gaussian")
        ring = IntegralRing(field)
        a, b = field.element([1, 1]), field.element([1, -1])
        zero = field.zero()
        self.assertEqual(det_exact([[a, zero], [zero, b]], ring), 2)
        for _ in range(10):
            M = [[ring.random_element(self.rng) for _ in range(3)] for _ in range(3)]
            self.assertEqual(det_exact(M, ring), det_permutation(M, ring))

        # F_4 = Z[i, phi] / (1 + i)
        field = load_field("gaussian_sqrt5")
        Q = build_quotient(field, IntegralIdeal(field.subfield("F"), [field.element([1, 1, 0, 0])]))
        w = Q.project(field.generator("phi"))
        self.assertEqual(det_exact([[Q.zero(), w], [Q.one(), Q.zero()]], Q), Q.neg(w))
        self.assertEqual(Q.neg(w), w)
        for M in itertools.product(list(Q.elements()), repeat=4):
            matrix = [list(M[:2]), list(M[2:])]
            self.assertEqual(det_exact(matrix, Q), det_permutation(matrix, Q))

    def test_method_charpoly(self):
        self.assertEqual(charpoly([[0, 1], [1, 0]]), [-1, 0, 1])
        self.assertEqual(charpoly([[2, 0], [0, 3]]), [6, -5, 1])
        for size in range(1, 4):
            M = [[int(v) for v in row] for row in self.rng.integers(-3, 4, size=(size, size))]
            coefficients = charpoly(M)
            self.assertEqual(coefficients[-1], 1)
            self.assertEqual(coefficients[0], (-1) ** size * det_exact(M))

    def test_method_rational_inverse(self):
        inverse = rational_inverse([[2, 1], [1, 1]])
        self.assertEqual(inverse, [[1, -1], [-1, 2]])
        with self.assertRaises(ZeroInverse):
            rational_inverse([[1, 2], [2, 4]])


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
