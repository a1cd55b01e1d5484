import unittest
import os
import io
import tempfile

import numpy as np

from petitcode.algebras import cyclic_modulus, gamma, make_petit
from petitcode.coding import (InnerCodebook, OuterCode, RecordFileIterator, alpha_magnitudes, base_code, bound_check,
                              box_elements, codeword_record, enumerate_coset_code, first_coordinates, full_code,
                              full_diversity_check, hamming_distance, inner_matrix, key_bound, lift_codeword, min_det,
                              parity_code, prescribed_distance_code, project_codeword, project_matrix,
                              repetition_code, resolve_embedding, sigma_determinant, write_records)
from petitcode.errors import BudgetExceeded, EmbeddingMissing, EmptyCode, NotAField, NotInOuterCode, ZeroElement
from petitcode.fields import IntegralIdeal, load_field
from petitcode.orders import natural_order, reduce_mod
from petitcode.rings import IntegralRing
from petitcode.skew import SkewPolyRing


class TestCase(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(42)

        self.K = load_field("gaussian_sqrt5")
        R = SkewPolyRing(IntegralRing(self.K), self.K.automorphism("sigma"))
        self.order = natural_order(make_petit(R, cyclic_modulus(R, self.K.generator("phi"), 2), name="A"))
        self.ideal = IntegralIdeal(self.K.subfield("F"), [self.K.element([1, 1, 0, 0])])
        self.quotient = reduce_mod(self.order, self.ideal, samples=20)
        self.alphabet = self.quotient.target
        self.embedding = resolve_embedding(self.K, "complex")

    def tearDown(self):
        pass

    def test_method_outer_codes(self):
        A = self.alphabet
        code = repetition_code(A, 3)
        self.assertEqual(len(code), 16)
        self.assertTrue(code.is_additive())
        self.assertEqual(hamming_distance(code), 3)

        code = parity_code(A, 3)
        self.assertEqual(len(code), 256)
        self.assertTrue(code.is_additive())
        self.assertEqual(hamming_distance(code), 2)
        self.assertEqual(hamming_distance(code, threads=4), 2)
        word = code.encode([A.t(), A.one()])
        self.assertEqual(word[2], A.t() + A.one())
        self.assertIn(word, code)

        code = full_code(A, 2)
        self.assertEqual(len(code), 256)
        self.assertEqual(hamming_distance(code), 1)

        with self.assertRaises(ValueError):
            parity_code(A, 1)
        with self.assertRaises(BudgetExceeded):
            full_code(A, 3, budget=100)
        with self.assertRaises(EmptyCode):
            hamming_distance(OuterCode(A, 2, [(A.zero(), A.zero())]))

    def test_method_non_additive_distance(self):
        A = self.alphabet
        words = [(A.zero(), A.zero()), (A.one(), A.t()), (A.t(), A.t())]
        code = OuterCode(A, 2, words)
        self.assertFalse(code.is_additive())
        self.assertEqual(hamming_distance(code), 1)

    def test_method_prescribed_distance_code(self):
        A = self.alphabet
        F4 = A.ring
        base = base_code(F4, "repetition", 2)
        self.assertEqual(len(base), 4)
        code = prescribed_distance_code(base, A, 2)
        self.assertEqual(len(code), 64)
        # the free coordinates of one position can differ alone
        self.assertEqual(hamming_distance(code), 1)
        for word in code:
            self.assertIn(first_coordinates(code, word), base)
        self.assertEqual(len(base_code(F4, "parity", 3)), 16)
        self.assertEqual(base_code(F4, "zero", 2), [(F4.zero(), F4.zero())])

        with self.assertRaises(ValueError):
            base_code(F4, "hexacode", 6)
        with self.assertRaises(ValueError):
            prescribed_distance_code(base, A, 3)

        prime_power = reduce_mod(self.order, self.ideal, exponent=2, samples=0).target
        with self.assertRaises(NotAField):
            prescribed_distance_code(base_code(prime_power.ring, "zero", 2), prime_power, 2)

    def test_method_key_bound(self):
        self.assertAlmostEqual(key_bound(1.0, 2, 1 + 1j, 2), 4.0)
        self.assertAlmostEqual(key_bound(1.0, 1, 2.0, 1), 1.0)
        self.assertAlmostEqual(key_bound(0.5, 3, 2.0, 2), 4.5)
        alpha = self.ideal.generators[0]
        self.assertAlmostEqual(key_bound(1.0, 2, alpha, 2, [self.embedding]), 4.0)
        self.assertAlmostEqual(alpha_magnitudes(alpha, [self.embedding])[0], 2 ** 0.5)
        with self.assertRaises(EmbeddingMissing):
            alpha_magnitudes(alpha)

    def test_method_embeddings(self):
        self.assertIs(resolve_embedding(self.K, None), self.K.embeddings["complex"])
        with self.assertRaises(EmbeddingMissing):
            resolve_embedding(self.K, "real")
        with self.assertRaises(EmbeddingMissing):
            resolve_embedding(load_field("rationals"), None)

    def test_method_min_det(self):
        codebook = InnerCodebook(self.order)
        A = self.order.algebra
        one = codebook.matrix(A.one())
        self.assertAlmostEqual(min_det([one], self.embedding), 1.0)
        self.assertEqual(inner_matrix(self.order, A.t(), codeword=True), gamma(A, A.t()))
        with self.assertRaises(ZeroElement):
            inner_matrix(self.order, A.zero(), codeword=True)
        # det γ(t) = -phi
        self.assertEqual(codebook.determinant(A.t()), -self.K.generator("phi"))
        self.assertAlmostEqual(min_det([one, codebook.matrix(A.t())], self.embedding), 1.0)
        self.assertAlmostEqual(min_det([codebook.matrix(A.t())], self.embedding), ((1 + 5 ** 0.5) / 2) ** 2)

        with self.assertRaises(EmbeddingMissing):
            min_det([one], None)
        with self.assertRaises(EmptyCode):
            min_det([codebook.matrix(A.zero())], self.embedding)

    def test_method_full_diversity_check(self):
        report = full_diversity_check(self.order, self.embedding, self.rng, samples=20)
        self.assertEqual(report.pairs, 20)
        self.assertTrue(report.linear)
        self.assertTrue(report.full_rank)
        self.assertTrue(all(value > 0 for value in report.smallest))

    def test_method_lift_codeword(self):
        code = repetition_code(self.alphabet, 2)
        codebook = InnerCodebook(self.order)
        for word in code:
            codeword = lift_codeword(self.quotient, code, word, codebook)
            self.assertEqual(project_codeword(self.quotient, codeword), word)
            self.assertEqual(codeword.length, 2)
        with self.assertRaises(NotInOuterCode):
            lift_codeword(self.quotient, code, (self.alphabet.one(), self.alphabet.zero()))

        # parity words lift to gamma(x_2) = gamma(x_0) + gamma(x_1) mod I
        A, Q = self.alphabet, self.quotient.quotient_ring
        code = parity_code(A, 3)
        codeword = lift_codeword(self.quotient, code, code.encode([A.t(), A.one()]), codebook)
        first, second, third = [project_matrix(self.quotient, matrix) for matrix in codeword.matrices]
        for i in range(2):
            for j in range(2):
                self.assertEqual(third[i][j], Q.add(first[i][j], second[i][j]))

    def test_method_enumerate_coset_code(self):
        elements = box_elements(self.order, box=1)
        self.assertEqual(len(elements), 9)
        code = repetition_code(self.alphabet, 2)
        systematic = enumerate_coset_code(self.quotient, code, elements)
        exhaustive = enumerate_coset_code(self.quotient, OuterCode(self.alphabet, 2, list(code)), elements)
        self.assertEqual(sorted(map(str, systematic)), sorted(map(str, exhaustive)))
        for word in systematic:
            self.assertIn(tuple(self.quotient.psi(x) for x in word), code)
        with self.assertRaises(BudgetExceeded):
            enumerate_coset_code(self.quotient, code, elements, budget=10)
        with self.assertRaises(ValueError):
            box_elements(self.order, support=[100])

    def test_method_bound_check(self):
        self.assertAlmostEqual(sigma_determinant([np.eye(2), np.eye(2)]), 4.0)

        code = parity_code(self.alphabet, 3)
        report = bound_check(self.quotient, code, self.embedding, box=2)
        self.assertEqual(report.elements, 25)
        self.assertEqual(report.hamming, 2)
        self.assertGreater(report.codewords, 0)
        self.assertGreater(report.bound, 0)
        self.assertTrue(report.valid)
        self.assertGreaterEqual(report.enumerated_min, report.bound * (1 - 1e-6))

    def test_method_export(self):
        code = repetition_code(self.alphabet, 2)
        codebook = InnerCodebook(self.order)
        records = [codeword_record(k, lift_codeword(self.quotient, code, word, codebook), self.order, codebook,
                                   self.embedding) for k, word in enumerate(code)]
        self.assertEqual(set(records[0]), {"index", "elements", "matrices", "determinants", "abs_det2"})

        with tempfile.TemporaryDirectory() as directory:
            with open(os.path.join(directory, "codebook.jsonl"), "w") as file:
                self.assertEqual(write_records(file, records), 16)
            loaded = list(RecordFileIterator(os.path.join(directory, "*.jsonl")))
            self.assertEqual(len(loaded), 1)
            filename, content = loaded[0]
            self.assertEqual(filename, "codebook.jsonl")
            self.assertEqual(content, records)

            with open(os.path.join(directory, "codebook.txt"), "w") as file:
                write_records(file, records, format="text")
            with self.assertRaises(ValueError):
                next(RecordFileIterator(os.path.join(directory, "*.txt")))

        stream = io.StringIO()
        write_records(stream, records[:1], format="text")
        self.assertTrue(stream.getvalue().startswith("codeword 0"))
        with self.assertRaises(ValueError):
            write_records(stream, records, format="csv")


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
