import unittest
import math

import numpy as np

from petitcode.errors import AxiomViolation, BadAutomorphism, ConfigError, ZeroIdeal, ZeroInverse
from petitcode.fields import (FieldElement, IntegralIdeal, element_inverse, element_mul, is_fixed_by, load_field,
                              power_independence)


class TestCase(unittest.TestCase):
    def setUp(self):
        self.rng = np.random.default_rng(42)
        self.presets = ["gaussian", "gaussian_sqrt5", "eisenstein_omega7", "gaussian_omega15", "rationals"]
        self.K = load_field("gaussian_sqrt5")

    def tearDown(self):
        pass

    def test_presets(self):
        degrees = {"gaussian": 2, "gaussian_sqrt5": 4, "eisenstein_omega7": 6, "gaussian_omega15": 8, "rationals": 1}
        for name in self.presets:
            field = load_field(name)
            self.assertEqual(field.degree, degrees[name])
            self.assertEqual(field.labels[0], "1")
            self.assertIn("Q", field.subfields)
            self.assertIn("K", field.subfields)
        self.assertEqual(self.K.labels, ["1", "i", "phi", "i*phi"])

        field = load_field("eisenstein_omega7")
        self.assertEqual(field.automorphism("tau").order, 3)
        self.assertIs(field.automorphism("tau").fixes, field.subfield("F"))

    def test_method_element_mul(self):
        i, phi = self.K.generator("i"), self.K.generator("phi")
        self.assertEqual(element_mul(i, i), -1)
        self.assertEqual(element_mul(phi, phi), phi + 1)
        self.assertEqual(i * phi, self.K.element([0, 0, 0, 1]))

    def test_method_element_inverse(self):
        phi = self.K.generator("phi")
        self.assertEqual(element_inverse(phi), phi - 1)
        for name in self.presets:
            field = load_field(name)
            for _ in range(20):
                x = FieldElement(field, [int(c) for c in self.rng.integers(-3, 4, size=field.degree)])
                if x.is_zero():
                    continue
                self.assertEqual(x * element_inverse(x), 1)
            with self.assertRaises(ZeroInverse):
                element_inverse(field.zero())

    def test_method_automorphisms(self):
        sigma, conj = self.K.automorphism("sigma"), self.K.automorphism("conj")
        i, phi = self.K.generator("i"), self.K.generator("phi")
        self.assertEqual(sigma(phi), 1 - phi)
        self.assertTrue(is_fixed_by(i, sigma))
        self.assertFalse(is_fixed_by(phi, sigma))
        self.assertEqual(conj(i), -i)
        self.assertTrue(sigma.compose(sigma).is_identity())
        self.assertFalse(sigma.compose(conj).is_identity())

        for name in ["eisenstein_omega7", "gaussian_omega15"]:
            field = load_field(name)
            for automorphism in field.automorphisms.values():
                current = automorphism
                for _ in range(automorphism.order - 1):
                    self.assertFalse(current.is_identity())
                    current = automorphism.compose(current)
                self.assertTrue(current.is_identity())
                # multiplicative on random pairs
                for _ in range(5):
                    x = FieldElement(field, [int(c) for c in self.rng.integers(-2, 3, size=field.degree)])
                    y = FieldElement(field, [int(c) for c in self.rng.integers(-2, 3, size=field.degree)])
                    self.assertEqual(automorphism(x * y), automorphism(x) * automorphism(y))

    def test_method_load_field_rejects(self):
        # first basis element is not the unit
        table = [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]
        with self.assertRaises(AxiomViolation):
            load_field({"version": "1.0", "name": "bad", "basis": ["x", "1"], "mul_table": table})
        # b_0 * b_1 = 0, so b_0 is not a unit
        table = [[[1, 0], [0, 0]], [[0, 1], [0, 0]]]
        with self.assertRaises(AxiomViolation) as context:
            load_field({"version": "1.0", "name": "bad", "basis": ["1", "x"], "mul_table": table})
        self.assertIsNotNone(context.exception.witness)
        # i -> 2i is not multiplicative
        spec = {"version": "1.0", "name": "bad",
                "generators": [{"name": "i", "minpoly": [1, 0, 1]}],
                "automorphisms": {"double": {"images": {"i": [0, 2]}}}}
        with self.assertRaises(BadAutomorphism):
            load_field(spec)
        # declared order differs
        spec["automorphisms"] = {"conj": {"images": {"i": [0, -1]}, "order": 4}}
        with self.assertRaises(BadAutomorphism):
            load_field(spec)
        # unsupported format version
        with self.assertRaises(ConfigError):
            load_field({"version": "2.0", "name": "K", "generators": []})

    def test_method_load_field_rejects_non_fields(self):
        # Q(i) twice: (i_1 - i_2)(i_1 + i_2) = 0
        spec = {"version": "1.0", "name": "twice",
                "generators": [{"name": "i", "minpoly": [1, 0, 1]}, {"name": "j", "minpoly": [1, 0, 1]}]}
        with self.assertRaises(AxiomViolation) as context:
            load_field(spec)
        self.assertEqual(context.exception.field, "generators")
        self.assertEqual(len(context.exception.witness), 2)
        # sqrt(8) = 2 sqrt(2)
        spec["generators"] = [{"name": "a", "minpoly": [-2, 0, 1]}, {"name": "b", "minpoly": [-8, 0, 1]}]
        with self.assertRaises(AxiomViolation):
            load_field(spec)
        # reducible minimal polynomial x^2 - 1
        spec["generators"] = [{"name": "x", "minpoly": [-1, 0, 1]}]
        with self.assertRaises(AxiomViolation) as context:
            load_field(spec)
        self.assertEqual(sorted(context.exception.witness), ["-1 + x", "1 + x"])
        # Q x Q with e^2 = 1
        table = [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]
        with self.assertRaises(AxiomViolation):
            load_field({"version": "1.0", "name": "split", "basis": ["1", "e"], "mul_table": table})

        # linearly disjoint generators still load
        spec["generators"] = [{"name": "i", "minpoly": [1, 0, 1]}, {"name": "a", "minpoly": [-2, 0, 1]}]
        field = load_field(spec)
        self.assertEqual(field.degree, 4)
        a = field.generator("a")
        self.assertEqual(element_inverse(field.generator("i") + a) * (field.generator("i") + a), field.one())
        for name in ("gaussian_sqrt5", "eisenstein_omega7", "gaussian_omega15"):
            load_field(name).verify_domain()

    def test_method_embeddings(self):
        embedding = self.K.embeddings["complex"]
        self.assertTrue(math.isclose(embedding(self.K.generator("phi")).real, (1 + math.sqrt(5)) / 2))
        self.assertTrue(math.isclose(abs(embedding(self.K.element([1, 1, 0, 0]))), math.sqrt(2)))
        for _ in range(10):
            x = FieldElement(self.K, [int(c) for c in self.rng.integers(-3, 4, size=4)])
            y = FieldElement(self.K, [int(c) for c in self.rng.integers(-3, 4, size=4)])
            self.assertTrue(abs(embedding(x * y) - embedding(x) * embedding(y)) < 1e-9 * max(1.0, abs(embedding(x * y))))

    def test_method_integral_ideal(self):
        F = self.K.subfield("F")
        ideal = IntegralIdeal(F, [self.K.element([1, 1, 0, 0])])
        self.assertEqual(ideal.norm(), 4)
        self.assertTrue(ideal.is_principal())
        self.assertTrue(ideal.contains(self.K.from_int(2)))
        self.assertFalse(ideal.contains(self.K.one()))
        self.assertTrue(ideal.contains_in_subring(self.K.element([1, -1, 0, 0])))
        self.assertEqual(ideal.power(2).norm(), 16)

        field = load_field("gaussian")
        Q = field.subfield("Q")
        self.assertEqual(IntegralIdeal(Q, [field.from_int(3)]).norm(), 9)
        self.assertEqual(IntegralIdeal(Q, [field.from_int(5)]).norm(), 25)

        with self.assertRaises(ZeroIdeal):
            IntegralIdeal(F, [self.K.zero()])
        with self.assertRaises(ValueError):
            IntegralIdeal(F, [self.K.element(["1/2", 0, 0, 0])])
        with self.assertRaises(ValueError):
            IntegralIdeal(F, [self.K.generator("phi")])

    def test_method_power_independence(self):
        F = self.K.subfield("F")
        self.assertTrue(power_independence(self.K.generator("phi"), 2, F))
        self.assertFalse(power_independence(self.K.generator("i"), 2, F))

        field = load_field("eisenstein_omega7")
        theta = field.generator("theta")
        self.assertTrue(power_independence(theta, 3, field.subfield("F")))


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
