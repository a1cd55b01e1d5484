import unittest
from unittest import mock

import numpy as np

from petitcode.utils import first_found, generate_equally_spaced_scopes, partitioned_search, set_seed


class TestCase(unittest.TestCase):
    def setUp(self):
        pass

    def tearDown(self):
        pass

    def test_method_set_seed(self):
        self.assertEqual(set_seed(7), 7)
        first = np.random.rand(3)
        set_seed(7)
        self.assertTrue(np.array_equal(first, np.random.rand(3)))

        # generated seeds use the whole range accepted by NumPy
        with mock.patch("petitcode.utils.os.urandom", return_value=b"\xff\xff\xff\xff"):
            self.assertEqual(set_seed(), 2 ** 32 - 1)
        with mock.patch("petitcode.utils.os.urandom", return_value=b"\x00\x00\x00\x80"):
            self.assertIn(set_seed(), (2 ** 7, 2 ** 31))
        for _ in range(10):
            self.assertTrue(0 <= set_seed() < 2 ** 32)

    def test_method_partitioned_search(self):
        self.assertEqual(generate_equally_spaced_scopes(10, 3), [3, 3, 4])
        with self.assertRaises(ValueError):
            generate_equally_spaced_scopes(2, 3)

        self.assertEqual(partitioned_search(lambda start, stop: sum(range(start, stop)), 10, threads=3), [3, 12, 30])
        self.assertEqual(partitioned_search(lambda start, stop: (start, stop), 0, threads=4), [(0, 0)])

        def search(start, stop):
            found = [(index, index * index) for index in range(start, stop) if index % 7 == 5]
            return found[0] if found else None

        for threads in (1, 2, 5):
            self.assertEqual(first_found(partitioned_search(search, 30, threads=threads)), (5, 25))
        self.assertIsNone(first_found([None, None]))


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
