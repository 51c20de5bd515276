import unittest

from dualcat.errors import NotAChainMap, NotAComplex, NotACycleImage
from dualcat.integral import (
    ChainMap,
    FgAbelianGroup,
    IntegerChainComplex,
    format_matrix,
    group_iso_equal,
    homology,
    homology_basis,
    induced_map,
    int_matrix,
    matmul,
    matrix_equal,
    smith_decomposition,
    smith_normal_form,
    solve_integer_system,
)


def circle(cochain=False):
    # boundary of the triangle a b c, edges ab, ac, bc
    boundary = int_matrix([[-1, -1, 0], [1, 0, -1], [0, 1, 1]])
    if cochain:
        return IntegerChainComplex(
            {0: ["a", "b", "c"], 1: ["ab", "ac", "bc"]},
            {0: boundary.T.copy()},
            cochain=True,
        )
    return IntegerChainComplex(
        {0: ["a", "b", "c"], 1: ["ab", "ac", "bc"]}, {1: boundary}
    )


class SmithTestCase(unittest.TestCase):
    def test_smith_normal_form(self):
        matrix = int_matrix([[2, 4], [6, 8]])
        left, diagonal, right = smith_normal_form(matrix)
        self.assertEqual(diagonal.tolist(), [[2, 0], [0, 4]])
        self.assertTrue(matrix_equal(matmul(matmul(left, matrix), right), diagonal))

    def test_inverses(self):
        matrix = int_matrix([[3, 1, 4], [1, 5, 9], [2, 6, 5]])
        decomposition = smith_decomposition(matrix)
        self.assertTrue(
            matrix_equal(
                matmul(decomposition.left, decomposition.left_inverse),
                int_matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
            )
        )
        self.assertTrue(
            matrix_equal(
                matmul(decomposition.right_inverse, decomposition.right),
                int_matrix([[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
            )
        )
        self.assertEqual(decomposition.rank, 3)

    def test_divisibility(self):
        decomposition = smith_decomposition(int_matrix([[2, 0], [0, 3]]))
        self.assertEqual(decomposition.divisors, [1, 6])

    def test_rectangular(self):
        decomposition = smith_decomposition(int_matrix([[0, 0, 0], [0, 0, 2]]))
        self.assertEqual(decomposition.rank, 1)
        self.assertEqual(decomposition.divisors, [2])

    def test_empty(self):
        decomposition = smith_decomposition(int_matrix([], (0, 3)))
        self.assertEqual(decomposition.rank, 0)
        self.assertEqual(decomposition.diagonal.shape, (0, 3))

    def test_solve_integer_system(self):
        matrix = int_matrix([[1, 1], [1, -1]])
        solution = solve_integer_system(matrix, [4, 2])
        self.assertEqual(solution, [3, 1])
        self.assertIsNone(solve_integer_system(matrix, [1, 0]))
        with self.assertRaises(ValueError):
            solve_integer_system(matrix, [1, 2, 3])

    def test_format_matrix(self):
        self.assertIn("4", format_matrix(int_matrix([[1, 4]])))


class FgAbelianGroupTestCase(unittest.TestCase):
    def test___new__(self):
        group = FgAbelianGroup(2, [2, 4])
        self.assertEqual(group.rank, 2)
        self.assertEqual(group.torsion, (2, 4))
        with self.assertRaises(ValueError):
            FgAbelianGroup(-1)
        with self.assertRaises(ValueError):
            FgAbelianGroup(0, [1])
        with self.assertRaises(ValueError):
            FgAbelianGroup(0, [2, 3])

    def test_from_orders(self):
        self.assertEqual(FgAbelianGroup.from_orders([2, 3]), FgAbelianGroup(0, [6]))
        self.assertEqual(FgAbelianGroup.from_orders([0, 1, 4]), FgAbelianGroup(1, [4]))
        self.assertEqual(FgAbelianGroup.from_orders([2, 2]), FgAbelianGroup(0, [2, 2]))
        self.assertEqual(FgAbelianGroup.from_orders([]), FgAbelianGroup.trivial())

    def test_direct_sum(self):
        self.assertEqual(
            FgAbelianGroup(1, [2]).direct_sum(FgAbelianGroup(0, [3])),
            FgAbelianGroup(1, [6]),
        )

    def test___str__(self):
        self.assertEqual(str(FgAbelianGroup()), "0")
        self.assertEqual(str(FgAbelianGroup.free(1)), "Z")
        self.assertEqual(str(FgAbelianGroup(2, [2])), "Z^2 + Z/2")

    def test___bool__(self):
        self.assertFalse(FgAbelianGroup())
        self.assertTrue(FgAbelianGroup(0, [2]))
        self.assertTrue(FgAbelianGroup.free(3))

    def test_json(self):
        group = FgAbelianGroup(1, [2, 4])
        self.assertEqual(group.to_json(), [1, [2, 4]])
        self.assertEqual(FgAbelianGroup.from_json([1, [2, 4]]), group)

    def test_group_iso_equal(self):
        self.assertTrue(
            group_iso_equal(FgAbelianGroup(0, [6]), FgAbelianGroup.from_orders([2, 3]))
        )
        self.assertFalse(
            group_iso_equal(FgAbelianGroup(0, [2, 2]), FgAbelianGroup(0, [4]))
        )
        self.assertTrue(FgAbelianGroup.free(2).is_free)
        self.assertFalse(FgAbelianGroup(0, [2]).is_free)


class IntegerChainComplexTestCase(unittest.TestCase):
    def test___init__(self):
        complex_ = circle()
        self.assertEqual(complex_.degrees, [0, 1])
        self.assertEqual((complex_.lo, complex_.hi), (0, 1))
        self.assertEqual(complex_.rank(1), 3)
        self.assertEqual(complex_.rank(5), 0)
        self.assertEqual(complex_.step, -1)
        self.assertEqual(complex_.basis(1), ("ab", "ac", "bc"))

    def test_errors(self):
        with self.assertRaises(ValueError):
            IntegerChainComplex({0: ["a", "a"]})
        with self.assertRaises(ValueError):
            IntegerChainComplex({0: ["a"], 1: ["b"]}, {1: int_matrix([[1, 1]])})
        with self.assertRaises(NotAComplex):
            IntegerChainComplex(
                {0: ["a"], 1: ["b"], 2: ["c"]},
                {1: int_matrix([[1]]), 2: int_matrix([[1]])},
            )

    def test_homology(self):
        complex_ = circle()
        self.assertEqual(homology(complex_, 0), FgAbelianGroup.free(1))
        self.assertEqual(homology(complex_, 1), FgAbelianGroup.free(1))
        self.assertEqual(homology(complex_, 2), FgAbelianGroup.trivial())
        self.assertEqual(complex_.euler_characteristic(), 0)

    def test_cohomology(self):
        complex_ = circle(cochain=True)
        self.assertEqual(homology(complex_, 0), FgAbelianGroup.free(1))
        self.assertEqual(homology(complex_, 1), FgAbelianGroup.free(1))

    def test_torsion(self):
        complex_ = IntegerChainComplex(
            {0: ["a", "b"], 1: ["c", "d"]}, {1: int_matrix([[2, 0], [0, 0]])}
        )
        self.assertEqual(homology(complex_, 0), FgAbelianGroup(1, [2]))
        self.assertEqual(homology(complex_, 1), FgAbelianGroup.free(1))

    def test_homology_basis(self):
        complex_ = IntegerChainComplex({0: ["a"], 1: ["b"]}, {1: int_matrix([[2]])})
        basis = homology_basis(complex_, 0)
        self.assertEqual(basis.group, FgAbelianGroup(0, [2]))
        self.assertEqual(basis.orders, (2,))
        self.assertEqual(len(basis), 1)
        self.assertEqual(basis.coordinates(int_matrix([[3]])), [1])
        self.assertEqual(basis.coordinates(int_matrix([[4]])), [0])

    def test_coordinates_not_a_cycle(self):
        basis = homology_basis(circle(), 1)
        with self.assertRaises(NotACycleImage):
            basis.coordinates(int_matrix([[1], [0], [0]]))

    def test_reindexed(self):
        reindexed = circle().reindexed()
        self.assertTrue(reindexed.cochain)
        self.assertEqual(reindexed.degrees, [-1, 0])
        self.assertEqual(homology(reindexed, -1), FgAbelianGroup.free(1))

    def test_restricted(self):
        complex_ = circle()
        restricted = complex_.restricted({0: [0, 1], 1: [0]})
        self.assertEqual(restricted.basis(0), ("a", "b"))
        self.assertEqual(homology(restricted, 0), FgAbelianGroup.free(1))
        self.assertEqual(homology(restricted, 1), FgAbelianGroup.trivial())
        with self.assertRaises(NotAComplex):
            complex_.restricted({0: [0], 1: [0]})

    def test___eq__(self):
        self.assertEqual(circle(), circle())
        self.assertNotEqual(circle(), circle(cochain=True))


class ChainMapTestCase(unittest.TestCase):
    def test_identity(self):
        complex_ = circle()
        induced = induced_map(ChainMap.identity(complex_), 1)
        self.assertEqual(induced.tolist(), [[1]])

    def test_then(self):
        complex_ = circle()
        double = ChainMap(
            complex_,
            complex_,
            {
                0: int_matrix([[2, 0, 0], [0, 2, 0], [0, 0, 2]]),
                1: int_matrix([[2, 0, 0], [0, 2, 0], [0, 0, 2]]),
            },
        )
        self.assertEqual(induced_map(double.then(double), 1).tolist(), [[4]])
        self.assertEqual(induced_map(double, 0).tolist(), [[2]])

    def test_torsion_reduction(self):
        complex_ = IntegerChainComplex({0: ["a"], 1: ["b"]}, {1: int_matrix([[2]])})
        triple = ChainMap(
            complex_, complex_, {0: int_matrix([[3]]), 1: int_matrix([[3]])}
        )
        self.assertEqual(induced_map(triple, 0).tolist(), [[1]])

    def test_errors(self):
        complex_ = circle()
        with self.assertRaises(ValueError):
            ChainMap(complex_, circle(cochain=True), {})
        with self.assertRaises(ValueError):
            ChainMap(complex_, complex_, {0: int_matrix([[1]])})
        with self.assertRaises(NotAChainMap):
            ChainMap(
                complex_,
                complex_,
                {1: int_matrix([[1, 0, 0], [0, 0, 0], [0, 0, 0]])},
            )
