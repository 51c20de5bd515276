import unittest

from dualcat.categories import opposite
from dualcat.errors import (
    InputError,
    NotFunctorial,
    NotPointwiseFree,
    UnknownMorphism,
    UnknownObject,
    VarianceMismatch,
)
from dualcat.integral import FgAbelianGroup, homology
from dualcat.modules import (
    CModule,
    GradedGroups,
    ProjectiveComplex,
    Summand,
    bar_resolution,
    bar_resolution_of_module,
    constant_module,
    derived_dual,
    dualize_projective_complex,
    ext,
    hom_complex,
    standard_projective,
    tensor_complex,
    tor,
    unnormalized_hom_complex,
)
from dualcat.values import Variance
from dualcat.zoo import chain_poset, paper_example

Z = FgAbelianGroup.free(1)


def doubling():
    # Z --2--> Z over 0 < 1
    return CModule(chain_poset(1), "left", {"0": 1, "1": 1}, {"0<1": [[2]]})


class CModuleTestCase(unittest.TestCase):
    def test___init__(self):
        chain = chain_poset(1)
        module = CModule(chain, "left", {"0": 1, "1": 2}, {"0<1": [[1], [0]]})
        self.assertEqual(module.ranks, {"0": 1, "1": 2})
        self.assertEqual(module.rank("1"), 2)
        self.assertEqual(module.labels("1"), ("0", "1"))
        self.assertEqual(module.action("id_1").tolist(), [[1, 0], [0, 1]])
        self.assertEqual(module.variance, Variance.LEFT)
        self.assertEqual(module.values(), {"0": Z, "1": FgAbelianGroup.free(2)})

    def test_missing_matrix(self):
        chain = chain_poset(1)
        with self.assertRaises(NotFunctorial):
            CModule(chain, "left", {"0": 1, "1": 1})
        module = CModule(chain, "left", {"1": 1})
        self.assertEqual(module.action("0<1").shape, (1, 0))

    def test_errors(self):
        chain = chain_poset(1)
        with self.assertRaises(NotFunctorial):
            CModule(chain, "left", {"0": 1, "1": 2}, {"0<1": [[1, 0]]})
        with self.assertRaises(NotFunctorial):
            CModule(chain, "left", {"0": 1, "1": 1}, {"0<1": [[1]], "id_0": [[2]]})
        with self.assertRaises(InputError):
            CModule(chain, "left", {"0": -1})
        with self.assertRaises(InputError):
            CModule(chain, "left", {"0": 1}, labels={"0": ["a", "b"]})
        with self.assertRaises(UnknownObject):
            CModule(chain, "left", {"5": 1})
        with self.assertRaises(UnknownMorphism):
            CModule(chain, "left", {}, {"f": []})
        with self.assertRaises(ValueError):
            CModule(chain, "middle", {})

    def test_not_functorial(self):
        chain = chain_poset(2)
        with self.assertRaises(NotFunctorial):
            CModule(
                chain,
                "left",
                {"0": 1, "1": 1, "2": 1},
                {"0<1": [[1]], "1<2": [[1]], "0<2": [[2]]},
            )

    def test_right_module(self):
        chain = chain_poset(1)
        module = CModule(chain, "right", {"0": 2, "1": 1}, {"0<1": [[1], [1]]})
        self.assertEqual(module.action("0<1").shape, (2, 1))
        with self.assertRaises(NotFunctorial):
            CModule(chain, "right", {"0": 2, "1": 1}, {"0<1": [[1, 1]]})

    def test_as_opposite(self):
        chain = chain_poset(1)
        module = CModule(chain, "right", {"0": 2, "1": 1}, {"0<1": [[1], [1]]})
        flipped = module.as_opposite()
        self.assertEqual(flipped.variance, Variance.LEFT)
        self.assertIs(flipped.category, opposite(chain))
        self.assertEqual(flipped.as_opposite(), module)

    def test_direct_sum(self):
        category = paper_example("parallel_arrows")
        total = standard_projective(category, "x").direct_sum(constant_module(category))
        self.assertEqual(total.ranks, {"x": 2, "y": 3})
        self.assertEqual(total.action("alpha").tolist(), [[1, 0], [0, 0], [0, 1]])
        with self.assertRaises(VarianceMismatch):
            total.direct_sum(constant_module(category, "right"))

    def test_json(self):
        module = doubling()
        data = module.to_json()
        self.assertEqual(
            data,
            {"variance": "left", "ranks": {"0": 1, "1": 1}, "maps": {"0<1": [[2]]}},
        )
        self.assertEqual(CModule.from_json(data, chain_poset(1)), module)
        with self.assertRaises(InputError):
            CModule.from_json({"ranks": {}}, chain_poset(1))


class ProjectiveTestCase(unittest.TestCase):
    def test_standard_projective(self):
        category = paper_example("parallel_arrows")
        left = standard_projective(category, "x")
        self.assertEqual(left.ranks, {"x": 1, "y": 2})
        self.assertEqual(left.labels("y"), ("alpha", "beta"))
        self.assertEqual(left.action("beta").tolist(), [[0], [1]])
        right = standard_projective(category, "y", Variance.RIGHT)
        self.assertEqual(right.ranks, {"x": 2, "y": 1})
        self.assertEqual(right.action("alpha").tolist(), [[1], [0]])
        with self.assertRaises(UnknownObject):
            standard_projective(category, "z")

    def test_constant_module(self):
        chain = chain_poset(2)
        constant = constant_module(chain)
        self.assertEqual(constant.action("0<2").tolist(), [[1]])
        self.assertEqual(constant_module(chain, "right").variance, Variance.RIGHT)

    def test_projective_complex(self):
        chain = chain_poset(1)
        complex_ = ProjectiveComplex(
            chain,
            {0: [Summand("0", "a")], 1: [Summand("1", "b")]},
            {1: {(0, 0): {"0<1": 1}}},
        )
        self.assertEqual(complex_.sizes(), {0: 1, 1: 1})
        self.assertEqual((complex_.lo, complex_.hi, complex_.step), (0, 1, -1))
        evaluated = complex_.evaluate("1")
        self.assertEqual(evaluated.basis(0), (("a", "0<1"),))
        self.assertEqual(evaluated.differential(1).tolist(), [[1]])
        self.assertEqual(complex_.evaluate("0").rank(1), 0)
        with self.assertRaises(ValueError):
            ProjectiveComplex(
                chain,
                {0: [Summand("1", "a")], 1: [Summand("0", "b")]},
                {1: {(0, 0): {"0<1": 1}}},
            )
        with self.assertRaises(ValueError):
            ProjectiveComplex(
                chain, {0: [Summand("0", "a")]}, {1: {(0, 3): {"id_0": 1}}}
            )
        with self.assertRaises(ValueError):
            complex_.augmented("0")
        with self.assertRaises(UnknownObject):
            complex_.evaluate("9")


class BarResolutionTestCase(unittest.TestCase):
    def test_sizes(self):
        self.assertEqual(bar_resolution(chain_poset(1)).sizes(), {0: 2, 1: 1})
        self.assertEqual(bar_resolution(chain_poset(2)).sizes(), {0: 3, 1: 3, 2: 1})
        resolution = bar_resolution(paper_example("parallel_arrows"))
        self.assertEqual(resolution.sizes(), {0: 2, 1: 2})

    def test_exactness(self):
        categories = (
            chain_poset(2),
            paper_example("parallel_arrows"),
            paper_example("five_object"),
        )
        for category in categories:
            resolution = bar_resolution(category)
            for obj in category.objects:
                augmented = resolution.augmented(obj)
                for degree in augmented.degrees:
                    self.assertEqual(
                        homology(augmented, degree), FgAbelianGroup.trivial()
                    )

    def test_module_exactness(self):
        resolution = bar_resolution_of_module(chain_poset(1), doubling())
        for obj in ("0", "1"):
            augmented = resolution.augmented(obj)
            for degree in augmented.degrees:
                self.assertEqual(homology(augmented, degree), FgAbelianGroup.trivial())

    def test_syzygy_is_projective(self):
        chain = bar_resolution(chain_poset(2))
        self.assertEqual(chain.hi, 2)
        for degree in range(4):
            self.assertTrue(chain.syzygy_is_projective(degree))
        for name in ("parallel_arrows", "five_object", "square_poset"):
            resolution = bar_resolution(paper_example(name))
            self.assertFalse(resolution.syzygy_is_projective(0))
            self.assertTrue(resolution.syzygy_is_projective(1))
        resolution = bar_resolution_of_module(chain_poset(1), doubling())
        self.assertFalse(resolution.syzygy_is_projective(0))
        self.assertTrue(resolution.syzygy_is_projective(1))
        with self.assertRaises(ValueError):
            dualize_projective_complex(chain).syzygy_is_projective(0)

    def test_variance(self):
        chain = chain_poset(1)
        with self.assertRaises(VarianceMismatch):
            bar_resolution_of_module(chain, constant_module(chain, "right"))
        with self.assertRaises(VarianceMismatch):
            hom_complex(bar_resolution(chain), constant_module(chain, "right"))
        with self.assertRaises(VarianceMismatch):
            tensor_complex(constant_module(chain), bar_resolution(chain))
        with self.assertRaises(VarianceMismatch):
            ext(chain, None, constant_module(chain_poset(2)))


class ExtTorTestCase(unittest.TestCase):
    def test_parallel_arrows(self):
        category = paper_example("parallel_arrows")
        constant = constant_module(category)
        self.assertEqual(ext(category, None, constant), GradedGroups({0: Z, 1: Z}))
        for obj in ("x", "y"):
            projective = standard_projective(category, obj)
            self.assertEqual(ext(category, None, projective), GradedGroups({1: Z}))
        self.assertEqual(
            tor(category, constant_module(category, "right"), None),
            GradedGroups({0: Z, 1: Z}),
        )

    def test_five_object(self):
        category = paper_example("five_object")
        constant = constant_module(category)
        self.assertEqual(ext(category, None, constant), GradedGroups({0: Z, 1: Z}))
        self.assertEqual(
            tor(category, constant_module(category, "right"), None),
            GradedGroups({0: Z, 1: Z}),
        )

    def test_chain(self):
        chain = chain_poset(3)
        self.assertEqual(ext(chain, None, constant_module(chain)), GradedGroups({0: Z}))
        self.assertEqual(
            ext(chain, None, standard_projective(chain, "3")), GradedGroups()
        )
        self.assertEqual(
            ext(chain, None, standard_projective(chain, "0")), GradedGroups({0: Z})
        )

    def test_max_degree(self):
        category = paper_example("parallel_arrows")
        groups = ext(category, None, constant_module(category), max_degree=0)
        self.assertEqual(groups, GradedGroups({0: Z}))

    def test_module_argument(self):
        chain = chain_poset(1)
        module = doubling()
        self.assertEqual(
            ext(chain, module, standard_projective(chain, "0")), GradedGroups({0: Z})
        )
        self.assertEqual(
            ext(chain, module, standard_projective(chain, "1")),
            GradedGroups({1: FgAbelianGroup(0, [2])}),
        )
        constant = constant_module(chain)
        self.assertEqual(ext(chain, constant, constant), GradedGroups({0: Z}))

    def test_unnormalized(self):
        category = paper_example("parallel_arrows")
        for module in (constant_module(category), standard_projective(category, "x")):
            normalized = ext(category, None, module)
            complex_ = unnormalized_hom_complex(category, module, 2)
            for degree in range(3):
                self.assertEqual(homology(complex_, degree), normalized[degree])


class DualTestCase(unittest.TestCase):
    def test_dualize_projective_complex(self):
        chain = chain_poset(1)
        dual = dualize_projective_complex(bar_resolution(chain))
        self.assertTrue(dual.cochain)
        self.assertEqual(dual.sizes(), {0: 2, 1: 1})
        self.assertEqual(dual.category, opposite(chain))
        twice = dualize_projective_complex(dual)
        self.assertEqual(twice.category, chain)
        self.assertEqual(twice.sizes(), {-1: 1, 0: 2})

    def test_derived_dual(self):
        category = paper_example("parallel_arrows")
        dual = derived_dual(category)
        self.assertEqual(dual.support(), [1])
        self.assertEqual(dual.column("x"), GradedGroups({1: Z}))
        self.assertEqual(dual.torsion_degrees(), set())
        self.assertEqual(dual.module_at(1).ranks, {"x": 1, "y": 1})
        self.assertEqual(dual.module_at(1).variance, Variance.RIGHT)
        self.assertEqual(dual.module_at(0).ranks, {"x": 0, "y": 0})
        alpha = dual.structure_map("alpha", 1).tolist()
        self.assertIn(alpha, ([[1]], [[-1]]))
        self.assertEqual(dual.structure_map("beta", 1).tolist(), alpha)

    def test_chain(self):
        dual = derived_dual(chain_poset(1))
        self.assertEqual(dual.values, {"0": GradedGroups({0: Z}), "1": GradedGroups()})
        self.assertEqual(dual.module_at(0).ranks, {"0": 1, "1": 0})

    def test_torsion(self):
        dual = derived_dual(chain_poset(1), doubling())
        self.assertEqual(dual.column("1"), GradedGroups({1: FgAbelianGroup(0, [2])}))
        self.assertEqual(dual.torsion_degrees(), {1})
        self.assertEqual(dual.support(), [0, 1])
        with self.assertRaises(NotPointwiseFree):
            dual.module_at(1)


class GradedGroupsTestCase(unittest.TestCase):
    def test___init__(self):
        groups = GradedGroups({0: Z, 2: FgAbelianGroup(), 3: FgAbelianGroup(0, [2])})
        self.assertEqual(groups.support(), [0, 3])
        self.assertEqual(len(groups), 2)
        self.assertIn(3, groups)
        self.assertNotIn(2, groups)
        self.assertEqual(groups[2], FgAbelianGroup.trivial())
        self.assertFalse(groups.is_free)
        self.assertIsNone(groups.concentrated())

    def test_operations(self):
        groups = GradedGroups({0: Z, 2: FgAbelianGroup.free(2)})
        self.assertEqual(groups.shifted(1).support(), [1, 3])
        self.assertEqual(groups.ranks(), {0: 1, 2: 2})
        self.assertEqual(groups.euler_characteristic(), 3)
        self.assertEqual(GradedGroups({4: Z}).concentrated(), 4)
        self.assertEqual(str(groups), "0: Z, 2: Z^2")
        self.assertEqual(str(GradedGroups()), "0")

    def test_json(self):
        groups = GradedGroups({-1: Z, 1: FgAbelianGroup(1, [2])})
        self.assertEqual(groups.to_json(), {"-1": [1, []], "1": [1, [2]]})
        self.assertEqual(GradedGroups.from_json(groups.to_json()), groups)
        self.assertEqual(hash(GradedGroups.from_json(groups.to_json())), hash(groups))
