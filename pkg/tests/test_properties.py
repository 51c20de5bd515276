import unittest

from dualcat.certificates import (
    PASS,
    certify_dualizing_module,
    certify_generic,
    certify_simplicial,
)
from dualcat.complexes import (
    category_local_cohomology,
    homology_groups,
    join,
    link,
    local_cohomology,
    order_complex,
    reduced_cohomology,
    relative_cohomology,
    simplex_boundary,
)
from dualcat.integral import FgAbelianGroup, homology
from dualcat.modules import (
    bar_resolution,
    constant_module,
    ext,
    unnormalized_hom_complex,
)
from dualcat.zoo import (
    building_gl,
    chain_poset,
    coxeter_complex_A,
    edge_and_vertex,
    paper_example,
    single_edge,
    sphere_boundary,
    surface,
)


def complexes():
    return [
        single_edge(),
        edge_and_vertex(),
        sphere_boundary(2),
        sphere_boundary(3),
        coxeter_complex_A(2),
        building_gl(2, 2),
        building_gl(3, 2),
        surface("torus7"),
        surface("rp2_6"),
        surface("klein8"),
    ]


def categories():
    names = ("parallel_arrows", "five_object", "square_poset")
    return [paper_example(name) for name in names] + [chain_poset(2)]


def corpus():
    return categories() + [complex_.face_poset() for complex_ in complexes()]


class BarExactnessTestCase(unittest.TestCase):
    def test_pointwise_exact(self):
        for category in corpus():
            resolution = bar_resolution(category)
            for obj in category.objects:
                augmented = resolution.augmented(obj)
                for degree in augmented.degrees:
                    self.assertEqual(
                        homology(augmented, degree), FgAbelianGroup.trivial(), obj
                    )


class LocalMethodsTestCase(unittest.TestCase):
    def test_methods_agree(self):
        for complex_ in complexes():
            for face in complex_.faces:
                results = {
                    local_cohomology(complex_, face, method)
                    for method in ("link", "pair", "ext")
                }
                self.assertEqual(len(results), 1, (complex_, face))

    def test_poset_methods_agree(self):
        for category in (paper_example("square_poset"), chain_poset(2)):
            for obj in category.objects:
                self.assertEqual(
                    category_local_cohomology(category, obj, "ext"),
                    category_local_cohomology(category, obj, "pair"),
                )


class CriteriaTestCase(unittest.TestCase):
    def test_simplicial_matches_generic(self):
        for complex_ in complexes():
            simplicial = certify_simplicial(complex_, cross_check=True)
            generic = certify_generic(complex_.face_poset())
            self.assertEqual(simplicial.checks["criterion_equivalence"], PASS)
            self.assertEqual(simplicial.verdict, generic.verdict)
            self.assertEqual(simplicial.degree, generic.degree)
            self.assertEqual(simplicial.values(), generic.values())

    def test_euler_characteristic(self):
        for complex_ in complexes():
            self.assertEqual(
                homology_groups(complex_).euler_characteristic(),
                complex_.euler_characteristic(),
            )


class NormalizationTestCase(unittest.TestCase):
    def test_unnormalized_matches_normalized(self):
        for category in categories():
            module = constant_module(category)
            expected = ext(category, None, module, max_degree=2)
            complex_ = unnormalized_hom_complex(category, module, 2)
            for degree in range(3):
                self.assertEqual(homology(complex_, degree), expected[degree])


class LinkTestCase(unittest.TestCase):
    def test_link_of_link(self):
        for complex_ in complexes():
            for face in complex_.faces:
                around = link(complex_, face)
                for inner in around.faces:
                    union = tuple(sorted(face + inner))
                    self.assertEqual(
                        link(around, inner).facets, link(complex_, union).facets
                    )


class RelativeEulerTestCase(unittest.TestCase):
    def test_long_exact_sequence(self):
        square = paper_example("square_poset")
        whole = ext(square, None, constant_module(square)).euler_characteristic()
        for names in (["0"], ["0", "1"], ["0", "2"], ["0", "1", "2"]):
            part = square.full_subcategory(names)
            inner = ext(part, None, constant_module(part)).euler_characteristic()
            relative = relative_cohomology(square, part).euler_characteristic()
            self.assertEqual(whole, inner + relative)


class JoinShiftTestCase(unittest.TestCase):
    def test_boundary_join_link(self):
        for complex_ in complexes():
            for face in complex_.faces:
                around = link(complex_, face)
                joined = join(simplex_boundary(face), around)
                self.assertEqual(
                    reduced_cohomology(joined),
                    reduced_cohomology(around).shifted(len(face) - 1),
                    face,
                )


class SubdivisionTestCase(unittest.TestCase):
    def test_order_complex_of_faces(self):
        for complex_ in complexes():
            subdivision = order_complex(complex_.face_poset())
            self.assertEqual(
                reduced_cohomology(subdivision), reduced_cohomology(complex_)
            )


class DualizingRoundTripTestCase(unittest.TestCase):
    def test_certified_instances(self):
        certified = 0
        for category in corpus():
            certificate = certify_generic(category)
            if certificate.dualizing is None:
                continue
            certified += 1
            result = certify_dualizing_module(category, certificate)
            self.assertEqual(result.degree, certificate.degree)
            self.assertEqual(result.checks["opdual_roundtrip"], PASS)
        self.assertEqual(certified, len(corpus()) - 1)
