"""
Duality certificates.

A finite loop-free category *C* is a duality category when the groups
``Ext^i(Z, P_x)`` vanish outside a single degree *n* for every object *x*. The
right module ``x ↦ Ext^n(Z, P_x)`` is then the dualizing module *D* and
``Ext^i(Z, G) ≅ Tor_{n-i}(D, G)`` for every module *G*.

This module decides the criterion, either from the Ext columns
(:func:`certify_generic`) or from the links of a simplicial complex
(:func:`certify_simplicial`), and checks its consequences.
"""

# pylint: disable=too-many-arguments,too-many-locals

import dataclasses
import logging
from collections import namedtuple
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx  # type: ignore

from dualcat.categories import FiniteCategory, opposite
from dualcat.complexes import SimplicialComplex, link, reduced_cohomology
from dualcat.errors import (
    CertificationError,
    DualityMismatch,
    DualizingNotPointwiseFree,
    MapNotUnit,
    NotManifoldLike,
    NotOrientable,
    RankNotOne,
)
from dualcat.integral import FgAbelianGroup
from dualcat.modules import (
    CModule,
    DerivedDual,
    GradedGroups,
    constant_module,
    derived_dual,
    ext,
    standard_projective,
    tor,
)
from dualcat.values import Variance, Verdict

LOGGER = logging.getLogger(__name__)

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


def _status(flag: bool) -> str:
    return PASS if flag else FAIL


@dataclass(frozen=True)
class DualityCertificate:
    """
    Outcome of a duality certification.

    Attributes
    ----------
        verdict: :class:`Verdict <dualcat.values.Verdict>`
            ``certified``, ``refuted`` or ``degenerate``.
        degree: int
            The duality degree *n* when certified.
        ext_table: dict
            ``Ext^*(F, P_x)`` for every object *x*.
        dualizing: :class:`CModule <dualcat.modules.CModule>`
            The right dualizing module, when certified without torsion.
        witnesses: list
            JSON-friendly descriptions of the refutation.
        checks: dict
            Check name to ``pass``, ``fail`` or ``skipped``.
        pointwise_free: bool
            Whether the dualizing values are free.
        kind: str
            ``generic`` or ``simplicial``.
        naturality: str
            How naturality of the duality isomorphism is established.
    """

    verdict: Verdict
    degree: Optional[int]
    ext_table: Dict[str, GradedGroups]
    dualizing: Optional[CModule] = None
    witnesses: List[Dict[str, Any]] = field(default_factory=list)
    checks: Dict[str, str] = field(default_factory=dict)
    pointwise_free: bool = False
    kind: str = "generic"
    naturality: str = "structural"

    @property
    def certified(self) -> bool:
        """Return :data:`True <python:True>` if the verdict is ``certified``."""
        return self.verdict is Verdict.CERTIFIED

    def values(self) -> Dict[str, FgAbelianGroup]:
        """Return the dualizing values ``Ext^n(F, P_x)``."""
        if self.degree is None:
            return {}
        return {obj: groups[self.degree] for obj, groups in self.ext_table.items()}

    def to_json(self) -> Dict[str, Any]:
        """Return the certificate JSON form."""
        return {
            "verdict": self.verdict.value,
            "degree": self.degree,
            "ext_table": {
                obj: groups.to_json() for obj, groups in self.ext_table.items()
            },
            "dualizing": None if self.dualizing is None else self.dualizing.to_json(),
            "witnesses": list(self.witnesses),
            "checks": dict(self.checks),
            "pointwise_free": self.pointwise_free,
            "kind": self.kind,
            "naturality": self.naturality,
        }

    @classmethod
    def from_json(
        cls, data: Mapping[str, Any], category: FiniteCategory
    ) -> "DualityCertificate":
        """Re-parse a certificate over its category."""
        dualizing = data.get("dualizing")
        return cls(
            verdict=Verdict(data["verdict"]),
            degree=data.get("degree"),
            ext_table={
                str(obj): GradedGroups.from_json(groups)
                for obj, groups in data.get("ext_table", {}).items()
            },
            dualizing=(
                None if dualizing is None else CModule.from_json(dualizing, category)
            ),
            witnesses=list(data.get("witnesses", [])),
            checks=dict(data.get("checks", {})),
            pointwise_free=bool(data.get("pointwise_free", False)),
            kind=data.get("kind", "generic"),
            naturality=data.get("naturality", "structural"),
        )


def _generic_witnesses(columns: Mapping[str, GradedGroups]) -> List[Dict[str, Any]]:
    for obj, groups in columns.items():
        if len(groups) > 1:
            return [{"object": obj, "degrees": groups.support()[:2]}]
    first = None
    for obj, groups in columns.items():
        if not groups:
            continue
        if first is None:
            first = (obj, groups.support()[0])
        elif groups.support()[0] != first[1]:
            return [
                {
                    "objects": [first[0], obj],
                    "degrees": [first[1], groups.support()[0]],
                }
            ]
    return []


def _from_derived(dual: DerivedDual, kind: str = "generic") -> DualityCertificate:
    columns = dual.values
    support = dual.support()
    checks: Dict[str, str] = {}
    if not support:
        verdict, degree = Verdict.DEGENERATE, None
    elif len(support) == 1:
        verdict, degree = Verdict.CERTIFIED, support[0]
    else:
        verdict, degree = Verdict.REFUTED, None
    witnesses = _generic_witnesses(columns) if verdict is Verdict.REFUTED else []
    dualizing = None
    pointwise_free = False
    if degree is None:
        checks["ext_concentrated"] = FAIL if verdict is Verdict.REFUTED else SKIPPED
        checks["projective_dimension"] = SKIPPED
        checks["pointwise_free"] = SKIPPED
    else:
        checks["ext_concentrated"] = PASS
        checks["projective_dimension"] = _status(
            dual.resolution.syzygy_is_projective(degree)
        )
        pointwise_free = degree not in dual.torsion_degrees()
        checks["pointwise_free"] = _status(pointwise_free)
        if pointwise_free:
            dualizing = dual.module_at(degree)
    LOGGER.info("%s certification: %s, degree %s", kind, verdict.value, degree)
    return DualityCertificate(
        verdict=verdict,
        degree=degree,
        ext_table=columns,
        dualizing=dualizing,
        witnesses=witnesses,
        checks=checks,
        pointwise_free=pointwise_free,
        kind=kind,
    )


def certify_generic(
    category: FiniteCategory, module: Optional[CModule] = None
) -> DualityCertificate:
    """
    Decide whether a left module is a duality functor.

    The Ext columns ``Ext^*(F, P_x)`` are computed for every object; the module
    is certified when a single degree carries every non-trivial group. Objects
    with a trivial column impose nothing.

    Arguments
    ---------
        category: :class:`FiniteCategory <dualcat.categories.FiniteCategory>`
            A loop-free category.
        module: :class:`CModule <dualcat.modules.CModule>`
            A left module, the constant module by default.

    Raises
    ------
        VarianceMismatch
            If *module* is not a left module over *category*.

    Examples
    --------

        >>> from dualcat.certificates import certify_generic
        >>> from dualcat.zoo import paper_example
        >>> certificate = certify_generic(paper_example("five_object"))
        >>> certificate.verdict.value, certificate.degree
        ('certified', 1)
        >>> [str(value) for value in certificate.values().values()]
        ['Z^2', 'Z^2', 'Z^2', 'Z', 'Z']
    """
    return _from_derived(derived_dual(category, module))


def _same_values(first: DualityCertificate, second: DualityCertificate) -> bool:
    return (
        first.verdict == second.verdict
        and first.degree == second.degree
        and first.values() == second.values()
    )


def certify_simplicial(
    complex_: SimplicialComplex, cross_check: bool = False
) -> DualityCertificate:
    """
    Decide whether the face poset of a complex is a duality category from links.

    A face *x* whose link has reduced cohomology concentrated in degree *k*
    forces ``n = k + dim x + 1``; faces with acyclic links force nothing. The
    dualizing values come from the links, the structure maps from
    :func:`derived_dual <dualcat.modules.derived_dual>`, and both value
    computations are compared.

    Arguments
    ---------
        complex_: :class:`SimplicialComplex <dualcat.complexes.SimplicialComplex>`
            A finite complex.
        cross_check: bool
            Whether :func:`certify_generic` is run and compared.

    Raises
    ------
        DualityMismatch
            If the link values differ from the Ext columns.

    Examples
    --------

        >>> from dualcat.certificates import certify_simplicial
        >>> from dualcat.zoo import edge_and_vertex
        >>> certificate = certify_simplicial(edge_and_vertex())
        >>> certificate.verdict.value, certificate.witnesses
        ('refuted', [{'objects': ['u', 'v+w'], 'degrees': [0, 1]}])
    """
    columns: Dict[str, GradedGroups] = {}
    forced: Optional[Tuple[str, int]] = None
    witnesses: List[Dict[str, Any]] = []
    for face in complex_.faces:
        name = "+".join(face)
        column = reduced_cohomology(link(complex_, face)).shifted(len(face))
        columns[name] = column
        if witnesses or not column:
            continue
        if len(column) > 1:
            witnesses.append({"object": name, "degrees": column.support()[:2]})
        elif forced is None:
            forced = (name, column.support()[0])
        elif forced[1] != column.support()[0]:
            witnesses.append(
                {
                    "objects": [forced[0], name],
                    "degrees": [forced[1], column.support()[0]],
                }
            )

    poset = complex_.face_poset()
    dual: Optional[DerivedDual] = None
    if witnesses:
        verdict, degree = Verdict.REFUTED, None
    elif forced is None:
        verdict, degree = Verdict.DEGENERATE, None
    else:
        verdict, degree = Verdict.CERTIFIED, forced[1]

    checks: Dict[str, str] = {}
    dualizing = None
    pointwise_free = False
    if degree is None:
        checks["ext_concentrated"] = FAIL if witnesses else SKIPPED
        checks["projective_dimension"] = SKIPPED
        checks["pointwise_free"] = SKIPPED
        checks["simplicial_values_match_generic"] = SKIPPED
    else:
        dual = derived_dual(poset)
        for obj, column in columns.items():
            if dual.column(obj) != column:
                raise DualityMismatch(
                    f"link values {column} differ from Ext values {dual.column(obj)} "
                    f"at {obj!r}",
                    obj,
                )
        checks["ext_concentrated"] = PASS
        checks["simplicial_values_match_generic"] = PASS
        checks["projective_dimension"] = _status(
            dual.resolution.syzygy_is_projective(degree)
        )
        pointwise_free = all(column[degree].is_free for column in columns.values())
        checks["pointwise_free"] = _status(pointwise_free)
        if pointwise_free:
            dualizing = dual.module_at(degree)

    certificate = DualityCertificate(
        verdict=verdict,
        degree=degree,
        ext_table=columns,
        dualizing=dualizing,
        witnesses=witnesses,
        checks=checks,
        pointwise_free=pointwise_free,
        kind="simplicial",
    )
    LOGGER.info("simplicial certification: %s, degree %s", verdict.value, degree)
    if cross_check:
        generic = _from_derived(dual if dual is not None else derived_dual(poset))
        certificate = dataclasses.replace(
            certificate,
            checks={
                **checks,
                "criterion_equivalence": _status(_same_values(certificate, generic)),
            },
        )
    return certificate


def _require_dualizing(certificate: DualityCertificate) -> CModule:
    if not certificate.certified:
        raise CertificationError(
            f"the certificate is {certificate.verdict.value}, not certified"
        )
    if certificate.dualizing is None or not certificate.pointwise_free:
        raise DualizingNotPointwiseFree("the dualizing module has torsion")
    return certificate.dualizing


class Comparison(namedtuple("Comparison", ["module", "degree", "ext", "tor", "match"])):
    """
    One row of a duality comparison.

    It compares ``Ext^degree(Z, G)`` with ``Tor_{n-degree}(D, G)`` for the test
    module named ``module``.
    """

    __slots__ = ()


DualityReport = namedtuple("DualityReport", ["degree", "comparisons", "skipped"])


def default_test_modules(category: FiniteCategory) -> Dict[str, CModule]:
    """
    Return the deterministic test family.

    It holds the constant module ``Z``, every standard projective ``P_x`` and
    every sum ``P_x+Z``.
    """
    constant = constant_module(category)
    family = {"Z": constant}
    for obj in category.objects:
        projective = standard_projective(category, obj)
        family[f"P_{obj}"] = projective
        family[f"P_{obj}+Z"] = projective.direct_sum(constant)
    return family


def verify_duality_isomorphism(
    category: FiniteCategory,
    certificate: DualityCertificate,
    test_modules: Optional[Union[Mapping[str, CModule], Sequence[CModule]]] = None,
    strict: bool = True,
) -> "DualityReport":
    """
    Compare ``Ext^i(Z, G)`` with ``Tor_{n-i}(D, G)`` on test modules.

    Groups are compared up to isomorphism in every degree where one side is
    non-trivial.

    Arguments
    ---------
        category: :class:`FiniteCategory <dualcat.categories.FiniteCategory>`
            The certified category.
        certificate: :class:`DualityCertificate`
            A certificate for the constant module.
        test_modules: :class:`Mapping <python:typing.Mapping>`
            Named left modules, :func:`default_test_modules` by default.
        strict: bool
            Whether failures raise or are reported.

    Raises
    ------
        CertificationError
            If the certificate is not certified.
        DualizingNotPointwiseFree
            If the dualizing module is missing and *strict* holds.
        DualityMismatch
            If a comparison fails and *strict* holds.

    Examples
    --------

        >>> from dualcat.certificates import certify_generic, verify_duality_isomorphism
        >>> from dualcat.zoo import paper_example
        >>> category = paper_example("parallel_arrows")
        >>> report = verify_duality_isomorphism(category, certify_generic(category))
        >>> all(row.match for row in report.comparisons), report.skipped
        (True, False)
    """
    if not certificate.certified:
        raise CertificationError(
            f"the certificate is {certificate.verdict.value}, not certified"
        )
    degree = certificate.degree
    try:
        dualizing = _require_dualizing(certificate)
    except DualizingNotPointwiseFree:
        if strict:
            raise
        LOGGER.warning("duality comparison skipped: dualizing module has torsion")
        return DualityReport(degree, [], True)
    if test_modules is None:
        test_modules = default_test_modules(category)
    elif not isinstance(test_modules, Mapping):
        test_modules = {
            f"G{index}": module for index, module in enumerate(test_modules)
        }

    comparisons = []
    for name, module in test_modules.items():
        left = ext(category, None, module)
        right = tor(category, dualizing, module)
        degrees = sorted(
            set(left.support()) | {degree - level for level in right.support()}
        )
        for level in degrees:
            row = Comparison(name, level, left[level], right[degree - level], None)
            row = row._replace(match=row.ext == row.tor)
            comparisons.append(row)
            if not row.match:
                LOGGER.error("duality mismatch for %s in degree %d", name, level)
                if strict:
                    raise DualityMismatch(
                        f"Ext^{level}(Z, {name}) = {row.ext} but "
                        f"Tor_{degree - level}(D, {name}) = {row.tor}",
                        {"module": name, "degree": level},
                    )
    return DualityReport(degree, comparisons, False)


Constancy = namedtuple("Constancy", ["constant", "signs", "cycle"])


def is_constant_module(module: CModule) -> "Constancy":
    """
    Decide whether a rank one module with unit maps is isomorphic to ``Z``.

    Generators are rescaled by signs along breadth-first spanning trees of the
    morphism graph; any remaining structure map equal to ``-1`` closes an
    inconsistent cycle.

    Returns
    -------
        :class:`Constancy`
            ``constant``, the signs per object when constant and the morphisms
            of an inconsistent cycle otherwise.

    Raises
    ------
        RankNotOne
            If a value does not have rank one.
        MapNotUnit
            If a structure map is not ``1`` or ``-1``.

    Examples
    --------

        >>> from dualcat.certificates import is_constant_module
        >>> from dualcat.modules import CModule
        >>> from dualcat.zoo import paper_example
        >>> twisted = CModule(
        ...     paper_example("parallel_arrows"), "left", {"x": 1, "y": 1},
        ...     {"alpha": [[1]], "beta": [[-1]]},
        ... )
        >>> is_constant_module(twisted).cycle
        ['alpha', 'beta']
    """
    category = module.category
    for obj in category.objects:
        if module.rank(obj) != 1:
            raise RankNotOne(f"rank {module.rank(obj)} at {obj!r}", obj)
    graph = nx.Graph()
    graph.add_nodes_from(category.objects)
    units: Dict[str, int] = {}
    for morphism in category.morphisms:
        value = int(module.action(morphism.id)[0, 0])
        if value not in (1, -1):
            raise MapNotUnit(f"{morphism.id!r} acts by {value}", morphism.id)
        units[morphism.id] = value
        ends = (morphism.src, morphism.dst)
        if graph.has_edge(*ends):
            graph.edges[ends]["morphisms"].append(morphism.id)
        else:
            graph.add_edge(*ends, morphisms=[morphism.id])

    signs: Dict[str, int] = {}
    tree = nx.Graph()
    for root in sorted(graph.nodes):
        if root in signs:
            continue
        signs[root] = 1
        tree.add_node(root)
        for parent, child in nx.bfs_edges(graph, root, sort_neighbors=sorted):
            name = sorted(graph.edges[parent, child]["morphisms"])[0]
            signs[child] = signs[parent] * units[name]
            tree.add_edge(parent, child, morphism=name)

    for morphism in category.morphisms:
        if signs[morphism.src] * signs[morphism.dst] == units[morphism.id]:
            continue
        path = nx.shortest_path(tree, morphism.src, morphism.dst)
        cycle = [tree.edges[step]["morphism"] for step in zip(path, path[1:])]
        cycle.append(morphism.id)
        LOGGER.debug("inconsistent sign cycle %s", cycle)
        return Constancy(False, None, cycle)
    return Constancy(True, signs, None)


OrientabilityReport = namedtuple(
    "OrientabilityReport",
    ["degree", "top_homology", "orientable", "constant_dualizing", "consistent"],
)


def _category_homology(category: FiniteCategory) -> GradedGroups:
    return tor(category, constant_module(category, Variance.RIGHT), None)


def orientability(
    complex_: SimplicialComplex, certificate: Optional[DualityCertificate] = None
) -> "OrientabilityReport":
    """
    Decide orientability of a manifold-like complex.

    The complex is orientable when ``H_n`` is free of rank the number of
    connected components, so that every component carries a fundamental class.
    The answer is compared with :func:`is_constant_module` on the dualizing module.

    Raises
    ------
        NotManifoldLike
            If the complex is not certified or some dualizing value is not
            ``Z``.

    Examples
    --------

        >>> from dualcat.certificates import orientability
        >>> from dualcat.zoo import sphere_boundary
        >>> report = orientability(sphere_boundary(2))
        >>> str(report.top_homology), report.orientable, report.consistent
        ('Z', True, True)
    """
    if certificate is None:
        certificate = certify_simplicial(complex_)
    if not certificate.certified or certificate.dualizing is None:
        raise NotManifoldLike(f"the complex is {certificate.verdict.value}")
    for obj, value in certificate.values().items():
        if value != FgAbelianGroup.free(1):
            raise NotManifoldLike(f"dualizing value {value} at {obj!r}", obj)
    degree = certificate.degree
    homology = _category_homology(complex_.face_poset())
    top = homology[degree]
    orientable = top == FgAbelianGroup.free(homology[0].rank)
    constant = is_constant_module(certificate.dualizing).constant
    if orientable != constant:
        LOGGER.error("orientability and constancy of the dualizing module disagree")
    return OrientabilityReport(
        degree, top, orientable, constant, orientable == constant
    )


PoincareRow = namedtuple("PoincareRow", ["degree", "homology", "cohomology", "match"])


def poincare_report(
    complex_: SimplicialComplex, certificate: Optional[DualityCertificate] = None
) -> List["PoincareRow"]:
    """
    Compare ``H_i`` with ``H^{n-i}`` for an orientable manifold-like complex.

    Raises
    ------
        NotManifoldLike
            If the complex is not manifold-like.
        NotOrientable
            If the complex is not orientable.
    """
    if certificate is None:
        certificate = certify_simplicial(complex_)
    report = orientability(complex_, certificate)
    if not report.orientable:
        raise NotOrientable(f"H_{report.degree} is {report.top_homology}")
    poset = complex_.face_poset()
    homology = _category_homology(poset)
    cohomology = ext(poset, None, constant_module(poset))
    degree = report.degree
    return [
        PoincareRow(
            level,
            homology[level],
            cohomology[degree - level],
            homology[level] == cohomology[degree - level],
        )
        for level in range(degree + 1)
    ]


def certify_dualizing_module(
    category: FiniteCategory, certificate: DualityCertificate
) -> DualityCertificate:
    """
    Certify the dualizing module as a duality functor over the opposite category.

    The ``opdual_roundtrip`` check passes when the degree is preserved and every
    value of the new dualizing module is ``Z``.

    Raises
    ------
        CertificationError
            If the certificate is not certified.
        DualizingNotPointwiseFree
            If the dualizing module has torsion.

    Examples
    --------

        >>> from dualcat.certificates import certify_dualizing_module, certify_generic
        >>> from dualcat.zoo import paper_example
        >>> category = paper_example("square_poset")
        >>> result = certify_dualizing_module(category, certify_generic(category))
        >>> result.degree, result.checks["opdual_roundtrip"]
        (1, 'pass')
    """
    dualizing = _require_dualizing(certificate)
    result = certify_generic(opposite(category), dualizing.as_opposite())
    roundtrip = (
        result.certified
        and result.degree == certificate.degree
        and all(value == FgAbelianGroup.free(1) for value in result.values().values())
    )
    return dataclasses.replace(
        result, checks={**result.checks, "opdual_roundtrip": _status(roundtrip)}
    )


def is_wedge_of_spheres(complex_: SimplicialComplex) -> bool:
    """
    Decide whether the reduced cohomology is free and lives in the top degree.

    Examples
    --------

        >>> from dualcat.certificates import is_wedge_of_spheres
        >>> from dualcat.zoo import building_gl
        >>> is_wedge_of_spheres(building_gl(2, 3))
        True
    """
    groups = reduced_cohomology(complex_)
    return groups.is_free and all(level == complex_.dimension for level in groups)
