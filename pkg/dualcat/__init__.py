"""
The :mod:`dualcat` package decides homological duality of finite categories.

It defines several classes.

For categories and complexes:

* :class:`FiniteCategory` which represents a finite loop-free category;
* :class:`SimplicialComplex` which represents a finite simplicial complex stored
  by its maximal faces;

For integral homological algebra:

* :class:`FgAbelianGroup` which represents a finitely generated abelian group in
  invariant factor form;
* :class:`IntegerChainComplex` which represents a bounded complex of free
  abelian groups;
* :class:`GradedGroups` which maps degrees to groups;

For modules:

* :class:`CModule` which represents a pointwise-free left or right module;
* :class:`ProjectiveComplex` which represents a complex of standard projectives;

For certificates:

* :class:`DualityCertificate` which records the outcome of a certification.

The main functions are :func:`ext`, :func:`tor`, :func:`certify_generic`,
:func:`certify_simplicial` and :func:`local_cohomology`.
"""
from .categories import FiniteCategory, opposite, poset_category, validate_category
from .certificates import (
    DualityCertificate,
    certify_dualizing_module,
    certify_generic,
    certify_simplicial,
    is_constant_module,
    orientability,
    poincare_report,
    verify_duality_isomorphism,
)
from .complexes import SimplicialComplex, face_poset, link, local_cohomology
from .errors import DualcatError
from .integral import FgAbelianGroup, IntegerChainComplex
from .modules import (
    CModule,
    GradedGroups,
    ProjectiveComplex,
    bar_resolution,
    derived_dual,
    ext,
    tor,
)
from .zoo import generate

__all__ = (
    "FiniteCategory",
    "SimplicialComplex",
    "FgAbelianGroup",
    "IntegerChainComplex",
    "GradedGroups",
    "CModule",
    "ProjectiveComplex",
    "DualityCertificate",
    "DualcatError",
    "validate_category",
    "poset_category",
    "opposite",
    "face_poset",
    "link",
    "local_cohomology",
    "bar_resolution",
    "derived_dual",
    "ext",
    "tor",
    "certify_generic",
    "certify_simplicial",
    "certify_dualizing_module",
    "verify_duality_isomorphism",
    "is_constant_module",
    "orientability",
    "poincare_report",
    "generate",
)
