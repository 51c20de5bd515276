"""
Exceptions raised by the :mod:`dualcat` package.

All exceptions derive from :class:`DualcatError`. They are grouped in four
families:

* :class:`InputError` for malformed input;
* :class:`ValidationError` for well-formed input violating an axiom;
* :class:`ComputationError` for internal consistency failures;
* :class:`CertificationError` for unmet certificate preconditions.
"""

from typing import Any


class DualcatError(Exception):
    """
    Base class of all :mod:`dualcat` errors.

    Arguments
    ---------
        message: str
            A human-readable diagnostic.
        witness:
            An optional value (object, morphism, face, cycle...) explaining the
            failure.
    """

    def __init__(self, message: str, witness: Any = None) -> None:
        super().__init__(message)
        self.witness = witness


class InputError(DualcatError, ValueError):
    """Malformed input."""


class UnknownName(InputError):
    """Unknown generator or example name."""


class OutOfRange(InputError):
    """Generator parameter outside the supported bounds."""


class ValidationError(DualcatError, ValueError):
    """Well-formed input violating an axiom."""


class DuplicateId(ValidationError):
    """An object or morphism identifier occurs twice."""


class UnknownObject(ValidationError):
    """An object is not part of the category."""


class UnknownMorphism(ValidationError):
    """A morphism is not part of the category."""


class MissingComposite(ValidationError):
    """A composable pair is absent from the composition table."""


class InvalidComposite(ValidationError):
    """A composition table entry has inconsistent endpoints."""


class NotAssociative(ValidationError):
    """A composable triple violates associativity."""


class NotLoopFree(ValidationError):
    """A non-identity endomorphism or a cycle of objects exists."""


class NotAPoset(ValidationError):
    """A category has a hom-set with more than one element."""


class NotFullSubcategory(ValidationError):
    """A subcategory is not full in its ambient category."""


class InvalidComplex(ValidationError):
    """A face family is not a simplicial complex."""


class UnknownFace(ValidationError):
    """A face is not part of the complex."""


class VertexClash(ValidationError):
    """Two complexes share a vertex."""


class UnknownMethod(ValidationError):
    """An unknown local cohomology method has been requested."""


class NotFunctorial(ValidationError):
    """A module does not respect identities or composition."""


class NotPointwiseFree(ValidationError):
    """A module value is not a free abelian group."""


class VarianceMismatch(ValidationError):
    """A module is not on the expected side of a complex."""


class ComputationError(DualcatError, ArithmeticError):
    """Internal consistency failure."""


class NotAComplex(ComputationError):
    """Two consecutive differentials do not compose to zero."""


class NotAChainMap(ComputationError):
    """A square of a chain map does not commute."""


class NotACycleImage(ComputationError):
    """The image of a cycle is not a cycle."""


class DualityMismatch(ComputationError):
    """An Ext group differs from the matching Tor group."""


class CertificationError(DualcatError, ValueError):
    """A certificate does not satisfy the precondition of an operation."""


class DualizingNotPointwiseFree(CertificationError):
    """The dualizing module has torsion or is missing."""


class RankNotOne(CertificationError):
    """A module value has rank different from one."""


class MapNotUnit(CertificationError):
    """A structure map is not plus or minus one."""


class NotManifoldLike(CertificationError):
    """A dualizing value is not infinite cyclic."""


class NotOrientable(CertificationError):
    """The top homology group is not infinite cyclic."""
