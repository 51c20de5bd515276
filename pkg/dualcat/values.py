"""Defines the enumerations shared by the :mod:`dualcat` modules."""

from enum import Enum

from dualcat.errors import UnknownMethod


class Variance(str, Enum):
    """
    Variance of a module.

    A left module is a covariant functor, a right module is a contravariant one.
    """

    LEFT = "left"
    RIGHT = "right"

    def flip(self) -> "Variance":
        """Return the other variance."""
        return Variance.RIGHT if self is Variance.LEFT else Variance.LEFT


class Verdict(str, Enum):
    """Outcome of a certification."""

    CERTIFIED = "certified"
    REFUTED = "refuted"
    DEGENERATE = "degenerate"


class Region(str, Enum):
    """
    Object selections relative to a fixed object *x*.

    * ``JOINABLE``: objects *z* having an upper bound in common with *x*;
    * ``STRICTLY_BELOW_JOIN``: joinable objects not above *x*;
    * ``LEQ``, ``LT`` and ``GEQ``: the principal down-sets and up-set.
    """

    JOINABLE = "joinable"
    STRICTLY_BELOW_JOIN = "strictly_below_join"
    LEQ = "leq"
    LT = "lt"
    GEQ = "geq"


class Method(str, Enum):
    """Local cohomology algorithms."""

    LINK = "link"
    PAIR = "pair"
    EXT = "ext"

    @classmethod
    def parse(cls, value) -> "Method":
        """
        Convert a string or a :class:`Method` into a :class:`Method`.

        Raises
        ------
            UnknownMethod
                If *value* names no method.

        Examples
        --------

            >>> from dualcat.values import Method
            >>> Method.parse("pair")
            <Method.PAIR: 'pair'>
        """
        try:
            return cls(value)
        except ValueError:
            raise UnknownMethod(f"unknown method {value!r}", value) from None
