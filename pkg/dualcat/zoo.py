"""
Generators of categories and simplicial complexes.

Every generator is reachable through a ``gen:name(p1,p2)`` pseudo-path:

    >>> from dualcat.zoo import generate
    >>> generate("gen:sphere_boundary(2)").f_vector()
    [3, 3]
    >>> len(generate("gen:parallel_arrows").morphisms)
    2
"""

import json
import logging
import pkgutil
import re
from collections import namedtuple
from itertools import combinations, product
from typing import Callable, Dict, FrozenSet, List, Sequence, Tuple, Union

from dualcat.categories import FiniteCategory, poset_category
from dualcat.complexes import (
    SimplicialComplex,
    face_poset,
    is_closed_surface,
    order_complex,
    simplex_boundary,
)
from dualcat.errors import InputError, InvalidComplex, OutOfRange, UnknownName

LOGGER = logging.getLogger(__name__)

PAPER_EXAMPLES = ("parallel_arrows", "five_object", "square_poset")
SURFACES = ("torus7", "rp2_6", "klein8")

_PATTERN = re.compile(
    r"^gen:(?P<name>[A-Za-z_][A-Za-z0-9_]*)(?:\((?P<params>[^()]*)\))?$"
)


class GeneratorSpec(namedtuple("GeneratorSpec", ["name", "params", "kind"])):
    """
    Parsed generator request.

    It contains three fields:

    * ``name``, the generator name;
    * ``params``, a tuple of integer parameters;
    * ``kind``, ``category`` or ``complex``.
    """

    __slots__ = ()

    def __str__(self) -> str:
        """Return str(self)."""
        if not self.params:
            return f"gen:{self.name}"
        return f"gen:{self.name}({','.join(str(param) for param in self.params)})"


def _check_range(name: str, value: int, allowed: Sequence[int]) -> None:
    if value not in allowed:
        raise OutOfRange(
            f"{name} must be between {min(allowed)} and {max(allowed)}, got {value}",
            value,
        )


def paper_example(name: str) -> FiniteCategory:
    """
    Return one of the three worked example categories.

    * ``parallel_arrows``: two objects ``x``, ``y`` and two morphisms ``alpha``,
      ``beta`` from ``x`` to ``y``;
    * ``five_object``: objects ``0`` to ``4`` with ``a: 4 -> 2``, ``b: 0 -> 2``,
      ``c: 1 -> 2``, ``d: 0 -> 3`` and ``e: 1 -> 3``;
    * ``square_poset``: ``0`` and ``1`` both below ``2`` and ``3``.

    Raises
    ------
        UnknownName
            If *name* is not an example.
    """
    if name == "parallel_arrows":
        return FiniteCategory(["x", "y"], [("alpha", "x", "y"), ("beta", "x", "y")])
    if name == "five_object":
        return FiniteCategory(
            ["0", "1", "2", "3", "4"],
            [
                ("a", "4", "2"),
                ("b", "0", "2"),
                ("c", "1", "2"),
                ("d", "0", "3"),
                ("e", "1", "3"),
            ],
        )
    if name == "square_poset":
        return poset_category(
            ["0", "1", "2", "3"], [("0", "2"), ("0", "3"), ("1", "2"), ("1", "3")]
        )
    raise UnknownName(f"unknown example {name!r}", name)


def one_object() -> FiniteCategory:
    """Return the category with one object ``pt`` and its identity."""
    return FiniteCategory(["pt"])


def chain_poset(size: int) -> FiniteCategory:
    """
    Return the chain ``0 < 1 < ... < size``.

    Raises
    ------
        OutOfRange
            If *size* is not between 0 and 8.
    """
    _check_range("chain_poset size", size, range(0, 9))
    objects = [str(index) for index in range(size + 1)]
    return poset_category(objects, list(zip(objects, objects[1:])))


def single_edge() -> SimplicialComplex:
    """Return the edge ``v w``."""
    return SimplicialComplex(["v", "w"], [["v", "w"]])


def edge_and_vertex() -> SimplicialComplex:
    """Return the edge ``v w`` together with the isolated vertex ``u``."""
    return SimplicialComplex(["u", "v", "w"], [["v", "w"], ["u"]])


def sphere_boundary(size: int) -> SimplicialComplex:
    """
    Return the boundary of the simplex on ``v1 .. v(size+1)``.

    Raises
    ------
        OutOfRange
            If *size* is not between 1 and 6.

    Examples
    --------

        >>> from dualcat.zoo import sphere_boundary
        >>> len(sphere_boundary(3).faces)
        14
    """
    _check_range("sphere_boundary size", size, range(1, 7))
    return simplex_boundary([f"v{index}" for index in range(1, size + 2)])


def surface(name: str) -> SimplicialComplex:
    """
    Load a minimal surface triangulation.

    ``torus7`` is the 7-vertex torus, ``rp2_6`` the 6-vertex projective plane
    and ``klein8`` an 8-vertex Klein bottle.

    Raises
    ------
        UnknownName
            If *name* is not a surface.
        InvalidComplex
            If the stored triangulation is not a closed surface.
    """
    if name not in SURFACES:
        raise UnknownName(f"unknown surface {name!r}", name)
    raw = pkgutil.get_data("dualcat", f"data/{name}.json")
    if raw is None:
        raise InputError(f"missing data for surface {name!r}", name)
    complex_ = SimplicialComplex.from_json(json.loads(raw.decode("utf-8")))
    if not is_closed_surface(complex_):
        raise InvalidComplex(f"{name!r} is not a closed surface", name)
    return complex_


def coxeter_complex_A(size: int) -> SimplicialComplex:  # pylint: disable=invalid-name
    """
    Return the Coxeter complex of type A, the subdivided simplex boundary.

    Raises
    ------
        OutOfRange
            If *size* is not between 1 and 4.

    Examples
    --------

        >>> from dualcat.zoo import coxeter_complex_A
        >>> coxeter_complex_A(2).f_vector()
        [6, 6]
    """
    _check_range("coxeter_complex_A size", size, range(1, 5))
    return order_complex(face_poset(sphere_boundary(size)))


Vector = Tuple[int, ...]


def _row_reduced_bases(
    dimension: int, rank: int, order: int
) -> List[Tuple[Vector, ...]]:
    bases = []
    for pivots in combinations(range(dimension), rank):
        free = [
            (row, column)
            for row, pivot in enumerate(pivots)
            for column in range(pivot + 1, dimension)
            if column not in pivots
        ]
        for values in product(range(order), repeat=len(free)):
            rows = [[0] * dimension for _ in pivots]
            for row, pivot in enumerate(pivots):
                rows[row][pivot] = 1
            for (row, column), value in zip(free, values):
                rows[row][column] = value
            bases.append(tuple(tuple(row) for row in rows))
    return bases


def _span(basis: Sequence[Vector], order: int) -> FrozenSet[Vector]:
    dimension = len(basis[0])
    return frozenset(
        tuple(
            sum(
                coefficient * row[column]
                for coefficient, row in zip(coefficients, basis)
            )
            % order
            for column in range(dimension)
        )
        for coefficients in product(range(order), repeat=len(basis))
    )


def subspace_label(basis: Sequence[Vector]) -> str:
    """
    Return the label of a subspace from its row-reduced basis.

    Examples
    --------

        >>> from dualcat.zoo import subspace_label
        >>> subspace_label([(1, 0, 0), (0, 1, 0)])
        '100|010'
    """
    return "|".join("".join(str(entry) for entry in row) for row in basis)


def building_gl(dimension: int, order: int) -> SimplicialComplex:
    """
    Return the flag complex of proper non-zero subspaces of ``F_q^n``.

    Raises
    ------
        OutOfRange
            If *n* or *q* is not 2 or 3.

    Examples
    --------

        >>> from dualcat.zoo import building_gl
        >>> building_gl(3, 2).f_vector()
        [14, 21]
    """
    _check_range("building_gl dimension", dimension, (2, 3))
    _check_range("building_gl field order", order, (2, 3))
    subspaces: Dict[str, Tuple[int, FrozenSet[Vector]]] = {}
    for rank in range(1, dimension):
        for basis in _row_reduced_bases(dimension, rank, order):
            subspaces[subspace_label(basis)] = (rank, _span(basis, order))
    relations = [
        (smaller, larger)
        for smaller, (low, inner) in subspaces.items()
        for larger, (high, outer) in subspaces.items()
        if low < high and inner <= outer
    ]
    LOGGER.debug(
        "GL(%d, %d) building with %d subspaces", dimension, order, len(subspaces)
    )
    return order_complex(poset_category(subspaces, relations))


Builder = Callable[..., Union[FiniteCategory, SimplicialComplex]]


def _named(
    builder: Callable[[str], Union[FiniteCategory, SimplicialComplex]], name: str
):
    return lambda: builder(name)


_REGISTRY: Dict[str, Tuple[Builder, int, str]] = {
    "one_object": (one_object, 0, "category"),
    "chain_poset": (chain_poset, 1, "category"),
    "single_edge": (single_edge, 0, "complex"),
    "edge_and_vertex": (edge_and_vertex, 0, "complex"),
    "sphere_boundary": (sphere_boundary, 1, "complex"),
    "coxeter_complex_A": (coxeter_complex_A, 1, "complex"),
    "building_gl": (building_gl, 2, "complex"),
}
_REGISTRY.update(
    {name: (_named(paper_example, name), 0, "category") for name in PAPER_EXAMPLES}
)
_REGISTRY.update({name: (_named(surface, name), 0, "complex") for name in SURFACES})


def generator_names() -> List[str]:
    """Return the sorted generator names."""
    return sorted(_REGISTRY)


def parse_generator(text: str) -> GeneratorSpec:
    """
    Parse a ``gen:name(p1,p2)`` pseudo-path.

    Raises
    ------
        InputError
            If the text is malformed or has the wrong number of parameters.
        UnknownName
            If the generator does not exist.

    Examples
    --------

        >>> from dualcat.zoo import parse_generator
        >>> parse_generator("gen:building_gl(3, 2)")
        GeneratorSpec(name='building_gl', params=(3, 2), kind='complex')
    """
    match = _PATTERN.match(text.strip())
    if match is None:
        raise InputError(f"malformed generator {text!r}", text)
    name = match.group("name")
    if name not in _REGISTRY:
        raise UnknownName(f"unknown generator {name!r}", name)
    raw = match.group("params")
    try:
        params = tuple(
            int(param) for param in (raw or "").split(",") if param.strip()
        )
    except ValueError:
        raise InputError(f"non-integer parameter in {text!r}", text) from None
    _, arity, kind = _REGISTRY[name]
    if len(params) != arity:
        raise InputError(f"{name} takes {arity} parameter(s), got {len(params)}", text)
    return GeneratorSpec(name, params, kind)


def generate(
    spec: Union[str, GeneratorSpec]
) -> Union[FiniteCategory, SimplicialComplex]:
    """
    Build the category or complex described by a generator request.

    Raises
    ------
        InputError
            If the request is malformed.
        UnknownName
            If the generator does not exist.
        OutOfRange
            If a parameter is outside its bounds.
    """
    if isinstance(spec, str):
        spec = parse_generator(spec)
    builder, _, _ = _REGISTRY[spec.name]
    LOGGER.info("generating %s", spec)
    return builder(*spec.params)
