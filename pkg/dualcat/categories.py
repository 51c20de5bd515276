"""
Finite loop-free categories module.

A :class:`FiniteCategory` holds its objects, its morphisms and a total
composition table. Identities are implicit: the identity of ``x`` is named
``id_x``.
"""

# pylint: disable=too-many-branches

import logging
from collections import namedtuple
from typing import (
    Any,
    Dict,
    FrozenSet,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import networkx as nx  # type: ignore

# pylint: disable=import-error
from sortedcontainers import SortedDict, SortedSet  # type: ignore

from dualcat.errors import (
    DuplicateId,
    InputError,
    InvalidComposite,
    MissingComposite,
    NotAssociative,
    NotLoopFree,
    UnknownMorphism,
    UnknownObject,
)
from dualcat.values import Region

LOGGER = logging.getLogger(__name__)


class Morphism(namedtuple("Morphism", ["id", "src", "dst"])):
    """
    Morphism record.

    It contains three fields:

    * ``id``, the identifier;
    * ``src``, the source object;
    * ``dst``, the target object.
    """

    __slots__ = ()

    def __str__(self) -> str:
        """Return str(self)."""
        return f"{self.id}: {self.src} -> {self.dst}"


class Chain(namedtuple("Chain", ["objects", "arrows"])):
    """
    Chain of composable non-identity morphisms.

    A chain of degree *n* has *n + 1* objects ``x_0 ... x_n`` and *n* arrows, the
    arrow of index *i* going from ``x_i`` to ``x_{i+1}``. A chain of degree 0 is
    a single object.
    """

    __slots__ = ()

    @property
    def degree(self) -> int:
        """Return the number of arrows."""
        return len(self.arrows)

    @property
    def first(self) -> str:
        """Return the first object."""
        return self.objects[0]

    @property
    def last(self) -> str:
        """Return the last object."""
        return self.objects[-1]

    def sort_key(self) -> Tuple[str, ...]:
        """Return the lexicographic key (arrow ids, objects in degree 0)."""
        return self.arrows if self.arrows else self.objects

    def __str__(self) -> str:
        """Return str(self)."""
        if not self.arrows:
            return str(self.objects[0])
        return "(" + ", ".join(self.arrows) + ")"


def identity_id(obj: str) -> str:
    """Return the identifier of the identity of *obj*."""
    return f"id_{obj}"


class FiniteCategory:
    """
    Finite loop-free category.

    Objects are iterated in lexicographic order, morphisms by identifier.
    Instances are immutable and compare structurally.

    Examples
    --------

        >>> from dualcat.categories import FiniteCategory
        >>> category = FiniteCategory(
        ...     ["x", "y"], [("alpha", "x", "y"), ("beta", "x", "y")]
        ... )
        >>> category.hom("x", "y")
        ('alpha', 'beta')
        >>> category.compose("alpha", "id_x")
        'alpha'
    """

    __slots__ = (
        "_objects",
        "_arrows",
        "_identities",
        "_composition",
        "_homs",
        "_outgoing",
        "_order",
        "_opposite",
    )

    def __init__(
        self,
        objects: Iterable[str],
        morphisms: Iterable[Any] = (),
        compose: Iterable[Sequence[str]] = (),
        implicit_identities: bool = True,
    ) -> None:
        """
        Initialize a :class:`FiniteCategory` instance from raw data.

        Arguments
        ---------
            objects: :class:`Iterable <python:typing.Iterable>`
                Object identifiers.
            morphisms: :class:`Iterable <python:typing.Iterable>`
                Non-identity morphisms as ``(id, src, dst)`` triples or
                :class:`Morphism` records.
            compose: :class:`Iterable <python:typing.Iterable>`
                Composition entries ``(g, f, g∘f)``.
            implicit_identities: bool
                Whether composites involving identities are generated. When
                :data:`False <python:False>`, they must be listed.

        Raises
        ------
            DuplicateId
                If an identifier occurs twice.
            UnknownObject
                If a morphism endpoint is not an object.
            UnknownMorphism
                If a composition entry names an unknown morphism.
            InvalidComposite
                If a composition entry has inconsistent endpoints.
            NotLoopFree
                If a non-identity endomorphism or a cycle exists.
            MissingComposite
                If a composable pair has no composite.
            NotAssociative
                If a composable triple is not associative.
        """
        self._setup(*_validated_parts(objects, morphisms, compose, implicit_identities))
        _check_associativity(self)
        LOGGER.debug(
            "validated category with %d objects and %d morphisms",
            len(self._objects),
            len(self._arrows),
        )

    def _setup(
        self,
        objects: "SortedSet",
        arrows: "SortedDict",
        identities: Dict[str, str],
        composition: Dict[Tuple[str, str], str],
    ) -> None:
        self._objects = objects
        self._arrows = arrows
        self._identities = identities
        self._composition = composition
        homs: Dict[Tuple[str, str], List[str]] = {}
        outgoing: Dict[str, List[str]] = {obj: [] for obj in objects}
        for morphism in arrows.values():
            homs.setdefault((morphism.src, morphism.dst), []).append(morphism.id)
            if morphism.src != morphism.dst:
                outgoing[morphism.src].append(morphism.id)
        self._homs = {key: tuple(value) for key, value in homs.items()}
        self._outgoing = {key: tuple(value) for key, value in outgoing.items()}
        self._order: Optional[FrozenSet[Tuple[str, str]]] = None
        self._opposite: Optional["FiniteCategory"] = None

    @classmethod
    def _trusted(
        cls,
        objects: Iterable[str],
        arrows: Iterable[Morphism],
        composition: Dict[Tuple[str, str], str],
    ) -> "FiniteCategory":
        """Build a category from data known to satisfy the axioms."""
        category = cls.__new__(cls)
        sorted_objects = SortedSet(objects)
        sorted_arrows = SortedDict((morphism.id, morphism) for morphism in arrows)
        identities = {obj: identity_id(obj) for obj in sorted_objects}
        category._setup(sorted_objects, sorted_arrows, identities, composition)
        return category

    @property
    def objects(self) -> Tuple[str, ...]:
        """Return the sorted objects."""
        return tuple(self._objects)

    @property
    def morphisms(self) -> Tuple[Morphism, ...]:
        """Return the sorted non-identity morphisms."""
        return tuple(
            morphism
            for morphism in self._arrows.values()
            if morphism.src != morphism.dst
        )

    @property
    def arrows(self) -> Tuple[Morphism, ...]:
        """Return the sorted morphisms, identities included."""
        return tuple(self._arrows.values())

    def __contains__(self, obj) -> bool:
        """Return :data:`True <python:True>` if *obj* is an object."""
        return obj in self._objects

    def __len__(self) -> int:
        """Return the number of objects."""
        return len(self._objects)

    def __iter__(self) -> Iterator[str]:
        """Return an iterator over the objects."""
        return iter(self._objects)

    def check_object(self, obj: str) -> str:
        """
        Return *obj* if it is an object.

        Raises
        ------
            UnknownObject
                Otherwise.
        """
        if obj not in self._objects:
            raise UnknownObject(f"unknown object {obj!r}", obj)
        return obj

    def morphism(self, name: str) -> Morphism:
        """
        Return the morphism record called *name*, identities included.

        Raises
        ------
            UnknownMorphism
                If no morphism has this identifier.
        """
        try:
            return self._arrows[name]
        except KeyError:
            raise UnknownMorphism(f"unknown morphism {name!r}", name) from None

    def source(self, name: str) -> str:
        """Return the source of a morphism."""
        return self.morphism(name).src

    def target(self, name: str) -> str:
        """Return the target of a morphism."""
        return self.morphism(name).dst

    def identity(self, obj: str) -> str:
        """Return the identity of *obj*."""
        return self._identities[self.check_object(obj)]

    def is_identity(self, name: str) -> bool:
        """Return :data:`True <python:True>` if *name* is an identity."""
        morphism = self.morphism(name)
        return self._identities[morphism.src] == name

    def compose(self, second: str, first: str) -> str:
        """
        Return the composite *second* ∘ *first*.

        Raises
        ------
            InvalidComposite
                If the morphisms are not composable.
        """
        try:
            return self._composition[second, first]
        except KeyError:
            raise InvalidComposite(
                f"{second!r} and {first!r} are not composable", (second, first)
            ) from None

    def hom(self, source: str, target: str) -> Tuple[str, ...]:
        """
        Return the basis of ``Z[Hom(source, target)]``.

        The identifiers are sorted; the identity belongs to ``hom(x, x)``.
        """
        self.check_object(source)
        self.check_object(target)
        return self._homs.get((source, target), ())

    def outgoing(self, obj: str) -> Tuple[str, ...]:
        """Return the non-identity morphisms starting from *obj*."""
        return self._outgoing[self.check_object(obj)]

    def leq(self, first: str, second: str) -> bool:
        """Return :data:`True <python:True>` if *first* maps to *second*."""
        return (first, second) in reachability_order(self)

    def full_subcategory(self, objects: Iterable[str]) -> "FiniteCategory":
        """
        Return the full subcategory on the given objects.

        Raises
        ------
            UnknownObject
                If an object does not belong to the category.
        """
        selected = {self.check_object(obj) for obj in objects}
        arrows = [
            morphism
            for morphism in self._arrows.values()
            if morphism.src in selected and morphism.dst in selected
        ]
        names = {morphism.id for morphism in arrows}
        composition = {
            key: value
            for key, value in self._composition.items()
            if key[0] in names and key[1] in names
        }
        return FiniteCategory._trusted(selected, arrows, composition)

    def composable_pairs(self) -> Iterator[Tuple[str, str]]:
        """Return an iterator over the composable pairs ``(g, f)``."""
        return iter(self._composition)

    def to_json(self) -> Dict[str, Any]:
        """Return the category JSON form."""
        return {
            "objects": list(self._objects),
            "morphisms": [
                {"id": morphism.id, "src": morphism.src, "dst": morphism.dst}
                for morphism in self.morphisms
            ],
            "compose": [
                [second, first, self._composition[second, first]]
                for second, first in sorted(self._composition)
                if not self.is_identity(second) and not self.is_identity(first)
            ],
        }

    def __eq__(self, other) -> bool:
        """Return self==other."""
        if not isinstance(other, FiniteCategory):
            return NotImplemented
        return self is other or (
            list(self._objects) == list(other._objects)
            and list(self._arrows.values()) == list(other._arrows.values())
            and self._composition == other._composition
        )

    def __hash__(self) -> int:
        """Return hash(self)."""
        return hash((tuple(self._objects), tuple(self._arrows)))

    def __repr__(self) -> str:
        """Return repr(self)."""
        return (
            f"FiniteCategory({len(self._objects)} objects, "
            f"{len(self.morphisms)} morphisms)"
        )


def _validated_parts(
    objects: Iterable[str],
    morphisms: Iterable[Any],
    compose: Iterable[Sequence[str]],
    implicit_identities: bool,
):
    sorted_objects = SortedSet()
    for obj in objects:
        if obj in sorted_objects:
            raise DuplicateId(f"duplicate object {obj!r}", obj)
        sorted_objects.add(obj)
    identities = {obj: identity_id(obj) for obj in sorted_objects}
    reserved = set(identities.values())

    arrows = SortedDict()
    for entry in morphisms:
        morphism = Morphism(*entry)
        if morphism.id in arrows or morphism.id in reserved:
            raise DuplicateId(f"duplicate morphism {morphism.id!r}", morphism.id)
        for end in (morphism.src, morphism.dst):
            if end not in sorted_objects:
                raise UnknownObject(
                    f"morphism {morphism.id!r} uses unknown object {end!r}", end
                )
        if morphism.src == morphism.dst:
            raise NotLoopFree(
                f"non-identity endomorphism {morphism.id!r} of {morphism.src!r}",
                morphism.id,
            )
        arrows[morphism.id] = morphism

    graph = nx.DiGraph()
    graph.add_nodes_from(sorted_objects)
    graph.add_edges_from((morphism.src, morphism.dst) for morphism in arrows.values())
    if not nx.is_directed_acyclic_graph(graph):
        cycle = [source for source, _ in nx.find_cycle(graph)]
        raise NotLoopFree(f"cycle of objects {' -> '.join(cycle)}", cycle)

    for obj, name in identities.items():
        arrows[name] = Morphism(name, obj, obj)

    composition: Dict[Tuple[str, str], str] = {}
    for entry in compose:
        if len(entry) != 3:
            raise InvalidComposite(
                f"composition entry {entry!r} is not a triple", entry
            )
        second, first, composite = entry
        for name in (second, first, composite):
            if name not in arrows:
                raise UnknownMorphism(f"unknown morphism {name!r} in composition", name)
        if arrows[first].dst != arrows[second].src:
            raise InvalidComposite(
                f"{second!r} and {first!r} are not composable", (second, first)
            )
        if (arrows[composite].src, arrows[composite].dst) != (
            arrows[first].src,
            arrows[second].dst,
        ):
            raise InvalidComposite(
                f"{composite!r} cannot be the composite of {second!r} and {first!r}",
                (second, first, composite),
            )
        if composition.get((second, first), composite) != composite:
            raise InvalidComposite(
                f"conflicting composites for {second!r} and {first!r}", (second, first)
            )
        composition[second, first] = composite

    for morphism in arrows.values():
        pairs = (
            (identities[morphism.dst], morphism.id),
            (morphism.id, identities[morphism.src]),
        )
        for key in pairs:
            if implicit_identities:
                composition.setdefault(key, morphism.id)
            if key in composition and composition[key] != morphism.id:
                raise InvalidComposite(
                    f"identity law fails for {morphism.id!r}", key
                )

    for first in arrows.values():
        for second in arrows.values():
            if first.dst == second.src and (second.id, first.id) not in composition:
                raise MissingComposite(
                    f"missing composite of {second.id!r} and {first.id!r}",
                    (second.id, first.id),
                )
    return sorted_objects, arrows, identities, composition


def _check_associativity(category: FiniteCategory) -> None:
    starting: Dict[str, List[str]] = {}
    for morphism in category._arrows.values():  # pylint: disable=protected-access
        starting.setdefault(morphism.src, []).append(morphism.id)
    for second, first in category.composable_pairs():
        middle = category.compose(second, first)
        for third in starting[category.target(second)]:
            left = category.compose(third, middle)
            right = category.compose(category.compose(third, second), first)
            if left != right:
                raise NotAssociative(
                    f"({third} ∘ {second}) ∘ {first} differs from "
                    f"{third} ∘ ({second} ∘ {first})",
                    (third, second, first),
                )


def validate_category(
    objects: Iterable[str],
    morphisms: Iterable[Any],
    compose: Iterable[Sequence[str]] = (),
    implicit_identities: bool = True,
) -> FiniteCategory:
    """
    Validate raw category data.

    Arguments
    ---------
        objects: :class:`Iterable <python:typing.Iterable>`
            Object identifiers.
        morphisms: :class:`Iterable <python:typing.Iterable>`
            Non-identity ``(id, src, dst)`` triples.
        compose: :class:`Iterable <python:typing.Iterable>`
            ``(g, f, g∘f)`` entries.
        implicit_identities: bool
            Whether composites with identities are generated.

    Returns
    -------
        :class:`FiniteCategory`
            The validated category.

    See also
    --------
        :class:`FiniteCategory` for the raised errors.

    Examples
    --------

        >>> from dualcat.categories import validate_category
        >>> category = validate_category(
        ...     ["x", "y"], [("alpha", "x", "y"), ("beta", "x", "y")]
        ... )
        >>> len(category.objects), len(category.morphisms)
        (2, 2)
    """
    return FiniteCategory(objects, morphisms, compose, implicit_identities)


def load_category(data: Mapping[str, Any]) -> FiniteCategory:
    """
    Build a category from its JSON form.

    Raises
    ------
        InputError
            If the data does not have the category JSON shape.
    """
    try:
        objects = [str(obj) for obj in data["objects"]]
        morphisms = [
            (str(entry["id"]), str(entry["src"]), str(entry["dst"]))
            for entry in data.get("morphisms", [])
        ]
        compose = [
            tuple(str(name) for name in entry) for entry in data.get("compose", [])
        ]
    except (KeyError, TypeError, AttributeError) as error:
        raise InputError(f"malformed category data: {error}") from error
    return FiniteCategory(objects, morphisms, compose)


def poset_category(
    objects: Iterable[str], relations: Iterable[Tuple[str, str]]
) -> FiniteCategory:
    """
    Build the poset category generated by strict relations.

    The order is the transitive closure of *relations*; the morphism from ``x``
    to ``y`` is called ``x<y``.

    Raises
    ------
        UnknownObject
            If a relation uses an unknown object.
        NotLoopFree
            If the relations contain a cycle.

    Examples
    --------

        >>> from dualcat.categories import poset_category
        >>> chain = poset_category(["0", "1", "2"], [("0", "1"), ("1", "2")])
        >>> [morphism.id for morphism in chain.morphisms]
        ['0<1', '0<2', '1<2']
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(objects)
    for lower, upper in relations:
        for end in (lower, upper):
            if end not in graph:
                raise UnknownObject(f"relation uses unknown object {end!r}", end)
        if lower == upper:
            raise NotLoopFree(f"relation {lower!r} < {upper!r} is a loop", lower)
        graph.add_edge(lower, upper)
    if not nx.is_directed_acyclic_graph(graph):
        cycle = [source for source, _ in nx.find_cycle(graph)]
        raise NotLoopFree(f"cycle of objects {' -> '.join(cycle)}", cycle)
    closure = nx.transitive_closure_dag(graph)

    def name(lower: str, upper: str) -> str:
        return identity_id(lower) if lower == upper else f"{lower}<{upper}"

    arrows = [
        Morphism(name(lower, upper), lower, upper) for lower, upper in closure.edges
    ]
    arrows.extend(Morphism(identity_id(obj), obj, obj) for obj in graph.nodes)
    composition = {}
    for first in arrows:
        for second in arrows:
            if first.dst == second.src:
                composition[second.id, first.id] = name(first.src, second.dst)
    return FiniteCategory._trusted(  # pylint: disable=protected-access
        graph.nodes, arrows, composition
    )


def opposite(category: FiniteCategory) -> FiniteCategory:
    """
    Return the opposite category.

    Morphisms keep their identifiers; sources and targets are swapped and the
    composition table is transposed. The result is cached, so that
    ``opposite(opposite(C))`` is ``C`` itself.

    Examples
    --------

        >>> from dualcat.categories import opposite, poset_category
        >>> chain = poset_category(["0", "1"], [("0", "1")])
        >>> opposite(chain).morphism("0<1")
        Morphism(id='0<1', src='1', dst='0')
        >>> opposite(opposite(chain)) is chain
        True
    """
    # pylint: disable=protected-access
    if category._opposite is None:
        arrows = [
            Morphism(morphism.id, morphism.dst, morphism.src)
            for morphism in category._arrows.values()
        ]
        composition = {
            (first, second): composite
            for (second, first), composite in category._composition.items()
        }
        result = FiniteCategory._trusted(category._objects, arrows, composition)
        result._opposite = category
        category._opposite = result
    return category._opposite


def reachability_order(category: FiniteCategory) -> FrozenSet[Tuple[str, str]]:
    """
    Return the relation ``x ≤ y`` (a morphism ``x → y`` exists).

    The relation is reflexive; for loop-free categories it is a partial order.

    Examples
    --------

        >>> from dualcat.categories import poset_category, reachability_order
        >>> chain = poset_category(["0", "1"], [("0", "1")])
        >>> sorted(reachability_order(chain))
        [('0', '0'), ('0', '1'), ('1', '1')]
    """
    # pylint: disable=protected-access
    if category._order is None:
        category._order = frozenset(
            (morphism.src, morphism.dst) for morphism in category._arrows.values()
        )
    return category._order


def is_poset(category: FiniteCategory) -> bool:
    """Return :data:`True <python:True>` if every hom-set has at most one element."""
    # pylint: disable=protected-access
    return all(len(names) <= 1 for names in category._homs.values())


def order_subcategory(
    category: FiniteCategory, obj: str, kind: Union[Region, str]
) -> FiniteCategory:
    """
    Return an order-theoretic full subcategory around *obj*.

    Arguments
    ---------
        category: :class:`FiniteCategory`
            The ambient category.
        obj: str
            An object *x*.
        kind: :class:`Region`
            ``joinable`` (objects with an upper bound in common with *x*),
            ``strictly_below_join`` (joinable and not above *x*), ``leq``,
            ``lt`` or ``geq``.

    Raises
    ------
        UnknownObject
            If *obj* is not an object.
        ValueError
            If *kind* is not a region.

    Examples
    --------

        >>> from dualcat.categories import order_subcategory, poset_category
        >>> square = poset_category(
        ...     ["0", "1", "2", "3"], [("0", "2"), ("0", "3"), ("1", "2"), ("1", "3")]
        ... )
        >>> order_subcategory(square, "0", "strictly_below_join").objects
        ('1',)
    """
    category.check_object(obj)
    region = Region(kind)
    order = reachability_order(category)
    objects = category.objects
    above = {other for other in objects if (obj, other) in order}
    if region is Region.LEQ:
        selected = {other for other in objects if (other, obj) in order}
    elif region is Region.LT:
        selected = {
            other for other in objects if (other, obj) in order and other != obj
        }
    elif region is Region.GEQ:
        selected = above
    else:
        selected = {
            other
            for other in objects
            if any((other, upper) in order for upper in above)
        }
        if region is Region.STRICTLY_BELOW_JOIN:
            selected -= above
    return category.full_subcategory(selected)


class Nerve:
    """
    Nondegenerate nerve of a loop-free category.

    Degree *n* holds the chains of *n* composable non-identity morphisms,
    sorted lexicographically on their arrow identifiers.
    """

    __slots__ = ("_category", "_chains", "_positions")

    def __init__(self, category: FiniteCategory) -> None:
        """
        Initialize a :class:`Nerve` instance.

        Arguments
        ---------
            category: :class:`FiniteCategory`
                A loop-free category.
        """
        self._category = category
        layer = [Chain((obj,), ()) for obj in category.objects]
        chains = []
        while layer:
            layer.sort(key=Chain.sort_key)
            chains.append(tuple(layer))
            layer = [
                Chain(chain.objects + (category.target(name),), chain.arrows + (name,))
                for chain in layer
                for name in category.outgoing(chain.last)
            ]
        self._chains: Tuple[Tuple[Chain, ...], ...] = tuple(chains)
        self._positions: Dict[Chain, int] = {
            chain: index for layer in self._chains for index, chain in enumerate(layer)
        }
        LOGGER.debug("nerve sizes %s", self.sizes())

    @property
    def category(self) -> FiniteCategory:
        """Return the category."""
        return self._category

    @property
    def dimension(self) -> int:
        """Return the highest degree holding a chain (-1 for the empty category)."""
        return len(self._chains) - 1 if self._chains and self._chains[0] else -1

    def chains(self, degree: int) -> Tuple[Chain, ...]:
        """Return the chains of a given degree."""
        if 0 <= degree < len(self._chains):
            return self._chains[degree]
        return ()

    def sizes(self) -> List[int]:
        """Return the number of chains per degree."""
        return [len(layer) for layer in self._chains if layer]

    def position(self, chain: Chain) -> int:
        """Return the index of *chain* within its degree."""
        return self._positions[chain]

    def __iter__(self) -> Iterator[Chain]:
        """Return an iterator over all chains by increasing degree."""
        return (chain for layer in self._chains for chain in layer)

    def face(self, chain: Chain, index: int) -> Chain:
        """
        Return the face ``d_index`` of *chain*.

        ``d_0`` drops the first object, ``d_n`` the last one, an interior face
        composes the two arrows around the dropped object.

        Raises
        ------
            ValueError
                If *index* is out of range.
        """
        return chain_face(self._category, chain, index)


def chain_face(category: FiniteCategory, chain: Chain, index: int) -> Chain:
    """
    Return the face ``d_index`` of a chain, identities allowed.

    ``d_0`` drops the first object, ``d_n`` the last one, an interior face
    composes the two arrows around the dropped object.

    Raises
    ------
        ValueError
            If *index* is out of range.
    """
    degree = chain.degree
    if degree == 0 or not 0 <= index <= degree:
        raise ValueError(f"no face {index} for a chain of degree {degree}")
    if index == 0:
        return Chain(chain.objects[1:], chain.arrows[1:])
    if index == degree:
        return Chain(chain.objects[:-1], chain.arrows[:-1])
    composite = category.compose(chain.arrows[index], chain.arrows[index - 1])
    return Chain(
        chain.objects[:index] + chain.objects[index + 1 :],
        chain.arrows[: index - 1] + (composite,) + chain.arrows[index + 1 :],
    )


def nondegenerate_nerve(category: FiniteCategory) -> Nerve:
    """
    Enumerate the nondegenerate chains of a loop-free category.

    Examples
    --------

        >>> from dualcat.categories import nondegenerate_nerve, validate_category
        >>> category = validate_category(
        ...     ["x", "y"], [("alpha", "x", "y"), ("beta", "x", "y")]
        ... )
        >>> nondegenerate_nerve(category).sizes()
        [2, 2]
    """
    return Nerve(category)
