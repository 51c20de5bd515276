"""
Finite simplicial complexes module.

A :class:`SimplicialComplex` is stored by its maximal faces. Faces are sorted
tuples of vertex identifiers; inside the face poset they are named by joining
their vertices with ``+``, for example ``v1+v2``.
"""

# pylint: disable=too-many-locals

import logging
from itertools import combinations
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx  # type: ignore

# pylint: disable=import-error
from sortedcontainers import SortedSet  # type: ignore

from dualcat.categories import (
    FiniteCategory,
    is_poset,
    nondegenerate_nerve,
    poset_category,
    reachability_order,
)
from dualcat.errors import (
    DuplicateId,
    InputError,
    InvalidComplex,
    NotAPoset,
    NotFullSubcategory,
    UnknownFace,
    UnknownMethod,
    VertexClash,
)
from dualcat.integral import IntegerChainComplex, homology, zeros
from dualcat.modules import (
    CModule,
    GradedGroups,
    bar_resolution,
    constant_module,
    ext,
    hom_complex,
    standard_projective,
)
from dualcat.values import Method

LOGGER = logging.getLogger(__name__)

Face = Tuple[str, ...]


def _face_key(face: Face) -> Tuple[int, Face]:
    return len(face), face


class SimplicialComplex:
    """
    Finite abstract simplicial complex.

    Vertices that belong to no given facet become isolated faces. The void
    complex has no vertex and no face; it differs from the complex holding a
    single vertex.

    Examples
    --------

        >>> from dualcat.complexes import SimplicialComplex
        >>> edge = SimplicialComplex(["v", "w", "u"], [["w", "v"]])
        >>> edge.facets
        (('u',), ('v', 'w'))
        >>> edge.f_vector(), edge.dimension
        ([3, 1], 1)
    """

    __slots__ = ("_vertices", "_facets", "_faces", "_poset")

    def __init__(
        self, vertices: Iterable[str], facets: Iterable[Iterable[str]]
    ) -> None:
        """
        Initialize a :class:`SimplicialComplex` instance.

        Arguments
        ---------
            vertices: :class:`Iterable <python:typing.Iterable>`
                The vertex identifiers.
            facets: :class:`Iterable <python:typing.Iterable>`
                Faces generating the complex, not necessarily maximal.

        Raises
        ------
            DuplicateId
                If a vertex is listed twice.
            InvalidComplex
                If a face is empty, repeats a vertex or uses an unknown vertex.
        """
        vertices = [str(vertex) for vertex in vertices]
        known = SortedSet(vertices)
        if len(known) != len(vertices):
            duplicate = next(
                vertex for vertex in vertices if vertices.count(vertex) > 1
            )
            raise DuplicateId(f"vertex {duplicate!r} is listed twice", duplicate)
        candidates = []
        for facet in facets:
            members = [str(vertex) for vertex in facet]
            face = tuple(sorted(members))
            if not face:
                raise InvalidComplex("a face is empty")
            if len(set(face)) != len(face):
                raise InvalidComplex(f"face {'+'.join(face)} repeats a vertex", face)
            for vertex in face:
                if vertex not in known:
                    raise InvalidComplex(
                        f"face {'+'.join(face)} uses unknown vertex {vertex!r}", face
                    )
            candidates.append(face)
        covered = {vertex for face in candidates for vertex in face}
        candidates.extend((vertex,) for vertex in known if vertex not in covered)
        self._vertices: Tuple[str, ...] = tuple(known)
        self._facets: Tuple[Face, ...] = _maximal_faces(candidates)
        self._faces: Optional[SortedSet] = None
        self._poset: Optional[FiniteCategory] = None

    @property
    def vertices(self) -> Tuple[str, ...]:
        """Return the sorted vertices."""
        return self._vertices

    @property
    def facets(self) -> Tuple[Face, ...]:
        """Return the maximal faces, sorted by size then lexicographically."""
        return self._facets

    @property
    def faces(self) -> SortedSet:
        """Return all faces, sorted by size then lexicographically."""
        if self._faces is None:
            faces = SortedSet(key=_face_key)
            for facet in self._facets:
                for size in range(1, len(facet) + 1):
                    faces.update(combinations(facet, size))
            self._faces = faces
        return self._faces

    @property
    def dimension(self) -> int:
        """Return the dimension, ``-1`` for the void complex."""
        return max((len(facet) - 1 for facet in self._facets), default=-1)

    @property
    def is_void(self) -> bool:
        """Return :data:`True <python:True>` if the complex has no face."""
        return not self._facets

    def faces_of_dimension(self, dimension: int) -> List[Face]:
        """Return the faces of a given dimension."""
        return [face for face in self.faces if len(face) == dimension + 1]

    def f_vector(self) -> List[int]:
        """Return the number of faces per dimension."""
        counts = [0] * (self.dimension + 1)
        for face in self.faces:
            counts[len(face) - 1] += 1
        return counts

    def euler_characteristic(self) -> int:
        """
        Return the (unreduced) Euler characteristic.

        Examples
        --------

            >>> from dualcat.complexes import simplex_boundary
            >>> simplex_boundary(["a", "b", "c", "d"]).euler_characteristic()
            2
        """
        return sum((-1) ** index * count for index, count in enumerate(self.f_vector()))

    def __contains__(self, face) -> bool:
        """Return :data:`True <python:True>` if *face* is a face."""
        return tuple(sorted(face)) in self.faces

    def face_id(self, face: Iterable[str]) -> str:
        """
        Return the face poset identifier of a face.

        Raises
        ------
            UnknownFace
                If *face* is not a face.
        """
        return "+".join(self.check_face(face))

    def check_face(self, face: Union[str, Iterable[str]]) -> Face:
        """
        Return the canonical form of a face.

        A string is parsed with :meth:`parse_face`.

        Raises
        ------
            UnknownFace
                If *face* is not a face.
        """
        if isinstance(face, str):
            return self.parse_face(face)
        canonical = tuple(sorted(str(vertex) for vertex in face))
        if canonical not in self.faces:
            raise UnknownFace(f"{'+'.join(canonical) or '{}'} is not a face", canonical)
        return canonical

    def parse_face(self, text: str) -> Face:
        """
        Parse a face written ``v1+v2`` or ``v1,v2``.

        Raises
        ------
            UnknownFace
                If the vertices do not form a face.

        Examples
        --------

            >>> from dualcat.complexes import simplex
            >>> simplex(["a", "b", "c"]).parse_face("c,a")
            ('a', 'c')
        """
        separator = "+" if "+" in text else ","
        vertices = [
            vertex.strip() for vertex in text.split(separator) if vertex.strip()
        ]
        return self.check_face(vertices)

    def face_poset(self) -> FiniteCategory:
        """Return the cached face poset."""
        if self._poset is None:
            self._poset = face_poset(self)
        return self._poset

    def to_json(self) -> Dict[str, Any]:
        """Return the complex JSON form."""
        return {
            "vertices": list(self._vertices),
            "facets": [list(facet) for facet in self._facets],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "SimplicialComplex":
        """
        Build a complex from its JSON form.

        An explicit ``faces`` list may replace ``facets``; it must then be
        closed under taking non-empty subfaces.

        Raises
        ------
            InputError
                If the data does not have the complex JSON shape.
            InvalidComplex
                If a face list misses a subface of one of its faces.
        """
        try:
            vertices = [str(vertex) for vertex in data["vertices"]]
            if "faces" in data:
                faces = [tuple(sorted(str(v) for v in face)) for face in data["faces"]]
            else:
                faces = [[str(v) for v in facet] for facet in data.get("facets", [])]
        except (KeyError, TypeError, AttributeError) as error:
            raise InputError(f"malformed complex data: {error}") from error
        if "faces" in data:
            listed = set(faces)
            for face in sorted(listed, key=_face_key):
                if len(face) == 1:
                    continue
                for missing in combinations(face, len(face) - 1):
                    if missing not in listed:
                        raise InvalidComplex(
                            f"face {'+'.join(missing)} of {'+'.join(face)} is missing",
                            missing,
                        )
        return cls(vertices, faces)

    def __eq__(self, other) -> bool:
        """Return self==other."""
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._vertices == other._vertices and self._facets == other._facets

    def __hash__(self) -> int:
        """Return hash(self)."""
        return hash((self._vertices, self._facets))

    def __repr__(self) -> str:
        """Return repr(self)."""
        facets = ", ".join("+".join(facet) for facet in self._facets)
        return f"SimplicialComplex({{{facets}}})"


def _maximal_faces(candidates: Iterable[Face]) -> Tuple[Face, ...]:
    kept: List[frozenset] = []
    for face in sorted(set(candidates), key=lambda face: (-len(face), face)):
        members = frozenset(face)
        if not any(members <= other for other in kept):
            kept.append(members)
    return tuple(sorted((tuple(sorted(face)) for face in kept), key=_face_key))


def void_complex() -> SimplicialComplex:
    """Return the complex without faces."""
    return SimplicialComplex([], [])


def simplex(vertices: Iterable[str]) -> SimplicialComplex:
    """
    Return the full simplex on *vertices*.

    Examples
    --------

        >>> from dualcat.complexes import simplex
        >>> simplex(["a", "b", "c"]).f_vector()
        [3, 3, 1]
    """
    vertices = list(vertices)
    return SimplicialComplex(vertices, [vertices] if vertices else [])


def simplex_boundary(vertices: Iterable[str]) -> SimplicialComplex:
    """
    Return the boundary of the simplex on *vertices*.

    The boundary of a vertex is the void complex.
    """
    vertices = list(vertices)
    if len(vertices) <= 1:
        return void_complex()
    return SimplicialComplex(vertices, combinations(vertices, len(vertices) - 1))


def face_poset(complex_: SimplicialComplex) -> FiniteCategory:
    """
    Return the poset of faces ordered by inclusion.

    Objects are face identifiers such as ``v1+v2``.

    Examples
    --------

        >>> from dualcat.complexes import face_poset, simplex_boundary
        >>> poset = face_poset(simplex_boundary(["a", "b", "c"]))
        >>> len(poset.objects), len(poset.morphisms)
        (6, 6)
    """
    objects = ["+".join(face) for face in complex_.faces]
    relations = [
        ("+".join(smaller), "+".join(face))
        for face in complex_.faces
        if len(face) > 1
        for smaller in combinations(face, len(face) - 1)
    ]
    return poset_category(objects, relations)


def link(
    complex_: SimplicialComplex, face: Union[str, Iterable[str]]
) -> SimplicialComplex:
    """
    Return the link of a face.

    Raises
    ------
        UnknownFace
            If *face* is not a face.

    Examples
    --------

        >>> from dualcat.complexes import link, simplex_boundary
        >>> link(simplex_boundary(["a", "b", "c", "d"]), "a").facets
        (('b', 'c'), ('b', 'd'), ('c', 'd'))
        >>> link(simplex_boundary(["a", "b", "c"]), "a+b").is_void
        True
    """
    members = set(complex_.check_face(face))
    facets = [
        [vertex for vertex in facet if vertex not in members]
        for facet in complex_.facets
        if members <= set(facet) and len(facet) > len(members)
    ]
    vertices = sorted({vertex for facet in facets for vertex in facet})
    return SimplicialComplex(vertices, facets)


def join(first: SimplicialComplex, second: SimplicialComplex) -> SimplicialComplex:
    """
    Return the join of two complexes on disjoint vertex sets.

    Raises
    ------
        VertexClash
            If the complexes share a vertex.

    Examples
    --------

        >>> from dualcat.complexes import SimplicialComplex, join
        >>> points = SimplicialComplex(["a", "b"], [])
        >>> others = SimplicialComplex(["c", "d"], [])
        >>> join(points, others).f_vector()
        [4, 4]
    """
    shared = set(first.vertices) & set(second.vertices)
    if shared:
        raise VertexClash(f"shared vertices {sorted(shared)}", sorted(shared))
    vertices = list(first.vertices) + list(second.vertices)
    if first.is_void or second.is_void:
        facets = list(first.facets) + list(second.facets)
    else:
        facets = [left + right for left in first.facets for right in second.facets]
    return SimplicialComplex(vertices, facets)


def order_complex(poset: FiniteCategory) -> SimplicialComplex:
    """
    Return the complex of strict chains of a poset.

    Raises
    ------
        NotAPoset
            If a hom-set has more than one element.

    Examples
    --------

        >>> from dualcat.categories import poset_category
        >>> from dualcat.complexes import order_complex
        >>> square = poset_category(
        ...     ["0", "1", "2", "3"], [("0", "2"), ("0", "3"), ("1", "2"), ("1", "3")]
        ... )
        >>> order_complex(square).f_vector()
        [4, 4]
    """
    if not is_poset(poset):
        raise NotAPoset("parallel morphisms found")
    nerve = nondegenerate_nerve(poset)
    return SimplicialComplex(poset.objects, [chain.objects for chain in nerve])


def _coboundary(complex_: SimplicialComplex, degree: int, augmented: bool):
    lower = complex_.faces_of_dimension(degree)
    if degree == -1:
        lower = [()] if augmented else []
    upper = complex_.faces_of_dimension(degree + 1)
    positions = {face: index for index, face in enumerate(lower)}
    matrix = zeros(len(upper), len(lower))
    for row, face in enumerate(upper):
        for index in range(len(face)):
            column = positions.get(face[:index] + face[index + 1 :])
            if column is not None:
                matrix[row, column] = (-1) ** index
    return matrix


def simplicial_cochain_complex(
    complex_: SimplicialComplex, augmented: bool = False
) -> IntegerChainComplex:
    """
    Return the simplicial cochain complex.

    Faces are oriented by their sorted vertices. The augmented complex holds the
    empty face in degree ``-1``, even for the void complex.
    """
    bases: Dict[int, Sequence[Face]] = {
        degree: complex_.faces_of_dimension(degree)
        for degree in range(complex_.dimension + 1)
    }
    start = 0
    if augmented:
        bases[-1] = [()]
        start = -1
    differentials = {
        degree: _coboundary(complex_, degree, augmented)
        for degree in range(start, complex_.dimension)
    }
    return IntegerChainComplex(bases, differentials, cochain=True)


def simplicial_chain_complex(
    complex_: SimplicialComplex, augmented: bool = False
) -> IntegerChainComplex:
    """Return the simplicial chain complex, the transpose of the cochain one."""
    cochains = simplicial_cochain_complex(complex_, augmented)
    return IntegerChainComplex(
        {degree: cochains.basis(degree) for degree in cochains.degrees},
        {
            degree + 1: cochains.differential(degree).T.copy()
            for degree in cochains.degrees
            if degree + 1 in cochains.degrees
        },
    )


def _graded(complex_: IntegerChainComplex) -> GradedGroups:
    return GradedGroups(
        {degree: homology(complex_, degree) for degree in complex_.degrees}
    )


def reduced_cohomology(complex_: SimplicialComplex) -> GradedGroups:
    """
    Compute the reduced cohomology, degrees starting at ``-1``.

    Examples
    --------

        >>> from dualcat.complexes import (
        ...     reduced_cohomology, simplex_boundary, void_complex,
        ... )
        >>> print(reduced_cohomology(void_complex()))
        -1: Z
        >>> print(reduced_cohomology(simplex_boundary(["a", "b", "c"])))
        1: Z
    """
    return _graded(simplicial_cochain_complex(complex_, augmented=True))


def cohomology(complex_: SimplicialComplex) -> GradedGroups:
    """Compute the cohomology of a complex."""
    return _graded(simplicial_cochain_complex(complex_))


def homology_groups(complex_: SimplicialComplex, reduced: bool = False) -> GradedGroups:
    """
    Compute the (reduced) homology of a complex.

    Examples
    --------

        >>> from dualcat.complexes import homology_groups, simplex
        >>> print(homology_groups(simplex(["a", "b"])))
        0: Z
        >>> print(homology_groups(simplex(["a", "b"]), reduced=True))
        0
    """
    return _graded(simplicial_chain_complex(complex_, augmented=reduced))


def _check_full(category: FiniteCategory, subcategory: FiniteCategory) -> None:
    objects = set(category.objects)
    for obj in subcategory.objects:
        if obj not in objects:
            raise NotFullSubcategory(f"object {obj!r} is not in the category", obj)
    for source in subcategory.objects:
        for target in subcategory.objects:
            if set(subcategory.hom(source, target)) != set(
                category.hom(source, target)
            ):
                raise NotFullSubcategory(
                    f"hom-set from {source!r} to {target!r} differs", (source, target)
                )


def relative_cohomology(
    category: FiniteCategory,
    subcategory: Union[FiniteCategory, Iterable[str]],
    module: Optional[CModule] = None,
) -> GradedGroups:
    """
    Compute the relative cohomology ``H^*(C, C'; F)``.

    The cochain complex is made of the normalized chains of *C* not contained
    in *C'*.

    Arguments
    ---------
        category: :class:`FiniteCategory <dualcat.categories.FiniteCategory>`
            The category *C*.
        subcategory: :class:`FiniteCategory <dualcat.categories.FiniteCategory>`
            A full subcategory *C'*, or its objects.
        module: :class:`CModule <dualcat.modules.CModule>`
            A left module *F*, the constant module by default.

    Raises
    ------
        NotFullSubcategory
            If *C'* is not a full subcategory of *C*.
        UnknownObject
            If an object of *C'* is missing from *C*.

    Examples
    --------

        >>> from dualcat.categories import poset_category
        >>> from dualcat.complexes import relative_cohomology
        >>> square = poset_category(
        ...     ["0", "1", "2", "3"], [("0", "2"), ("0", "3"), ("1", "2"), ("1", "3")]
        ... )
        >>> print(relative_cohomology(square, ["1"]))
        1: Z
    """
    if not isinstance(subcategory, FiniteCategory):
        names = list(subcategory)
        for name in names:
            category.check_object(name)
        subcategory = category.full_subcategory(names)
    _check_full(category, subcategory)
    if module is None:
        module = constant_module(category)
    resolution = bar_resolution(category)
    inside = set(subcategory.objects)
    keep: Dict[int, List[int]] = {}
    for degree in resolution.degrees:
        indices = []
        offset = 0
        for summand in resolution.terms(degree):
            rank = module.rank(summand.obj)
            if not set(summand.chain.objects) <= inside:
                indices.extend(range(offset, offset + rank))
            offset += rank
        keep[degree] = indices
    complex_ = hom_complex(resolution, module).restricted(keep)
    return _graded(complex_)


def category_local_cohomology(
    category: FiniteCategory, obj: str, method: Union[Method, str] = Method.EXT
) -> GradedGroups:
    """
    Compute ``H^*(C; P_x)`` by the ``ext`` or the ``pair`` method.

    Raises
    ------
        UnknownObject
            If *obj* is not an object.
        UnknownMethod
            If *method* is ``link`` or unknown.
        NotAPoset
            If the ``pair`` method is requested for a non-poset.
    """
    method = Method.parse(method)
    category.check_object(obj)
    if method is Method.EXT:
        return ext(category, None, standard_projective(category, obj))
    if method is Method.PAIR:
        if not is_poset(category):
            raise NotAPoset("the pair method needs a poset")
        order = reachability_order(category)
        outside = [other for other in category.objects if (obj, other) not in order]
        return relative_cohomology(category, outside)
    raise UnknownMethod(
        f"method {method.value!r} needs a simplicial complex", method.value
    )


def local_cohomology(
    complex_: SimplicialComplex,
    face: Union[str, Iterable[str]],
    method: Union[Method, str] = Method.LINK,
) -> GradedGroups:
    """
    Compute the local cohomology of a complex at a face.

    * ``link`` shifts the reduced cohomology of the link by ``dim x + 1``;
    * ``pair`` computes ``H^*(P, P - P_{≥x}; Z)`` over the face poset *P*;
    * ``ext`` computes ``Ext^*(Z, P_x)`` over the face poset.

    Raises
    ------
        UnknownFace
            If *face* is not a face.
        UnknownMethod
            If *method* is unknown.

    Examples
    --------

        >>> from dualcat.complexes import local_cohomology, simplex_boundary
        >>> sphere = simplex_boundary(["a", "b", "c", "d"])
        >>> print(local_cohomology(sphere, "a+b", "link"))
        2: Z
        >>> print(local_cohomology(sphere, "a+b", "pair"))
        2: Z
    """
    method = Method.parse(method)
    canonical = complex_.check_face(face)
    if method is Method.LINK:
        return reduced_cohomology(link(complex_, canonical)).shifted(len(canonical))
    return category_local_cohomology(
        complex_.face_poset(), "+".join(canonical), method
    )


def _atoms(poset: FiniteCategory) -> Dict[str, frozenset]:
    order = reachability_order(poset)
    minimal = [
        obj
        for obj in poset.objects
        if not any((other, obj) in order for other in poset.objects if other != obj)
    ]
    return {
        obj: frozenset(atom for atom in minimal if (atom, obj) in order)
        for obj in poset.objects
    }


def is_simplicial_poset(poset: FiniteCategory) -> bool:
    """
    Decide whether a poset is the face poset of a simplicial complex.

    Every element must be determined by its set of atoms, and the elements
    below it must realize every non-empty subset of those atoms, ordered by
    inclusion.

    Raises
    ------
        NotAPoset
            If a hom-set has more than one element.

    Examples
    --------

        >>> from dualcat.categories import poset_category
        >>> from dualcat.complexes import is_simplicial_poset
        >>> chain = poset_category(["0", "1", "2"], [("0", "1"), ("1", "2")])
        >>> is_simplicial_poset(chain)
        False
    """
    if not is_poset(poset):
        raise NotAPoset("parallel morphisms found")
    atoms = _atoms(poset)
    if len(set(atoms.values())) != len(atoms):
        return False
    order = reachability_order(poset)
    for obj, below in atoms.items():
        lower = [other for other in poset.objects if (other, obj) in order]
        if len(lower) != 2 ** len(below) - 1:
            return False
        for first in lower:
            for second in lower:
                if ((first, second) in order) != (atoms[first] <= atoms[second]):
                    return False
    return True


def simplicial_complex_of(poset: FiniteCategory) -> SimplicialComplex:
    """
    Return the complex whose face poset is *poset*, vertices being its atoms.

    Raises
    ------
        NotAPoset
            If a hom-set has more than one element.
        InvalidComplex
            If the poset is not simplicial.
    """
    if not is_simplicial_poset(poset):
        raise InvalidComplex("the poset is not simplicial")
    atoms = _atoms(poset)
    vertices = sorted({atom for below in atoms.values() for atom in below})
    return SimplicialComplex(vertices, [sorted(below) for below in atoms.values()])


def is_closed_surface(complex_: SimplicialComplex) -> bool:
    """
    Decide whether a complex triangulates a closed surface.

    Every facet must be a triangle, every edge must lie in exactly two
    triangles and every vertex link must be a single cycle.

    Examples
    --------

        >>> from dualcat.complexes import is_closed_surface, simplex_boundary
        >>> is_closed_surface(simplex_boundary(["a", "b", "c", "d"]))
        True
        >>> is_closed_surface(simplex_boundary(["a", "b", "c"]))
        False
    """
    if complex_.is_void or any(len(facet) != 3 for facet in complex_.facets):
        return False
    counts: Dict[Face, int] = {}
    for facet in complex_.facets:
        for edge in combinations(facet, 2):
            counts[edge] = counts.get(edge, 0) + 1
    if any(count != 2 for count in counts.values()):
        return False
    for vertex in complex_.vertices:
        graph = nx.Graph()
        graph.add_edges_from(link(complex_, [vertex]).facets)
        if graph.number_of_nodes() < 3 or not nx.is_connected(graph):
            return False
        if any(degree != 2 for _, degree in graph.degree()):
            return False
    return True


def join_decomposition(
    complex_: SimplicialComplex, face: Union[str, Iterable[str]]
) -> Tuple[SimplicialComplex, SimplicialComplex]:
    """
    Split the neighbourhood of a face as joins.

    Returns the complexes ``closure(x) * link_x`` and ``boundary(x) * link_x``;
    their face posets are the full subcategories of faces joinable with *x*,
    and of those not containing *x*.

    Raises
    ------
        UnknownFace
            If *face* is not a face.
    """
    canonical = complex_.check_face(face)
    around = link(complex_, canonical)
    return join(simplex(canonical), around), join(simplex_boundary(canonical), around)


def load_complex(data: Mapping[str, Any]) -> SimplicialComplex:
    """
    Build a complex from its JSON form.

    Raises
    ------
        InputError
            If the data does not have the complex JSON shape.
        InvalidComplex
            If the face family is invalid.
    """
    return SimplicialComplex.from_json(data)


def object_faces(complex_: SimplicialComplex, selector: str) -> List[str]:
    """
    Parse a comma-separated list of faces written ``v1+v2``.

    Raises
    ------
        UnknownFace
            If some entry is not a face.
    """
    return [
        complex_.face_id(complex_.parse_face(entry))
        for entry in selector.split(",")
        if entry.strip()
    ]


def closure_objects(complex_: SimplicialComplex, faces: Iterable[str]) -> List[str]:
    """Return the identifiers of all faces of the subcomplex spanned by *faces*."""
    generated = [complex_.parse_face(face) for face in faces]
    if not generated:
        return []
    vertices = sorted({vertex for face in generated for vertex in face})
    return ["+".join(face) for face in SimplicialComplex(vertices, generated).faces]