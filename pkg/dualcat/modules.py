"""
Modules over finite loop-free categories.

A left module over a category *C* is a covariant functor from *C* to finitely
generated free abelian groups; a right module is a contravariant one. This module
defines them together with complexes of standard projectives, Bar resolutions,
the Hom and tensor complexes and the duality functor on complexes of
projectives.

Conventions:

* the matrix of a morphism ``f: x -> y`` has shape ``(rank y, rank x)`` for a
  left module and ``(rank x, rank y)`` for a right module;
* a right module over *C* is the same data as a left module over the opposite
  category;
* an entry of a :class:`ProjectiveComplex` differential between a row summand
  ``P_a`` and a column summand ``P_b`` is an integer combination of morphisms
  ``a -> b``, acting ``P_b -> P_a`` by precomposition.
"""

# pylint: disable=too-many-arguments,too-many-locals,too-many-lines

import logging
from collections import namedtuple
from collections.abc import Mapping as MappingABC
from functools import lru_cache
from typing import Any, Dict, Iterator, List, Mapping, Optional, Sequence, Set, Tuple

import numpy as np  # type: ignore

# pylint: disable=import-error
from sortedcontainers import SortedDict  # type: ignore

from dualcat.categories import (
    Chain,
    FiniteCategory,
    chain_face,
    nondegenerate_nerve,
    opposite,
)
from dualcat.errors import (
    InputError,
    NotFunctorial,
    NotPointwiseFree,
    VarianceMismatch,
)
from dualcat.integral import (
    ChainMap,
    FgAbelianGroup,
    HomologyBasis,
    IntegerChainComplex,
    IntMatrix,
    homology,
    homology_basis,
    identity,
    induced_map,
    matmul,
    matrix_equal,
    smith_decomposition,
    zeros,
)
from dualcat.values import Variance

LOGGER = logging.getLogger(__name__)


class CModule:
    """
    Pointwise-free module over a finite category.

    Missing matrices are allowed only when one side has rank zero; identities
    always act as identity matrices. Functoriality is checked on every
    composable pair.

    Examples
    --------

        >>> from dualcat.categories import poset_category
        >>> from dualcat.modules import CModule
        >>> chain = poset_category(["0", "1"], [("0", "1")])
        >>> module = CModule(chain, "left", {"0": 1, "1": 2}, {"0<1": [[1], [0]]})
        >>> module.action("0<1").tolist()
        [[1], [0]]
    """

    __slots__ = ("_category", "_variance", "_ranks", "_maps", "_labels")

    def __init__(
        self,
        category: FiniteCategory,
        variance,
        ranks: Mapping[str, int],
        maps: Optional[Mapping[str, Any]] = None,
        labels: Optional[Mapping[str, Sequence[str]]] = None,
    ) -> None:
        """
        Initialize a :class:`CModule` instance.

        Arguments
        ---------
            category: :class:`FiniteCategory <dualcat.categories.FiniteCategory>`
                The base category.
            variance: :class:`Variance <dualcat.values.Variance>`
                ``left`` or ``right``.
            ranks: :class:`Mapping <python:typing.Mapping>`
                Rank per object, missing objects have rank zero.
            maps: :class:`Mapping <python:typing.Mapping>`
                Matrix per non-identity morphism.
            labels: :class:`Mapping <python:typing.Mapping>`
                Basis labels per object.

        Raises
        ------
            InputError
                If a rank is negative or a label list has the wrong length.
            UnknownObject
                If a rank is given for an unknown object.
            UnknownMorphism
                If a matrix is given for an unknown morphism.
            NotFunctorial
                If a matrix is missing or misshapen, or if identities or
                composition are not respected.
        """
        self._category = category
        self._variance = Variance(variance)
        for obj in ranks:
            category.check_object(obj)
        self._ranks: Dict[str, int] = {}
        self._labels: Dict[str, Tuple[str, ...]] = {}
        for obj in category.objects:
            rank = int(ranks.get(obj, 0))
            if rank < 0:
                raise InputError(f"negative rank {rank} at {obj!r}", obj)
            self._ranks[obj] = rank
            names = tuple(
                (labels or {}).get(obj, [str(index) for index in range(rank)])
            )
            if len(names) != rank:
                raise InputError(f"{len(names)} labels for rank {rank} at {obj!r}", obj)
            self._labels[obj] = names

        given = dict(maps or {})
        for name in given:
            category.morphism(name)
        self._maps: Dict[str, IntMatrix] = {}
        for morphism in category.arrows:
            expected = self._shape(morphism.src, morphism.dst)
            entries = given.get(morphism.id)
            is_identity = morphism.src == morphism.dst
            if entries is None:
                if is_identity:
                    matrix = identity(expected[0])
                elif 0 in expected:
                    matrix = zeros(*expected)
                else:
                    raise NotFunctorial(
                        f"missing matrix for morphism {morphism.id!r}", morphism.id
                    )
            else:
                matrix = np.array(entries, dtype=object)
                if matrix.size == 0:
                    matrix = zeros(*expected)
                if matrix.shape != expected:
                    raise NotFunctorial(
                        f"matrix of {morphism.id!r} has shape {matrix.shape}, "
                        f"expected {expected}",
                        morphism.id,
                    )
                if is_identity and not matrix_equal(matrix, identity(expected[0])):
                    raise NotFunctorial(
                        f"identity {morphism.id!r} does not act as the identity",
                        morphism.id,
                    )
            self._maps[morphism.id] = matrix

        for second, first in category.composable_pairs():
            if self._variance is Variance.LEFT:
                product = matmul(self._maps[second], self._maps[first])
            else:
                product = matmul(self._maps[first], self._maps[second])
            if not matrix_equal(product, self._maps[category.compose(second, first)]):
                raise NotFunctorial(
                    f"composition of {second!r} and {first!r} is not preserved",
                    (second, first),
                )

    def _shape(self, source: str, target: str) -> Tuple[int, int]:
        if self._variance is Variance.LEFT:
            return self._ranks[target], self._ranks[source]
        return self._ranks[source], self._ranks[target]

    @property
    def category(self) -> FiniteCategory:
        """Return the base category."""
        return self._category

    @property
    def variance(self) -> Variance:
        """Return the variance."""
        return self._variance

    @property
    def ranks(self) -> Dict[str, int]:
        """Return the rank of every object."""
        return dict(self._ranks)

    def rank(self, obj: str) -> int:
        """Return the rank at *obj*."""
        return self._ranks[self._category.check_object(obj)]

    def labels(self, obj: str) -> Tuple[str, ...]:
        """Return the basis labels at *obj*."""
        return self._labels[self._category.check_object(obj)]

    def action(self, name: str) -> IntMatrix:
        """Return the matrix of a morphism, identities included."""
        self._category.morphism(name)
        return self._maps[name]

    def values(self) -> Dict[str, FgAbelianGroup]:
        """Return the value at every object."""
        return {obj: FgAbelianGroup.free(rank) for obj, rank in self._ranks.items()}

    def as_opposite(self) -> "CModule":
        """
        Return the same data seen over the opposite category.

        A right module becomes a left module and conversely.
        """
        return CModule(
            opposite(self._category),
            self._variance.flip(),
            self._ranks,
            self._non_identity_maps(),
            self._labels,
        )

    def direct_sum(self, other: "CModule") -> "CModule":
        """
        Return the direct sum with another module.

        Raises
        ------
            VarianceMismatch
                If the modules do not share their category and variance.
        """
        _check_side(self._category, other, self._variance)
        maps = {}
        for name, matrix in self._non_identity_maps().items():
            addend = other.action(name)
            block = zeros(
                matrix.shape[0] + addend.shape[0], matrix.shape[1] + addend.shape[1]
            )
            block[: matrix.shape[0], : matrix.shape[1]] = matrix
            block[matrix.shape[0] :, matrix.shape[1] :] = addend
            maps[name] = block
        return CModule(
            self._category,
            self._variance,
            {obj: rank + other.rank(obj) for obj, rank in self._ranks.items()},
            maps,
        )

    def _non_identity_maps(self) -> Dict[str, IntMatrix]:
        return {
            morphism.id: self._maps[morphism.id]
            for morphism in self._category.morphisms
        }

    def to_json(self) -> Dict[str, Any]:
        """Return the module JSON form."""
        return {
            "variance": self._variance.value,
            "ranks": dict(self._ranks),
            "maps": {
                name: [[int(entry) for entry in row] for row in matrix.tolist()]
                for name, matrix in self._non_identity_maps().items()
            },
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any], category: FiniteCategory) -> "CModule":
        """
        Build a module from its JSON form.

        Raises
        ------
            InputError
                If the data does not have the module JSON shape.
        """
        try:
            variance = Variance(data["variance"])
            ranks = {str(obj): int(rank) for obj, rank in data["ranks"].items()}
            maps = {str(name): matrix for name, matrix in data.get("maps", {}).items()}
        except (KeyError, TypeError, ValueError, AttributeError) as error:
            raise InputError(f"malformed module data: {error}") from error
        return cls(category, variance, ranks, maps)

    def __eq__(self, other) -> bool:
        """Return self==other."""
        if not isinstance(other, CModule):
            return NotImplemented
        return (
            self._variance == other._variance
            and self._ranks == other._ranks
            and self._category == other._category
            and all(
                matrix_equal(matrix, other._maps[name])
                for name, matrix in self._maps.items()
            )
        )

    __hash__ = None  # type: ignore

    def __repr__(self) -> str:
        """Return repr(self)."""
        ranks = ", ".join(f"{obj}: {rank}" for obj, rank in self._ranks.items())
        return f"CModule({self._variance.value}, {{{ranks}}})"


def _check_side(category: FiniteCategory, module: CModule, variance: Variance) -> None:
    if module.category is not category and module.category != category:
        raise VarianceMismatch("the module lives over another category")
    if module.variance is not variance:
        raise VarianceMismatch(
            f"expected a {variance.value} module, got a {module.variance.value} one"
        )


def standard_projective(
    category: FiniteCategory, obj: str, variance=Variance.LEFT
) -> CModule:
    """
    Return the standard projective module at *obj*.

    The left projective is ``y ↦ Z[Hom(obj, y)]`` with postcomposition, the right
    one ``y ↦ Z[Hom(y, obj)]`` with precomposition. Basis labels are morphism
    identifiers.

    Raises
    ------
        UnknownObject
            If *obj* is not an object.

    Examples
    --------

        >>> from dualcat.categories import validate_category
        >>> from dualcat.modules import standard_projective
        >>> category = validate_category(
        ...     ["x", "y"], [("alpha", "x", "y"), ("beta", "x", "y")]
        ... )
        >>> standard_projective(category, "x").ranks
        {'x': 1, 'y': 2}
    """
    category.check_object(obj)
    variance = Variance(variance)
    if variance is Variance.LEFT:
        bases = {other: category.hom(obj, other) for other in category.objects}
    else:
        bases = {other: category.hom(other, obj) for other in category.objects}
    positions = {
        other: {name: index for index, name in enumerate(basis)}
        for other, basis in bases.items()
    }
    maps = {}
    for morphism in category.morphisms:
        if variance is Variance.LEFT:
            source, target = morphism.src, morphism.dst
        else:
            source, target = morphism.dst, morphism.src
        matrix = zeros(len(bases[target]), len(bases[source]))
        for column, name in enumerate(bases[source]):
            if variance is Variance.LEFT:
                image = category.compose(morphism.id, name)
            else:
                image = category.compose(name, morphism.id)
            matrix[positions[target][image], column] = 1
        maps[morphism.id] = matrix
    return CModule(
        category,
        variance,
        {other: len(basis) for other, basis in bases.items()},
        maps,
        bases,
    )


def constant_module(category: FiniteCategory, variance=Variance.LEFT) -> CModule:
    """
    Return the constant module: ``Z`` everywhere, identities everywhere.

    Examples
    --------

        >>> from dualcat.categories import poset_category
        >>> from dualcat.modules import constant_module
        >>> chain = poset_category(["0", "1"], [("0", "1")])
        >>> constant_module(chain).action("0<1").tolist()
        [[1]]
    """
    return CModule(
        category,
        variance,
        {obj: 1 for obj in category.objects},
        {morphism.id: [[1]] for morphism in category.morphisms},
    )


def _is_constant(category: FiniteCategory, module: CModule) -> bool:
    return module.variance is Variance.LEFT and module == constant_module(category)


class Summand(namedtuple("Summand", ["obj", "label", "chain"])):
    """
    Tagged standard projective summand of a :class:`ProjectiveComplex`.

    It contains three fields:

    * ``obj``, the object *a* of the projective ``P_a``;
    * ``label``, a label unique within its degree;
    * ``chain``, the indexing chain for Bar resolutions or :data:`None`.
    """

    __slots__ = ()

    def __new__(cls, obj: str, label: str, chain: Optional[Chain] = None):
        """Create a new summand."""
        return super().__new__(cls, obj, label, chain)


Entries = Dict[Tuple[int, int], Dict[str, int]]


class ProjectiveComplex:
    """
    Bounded complex of finite direct sums of left standard projectives.

    The differential starting at degree *n* is stored sparsely as a mapping
    ``(row, col) -> {morphism: coefficient}`` where *row* indexes the summands
    of the target degree and *col* those of degree *n*.
    """

    __slots__ = ("_category", "_terms", "_entries", "_cochain", "_augmentation")

    def __init__(
        self,
        category: FiniteCategory,
        terms: Mapping[int, Sequence[Summand]],
        entries: Mapping[int, Entries],
        cochain: bool = False,
        augmentation: Optional[Tuple[CModule, Sequence[Sequence[int]]]] = None,
    ) -> None:
        """
        Initialize a :class:`ProjectiveComplex` instance.

        Arguments
        ---------
            category: :class:`FiniteCategory <dualcat.categories.FiniteCategory>`
                The base category.
            terms: :class:`Mapping <python:typing.Mapping>`
                Summands per degree.
            entries: :class:`Mapping <python:typing.Mapping>`
                Sparse differentials keyed by source degree.
            cochain: bool
                The direction flag.
            augmentation: tuple
                A left module and, per degree 0 summand ``P_x``, the vector of
                ``F(x)`` image of the identity of *x*.

        Raises
        ------
            ValueError
                If an entry does not fit the summands.
        """
        self._category = category
        self._cochain = cochain
        self._terms: Dict[int, Tuple[Summand, ...]] = {
            int(degree): tuple(summands) for degree, summands in sorted(terms.items())
        }
        step = self.step
        self._entries: Dict[int, Entries] = {}
        for degree, table in entries.items():
            sources = self.terms(degree)
            targets = self.terms(degree + step)
            for (row, col), combination in table.items():
                if not (0 <= row < len(targets) and 0 <= col < len(sources)):
                    raise ValueError(
                        f"entry {(row, col)} out of range at degree {degree}"
                    )
                allowed = category.hom(targets[row].obj, sources[col].obj)
                for name in combination:
                    if name not in allowed:
                        raise ValueError(
                            f"{name!r} is not a morphism {targets[row].obj} -> "
                            f"{sources[col].obj}"
                        )
            self._entries[int(degree)] = dict(table)
        if augmentation is not None:
            module, vectors = augmentation
            _check_side(category, module, Variance.LEFT)
            summands = self.terms(0)
            if len(vectors) != len(summands):
                raise ValueError(
                    "one augmentation vector per degree 0 summand expected"
                )
            for summand, vector in zip(summands, vectors):
                if len(vector) != module.rank(summand.obj):
                    raise ValueError(f"augmentation vector of wrong size at {summand}")
            augmentation = (module, tuple(tuple(vector) for vector in vectors))
        self._augmentation = augmentation

    @property
    def category(self) -> FiniteCategory:
        """Return the base category."""
        return self._category

    @property
    def cochain(self) -> bool:
        """Return the direction flag."""
        return self._cochain

    @property
    def step(self) -> int:
        """Return the degree shift of the differential."""
        return 1 if self._cochain else -1

    @property
    def degrees(self) -> List[int]:
        """Return the sorted degrees."""
        return list(self._terms)

    @property
    def lo(self) -> int:  # pylint: disable=invalid-name
        """Return the lowest degree."""
        return min(self._terms) if self._terms else 0

    @property
    def hi(self) -> int:  # pylint: disable=invalid-name
        """Return the highest degree."""
        return max(self._terms) if self._terms else -1

    @property
    def augmentation(self) -> Optional[Tuple[CModule, Tuple[Tuple[int, ...], ...]]]:
        """Return the augmentation, if any."""
        return self._augmentation

    def terms(self, degree: int) -> Tuple[Summand, ...]:
        """Return the summands at *degree*."""
        return self._terms.get(degree, ())

    def entries(self, degree: int) -> Entries:
        """Return the sparse differential starting at *degree*."""
        return self._entries.get(degree, {})

    def sizes(self) -> Dict[int, int]:
        """Return the number of summands per degree."""
        return {degree: len(summands) for degree, summands in self._terms.items()}

    def _evaluated_bases(self, obj: str):
        bases = {}
        positions = {}
        for degree, summands in self._terms.items():
            labels: List[Tuple[str, str]] = []
            indices: List[Dict[str, int]] = []
            for summand in summands:
                names = self._category.hom(summand.obj, obj)
                indices.append(
                    {name: len(labels) + index for index, name in enumerate(names)}
                )
                labels.extend((summand.label, name) for name in names)
            bases[degree] = labels
            positions[degree] = indices
        return bases, positions

    def evaluate(self, obj: str) -> IntegerChainComplex:
        """
        Evaluate the complex at *obj*.

        The summand ``P_a`` contributes the basis ``Hom(a, obj)``, labelled by
        ``(summand label, morphism)`` pairs.

        Raises
        ------
            UnknownObject
                If *obj* is not an object.
            NotAComplex
                If the evaluated differentials do not compose to zero.
        """
        self._category.check_object(obj)
        bases, positions = self._evaluated_bases(obj)
        differentials = {}
        for degree, table in self._entries.items():
            target = degree + self.step
            matrix = zeros(len(bases.get(target, ())), len(bases[degree]))
            for (row, col), combination in table.items():
                for name, column in positions[degree][col].items():
                    for morphism, coefficient in combination.items():
                        image = self._category.compose(name, morphism)
                        matrix[positions[target][row][image], column] += coefficient
            differentials[degree] = matrix
        return IntegerChainComplex(bases, differentials, cochain=self._cochain)

    def augmented(self, obj: str) -> IntegerChainComplex:
        """
        Evaluate the augmented complex at *obj*.

        The augmentation target ``F(obj)`` sits in degree -1.

        Raises
        ------
            ValueError
                If the complex has no augmentation.
        """
        if self._augmentation is None or self._cochain:
            raise ValueError("the complex has no augmentation")
        module, vectors = self._augmentation
        evaluated = self.evaluate(obj)
        bases = {degree: evaluated.basis(degree) for degree in evaluated.degrees}
        bases[-1] = [("augmentation", label) for label in module.labels(obj)]
        differentials = {
            degree: evaluated.differential(degree) for degree in evaluated.degrees
        }
        augmentation = zeros(module.rank(obj), evaluated.rank(0))
        column = 0
        for summand, vector in zip(self.terms(0), vectors):
            source = np.array([[entry] for entry in vector], dtype=object).reshape(
                len(vector), 1
            )
            for name in self._category.hom(summand.obj, obj):
                image = matmul(module.action(name), source)
                augmentation[:, column] = image[:, 0]
                column += 1
        differentials[0] = augmentation
        return IntegerChainComplex(bases, differentials)

    def verify(self) -> None:
        """
        Evaluate the complex at every object.

        Raises
        ------
            NotAComplex
                If some evaluation is not a complex.
        """
        for obj in self._category.objects:
            self.evaluate(obj)

    def _augmented_action(self, module: CModule, degree: int, name: str) -> IntMatrix:
        morphism = self._category.morphism(name)
        if degree < 0:
            return module.action(name)
        _, sources = self._evaluated_bases(morphism.src)
        _, targets = self._evaluated_bases(morphism.dst)
        matrix = zeros(
            sum(map(len, targets.get(degree, ()))),
            sum(map(len, sources.get(degree, ()))),
        )
        for summand, positions in enumerate(sources.get(degree, ())):
            for element, column in positions.items():
                image = self._category.compose(name, element)
                matrix[targets[degree][summand][image], column] = 1
        return matrix

    def syzygy_is_projective(self, degree: int) -> bool:
        """
        Decide whether the syzygy at *degree* is a projective module.

        The syzygy is the kernel of the augmented differential leaving
        ``degree - 1``; at degree 0 it is the augmentation target itself. It is
        projective exactly when the resolution can be cut to length *degree*.

        A submodule ``K`` of a complex of projectives is tested through its
        top ``K(x) / sum of the images of K(y) for y -> x``: ``K`` is projective
        if and only if every top is free and ``K(x)`` has rank
        ``sum_y rank top(y) * |Hom(y, x)|``.

        Raises
        ------
            ValueError
                If the complex has no augmentation.

        Examples
        --------

            >>> from dualcat.categories import poset_category
            >>> from dualcat.modules import bar_resolution
            >>> circle = poset_category(
            ...     ["a", "b", "c", "d"],
            ...     [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
            ... )
            >>> resolution = bar_resolution(circle)
            >>> resolution.syzygy_is_projective(0)
            False
            >>> resolution.syzygy_is_projective(1)
            True
        """
        if self._augmentation is None or self._cochain:
            raise ValueError("the complex has no augmentation")
        category = self._category
        module = self._augmentation[0]
        level = degree - 1
        kernels: Dict[str, Tuple[IntMatrix, IntMatrix]] = {}
        for obj in category.objects:
            decomposition = smith_decomposition(self.augmented(obj).differential(level))
            rank = decomposition.rank
            kernels[obj] = (
                decomposition.right[:, rank:],
                decomposition.right_inverse[rank:, :],
            )
        tops: Dict[str, int] = {}
        for obj in category.objects:
            basis, coordinates = kernels[obj]
            images = [
                matmul(
                    coordinates,
                    matmul(
                        self._augmented_action(module, level, morphism.id),
                        kernels[morphism.src][0],
                    ),
                )
                for morphism in category.morphisms
                if morphism.dst == obj
            ]
            radical = (
                np.concatenate(images, axis=1) if images else zeros(basis.shape[1], 0)
            )
            decomposition = smith_decomposition(radical)
            if any(abs(order) != 1 for order in decomposition.divisors):
                LOGGER.debug("syzygy %s has a top with torsion at %r", degree, obj)
                return False
            tops[obj] = basis.shape[1] - decomposition.rank
        for obj in category.objects:
            expected = sum(
                count * len(category.hom(source, obj)) for source, count in tops.items()
            )
            if kernels[obj][0].shape[1] != expected:
                LOGGER.debug("syzygy %s is not projective at %r", degree, obj)
                return False
        return True

    def __repr__(self) -> str:
        """Return repr(self)."""
        kind = "cochain" if self._cochain else "chain"
        return f"ProjectiveComplex({kind}, {self.sizes()})"


class GradedGroups(MappingABC):
    """
    Graded finitely generated abelian groups.

    Only non-trivial groups are stored; any other degree reads as the trivial
    group.

    Examples
    --------

        >>> from dualcat.integral import FgAbelianGroup
        >>> from dualcat.modules import GradedGroups
        >>> groups = GradedGroups({0: FgAbelianGroup.free(1), 2: FgAbelianGroup()})
        >>> print(groups)
        0: Z
        >>> groups.concentrated(), str(groups[5])
        (0, '0')
    """

    __slots__ = ("_groups",)

    def __init__(self, groups: Optional[Mapping[int, FgAbelianGroup]] = None) -> None:
        """Initialize a :class:`GradedGroups` instance."""
        self._groups = SortedDict(
            {int(degree): group for degree, group in (groups or {}).items() if group}
        )

    def __getitem__(self, degree: int) -> FgAbelianGroup:
        """Return the group at *degree*."""
        return self._groups.get(degree, FgAbelianGroup.trivial())

    def __iter__(self) -> Iterator[int]:
        """Return an iterator over the degrees of non-trivial groups."""
        return iter(self._groups)

    def __len__(self) -> int:
        """Return the number of non-trivial groups."""
        return len(self._groups)

    def __contains__(self, degree) -> bool:
        """Return :data:`True <python:True>` if the group at *degree* is non-trivial."""
        return degree in self._groups

    def support(self) -> List[int]:
        """Return the degrees of non-trivial groups."""
        return list(self._groups)

    def concentrated(self) -> Optional[int]:
        """Return the only degree of a non-trivial group, :data:`None` otherwise."""
        return self._groups.keys()[0] if len(self._groups) == 1 else None

    def shifted(self, shift: int) -> "GradedGroups":
        """Return the groups with degrees increased by *shift*."""
        return GradedGroups(
            {degree + shift: group for degree, group in self._groups.items()}
        )

    def ranks(self) -> Dict[int, int]:
        """Return the free ranks."""
        return {degree: group.rank for degree, group in self._groups.items()}

    @property
    def is_free(self) -> bool:
        """Return :data:`True <python:True>` if no group has torsion."""
        return all(group.is_free for group in self._groups.values())

    def euler_characteristic(self) -> int:
        """Return the alternating sum of the free ranks."""
        return sum(
            (-1) ** (degree % 2) * group.rank
            for degree, group in self._groups.items()
        )

    def to_json(self) -> Dict[str, list]:
        """Return the ``{degree: [rank, [torsion]]}`` form."""
        return {str(degree): group.to_json() for degree, group in self._groups.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> "GradedGroups":
        """Build graded groups from their JSON form."""
        return cls(
            {
                int(degree): FgAbelianGroup.from_json(value)
                for degree, value in data.items()
            }
        )

    def __eq__(self, other) -> bool:
        """Return self==other."""
        if not isinstance(other, GradedGroups):
            return NotImplemented
        return dict(self._groups) == dict(other._groups)

    def __hash__(self) -> int:
        """Return hash(self)."""
        return hash(tuple(self._groups.items()))

    def __str__(self) -> str:
        """Return str(self)."""
        if not self._groups:
            return "0"
        return ", ".join(f"{degree}: {group}" for degree, group in self._groups.items())

    def __repr__(self) -> str:
        """Return repr(self)."""
        return f"GradedGroups({{{str(self)}}})"


def _accumulate(
    table: Entries, key: Tuple[int, int], name: str, coefficient: int
) -> None:
    combination = table.setdefault(key, {})
    value = combination.get(name, 0) + coefficient
    if value:
        combination[name] = value
    else:
        combination.pop(name, None)
        if not combination:
            del table[key]


def bar_resolution_of_module(
    category: FiniteCategory, module: CModule
) -> ProjectiveComplex:
    """
    Build the normalized two-sided Bar resolution of a left module.

    The degree *n* term has one summand ``P_{x_n}`` per nondegenerate chain
    ``x_0 -> ... -> x_n`` and per basis vector of ``F(x_0)``. The face ``d_0``
    pushes the vector along the first arrow, interior faces compose and the last
    face precomposes the last arrow into the projective.

    Raises
    ------
        VarianceMismatch
            If *module* is not a left module over *category*.
    """
    _check_side(category, module, Variance.LEFT)
    nerve = nondegenerate_nerve(category)
    terms: Dict[int, List[Summand]] = {}
    positions: Dict[int, Dict[Tuple[Chain, int], int]] = {}
    for degree in range(nerve.dimension + 1):
        summands: List[Summand] = []
        index: Dict[Tuple[Chain, int], int] = {}
        for chain in nerve.chains(degree):
            rank = module.rank(chain.first)
            names = module.labels(chain.first)
            for vector in range(rank):
                index[chain, vector] = len(summands)
                label = str(chain) if rank == 1 else f"{chain}:{names[vector]}"
                summands.append(Summand(chain.last, label, chain))
        terms[degree] = summands
        positions[degree] = index

    entries: Dict[int, Entries] = {}
    for degree in range(1, nerve.dimension + 1):
        table: Entries = {}
        below = positions[degree - 1]
        for (chain, vector), column in positions[degree].items():
            unit = category.identity(chain.last)
            action = module.action(chain.arrows[0])
            face = nerve.face(chain, 0)
            for image in range(action.shape[0]):
                if action[image, vector]:
                    _accumulate(
                        table, (below[face, image], column), unit, action[image, vector]
                    )
            for index in range(1, degree):
                face = nerve.face(chain, index)
                _accumulate(table, (below[face, vector], column), unit, (-1) ** index)
            face = nerve.face(chain, degree)
            _accumulate(
                table, (below[face, vector], column), chain.arrows[-1], (-1) ** degree
            )
        entries[degree] = table

    vectors = []
    for chain, vector in positions.get(0, {}):
        unit = [0] * module.rank(chain.first)
        unit[vector] = 1
        vectors.append(unit)
    LOGGER.debug(
        "Bar resolution with %s summands per degree",
        [len(summands) for summands in terms.values()],
    )
    return ProjectiveComplex(category, terms, entries, augmentation=(module, vectors))


@lru_cache(maxsize=32)
def bar_resolution(category: FiniteCategory) -> ProjectiveComplex:
    """
    Build the normalized Bar resolution of the constant module.

    Its length is the length of the longest chain of non-identity morphisms.

    Examples
    --------

        >>> from dualcat.categories import poset_category
        >>> from dualcat.modules import bar_resolution
        >>> bar_resolution(poset_category(["0", "1"], [("0", "1")])).sizes()
        {0: 2, 1: 1}
    """
    return bar_resolution_of_module(category, constant_module(category))


def _resolve(category: FiniteCategory, module: Optional[CModule]) -> ProjectiveComplex:
    if module is None or _is_constant(category, module):
        return bar_resolution(category)
    return bar_resolution_of_module(category, module)


def _yoneda_layout(resolution: ProjectiveComplex, module: CModule):
    bases = {}
    offsets = {}
    for degree in resolution.degrees:
        labels: List[Tuple[str, str]] = []
        starts = []
        for summand in resolution.terms(degree):
            starts.append(len(labels))
            labels.extend((summand.label, name) for name in module.labels(summand.obj))
        bases[degree] = labels
        offsets[degree] = starts
    return bases, offsets


def hom_complex(resolution: ProjectiveComplex, module: CModule) -> IntegerChainComplex:
    """
    Build the cochain complex ``Hom(R, G)`` for a chain complex of projectives.

    ``Hom(P_a, G)`` is identified with ``G(a)``; an entry ``φ`` acts through
    ``G(φ)``.

    Raises
    ------
        VarianceMismatch
            If *module* is not a left module over the base category.
        ValueError
            If *resolution* is a cochain complex.
    """
    if resolution.cochain:
        raise ValueError("expected a chain complex of projectives")
    _check_side(resolution.category, module, Variance.LEFT)
    bases, offsets = _yoneda_layout(resolution, module)
    differentials = {}
    for degree in resolution.degrees:
        if degree - 1 not in bases:
            continue
        matrix = zeros(len(bases[degree]), len(bases[degree - 1]))
        targets = resolution.terms(degree - 1)
        sources = resolution.terms(degree)
        for (row, col), combination in resolution.entries(degree).items():
            top = offsets[degree][col]
            left = offsets[degree - 1][row]
            height = module.rank(sources[col].obj)
            width = module.rank(targets[row].obj)
            for name, coefficient in combination.items():
                matrix[top : top + height, left : left + width] += (
                    coefficient * module.action(name)
                )
        differentials[degree - 1] = matrix
    return IntegerChainComplex(bases, differentials, cochain=True)


def tensor_complex(
    module: CModule, resolution: ProjectiveComplex
) -> IntegerChainComplex:
    """
    Build the chain complex ``G ⊗ R`` for a right module and projectives.

    ``G ⊗ P_a`` is identified with ``G(a)``; an entry ``φ`` acts through
    ``G(φ)``.

    Raises
    ------
        VarianceMismatch
            If *module* is not a right module over the base category.
        ValueError
            If *resolution* is a cochain complex.
    """
    if resolution.cochain:
        raise ValueError("expected a chain complex of projectives")
    _check_side(resolution.category, module, Variance.RIGHT)
    bases, offsets = _yoneda_layout(resolution, module)
    differentials = {}
    for degree in resolution.degrees:
        if degree - 1 not in bases:
            continue
        matrix = zeros(len(bases[degree - 1]), len(bases[degree]))
        targets = resolution.terms(degree - 1)
        sources = resolution.terms(degree)
        for (row, col), combination in resolution.entries(degree).items():
            top = offsets[degree - 1][row]
            left = offsets[degree][col]
            height = module.rank(targets[row].obj)
            width = module.rank(sources[col].obj)
            for name, coefficient in combination.items():
                matrix[top : top + height, left : left + width] += (
                    coefficient * module.action(name)
                )
        differentials[degree] = matrix
    return IntegerChainComplex(bases, differentials)


def _graded_homology(
    complex_: IntegerChainComplex, top: int, max_degree: Optional[int]
) -> GradedGroups:
    if max_degree is not None:
        top = min(top, max_degree)
    return GradedGroups(
        {degree: homology(complex_, degree) for degree in range(top + 1)}
    )


def ext(
    category: FiniteCategory,
    module: Optional[CModule],
    coefficients: CModule,
    max_degree: Optional[int] = None,
) -> GradedGroups:
    """
    Compute ``Ext^*(F, G)`` over a finite loop-free category.

    Arguments
    ---------
        category: :class:`FiniteCategory <dualcat.categories.FiniteCategory>`
            The base category.
        module: :class:`CModule`
            The left module *F*, the constant module when :data:`None`.
        coefficients: :class:`CModule`
            The left module *G*.
        max_degree: int
            The highest computed degree, the resolution length by default.

    Raises
    ------
        VarianceMismatch
            If a module is not a left module over *category*.

    Examples
    --------

        >>> from dualcat.categories import validate_category
        >>> from dualcat.modules import ext, standard_projective
        >>> category = validate_category(
        ...     ["x", "y"], [("alpha", "x", "y"), ("beta", "x", "y")]
        ... )
        >>> print(ext(category, None, standard_projective(category, "x")))
        1: Z
    """
    resolution = _resolve(category, module)
    complex_ = hom_complex(resolution, coefficients)
    return _graded_homology(complex_, resolution.hi, max_degree)


def tor(
    category: FiniteCategory,
    coefficients: CModule,
    module: Optional[CModule],
    max_degree: Optional[int] = None,
) -> GradedGroups:
    """
    Compute ``Tor_*(G, F)`` over a finite loop-free category.

    Arguments
    ---------
        category: :class:`FiniteCategory <dualcat.categories.FiniteCategory>`
            The base category.
        coefficients: :class:`CModule`
            The right module *G*.
        module: :class:`CModule`
            The left module *F*, the constant module when :data:`None`.
        max_degree: int
            The highest computed degree, the resolution length by default.

    Raises
    ------
        VarianceMismatch
            If a module has the wrong variance or category.
    """
    resolution = _resolve(category, module)
    complex_ = tensor_complex(coefficients, resolution)
    return _graded_homology(complex_, resolution.hi, max_degree)


def dualize_projective_complex(complex_: ProjectiveComplex) -> ProjectiveComplex:
    """
    Apply the duality functor to a complex of projectives.

    The complex is read as a cochain complex *X* (a chain complex *R* being
    ``X^{-k} = R_k``). The result lives over the opposite category, has terms
    ``D(X)^n = D(X^{-n})`` where ``D(P_a)`` is ``P_a`` over the opposite
    category, and differentials ``(-1)^(n+1) D(d_X^{-(n+1)})``. Every entry keeps
    its morphisms, read in the opposite category.

    Raises
    ------
        NotAComplex
            If some evaluation of the result is not a complex.

    Examples
    --------

        >>> from dualcat.categories import poset_category
        >>> from dualcat.modules import bar_resolution, dualize_projective_complex
        >>> chain = poset_category(["0", "1"], [("0", "1")])
        >>> dual = dualize_projective_complex(bar_resolution(chain))
        >>> dual.cochain, dual.sizes()
        (True, {0: 2, 1: 1})
    """

    def position(degree: int) -> int:
        return -degree if complex_.cochain else degree

    terms = {position(degree): complex_.terms(degree) for degree in complex_.degrees}
    entries: Dict[int, Entries] = {}
    for degree in complex_.degrees:
        table = complex_.entries(degree)
        if not table:
            continue
        start = position(degree + complex_.step)
        sign = (-1) ** ((start + 1) % 2)
        dual: Entries = {}
        for (row, col), combination in table.items():
            dual[col, row] = {
                name: sign * coefficient for name, coefficient in combination.items()
            }
        entries[start] = dual
    result = ProjectiveComplex(
        opposite(complex_.category), terms, entries, cochain=True
    )
    result.verify()
    return result


class DerivedDual:
    """
    Pointwise derived dual of a left module *F*.

    The value at *y* in degree *i* is ``Ext^i(F, P_y)``, the cohomology of the
    dual Bar complex evaluated at *y*. A morphism ``x -> y`` acts
    contravariantly through postcomposition in the opposite category.
    """

    __slots__ = (
        "_category",
        "_module",
        "_resolution",
        "_dual",
        "_complexes",
        "_bases",
        "_values",
        "_modules",
    )

    def __init__(
        self, category: FiniteCategory, module: Optional[CModule] = None
    ) -> None:
        """
        Initialize a :class:`DerivedDual` instance.

        Arguments
        ---------
            category: :class:`FiniteCategory <dualcat.categories.FiniteCategory>`
                The base category.
            module: :class:`CModule`
                The left module, the constant module when :data:`None`.
        """
        if module is None:
            module = constant_module(category)
        self._category = category
        self._module = module
        self._resolution = _resolve(category, module)
        self._dual = dualize_projective_complex(self._resolution)
        self._complexes: Dict[str, IntegerChainComplex] = {}
        self._bases: Dict[Tuple[str, int], HomologyBasis] = {}
        self._values: Dict[str, GradedGroups] = {}
        self._modules: Dict[int, CModule] = {}
        for obj in category.objects:
            evaluated = self._dual.evaluate(obj)
            self._complexes[obj] = evaluated
            groups = {}
            for degree in evaluated.degrees:
                basis = homology_basis(evaluated, degree)
                self._bases[obj, degree] = basis
                groups[degree] = basis.group
            self._values[obj] = GradedGroups(groups)
            LOGGER.debug("Ext column at %s: %s", obj, self._values[obj])

    @property
    def category(self) -> FiniteCategory:
        """Return the base category."""
        return self._category

    @property
    def module(self) -> CModule:
        """Return the dualized module."""
        return self._module

    @property
    def resolution(self) -> ProjectiveComplex:
        """Return the Bar resolution."""
        return self._resolution

    @property
    def dual(self) -> ProjectiveComplex:
        """Return the dual Bar complex over the opposite category."""
        return self._dual

    @property
    def values(self) -> Dict[str, GradedGroups]:
        """Return the Ext column of every object."""
        return dict(self._values)

    def column(self, obj: str) -> GradedGroups:
        """Return the Ext column of *obj*."""
        return self._values[self._category.check_object(obj)]

    def support(self) -> List[int]:
        """Return the degrees carrying a non-trivial value somewhere."""
        return sorted({degree for groups in self._values.values() for degree in groups})

    def torsion_degrees(self) -> Set[int]:
        """Return the degrees carrying a value with torsion."""
        return {
            degree
            for groups in self._values.values()
            for degree, group in groups.items()
            if not group.is_free
        }

    def structure_map(self, name: str, degree: int) -> IntMatrix:
        """
        Return the matrix of ``D^degree(f): D(y) -> D(x)`` for ``f: x -> y``.

        Rows follow the canonical generators at *x*, columns those at *y*; rows
        of torsion generators are reduced modulo their order.
        """
        morphism = self._category.morphism(name)
        opposite_category = self._dual.category
        source = self._complexes[morphism.dst]
        target = self._complexes[morphism.src]
        components = {}
        for level in source.degrees:
            positions = {
                label: index for index, label in enumerate(target.basis(level))
            }
            matrix = zeros(target.rank(level), source.rank(level))
            for column, (label, arrow) in enumerate(source.basis(level)):
                image = opposite_category.compose(name, arrow)
                matrix[positions[label, image], column] = 1
            components[level] = matrix
        return induced_map(
            ChainMap(source, target, components),
            degree,
            self._bases.get((morphism.dst, degree)),
            self._bases.get((morphism.src, degree)),
        )

    def module_at(self, degree: int) -> CModule:
        """
        Return the right module ``D^degree(F)``.

        Raises
        ------
            NotPointwiseFree
                If some value has torsion in this degree.
        """
        if degree not in self._modules:
            for obj, groups in self._values.items():
                if not groups[degree].is_free:
                    raise NotPointwiseFree(
                        f"D^{degree} has torsion {groups[degree]} at {obj!r}", obj
                    )
            self._modules[degree] = CModule(
                self._category,
                Variance.RIGHT,
                {obj: groups[degree].rank for obj, groups in self._values.items()},
                {
                    morphism.id: self.structure_map(morphism.id, degree)
                    for morphism in self._category.morphisms
                },
            )
        return self._modules[degree]


def derived_dual(
    category: FiniteCategory, module: Optional[CModule] = None
) -> DerivedDual:
    """
    Compute the derived dual of a left module, the constant one by default.

    Examples
    --------

        >>> from dualcat.categories import validate_category
        >>> from dualcat.modules import derived_dual
        >>> category = validate_category(
        ...     ["x", "y"], [("alpha", "x", "y"), ("beta", "x", "y")]
        ... )
        >>> dual = derived_dual(category)
        >>> dual.support(), dual.module_at(1).ranks
        ([1], {'x': 1, 'y': 1})
    """
    return DerivedDual(category, module)


def unnormalized_hom_complex(
    category: FiniteCategory, module: CModule, max_degree: int
) -> IntegerChainComplex:
    """
    Build the cochain complex of all chains, identities included.

    Degrees run from 0 to ``max_degree + 1``; the cohomology up to *max_degree*
    is ``Ext^*(Z, G)`` again.

    Raises
    ------
        VarianceMismatch
            If *module* is not a left module over *category*.
    """
    _check_side(category, module, Variance.LEFT)
    starting: Dict[str, List[str]] = {}
    for morphism in category.arrows:
        starting.setdefault(morphism.src, []).append(morphism.id)
    layers = [[Chain((obj,), ()) for obj in category.objects]]
    for _ in range(max_degree + 1):
        layers.append(
            [
                Chain(chain.objects + (category.target(name),), chain.arrows + (name,))
                for chain in layers[-1]
                for name in starting[chain.last]
            ]
        )
    bases = {}
    offsets: List[Dict[Chain, int]] = []
    for degree, layer in enumerate(layers):
        labels: List[Tuple[Chain, str]] = []
        starts = {}
        for chain in layer:
            starts[chain] = len(labels)
            labels.extend((chain, label) for label in module.labels(chain.last))
        bases[degree] = labels
        offsets.append(starts)

    differentials = {}
    for degree in range(1, len(layers)):
        matrix = zeros(len(bases[degree]), len(bases[degree - 1]))
        for chain in layers[degree]:
            top = offsets[degree][chain]
            height = module.rank(chain.last)
            for index in range(degree + 1):
                face = chain_face(category, chain, index)
                left = offsets[degree - 1][face]
                width = module.rank(face.last)
                if index < degree:
                    block = identity(height)
                else:
                    block = module.action(chain.arrows[-1])
                matrix[top : top + height, left : left + width] += (-1) ** index * block
        differentials[degree - 1] = matrix
    LOGGER.debug("unnormalized complex sizes %s", [len(layer) for layer in layers])
    return IntegerChainComplex(bases, differentials, cochain=True)
