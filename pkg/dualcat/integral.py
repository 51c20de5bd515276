"""
Exact integer linear algebra module.

Matrices are :class:`numpy.ndarray` instances with ``dtype=object`` holding
Python integers, so that no intermediate value can overflow.
"""

# pylint: disable=too-many-locals

import logging
from collections import namedtuple
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np  # type: ignore
from tabulate import tabulate  # type: ignore

from dualcat.errors import NotAChainMap, NotAComplex, NotACycleImage

LOGGER = logging.getLogger(__name__)

IntMatrix = np.ndarray
"""Two dimensional object array of Python integers."""


def int_matrix(entries, shape: Optional[Tuple[int, int]] = None) -> IntMatrix:
    """
    Build an integer matrix.

    Arguments
    ---------
        entries:
            Nested sequences of integers.
        shape: tuple
            The shape, mandatory for matrices without entries.

    Returns
    -------
        :class:`numpy.ndarray`
            An object array.

    Examples
    --------

        >>> from dualcat.integral import int_matrix
        >>> int_matrix([[1, 2], [3, 4]]).shape
        (2, 2)
        >>> int_matrix([], (0, 3)).shape
        (0, 3)
    """
    matrix = np.array(entries, dtype=object)
    if shape is not None:
        matrix = matrix.reshape(shape)
    if matrix.ndim != 2:
        raise ValueError(f"expected a two dimensional matrix, got shape {matrix.shape}")
    return matrix


def zeros(rows: int, cols: int) -> IntMatrix:
    """Return the zero matrix of the given shape."""
    return np.zeros((rows, cols), dtype=object)


def identity(size: int) -> IntMatrix:
    """Return the identity matrix of the given size."""
    matrix = zeros(size, size)
    for index in range(size):
        matrix[index, index] = 1
    return matrix


def matmul(left: IntMatrix, right: IntMatrix) -> IntMatrix:
    """Return the product of two integer matrices, empty inner sizes included."""
    if left.shape[1] != right.shape[0]:
        raise ValueError(f"cannot multiply {left.shape} by {right.shape}")
    if left.shape[1] == 0:
        return zeros(left.shape[0], right.shape[1])
    return left.dot(right)


def is_zero(matrix: IntMatrix) -> bool:
    """Return :data:`True <python:True>` if every entry vanishes."""
    return all(entry == 0 for entry in matrix.flat)


def matrix_equal(left: IntMatrix, right: IntMatrix) -> bool:
    """Return :data:`True <python:True>` if both matrices coincide."""
    return left.shape == right.shape and all(
        first == second for first, second in zip(left.flat, right.flat)
    )


def _submatrix(
    matrix: IntMatrix, rows: Sequence[int], cols: Sequence[int]
) -> IntMatrix:
    if not rows or not cols:
        return zeros(len(rows), len(cols))
    return matrix[np.ix_(list(rows), list(cols))]


def format_matrix(matrix: IntMatrix) -> str:
    """
    Return a plain-text rendering of a matrix.

    Examples
    --------

        >>> from dualcat.integral import format_matrix, int_matrix
        >>> print(format_matrix(int_matrix([[1, -2], [0, 3]])))
        1  -2
        0   3
    """
    if 0 in matrix.shape:
        return f"<empty {matrix.shape[0]}x{matrix.shape[1]}>"
    return tabulate(matrix.tolist(), tablefmt="plain")


class SmithDecomposition(
    namedtuple(
        "SmithDecomposition",
        ["left", "diagonal", "right", "left_inverse", "right_inverse"],
    )
):
    """
    Smith decomposition of an integer matrix *M*.

    It contains five fields:

    * ``left`` and ``right``, unimodular matrices *U* and *V*;
    * ``diagonal``, the matrix *S = U M V*;
    * ``left_inverse`` and ``right_inverse``, the inverses of *U* and *V*.
    """

    __slots__ = ()

    @property
    def rank(self) -> int:
        """Return the number of non-zero diagonal entries."""
        size = min(self.diagonal.shape)
        return sum(1 for index in range(size) if self.diagonal[index, index] != 0)

    @property
    def divisors(self) -> List[int]:
        """Return the non-zero diagonal entries."""
        return [self.diagonal[index, index] for index in range(self.rank)]


def _pivot(matrix: IntMatrix, start: int) -> Optional[Tuple[int, int]]:
    block = matrix[start:, start:]
    if block.size == 0:
        return None
    sizes = np.abs(block)
    nonzero = sizes != 0
    if not nonzero.any():
        return None
    smallest = min(sizes[nonzero])
    row, col = np.argwhere(nonzero & (sizes == smallest))[0]
    return start + int(row), start + int(col)


def _non_divisible(matrix: IntMatrix, start: int) -> Optional[int]:
    block = matrix[start + 1 :, start + 1 :]
    if block.size == 0:
        return None
    remainders = block % matrix[start, start]
    positions = np.argwhere(remainders != 0)
    if len(positions) == 0:
        return None
    return start + 1 + int(positions[0][0])


def smith_decomposition(matrix: IntMatrix) -> SmithDecomposition:
    """
    Compute the Smith normal form of an integer matrix with inverses.

    The pivot is the entry of minimal absolute value in the remaining block, the
    lowest ``(row, col)`` winning ties, so the result is reproducible.

    Arguments
    ---------
        matrix: :class:`numpy.ndarray`
            An integer matrix.

    Returns
    -------
        :class:`SmithDecomposition`
            The decomposition.

    Examples
    --------

        >>> from dualcat.integral import int_matrix, smith_decomposition
        >>> decomposition = smith_decomposition(int_matrix([[2, 4], [6, 8]]))
        >>> decomposition.divisors
        [2, 4]
    """
    diagonal = np.array(matrix, dtype=object).copy()
    rows, cols = diagonal.shape
    left, right = identity(rows), identity(cols)
    left_inverse, right_inverse = identity(rows), identity(cols)

    for step in range(min(rows, cols)):
        while True:
            position = _pivot(diagonal, step)
            if position is None:
                return SmithDecomposition(
                    left, diagonal, right, left_inverse, right_inverse
                )
            row, col = position
            if row != step:
                diagonal[[step, row]] = diagonal[[row, step]]
                left[[step, row]] = left[[row, step]]
                left_inverse[:, [step, row]] = left_inverse[:, [row, step]]
            if col != step:
                diagonal[:, [step, col]] = diagonal[:, [col, step]]
                right[:, [step, col]] = right[:, [col, step]]
                right_inverse[[step, col]] = right_inverse[[col, step]]

            pivot = diagonal[step, step]
            remainder = False
            for index in range(step + 1, rows):
                quotient = diagonal[index, step] // pivot
                if quotient:
                    diagonal[index, step:] -= quotient * diagonal[step, step:]
                    left[index] -= quotient * left[step]
                    left_inverse[:, step] += quotient * left_inverse[:, index]
                remainder = remainder or diagonal[index, step] != 0
            for index in range(step + 1, cols):
                quotient = diagonal[step, index] // pivot
                if quotient:
                    diagonal[step:, index] -= quotient * diagonal[step:, step]
                    right[:, index] -= quotient * right[:, step]
                    right_inverse[step] += quotient * right_inverse[index]
                remainder = remainder or diagonal[step, index] != 0
            if remainder:
                continue

            witness = _non_divisible(diagonal, step)
            if witness is None:
                break
            diagonal[step] += diagonal[witness]
            left[step] += left[witness]
            left_inverse[:, witness] -= left_inverse[:, step]

        if diagonal[step, step] < 0:
            diagonal[step] = -diagonal[step]
            left[step] = -left[step]
            left_inverse[:, step] = -left_inverse[:, step]

    return SmithDecomposition(left, diagonal, right, left_inverse, right_inverse)


def smith_normal_form(matrix: IntMatrix) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """
    Compute the Smith normal form of an integer matrix.

    Arguments
    ---------
        matrix: :class:`numpy.ndarray`
            An integer matrix *M*.

    Returns
    -------
        tuple
            Unimodular *U*, *V* and diagonal *S* with *U M V = S* returned as
            ``(U, S, V)``; the diagonal entries are non-negative and each one
            divides the next.

    Examples
    --------

        >>> from dualcat.integral import int_matrix, smith_normal_form
        >>> _, diagonal, _ = smith_normal_form(int_matrix([[2, 4], [6, 8]]))
        >>> diagonal.tolist()
        [[2, 0], [0, 4]]
    """
    decomposition = smith_decomposition(matrix)
    return decomposition.left, decomposition.diagonal, decomposition.right


def solve_integer_system(matrix: IntMatrix, vector: Sequence[int]) -> Optional[list]:
    """
    Solve *A x = b* over the integers.

    Arguments
    ---------
        matrix: :class:`numpy.ndarray`
            The matrix *A*.
        vector:
            The right hand side *b*.

    Returns
    -------
        list
            A solution, or :data:`None <python:None>` when the system has no
            integer solution.

    Examples
    --------

        >>> from dualcat.integral import int_matrix, solve_integer_system
        >>> solve_integer_system(int_matrix([[2]]), [4])
        [2]
        >>> solve_integer_system(int_matrix([[2]]), [3]) is None
        True
    """
    rows, cols = matrix.shape
    column = int_matrix(list(vector), (len(vector), 1))
    if column.shape[0] != rows:
        raise ValueError(f"vector of length {column.shape[0]} for {rows} rows")
    decomposition = smith_decomposition(matrix)
    image = matmul(decomposition.left, column)
    solution = zeros(cols, 1)
    for index in range(rows):
        value = image[index, 0]
        if index < decomposition.rank:
            divisor = decomposition.diagonal[index, index]
            if value % divisor:
                return None
            solution[index, 0] = value // divisor
        elif value != 0:
            return None
    return [int(entry) for entry in matmul(decomposition.right, solution)[:, 0]]


class FgAbelianGroup(namedtuple("FgAbelianGroup", ["rank", "torsion"])):
    """
    Finitely generated abelian group.

    The group is stored in invariant factor form: a free rank and the torsion
    coefficients ``d_1 | d_2 | ...`` with ``d_i >= 2``. The form is canonical,
    so equality decides isomorphism.

    Examples
    --------

        >>> from dualcat.integral import FgAbelianGroup
        >>> print(FgAbelianGroup(2, (2, 6)))
        Z^2 + Z/2 + Z/6
        >>> print(FgAbelianGroup.from_orders([0, 4, 6, 1]))
        Z + Z/2 + Z/12
    """

    __slots__ = ()

    def __new__(cls, rank: int = 0, torsion: Iterable[int] = ()):
        """Create a new group, checking the invariant factor form."""
        torsion = tuple(int(order) for order in torsion)
        if rank < 0:
            raise ValueError(f"negative rank {rank}")
        if any(order < 2 for order in torsion):
            raise ValueError(f"torsion coefficients must be at least 2: {torsion}")
        if any(second % first for first, second in zip(torsion, torsion[1:])):
            raise ValueError(f"torsion coefficients must divide each other: {torsion}")
        return super().__new__(cls, int(rank), torsion)

    @classmethod
    def trivial(cls) -> "FgAbelianGroup":
        """Return the trivial group."""
        return cls(0, ())

    @classmethod
    def free(cls, rank: int) -> "FgAbelianGroup":
        """Return the free abelian group of the given rank."""
        return cls(rank, ())

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> "FgAbelianGroup":
        """
        Return the direct sum of cyclic groups of the given orders.

        An order ``0`` stands for ``Z``, an order ``1`` for the trivial group.
        """
        orders = [abs(int(order)) for order in orders]
        if not orders:
            return cls.trivial()
        size = len(orders)
        diagonal = zeros(size, size)
        for index, order in enumerate(orders):
            diagonal[index, index] = order
        decomposition = smith_decomposition(diagonal)
        divisors = decomposition.divisors
        return cls(size - len(divisors), (order for order in divisors if order > 1))

    @classmethod
    def from_json(cls, data) -> "FgAbelianGroup":
        """Build a group from its ``[rank, [torsion]]`` form."""
        rank, torsion = data
        return cls(rank, torsion)

    def to_json(self) -> list:
        """Return the ``[rank, [torsion]]`` form."""
        return [self.rank, list(self.torsion)]

    def direct_sum(self, other: "FgAbelianGroup") -> "FgAbelianGroup":
        """Return the direct sum of two groups."""
        return FgAbelianGroup.from_orders(
            [0] * (self.rank + other.rank) + list(self.torsion) + list(other.torsion)
        )

    @property
    def is_free(self) -> bool:
        """Return :data:`True <python:True>` if the group has no torsion."""
        return not self.torsion

    def __bool__(self) -> bool:
        """Return :data:`True <python:True>` if the group is not trivial."""
        return self.rank > 0 or bool(self.torsion)

    def __str__(self) -> str:
        """Return str(self)."""
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{order}" for order in self.torsion)
        return " + ".join(parts) if parts else "0"


def group_iso_equal(first: FgAbelianGroup, second: FgAbelianGroup) -> bool:
    """
    Decide whether two finitely generated abelian groups are isomorphic.

    Examples
    --------

        >>> from dualcat.integral import FgAbelianGroup, group_iso_equal
        >>> group_iso_equal(FgAbelianGroup(0, (2,)), FgAbelianGroup(0, (4,)))
        False
    """
    return first.rank == second.rank and first.torsion == second.torsion


class IntegerChainComplex:
    """
    Bounded complex of finitely generated free abelian groups.

    The differential stored at degree *n* starts from degree *n*: it goes to
    degree *n - 1* for a chain complex and to degree *n + 1* for a cochain
    complex. Its matrix has one row per basis element of the target and one
    column per basis element of the source. Missing differentials are zero.

    Examples
    --------

        >>> from dualcat.integral import IntegerChainComplex, homology, int_matrix
        >>> complex_ = IntegerChainComplex(
        ...     {0: ["a"], 1: ["b"]}, {1: int_matrix([[2]])}
        ... )
        >>> print(homology(complex_, 0), homology(complex_, 1))
        Z/2 0
    """

    __slots__ = ("_bases", "_differentials", "_cochain")

    def __init__(
        self,
        bases: Mapping[int, Sequence],
        differentials: Optional[Mapping[int, IntMatrix]] = None,
        cochain: bool = False,
    ) -> None:
        """
        Initialize an :class:`IntegerChainComplex` instance.

        Arguments
        ---------
            bases: :class:`Mapping <python:typing.Mapping>`
                Basis labels per degree.
            differentials: :class:`Mapping <python:typing.Mapping>`
                Differential matrices keyed by their source degree.
            cochain: bool
                The direction flag.

        Raises
        ------
            ValueError
                If a matrix has an inconsistent shape or its labels repeat.
            NotAComplex
                If two consecutive differentials do not compose to zero.
        """
        self._cochain = cochain
        self._bases: Dict[int, Tuple] = {
            int(degree): tuple(labels) for degree, labels in sorted(bases.items())
        }
        for degree, labels in self._bases.items():
            if len(set(labels)) != len(labels):
                raise ValueError(f"repeated basis labels in degree {degree}")
        self._differentials: Dict[int, IntMatrix] = {}
        for degree, matrix in (differentials or {}).items():
            expected = (self.rank(degree + self.step), self.rank(degree))
            if matrix.shape != expected:
                raise ValueError(
                    f"differential at degree {degree} has shape {matrix.shape}, "
                    f"expected {expected}"
                )
            self._differentials[int(degree)] = matrix
        for degree in self._differentials:
            composite = matmul(
                self.differential(degree + self.step), self.differential(degree)
            )
            if not is_zero(composite):
                raise NotAComplex(
                    f"differentials starting at degree {degree} do not compose to zero",
                    degree,
                )

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
        """Return the sorted degrees carrying a basis."""
        return list(self._bases)

    @property
    def lo(self) -> int:  # pylint: disable=invalid-name
        """Return the lowest degree."""
        return min(self._bases) if self._bases else 0

    @property
    def hi(self) -> int:  # pylint: disable=invalid-name
        """Return the highest degree."""
        return max(self._bases) if self._bases else -1

    def basis(self, degree: int) -> Tuple:
        """Return the basis labels at *degree*."""
        return self._bases.get(degree, ())

    def rank(self, degree: int) -> int:
        """Return the rank of the free group at *degree*."""
        return len(self._bases.get(degree, ()))

    def differential(self, degree: int) -> IntMatrix:
        """Return the differential starting from *degree*."""
        matrix = self._differentials.get(degree)
        if matrix is None:
            return zeros(self.rank(degree + self.step), self.rank(degree))
        return matrix

    def incoming(self, degree: int) -> IntMatrix:
        """Return the differential arriving at *degree*."""
        return self.differential(degree - self.step)

    def euler_characteristic(self) -> int:
        """Return the alternating sum of the ranks."""
        return sum((-1) ** (degree % 2) * self.rank(degree) for degree in self._bases)

    def reindexed(self) -> "IntegerChainComplex":
        """
        Return the same data with negated degrees and the opposite direction.

        A chain complex becomes a cochain complex and conversely; homology in
        degree *n* becomes homology in degree *-n*.
        """
        return IntegerChainComplex(
            {-degree: labels for degree, labels in self._bases.items()},
            {-degree: matrix for degree, matrix in self._differentials.items()},
            cochain=not self._cochain,
        )

    def restricted(self, keep: Mapping[int, Sequence[int]]) -> "IntegerChainComplex":
        """
        Return the subcomplex spanned by the selected basis elements.

        Arguments
        ---------
            keep: :class:`Mapping <python:typing.Mapping>`
                The kept basis indices per degree (missing degrees keep nothing).

        Raises
        ------
            NotAComplex
                If the selection is not stable under the differential.
        """
        kept = {degree: sorted(keep.get(degree, ())) for degree in self._bases}
        differentials = {}
        for degree in self._bases:
            target = degree + self.step
            matrix = self.differential(degree)
            columns = kept[degree]
            rows = kept.get(target, [])
            selected = set(rows)
            dropped = [
                index for index in range(self.rank(target)) if index not in selected
            ]
            if any(matrix[row, column] for row in dropped for column in columns):
                raise NotAComplex(
                    f"selection at degree {degree} is not closed under d",
                    degree,
                )
            if target in self._bases:
                differentials[degree] = _submatrix(matrix, rows, columns)
        return IntegerChainComplex(
            {
                degree: [self._bases[degree][index] for index in indices]
                for degree, indices in kept.items()
            },
            differentials,
            cochain=self._cochain,
        )

    def __eq__(self, other) -> bool:
        """Return self==other."""
        if not isinstance(other, IntegerChainComplex):
            return NotImplemented
        return (
            self._cochain == other._cochain
            and self._bases == other._bases
            and all(
                matrix_equal(self.differential(degree), other.differential(degree))
                for degree in set(self._bases) | set(other._bases)
            )
        )

    __hash__ = None  # type: ignore

    def __repr__(self) -> str:
        """Return repr(self)."""
        kind = "cochain" if self._cochain else "chain"
        ranks = ", ".join(
            f"{degree}: {len(labels)}" for degree, labels in self._bases.items()
        )
        return f"IntegerChainComplex({kind}, {{{ranks}}})"


class HomologyBasis:
    """
    Canonical generators of a homology group.

    Free generators come first, then torsion generators by increasing order.
    Generators are cycles expressed in the chain basis.
    """

    __slots__ = (
        "_group",
        "_generators",
        "_orders",
        "_kernel_inverse",
        "_kernel_rank",
        "_change",
        "_selected",
        "_outgoing",
    )

    # pylint: disable=too-many-arguments
    def __init__(
        self,
        group: FgAbelianGroup,
        generators: IntMatrix,
        orders: Sequence[int],
        kernel_inverse: IntMatrix,
        kernel_rank: int,
        change: IntMatrix,
        selected: Sequence[int],
        outgoing: IntMatrix,
    ) -> None:
        """Initialize a :class:`HomologyBasis` instance from SNF data."""
        self._group = group
        self._generators = generators
        self._orders = tuple(orders)
        self._kernel_inverse = kernel_inverse
        self._kernel_rank = kernel_rank
        self._change = change
        self._selected = tuple(selected)
        self._outgoing = outgoing

    @property
    def group(self) -> FgAbelianGroup:
        """Return the homology group."""
        return self._group

    @property
    def generators(self) -> IntMatrix:
        """Return the generating cycles as columns."""
        return self._generators

    @property
    def orders(self) -> Tuple[int, ...]:
        """Return the generator orders, ``0`` for free generators."""
        return self._orders

    def __len__(self) -> int:
        """Return len(self)."""
        return len(self._orders)

    def coordinates(self, cycle: IntMatrix) -> List[int]:
        """
        Return the coordinates of the class of a cycle.

        Arguments
        ---------
            cycle: :class:`numpy.ndarray`
                A column vector.

        Raises
        ------
            NotACycleImage
                If *cycle* is not a cycle.
        """
        if not is_zero(matmul(self._outgoing, cycle)):
            raise NotACycleImage("the vector is not a cycle", cycle)
        local = matmul(self._kernel_inverse, cycle)
        if not is_zero(local[: self._kernel_rank]):
            raise NotACycleImage("the vector is not in the kernel basis span", cycle)
        values = matmul(self._change, local[self._kernel_rank :])
        return [
            values[index, 0] % order if order else values[index, 0]
            for index, order in zip(self._selected, self._orders)
        ]


def homology_basis(complex_: IntegerChainComplex, degree: int) -> HomologyBasis:
    """
    Compute the homology group at *degree* with canonical generators.

    Arguments
    ---------
        complex_: :class:`IntegerChainComplex`
            A complex.
        degree: int
            A degree, possibly out of range.

    Returns
    -------
        :class:`HomologyBasis`
            The group with its generators.
    """
    size = complex_.rank(degree)
    outgoing = complex_.differential(degree)
    incoming = complex_.incoming(degree)
    kernel_decomposition = smith_decomposition(outgoing)
    kernel_rank = kernel_decomposition.rank
    kernel = kernel_decomposition.right[:, kernel_rank:]
    relations = matmul(kernel_decomposition.right_inverse, incoming)[kernel_rank:]
    relation_decomposition = smith_decomposition(relations)

    dimension = size - kernel_rank
    orders = []
    for index in range(dimension):
        if index < min(relations.shape):
            orders.append(relation_decomposition.diagonal[index, index])
        else:
            orders.append(0)
    free = [index for index, order in enumerate(orders) if order == 0]
    torsion = [index for index, order in enumerate(orders) if order > 1]
    selected = free + torsion
    lifted = matmul(kernel, relation_decomposition.left_inverse)
    generators = lifted[:, selected] if selected else zeros(size, 0)
    group = FgAbelianGroup(len(free), (orders[index] for index in torsion))
    LOGGER.debug("homology at degree %d of %r is %s", degree, complex_, group)
    return HomologyBasis(
        group,
        generators,
        [orders[index] for index in selected],
        kernel_decomposition.right_inverse,
        kernel_rank,
        relation_decomposition.left,
        selected,
        outgoing,
    )


def homology(complex_: IntegerChainComplex, degree: int) -> FgAbelianGroup:
    """
    Compute the homology group of a complex at *degree*.

    Arguments
    ---------
        complex_: :class:`IntegerChainComplex`
            A chain or cochain complex.
        degree: int
            A degree; degrees out of range give the trivial group.

    Returns
    -------
        :class:`FgAbelianGroup`
            The kernel of the outgoing differential modulo the image of the
            incoming one.
    """
    if complex_.rank(degree) == 0:
        return FgAbelianGroup.trivial()
    return homology_basis(complex_, degree).group


class ChainMap:
    """
    Morphism of complexes.

    Components are keyed by degree; each has one row per target basis element
    and one column per source basis element. Missing components are zero.
    """

    __slots__ = ("_source", "_target", "_components")

    def __init__(
        self,
        source: IntegerChainComplex,
        target: IntegerChainComplex,
        components: Mapping[int, IntMatrix],
    ) -> None:
        """
        Initialize a :class:`ChainMap` instance.

        Raises
        ------
            ValueError
                If directions differ or a component has the wrong shape.
            NotAChainMap
                If a square with the differentials does not commute.
        """
        if source.cochain != target.cochain:
            raise ValueError("chain maps need complexes with the same direction")
        self._source = source
        self._target = target
        self._components: Dict[int, IntMatrix] = {}
        for degree, matrix in components.items():
            expected = (target.rank(degree), source.rank(degree))
            if matrix.shape != expected:
                raise ValueError(
                    f"component at degree {degree} has shape {matrix.shape}, "
                    f"expected {expected}"
                )
            self._components[degree] = matrix
        for degree in set(source.degrees) | set(target.degrees):
            following = degree + source.step
            first = matmul(target.differential(degree), self.component(degree))
            second = matmul(self.component(following), source.differential(degree))
            if not matrix_equal(first, second):
                raise NotAChainMap(
                    f"square at degree {degree} does not commute", degree
                )

    @property
    def source(self) -> IntegerChainComplex:
        """Return the source complex."""
        return self._source

    @property
    def target(self) -> IntegerChainComplex:
        """Return the target complex."""
        return self._target

    def component(self, degree: int) -> IntMatrix:
        """Return the component at *degree*."""
        matrix = self._components.get(degree)
        if matrix is None:
            return zeros(self._target.rank(degree), self._source.rank(degree))
        return matrix

    def then(self, other: "ChainMap") -> "ChainMap":
        """Return the composite of self followed by *other*."""
        degrees = set(self._source.degrees) | set(other.target.degrees)
        return ChainMap(
            self._source,
            other.target,
            {
                degree: matmul(other.component(degree), self.component(degree))
                for degree in degrees
            },
        )

    @classmethod
    def identity(cls, complex_: IntegerChainComplex) -> "ChainMap":
        """Return the identity chain map of a complex."""
        return cls(
            complex_,
            complex_,
            {degree: identity(complex_.rank(degree)) for degree in complex_.degrees},
        )


def induced_map(
    chain_map: ChainMap,
    degree: int,
    source_basis: Optional[HomologyBasis] = None,
    target_basis: Optional[HomologyBasis] = None,
) -> IntMatrix:
    """
    Compute the map induced on homology.

    Arguments
    ---------
        chain_map: :class:`ChainMap`
            A chain map.
        degree: int
            The homology degree.
        source_basis, target_basis: :class:`HomologyBasis`
            Precomputed canonical generators, computed when missing.

    Returns
    -------
        :class:`numpy.ndarray`
            The matrix over the canonical generators; rows of torsion generators
            are reduced modulo their order.

    Raises
    ------
        NotACycleImage
            If the image of a generating cycle is not a cycle.
    """
    if source_basis is None:
        source_basis = homology_basis(chain_map.source, degree)
    if target_basis is None:
        target_basis = homology_basis(chain_map.target, degree)
    images = matmul(chain_map.component(degree), source_basis.generators)
    result = zeros(len(target_basis), len(source_basis))
    for column in range(len(source_basis)):
        coordinates = target_basis.coordinates(images[:, column : column + 1])
        for row, value in enumerate(coordinates):
            result[row, column] = value
    return result
