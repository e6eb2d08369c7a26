"""Weyl group generation by breadth-first closure over simple reflections.

Elements are stored as dense integer matrices acting on fundamental-weight
coordinates.  Equality and hashing go through the matrix alone; the stored
reduced word is one shortest word found by the BFS (breadth-first order
guarantees it is reduced).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Mapping

from .errors import DimensionMismatch, GroupTooLarge, InvariantViolation
from .rootdata import Root, RootSystem, Weight

Matrix = tuple[tuple[int, ...], ...]


def _identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _det(m: Matrix) -> int:
    n = len(m)
    rows = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(col + 1, n):
            if rows[r][col]:
                scale = rows[r][col]
                rows[r] = [x - scale * y for x, y in zip(rows[r], rows[col])]
    assert det.denominator == 1
    return int(det)


class WeylElement:
    """Group element: matrix on fw coordinates, one reduced word, length."""

    __slots__ = ("matrix", "reduced_word", "length", "_hash")

    def __init__(self, matrix: Matrix, reduced_word: tuple[int, ...]) -> None:
        self.matrix = matrix
        self.reduced_word = reduced_word
        self.length = len(reduced_word)
        self._hash = hash(matrix)

    def word_str(self) -> str:
        """Render as "s1*s2*s1" with 1-based generator indices, "e" if trivial."""
        if not self.reduced_word:
            return "e"
        return "*".join(f"s{i + 1}" for i in self.reduced_word)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"WeylElement({self.word_str()})"


def simple_reflection_matrix(rs: RootSystem, i: int) -> Matrix:
    # (s_i lam)_k = lam_k - lam_i C[k][i]
    return tuple(
        tuple(int(k == m) - (rs.cartan[k][i] if m == i else 0) for m in range(rs.rank))
        for k in range(rs.rank)
    )


def reflection_matrix(rs: RootSystem, alpha: Root) -> Matrix:
    # (s_alpha lam)_k = lam_k - <alpha-check, lam> fw(alpha)_k
    return tuple(
        tuple(int(k == m) - alpha.fw_coords[k] * alpha.coroot_coords[m] for m in range(rs.rank))
        for k in range(rs.rank)
    )


@dataclass(frozen=True)
class WeylGroup:
    """The full Weyl group, closed under composition, canonically ordered."""

    rank: int
    elements: tuple[WeylElement, ...]
    order: int
    simple: tuple[WeylElement, ...]
    _by_matrix: Mapping[Matrix, WeylElement] = field(repr=False)
    _inverses: Mapping[WeylElement, WeylElement] = field(repr=False)

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    @property
    def longest(self) -> WeylElement:
        return self.elements[-1]

    def lookup(self, matrix: Matrix) -> WeylElement:
        try:
            return self._by_matrix[matrix]
        except KeyError:
            raise InvariantViolation("matrix is not an element of this Weyl group") from None

    def multiply(self, a: WeylElement, b: WeylElement) -> WeylElement:
        """The canonical element equal to the composition a after b."""
        return self.lookup(_matmul(a.matrix, b.matrix))

    def inverse(self, a: WeylElement) -> WeylElement:
        try:
            return self._inverses[a]
        except KeyError:
            raise InvariantViolation("element is not a member of this Weyl group") from None

    def __iter__(self) -> Iterator[WeylElement]:
        return iter(self.elements)


def act(w: WeylElement, lam: Weight) -> Weight:
    """Apply a Weyl element to a weight (exact matrix-vector product)."""
    n = len(w.matrix)
    if lam.rank != n:
        raise DimensionMismatch(f"rank {n} element applied to rank {lam.rank} weight")
    return Weight(
        sum((Fraction(w.matrix[k][m]) * lam.coords[m] for m in range(n)), start=Fraction(0))
        for k in range(n)
    )


def inversion_count(rs: RootSystem, matrix: Matrix) -> int:
    """Number of positive roots sent to negative roots by the matrix."""
    count = 0
    for alpha in rs.positive_roots:
        image = tuple(
            sum(matrix[k][m] * alpha.fw_coords[m] for m in range(rs.rank))
            for k in range(rs.rank)
        )
        positive = rs.is_positive_fw(image)
        if positive is None:
            raise InvariantViolation("Weyl image of a root is not a root")
        if not positive:
            count += 1
    return count


def generate(rs: RootSystem, max_order: int = 100_000) -> WeylGroup:
    """Breadth-first closure of the simple reflections.

    Each element records the first shortest word reaching it, so stored
    words are reduced.  The element list is sorted by (length, word).
    """
    gens = [simple_reflection_matrix(rs, i) for i in range(rs.rank)]
    identity = _identity(rs.rank)
    found: dict[Matrix, WeylElement] = {identity: WeylElement(identity, ())}
    frontier = [found[identity]]
    while frontier:
        new_frontier: list[WeylElement] = []
        for w in frontier:
            for i in range(rs.rank):
                matrix = _matmul(w.matrix, gens[i])
                if matrix in found:
                    continue
                element = WeylElement(matrix, w.reduced_word + (i,))
                found[matrix] = element
                new_frontier.append(element)
                if len(found) > max_order:
                    raise GroupTooLarge(f"Weyl group exceeds {max_order} elements")
        new_frontier.sort(key=lambda w: w.reduced_word)
        frontier = new_frontier

    elements = sorted(found.values(), key=lambda w: (w.length, w.reduced_word))
    for w in elements:
        if inversion_count(rs, w.matrix) != w.length:
            raise InvariantViolation(
                f"word length of {w.word_str()} disagrees with its inversion count"
            )
    top = [w for w in elements if w.length == elements[-1].length]
    if len(top) != 1:
        raise InvariantViolation("longest element is not unique")

    # simple reflections are involutions, so the reversed word inverts
    inverses = {}
    for w in elements:
        matrix = identity
        for i in reversed(w.reduced_word):
            matrix = _matmul(matrix, gens[i])
        inverses[w] = found[matrix]

    return WeylGroup(
        rank=rs.rank,
        elements=tuple(elements),
        order=len(elements),
        simple=tuple(found[g] for g in gens),
        _by_matrix=found,
        _inverses=inverses,
    )


def length_fiber(group: WeylGroup, p: int) -> frozenset[WeylElement]:
    """All elements of the given length; empty outside [0, l(longest)]."""
    return frozenset(w for w in group.elements if w.length == p)


def sign(w: WeylElement) -> int:
    """(-1)**length, checked against the matrix determinant."""
    value = -1 if w.length % 2 else 1
    if _det(w.matrix) != value:
        raise InvariantViolation(f"sign of {w.word_str()} disagrees with its determinant")
    return value
