"""Equal-rank real forms as multiplicative sign gradings of the roots.

A real form enters as a vector of signs on the simple roots (+1 compact,
-1 noncompact); the sign of any root is the product over its simple-root
coordinates, which is automatically multiplicative.  Hand-entered full
assignments can be screened with :func:`validate_grading`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DimensionMismatch, IncompleteAssignment, InvariantViolation
from .rootdata import Root, RootSystem, Weight
from .weyl import WeylElement, WeylGroup, reflection_matrix


@dataclass
class CompactGrading:
    """Sign grading of the roots with the derived compact/noncompact data.

    ``q`` is the number of noncompact positive roots, i.e. half the total
    number of noncompact roots.
    """

    rs: RootSystem
    simple_signs: tuple[int, ...]
    sign_by_root: Mapping[Root, int]
    compact_positive: tuple[Root, ...]
    noncompact_positive: tuple[Root, ...]
    rho_c: Weight
    rho_n: Weight
    q: int
    _partition_cache: dict = field(default_factory=dict, repr=False, compare=False)

    def sign_of(self, root: Root) -> int:
        return self.sign_by_root[root]


@dataclass(frozen=True)
class KWeylData:
    """The Weyl group of the compact roots inside the ambient group.

    ``lengthK`` counts compact positive roots made negative; ``simpleK``
    holds the simple roots of the compact positive system.
    """

    weyl: WeylGroup
    elements: tuple[WeylElement, ...]
    lengthK: Mapping[WeylElement, int]
    simpleK: tuple[Root, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> WeylElement:
        return self.weyl.identity


def build_grading(rs: RootSystem, simple_signs: Sequence[int]) -> CompactGrading:
    """Extend signs on the simple roots multiplicatively to all roots."""
    signs = tuple(int(s) for s in simple_signs)
    if len(signs) != rs.rank:
        raise DimensionMismatch(f"{len(signs)} signs for rank {rs.rank}")
    if any(s not in (1, -1) for s in signs):
        raise IncompleteAssignment("simple signs must be +1 or -1")

    sign_by_root = {}
    for root in rs.positive_roots:
        odd = sum(n for n, s in zip(root.root_coords, signs) if s == -1)
        sign_by_root[root] = -1 if odd % 2 else 1

    compact = tuple(r for r in rs.positive_roots if sign_by_root[r] == 1)
    noncompact = tuple(r for r in rs.positive_roots if sign_by_root[r] == -1)
    rho_c = Weight(
        Fraction(sum(r.fw_coords[i] for r in compact), 2) for i in range(rs.rank)
    )
    return CompactGrading(
        rs=rs,
        simple_signs=signs,
        sign_by_root=sign_by_root,
        compact_positive=compact,
        noncompact_positive=noncompact,
        rho_c=rho_c,
        rho_n=rs.rho - rho_c,
        q=len(noncompact),
    )


def validate_grading(rs: RootSystem, assignment: Mapping[Root, int]) -> bool:
    """Whether a full sign assignment is multiplicative on all root sums.

    The assignment is given on positive roots (signs extend evenly to the
    negatives).  Checking positive triples alpha + beta = gamma suffices:
    every mixed-sign root sum rearranges into such a triple.
    """
    for root in rs.positive_roots:
        if root not in assignment:
            raise IncompleteAssignment(f"no sign assigned to {root!r}")
        if assignment[root] not in (1, -1):
            raise IncompleteAssignment(f"sign of {root!r} is not +1 or -1")
    index = {r.root_coords: r for r in rs.positive_roots}
    n = len(rs.positive_roots)
    for i in range(n):
        for j in range(i, n):
            a = rs.positive_roots[i]
            b = rs.positive_roots[j]
            total = tuple(x + y for x, y in zip(a.root_coords, b.root_coords))
            c = index.get(total)
            if c is not None and assignment[c] != assignment[a] * assignment[b]:
                return False
    return True


def weyl_k(rs: RootSystem, grading: CompactGrading, group: WeylGroup) -> KWeylData:
    """Close the compact-root reflections into W_K and compute its lengths."""
    generators = [group.lookup(reflection_matrix(rs, a)) for a in grading.compact_positive]
    members = {group.identity}
    frontier = [group.identity]
    while frontier:
        new_frontier = []
        for w in frontier:
            for g in generators:
                prod = group.multiply(w, g)
                if prod not in members:
                    members.add(prod)
                    new_frontier.append(prod)
        frontier = new_frontier

    compact_fw = frozenset(r.fw_coords for r in grading.compact_positive)
    lengthK = {}
    for w in members:
        count = 0
        for alpha in grading.compact_positive:
            image = tuple(
                sum(w.matrix[k][m] * alpha.fw_coords[m] for m in range(rs.rank))
                for k in range(rs.rank)
            )
            if image in compact_fw:
                continue
            if tuple(-c for c in image) in compact_fw:
                count += 1
            else:
                raise InvariantViolation("W_K does not preserve the compact roots")
        lengthK[w] = count

    decomposable = set()
    compact_coords = {r.root_coords for r in grading.compact_positive}
    for a in grading.compact_positive:
        for b in grading.compact_positive:
            total = tuple(x + y for x, y in zip(a.root_coords, b.root_coords))
            if total in compact_coords:
                decomposable.add(total)
    simple_k = tuple(
        r for r in grading.compact_positive if r.root_coords not in decomposable
    )

    elements = tuple(sorted(members, key=lambda w: (w.length, w.reduced_word)))
    return KWeylData(weyl=group, elements=elements, lengthK=lengthK, simpleK=simple_k)
