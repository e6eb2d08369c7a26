"""K-type multiplicities of discrete series via partition functions.

``partition``/``partition_p`` count representations of a weight as sums of
noncompact positive roots (a root may repeat; order is irrelevant).  The
closed multiplicity formula alternates these counts over W_K; the
``filtration_oracle`` re-derives the same number on an independent code
path, by walking the symmetric powers of the normal bundle level by level
and resolving each line-bundle twist with the Borel-Weil-Bott step for K.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from .errors import InvariantViolation, ParameterIncompatible, TruncationTooSmall
from .realform import CompactGrading, KWeylData
from .rootdata import Weight, classify_weight, coroot_pairing
from .weyl import act

IntVec = tuple[int, ...]


@dataclass(frozen=True)
class KTypeTable:
    """Multiplicities keyed by the lowest K-weight; zero entries omitted."""

    entries: Mapping[Weight, int]

    def sorted_entries(self) -> list[tuple[Weight, int]]:
        return sorted(self.entries.items(), key=lambda item: item[0].coords)


def _as_root_lattice(grading: CompactGrading, mu: Weight) -> IntVec | None:
    """mu in simple-root coordinates if it lies in the lattice, else None."""
    coords = grading.rs.to_root_coords(mu)
    if any(c.denominator != 1 for c in coords):
        return None
    return tuple(int(c) for c in coords)


def _noncompact_root_coords(grading: CompactGrading) -> tuple[IntVec, ...]:
    return tuple(r.root_coords for r in grading.noncompact_positive)


def _count_partitions(
    grading: CompactGrading,
    target: IntVec,
    parts: int | None,
) -> int:
    """Multisets of noncompact positive roots summing to target.

    ``parts`` restricts the multiset size; None means any size.  One fixed
    root order is peeled recursively, so no multiset is counted twice.
    """
    roots = _noncompact_root_coords(grading)
    cache = grading._partition_cache

    def count(idx: int, remaining: IntVec, budget: int | None) -> int:
        if idx == len(roots):
            done = all(c == 0 for c in remaining) and budget in (None, 0)
            return 1 if done else 0
        key = (idx, remaining, budget)
        cached = cache.get(key)
        if cached is not None:
            return cached
        beta = roots[idx]
        total = 0
        k = 0
        current = remaining
        while (budget is None or k <= budget) and all(c >= 0 for c in current):
            total += count(idx + 1, current, None if budget is None else budget - k)
            k += 1
            current = tuple(c - b for c, b in zip(current, beta))
        cache[key] = total
        return total

    return count(0, target, parts)


def partition_p(grading: CompactGrading, mu: Weight, p: int) -> int:
    """Number of ways to write mu as a sum of exactly p noncompact positive roots."""
    if p < 0:
        return 0
    target = _as_root_lattice(grading, mu)
    if target is None or any(c < 0 for c in target):
        return 0
    return _count_partitions(grading, target, p)


def partition(grading: CompactGrading, mu: Weight) -> int:
    """Number of ways to write mu as a sum of noncompact positive roots.

    Finite because the noncompact positives lie in an open half space;
    zero off the cone, and 1 for mu = 0 (the empty sum).
    """
    target = _as_root_lattice(grading, mu)
    if target is None or any(c < 0 for c in target):
        return 0
    return _count_partitions(grading, target, None)


def bwb_cohomology(
    grading: CompactGrading, kdata: KWeylData, eta: Weight
) -> tuple[int, Weight] | None:
    """Borel-Weil-Bott step for K applied to the shifted parameter ``eta``.

    Returns None when eta is singular for a compact root.  Otherwise the
    unique w in W_K with w^{-1} eta strictly antidominant for R_c+ gives the
    cohomological degree l_K(w) and the lowest K-weight w^{-1} eta + rho_c.
    """
    for alpha in grading.compact_positive:
        if coroot_pairing(alpha, eta) == 0:
            return None
    for w in kdata.elements:
        candidate = act(kdata.weyl.inverse(w), eta)
        if all(coroot_pairing(a, candidate) < 0 for a in grading.compact_positive):
            return kdata.lengthK[w], candidate + grading.rho_c
    raise InvariantViolation("no W_K chamber representative found for a regular weight")


def _check_multiplicity_parameters(
    grading: CompactGrading, kdata: KWeylData, lam: Weight, nu: Weight
) -> None:
    rs = grading.rs
    flags = classify_weight(rs, lam)
    if not flags.regular or not flags.antidominant:
        raise ParameterIncompatible("lam must be regular antidominant")
    if not (lam + rs.rho).is_integral():
        raise ParameterIncompatible("lam + rho must be integral")
    for alpha in grading.compact_positive:
        value = coroot_pairing(alpha, nu)
        if value.denominator != 1:
            raise ParameterIncompatible("nu must pair integrally with compact coroots")
        if value > 0:
            raise ParameterIncompatible("nu must be antidominant for R_c+")


def blattner_multiplicity(
    grading: CompactGrading, kdata: KWeylData, lam: Weight, nu: Weight
) -> int:
    """Multiplicity of the K-type with lowest weight nu, by the closed formula."""
    _check_multiplicity_parameters(grading, kdata, lam, nu)
    shifted = lam - grading.rho_n
    total = 0
    for w in kdata.elements:
        argument = shifted - act(w, nu - grading.rho_c)
        sign = -1 if kdata.lengthK[w] % 2 else 1
        total += sign * partition(grading, argument)
    return total


def _multisets_by_size(
    roots: Sequence[Weight], rank: int, max_size: int
) -> Iterator[tuple[int, Weight]]:
    """Yield (size, sum) once for every multiset of at most max_size roots."""

    def rec(idx: int, used: int, total: Weight) -> Iterator[tuple[int, Weight]]:
        if idx == len(roots):
            yield used, total
            return
        current = total
        k = 0
        while used + k <= max_size:
            yield from rec(idx + 1, used + k, current)
            k += 1
            if used + k <= max_size:
                current = current + roots[idx]

    yield from rec(0, 0, Weight.zero(rank))


def _max_parts_bound(grading: CompactGrading, mu: Weight) -> int | None:
    """Largest possible multiset size for mu, from simple-root coordinate sums."""
    target = _as_root_lattice(grading, mu)
    if target is None or any(c < 0 for c in target):
        return None
    if not grading.noncompact_positive:
        return 0 if all(c == 0 for c in target) else None
    min_height = min(r.height for r in grading.noncompact_positive)
    return sum(target) // min_height


def filtration_oracle(
    grading: CompactGrading,
    kdata: KWeylData,
    lam: Weight,
    nu: Weight,
    p_max: int | None = None,
) -> int:
    """Re-derive the multiplicity by walking the normal-degree filtration.

    Level s contributes one line-bundle twist per multiset of s noncompact
    positive roots; each twist is resolved with :func:`bwb_cohomology` and
    matched against nu with sign (-1)^degree.  Independent of the closed
    formula: no partition function is consulted.
    """
    _check_multiplicity_parameters(grading, kdata, lam, nu)
    shifted = lam - grading.rho_n

    needed = 0
    for w in kdata.elements:
        bound = _max_parts_bound(grading, shifted - act(w, nu - grading.rho_c))
        if bound is not None:
            needed = max(needed, bound)
    if p_max is None:
        p_max = needed
    elif p_max < needed:
        raise TruncationTooSmall(
            f"p_max={p_max} but contributions can occur up to level {needed}"
        )

    total = 0
    kappa_roots = [r.weight() for r in grading.noncompact_positive]
    for _size, kappa in _multisets_by_size(kappa_roots, grading.rs.rank, p_max):
        result = bwb_cohomology(grading, kdata, shifted - kappa)
        if result is None:
            continue
        degree, lowest = result
        if lowest == nu:
            total += -1 if degree % 2 else 1
    return total


def ktype_table(
    grading: CompactGrading,
    kdata: KWeylData,
    lam: Weight,
    box: tuple[Sequence[Fraction | int], Sequence[Fraction | int]],
) -> KTypeTable:
    """Blattner multiplicities for every antidominant integral nu in a box."""
    rs = grading.rs
    lo = [Fraction(c) for c in box[0]]
    hi = [Fraction(c) for c in box[1]]
    if len(lo) != rs.rank or len(hi) != rs.rank:
        raise ParameterIncompatible("box endpoints must have one entry per rank")

    def axis(i: int) -> range:
        return range(math.ceil(lo[i]), math.floor(hi[i]) + 1)

    entries: dict[Weight, int] = {}

    def walk(i: int, prefix: list[int]) -> None:
        if i == rs.rank:
            nu = Weight(prefix)
            if any(coroot_pairing(a, nu) > 0 for a in grading.compact_positive):
                return
            value = blattner_multiplicity(grading, kdata, lam, nu)
            if value:
                entries[nu] = value
            return
        for c in axis(i):
            walk(i + 1, prefix + [c])

    walk(0, [])
    return KTypeTable(entries=entries)
