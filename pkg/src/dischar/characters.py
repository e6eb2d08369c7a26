"""Formal characters over the weight lattice and the classical numerators.

A formal character is a finitely supported integer combination of lattice
exponentials e^mu, stored as a sparse map keyed by exact fundamental-weight
coordinates.  The module provides the Weyl denominator (computed two ways
and compared), the alternating Weyl numerator, a Freudenthal-recursion
character that serves as an independent oracle, the elliptic numerator of
a discrete series, and Euler characteristics of homology tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

from .errors import (
    InvariantViolation,
    NotAntidominant,
    NotCompatible,
    NotIntegral,
    NotStronglyAntidominant,
)
from .realform import CompactGrading, KWeylData
from .rootdata import (
    RootSystem,
    Weight,
    classify_weight,
    dominant_representative,
)
from .weyl import WeylGroup, act


class FormalCharacter:
    """Finitely supported integer function on the weight lattice."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Weight, int] | None = None) -> None:
        self.terms: dict[Weight, int] = {
            w: c for w, c in (terms or {}).items() if c != 0
        }

    @classmethod
    def zero(cls) -> "FormalCharacter":
        return cls()

    @classmethod
    def exponential(cls, mu: Weight, coeff: int = 1) -> "FormalCharacter":
        return cls({mu: coeff})

    @classmethod
    def one(cls, rank: int) -> "FormalCharacter":
        return cls({Weight.zero(rank): 1})

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        out = dict(self.terms)
        for w, c in other.terms.items():
            value = out.get(w, 0) + c
            if value:
                out[w] = value
            else:
                out.pop(w, None)
        result = FormalCharacter.zero()
        result.terms = out
        return result

    def __neg__(self) -> "FormalCharacter":
        return FormalCharacter({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "FormalCharacter") -> "FormalCharacter":
        return self + (-other)

    def __mul__(self, other: "FormalCharacter | int") -> "FormalCharacter":
        if isinstance(other, int):
            return FormalCharacter({w: c * other for w, c in self.terms.items()})
        small, large = (self, other) if len(self.terms) <= len(other.terms) else (other, self)
        out: dict[Weight, int] = {}
        for w1, c1 in small.terms.items():
            for w2, c2 in large.terms.items():
                key = w1 + w2
                value = out.get(key, 0) + c1 * c2
                if value:
                    out[key] = value
                else:
                    del out[key]
        result = FormalCharacter.zero()
        result.terms = out
        return result

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FormalCharacter) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, mu: Weight) -> int:
        return self.terms.get(mu, 0)

    def sorted_terms(self) -> list[tuple[Weight, int]]:
        """Terms in lexicographic coordinate order (deterministic output)."""
        return sorted(self.terms.items(), key=lambda item: item[0].coords)

    def dimension(self) -> int:
        return sum(self.terms.values())

    def __repr__(self) -> str:
        inner = " + ".join(f"{c}*e^{w.coords}" for w, c in self.sorted_terms())
        return f"FormalCharacter({inner or '0'})"

    __hash__ = None  # mutable mapping inside


@dataclass(frozen=True)
class HomologyTable:
    """Degrees mapped to weight multisets; zero rows are never stored."""

    rows: Mapping[int, tuple[Weight, ...]]

    @classmethod
    def from_entries(cls, entries: Iterable[tuple[int, Weight]]) -> "HomologyTable":
        rows: dict[int, list[Weight]] = {}
        for degree, weight in entries:
            if degree < 0:
                raise InvariantViolation(f"negative homology degree {degree}")
            rows.setdefault(degree, []).append(weight)
        return cls(rows={p: tuple(sorted(ws, key=lambda w: w.coords)) for p, ws in sorted(rows.items())})

    def total_multiplicity(self) -> int:
        return sum(len(ws) for ws in self.rows.values())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HomologyTable) and dict(self.rows) == dict(other.rows)

    __hash__ = None


def weyl_denominator(rs: RootSystem) -> FormalCharacter:
    """The product of (1 - e^alpha) over the positive roots.

    Computed both as an expanded product and as the signed sum over all
    subsets of positive roots; the two expansions must agree exactly.
    """
    product = FormalCharacter.one(rs.rank)
    for alpha in rs.positive_roots:
        factor = FormalCharacter({Weight.zero(rs.rank): 1, alpha.weight(): -1})
        product = product * factor

    by_subsets: dict[Weight, int] = {}
    for size in range(len(rs.positive_roots) + 1):
        coeff = -1 if size % 2 else 1
        for subset in combinations(rs.positive_roots, size):
            total = Weight.zero(rs.rank)
            for alpha in subset:
                total = total + alpha.weight()
            value = by_subsets.get(total, 0) + coeff
            if value:
                by_subsets[total] = value
            else:
                del by_subsets[total]
    if FormalCharacter(by_subsets) != product:
        raise InvariantViolation("denominator product and subset expansion disagree")
    return product


def weyl_numerator(rs: RootSystem, group: WeylGroup, lam: Weight) -> FormalCharacter:
    """Alternating sum of e^{w(lam - rho) + rho} over the full Weyl group."""
    flags = classify_weight(rs, lam)
    if not flags.integral:
        raise NotIntegral("numerator parameter must be integral")
    if not flags.antidominant:
        raise NotAntidominant("numerator parameter must be antidominant")
    shifted = lam - rs.rho
    result: dict[Weight, int] = {}
    for w in group.elements:
        term = act(w, shifted) + rs.rho
        coeff = -1 if w.length % 2 else 1
        value = result.get(term, 0) + coeff
        if value:
            result[term] = value
        else:
            del result[term]
    return FormalCharacter(result)


def _symmetrizer(rs: RootSystem) -> tuple[Fraction, ...]:
    # d with d_i C_ij = d_j C_ji; exists for every finite-type matrix
    d: list[Fraction | None] = [None] * rs.rank
    for start in range(rs.rank):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(rs.rank):
                if i == j or rs.cartan[i][j] == 0 or d[j] is not None:
                    continue
                d[j] = d[i] * rs.cartan[i][j] / rs.cartan[j][i]
                queue.append(j)
    assert all(x is not None and x > 0 for x in d)
    return tuple(d)  # type: ignore[arg-type]


def _inner(rs: RootSystem, d: tuple[Fraction, ...], a: Weight, b: Weight) -> Fraction:
    # (a, b) via b in the simple-root basis: (omega_i, alpha_j) = delta_ij d_j
    b_root = rs.to_root_coords(b)
    return sum(
        (b_root[j] * d[j] * a.coords[j] for j in range(rs.rank)), start=Fraction(0)
    )


def _weight_support(rs: RootSystem, high: Weight) -> set[Weight]:
    # all weights of the irreducible module: mu with dom(mu) <= high in the
    # root-lattice partial order; closed under single simple-root descents
    def member(candidate: Weight) -> bool:
        diff = rs.to_root_coords(high - dominant_representative(rs, candidate))
        return all(c.denominator == 1 and c >= 0 for c in diff)

    support = {high}
    frontier = [high]
    simple_weights = [alpha.weight() for alpha in rs.simple_roots]
    while frontier:
        new_frontier = []
        for mu in frontier:
            for alpha_w in simple_weights:
                nu = mu - alpha_w
                if nu not in support and member(nu):
                    support.add(nu)
                    new_frontier.append(nu)
        frontier = new_frontier
    return support


def freudenthal_character(rs: RootSystem, lam_lowest: Weight) -> FormalCharacter:
    """Full weight-multiplicity character via the Freudenthal recursion.

    The lowest-weight parameter is converted internally to the highest
    weight of the same module.  This code path shares nothing with the
    Weyl numerator or the partition functions, so it can act as an
    independent oracle against both.
    """
    flags = classify_weight(rs, lam_lowest)
    if not flags.integral:
        raise NotIntegral("lowest weight must be integral")
    if not flags.antidominant:
        raise NotAntidominant("lowest weight must be antidominant")

    high = dominant_representative(rs, lam_lowest)
    support = _weight_support(rs, high)
    d = _symmetrizer(rs)
    rho = rs.rho

    dominants = sorted(
        (mu for mu in support if all(c >= 0 for c in mu.coords)),
        key=lambda mu: sum(rs.to_root_coords(high - mu)),
    )
    norm_high = _inner(rs, d, high + rho, high + rho)
    mult: dict[Weight, Fraction] = {}
    for mu in dominants:
        if mu == high:
            mult[mu] = Fraction(1)
            continue
        acc = Fraction(0)
        for alpha in rs.positive_roots:
            alpha_w = alpha.weight()
            step = mu + alpha_w
            while step in support:
                m = mult.get(dominant_representative(rs, step))
                if m:
                    acc += m * _inner(rs, d, step, alpha_w)
                step = step + alpha_w
        denom = norm_high - _inner(rs, d, mu + rho, mu + rho)
        if denom <= 0:
            raise InvariantViolation("Freudenthal denominator is not positive")
        value = 2 * acc / denom
        if value.denominator != 1:
            raise InvariantViolation("Freudenthal multiplicity is not an integer")
        mult[mu] = value

    return FormalCharacter(
        {mu: int(mult[dominant_representative(rs, mu)]) for mu in support}
    )


def discrete_numerator(
    grading: CompactGrading, kdata: KWeylData, lam: Weight
) -> FormalCharacter:
    """Elliptic numerator (-1)^q sum over W_K of (-1)^{l_K(w)} e^{w lam + rho}."""
    rs = grading.rs
    flags = classify_weight(rs, lam)
    if not flags.strongly_antidominant:
        raise NotStronglyAntidominant("parameter must be strongly antidominant")
    if not (lam + rs.rho).is_integral():
        raise NotCompatible("lam + rho must be integral")
    overall = -1 if grading.q % 2 else 1
    result: dict[Weight, int] = {}
    for w in kdata.elements:
        term = act(w, lam) + rs.rho
        coeff = overall * (-1 if kdata.lengthK[w] % 2 else 1)
        value = result.get(term, 0) + coeff
        if value:
            result[term] = value
        else:
            del result[term]
    return FormalCharacter(result)


def euler_character(table: HomologyTable) -> FormalCharacter:
    """Alternating sum over degrees of the table's weight rows."""
    result = FormalCharacter.zero()
    for degree, weights in table.rows.items():
        coeff = -1 if degree % 2 else 1
        for mu in weights:
            result = result + FormalCharacter.exponential(mu, coeff)
    return result
