"""Nilradical-homology tables and resolution-term bookkeeping.

Two direct table builders (the length-graded table for a finite-dimensional
module, and its discrete-series analogue over W_K with degree
q - l(wu) + 2 l_K(w)), plus the resolution indexers and the degree-collapse
rule that recovers each table from its resolution one term at a time.

The collapse normalization is: a term of internal degree d sitting at
resolution position p ends up in homological degree d - p.  This is pinned
by requiring the BGG pipeline to land dual-Verma terms in degree l(w); the
same rule then drives the Trauber pipeline unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .characters import HomologyTable
from .errors import (
    CollapseAmbiguous,
    NotAntidominant,
    NotCompatible,
    NotIntegral,
    NotStronglyAntidominant,
)
from .orbits import ClosedOrbit
from .realform import CompactGrading, KWeylData
from .rootdata import RootSystem, Weight, classify_weight
from .weyl import WeylElement, WeylGroup, act

BGG = "bgg"
TRAUBER = "trauber"

WeightRule = Callable[[Weight], Weight]


@dataclass(frozen=True)
class TermGeometry:
    """Dimensions shared by the resolution formulas."""

    dim_x: int
    dim_q: int
    q: int


@dataclass(frozen=True)
class ResolutionIndex:
    """Resolution terms: position -> (label element, weight parameter)."""

    kind: str
    terms: Mapping[int, tuple[tuple[WeylElement, Weight], ...]]


def _check_kostant_parameter(rs: RootSystem, lam: Weight) -> None:
    flags = classify_weight(rs, lam)
    if not flags.integral:
        raise NotIntegral("parameter must be integral")
    if not flags.antidominant:
        raise NotAntidominant("parameter must be antidominant")


def _check_schmid_parameter(rs: RootSystem, lam: Weight) -> None:
    flags = classify_weight(rs, lam)
    if not flags.strongly_antidominant:
        raise NotStronglyAntidominant("parameter must be strongly antidominant")
    if not (lam + rs.rho).is_integral():
        raise NotCompatible("lam + rho must be integral")


def kostant_table(rs: RootSystem, group: WeylGroup, lam: Weight) -> HomologyTable:
    """Homology of the finite-dimensional module with lowest weight ``lam``:
    degree l(w) carries w(lam - rho) + rho."""
    _check_kostant_parameter(rs, lam)
    shifted = lam - rs.rho
    return HomologyTable.from_entries(
        (w.length, act(w, shifted) + rs.rho) for w in group.elements
    )


def schmid_table(
    grading: CompactGrading,
    kdata: KWeylData,
    orbit: ClosedOrbit,
    lam: Weight,
) -> HomologyTable:
    """Discrete-series homology for one closed orbit.

    Only cells w*u, w in W_K, contribute; the weight w*u(lam) + rho sits in
    degree q - l(wu) + 2 l_K(w).
    """
    rs = grading.rs
    _check_schmid_parameter(rs, lam)
    entries = []
    for w in kdata.elements:
        wu = kdata.weyl.multiply(w, orbit.u)
        degree = grading.q - wu.length + 2 * kdata.lengthK[w]
        entries.append((degree, act(wu, lam) + rs.rho))
    return HomologyTable.from_entries(entries)


def bgg_terms(rs: RootSystem, group: WeylGroup, lam: Weight) -> ResolutionIndex:
    """Dual-Verma resolution terms: position p carries W(dim X - p)."""
    _check_kostant_parameter(rs, lam)
    dim_x = len(rs.positive_roots)
    shifted = lam - rs.rho
    terms: dict[int, list[tuple[WeylElement, Weight]]] = {p: [] for p in range(dim_x + 1)}
    for w in group.elements:
        terms[dim_x - w.length].append((w, act(w, shifted)))
    return ResolutionIndex(
        kind=BGG,
        terms={
            p: tuple(sorted(labels, key=lambda item: item[0].reduced_word))
            for p, labels in terms.items()
        },
    )


def trauber_terms(
    grading: CompactGrading,
    kdata: KWeylData,
    orbit: ClosedOrbit,
    lam: Weight,
) -> ResolutionIndex:
    """Standard-module resolution terms: position p carries W_K(dim Q - p)."""
    rs = grading.rs
    _check_schmid_parameter(rs, lam)
    dim_q = len(grading.compact_positive)
    terms: dict[int, list[tuple[WeylElement, Weight]]] = {p: [] for p in range(dim_q + 1)}
    for w in kdata.elements:
        wu = kdata.weyl.multiply(w, orbit.u)
        terms[dim_q - kdata.lengthK[w]].append((w, act(wu, lam)))
    return ResolutionIndex(
        kind=TRAUBER,
        terms={
            p: tuple(sorted(labels, key=lambda item: item[0].reduced_word))
            for p, labels in terms.items()
        },
    )


def term_homology_degree(
    kind: str,
    w: WeylElement,
    u: WeylElement | None,
    geom: TermGeometry,
    kdata: KWeylData | None = None,
) -> tuple[int, WeightRule]:
    """Homology degree and weight rule for one resolution term.

    A BGG term concentrates in degree dim X with weight w(lam - rho) + rho;
    a Trauber term in degree dim X - l(wu) + l_K(w) with weight wu(lam) + rho.
    """
    rank = len(w.matrix)
    rho = Weight((1,) * rank)
    if kind == BGG:
        def rule(lam: Weight, _w: WeylElement = w) -> Weight:
            return act(_w, lam - rho) + rho

        return geom.dim_x, rule
    if kind == TRAUBER:
        if u is None or kdata is None:
            raise ValueError("Trauber terms need the orbit element and W_K data")
        wu = kdata.weyl.multiply(w, u)
        degree = geom.dim_x - wu.length + kdata.lengthK[w]

        def rule(lam: Weight, _wu: WeylElement = wu) -> Weight:
            return act(_wu, lam) + rho

        return degree, rule
    raise ValueError(f"unknown resolution kind {kind!r}")


def collapse(
    components: Iterable[Mapping[int, tuple[int, Weight] | None]],
) -> HomologyTable:
    """Collapse per-term data to final degrees, one weight component at a time.

    Each component maps resolution positions to an optional (degree, weight);
    at most one position may be non-vanishing.  The surviving entry lands in
    final degree ``degree - position``.
    """
    entries = []
    for component in components:
        live = [(p, v) for p, v in component.items() if v is not None]
        if not live:
            continue
        if len(live) > 1:
            positions = sorted(p for p, _ in live)
            raise CollapseAmbiguous(
                f"positions {positions} are all non-vanishing for one weight component"
            )
        position, (degree, weight) = live[0]
        entries.append((degree - position, weight))
    return HomologyTable.from_entries(entries)


def kostant_via_bgg(rs: RootSystem, group: WeylGroup, lam: Weight) -> HomologyTable:
    """Recover the length-graded table through the BGG resolution pipeline."""
    resolution = bgg_terms(rs, group, lam)
    geom = TermGeometry(dim_x=len(rs.positive_roots), dim_q=0, q=0)
    positions = list(resolution.terms)
    components = []
    for position, labels in resolution.terms.items():
        for w, _param in labels:
            degree, rule = term_homology_degree(BGG, w, None, geom)
            component: dict[int, tuple[int, Weight] | None] = {p: None for p in positions}
            component[position] = (degree, rule(lam))
            components.append(component)
    return collapse(components)


def schmid_via_trauber(
    grading: CompactGrading,
    kdata: KWeylData,
    orbit: ClosedOrbit,
    lam: Weight,
) -> HomologyTable:
    """Recover the discrete-series table through the Trauber pipeline."""
    resolution = trauber_terms(grading, kdata, orbit, lam)
    geom = TermGeometry(
        dim_x=len(grading.rs.positive_roots),
        dim_q=len(grading.compact_positive),
        q=grading.q,
    )
    positions = list(resolution.terms)
    components = []
    for position, labels in resolution.terms.items():
        for w, _param in labels:
            degree, rule = term_homology_degree(TRAUBER, w, orbit.u, geom, kdata=kdata)
            component: dict[int, tuple[int, Weight] | None] = {p: None for p in positions}
            component[position] = (degree, rule(lam))
            components.append(component)
    return collapse(components)
