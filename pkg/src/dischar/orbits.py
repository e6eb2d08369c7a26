"""Closed K-orbits as positive systems containing the compact positives.

Each closed orbit corresponds to exactly one positive system of the full
root system that contains R_c+; the element ``u`` with ``u(Sigma+) = that
system`` labels the orbit, and the orbit decomposes into |W_K| Bruhat
strata with cells w*u of dimension l_K(w).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .realform import CompactGrading, KWeylData, weyl_k
from .rootdata import Root, RootSystem
from .weyl import WeylElement, WeylGroup


@dataclass(frozen=True)
class Stratum:
    w: WeylElement
    cell: WeylElement
    dim: int


@dataclass(frozen=True)
class ClosedOrbit:
    """One closed K-orbit: its positive system, chamber element and strata."""

    positive_system: Mapping[Root, int]
    u: WeylElement
    strata: tuple[Stratum, ...]


def _positive_system_of(rs: RootSystem, w: WeylElement) -> dict[Root, int]:
    # +1 on the positive roots beta lying in w(Sigma+), -1 otherwise
    image_fw = set()
    for alpha in rs.positive_roots:
        fw = tuple(
            sum(w.matrix[k][m] * alpha.fw_coords[m] for m in range(rs.rank))
            for k in range(rs.rank)
        )
        image_fw.add(fw)
    return {
        beta: (1 if beta.fw_coords in image_fw else -1) for beta in rs.positive_roots
    }


def _strata_for(u: WeylElement, kdata: KWeylData) -> tuple[Stratum, ...]:
    strata = [
        Stratum(w=w, cell=kdata.weyl.multiply(w, u), dim=kdata.lengthK[w])
        for w in kdata.elements
    ]
    strata.sort(key=lambda s: (s.dim, s.cell.reduced_word))
    return tuple(strata)


def orbit_strata(orbit: ClosedOrbit, kdata: KWeylData) -> tuple[Stratum, ...]:
    """The Bruhat strata (w, w*u, l_K(w)) sorted by dimension then cell word."""
    return _strata_for(orbit.u, kdata)


def enumerate_closed_orbits(
    rs: RootSystem,
    grading: CompactGrading,
    group: WeylGroup,
    kdata: KWeylData | None = None,
) -> list[ClosedOrbit]:
    """All closed orbits, canonically ordered by the reduced word of ``u``."""
    if kdata is None:
        kdata = weyl_k(rs, grading, group)
    orbits = []
    for w in group.elements:
        system = _positive_system_of(rs, w)
        if all(system[alpha] == 1 for alpha in grading.compact_positive):
            orbits.append(
                ClosedOrbit(positive_system=system, u=w, strata=_strata_for(w, kdata))
            )
    orbits.sort(key=lambda orbit: orbit.u.reduced_word)
    return orbits
