"""Self-check suite for one (Cartan matrix, grading) configuration.

Each section re-derives a family of identities from scratch and reports a
single pass/fail line.  Sections are independent, so the runner may execute
them concurrently; results are always emitted in the fixed section order,
which keeps the output byte-identical across parallelism settings.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

from .blattner import blattner_multiplicity, filtration_oracle, partition, partition_p
from .characters import (
    discrete_numerator,
    euler_character,
    freudenthal_character,
    weyl_denominator,
    weyl_numerator,
)
from .homology import kostant_table, kostant_via_bgg, schmid_table, schmid_via_trauber
from .orbits import enumerate_closed_orbits
from .realform import build_grading, validate_grading, weyl_k
from .rootdata import RootSystem, Weight, build_root_system, coroot_pairing
from .weyl import WeylGroup, act, generate, length_fiber, sign


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerifyContext:
    rs: RootSystem
    group: WeylGroup
    signs: tuple[int, ...]


def _check_root_system(ctx: VerifyContext) -> CheckResult:
    rs = ctx.rs
    positive = set(rs.positive_roots)
    for alpha in rs.positive_roots:
        if coroot_pairing(alpha, alpha.weight()) != 2:
            return CheckResult("root-system", False, "coroot self-pairing is not 2")
    for alpha in rs.simple_roots:
        images = set()
        for beta in rs.positive_roots:
            if beta == alpha:
                continue
            shift = coroot_pairing(alpha, beta.weight())
            coords = tuple(
                b - int(shift) * a
                for a, b in zip(alpha.root_coords, beta.root_coords)
            )
            image = rs.root_with_coords(coords)
            if image is None or image not in positive:
                return CheckResult(
                    "root-system", False, "simple reflection does not permute the positives"
                )
            images.add(image)
        if images != positive - {alpha}:
            return CheckResult("root-system", False, "reflection image set mismatch")
    if rs.rho.coords != (1,) * rs.rank:
        return CheckResult("root-system", False, "rho is not the all-ones vector")
    for j, alpha in enumerate(rs.simple_roots):
        if alpha.fw_coords != tuple(rs.cartan[i][j] for i in range(rs.rank)):
            return CheckResult("root-system", False, "fw coordinates mismatch column")
    return CheckResult("root-system", True)


def _check_weyl_group(ctx: VerifyContext) -> CheckResult:
    group = ctx.group
    top = group.longest.length
    fibers = [len(length_fiber(group, p)) for p in range(top + 1)]
    if sum(fibers) != group.order:
        return CheckResult("weyl-group", False, "length fibers do not cover the group")
    if fibers != fibers[::-1]:
        return CheckResult("weyl-group", False, "length generating function not palindromic")
    for w in group.elements:
        if sign(w) != (-1 if w.length % 2 else 1):
            return CheckResult("weyl-group", False, "sign/determinant mismatch")
    rng = random.Random(7)
    for _ in range(5):
        lam = Weight([rng.randint(-6, 6) for _ in range(group.rank)])
        for w in group.elements:
            if act(w, act(group.inverse(w), lam)) != lam:
                return CheckResult("weyl-group", False, "inverse action roundtrip failed")
    return CheckResult("weyl-group", True)


def _check_grading(ctx: VerifyContext) -> CheckResult:
    grading = build_grading(ctx.rs, ctx.signs)
    if not validate_grading(ctx.rs, dict(grading.sign_by_root)):
        return CheckResult("grading", False, "derived grading is not multiplicative")
    if grading.rho_c + grading.rho_n != ctx.rs.rho:
        return CheckResult("grading", False, "rho_c + rho_n differs from rho")
    if grading.q != len(grading.noncompact_positive):
        return CheckResult("grading", False, "q mismatch")
    kdata = weyl_k(ctx.rs, grading, ctx.group)
    if ctx.group.order % kdata.order != 0:
        return CheckResult("grading", False, "|W| not divisible by |W_K|")
    for alpha in kdata.simpleK:
        if coroot_pairing(alpha, grading.rho_c) != 1:
            return CheckResult("grading", False, "rho_c does not pair to 1 on simpleK")
    for w in kdata.elements:
        if (-1) ** w.length != (-1) ** kdata.lengthK[w]:
            return CheckResult("grading", False, "sign restriction to W_K disagrees")
    return CheckResult("grading", True)


def _check_orbits(ctx: VerifyContext) -> CheckResult:
    grading = build_grading(ctx.rs, ctx.signs)
    kdata = weyl_k(ctx.rs, grading, ctx.group)
    orbits = enumerate_closed_orbits(ctx.rs, grading, ctx.group, kdata)
    if len(orbits) * kdata.order != ctx.group.order:
        return CheckResult("orbits", False, "orbit count differs from |W|/|W_K|")
    cells = [s.cell for orbit in orbits for s in orbit.strata]
    if len(cells) != ctx.group.order or set(cells) != set(ctx.group.elements):
        return CheckResult("orbits", False, "strata cells do not partition W")
    for orbit in orbits:
        if any(orbit.positive_system[a] != 1 for a in grading.compact_positive):
            return CheckResult("orbits", False, "positive system misses R_c+")
    return CheckResult("orbits", True)


def _weyl_sweep(rs: RootSystem) -> list[Weight]:
    lams = [Weight((0,) * rs.rank), Weight((-1,) * rs.rank)]
    for i in range(rs.rank):
        lams.append(Weight(tuple(-2 if j == i else 0 for j in range(rs.rank))))
    return lams


def _check_weyl_identity(ctx: VerifyContext) -> CheckResult:
    den = weyl_denominator(ctx.rs)
    for lam in _weyl_sweep(ctx.rs):
        num = weyl_numerator(ctx.rs, ctx.group, lam)
        if freudenthal_character(ctx.rs, lam) * den != num:
            return CheckResult(
                "weyl-identity", False, f"character identity fails at {lam.serialize()}"
            )
    return CheckResult("weyl-identity", True)


def _check_kostant(ctx: VerifyContext) -> CheckResult:
    for lam in _weyl_sweep(ctx.rs):
        table = kostant_table(ctx.rs, ctx.group, lam)
        for p, row in table.rows.items():
            if len(row) != len(length_fiber(ctx.group, p)):
                return CheckResult("kostant", False, "row size differs from |W(p)|")
        if euler_character(table) != weyl_numerator(ctx.rs, ctx.group, lam):
            return CheckResult("kostant", False, "Euler characteristic mismatch")
        if kostant_via_bgg(ctx.rs, ctx.group, lam) != table:
            return CheckResult("kostant", False, "BGG pipeline mismatch")
    return CheckResult("kostant", True)


def _schmid_sweep(rs: RootSystem) -> list[Weight]:
    rho = rs.rho
    lams = [-rho, -rho - rho]
    for i in range(rs.rank):
        lams.append(-rho - Weight(tuple(int(j == i) for j in range(rs.rank))))
    return lams


def _check_schmid(ctx: VerifyContext) -> CheckResult:
    grading = build_grading(ctx.rs, ctx.signs)
    kdata = weyl_k(ctx.rs, grading, ctx.group)
    orbits = enumerate_closed_orbits(ctx.rs, grading, ctx.group, kdata)
    for lam in _schmid_sweep(ctx.rs):
        for orbit in orbits:
            table = schmid_table(grading, kdata, orbit, lam)
            if table.total_multiplicity() != kdata.order:
                return CheckResult("schmid-trauber", False, "table size differs from |W_K|")
            if schmid_via_trauber(grading, kdata, orbit, lam) != table:
                return CheckResult("schmid-trauber", False, "Trauber pipeline mismatch")
        base = schmid_table(grading, kdata, orbits[0], lam)
        if euler_character(base) != discrete_numerator(grading, kdata, lam):
            return CheckResult("schmid-trauber", False, "elliptic numerator mismatch")
    return CheckResult("schmid-trauber", True)


def _check_partitions(ctx: VerifyContext) -> CheckResult:
    grading = build_grading(ctx.rs, ctx.signs)
    rs = ctx.rs
    noncompact = [r.root_coords for r in grading.noncompact_positive]

    def enumerate_count(target: tuple[int, ...], parts: int | None) -> int:
        found = 0
        stack = [(0, target, 0)]
        while stack:
            idx, remaining, used = stack.pop()
            if idx == len(noncompact):
                if all(c == 0 for c in remaining) and (parts is None or used == parts):
                    found += 1
                continue
            beta = noncompact[idx]
            k = 0
            current = remaining
            while all(c >= 0 for c in current) and (parts is None or used + k <= parts):
                stack.append((idx + 1, current, used + k))
                k += 1
                current = tuple(c - b for c, b in zip(current, beta))
        return found

    if partition(grading, Weight.zero(rs.rank)) != 1:
        return CheckResult("partitions", False, "P(0) is not 1")

    def lattice_points(radius: int):
        def rec(prefix: list[int]):
            if len(prefix) == rs.rank:
                yield tuple(prefix)
                return
            for c in range(0, radius + 1 - sum(prefix)):
                yield from rec(prefix + [c])

        yield from rec([])

    for coords in lattice_points(4):
        mu = Weight(
            tuple(
                sum(rs.cartan[i][j] * coords[j] for j in range(rs.rank))
                for i in range(rs.rank)
            )
        )
        if partition(grading, mu) != enumerate_count(coords, None):
            return CheckResult("partitions", False, f"P mismatch at {coords}")
        graded = sum(
            partition_p(grading, mu, p) for p in range(sum(coords) + 1)
        )
        if partition(grading, mu) != graded:
            return CheckResult("partitions", False, f"graded sum mismatch at {coords}")
    return CheckResult("partitions", True)


def _check_blattner(ctx: VerifyContext) -> CheckResult:
    grading = build_grading(ctx.rs, ctx.signs)
    kdata = weyl_k(ctx.rs, grading, ctx.group)
    rs = ctx.rs
    lam = -rs.rho - rs.rho

    def boxes():
        def rec(prefix: list[int]):
            if len(prefix) == rs.rank:
                yield tuple(prefix)
                return
            for c in range(-5, 1):
                yield from rec(prefix + [c])

        yield from rec([])

    for coords in boxes():
        nu = Weight(coords)
        if any(coroot_pairing(a, nu) > 0 for a in grading.compact_positive):
            continue
        closed = blattner_multiplicity(grading, kdata, lam, nu)
        if closed < 0:
            return CheckResult("blattner", False, f"negative multiplicity at {coords}")
        if closed != filtration_oracle(grading, kdata, lam, nu):
            return CheckResult("blattner", False, f"oracle mismatch at {coords}")
    return CheckResult("blattner", True)


SECTIONS: tuple[tuple[str, Callable[[VerifyContext], CheckResult]], ...] = (
    ("root-system", _check_root_system),
    ("weyl-group", _check_weyl_group),
    ("grading", _check_grading),
    ("orbits", _check_orbits),
    ("weyl-identity", _check_weyl_identity),
    ("kostant", _check_kostant),
    ("schmid-trauber", _check_schmid),
    ("partitions", _check_partitions),
    ("blattner", _check_blattner),
)


def run_verify(
    cartan: Sequence[Sequence[int]],
    compact_simple: Sequence[bool],
    jobs: int = 1,
) -> list[CheckResult]:
    """Run every section for one configuration; order of results is fixed."""
    rs = build_root_system(cartan)
    group = generate(rs)
    signs = tuple(1 if c else -1 for c in compact_simple)
    ctx = VerifyContext(rs=rs, group=group, signs=signs)

    if jobs <= 1:
        return [check(ctx) for _name, check in SECTIONS]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(check, ctx) for _name, check in SECTIONS]
        return [f.result() for f in futures]
