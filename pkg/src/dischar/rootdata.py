"""Root systems from Cartan matrices, with exact weight arithmetic.

Every root is tracked in three integer coordinate systems at once: the
simple-root basis, the fundamental-weight basis and the simple-coroot
basis.  Reflections and coroot pairings then never leave integer (or
rational, for weights) arithmetic; there is no floating point anywhere.

Conventions, fixed once:

* the Cartan matrix entry ``C[i][j]`` is the pairing of the i-th simple
  coroot against the j-th simple root, so a root ``a = sum n_j alpha_j``
  has fundamental-weight coordinates ``C @ n`` (column j of ``C`` for the
  simple root ``alpha_j``);
* coroot coordinates ride through the reflection closure via the
  transposed Cartan matrix, which keeps them integral.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatch, InvariantViolation, NotFiniteType

IntVec = tuple[int, ...]
Coords = tuple[Fraction, ...]


class Weight:
    """Exact rational vector in fundamental-weight coordinates."""

    __slots__ = ("coords", "_hash")

    def __init__(self, coords: Iterable[Fraction | int | str]) -> None:
        self.coords: Coords = tuple(Fraction(c) for c in coords)
        self._hash = hash(self.coords)

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        self._check_rank(other)
        return Weight(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "Weight") -> "Weight":
        self._check_rank(other)
        return Weight(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "Weight":
        return Weight(-a for a in self.coords)

    def scale(self, factor: Fraction | int) -> "Weight":
        return Weight(a * factor for a in self.coords)

    def _check_rank(self, other: "Weight") -> None:
        if len(self.coords) != len(other.coords):
            raise DimensionMismatch(
                f"weight ranks differ: {len(self.coords)} vs {len(other.coords)}"
            )

    def serialize(self) -> list[str]:
        """Coordinates as exact strings, "p/q" or "n"."""
        return [str(c) for c in self.coords]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Weight) and self.coords == other.coords

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Weight") -> bool:
        return self.coords < other.coords

    def __repr__(self) -> str:
        return "Weight(%s)" % (", ".join(str(c) for c in self.coords))


@dataclass(frozen=True)
class Root:
    """A root in simple-root, fundamental-weight and simple-coroot coordinates."""

    root_coords: IntVec
    fw_coords: IntVec
    coroot_coords: IntVec

    @property
    def height(self) -> int:
        return sum(self.root_coords)

    def weight(self) -> Weight:
        return Weight(self.fw_coords)

    def __repr__(self) -> str:
        return "Root(%s)" % "+".join(
            f"{n}a{i + 1}" for i, n in enumerate(self.root_coords) if n
        )


@dataclass(frozen=True)
class RootSystem:
    """A finite root system: Cartan matrix, ordered positive roots, rho.

    ``positive_roots`` is ordered by (height, simple-root coordinates),
    which downstream modules rely on for deterministic output.
    """

    rank: int
    cartan: tuple[IntVec, ...]
    positive_roots: tuple[Root, ...]
    rho: Weight
    cartan_inv: tuple[Coords, ...] = field(repr=False)
    _by_root_coords: Mapping[IntVec, Root] = field(repr=False)
    _positive_fw: frozenset[IntVec] = field(repr=False)

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        """The simple roots in Cartan-matrix index order."""
        return tuple(
            self._by_root_coords[tuple(int(j == i) for j in range(self.rank))]
            for i in range(self.rank)
        )

    def root_with_coords(self, root_coords: Sequence[int]) -> Root | None:
        return self._by_root_coords.get(tuple(root_coords))

    def is_positive_fw(self, fw: Sequence[Fraction | int]) -> bool | None:
        """True/False if fw is the weight of a positive/negative root, else None."""
        fracs = tuple(Fraction(c) for c in fw)
        if any(c.denominator != 1 for c in fracs):
            return None
        key = tuple(int(c) for c in fracs)
        if key in self._positive_fw:
            return True
        if tuple(-c for c in key) in self._positive_fw:
            return False
        return None

    def to_root_coords(self, lam: Weight) -> Coords:
        """Express a weight in the simple-root basis (rational in general)."""
        if lam.rank != self.rank:
            raise DimensionMismatch(f"rank {lam.rank} weight in rank {self.rank} system")
        return tuple(
            sum(self.cartan_inv[i][j] * lam.coords[j] for j in range(self.rank))
            for i in range(self.rank)
        )


@dataclass(frozen=True)
class WeightFlags:
    """Chamber position of a weight relative to the positive system."""

    regular: bool
    antidominant: bool
    strongly_antidominant: bool
    integral: bool


def _validate_cartan(cartan: Sequence[Sequence[int]]) -> tuple[IntVec, ...]:
    rows = tuple(tuple(entry for entry in row) for row in cartan)
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise NotFiniteType("Cartan matrix is not square")
    for i in range(n):
        for j in range(n):
            entry = rows[i][j]
            if not isinstance(entry, int) or isinstance(entry, bool):
                raise NotFiniteType(f"Cartan entry ({i},{j}) is not an integer")
            if i == j and entry != 2:
                raise NotFiniteType(f"Cartan diagonal entry ({i},{i}) is {entry}, expected 2")
            if i != j and entry > 0:
                raise NotFiniteType(f"Cartan entry ({i},{j}) is positive")
    return rows


def _invert_matrix(rows: tuple[IntVec, ...]) -> tuple[Coords, ...]:
    # Gauss-Jordan over Fraction; Cartan matrices of finite type are invertible.
    n = len(rows)
    aug = [[Fraction(rows[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise NotFiniteType("Cartan matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        factor = aug[col][col]
        aug[col] = [x / factor for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                scale = aug[r][col]
                aug[r] = [x - scale * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(aug[i][n:]) for i in range(n))


def build_root_system(cartan: Sequence[Sequence[int]], max_roots: int = 10_000) -> RootSystem:
    """Enumerate the positive roots of a Cartan matrix by reflection closure.

    Starts from the simple roots and repeatedly applies simple reflections,
    keeping every positive image.  Raises ``NotFiniteType`` when the closure
    exceeds ``max_roots`` or a reflection produces a vector with mixed signs
    (which can never be plus or minus a root).
    """
    rows = _validate_cartan(cartan)
    rank = len(rows)

    # root_coords -> coroot_coords during the closure
    seen: dict[IntVec, IntVec] = {}
    queue: list[IntVec] = []
    for i in range(rank):
        unit = tuple(int(j == i) for j in range(rank))
        seen[unit] = unit
        queue.append(unit)

    while queue:
        n = queue.pop(0)
        m = seen[n]
        for i in range(rank):
            pairing = sum(rows[i][j] * n[j] for j in range(rank))
            image = tuple(n[j] - pairing * int(j == i) for j in range(rank))
            if all(c <= 0 for c in image):
                # only -alpha_i arises this way; nothing new
                continue
            if any(c < 0 for c in image):
                raise NotFiniteType(
                    "reflection closure produced a mixed-sign vector; "
                    "matrix is not of finite type"
                )
            if image in seen:
                continue
            co_pairing = sum(rows[j][i] * m[j] for j in range(rank))
            co_image = tuple(m[j] - co_pairing * int(j == i) for j in range(rank))
            seen[image] = co_image
            queue.append(image)
            if len(seen) > max_roots:
                raise NotFiniteType(f"more than {max_roots} positive roots; closure aborted")

    ordered = sorted(seen, key=lambda n: (sum(n), n))
    roots = []
    for n in ordered:
        fw = tuple(sum(rows[i][j] * n[j] for j in range(rank)) for i in range(rank))
        co = seen[n]
        if sum(c * f for c, f in zip(co, fw)) != 2:
            raise InvariantViolation(f"coroot of {n} does not pair to 2 against its root")
        roots.append(Root(root_coords=n, fw_coords=fw, coroot_coords=co))

    half_sum = tuple(
        Fraction(sum(r.fw_coords[i] for r in roots), 2) for i in range(rank)
    )
    if half_sum != (Fraction(1),) * rank:
        raise InvariantViolation("half sum of positive roots is not (1,...,1)")

    return RootSystem(
        rank=rank,
        cartan=rows,
        positive_roots=tuple(roots),
        rho=Weight(half_sum),
        cartan_inv=_invert_matrix(rows) if rank else (),
        _by_root_coords={r.root_coords: r for r in roots},
        _positive_fw=frozenset(r.fw_coords for r in roots),
    )


def coroot_pairing(alpha: Root, lam: Weight) -> Fraction:
    """Pairing of the coroot of ``alpha`` against a weight in fw coordinates."""
    if len(alpha.coroot_coords) != lam.rank:
        raise DimensionMismatch(
            f"root of rank {len(alpha.coroot_coords)} paired with rank {lam.rank} weight"
        )
    return sum(
        (Fraction(c) * x for c, x in zip(alpha.coroot_coords, lam.coords)),
        start=Fraction(0),
    )


def classify_weight(rs: RootSystem, lam: Weight) -> WeightFlags:
    """Regularity, (strong) antidominance and integrality of a weight."""
    regular = True
    antidominant = True
    strongly = True
    for alpha in rs.positive_roots:
        value = coroot_pairing(alpha, lam)
        if value == 0:
            regular = False
        if value >= 1 and value.denominator == 1:
            antidominant = False
        if value >= 0:
            strongly = False
    return WeightFlags(
        regular=regular,
        antidominant=antidominant,
        strongly_antidominant=strongly,
        integral=lam.is_integral(),
    )


def dominant_representative(rs: RootSystem, lam: Weight) -> Weight:
    """The unique dominant weight in the Weyl orbit of ``lam``.

    Repeatedly reflects at a negative coordinate; each step moves up in the
    dominance order, so this terminates.
    """
    coords = list(lam.coords)
    while True:
        i = next((j for j, c in enumerate(coords) if c < 0), None)
        if i is None:
            return Weight(coords)
        # s_i: subtract <alpha_i-check, lam> alpha_i, with alpha_i = column i of C
        value = coords[i]
        for k in range(rs.rank):
            coords[k] -= value * rs.cartan[k][i]
