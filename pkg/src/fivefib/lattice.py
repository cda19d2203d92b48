"""Picard lattices of the plane, Hirzebruch surfaces and their blowups.

Classes are integer vectors in a fixed basis:

* plane:            ``(L, E_1, ..., E_b)``
* Hirzebruch F_n:   ``(Delta, Gamma, E_1, ..., E_b)``

with ``L^2 = 1``, ``Delta^2 = -n``, ``Delta.Gamma = 1``, ``Gamma^2 = 0``,
``E_i^2 = -1`` and every other pairing zero.  Python ints are unbounded,
so nothing here can overflow.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence


class LatticeError(ValueError):
    """Base class for lattice failures."""


class DimensionError(LatticeError):
    """Classes that live on different surfaces were combined."""


class NonRepresentableClassError(LatticeError):
    """``D^2 + K.D`` is odd, so no curve has this class."""


@dataclass(frozen=True)
class BlowupRecord:
    """Bookkeeping for one blown-up point.  No coordinates are kept."""

    infinitely_near_to: Optional[int] = None
    label: str = ""


@dataclass(frozen=True)
class SurfaceModel:
    """``P^2`` (``n is None``) or ``F_n``, blown up ``len(blowups)`` times."""

    n: Optional[int] = None
    blowups: tuple[BlowupRecord, ...] = ()

    def __post_init__(self):
        if self.n is not None and self.n < 0:
            raise LatticeError(f"Hirzebruch index must be nonnegative, got {self.n}")
        object.__setattr__(self, "blowups", tuple(self.blowups))
        for i, rec in enumerate(self.blowups):
            j = rec.infinitely_near_to
            if j is not None and not 0 <= j < i:
                raise LatticeError(f"blowup {i} cannot be infinitely near to {j}")

    @classmethod
    def plane(cls, blowups: int = 0) -> SurfaceModel:
        return cls(None, tuple(BlowupRecord() for _ in range(blowups)))

    @classmethod
    def hirzebruch(cls, n: int, blowups: int = 0) -> SurfaceModel:
        return cls(n, tuple(BlowupRecord() for _ in range(blowups)))

    @property
    def is_plane(self) -> bool:
        return self.n is None

    @property
    def base_rank(self) -> int:
        return 1 if self.is_plane else 2

    @property
    def num_blowups(self) -> int:
        return len(self.blowups)

    @property
    def picard_rank(self) -> int:
        return self.base_rank + self.num_blowups

    @property
    def expected_k2(self) -> int:
        return (9 if self.is_plane else 8) - self.num_blowups

    def blown_up(self, count: int = 1, infinitely_near_to: Optional[int] = None) -> SurfaceModel:
        """Return a new model with ``count`` more points blown up."""
        extra = tuple(BlowupRecord(infinitely_near_to) for _ in range(count))
        return SurfaceModel(self.n, self.blowups + extra)

    def describe(self) -> str:
        base = "P2" if self.is_plane else f"F{self.n}"
        return base if not self.blowups else f"{base} blown up at {self.num_blowups} point{'' if self.num_blowups == 1 else 's'}"

    def to_dict(self) -> dict:
        d = {"base": "P2" if self.is_plane else "F", "blowups": self.num_blowups}
        if not self.is_plane:
            d["n"] = self.n
        near = {i: r.infinitely_near_to for i, r in enumerate(self.blowups) if r.infinitely_near_to is not None}
        if near:
            d["infinitely_near"] = {str(i): j for i, j in sorted(near.items())}
        return d

    # -- class constructors -------------------------------------------------

    def zero(self) -> DivisorClass:
        return DivisorClass(self, (0,) * self.picard_rank)

    def cls(self, *base: int, exceptional: Sequence[int] = ()) -> DivisorClass:
        """Build a class from base coefficients and (optionally) E-coefficients."""
        if len(base) != self.base_rank:
            raise DimensionError(f"{self.describe()} needs {self.base_rank} base coefficients, got {len(base)}")
        exc = list(exceptional) + [0] * (self.num_blowups - len(exceptional))
        if len(exc) != self.num_blowups:
            raise DimensionError(f"too many exceptional coefficients for {self.describe()}")
        return DivisorClass(self, tuple(base) + tuple(exc))

    def line(self) -> DivisorClass:
        if not self.is_plane:
            raise LatticeError("L only exists on the plane")
        return self.cls(1)

    def section(self) -> DivisorClass:
        """The negative section Delta of F_n."""
        if self.is_plane:
            raise LatticeError("Delta only exists on a Hirzebruch surface")
        return self.cls(1, 0)

    def fiber(self) -> DivisorClass:
        """The ruling Gamma of F_n."""
        if self.is_plane:
            raise LatticeError("Gamma only exists on a Hirzebruch surface")
        return self.cls(0, 1)

    def exceptional(self, i: int) -> DivisorClass:
        if not 0 <= i < self.num_blowups:
            raise LatticeError(f"no exceptional curve E_{i + 1}")
        coeffs = [0] * self.picard_rank
        coeffs[self.base_rank + i] = 1
        return DivisorClass(self, tuple(coeffs))

    def gram(self) -> list[list[int]]:
        size = self.picard_rank
        g = [[0] * size for _ in range(size)]
        if self.is_plane:
            g[0][0] = 1
        else:
            g[0][0] = -self.n
            g[0][1] = g[1][0] = 1
        for i in range(self.base_rank, size):
            g[i][i] = -1
        return g


@dataclass(frozen=True)
class DivisorClass:
    surface: SurfaceModel
    coefficients: tuple[int, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(int(c) for c in self.coefficients))
        if len(self.coefficients) != self.surface.picard_rank:
            raise DimensionError(
                f"class has {len(self.coefficients)} coefficients, "
                f"{self.surface.describe()} has Picard rank {self.surface.picard_rank}"
            )

    def _check(self, other: DivisorClass) -> None:
        if not isinstance(other, DivisorClass):
            raise TypeError(f"expected DivisorClass, got {type(other).__name__}")
        if other.surface != self.surface:
            raise DimensionError(f"classes on {self.surface.describe()} and {other.surface.describe()}")

    def __add__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(self.surface, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(self.surface, tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> DivisorClass:
        return DivisorClass(self.surface, tuple(-a for a in self.coefficients))

    def __mul__(self, k: int) -> DivisorClass:
        if not isinstance(k, int):
            return NotImplemented
        return DivisorClass(self.surface, tuple(k * a for a in self.coefficients))

    __rmul__ = __mul__

    def dot(self, other: DivisorClass) -> int:
        return intersection_pairing(self.surface, self, other)

    @property
    def base(self) -> tuple[int, ...]:
        return self.coefficients[: self.surface.base_rank]

    @property
    def exceptional(self) -> tuple[int, ...]:
        return self.coefficients[self.surface.base_rank:]

    def __str__(self) -> str:
        names = ["L"] if self.surface.is_plane else ["Delta", "Gamma"]
        names += [f"E{i + 1}" for i in range(self.surface.num_blowups)]
        terms = []
        for c, name in zip(self.coefficients, names):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append(f"{sign}{mag}{name}")
        if not terms:
            return "0"
        s = "".join(terms)
        return s[1:] if s.startswith("+") else s


def intersection_pairing(surface: SurfaceModel, d1: DivisorClass, d2: DivisorClass) -> int:
    """Intersection number ``d1 . d2`` on ``surface``."""
    for d in (d1, d2):
        if d.surface != surface:
            raise DimensionError(f"class on {d.surface.describe()} paired on {surface.describe()}")
    a, b = d1.coefficients, d2.coefficients
    if surface.is_plane:
        total = a[0] * b[0]
        start = 1
    else:
        total = -surface.n * a[0] * b[0] + a[0] * b[1] + a[1] * b[0]
        start = 2
    for x, y in zip(a[start:], b[start:]):
        total -= x * y
    return total


def canonical_class(surface: SurfaceModel) -> DivisorClass:
    """``-3L + sum E_i`` on the plane, ``-2 Delta - (n+2) Gamma + sum E_i`` on F_n."""
    exc = [1] * surface.num_blowups
    if surface.is_plane:
        return surface.cls(-3, exceptional=exc)
    return surface.cls(-2, -(surface.n + 2), exceptional=exc)


def self_intersection(d: DivisorClass) -> int:
    return intersection_pairing(d.surface, d, d)


def arithmetic_genus(surface: SurfaceModel, d: DivisorClass) -> int:
    """Adjunction: ``p_a(D) = 1 + (D^2 + K.D) / 2``."""
    k = canonical_class(surface)
    twice = intersection_pairing(surface, d, d) + intersection_pairing(surface, k, d)
    if twice % 2:
        raise NonRepresentableClassError(f"D^2 + K.D = {twice} is odd for D = {d}")
    return 1 + twice // 2


def pullback(surface: SurfaceModel, d: DivisorClass) -> DivisorClass:
    """Total transform of a class from the minimal model underlying ``surface``.

    ``d`` may live on any model with the same base; only its base
    coefficients are used.
    """
    if d.surface.n != surface.n:
        raise DimensionError(f"cannot pull {d.surface.describe()} back to {surface.describe()}")
    return surface.cls(*d.base)


def proper_transform(surface: SurfaceModel, d: DivisorClass, multiplicities: Iterable[int]) -> DivisorClass:
    """``pi^* D - sum m_i E_i`` for a curve with multiplicity ``m_i`` at the i-th point."""
    mult = list(multiplicities)
    if len(mult) != surface.num_blowups:
        raise DimensionError(f"{len(mult)} multiplicities for {surface.num_blowups} blown-up points")
    if any(m < 0 for m in mult):
        raise LatticeError("multiplicities must be nonnegative")
    total = d if d.surface == surface else pullback(surface, d)
    return DivisorClass(surface, total.base + tuple(e - m for e, m in zip(total.exceptional, mult)))
