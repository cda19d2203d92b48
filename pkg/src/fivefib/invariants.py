"""Node counts and the canonical class inequalities for a semistable fibration."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .certificates import BoundCertificate

DEFAULT_E_MAX = 1000


class DomainError(ValueError):
    """A formula was asked for outside the range where it is valid."""


class InfeasibleConfigError(ValueError):
    """The chain data need more nodes than the fibration has."""


@dataclass(frozen=True)
class FibrationConfig:
    """Numeric profile of a semistable fibration ``f: X -> B``.

    ``chains`` is the multiset of lengths of the vertical (-2)-chains, one
    entry per rational double point of the relative canonical model.  It is
    stored sorted so equal multisets compare equal.
    """

    g: int
    K2: int
    g_B: int = 0
    s: int = 5
    chains: tuple[int, ...] = field(default=())
    euler_override: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "chains", tuple(sorted(int(mu) for mu in self.chains)))
        if self.g < 2:
            raise DomainError(f"fiber genus must be at least 2, got {self.g}")
        if self.g_B < 0 or self.s < 0:
            raise DomainError("base genus and number of singular fibers must be nonnegative")
        if any(mu < 1 for mu in self.chains):
            raise DomainError(f"chain lengths must be positive, got {self.chains}")
        needed = sum(1 + mu for mu in self.chains)
        if needed > self.e_f:
            raise InfeasibleConfigError(f"chains {self.chains} need {needed} nodes but e_f = {self.e_f}")

    @property
    def euler(self) -> int:
        """Topological Euler number; ``12 - K^2`` for a rational surface."""
        return 12 - self.K2 if self.euler_override is None else self.euler_override

    @property
    def e_f(self) -> int:
        return self.euler - 4 * (self.g - 1) * (self.g_B - 1)

    @property
    def l_prime(self) -> int:
        return sum(self.chains)

    @property
    def r(self) -> int:
        return len(self.chains)

    @property
    def r_f(self) -> Fraction:
        return rf(self)

    @property
    def alpha(self) -> Fraction:
        return self.e_f - self.r_f

    def with_chains(self, chains: Iterable[int]) -> FibrationConfig:
        return FibrationConfig(self.g, self.K2, self.g_B, self.s, tuple(chains), self.euler_override)

    def to_dict(self) -> dict:
        d = {"g": self.g, "K2": self.K2, "g_B": self.g_B, "s": self.s, "chains": list(self.chains)}
        if self.euler_override is not None:
            d["euler_override"] = self.euler_override
        return d


def euler_number_ef(c: FibrationConfig) -> int:
    """Total number of nodes in the fibers."""
    return c.e_f


def rf(c: FibrationConfig) -> Fraction:
    """Weighted node count: each node over an A_mu point counts ``1/(1+mu)``."""
    chain_nodes = sum(1 + mu for mu in c.chains)
    if chain_nodes > c.e_f:
        raise InfeasibleConfigError(f"chains {c.chains} need {chain_nodes} nodes but e_f = {c.e_f}")
    return c.e_f - chain_nodes + sum((Fraction(1, 1 + mu) for mu in c.chains), Fraction(0))


def ttz_check(c: FibrationConfig) -> BoundCertificate:
    """``r_f <= e_f - l' - r/2``."""
    return BoundCertificate.evaluate(
        "ttz",
        "r_f <= e_f - l' - r/2",
        e_f=c.e_f,
        l_prime=c.l_prime,
        r=c.r,
        sum_chain_nodes=sum(1 + mu for mu in c.chains),
        sum_chain_weights=sum((Fraction(1, 1 + mu) for mu in c.chains), Fraction(0)),
    )


def mvt_check(c: FibrationConfig, e: int) -> BoundCertificate:
    """``e^2 (K^2 - (2g-2)(6g_B - 6 + s - s/e)) <= 3 r_f``.

    The outer bound ``3 r_f <= 3 e_f`` always holds for a valid config and is
    not part of the verdict.
    """
    if e < 2:
        raise DomainError(f"MVT needs e >= 2, got {e}")
    return BoundCertificate.evaluate(
        "mvt",
        f"MVT at e={e}",
        e=e,
        g=c.g,
        K2=c.K2,
        g_B=c.g_B,
        s=c.s,
        r_f=c.r_f,
        e_f=c.e_f,
    )


def mvt5_check(c: FibrationConfig, e: int) -> BoundCertificate:
    """Specialised form for ``g_B = 0, s = 5``: ``e^2 (K^2 + (2g-2)(1 + 5/e)) <= 3 r_f``."""
    if c.g_B != 0 or c.s != 5:
        raise DomainError("the s=5 rational form needs g_B = 0 and s = 5")
    if e < 2:
        raise DomainError(f"MVT needs e >= 2, got {e}")
    return BoundCertificate.evaluate("mvt5", f"MVT5 at e={e}", e=e, g=c.g, K2=c.K2, r_f=c.r_f)


@dataclass(frozen=True)
class MvtScan:
    certificates: tuple[BoundCertificate, ...]
    binding_e: int

    @property
    def all_hold(self) -> bool:
        return all(cert.holds for cert in self.certificates)

    @property
    def failures(self) -> list[int]:
        return [int(cert.substitution["e"]) for cert in self.certificates if not cert.holds]

    @property
    def binding(self) -> BoundCertificate:
        return self.certificates[self.binding_e - 2]


def mvt_scan(c: FibrationConfig, e_max: int = DEFAULT_E_MAX) -> MvtScan:
    """Evaluate the MVT inequality for every ``e`` in ``2..e_max``.

    ``binding_e`` is the ``e`` with the smallest slack (smallest ``e`` on ties).
    """
    if e_max < 2:
        raise DomainError(f"e_max must be at least 2, got {e_max}")
    certs = tuple(mvt_check(c, e) for e in range(2, e_max + 1))
    binding = min(range(len(certs)), key=lambda i: (certs[i].slack, i))
    return MvtScan(certs, binding + 2)


def _require_rational_s5(c: FibrationConfig) -> None:
    if c.g_B != 0 or c.s != 5:
        raise DomainError(f"needs g_B = 0 and s = 5, got g_B = {c.g_B}, s = {c.s}")


def g5_certificate(c: FibrationConfig) -> BoundCertificate:
    _require_rational_s5(c)
    return BoundCertificate.evaluate("g5", "7K^2 + 22(g-1) <= 9 - 3alpha/4", K2=c.K2, g=c.g, alpha=c.alpha)


def g5_slack(c: FibrationConfig) -> Fraction:
    """``9 - 3 alpha/4 - 7 K^2 - 22 (g-1)``; nonnegative iff MVT at ``e = 5`` holds."""
    return g5_certificate(c).slack


def adjoint_square(g: int, K2: int) -> int:
    """``(K+F)^2 = K^2 + 4g - 4`` (uses ``F^2 = 0`` and ``K.F = 2g - 2``)."""
    if g < 2:
        raise DomainError(f"g must be at least 2, got {g}")
    return K2 + 4 * g - 4


def h0_adjoint_twice(g: int, K2: int) -> int:
    """``h^0(2K + F) = K^2 + 3g - 2`` by Riemann-Roch once ``h^1`` vanishes.

    The vanishing needs ``(K+F)^2 > 0``; outside that range there is no formula.
    """
    if adjoint_square(g, K2) <= 0:
        raise DomainError(f"(K+F)^2 = {adjoint_square(g, K2)} is not positive")
    return K2 + 3 * g - 2
