"""Exact inequality certificates.

A certificate records ``lhs <= rhs`` after substitution, with every number
kept as a :class:`fractions.Fraction`.  Each certificate name is bound to a
formula in :data:`FORMULAS`, so a certificate read back from JSON can be
re-evaluated from its substitution map alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Union

Rational = Union[int, Fraction]
Formula = Callable[[Mapping[str, Fraction]], "tuple[Fraction, Fraction]"]

FORMULAS: dict[str, Formula] = {}


class CertificateError(ValueError):
    pass


def formula(name: str):
    def register(fn: Formula) -> Formula:
        FORMULAS[name] = fn
        return fn

    return register


def exact(x) -> Fraction:
    """Coerce ``x`` to a Fraction; floats and bools are refused."""
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact value {x!r}")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        if "." in x or "e" in x.lower():
            raise CertificateError(f"decimal notation not allowed: {x!r}")
        return Fraction(x.strip())
    raise TypeError(f"cannot make an exact rational from {type(x).__name__}")


def fmt(x: Rational) -> str:
    """Render as ``"p/q"`` (always with a denominator)."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def fmt_short(x: Rational) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class BoundCertificate:
    name: str
    substitution: Mapping[str, Fraction]
    lhs: Fraction
    rhs: Fraction
    statement: str = field(default="", compare=False)

    @property
    def slack(self) -> Fraction:
        return self.rhs - self.lhs

    @property
    def holds(self) -> bool:
        return self.slack >= 0

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "fails"

    @classmethod
    def evaluate(cls, name: str, statement: str = "", **substitution: Rational) -> BoundCertificate:
        if name not in FORMULAS:
            raise CertificateError(f"unknown certificate formula {name!r}")
        subs = {k: exact(v) for k, v in substitution.items()}
        lhs, rhs = FORMULAS[name](subs)
        return cls(name, subs, Fraction(lhs), Fraction(rhs), statement)

    def revalidate(self) -> bool:
        """Recompute both sides from the substitution; True iff they match."""
        lhs, rhs = FORMULAS[self.name](self.substitution)
        return lhs == self.lhs and rhs == self.rhs

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "substitution": {k: fmt(v) for k, v in sorted(self.substitution.items())},
            "lhs": fmt(self.lhs),
            "rhs": fmt(self.rhs),
            "slack": fmt(self.slack),
            "verdict": self.verdict,
        }
        if self.statement:
            d["statement"] = self.statement
        return d

    @classmethod
    def from_dict(cls, d: Mapping) -> BoundCertificate:
        cert = cls(
            d["name"],
            {k: exact(v) for k, v in d.get("substitution", {}).items()},
            exact(d["lhs"]),
            exact(d["rhs"]),
            d.get("statement", ""),
        )
        if "slack" in d and exact(d["slack"]) != cert.slack:
            raise CertificateError(f"{cert.name}: stored slack {d['slack']} != rhs - lhs {fmt(cert.slack)}")
        if "verdict" in d and d["verdict"] != cert.verdict:
            raise CertificateError(f"{cert.name}: stored verdict {d['verdict']!r} disagrees with slack")
        if cert.name in FORMULAS and not cert.revalidate():
            raise CertificateError(f"{cert.name}: sides do not follow from the substitution")
        return cert

    def __str__(self) -> str:
        label = self.statement or self.name
        return f"{label}: {fmt_short(self.lhs)} <= {fmt_short(self.rhs)} (slack {fmt_short(self.slack)}, {self.verdict})"


# -- formulas ---------------------------------------------------------------


@formula("ttz")
def _ttz(v):
    r_f = v["e_f"] - v["sum_chain_nodes"] + v["sum_chain_weights"]
    return r_f, v["e_f"] - v["l_prime"] - v["r"] / 2


@formula("mvt")
def _mvt(v):
    e, g = v["e"], v["g"]
    lhs = e * e * (v["K2"] - (2 * g - 2) * (6 * v["g_B"] - 6 + v["s"] - v["s"] / e))
    return lhs, 3 * v["r_f"]


@formula("mvt5")
def _mvt5(v):
    e, g = v["e"], v["g"]
    return e * e * (v["K2"] + (2 * g - 2) * (1 + 5 / e)), 3 * v["r_f"]


@formula("g5")
def _g5(v):
    return 7 * v["K2"] + 22 * (v["g"] - 1), 9 - 3 * v["alpha"] / 4


@formula("adjoint_degree")
def _adjoint_degree(v):
    # (K+F)^2 >= g - 2 for a non-hyperelliptic fiber
    return v["g"] - 2, v["K2"] + 4 * v["g"] - 4


@formula("chain_lemma")
def _chain_lemma(v):
    return 4 * (v["g"] - 1) + 3 * v["l_prime"] + 3 * v["r"] / 2, v["bound"]


@formula("component_budget")
def _component_budget(v):
    # -sum(g_ij - 1) = e_f - 5(g-1) = 13 - g - K2 on a rational surface with s = 5
    return 13 - v["g"] - v["K2"], 5 * v["m"] + v["c"]


@formula("blowup_count")
def _blowup_count(v):
    return v["points_per_curve"] * v["curves"], v["available"]


@formula("scroll_genus")
def _scroll_genus(v):
    return v["g"], 6 + v["l2"]


@formula("upper_bound")
def _upper_bound(v):
    return v["value"], v["bound"]
