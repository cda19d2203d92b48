"""Exhaustive search over integer profiles of fibrations with five singular fibers.

The search space for each genus is finite: chain multisets with
``l' <= CHAIN_SUM_MAX`` and, on a scroll, ``l_2 <= l'`` and
``3 l_3 <= 3g + 6``.  Every verdict is backed by exact certificates and the
tables do not depend on the order in which candidates are visited.
"""

from __future__ import annotations

import enum
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping, Optional, Sequence

from .certificates import BoundCertificate, fmt_short
from .invariants import (
    DomainError,
    FibrationConfig,
    InfeasibleConfigError,
    g5_certificate,
    mvt_check,
    ttz_check,
)

CHAIN_SUM_MAX = 20
MVT_E = 5


class K2Family(str, enum.Enum):
    TWO_MINUS_3G = "2-3g"
    THREE_MINUS_3G = "3-3g"

    def k2(self, g: int) -> int:
        return (2 if self is K2Family.TWO_MINUS_3G else 3) - 3 * g

    @classmethod
    def of(cls, g: int, K2: int) -> K2Family:
        for fam in cls:
            if fam.k2(g) == K2:
                return fam
        raise DomainError(f"K^2 = {K2} is neither 2-3g nor 3-3g at g = {g}")

    @classmethod
    def parse(cls, value) -> K2Family:
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("_", "").replace(" ", "")
        for fam, names in ((cls.TWO_MINUS_3G, {"2-3g", "twominus3g", "a0"}),
                           (cls.THREE_MINUS_3G, {"3-3g", "threeminus3g", "a1"})):
            if key in names:
                return fam
        raise DomainError(f"unknown K^2 family {value!r}")


def _require_genus(g: int) -> None:
    if g < 4:
        raise DomainError(f"the classification starts at g = 4, got g = {g}")


# -- the (g, K^2) dichotomy ---------------------------------------------------


@dataclass(frozen=True)
class Dichotomy:
    feasible: Mapping[tuple[int, int], tuple[BoundCertificate, ...]]
    refuted: Mapping[tuple[int, int], BoundCertificate]

    @property
    def pairs(self) -> set[tuple[int, int]]:
        return set(self.feasible)

    def max_genus(self, family: K2Family) -> int:
        return max(g for g, k2 in self.feasible if K2Family.of(g, k2) is family)


def feasible_genus_k2(s: int = 5) -> Dichotomy:
    """All ``(g, K^2)`` with ``g >= 4`` allowed by MVT at ``e = 5`` and ``(K+F)^2 >= g - 2``.

    Writes ``K^2 = 2 - 3g + a`` with ``a >= 0``.  The test uses ``alpha = 0``,
    the most permissive value since ``r_f <= e_f``.  The slack
    ``17 - g - 7a`` is strictly decreasing in both ``g`` and ``a``, so each
    ray stops at its first failure and the ``a`` scan stops once ``g = 4``
    fails.
    """
    if s != 5:
        raise DomainError(f"no classification is claimed for s = {s}; use mvt_scan")
    feasible: dict[tuple[int, int], tuple[BoundCertificate, ...]] = {}
    refuted: dict[tuple[int, int], BoundCertificate] = {}
    a = 0
    while True:
        g = 4
        while True:
            K2 = 2 - 3 * g + a
            config = FibrationConfig(g, K2)
            g5 = g5_certificate(config)
            if not g5.holds:
                refuted[(g, K2)] = g5
                break
            adjoint = BoundCertificate.evaluate("adjoint_degree", "(K+F)^2 >= g - 2", g=g, K2=K2)
            feasible[(g, K2)] = (adjoint, g5)
            g += 1
        if g == 4:
            break
        a += 1
    return Dichotomy(feasible, refuted)


# -- chain lemma ----------------------------------------------------------------


def chain_bound_constant(g: int, K2: int) -> int:
    """Right-hand side of ``4(g-1) + 3l' + 3r/2 <= bound``.

    Comes from combining MVT at ``e = 5`` with ``r_f <= e_f - l' - r/2`` and
    ``e_f = 4(g-1) + 12 - K^2``: ``bound = 36 - 28 K^2 - 84 (g-1)``.
    """
    return 36 - 28 * K2 - 84 * (g - 1)


@dataclass(frozen=True)
class ChainLemma:
    g: int
    K2: int
    bound: int

    def __call__(self, l_prime: int, r: int) -> BoundCertificate:
        return BoundCertificate.evaluate(
            "chain_lemma", "4(g-1) + 3l' + 3r/2 <= bound", g=self.g, l_prime=l_prime, r=r, bound=self.bound
        )

    def admissible_pairs(self) -> list[tuple[int, int]]:
        """Every realisable ``(l', r)`` passing the bound: ``(0, 0)`` or ``1 <= r <= l'``."""
        out = []
        l_prime = 0
        while 4 * (self.g - 1) + 3 * l_prime <= self.bound:
            rs = [0] if l_prime == 0 else range(1, l_prime + 1)
            out.extend((l_prime, r) for r in rs if self(l_prime, r).holds)
            l_prime += 1
        return out

    @property
    def max_l_prime(self) -> int:
        pairs = self.admissible_pairs()
        return max(lp for lp, _ in pairs) if pairs else -1


def chain_lemma_bound(g: int, K2: int) -> ChainLemma:
    fam = K2Family.of(g, K2)
    bound = chain_bound_constant(g, K2)
    assert bound == (64 if fam is K2Family.TWO_MINUS_3G else 36)
    return ChainLemma(g, K2, bound)


# -- component genus budget -------------------------------------------------------


@dataclass(frozen=True)
class FiberComponentBudget:
    """``-sum(g_ij - 1)`` over all components of the five singular fibers."""

    g: int
    K2: int

    @property
    def budget(self) -> int:
        return component_genus_budget(self.g, self.K2)


def component_genus_budget(g: int, K2: int) -> int:
    fam = K2Family.of(g, K2)
    closed = 2 * g + (11 if fam is K2Family.TWO_MINUS_3G else 10)
    # 5(g-1) = sum(g_ij - 1) + e_f
    recomputed = FibrationConfig(g, K2).e_f - 5 * (g - 1)
    if closed != recomputed:
        raise AssertionError(f"budget mismatch at g={g}: {closed} != {recomputed}")
    return closed


@dataclass(frozen=True)
class DoubleFibrationData:
    """A genus-0 fibration meeting ``F`` in ``m`` points.

    ``l[i]`` counts the (-i)-curves common to fibers of both fibrations,
    ``2 <= i <= m``.
    """

    m: int
    l: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.m < 1:
            raise DomainError(f"m must be positive, got {self.m}")
        for i, count in self.l.items():
            if not 2 <= i <= max(self.m, 2):
                raise DomainError(f"l_{i} is not defined when m = {self.m}")
            if count < 0:
                raise DomainError(f"l_{i} must be nonnegative")

    @property
    def c(self) -> int:
        return sum(self.l.values())


def double_fibration_cap(d: DoubleFibrationData) -> int:
    """Upper bound ``5m + c`` on ``-sum(g_ij - 1)``."""
    return 5 * d.m + d.c


# -- candidate evaluation ---------------------------------------------------------


def chain_multisets(max_sum: int = CHAIN_SUM_MAX) -> Iterator[tuple[int, ...]]:
    """Every multiset of positive integers with sum ``<= max_sum``, as sorted tuples."""

    def parts(total: int, largest: int) -> Iterator[tuple[int, ...]]:
        if total == 0:
            yield ()
            return
        for first in range(min(total, largest), 0, -1):
            for rest in parts(total - first, first):
                yield rest + (first,)

    for total in range(max_sum + 1):
        yield from parts(total, total)


def chain_certificates(g: int, K2: int, chains: Sequence[int]) -> list[BoundCertificate]:
    """Node count, chain lemma, ttz and MVT at ``e = 5``, in that order.

    Stops after the first failure.
    """
    chains = tuple(sorted(chains))
    l_prime, r = sum(chains), len(chains)
    base = FibrationConfig(g, K2)
    nodes = BoundCertificate.evaluate(
        "upper_bound", "chain nodes <= e_f", value=sum(1 + mu for mu in chains), bound=base.e_f
    )
    certs = [nodes]
    if not nodes.holds:
        return certs
    config = base.with_chains(chains)
    for make in (lambda: chain_lemma_bound(g, K2)(l_prime, r), lambda: ttz_check(config),
                 lambda: mvt_check(config, MVT_E)):
        cert = make()
        certs.append(cert)
        if not cert.holds:
            break
    return certs


@lru_cache(maxsize=None)
def _chain_depth(g: int, K2: int, chains: tuple[int, ...]) -> int:
    certs = chain_certificates(g, K2, chains)
    return len(certs) if certs[-1].holds else len(certs) - 1


CHAIN_CONJUNCTS = 4


@dataclass(frozen=True)
class AmbientRules:
    """Constraints coming from a genus-0 fibration on one candidate image surface.

    ``costs[i]`` is the number of blown-up points needed to turn one curve of
    the ruling into a (-i)-curve; indices in ``forbidden`` are forced to 0.
    """

    name: str
    m: int
    costs: tuple[tuple[int, int], ...]
    available: int
    forbidden: tuple[int, ...] = ()
    genus_step: bool = False

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(2, self.m + 1) if i not in self.forbidden)


def ambient_rules(g: int) -> list[AmbientRules]:
    """Image surfaces for ``K^2 = 2 - 3g`` and the ruling used on each."""
    rules = [AmbientRules("scroll", 3, ((3, 3),), 3 * g + 6, genus_step=True)]
    if g == 4:
        rules.append(AmbientRules("quadric_cone", 3, ((3, 3),), 3 * g + 6, genus_step=True))
    if g == 6:
        # lines through a base point; the Veronese surface contains no lines, so l_3 = 0
        rules.append(AmbientRules("veronese", 4, ((4, 5),), 25, forbidden=(3,)))
    return rules


def ambient_certificates(g: int, K2: int, rules: AmbientRules, l: Mapping[int, int]) -> list[BoundCertificate]:
    """Budget, blowup counts and (on a scroll) ``g <= 6 + l_2``; stops at the first failure."""
    c = sum(l.values())
    certs = [BoundCertificate.evaluate(
        "component_budget", f"-sum(g_ij - 1) <= 5m + c on the {rules.name}", g=g, K2=K2, m=rules.m, c=c
    )]
    for i, cost in sorted(rules.costs):
        if not certs[-1].holds:
            return certs
        certs.append(BoundCertificate.evaluate(
            "blowup_count", f"{cost} l_{i} <= blown-up points", points_per_curve=cost, curves=l.get(i, 0),
            available=rules.available,
        ))
    if rules.genus_step and certs[-1].holds:
        certs.append(BoundCertificate.evaluate("scroll_genus", "g <= 6 + l_2", g=g, l2=l.get(2, 0)))
    return certs


def _ambient_conjuncts(rules: AmbientRules) -> int:
    return 1 + len(rules.costs) + int(rules.genus_step)


def _l_vectors(rules: AmbientRules, l_prime: int) -> Iterator[tuple[int, ...]]:
    ranges = []
    for i in rules.indices:
        if i == 2:
            ranges.append(range(l_prime + 1))
        else:
            cost = dict(rules.costs)[i]
            ranges.append(range(rules.available // cost + 1))

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        if k == len(ranges):
            yield ()
            return
        for v in ranges[k]:
            for rest in rec(k + 1):
                yield (v,) + rest

    yield from rec(0)


@lru_cache(maxsize=None)
def _ambient_depths(g: int, K2: int, rules: AmbientRules, l_prime: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    out = []
    for vec in _l_vectors(rules, l_prime):
        l = dict(zip(rules.indices, vec))
        certs = ambient_certificates(g, K2, rules, l)
        depth = len(certs) if certs[-1].holds else len(certs) - 1
        out.append((depth, vec))
    return tuple(out)


@dataclass(frozen=True)
class ScrollVerdict:
    feasible: bool
    certificates: tuple[BoundCertificate, ...]

    @property
    def failed(self) -> Optional[BoundCertificate]:
        return next((c for c in self.certificates if not c.holds), None)


def scroll_case_feasible(g: int, chains: Sequence[int], l2: int, l3: int) -> ScrollVerdict:
    """Evaluate every scroll constraint for one candidate (no short-circuit)."""
    _require_genus(g)
    chains = tuple(sorted(chains))
    if l2 > sum(chains):
        raise DomainError(f"l_2 = {l2} exceeds l' = {sum(chains)}")
    if l2 < 0 or l3 < 0:
        raise DomainError("l_2 and l_3 must be nonnegative")
    K2 = 2 - 3 * g
    certs = [
        BoundCertificate.evaluate("component_budget", "2g + 11 <= 15 + l_2 + l_3", g=g, K2=K2, m=3, c=l2 + l3),
        BoundCertificate.evaluate("blowup_count", "3 l_3 <= 3g + 6", points_per_curve=3, curves=l3, available=3 * g + 6),
        BoundCertificate.evaluate("scroll_genus", "g <= 6 + l_2", g=g, l2=l2),
    ]
    l_prime, r = sum(chains), len(chains)
    certs.append(chain_lemma_bound(g, K2)(l_prime, r))
    try:
        config = FibrationConfig(g, K2, chains=chains)
    except InfeasibleConfigError:
        certs.append(BoundCertificate.evaluate(
            "upper_bound", "chain nodes <= e_f", value=sum(1 + mu for mu in chains), bound=FibrationConfig(g, K2).e_f
        ))
    else:
        certs.append(ttz_check(config))
        certs.append(mvt_check(config, MVT_E))
    return ScrollVerdict(all(c.holds for c in certs), tuple(certs))


# -- feasibility tables -----------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    chains: tuple[int, ...]
    ambient: Optional[str] = None
    l: Mapping[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {"chains": list(self.chains), "l_prime": sum(self.chains), "r": len(self.chains)}
        if self.ambient is not None:
            d["ambient"] = self.ambient
        if self.l:
            d["l"] = {f"l{i}": v for i, v in sorted(self.l.items())}
        return d


@dataclass(frozen=True)
class FeasibilityRow:
    g: int
    K2: int
    feasible: bool
    candidates: int
    feasible_candidates: int
    witness: Optional[Witness]
    certificates: tuple[BoundCertificate, ...]
    refuted_by: str = ""
    notes: tuple[str, ...] = ()

    @property
    def verdict(self) -> str:
        return "feasible" if self.feasible else "infeasible"

    @property
    def refutation(self) -> Optional[BoundCertificate]:
        return None if self.feasible else next((c for c in self.certificates if not c.holds), None)

    def to_dict(self) -> dict:
        d = {
            "g": self.g,
            "K2": self.K2,
            "verdict": self.verdict,
            "candidates": self.candidates,
            "feasible_candidates": self.feasible_candidates,
        }
        if self.witness is not None:
            d["witness" if self.feasible else "closest_candidate"] = self.witness.to_dict()
        if not self.feasible:
            d["refuted_by"] = self.refuted_by
        d["certificates"] = [c.to_dict() for c in self.certificates]
        if self.notes:
            d["notes"] = list(self.notes)
        return d


@dataclass(frozen=True)
class FeasibilityTable:
    family: K2Family
    rows: tuple[FeasibilityRow, ...]
    scroll_constraints: bool = True

    @property
    def max_genus(self) -> int:
        return max(row.g for row in self.rows if row.feasible)

    def row(self, g: int) -> FeasibilityRow:
        for row in self.rows:
            if row.g == g:
                return row
        raise KeyError(g)

    def verdicts(self) -> dict[int, bool]:
        return {row.g: row.feasible for row in self.rows}

    def to_dict(self) -> dict:
        return {
            "family": self.family.value,
            "max_genus": self.max_genus,
            "search": {"chain_sum_max": CHAIN_SUM_MAX, "mvt_e": MVT_E, "scroll_constraints": self.scroll_constraints},
            "rows": [row.to_dict() for row in self.rows],
        }

    def to_markdown(self) -> str:
        lines = [
            f"### K^2 = {self.family.value} (max g = {self.max_genus})",
            "",
            "| g | K^2 | verdict | candidates | feasible | witness / refutation |",
            "|---|-----|---------|-----------:|---------:|----------------------|",
        ]
        for row in self.rows:
            if row.feasible:
                w = row.witness
                detail = f"chains={list(w.chains)}" if w else ""
                if w and w.ambient:
                    detail += f" on {w.ambient}"
                if w and w.l:
                    detail += " " + ", ".join(f"l{i}={v}" for i, v in sorted(w.l.items()))
            else:
                cert = row.refutation
                detail = f"{row.refuted_by}: slack {fmt_short(cert.slack)}" if cert else row.refuted_by
            lines.append(
                f"| {row.g} | {row.K2} | {row.verdict} | {row.candidates} | {row.feasible_candidates} | {detail} |"
            )
        return "\n".join(lines) + "\n"


def _two_minus_3g_row(g: int, scroll_constraints: bool, order_seed: Optional[int]) -> FeasibilityRow:
    K2 = 2 - 3 * g
    multisets = list(chain_multisets())
    if order_seed is not None:
        random.Random(order_seed * 1009 + g).shuffle(multisets)
    rules_list = ambient_rules(g) if scroll_constraints else []

    total = feasible_count = 0
    best_feasible = None  # (key, chains, rules, vec)
    best_failed = None  # (-depth, key, chains, rules, vec)
    for chains in multisets:
        l_prime = sum(chains)
        cdepth = _chain_depth(g, K2, chains)
        chain_ok = cdepth == CHAIN_CONJUNCTS
        if not rules_list:
            total += 1
            key = (l_prime, len(chains), chains)
            if chain_ok:
                feasible_count += 1
                if best_feasible is None or key < best_feasible[0]:
                    best_feasible = (key, chains, None, ())
            else:
                cand = (-cdepth, key, chains, None, ())
                if best_failed is None or cand < best_failed:
                    best_failed = cand
            continue
        for rules in rules_list:
            n_amb = _ambient_conjuncts(rules)
            for adepth, vec in _ambient_depths(g, K2, rules, l_prime):
                total += 1
                key = (l_prime, len(chains), chains, rules.name, vec)
                if adepth == n_amb and chain_ok:
                    feasible_count += 1
                    if best_feasible is None or key < best_feasible[0]:
                        best_feasible = (key, chains, rules, vec)
                else:
                    depth = adepth if adepth < n_amb else n_amb + cdepth
                    cand = (-depth, key, chains, rules, vec)
                    if best_failed is None or cand < best_failed:
                        best_failed = cand

    def materialise(chains, rules, vec):
        certs = []
        if rules is not None:
            certs += ambient_certificates(g, K2, rules, dict(zip(rules.indices, vec)))
            if not certs[-1].holds:
                return certs
        return certs + chain_certificates(g, K2, chains)

    if best_feasible is not None:
        _, chains, rules, vec = best_feasible
        witness = Witness(chains, rules.name if rules else None, dict(zip(rules.indices, vec)) if rules else {})
        return FeasibilityRow(g, K2, True, total, feasible_count, witness, tuple(materialise(chains, rules, vec)))
    _, _, chains, rules, vec = best_failed
    certs = materialise(chains, rules, vec)
    witness = Witness(chains, rules.name if rules else None, dict(zip(rules.indices, vec)) if rules else {})
    failing = next(c for c in certs if not c.holds)
    return FeasibilityRow(g, K2, False, total, 0, witness, tuple(certs), refuted_by=failing.name)


def _three_minus_3g_row(g: int, order_seed: Optional[int]) -> FeasibilityRow:
    K2 = 3 - 3 * g
    multisets = list(chain_multisets())
    if order_seed is not None:
        random.Random(order_seed * 1009 + g).shuffle(multisets)
    report = del_pezzo_case_constraints(g)
    dp_ok = all(c.holds for c in report.certificates)
    total = len(multisets)
    ok = [ch for ch in multisets if _chain_depth(g, K2, ch) == CHAIN_CONJUNCTS]
    notes = tuple(report.flags)
    if ok and dp_ok:
        chains = min(ok, key=lambda ch: (sum(ch), len(ch), ch))
        certs = chain_certificates(g, K2, chains) + list(report.certificates)
        witness = Witness(chains, "del_pezzo", dict(report.witness_l))
        return FeasibilityRow(g, K2, True, total, len(ok) if dp_ok else 0, witness, tuple(certs), notes=notes)
    if not dp_ok:
        certs = list(report.certificates)
    else:
        chains = min(multisets, key=lambda ch: (-_chain_depth(g, K2, ch), sum(ch), len(ch), ch))
        certs = chain_certificates(g, K2, chains)
    failing = next(c for c in certs if not c.holds)
    return FeasibilityRow(g, K2, False, total, 0, None, tuple(certs), refuted_by=failing.name, notes=notes)


def _dichotomy_row(g: int, K2: int, cert: BoundCertificate) -> FeasibilityRow:
    return FeasibilityRow(g, K2, False, 0, 0, None, (cert,), refuted_by=cert.name)


def _row_job(args) -> FeasibilityRow:
    return _row(*args)


# rows are immutable; a run with a different order_seed is computed afresh
@lru_cache(maxsize=None)
def _row(family: K2Family, g: int, scroll_constraints: bool, order_seed: Optional[int]) -> FeasibilityRow:
    if family is K2Family.TWO_MINUS_3G:
        return _two_minus_3g_row(g, scroll_constraints, order_seed)
    return _three_minus_3g_row(g, order_seed)


def _worker_count(workers: Optional[int]) -> int:
    if workers is not None:
        return max(1, workers)
    try:
        return max(1, int(os.environ.get("FIVEFIB_THREADS", "1")))
    except ValueError:
        return 1


def certify_max_genus(
    family,
    scroll_constraints: bool = True,
    order_seed: Optional[int] = None,
    workers: Optional[int] = None,
) -> FeasibilityTable:
    """Per-genus feasibility table for one ``K^2`` family.

    ``scroll_constraints=False`` drops the genus-0 fibration constraints
    (2-3g only).  ``order_seed`` shuffles the visiting order; the result
    must not change.  ``workers > 1`` (or ``FIVEFIB_THREADS``) spreads the
    genera over processes.
    """
    fam = K2Family.parse(family)
    dichotomy = feasible_genus_k2()
    genera = sorted(g for g, k2 in dichotomy.feasible if K2Family.of(g, k2) is fam)
    if order_seed is not None:
        random.Random(order_seed).shuffle(genera)
    jobs = [(fam, g, scroll_constraints, order_seed) for g in genera]
    n = _worker_count(workers)
    if n > 1:
        with ProcessPoolExecutor(max_workers=n) as pool:
            rows = list(pool.map(_row_job, jobs))
    else:
        rows = [_row_job(job) for job in jobs]
    for (g, k2), cert in dichotomy.refuted.items():
        if k2 == fam.k2(g):
            rows.append(_dichotomy_row(g, k2, cert))
    rows.sort(key=lambda row: row.g)
    return FeasibilityTable(fam, tuple(rows), scroll_constraints)


# -- Del Pezzo (K^2 = 3 - 3g) constraints ----------------------------------------


@dataclass(frozen=True)
class DelPezzoReport:
    """Lower bounds on the ``l_i`` for ``K^2 = 3 - 3g``.

    ``lower`` maps an expression such as ``"l2+l3+l4"`` to its lower bound;
    ``zero`` lists the ``l_i`` forced to vanish.
    """

    g: int
    m: Optional[int]
    lower: Mapping[str, int]
    zero: tuple[str, ...]
    upper: Mapping[str, int]
    certificates: tuple[BoundCertificate, ...]
    exclusions: tuple[BoundCertificate, ...]
    witness_l: Mapping[int, int]
    flags: tuple[str, ...]
    derived: bool = True

    @property
    def not_general_position(self) -> bool:
        return any(v > 0 for v in self.lower.values())

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "K2": 3 - 3 * self.g,
            "derived": self.derived,
            "m": self.m,
            "lower": dict(self.lower),
            "zero": list(self.zero),
            "upper": dict(self.upper),
            "base_points_not_in_general_position": self.not_general_position,
            "flags": list(self.flags),
            "certificates": [c.to_dict() for c in self.certificates],
            "exclusions": [c.to_dict() for c in self.exclusions],
        }


def del_pezzo_case_constraints(g: int) -> DelPezzoReport:
    """Constraints on the base points of the sextic / quartic-section pencils.

    Uses a ruling with ``F.Gamma = m`` (lines through a base point, or a
    ruling of the quadric): ``m = 4`` for ``g <= 9`` and ``m = 5`` at
    ``g = 10``.  The budget ``2g + 10 <= 5m + c`` gives a lower bound on
    ``c``; the chain lemma and the absence of lines on the relevant surfaces
    force some ``l_i`` to vanish.
    """
    _require_genus(g)
    K2 = 3 - 3 * g
    if not 6 <= g <= 10:
        return DelPezzoReport(g, None, {}, (), {}, (), (), {}, ("no constraint derived",), derived=False)

    m = 5 if g == 10 else 4
    budget = component_genus_budget(g, K2)
    c_min = budget - 5 * m
    max_l2 = chain_lemma_bound(g, K2).max_l_prime
    zero: list[str] = []
    upper: dict[str, int] = {"l2": max_l2}
    certs: list[BoundCertificate] = []
    exclusions: list[BoundCertificate] = []
    flags: list[str] = []

    if max_l2 == 0:
        zero.append("l2")
        # one vertical (-2)-curve already breaks the chain lemma
        exclusions.append(chain_lemma_bound(g, K2)(1, 1))
    if g == 9:
        # the Veronese image of a quadric has no lines, and on P^2 blown up once the
        # only line is the exceptional curve, which is not in a fiber of gamma
        zero.append("l3")
    if g == 10:
        # the degree 9 Del Pezzo surface contains neither lines nor conics
        zero += ["l3", "l4"]
        flags.append("open: every singular fiber would be completely reducible; existence unknown")

    free = [f"l{i}" for i in range(2, m + 1) if f"l{i}" not in zero]
    lower = {"+".join(free): c_min}
    witness_l = {int(free[-1][1:]): c_min}
    certs.insert(0, BoundCertificate.evaluate(
        "component_budget", "2g + 10 <= 5m + c", g=g, K2=K2, m=m, c=c_min
    ))
    if g == 9:
        # four blowups on a ruling of the quadric per (-4)-curve, 32 simple base points
        certs.append(BoundCertificate.evaluate(
            "blowup_count", "4 l_4 <= simple base points", points_per_curve=4, curves=c_min, available=4 * g - 4
        ))
    if g == 10:
        # six points on a line per (-5)-curve, the common base point counted once
        certs.append(BoundCertificate.evaluate(
            "blowup_count", "5 l_5 <= simple base points - 1", points_per_curve=5, curves=c_min, available=4 * g - 5
        ))
    if c_min > 0:
        flags.insert(0, "base points not in general position")
    return DelPezzoReport(g, m, lower, tuple(zero), upper, tuple(certs), tuple(exclusions), witness_l, tuple(flags))
