"""Reproduce the anchored classification values; used by ``fivefib --self-test``."""

from __future__ import annotations

import json
import random
from fractions import Fraction
from typing import Callable, Iterator

from . import lattice
from .certificates import BoundCertificate
from .enumerator import (
    K2Family,
    certify_max_genus,
    chain_lemma_bound,
    component_genus_budget,
    del_pezzo_case_constraints,
    feasible_genus_k2,
)
from .invariants import FibrationConfig, mvt_check
from .pencils import CaseId, build_case, enumerate_trigonal, sextic_case

Check = Callable[[], str]


def expect(condition, detail="") -> None:
    if not condition:
        raise AssertionError(str(detail) if detail != "" else "check failed")


def dichotomy() -> str:
    expected = {(g, 2 - 3 * g) for g in range(4, 18)} | {(g, 3 - 3 * g) for g in range(4, 11)}
    got = feasible_genus_k2(5).pairs
    expect(got == expected, f"extra {sorted(got - expected)}, missing {sorted(expected - got)}")
    return f"{len(got)} rows"


def max_genus() -> str:
    table = certify_max_genus(K2Family.TWO_MINUS_3G)
    expect(table.max_genus == 11, table.max_genus)
    config = FibrationConfig(12, -34, chains=(6,))
    expect(config.r_f == 83 + Fraction(1, 7), config.r_f)
    cert = mvt_check(config, 5)
    expect(cert.slack == Fraction(-4, 7), cert.slack)
    refutation = table.row(12).refutation
    expect(refutation is not None and refutation.slack == Fraction(-4, 7))
    expect(certify_max_genus(K2Family.THREE_MINUS_3G).max_genus == 10)
    return "max g = 11, r_f = 582/7, deficit -4/7"


def stability() -> str:
    for g in range(9, 11):
        pairs = chain_lemma_bound(g, 3 - 3 * g).admissible_pairs()
        expect(pairs == [(0, 0)], (g, pairs))
    pairs = chain_lemma_bound(8, -21).admissible_pairs()
    expect(pairs == [(0, 0), (1, 1), (2, 1)], pairs)
    return "g>=9: (0,0); g=8: (0,0),(1,1),(2,1)"


def cases() -> str:
    m = build_case(CaseId.PLANE_QUINTIC)
    expect((m.g, m.base_points, m.K2) == (6, 25, -16))
    m = build_case(CaseId.QUADRIC_CONE)
    expect((m.g, m.base_points, m.K2) == (4, 18, -10))
    m = build_case(CaseId.SMOOTH_QUADRIC)
    expect((m.g, m.base_points, m.K2) == (9, 32, -24))
    count = 0
    for g in range(4, 12):
        for m in enumerate_trigonal(g):
            expect((m.base_points, m.K2, m.pencil.dot(m.ambient.fiber())) == (3 * g + 6, 2 - 3 * g, 3))
            count += 1
    for g in range(4, 11):
        m = sextic_case(g)
        expect((m.double_points, m.base_points, m.K2) == (10 - g, 3 * g + 6, 3 - 3 * g))
    return f"3 fixed cases, {count} trigonal models, 7 sextic models"


def del_pezzo() -> str:
    r = del_pezzo_case_constraints(9)
    expect(dict(r.lower) == {"l4": 8} and set(r.zero) == {"l2", "l3"})
    r = del_pezzo_case_constraints(10)
    expect(dict(r.lower) == {"l5": 5} and set(r.zero) == {"l2", "l3", "l4"})
    for g in (6, 7, 8):
        expect(dict(del_pezzo_case_constraints(g).lower) == {"l2+l3+l4": 2 * g - 10})
    return "l4>=8 (g=9), l5>=5 (g=10), l2+l3+l4>=2g-10 (g=6..8)"


def properties() -> str:
    rng = random.Random(20240501)
    for _ in range(1000):
        s = lattice.SurfaceModel(rng.choice([None, 0, 1, 2, 3]), ()).blown_up(rng.randrange(4))
        a, b, c = (lattice.DivisorClass(s, [rng.randint(-9, 9) for _ in range(s.picard_rank)]) for _ in range(3))
        k = rng.randint(-5, 5)
        expect(a.dot(b) == b.dot(a))
        expect((a + k * b).dot(c) == a.dot(c) + k * b.dot(c))
    p2 = lattice.SurfaceModel.plane()
    for d in range(1, 21):
        expect(lattice.arithmetic_genus(p2, p2.cls(d)) == (d - 1) * (d - 2) // 2)
    for g in range(4, 18):
        expect(component_genus_budget(g, 2 - 3 * g) == FibrationConfig(g, 2 - 3 * g).e_f - 5 * (g - 1))
    for g in range(4, 11):
        expect(component_genus_budget(g, 3 - 3 * g) == FibrationConfig(g, 3 - 3 * g).e_f - 5 * (g - 1))
    table = certify_max_genus(K2Family.TWO_MINUS_3G)
    for row in table.rows:
        for cert in row.certificates:
            again = BoundCertificate.from_dict(json.loads(json.dumps(cert.to_dict())))
            expect(again == cert and again.slack == cert.slack and again.revalidate())
    shuffled = certify_max_genus(K2Family.TWO_MINUS_3G, order_seed=7)
    expect(json.dumps(shuffled.to_dict()) == json.dumps(table.to_dict()))
    return "pairing, adjunction, budget, round trip, order independence"


CHECKS: dict[str, Check] = {
    "1 dichotomy": dichotomy,
    "2 max genus 2-3g": max_genus,
    "3 stability lemma": stability,
    "4 case table": cases,
    "5 del Pezzo constraints": del_pezzo,
    "6 property suites": properties,
}


def run() -> Iterator[tuple[str, bool, str]]:
    for name, check in CHECKS.items():
        try:
            detail = check()
        except AssertionError as exc:
            yield name, False, str(exc) or "assertion failed"
        else:
            yield name, True, detail
