import dataclasses
import json

import pytest

from fivefib import lattice
from fivefib.pencils import (
    CaseError,
    CaseId,
    CaseModel,
    CertificateFailure,
    all_cases,
    build_case,
    enumerate_trigonal,
    minimal_degree_target,
    sextic_case,
    verify_case,
)


def admissible(cid, g, n):
    if cid is CaseId.TRIGONAL_SCROLL:
        return n is not None and 4 <= g <= 11 and (g + n) % 2 == 0 and 3 * n <= g + 2
    if n is not None:
        return False
    return {
        CaseId.PLANE_QUINTIC: g == 6,
        CaseId.QUADRIC_CONE: g == 4,
        CaseId.SMOOTH_QUADRIC: g == 9,
        CaseId.PLANE_SEXTIC: 4 <= g <= 10,
    }[cid]


@pytest.mark.parametrize("cid", list(CaseId))
def test_parameter_lattice_coverage(cid):
    for g in range(4, 13):
        for n in [None, *range(0, 7)]:
            if admissible(cid, g, n):
                m = build_case(cid, g, n)
                assert m.passed
                assert all(c.passed for c in verify_case(m, strict=False))
            else:
                with pytest.raises(CaseError):
                    build_case(cid, g, n)


def test_trigonal_5_1():
    m = build_case("trigonal", 5, 1)
    assert m.pencil.base == (3, 5)
    assert str(m.pencil) == "3Delta+5Gamma"
    assert m.ambient.describe() == "F1"
    assert lattice.arithmetic_genus(m.ambient, m.pencil) == 5


def test_trigonal_parity_error():
    with pytest.raises(CaseError, match="parity"):
        build_case(CaseId.TRIGONAL_SCROLL, 5, 2)
    with pytest.raises(CaseError, match="parity"):
        build_case(CaseId.TRIGONAL_SCROLL, 11, 4)


@pytest.mark.parametrize("g", range(4, 12))
def test_trigonal_invariants(g):
    for m in enumerate_trigonal(g):
        k = (g + m.n) // 2 - 1
        assert m.pencil.base == (3, k + m.n + 2)
        assert m.base_points == 3 * g + 6
        assert m.K2 == 2 - 3 * g
        assert m.pencil.dot(m.ambient.fiber()) == 3
        assert lattice.arithmetic_genus(m.ambient, m.pencil) == 2 + 2 * k - m.n == g


def test_enumerate_trigonal_examples():
    assert [m.n for m in enumerate_trigonal(4)] == [0, 2]
    assert [m.n for m in enumerate_trigonal(11)] == [1, 3]
    assert [m.n for m in enumerate_trigonal(5)] == [1]
    with pytest.raises(CaseError):
        enumerate_trigonal(12)


def test_trigonal_11_3():
    m = build_case(CaseId.TRIGONAL_SCROLL, 11, 3)
    assert (m.base_points, m.K2) == (39, -31)


@pytest.mark.parametrize(
    "cid,g,points,K2",
    [
        (CaseId.PLANE_QUINTIC, 6, 25, -16),
        (CaseId.QUADRIC_CONE, 4, 18, -10),
        (CaseId.SMOOTH_QUADRIC, 9, 32, -24),
    ],
)
def test_fixed_cases(cid, g, points, K2):
    m = build_case(cid)
    assert (m.g, m.base_points, m.K2) == (g, points, K2)
    assert m.passed
    assert lattice.self_intersection(m.fiber_class) == 0
    assert lattice.arithmetic_genus(m.resolved, m.fiber_class) == g


def test_quintic_class():
    m = build_case("plane-quintic")
    assert m.pencil == m.ambient.cls(5)


def test_cone_avoids_vertex():
    m = build_case(CaseId.QUADRIC_CONE)
    assert m.pencil.dot(m.ambient.section()) == 0
    assert m.pencil.base == (3, 6)


@pytest.mark.parametrize("g", range(4, 11))
def test_sextic(g):
    m = sextic_case(g)
    assert m.double_points == 10 - g
    assert m.simple_points == 4 * g - 4
    assert m.base_points == 3 * g + 6
    assert m.K2 == 3 - 3 * g
    assert lattice.arithmetic_genus(m.resolved, m.fiber_class) == 10 - (10 - g)


def test_sextic_examples():
    assert (sextic_case(10).double_points, sextic_case(10).simple_points, sextic_case(10).K2) == (0, 36, -27)
    assert (sextic_case(4).double_points, sextic_case(4).simple_points, sextic_case(4).K2) == (6, 12, -9)
    assert (sextic_case(6).double_points, sextic_case(6).simple_points) == (4, 20)
    with pytest.raises(CaseError):
        sextic_case(11)


def test_del_pezzo_cases_are_anti_bicanonical():
    for m in [*(sextic_case(g) for g in range(4, 11)), build_case(CaseId.SMOOTH_QUADRIC)]:
        names = {c.name: c for c in m.checks}
        assert names["anti_bicanonical"].passed


def test_all_cases():
    models = all_cases()
    assert len(models) == 26
    assert all(m.passed for m in models)


def test_bad_model_detected():
    good = build_case(CaseId.PLANE_QUINTIC)
    bad = dataclasses.replace(good, schedule=(1,) * 24, checks=())
    checks = verify_case(bad, strict=False)
    failed = {c.name for c in checks if not c.passed}
    assert {"fiber_square", "K2", "base_points"} <= failed
    with pytest.raises(CertificateFailure) as err:
        verify_case(bad)
    assert err.value.check.name == "fiber_square"


def test_wrong_pencil_detected():
    good = build_case(CaseId.QUADRIC_CONE)
    bad = dataclasses.replace(good, pencil=good.ambient.cls(3, 5), checks=())
    failed = {c.name for c in verify_case(bad, strict=False) if not c.passed}
    assert "vertex_avoiding" in failed and "genus" in failed


def test_case_id_aliases():
    assert CaseId.parse("trigonal") is CaseId.TRIGONAL_SCROLL
    assert CaseId.parse("PlaneSextic") is CaseId.PLANE_SEXTIC
    with pytest.raises(CaseError):
        CaseId.parse("cubic")


def test_case_json_shape():
    d = json.loads(json.dumps(build_case("trigonal", 6, 2).to_dict()))
    assert {"case_id", "g", "n", "ambient", "pencil_coefficients", "schedule", "certificates"} <= set(d)
    assert d["n"] == 2
    assert "n" not in build_case("plane-quintic").to_dict()


def test_minimal_degree_targets():
    kinds = lambda g, k2: sorted((d.kind, d.surface.describe()) for d in minimal_degree_target(g, k2))
    six = kinds(6, -16)
    assert ("veronese", "P2") in six
    assert any(k == "scroll" for k, _ in six)
    four = kinds(4, -10)
    assert ("quadric_cone", "F2") in four
    assert any(k == "scroll" for k, _ in four)
    nine = kinds(9, -24)
    assert [s for _, s in nine] == sorted(["F0", "F2", "P2 blown up at 1 point"])
    for g in range(4, 12):
        for d in minimal_degree_target(g, 2 - 3 * g):
            assert d.degree == g - 2
    for g in range(4, 11):
        for d in minimal_degree_target(g, 3 - 3 * g):
            assert d.degree == g - 1
    assert all(d.kind != "veronese" for g in (4, 5, 7) for d in minimal_degree_target(g, 2 - 3 * g))
