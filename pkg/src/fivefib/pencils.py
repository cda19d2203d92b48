"""The five pencil constructions and their lattice-level verification.

Every case is an ambient minimal surface (P^2 or F_n), a pencil class on it,
and a schedule of base-point multiplicities.  Blowing up the base locus gives
``X``; the verifier re-derives genus, base-point count and ``K_X^2`` by
intersection arithmetic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from . import lattice
from .invariants import adjoint_square
from .lattice import DivisorClass, SurfaceModel


class CaseError(ValueError):
    """Parameters outside the admissible range of a case."""


class CertificateFailure(AssertionError):
    """A case model failed one of its named checks."""

    def __init__(self, check: CaseCheck):
        super().__init__(f"{check.name}: expected {check.expected}, got {check.actual}")
        self.check = check


class CaseId(str, enum.Enum):
    TRIGONAL_SCROLL = "trigonal"
    PLANE_QUINTIC = "plane-quintic"
    QUADRIC_CONE = "quadric-cone"
    PLANE_SEXTIC = "plane-sextic"
    SMOOTH_QUADRIC = "smooth-quadric"

    @classmethod
    def parse(cls, value) -> CaseId:
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().replace("_", "-")
        aliases = {
            "trigonalscroll": cls.TRIGONAL_SCROLL,
            "trigonal-scroll": cls.TRIGONAL_SCROLL,
            "planequintic": cls.PLANE_QUINTIC,
            "quadriccone": cls.QUADRIC_CONE,
            "planesextic": cls.PLANE_SEXTIC,
            "smoothquadric": cls.SMOOTH_QUADRIC,
        }
        if key in aliases:
            return aliases[key]
        try:
            return cls(key)
        except ValueError:
            raise CaseError(f"unknown case id {value!r}") from None


# K_X^2 of the resolved pencil, as stated for each case
EXPECTED_K2 = {
    CaseId.TRIGONAL_SCROLL: lambda g: 2 - 3 * g,
    CaseId.PLANE_QUINTIC: lambda g: -16,
    CaseId.QUADRIC_CONE: lambda g: -10,
    CaseId.PLANE_SEXTIC: lambda g: 3 - 3 * g,
    CaseId.SMOOTH_QUADRIC: lambda g: -24,
}

FIXED_GENUS = {CaseId.PLANE_QUINTIC: 6, CaseId.QUADRIC_CONE: 4, CaseId.SMOOTH_QUADRIC: 9}


@dataclass(frozen=True)
class CaseCheck:
    name: str
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> dict:
        return {"name": self.name, "expected": self.expected, "actual": self.actual, "passed": self.passed}


@dataclass(frozen=True)
class CaseModel:
    """One pencil construction.

    ``ambient`` is the minimal surface carrying ``pencil``; ``schedule`` lists
    the multiplicity of the general member at each base point, double points
    first.
    """

    case_id: CaseId
    g: int
    ambient: SurfaceModel
    pencil: DivisorClass
    schedule: tuple[int, ...]
    n: Optional[int] = None
    checks: tuple[CaseCheck, ...] = field(default=(), compare=False)

    @property
    def double_points(self) -> int:
        return sum(1 for m in self.schedule if m == 2)

    @property
    def simple_points(self) -> int:
        return sum(1 for m in self.schedule if m == 1)

    @property
    def base_points(self) -> int:
        return len(self.schedule)

    @property
    def resolved(self) -> SurfaceModel:
        """The surface ``X`` obtained by blowing up every base point."""
        return self.ambient.blown_up(len(self.schedule))

    @property
    def fiber_class(self) -> DivisorClass:
        return lattice.proper_transform(self.resolved, self.pencil, self.schedule)

    @property
    def K2(self) -> int:
        x = self.resolved
        k = lattice.canonical_class(x)
        return lattice.intersection_pairing(x, k, k)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        d = {"case_id": self.case_id.value, "g": self.g}
        if self.n is not None:
            d["n"] = self.n
        d["ambient"] = self.ambient.to_dict()
        d["pencil"] = str(self.pencil)
        d["pencil_coefficients"] = list(self.pencil.coefficients)
        d["schedule"] = list(self.schedule)
        d["base_points"] = self.base_points
        d["K2"] = self.K2
        d["certificates"] = [c.to_dict() for c in self.checks]
        return d


def _trigonal_b(g: int, n: int) -> int:
    return (g + n) // 2 + n + 1


def _admissible_trigonal(g: int, n: int) -> Optional[str]:
    if not 4 <= g <= 11:
        return f"trigonal case needs 4 <= g <= 11, got g = {g}"
    if n < 0:
        return f"Maroni invariant must be nonnegative, got n = {n}"
    if (g + n) % 2:
        return f"parity: g + n = {g + n} is odd"
    if 3 * n > g + 2:
        return f"3n = {3 * n} exceeds g + 2 = {g + 2}"
    return None


def build_case(case_id, g: Optional[int] = None, n: Optional[int] = None) -> CaseModel:
    """Construct and verify one case; raises :class:`CaseError` on bad parameters."""
    cid = CaseId.parse(case_id)
    if cid in FIXED_GENUS:
        if g is None:
            g = FIXED_GENUS[cid]
        if g != FIXED_GENUS[cid]:
            raise CaseError(f"{cid.value} only occurs for g = {FIXED_GENUS[cid]}, got g = {g}")
    if g is None:
        raise CaseError(f"{cid.value} needs a genus")
    if n is not None and cid is not CaseId.TRIGONAL_SCROLL:
        raise CaseError(f"{cid.value} takes no Maroni invariant")

    if cid is CaseId.TRIGONAL_SCROLL:
        if n is None:
            raise CaseError("trigonal case needs n")
        problem = _admissible_trigonal(g, n)
        if problem:
            raise CaseError(problem)
        ambient = SurfaceModel.hirzebruch(n)
        pencil = ambient.cls(3, _trigonal_b(g, n))
        schedule = (1,) * lattice.self_intersection(pencil)
    elif cid is CaseId.PLANE_QUINTIC:
        ambient = SurfaceModel.plane()
        pencil = ambient.cls(5)
        schedule = (1,) * 25
    elif cid is CaseId.QUADRIC_CONE:
        # minimal resolution of the cone; the pencil misses the vertex curve
        ambient = SurfaceModel.hirzebruch(2)
        pencil = ambient.cls(3, 6)
        schedule = (1,) * 18
    elif cid is CaseId.PLANE_SEXTIC:
        return sextic_case(g)
    else:
        ambient = SurfaceModel.hirzebruch(0)
        pencil = ambient.cls(4, 4)
        schedule = (1,) * 32

    model = CaseModel(cid, g, ambient, pencil, schedule, n)
    return _with_checks(model)


def sextic_case(g: int) -> CaseModel:
    """Plane sextics with ``10 - g`` double base points and ``4g - 4`` simple ones."""
    if not 4 <= g <= 10:
        raise CaseError(f"sextic case needs 4 <= g <= 10, got g = {g}")
    ambient = SurfaceModel.plane()
    pencil = ambient.cls(6)
    schedule = (2,) * (10 - g) + (1,) * (4 * g - 4)
    return _with_checks(CaseModel(CaseId.PLANE_SEXTIC, g, ambient, pencil, schedule))


def _with_checks(model: CaseModel) -> CaseModel:
    checks = verify_case(model)
    return CaseModel(model.case_id, model.g, model.ambient, model.pencil, model.schedule, model.n, tuple(checks))


def verify_case(model: CaseModel, strict: bool = True) -> list[CaseCheck]:
    """Re-derive every numerical claim of ``model`` by lattice arithmetic.

    With ``strict`` the first failing check raises :class:`CertificateFailure`.
    """
    cid, g = model.case_id, model.g
    amb, pencil = model.ambient, model.pencil
    x = model.resolved
    fiber = model.fiber_class
    doubles = (2,) * model.double_points + (0,) * model.simple_points

    # the pencil after resolving only the double points; its square counts the simple base points
    partial = lattice.proper_transform(x, pencil, doubles)
    checks = [
        CaseCheck("genus", g, lattice.arithmetic_genus(x, fiber)),
        CaseCheck("fiber_square", 0, lattice.self_intersection(fiber)),
        CaseCheck("simple_base_points", model.simple_points, lattice.self_intersection(partial)),
        CaseCheck("schedule", True, all(m in (1, 2) for m in model.schedule)),
        CaseCheck("K2", EXPECTED_K2[cid](g), model.K2),
        CaseCheck("K2_vs_blowup_count", x.expected_k2, model.K2),
    ]
    if cid is CaseId.TRIGONAL_SCROLL:
        checks += [
            CaseCheck("ambient", f"F{model.n}", amb.describe()),
            CaseCheck("pencil_class", (3, _trigonal_b(g, model.n)), pencil.base),
            CaseCheck("trigonal", 3, pencil.dot(amb.fiber())),
            CaseCheck("irreducible", True, pencil.dot(amb.section()) >= 0),
            CaseCheck("base_points", 3 * g + 6, model.base_points),
        ]
    elif cid is CaseId.QUADRIC_CONE:
        checks += [
            CaseCheck("ambient", "F2", amb.describe()),
            CaseCheck("vertex_avoiding", 0, pencil.dot(amb.section())),
            CaseCheck("base_points", 18, model.base_points),
        ]
    elif cid is CaseId.PLANE_QUINTIC:
        checks += [
            CaseCheck("ambient", "P2", amb.describe()),
            CaseCheck("pencil_degree", 5, pencil.dot(amb.line())),
            CaseCheck("base_points", 25, model.base_points),
        ]
    else:
        # Del Pezzo cases: the pencil lies in |-2K_Y|, Y = ambient blown up at the double points
        y = amb.blown_up(model.double_points)
        on_y = lattice.proper_transform(y, pencil, (2,) * model.double_points)
        checks.append(CaseCheck("anti_bicanonical", (-2 * lattice.canonical_class(y)).coefficients, on_y.coefficients))
        if cid is CaseId.PLANE_SEXTIC:
            checks += [
                CaseCheck("base_points", 3 * g + 6, model.base_points),
                CaseCheck("ambient", "P2", amb.describe()),
                CaseCheck("double_points", 10 - g, model.double_points),
                CaseCheck("genus_closed_form", 10 - (10 - g), lattice.arithmetic_genus(x, fiber)),
            ]
        else:
            checks += [
                CaseCheck("ambient", "F0", amb.describe()),
                CaseCheck("base_points", 32, model.base_points),
                CaseCheck("pencil_class", (4, 4), pencil.base),
            ]
    if strict:
        for check in checks:
            if not check.passed:
                raise CertificateFailure(check)
    return checks


def enumerate_trigonal(g: int) -> list[CaseModel]:
    """Every Maroni invariant ``n`` with ``g + n`` even and ``3n <= g + 2``."""
    if not 4 <= g <= 11:
        raise CaseError(f"trigonal case needs 4 <= g <= 11, got g = {g}")
    return [build_case(CaseId.TRIGONAL_SCROLL, g, n) for n in range(0, (g + 2) // 3 + 1) if (g + n) % 2 == 0]


def all_cases() -> list[CaseModel]:
    models = []
    for g in range(4, 12):
        models.extend(enumerate_trigonal(g))
    models.append(build_case(CaseId.PLANE_QUINTIC))
    models.append(build_case(CaseId.QUADRIC_CONE))
    models.extend(sextic_case(g) for g in range(4, 11))
    models.append(build_case(CaseId.SMOOTH_QUADRIC))
    return models


# -- minimal degree surfaces ------------------------------------------------


@dataclass(frozen=True)
class AmbientDescriptor:
    """A candidate image surface of the adjoint map, with its embedding class."""

    kind: str  # scroll | veronese | quadric_cone | del_pezzo
    surface: SurfaceModel
    polarization: tuple[int, ...]
    degree: int
    n: Optional[int] = None

    def to_dict(self) -> dict:
        d = {"kind": self.kind, "surface": self.surface.describe(), "degree": self.degree}
        if self.n is not None:
            d["n"] = self.n
        return d


def _descriptor(kind: str, surface: SurfaceModel, polarization: DivisorClass, n=None) -> AmbientDescriptor:
    return AmbientDescriptor(kind, surface, polarization.coefficients, lattice.self_intersection(polarization), n)


def minimal_degree_target(g: int, K2: int) -> list[AmbientDescriptor]:
    """Candidate images of ``|K+F|`` of degree ``(K+F)^2``.

    For ``K^2 = 2 - 3g`` these are the scrolls F_n embedded by
    ``Delta + kGamma`` with ``g + n = 2(k+1)``, plus the Veronese surface at
    ``g = 6`` and the quadric cone at ``g = 4``.  For ``K^2 = 3 - 3g`` they are
    the Del Pezzo models ``P^2`` blown up at ``10 - g`` points, plus F_0 and F_2
    at ``g = 9``.
    """
    degree = adjoint_square(g, K2)
    out: list[AmbientDescriptor] = []
    if K2 == 2 - 3 * g:
        for n in range(0, (g + 2) // 3 + 1):
            k = (g + n) // 2 - 1
            # Delta + kGamma is very ample only for k > n; k = n contracts Delta to the cone vertex
            if (g + n) % 2 or k <= n:
                continue
            f = SurfaceModel.hirzebruch(n)
            out.append(_descriptor("scroll", f, f.cls(1, k), n))
        if g == 6:
            p = SurfaceModel.plane()
            out.append(_descriptor("veronese", p, p.cls(2)))
        if g == 4:
            f = SurfaceModel.hirzebruch(2)
            out.append(_descriptor("quadric_cone", f, f.cls(1, 2), 2))
    elif K2 == 3 - 3 * g:
        if g <= 10:
            y = SurfaceModel.plane(10 - g)
            out.append(_descriptor("del_pezzo", y, -lattice.canonical_class(y)))
        if g == 9:
            for n in (0, 2):
                f = SurfaceModel.hirzebruch(n)
                out.append(_descriptor("del_pezzo", f, -lattice.canonical_class(f), n))
    return [d for d in out if d.degree == degree]
