"""Centralizer homotopy types for classified actions, their rational
Poincare coefficients, and the Weyl groups of the standard tori."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb

from .actions import CyclicAction, SurfaceKind, SymplecticForm, is_hamiltonian_torus
from .classify import Classification, ClassKind
from .errors import NotHamiltonian, UnresolvedClass
from .extensions import Provenance


class HtKind(Enum):
    TORUS2 = "T2"
    TORUS2_Z2 = "T2xZ2"
    TORUS2_Z8 = "T2xZ8"
    S1_SO3 = "S1xSO3"
    S1_SO3_Z2 = "S1xSO3xZ2"
    U2 = "U2"
    OMEGA_S3_T3 = "OmegaS3xT3"


_LABELS = {
    HtKind.TORUS2: "T^2",
    HtKind.TORUS2_Z2: "T^2 x Z_2",
    HtKind.TORUS2_Z8: "T^2 x Z_8",
    HtKind.S1_SO3: "S^1 x SO(3)",
    HtKind.S1_SO3_Z2: "S^1 x SO(3) x Z_2",
    HtKind.U2: "U(2)",
    HtKind.OMEGA_S3_T3: "Omega S^3 x S^1 x S^1 x S^1",
}

_COMPONENTS = {
    HtKind.TORUS2: 1,
    HtKind.TORUS2_Z2: 2,
    HtKind.TORUS2_Z8: 8,
    HtKind.S1_SO3: 1,
    HtKind.S1_SO3_Z2: 2,
    HtKind.U2: 1,
    HtKind.OMEGA_S3_T3: 1,
}


@dataclass(frozen=True)
class PushoutPresentation:
    """Two tori glued along a common circle, recorded by the homotopy classes
    (1, b) and (1, b') of the circle in each."""

    r: int
    r_prime: int
    circle_in_r: tuple[int, int]
    circle_in_r_prime: tuple[int, int]


@dataclass(frozen=True)
class HomotopyType:
    kind: HtKind
    pushout: PushoutPresentation | None = None

    def __post_init__(self) -> None:
        assert (self.kind is HtKind.OMEGA_S3_T3) == (self.pushout is not None)

    @property
    def label(self) -> str:
        return _LABELS[self.kind]

    @property
    def components(self) -> int:
        return _COMPONENTS[self.kind]


def centralizer_type(
    cls: Classification, action: CyclicAction, form: SymplecticForm
) -> HomotopyType:
    """Table lookup from class to centralizer homotopy type."""
    if cls.is_unresolved:
        raise UnresolvedClass(f"{action}: {cls.reason}")
    kind = cls.kind
    n, a, b = action.n, action.a, action.b

    if kind in (ClassKind.H0, ClassKind.OH0):
        if a == 0:
            base = HtKind.S1_SO3 if form.surface is SurfaceKind.TRIVIAL else HtKind.U2
            return HomotopyType(base)
        if n == 2 * a:
            return HomotopyType(HtKind.TORUS2_Z2)
        return HomotopyType(HtKind.TORUS2)

    if kind in (ClassKind.H1, ClassKind.H3, ClassKind.OH1, ClassKind.OH3):
        return HomotopyType(HtKind.TORUS2)

    if kind in (ClassKind.H2, ClassKind.OH2):
        assert cls.extensions is not None and cls.normalized is not None
        defining, = [
            e for e in cls.extensions.extensions if e.provenance is Provenance.SAME_TORUS
        ]
        other, = [
            e for e in cls.extensions.extensions if e.provenance is not Provenance.SAME_TORUS
        ]
        return HomotopyType(
            HtKind.OMEGA_S3_T3,
            PushoutPresentation(
                r=defining.r_prime,
                r_prime=other.r_prime,
                circle_in_r=(1, cls.normalized.b),
                circle_in_r_prime=(1, other.circle_b),
            ),
        )

    if kind is ClassKind.Z1:
        if (a, b) in {(1, 1), (1, n - 1), (n - 1, 1)}:
            return HomotopyType(HtKind.TORUS2_Z2)
        return HomotopyType(HtKind.TORUS2)

    if kind is ClassKind.Z2:
        if a % n == 0 or b % n == 0:
            return HomotopyType(HtKind.S1_SO3_Z2)
        return HomotopyType(HtKind.TORUS2_Z2)

    if kind is ClassKind.Z3:
        if (a, b) == (1, 1):
            return HomotopyType(HtKind.TORUS2_Z8)
        return HomotopyType(HtKind.S1_SO3_Z2)

    assert kind is ClassKind.Z0
    if a == 0 or b == 0:
        return HomotopyType(HtKind.S1_SO3_Z2)
    if (2 * a) % n != 0 and (2 * b) % n != 0:
        return HomotopyType(HtKind.TORUS2)
    return HomotopyType(HtKind.TORUS2_Z2)


def poincare_coeffs(h: HomotopyType, max_deg: int) -> list[int]:
    """Rational (characteristic-0) cohomology ranks in degrees 0..max_deg.

    Finite factors multiply every rank by the component count. The
    two-extension type has the series (1+t)^3 / (1-t^2) = 1 + 3t + 4t^2 + ...
    """
    if max_deg < 0:
        raise ValueError(f"max_deg = {max_deg} < 0")
    kind = h.kind
    if kind is HtKind.OMEGA_S3_T3:
        return [[1, 3][p] if p < 2 else 4 for p in range(max_deg + 1)]
    if kind in (HtKind.S1_SO3, HtKind.U2, HtKind.S1_SO3_Z2):
        base = [1 if p in (0, 1, 3, 4) else 0 for p in range(max_deg + 1)]
    else:
        base = [comb(2, p) for p in range(max_deg + 1)]
    return [h.components * c for c in base]


class WeylGroup(Enum):
    D4 = "D4"
    D2 = "D2"
    D1 = "D1"


def weyl_group(form: SymplecticForm, r: int) -> WeylGroup:
    """Weyl group of the index-r torus: the full square symmetry group only
    for the product torus on equal factors, the rectangle group for r = 0
    otherwise, and a single flip for r >= 1."""
    if not is_hamiltonian_torus(form, r):
        raise NotHamiltonian(f"no Hamiltonian torus of index {r} at lambda = {form.lam}")
    if r == 0:
        return WeylGroup.D4 if form.lam == 1 else WeylGroup.D2
    return WeylGroup.D1
