"""The tractability classification of a cyclic action on a ruled surface.

Every effective Hamiltonian input lands in exactly one class H0-H3, Z0-Z3,
OH0-OH3, or is declared Unresolved with a machine-readable reason mirroring
the cases the theory leaves open.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .actions import (
    CyclicAction,
    SurfaceKind,
    SymplecticForm,
    is_hamiltonian_torus,
    reparametrize_to_a_one,
)
from .errors import NotHamiltonian, OutOfRegime
from .extensions import (
    Completeness,
    Provenance,
    ToricExtension,
    ToricExtensionSet,
    cyclic_toric_extensions,
)


class ClassKind(Enum):
    H0 = "H0"
    H1 = "H1"
    H2 = "H2"
    H3 = "H3"
    Z0 = "Z0"
    Z1 = "Z1"
    Z2 = "Z2"
    Z3 = "Z3"
    OH0 = "OH0"
    OH1 = "OH1"
    OH2 = "OH2"
    OH3 = "OH3"
    UNRESOLVED = "Unresolved"


# Reasons the classification declines an input.
REASON_TEXT = {
    "R1": (
        "the action is one of the exceptional two-extension families "
        "Z_{2r}(1,b;r), Z_{2r+2}(1,r+1;r), Z_{2r+2}(1,2r+1;r); the extension "
        "set is known but the centralizer type is not determined"
    ),
    "R2": (
        "2b - r = n: outside the families whose fixed points are rigid enough "
        "to determine the centralizer"
    ),
    "R3": (
        "n < 2*lambda: the smooth classification does not pin down the "
        "toric extensions in this range"
    ),
    "R4": (
        "2b = r: a second extension through the index-0 torus can be neither "
        "confirmed nor excluded"
    ),
    "R5": (
        "r = 0 with gcd(a, n) = 1 and lambda > 1: the toric extensions are "
        "undetermined"
    ),
    "Rboundary": (
        "n = 2*lambda with a candidate second torus in range: the "
        "two-extension criterion needs n > 2*lambda"
    ),
}


class FixedPointStructure(Enum):
    ISOLATED_POINTS = "isolated-points"
    CONTAINS_FIXED_SURFACE = "contains-fixed-surface"


@dataclass(frozen=True)
class Classification:
    kind: ClassKind
    reason: str | None = None
    extensions: ToricExtensionSet | None = None
    normalized: CyclicAction | None = None

    @property
    def is_unresolved(self) -> bool:
        return self.kind is ClassKind.UNRESOLVED

    def __str__(self) -> str:
        if self.is_unresolved:
            return f"Unresolved({self.reason})"
        return self.kind.value


def _single(action: CyclicAction, b: int | None = None) -> ToricExtensionSet:
    b_val = action.b if b is None else b
    return ToricExtensionSet(
        (ToricExtension(action.r, b_val, Provenance.SAME_TORUS),), Completeness.COMPLETE
    )


def _unresolved(code: str, extensions=None, normalized=None) -> Classification:
    return Classification(ClassKind.UNRESOLVED, code, extensions, normalized)


def classify(form: SymplecticForm, action: CyclicAction) -> Classification:
    """Decision tree assigning the tractability class.

    Unit first exponents are reparametrized to 1 before the range tests, so
    the result is invariant under changing the preferred generator.
    """
    if not is_hamiltonian_torus(form, action.r):
        raise NotHamiltonian(
            f"{action} is not Hamiltonian at lambda = {form.lam}"
        )
    n, r = action.n, action.r
    odd = form.surface is SurfaceKind.NON_TRIVIAL
    unit = math.gcd(action.a, n) == 1

    if r == 0:
        return _classify_r_zero(form, action, unit)

    if not unit:
        kind = ClassKind.OH0 if odd else ClassKind.H0
        return Classification(kind, None, _single(action), None)

    norm = reparametrize_to_a_one(action)
    b = norm.b
    if n < 2 * form.lam:
        return _unresolved("R3", normalized=norm)
    if 2 * b == r:
        return _unresolved("R4", normalized=norm)
    if 2 * b - r == n:
        # extension count is still certified here (every candidate falls on
        # the boundary of the range), only the centralizer is not
        return _unresolved("R2", cyclic_toric_extensions(form, norm), norm)
    try:
        exts = cyclic_toric_extensions(form, norm)
    except OutOfRegime as exc:
        if exc.code == "boundary-two-extensions":
            return _unresolved("Rboundary", normalized=norm)
        raise
    if len(exts) == 1:
        if b in (0, r):
            kind = ClassKind.OH3 if odd else ClassKind.H3
        else:
            kind = ClassKind.OH1 if odd else ClassKind.H1
        return Classification(kind, None, exts, norm)
    if n == 2 * r or (n == 2 * r + 2 and b in (r + 1, 2 * r + 1)):
        return _unresolved("R1", exts, norm)
    kind = ClassKind.OH2 if odd else ClassKind.H2
    return Classification(kind, None, exts, norm)


def _classify_r_zero(form: SymplecticForm, action: CyclicAction, unit: bool) -> Classification:
    n, a, b = action.n, action.a, action.b
    norm = reparametrize_to_a_one(action) if unit else None
    if form.lam == 1:
        if n == 2:
            kind = ClassKind.Z3
        elif (2 * a) % n != 0 and (2 * b) % n != 0:
            kind = ClassKind.Z1
        else:
            kind = ClassKind.Z2
        return Classification(kind, None, _single(action), norm)
    if not unit:
        return Classification(ClassKind.Z0, None, _single(action), None)
    return _unresolved("R5", normalized=norm)


def fixed_point_structure(action: CyclicAction) -> FixedPointStructure:
    """Whether the fixed point set contains a surface: exactly when a zero
    weight appears along an invariant edge, i.e. a = 0, b = 0, or b = ar."""
    n = action.n
    if action.a % n == 0 or action.b % n == 0 or (action.b - action.a * action.r) % n == 0:
        return FixedPointStructure.CONTAINS_FIXED_SURFACE
    return FixedPointStructure.ISOLATED_POINTS
