"""Surfaces, exact symplectic parameters, and cyclic action tuples.

All comparisons are exact: the symplectic parameter is a ``fractions.Fraction``
and is never constructed from a float.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import (
    BelowNormalization,
    EffectivenessWarning,
    NotEffective,
    NotInvertible,
    ParityMismatch,
    TrivialGroup,
)

RationalLike = Fraction | int | str


class SurfaceKind(Enum):
    """The two rational ruled surfaces: the trivial bundle carries the even
    Hirzebruch structures, the non-trivial bundle the odd ones."""

    TRIVIAL = "s2xs2"
    NON_TRIVIAL = "cp2blowup"

    def matches_parity(self, r: int) -> bool:
        return (r % 2 == 0) == (self is SurfaceKind.TRIVIAL)

    @property
    def display(self) -> str:
        return "S^2 x S^2" if self is SurfaceKind.TRIVIAL else "CP^2 # CP^2-bar"


def parse_rational(text: RationalLike) -> Fraction:
    """Parse an exact rational from an integer or a ``p/q`` string.

    Floats and decimal strings are rejected: every range comparison in the
    package is strict and must stay exact.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise ValueError("expected an integer or 'p/q' string")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        raise ValueError("floats are not accepted; pass an exact 'p/q' string")
    s = text.strip()
    if "." in s or "e" in s or "E" in s:
        raise ValueError(f"{text!r} is not exact; write it as 'p/q' (e.g. 7/2)")
    try:
        if "/" in s:
            p, q = s.split("/")
            return Fraction(int(p), int(q))
        return Fraction(int(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse rational {text!r}: {exc}") from None


def format_rational(x: Fraction) -> str:
    """Compact exact form: ``3`` or ``7/2``."""
    return str(x)


def format_rational_pq(x: Fraction) -> str:
    """Always-slashed exact form: ``3/1`` or ``7/2``."""
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class SymplecticForm:
    surface: SurfaceKind
    lam: Fraction


def make_form(surface: SurfaceKind, lam: RationalLike) -> SymplecticForm:
    """Validated symplectic form: lam >= 1 on the trivial bundle, lam > 1 on
    the non-trivial one (the exceptional sphere needs positive area)."""
    value = parse_rational(lam)
    if surface is SurfaceKind.TRIVIAL:
        if value < 1:
            raise BelowNormalization(f"lambda = {value} < 1 on {surface.display}")
    else:
        if value <= 1:
            raise BelowNormalization(f"lambda = {value} <= 1 on {surface.display}")
    return SymplecticForm(surface, value)


def decompose_lambda(lam: RationalLike) -> tuple[int, Fraction]:
    """Split lam = ell + delta with ell a nonnegative integer and 0 < delta <= 1.

    Integers decompose with delta = 1, so ``ell`` counts the tori other than
    the product one: 1 -> (0, 1), 7/2 -> (3, 1/2), 3 -> (2, 1).
    """
    value = parse_rational(lam)
    if value < 1:
        raise BelowNormalization(f"lambda = {value} < 1")
    ell = (value.numerator - 1) // value.denominator  # largest ell with ell < lam
    return ell, value - ell


@dataclass(frozen=True)
class CyclicAction:
    """Parameters (n, a, b; r) of a cyclic subgroup of the standard torus of
    index r, with a, b stored as least nonnegative residues mod n."""

    surface: SurfaceKind
    n: int
    a: int
    b: int
    r: int

    def __str__(self) -> str:
        return f"Z_{self.n}({self.a},{self.b};{self.r})"


def make_action(surface: SurfaceKind, n: int, a: int, b: int, r: int) -> CyclicAction:
    """Validated action tuple.

    Negative ``r`` is normalized through the index-flip convention
    (a, b; r) -> (a, -b; -r) before the parity check.
    """
    if n < 2:
        raise TrivialGroup(f"n = {n} < 2")
    if r < 0:
        r, b = -r, -b
    if not surface.matches_parity(r):
        raise ParityMismatch(f"index r = {r} has the wrong parity for {surface.display}")
    a %= n
    b %= n
    if math.gcd(a, b, n) != 1:
        raise NotEffective(f"gcd({a},{b},{n}) = {math.gcd(a, b, n)} != 1")
    if math.gcd(a, b) != 1:
        warnings.warn(
            f"gcd({a},{b}) = {math.gcd(a, b)} > 1: effective as a Z_{n} action "
            "but the same parameters do not give an effective circle",
            EffectivenessWarning,
            stacklevel=2,
        )
    return CyclicAction(surface, n, a, b, r)


def is_hamiltonian_torus(form: SymplecticForm, r: int) -> bool:
    """Whether the standard torus of index r exists on (M, omega_lambda).

    Even r = 2k needs lam > k; odd r = 2k+1 needs lam > k+1. Strict, exact.
    """
    if r < 0:
        raise ValueError(f"r = {r} < 0")
    if not form.surface.matches_parity(r):
        raise ParityMismatch(f"index r = {r} has the wrong parity for {form.surface.display}")
    k = r // 2
    bound = k if r % 2 == 0 else k + 1
    return form.lam > bound


def reparametrize_to_a_one(action: CyclicAction) -> CyclicAction:
    """Change the preferred generator so the first exponent becomes 1.

    Same subgroup, hence the same centralizer. Requires gcd(a, n) = 1.
    """
    if math.gcd(action.a, action.n) != 1:
        raise NotInvertible(f"a = {action.a} is not a unit mod {action.n}")
    inv = pow(action.a, -1, action.n)
    return CyclicAction(action.surface, action.n, 1, (inv * action.b) % action.n, action.r)


def normalizer_flip(action: CyclicAction) -> CyclicAction:
    """Image under the nontrivial element of the torus normalizer:
    (a, b; r) -> (-a, b - a r; r); a symplectically equivalent action."""
    n = action.n
    return CyclicAction(
        action.surface, n, (-action.a) % n, (action.b - action.a * action.r) % n, action.r
    )


def same_cyclic_subgroup(n: int, pair1: tuple[int, int], pair2: tuple[int, int]) -> bool:
    """Whether (a, b) and (a2, b2) generate the same order-n subgroup of the
    torus, i.e. differ by a unit reparametrization mod n."""
    a, b = pair1[0] % n, pair1[1] % n
    a2, b2 = pair2[0] % n, pair2[1] % n
    for k in range(1, n + 1):
        if math.gcd(k, n) != 1:
            continue
        if (a2 * k) % n == a and (b2 * k) % n == b:
            return True
    return False
