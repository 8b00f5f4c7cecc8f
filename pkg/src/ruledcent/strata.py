"""Stratification of the space of invariant compatible almost complex
structures: one stratum per toric extension, with its complex codimension.

Two independent routes compute the codimension: a direct count of indices
j in [1, s-1] congruent to the circle parameter, and counts over the
eigenbasis window of the deformation space (even and odd index versions).
"""

from __future__ import annotations

from dataclasses import dataclass

from .actions import CyclicAction, SymplecticForm
from .classify import Classification, classify
from .errors import UnresolvedClass


@dataclass(frozen=True)
class Stratum:
    r_prime: int
    b_in_torus: int
    complex_codim: int
    real_codim_nonequivariant: int
    is_open: bool


def stratum_codim(n: int, b: int, s: int) -> int:
    """Complex codimension of the index-s stratum for an action embedded with
    circle parameter b: the number of j in {1, ..., s-1} with j = b (mod n)."""
    b %= n
    return sum(1 for j in range(1, s) if j % n == b)


def codim_oracle_even(n: int, b: int, k: int) -> int:
    """Deformation-space count for even index s = 2k: trivial-isotropy
    eigenvectors are indexed by m in {1-k, ..., k-1} with m = k - b (mod n)."""
    target = (k - b) % n
    return sum(1 for m in range(1 - k, k) if m % n == target)


def codim_oracle_odd(n: int, b: int, k: int) -> int:
    """Deformation-space count for odd index s = 2k+1: eigenvectors are
    indexed by m in {0, ..., s-2} with m = 2k - b (mod n)."""
    target = (2 * k - b) % n
    return sum(1 for m in range(0, 2 * k) if m % n == target)


def _real_codim(r_prime: int) -> int:
    return 2 * r_prime - 2 if r_prime > 0 else 0


def stratification(
    form: SymplecticForm, action: CyclicAction, classification: Classification | None = None
) -> list[Stratum]:
    """One stratum per toric extension of a classified action.

    Single-extension classes are the whole space: one open stratum of
    codimension 0. Two-extension classes split into an open stratum and one
    of complex codimension 1.
    """
    cls = classification if classification is not None else classify(form, action)
    if cls.is_unresolved:
        raise UnresolvedClass(f"{action}: {cls.reason}")
    assert cls.extensions is not None
    n = action.n
    if len(cls.extensions) == 1:
        ext = cls.extensions.extensions[0]
        return [Stratum(ext.r_prime, ext.circle_b % n, 0, _real_codim(ext.r_prime), True)]
    strata = [
        Stratum(
            ext.r_prime,
            ext.circle_b % n,
            stratum_codim(n, ext.circle_b, ext.r_prime),
            _real_codim(ext.r_prime),
            stratum_codim(n, ext.circle_b, ext.r_prime) == 0,
        )
        for ext in cls.extensions.extensions
    ]
    codims = sorted(s.complex_codim for s in strata)
    assert codims == [0, 1], f"{action}: two-extension codimensions {codims} != [0, 1]"
    return strata
