"""Which Hamiltonian toric actions a circle or cyclic action extends to.

The complete answer is available in two regimes: circles with first exponent
+/-1, and cyclic actions Z_n(1,b;r) with n >= 2*lambda. Outside those, a
breadth-first search through circle reparametrizations still produces a
certified lower bound on the reachable tori.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .actions import (
    CyclicAction,
    SymplecticForm,
    is_hamiltonian_torus,
    reparametrize_to_a_one,
)
from .errors import NotEffective, NotHamiltonian, OutOfRegime


class Provenance(Enum):
    SAME_TORUS = "defining"
    VIA_2B_MINUS_R = "via-2b-minus-r"
    VIA_R_MINUS_2B = "via-r-minus-2b"
    VIA_PLUS_2N = "via-plus-2n"


class Completeness(Enum):
    COMPLETE = "complete"
    LOWER_BOUND = "lower-bound"


@dataclass(frozen=True)
class ToricExtension:
    """One torus the action extends to.

    ``circle_b`` is the second parameter of the embedded circle (1, b')
    inside that torus: the raw integer for circle queries, the least
    nonnegative residue mod n for cyclic ones.
    """

    r_prime: int
    circle_b: int
    provenance: Provenance


@dataclass(frozen=True)
class ToricExtensionSet:
    extensions: tuple[ToricExtension, ...]
    completeness: Completeness

    @property
    def r_values(self) -> tuple[int, ...]:
        return tuple(e.r_prime for e in self.extensions)

    def __len__(self) -> int:
        return len(self.extensions)


def _sorted_set(entries: list[ToricExtension], completeness: Completeness) -> ToricExtensionSet:
    entries = sorted(entries, key=lambda e: e.r_prime)
    assert len({e.r_prime for e in entries}) == len(entries)
    return ToricExtensionSet(tuple(entries), completeness)


def circle_toric_extensions(form: SymplecticForm, a: int, b: int, r: int) -> ToricExtensionSet:
    """Toric extensions of the circle with integer exponents (a, b) inside the
    index-r torus.

    Only the defining torus unless a = +/-1 and b is outside {0, ar}; in the
    +/-1 case a second torus of index |2b - r| appears exactly when it is
    itself Hamiltonian, with the embedded circle (1, b) for 2b - r >= 0 and
    (1, -b) for 2b - r < 0.
    """
    if math.gcd(a, b) != 1:
        raise NotEffective(f"gcd({a},{b}) != 1: not an effective circle")
    if not is_hamiltonian_torus(form, r):
        raise NotHamiltonian(f"no Hamiltonian torus of index {r} at lambda = {form.lam}")
    if a == -1:
        # normalizer flip: (-1, b; r) ~ (1, b + r; r), same subgroup data
        a, b = 1, b + r
    base = ToricExtension(r, b, Provenance.SAME_TORUS)
    if a != 1 or b in (0, a * r):
        return _sorted_set([base], Completeness.COMPLETE)
    second = abs(2 * b - r)
    if second == r or not is_hamiltonian_torus(form, second):
        return _sorted_set([base], Completeness.COMPLETE)
    if 2 * b - r >= 0:
        b_prime, prov = b, Provenance.VIA_2B_MINUS_R
    else:
        b_prime, prov = -b, Provenance.VIA_R_MINUS_2B
    return _sorted_set(
        [base, ToricExtension(second, b_prime, prov)], Completeness.COMPLETE
    )


def _candidate_extensions(
    form: SymplecticForm, n: int, b: int, r: int
) -> list[tuple[int, Provenance]]:
    """In-range second-torus candidates 2b-r, r-2b, r-2b+2n for a normalized
    Z_n(1,b;r); at most one survives under n >= 2*lambda."""
    candidates = [
        (2 * b - r, Provenance.VIA_2B_MINUS_R),
        (r - 2 * b, Provenance.VIA_R_MINUS_2B),
        (r - 2 * b + 2 * n, Provenance.VIA_PLUS_2N),
    ]
    in_range = [
        (v, prov)
        for v, prov in candidates
        if v > 0 and v != r and is_hamiltonian_torus(form, v)
    ]
    assert len(in_range) <= 1, f"candidates {in_range} are not mutually exclusive"
    return in_range


def cyclic_toric_extensions(form: SymplecticForm, action: CyclicAction) -> ToricExtensionSet:
    """The complete toric extension set of a cyclic action.

    gcd(a, n) != 1 forces the single defining torus for every lambda. In the
    unit case the action is normalized to first exponent 1 and the answer is
    complete in the regime n >= 2*lambda, r != 0, 2b != r: either no second
    index is in range (one extension) or exactly one is (two extensions,
    embedded circle parameter b for the 2b-r route and n-b otherwise).
    """
    if not is_hamiltonian_torus(form, action.r):
        raise NotHamiltonian(
            f"no Hamiltonian torus of index {action.r} at lambda = {form.lam}"
        )
    n, r = action.n, action.r
    if math.gcd(action.a, n) != 1:
        return _sorted_set(
            [ToricExtension(r, action.b, Provenance.SAME_TORUS)], Completeness.COMPLETE
        )
    b = reparametrize_to_a_one(action).b
    if r == 0:
        raise OutOfRegime(
            "r-zero-unit",
            f"r = 0 with gcd(a, n) = 1: extensions undetermined for lambda = {form.lam}",
        )
    two_lam = 2 * form.lam
    if n < two_lam:
        raise OutOfRegime("n-below-2lambda", f"n = {n} < 2*lambda = {two_lam}")
    if 2 * b == r:
        raise OutOfRegime("second-torus-index-zero", f"2b = r = {r}: excluded case")
    in_range = _candidate_extensions(form, n, b, r)
    base = ToricExtension(r, b, Provenance.SAME_TORUS)
    if not in_range:
        return _sorted_set([base], Completeness.COMPLETE)
    if n == two_lam:
        raise OutOfRegime(
            "boundary-two-extensions",
            f"n = 2*lambda = {n} with candidate index {in_range[0][0]} in range: "
            "the two-extension criterion needs n > 2*lambda",
        )
    v, prov = in_range[0]
    b_prime = b if prov is Provenance.VIA_2B_MINUS_R else (n - b) % n
    return _sorted_set([base, ToricExtension(v, b_prime, prov)], Completeness.COMPLETE)


def cyclic_extensions_via_circle_chain(
    form: SymplecticForm, action: CyclicAction
) -> ToricExtensionSet:
    """Lower bound on the toric extensions, via chains of circle moves.

    States are pairs (current torus index, circle parameter b mod n). From
    each state every integer lift b + jn of the circle is tried; any second
    torus its extension set produces becomes a new state. Complete answers
    are never claimed: the result is always marked as a lower bound.
    """
    if not is_hamiltonian_torus(form, action.r):
        raise NotHamiltonian(
            f"no Hamiltonian torus of index {action.r} at lambda = {form.lam}"
        )
    n = action.n
    if math.gcd(action.a, n) != 1:
        # no circle with first exponent 1 contains the action
        return ToricExtensionSet(
            (ToricExtension(action.r, action.b, Provenance.SAME_TORUS),),
            Completeness.LOWER_BOUND,
        )
    start = reparametrize_to_a_one(action)
    bound = 2 * form.lam + n  # larger lifts cannot reach an in-range torus
    reached: dict[int, ToricExtension] = {
        start.r: ToricExtension(start.r, start.b, Provenance.SAME_TORUS)
    }
    seen_states = {(start.r, start.b)}
    queue = [(start.r, start.b)]
    while queue:
        r_cur, b_cur = queue.pop(0)
        for lift in sorted(_lift_range(b_cur, n, bound)):
            if lift in (0, r_cur):
                continue  # the circle (1, lift) has no second torus
            circ = circle_toric_extensions(form, 1, lift, r_cur)
            for ext in circ.extensions:
                if ext.provenance is Provenance.SAME_TORUS:
                    continue
                state = (ext.r_prime, ext.circle_b % n)
                if ext.r_prime not in reached:
                    reached[ext.r_prime] = ToricExtension(
                        ext.r_prime, ext.circle_b % n, ext.provenance
                    )
                if state not in seen_states:
                    seen_states.add(state)
                    queue.append(state)
    return _sorted_set(list(reached.values()), Completeness.LOWER_BOUND)


def _lift_range(b_mod: int, n: int, bound) -> list[int]:
    """All integers congruent to b_mod with absolute value <= bound."""
    lifts = []
    v = b_mod % n
    while v <= bound:
        lifts.append(v)
        v += n
    v = b_mod % n - n
    while v >= -bound:
        lifts.append(v)
        v -= n
    return lifts
