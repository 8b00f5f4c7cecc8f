"""The six standard equivariant-diffeomorphism moves on parameter triples,
orbit enumeration under them, and verification of the group they generate.

A triple (a, b; r) lives in Z_n x Z_n x Z_2n. The restricted domain T_n
(``in_restricted_domain``) additionally has gcd(a, n) = 1 and r != 0 mod 2n;
on it the index-shift move is absorbed by working mod 2n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import NoSolution, NotApplicable


class Move(Enum):
    C1 = "c1"
    C2 = "c2"
    C3 = "c3"
    C4 = "c4"
    C5 = "c5"
    C6 = "c6"


class Equivalence(Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class TripleMod:
    """(a, b; r) with a, b reduced mod n and r reduced mod 2n."""

    n: int
    a: int
    b: int
    r: int

    def __str__(self) -> str:
        return f"({self.a},{self.b};{self.r}) mod ({self.n},{self.n},{2 * self.n})"


def make_triple(n: int, a: int, b: int, r: int) -> TripleMod:
    if n < 2:
        raise ValueError(f"n = {n} < 2")
    return TripleMod(n, a % n, b % n, r % (2 * n))


def in_restricted_domain(t: TripleMod) -> bool:
    return math.gcd(t.a, t.n) == 1 and t.r % (2 * t.n) != 0


def _c6_unique(a: int, b: int, r: int, n: int) -> int:
    """The index produced by the sixth move for a lift ``a`` that is a unit
    mod 2n: the unique r' with a r' = 2b - r a (mod 2n)."""
    m = 2 * n
    return (pow(a, -1, m) * (2 * b - r * a)) % m


def _c6_solutions(t: TripleMod) -> list[int]:
    """All r' mod 2n with a r' = 2b - r a (mod 2n), for the stored lift of a.

    One solution when a is odd; two (differing by n) when a is even with
    gcd(a, n) = 1. The congruence is always solvable in the unit case, but a
    defensive ``NoSolution`` guards the general-divisor arithmetic.
    """
    m = 2 * t.n
    rhs = (2 * t.b - t.r * t.a) % m
    g = math.gcd(t.a, m)
    if rhs % g != 0:
        raise NoSolution(f"{t.a} r' = {rhs} (mod {m}) has no solution")
    m_red = m // g
    base = (pow(t.a // g, -1, m_red) * (rhs // g)) % m_red
    return sorted((base + i * m_red) % m for i in range(g))


def c6_preserving_parity(t: TripleMod) -> TripleMod:
    """The sixth move restricted to the branch that stays on the same
    diffeomorphism type (r' = r mod 2); single-valued for every unit a."""
    if math.gcd(t.a, t.n) != 1:
        raise NotApplicable(f"move c6 needs gcd(a, n) = 1; gcd({t.a},{t.n}) != 1")
    lift = t.a if t.a % 2 == 1 else t.a + t.n
    return TripleMod(t.n, t.a, t.b, _c6_unique(lift, t.b, t.r, t.n))


def apply_move(move: Move, t: TripleMod) -> frozenset[TripleMod]:
    """Image(s) of a triple under one move; a set of size 1 or 2.

    The fourth move needs r = 0 (mod 2n); the fifth and sixth need
    gcd(a, n) = 1.
    """
    n, a, b, r = t.n, t.a, t.b, t.r
    m = 2 * n
    if move is Move.C1:
        return frozenset({TripleMod(n, (-a) % n, (-b) % n, r)})
    if move is Move.C2:
        return frozenset({TripleMod(n, (-a) % n, (b - r * a) % n, r)})
    if move is Move.C3:
        return frozenset({TripleMod(n, a, (-b) % n, (-r) % m)})
    if move is Move.C4:
        if r % m != 0:
            raise NotApplicable(f"move c4 needs r = 0 (mod {m}); got r = {r}")
        return frozenset({TripleMod(n, (-b) % n, (-a) % n, 0)})
    if math.gcd(a, n) != 1:
        raise NotApplicable(f"move {move.value} needs gcd(a, n) = 1; gcd({a},{n}) != 1")
    if move is Move.C5:
        return frozenset({t})
    return frozenset(TripleMod(n, a, b, rp) for rp in _c6_solutions(t))


def orbit(t: TripleMod) -> frozenset[TripleMod]:
    """Closure of {t} under the first, second, third, and (parity-preserving)
    sixth moves, inside the restricted domain.

    Raises ``NotApplicable`` if the start triple is outside the restricted
    domain or the closure would leave it (which happens exactly when some
    reachable triple has 2b - ar = 0 mod 2n).
    """
    if not in_restricted_domain(t):
        raise NotApplicable(f"{t} is outside the restricted domain")
    seen = {t}
    frontier = [t]
    while frontier:
        cur = frontier.pop()
        images = [
            next(iter(apply_move(Move.C1, cur))),
            next(iter(apply_move(Move.C2, cur))),
            next(iter(apply_move(Move.C3, cur))),
            c6_preserving_parity(cur),
        ]
        for img in images:
            if img.r % (2 * img.n) == 0:
                raise NotApplicable(f"orbit of {t} leaves the restricted domain at {img}")
            if img not in seen:
                seen.add(img)
                frontier.append(img)
    return frozenset(seen)


def canonical_form(t: TripleMod) -> TripleMod:
    """Deterministic orbit representative: lexicographic least (r, a, b)."""
    return min(orbit(t), key=lambda u: (u.r, u.a, u.b))


def _sign_one_lift(a: int, n: int) -> int | None:
    """+1 or -1 when a = +/-1 (mod n), else None."""
    if a % n == 1 % n:
        return 1
    if a % n == (-1) % n:
        return -1
    return None


def lemma_r_values(t: TripleMod) -> frozenset[int]:
    """{+/-r, +/-(2b - ar)} mod 2n for a = +/-1 triples, computed with the
    signed integer lift of a."""
    sign = _sign_one_lift(t.a, t.n)
    if sign is None:
        raise NotApplicable(f"a = {t.a} is not +/-1 mod {t.n}")
    m = 2 * t.n
    s = (2 * t.b - sign * t.r) % m
    return frozenset({t.r % m, (-t.r) % m, s, (-s) % m})


def smoothly_equivalent(t1: TripleMod, t2: TripleMod) -> Equivalence:
    """Decide smooth equivalence of two triples by orbit membership.

    When either triple has a = +/-1, r != 0, and 2b - ar != 0 (mod 2n), its
    orbit is a complete list of everything equivalent to it, so membership
    of the other triple decides. When neither qualifies the generating set of
    equivalences is not characterized and the answer is ``UNKNOWN``.
    """
    if t1.n != t2.n:
        raise ValueError(f"different moduli: {t1.n} != {t2.n}")

    def decidable(t: TripleMod) -> bool:
        sign = _sign_one_lift(t.a, t.n)
        if sign is None:
            return False
        m = 2 * t.n
        return t.r % m != 0 and (2 * t.b - sign * t.r) % m != 0

    for base, other in ((t1, t2), (t2, t1)):
        if decidable(base):
            return Equivalence.YES if other in orbit(base) else Equivalence.NO
    return Equivalence.UNKNOWN


# --- group-presentation verification -------------------------------------
#
# The moves act on the finite set of triples (a, b, r) with a a unit mod 2n,
# b mod n, r mod 2n. On that set c1, c2, c6 are honest permutations and the
# group they generate can be closed by brute force.


@dataclass(frozen=True)
class PresentationEntry:
    n: int
    order: int
    relations: dict[str, bool]
    c3_matches: bool

    @property
    def ok(self) -> bool:
        return all(self.relations.values()) and self.c3_matches


@dataclass(frozen=True)
class PresentationReport:
    entries: tuple[PresentationEntry, ...]

    @property
    def passed(self) -> bool:
        return (
            all(e.ok and 16 % e.order == 0 for e in self.entries)
            and any(e.order == 16 for e in self.entries)
        )

    def failure_detail(self) -> str | None:
        for e in self.entries:
            for name, ok in e.relations.items():
                if not ok:
                    return f"n={e.n}: relation {name} fails"
            if not e.c3_matches:
                return f"n={e.n}: c3 != (c2 c6)^2"
            if 16 % e.order != 0:
                return f"n={e.n}: group order {e.order} does not divide 16"
        if not any(e.order == 16 for e in self.entries):
            return "no sampled n realizes the full order-16 group"
        return None


def _presentation_domain(n: int) -> list[tuple[int, int, int]]:
    m = 2 * n
    return [
        (a, b, r)
        for a in range(m)
        if math.gcd(a, m) == 1
        for b in range(n)
        for r in range(m)
    ]


def _perm_from_map(domain, index, fn) -> tuple[int, ...]:
    return tuple(index[fn(p)] for p in domain)


def _compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Apply p first, then q."""
    return tuple(q[i] for i in p)


def _closure(generators: list[tuple[int, ...]], identity: tuple[int, ...]) -> set:
    group = {identity}
    frontier = [identity]
    while frontier:
        cur = frontier.pop()
        for g in generators:
            nxt = _compose(cur, g)
            if nxt not in group:
                group.add(nxt)
                frontier.append(nxt)
    return group


def verify_group_presentation(sample_n: list[int]) -> PresentationReport:
    """Check, for each sampled odd n >= 3, that the permutations induced by
    the first, second, and sixth moves generate a group of order 16 with the
    dihedral-type relations, and that the third move equals (c2 c6)^2."""
    entries = []
    for n in sample_n:
        if n < 3 or n % 2 == 0:
            raise ValueError(f"sample n must be odd and >= 3; got {n}")
        m = 2 * n
        domain = _presentation_domain(n)
        index = {p: i for i, p in enumerate(domain)}
        c1 = _perm_from_map(domain, index, lambda p: ((-p[0]) % m, (-p[1]) % n, p[2]))
        c2 = _perm_from_map(
            domain, index, lambda p: ((-p[0]) % m, (p[1] - p[2] * p[0]) % n, p[2])
        )
        c6 = _perm_from_map(
            domain, index, lambda p: (p[0], p[1], _c6_unique(p[0], p[1], p[2], n))
        )
        c3 = _perm_from_map(domain, index, lambda p: (p[0], (-p[1]) % n, (-p[2]) % m))
        identity = tuple(range(len(domain)))

        def power(perm, k):
            out = identity
            for _ in range(k):
                out = _compose(out, perm)
            return out

        relations = {
            "c1^2": power(c1, 2) == identity,
            "c2^2": power(c2, 2) == identity,
            "c6^2": power(c6, 2) == identity,
            "(c1c2)^2": power(_compose(c1, c2), 2) == identity,
            "(c1c6)^2": power(_compose(c1, c6), 2) == identity,
            "(c2c6)^4": power(_compose(c2, c6), 4) == identity,
        }
        entries.append(
            PresentationEntry(
                n=n,
                order=len(_closure([c1, c2, c6], identity)),
                relations=relations,
                c3_matches=power(_compose(c2, c6), 2) == c3,
            )
        )
    return PresentationReport(tuple(entries))
