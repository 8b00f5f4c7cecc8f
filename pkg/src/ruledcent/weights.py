"""Isotropy weights at the four toric fixed points and the constraint they
satisfy along invariant spheres."""

from __future__ import annotations

from dataclasses import dataclass

from .actions import CyclicAction

FIXED_POINTS = ("P", "Q", "R", "S")


@dataclass(frozen=True)
class WeightTable:
    """Unordered weight pairs (as sorted residue tuples mod n) at P, Q, R, S."""

    n: int
    at_P: tuple[int, int]
    at_Q: tuple[int, int]
    at_R: tuple[int, int]
    at_S: tuple[int, int]

    def at(self, point: str) -> tuple[int, int]:
        return getattr(self, f"at_{point}")

    def as_dict(self) -> dict[str, list[int]]:
        return {p: list(self.at(p)) for p in FIXED_POINTS}


def _pair(x: int, y: int, n: int) -> tuple[int, int]:
    return tuple(sorted((x % n, y % n)))  # type: ignore[return-value]


def fixed_point_weights(action: CyclicAction) -> WeightTable:
    """Weights of the action at the four fixed points of its defining torus:
    P {a, b}, Q {a, -b}, R {-a, ar-b}, S {-a, -ar+b}, all mod n."""
    n, a, b, r = action.n, action.a, action.b, action.r
    return WeightTable(
        n=n,
        at_P=_pair(a, b, n),
        at_Q=_pair(a, -b, n),
        at_R=_pair(-a, a * r - b, n),
        at_S=_pair(-a, -a * r + b, n),
    )


def other_end_weights(p: int, q: int, r: int, n: int) -> tuple[int, int]:
    """Ordered (tangent, normal) weights at the far fixed point of an
    invariant sphere of self-intersection -r whose near end has ordered
    weights (p, q): the far end carries (-p, pr + q) mod n."""
    return ((-p) % n, (p * r + q) % n)


def check_edge_constraint(alpha: int, beta: int, k: int, e: int, n: int) -> bool:
    """Whether fiber weights alpha, beta over the two poles of an invariant
    sphere with base rotation weight k and self-intersection e can coexist:
    alpha - beta = +/- e k (mod n)."""
    d = (alpha - beta) % n
    return d == (e * k) % n or d == (-e * k) % n


def unique_weight_points(action: CyclicAction) -> frozenset[str]:
    """Fixed points whose weight pair differs from the pairs at all three
    other fixed points (such points are preserved by every equivariant map)."""
    table = fixed_point_weights(action)
    pairs = [table.at(p) for p in FIXED_POINTS]
    out = set()
    for i, p in enumerate(FIXED_POINTS):
        if all(pairs[i] != pairs[j] for j in range(4) if j != i):
            out.add(p)
    return frozenset(out)
