"""Self-verification suite: structural checks that the move group, orbits,
codimension counts, rank coefficients, and fixture classifications all agree
with their independent derivations."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from . import moves, strata
from .actions import SurfaceKind, make_action, make_form
from .classify import classify
from .homotopy import (
    HomotopyType,
    HtKind,
    PushoutPresentation,
    centralizer_type,
    poincare_coeffs,
)

DEFAULT_PRESENTATION_SAMPLES = (5, 7, 9, 11)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def check_group_presentation(sample_n=DEFAULT_PRESENTATION_SAMPLES) -> CheckResult:
    report = moves.verify_group_presentation(list(sample_n))
    orders = ", ".join(f"n={e.n}: order {e.order}" for e in report.entries)
    if report.passed:
        return CheckResult("move-group-presentation", True, orders)
    return CheckResult("move-group-presentation", False, report.failure_detail() or orders)


def check_orbit_r_values(n_max: int = 12) -> CheckResult:
    """Exhaustive: orbits of a = +/-1 triples stay inside the four predicted
    index classes and never exceed 16 elements."""
    count = 0
    for n in range(2, n_max + 1):
        m = 2 * n
        for a in sorted({1, (n - 1) % n}):
            sign = 1 if a == 1 else -1
            for b in range(n):
                for r in range(1, m):
                    if (2 * b - sign * r) % m == 0:
                        continue
                    t = moves.make_triple(n, a, b, r)
                    allowed = moves.lemma_r_values(t)
                    orb = moves.orbit(t)
                    count += 1
                    if len(orb) > 16:
                        return CheckResult(
                            "orbit-index-classes", False, f"orbit of {t} has {len(orb)} > 16 elements"
                        )
                    bad = {u.r % m for u in orb} - allowed
                    if bad:
                        return CheckResult(
                            "orbit-index-classes",
                            False,
                            f"orbit of {t} reaches indices {sorted(bad)} outside {sorted(allowed)}",
                        )
    return CheckResult("orbit-index-classes", True, f"{count} orbits checked, all within bounds")


def check_codim_oracles(n_max: int = 40, k_max: int = 10) -> CheckResult:
    """Exact agreement of the direct index count with both eigenbasis counts."""
    checked = 0
    for n in range(2, n_max + 1):
        for k in range(1, k_max + 1):
            for b in range(n):
                even = strata.codim_oracle_even(n, b, k)
                direct_even = strata.stratum_codim(n, b, 2 * k)
                if even != direct_even:
                    return CheckResult(
                        "codimension-oracles",
                        False,
                        f"even count mismatch at (n={n}, b={b}, k={k}): {even} != {direct_even}",
                    )
                odd = strata.codim_oracle_odd(n, b, k)
                direct_odd = strata.stratum_codim(n, b, 2 * k + 1)
                if odd != direct_odd:
                    return CheckResult(
                        "codimension-oracles",
                        False,
                        f"odd count mismatch at (n={n}, b={b}, k={k}): {odd} != {direct_odd}",
                    )
                checked += 2
    return CheckResult("codimension-oracles", True, f"{checked} comparisons, all equal")


def check_poincare() -> CheckResult:
    # representative pushout; the ranks do not depend on its data
    two_strata = HomotopyType(HtKind.OMEGA_S3_T3, PushoutPresentation(2, 4, (1, 3), (1, 3)))
    coeffs = poincare_coeffs(two_strata, 10)
    expected = [1, 3] + [4] * 9
    if coeffs != expected:
        return CheckResult("rank-coefficients", False, f"{coeffs} != {expected}")
    # generating-function identity: sum c_p t^p = (1+t)^2/(1-t) truncated,
    # i.e. (1-t) * series = (1+t)^2 up to degree 10
    diff = [coeffs[0]] + [coeffs[p] - coeffs[p - 1] for p in range(1, 11)]
    if diff != [1, 2, 1] + [0] * 8:
        return CheckResult("rank-coefficients", False, f"(1-t)*series = {diff}")
    torus = poincare_coeffs(HomotopyType(HtKind.TORUS2), 3)
    if torus != [1, 2, 1, 0]:
        return CheckResult("rank-coefficients", False, f"torus ranks {torus}")
    return CheckResult("rank-coefficients", True, "series (1+t)^3/(1-t^2) reproduced to degree 10")


def load_fixtures() -> list[dict]:
    text = resources.files("ruledcent").joinpath("data/table_fixtures.json").read_text("utf-8")
    return json.loads(text)


def check_fixtures() -> CheckResult:
    fixtures = load_fixtures()
    if len(fixtures) < 14:
        return CheckResult("table-fixtures", False, f"only {len(fixtures)} fixtures")
    for fx in fixtures:
        surface = SurfaceKind(fx["surface"])
        form = make_form(surface, fx["lambda"])
        action = make_action(surface, fx["n"], fx["a"], fx["b"], fx["r"])
        cls = classify(form, action)
        label = str(cls)
        if label != fx["class"]:
            return CheckResult(
                "table-fixtures", False, f"{action} at lambda={fx['lambda']}: {label} != {fx['class']}"
            )
        ht = centralizer_type(cls, action, form)
        if ht.kind.value != fx["centralizer"] or ht.components != fx["components"]:
            return CheckResult(
                "table-fixtures",
                False,
                f"{action}: centralizer {ht.kind.value}/{ht.components} != "
                f"{fx['centralizer']}/{fx['components']}",
            )
    return CheckResult("table-fixtures", True, f"{len(fixtures)} fixtures match their table rows")


def run_all(sample_n=DEFAULT_PRESENTATION_SAMPLES) -> list[CheckResult]:
    return [
        check_group_presentation(sample_n),
        check_orbit_r_values(),
        check_codim_oracles(),
        check_poincare(),
        check_fixtures(),
    ]
