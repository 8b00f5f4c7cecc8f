import math
from fractions import Fraction

import pytest

from ruledcent.actions import (
    SurfaceKind,
    is_hamiltonian_torus,
    make_action,
    make_form,
)
from ruledcent.errors import NotHamiltonian, OutOfRegime
from ruledcent.extensions import (
    Completeness,
    Provenance,
    circle_toric_extensions,
    cyclic_extensions_via_circle_chain,
    cyclic_toric_extensions,
)

TRIVIAL = SurfaceKind.TRIVIAL
NON_TRIVIAL = SurfaceKind.NON_TRIVIAL


class TestCircleExtensions:
    def test_non_unit_exponent_gives_single_torus(self):
        exts = circle_toric_extensions(make_form(TRIVIAL, 3), 2, 1, 2)
        assert exts.r_values == (2,)
        assert exts.completeness is Completeness.COMPLETE

    def test_second_torus_with_circle_data(self):
        exts = circle_toric_extensions(make_form(TRIVIAL, 3), 1, 3, 2)
        assert exts.r_values == (2, 4)
        second = exts.extensions[1]
        assert (second.r_prime, second.circle_b) == (4, 3)

    def test_b_zero_gives_single_torus(self):
        exts = circle_toric_extensions(make_form(TRIVIAL, 3), 1, 0, 2)
        assert exts.r_values == (2,)

    def test_boundary_of_symplectic_range_is_outside(self):
        # |2b - r| = 6 = 2 lambda: no second torus
        exts = circle_toric_extensions(make_form(TRIVIAL, 3), 1, 4, 2)
        assert exts.r_values == (2,)

    def test_negative_b_uses_minus_b_embedding(self):
        exts = circle_toric_extensions(make_form(TRIVIAL, 3), 1, -1, 2)
        assert exts.r_values == (2, 4)
        assert exts.extensions[1].circle_b == 1

    def test_minus_one_exponent_normalized_by_flip(self):
        lhs = circle_toric_extensions(make_form(TRIVIAL, 3), -1, 1, 2)
        rhs = circle_toric_extensions(make_form(TRIVIAL, 3), 1, 3, 2)
        assert lhs.r_values == rhs.r_values

    def test_odd_index_shifted_range(self):
        # |2b - r| + 1 = 4 vs 2 lambda = 5: extends
        exts = circle_toric_extensions(make_form(NON_TRIVIAL, "5/2"), 1, 2, 1)
        assert exts.r_values == (1, 3)
        # |2b - r| + 1 = 6 vs 2 lambda = 5: does not
        exts = circle_toric_extensions(make_form(NON_TRIVIAL, "5/2"), 1, 3, 1)
        assert exts.r_values == (1,)

    def test_not_hamiltonian(self):
        with pytest.raises(NotHamiltonian):
            circle_toric_extensions(make_form(TRIVIAL, 3), 1, 1, 8)


class TestCyclicExtensions:
    def test_non_unit_case_any_lambda(self):
        for lam in ("3/2", "2", "5/2", "3", "7/2"):
            exts = cyclic_toric_extensions(
                make_form(TRIVIAL, lam), make_action(TRIVIAL, 6, 2, 1, 2)
            )
            assert exts.r_values == (2,)
            assert exts.completeness is Completeness.COMPLETE

    def test_two_extensions_via_2b_minus_r(self):
        exts = cyclic_toric_extensions(
            make_form(TRIVIAL, 3), make_action(TRIVIAL, 8, 1, 3, 2)
        )
        assert exts.r_values == (2, 4)
        assert exts.extensions[1].circle_b == 3
        assert exts.extensions[1].provenance is Provenance.VIA_2B_MINUS_R

    def test_two_extensions_via_plus_2n(self):
        exts = cyclic_toric_extensions(
            make_form(TRIVIAL, "7/2"), make_action(TRIVIAL, 8, 1, 6, 2)
        )
        assert exts.r_values == (2, 6)
        assert exts.extensions[1].circle_b == 2
        assert exts.extensions[1].provenance is Provenance.VIA_PLUS_2N

    def test_two_extensions_via_r_minus_2b_uses_complement(self):
        exts = cyclic_toric_extensions(
            make_form(TRIVIAL, "5/2"), make_action(TRIVIAL, 9, 1, 1, 4)
        )
        assert exts.r_values == (2, 4)
        second = [e for e in exts.extensions if e.provenance is not Provenance.SAME_TORUS][0]
        assert second.r_prime == 2
        assert second.circle_b == 8

    def test_b_in_zero_r_keeps_single(self):
        exts = cyclic_toric_extensions(
            make_form(TRIVIAL, 3), make_action(TRIVIAL, 8, 1, 0, 2)
        )
        assert exts.r_values == (2,)

    def test_out_of_regime_codes(self):
        with pytest.raises(OutOfRegime) as err:
            cyclic_toric_extensions(make_form(TRIVIAL, 3), make_action(TRIVIAL, 5, 1, 2, 2))
        assert err.value.code == "n-below-2lambda"
        with pytest.raises(OutOfRegime) as err:
            cyclic_toric_extensions(make_form(TRIVIAL, 3), make_action(TRIVIAL, 8, 1, 1, 2))
        assert err.value.code == "second-torus-index-zero"
        with pytest.raises(OutOfRegime) as err:
            cyclic_toric_extensions(make_form(TRIVIAL, 2), make_action(TRIVIAL, 7, 1, 2, 0))
        assert err.value.code == "r-zero-unit"
        with pytest.raises(OutOfRegime) as err:
            cyclic_toric_extensions(make_form(TRIVIAL, 3), make_action(TRIVIAL, 6, 1, 1, 4))
        assert err.value.code == "boundary-two-extensions"

    def test_boundary_without_candidate_is_complete(self):
        exts = cyclic_toric_extensions(
            make_form(TRIVIAL, 3), make_action(TRIVIAL, 6, 1, 0, 2)
        )
        assert exts.r_values == (2,)

    def test_every_returned_index_is_hamiltonian(self):
        for lam in (Fraction(2), Fraction(5, 2), Fraction(3), Fraction(7, 2)):
            form = make_form(TRIVIAL, lam)
            for n in range(2, 20):
                for b in range(n):
                    for r in range(2, 8, 2):
                        if not is_hamiltonian_torus(form, r):
                            continue
                        try:
                            exts = cyclic_toric_extensions(
                                form, make_action(TRIVIAL, n, 1, b, r)
                            )
                        except OutOfRegime:
                            continue
                        for v in exts.r_values:
                            assert is_hamiltonian_torus(form, v)

    def test_at_most_one_candidate_in_range(self):
        # exhaustive over a lambda grid: of 2b-r, r-2b, r-2b+2n at most one
        # is a Hamiltonian index distinct from r, given n >= 2 lambda
        lams = [Fraction(p, q) for q in (1, 2, 4) for p in range(q, 12 * q)]
        for n in range(2, 41):
            for lam in lams:
                if lam < 1 or n < 2 * lam:
                    continue
                form = make_form(TRIVIAL, lam)
                for b in range(n):
                    for r in (2, 4, 6, 8):
                        if r >= 2 * lam:
                            continue
                        candidates = [2 * b - r, r - 2 * b, r - 2 * b + 2 * n]
                        hits = [
                            v
                            for v in candidates
                            if v > 0 and v != r and v % 2 == 0 and form.lam > v // 2
                        ]
                        assert len(hits) <= 1


class TestCircleChain:
    def test_reaches_all_same_parity_tori(self):
        form = make_form(TRIVIAL, "7/2")
        exts = cyclic_extensions_via_circle_chain(form, make_action(TRIVIAL, 2, 1, 1, 2))
        assert exts.r_values == (0, 2, 4, 6)
        assert exts.completeness is Completeness.LOWER_BOUND

    def test_non_unit_blocks_all_moves(self):
        form = make_form(TRIVIAL, "7/2")
        exts = cyclic_extensions_via_circle_chain(form, make_action(TRIVIAL, 6, 2, 1, 2))
        assert exts.r_values == (2,)

    def test_contains_multiples_of_2n(self):
        form = make_form(TRIVIAL, 10)
        exts = cyclic_extensions_via_circle_chain(form, make_action(TRIVIAL, 3, 1, 1, 2))
        expected = {2 * k * 3 for k in range(1, 4) if 2 * (1 + 3 * k) - 2 < 20}
        assert expected <= set(exts.r_values)

    def test_chain_contains_complete_answer(self):
        for lam in ("5/2", "3", "7/2"):
            form = make_form(TRIVIAL, lam)
            for n in range(2, 14):
                for a in range(n):
                    for b in range(n):
                        if math.gcd(a, b, n) != 1:
                            continue
                        act = make_action(TRIVIAL, n, a, b, 2)
                        try:
                            complete = cyclic_toric_extensions(form, act)
                        except OutOfRegime:
                            continue
                        chain = cyclic_extensions_via_circle_chain(form, act)
                        assert set(complete.r_values) <= set(chain.r_values)

    def test_circle_and_cyclic_agree_when_second_index_is_small(self):
        # when the cyclic answer comes from 2b-r or r-2b, the underlying
        # circle has the same extension pair
        for lam in ("5/2", "3", "7/2"):
            form = make_form(TRIVIAL, lam)
            for n in range(2, 16):
                for b in range(n):
                    for r in (2, 4):
                        try:
                            act = make_action(TRIVIAL, n, 1, b, r)
                            cyc = cyclic_toric_extensions(form, act)
                        except (OutOfRegime, NotHamiltonian):
                            continue
                        if len(cyc) != 2:
                            continue
                        second = cyc.extensions[1] if cyc.extensions[0].r_prime == r else cyc.extensions[0]
                        if second.provenance is Provenance.VIA_PLUS_2N:
                            continue
                        circ = circle_toric_extensions(form, 1, b, r)
                        assert set(circ.r_values) == set(cyc.r_values)
