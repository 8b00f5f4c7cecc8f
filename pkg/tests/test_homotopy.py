import math

import pytest

from ruledcent.actions import (
    CyclicAction,
    SurfaceKind,
    is_hamiltonian_torus,
    make_action,
    make_form,
    same_cyclic_subgroup,
)
from ruledcent.classify import ClassKind, classify
from ruledcent.errors import NotHamiltonian, UnresolvedClass
from ruledcent.homotopy import (
    HomotopyType,
    HtKind,
    WeylGroup,
    centralizer_type,
    poincare_coeffs,
    weyl_group,
)
from ruledcent.strata import stratification

TRIVIAL = SurfaceKind.TRIVIAL
NON_TRIVIAL = SurfaceKind.NON_TRIVIAL


def typed(surface, lam, n, a, b, r):
    form = make_form(surface, lam)
    act = make_action(surface, n, a, b, r)
    cls = classify(form, act)
    return centralizer_type(cls, act, form), cls, act, form


class TestCentralizerTable:
    def test_half_turn_family_gets_extra_component(self):
        ht, *_ = typed(TRIVIAL, 3, 4, 2, 1, 2)
        assert ht.kind is HtKind.TORUS2_Z2

    def test_rotation_on_one_factor_only(self):
        ht, *_ = typed(TRIVIAL, 3, 5, 0, 1, 2)
        assert ht.kind is HtKind.S1_SO3
        ht, *_ = typed(NON_TRIVIAL, "5/2", 5, 0, 1, 3)
        assert ht.kind is HtKind.U2

    def test_two_extension_pushout_data(self):
        ht, cls, act, form = typed(TRIVIAL, 3, 8, 1, 3, 2)
        assert ht.kind is HtKind.OMEGA_S3_T3
        assert ht.pushout.r == 2 and ht.pushout.r_prime == 4
        assert ht.pushout.circle_in_r == (1, 3)
        assert ht.pushout.circle_in_r_prime == (1, 3)

    def test_pushout_circles_agree_up_to_inversion(self):
        # the second-torus circle parameter is either b or n-b
        for lam in ("2", "5/2", "3", "7/2"):
            form = make_form(TRIVIAL, lam)
            for n in range(3, 15):
                for b in range(n):
                    for r in (2, 4):
                        if not is_hamiltonian_torus(form, r):
                            continue
                        if math.gcd(1, b, n) != 1:
                            continue
                        act = CyclicAction(TRIVIAL, n, 1, b, r)
                        cls = classify(form, act)
                        if cls.kind is not ClassKind.H2:
                            continue
                        ht = centralizer_type(cls, act, form)
                        b1 = ht.pushout.circle_in_r[1]
                        b2 = ht.pushout.circle_in_r_prime[1]
                        assert b2 % n in {b1 % n, (-b1) % n}
                        assert same_cyclic_subgroup(n, (1, b1), (1, b2)) or same_cyclic_subgroup(
                            n, (1, b1), (1, -b2)
                        )

    def test_product_action_components(self):
        ht, *_ = typed(TRIVIAL, 1, 2, 1, 1, 0)
        assert ht.kind is HtKind.TORUS2_Z8
        ht, *_ = typed(TRIVIAL, 1, 2, 1, 0, 0)
        assert ht.kind is HtKind.S1_SO3_Z2

    def test_z1_special_pairs(self):
        ht, *_ = typed(TRIVIAL, 1, 5, 1, 1, 0)
        assert ht.kind is HtKind.TORUS2_Z2
        ht, *_ = typed(TRIVIAL, 1, 5, 1, 4, 0)
        assert ht.kind is HtKind.TORUS2_Z2
        ht, *_ = typed(TRIVIAL, 1, 5, 4, 1, 0)
        assert ht.kind is HtKind.TORUS2_Z2
        ht, *_ = typed(TRIVIAL, 1, 5, 1, 2, 0)
        assert ht.kind is HtKind.TORUS2

    def test_z2_branches(self):
        ht, *_ = typed(TRIVIAL, 1, 4, 2, 1, 0)
        assert ht.kind is HtKind.TORUS2_Z2
        ht, *_ = typed(TRIVIAL, 1, 3, 0, 1, 0)
        assert ht.kind is HtKind.S1_SO3_Z2

    def test_z0_branches(self):
        ht, *_ = typed(TRIVIAL, 2, 4, 0, 1, 0)
        assert ht.kind is HtKind.S1_SO3_Z2
        ht, *_ = typed(TRIVIAL, 2, 9, 3, 1, 0)
        assert ht.kind is HtKind.TORUS2
        ht, *_ = typed(TRIVIAL, 2, 6, 3, 1, 0)
        assert ht.kind is HtKind.TORUS2_Z2

    def test_single_extension_families_are_tori(self):
        for args in [(TRIVIAL, 3, 7, 1, 5, 2), (TRIVIAL, 3, 8, 1, 0, 2), (NON_TRIVIAL, "5/2", 8, 1, 0, 3)]:
            ht, *_ = typed(*args)
            assert ht.kind is HtKind.TORUS2

    def test_unresolved_rejected(self):
        form = make_form(TRIVIAL, 2)
        act = make_action(TRIVIAL, 3, 2, 1, 0)
        with pytest.raises(UnresolvedClass):
            centralizer_type(classify(form, act), act, form)

    def test_two_strata_iff_loop_space_type(self):
        for lam in ("2", "5/2", "3"):
            form = make_form(TRIVIAL, lam)
            for n in range(2, 13):
                for a in range(n):
                    for b in range(n):
                        if math.gcd(a, b, n) != 1:
                            continue
                        act = CyclicAction(TRIVIAL, n, a, b, 2)
                        if not is_hamiltonian_torus(form, 2):
                            continue
                        cls = classify(form, act)
                        if cls.kind is ClassKind.UNRESOLVED:
                            continue
                        ht = centralizer_type(cls, act, form)
                        strata = stratification(form, act, cls)
                        assert (ht.kind is HtKind.OMEGA_S3_T3) == (len(strata) == 2)


class TestPoincare:
    def test_loop_space_series(self):
        ht, *_ = typed(TRIVIAL, 3, 8, 1, 3, 2)
        assert poincare_coeffs(ht, 4) == [1, 3, 4, 4, 4]

    def test_torus_binomials(self):
        assert poincare_coeffs(HomotopyType(HtKind.TORUS2), 3) == [1, 2, 1, 0]

    def test_component_multiplication(self):
        assert poincare_coeffs(HomotopyType(HtKind.TORUS2_Z8), 2) == [8, 16, 8]
        assert poincare_coeffs(HomotopyType(HtKind.TORUS2_Z2), 3) == [2, 4, 2, 0]

    def test_rank_one_circle_times_three_sphere(self):
        assert poincare_coeffs(HomotopyType(HtKind.S1_SO3), 6) == [1, 1, 0, 1, 1, 0, 0]
        assert poincare_coeffs(HomotopyType(HtKind.U2), 6) == [1, 1, 0, 1, 1, 0, 0]
        assert poincare_coeffs(HomotopyType(HtKind.S1_SO3_Z2), 4) == [2, 2, 0, 2, 2]

    def test_recurrence(self):
        ht, *_ = typed(TRIVIAL, 3, 8, 1, 3, 2)
        coeffs = poincare_coeffs(ht, 12)
        assert coeffs[0] == 1 and coeffs[1] == 3
        assert all(c == 4 for c in coeffs[2:])


class TestWeylGroup:
    def test_square_symmetries_only_on_equal_factors(self):
        assert weyl_group(make_form(TRIVIAL, 1), 0) is WeylGroup.D4
        assert weyl_group(make_form(TRIVIAL, 2), 0) is WeylGroup.D2
        assert weyl_group(make_form(TRIVIAL, 3), 4) is WeylGroup.D1
        assert weyl_group(make_form(NON_TRIVIAL, 3), 1) is WeylGroup.D1

    def test_requires_existing_torus(self):
        with pytest.raises(NotHamiltonian):
            weyl_group(make_form(TRIVIAL, 1), 2)
