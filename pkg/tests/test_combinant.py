"""Pencil and combinant contracts: invariance, Wronskian, membership defect."""
import random
from fractions import Fraction

import pytest

from pencils import (
    BinaryForm,
    DegeneratePencilError,
    DegreeMismatchError,
    Pencil,
    combinant_sequence,
    membership_defect,
    random_form,
    random_pencil,
    transvectant,
    wronskian,
)

from helpers import coefficient_rank


def test_cubic_powers_example():
    a = BinaryForm.monomial(3, 0)  # x1^3
    b = BinaryForm.monomial(3, 3)  # x2^3
    seq = combinant_sequence(Pencil(a, b))
    assert seq.c(1) == BinaryForm.monomial(4, 2)  # x1^2 x2^2
    assert seq.c(2) == BinaryForm(0, [1])


def test_dependent_forms_rejected():
    a = random_form(4, 1)
    with pytest.raises(DegeneratePencilError):
        Pencil(a, 3 * a)


def test_order_mismatch_rejected():
    with pytest.raises(DegreeMismatchError):
        Pencil(random_form(3, 1), random_form(4, 1))


def test_combinant_orders_at_degree_seven():
    seq = combinant_sequence(random_pencil(7, 2))
    assert [c.order for c in seq] == [12, 8, 4, 0]


def test_invariance_under_pencil_change_of_basis():
    pencil = random_pencil(6, 4)
    rng = random.Random(17)
    for _ in range(5):
        a, b, c, d = (Fraction(rng.randint(-5, 5)) for _ in range(4))
        det = a * d - b * c
        if not det:
            continue
        new_a = a * pencil.a + b * pencil.b
        new_b = c * pencil.a + d * pencil.b
        for r in range(1, pencil.max_combinant_index() + 1):
            q = 2 * r - 1
            assert transvectant(new_a, new_b, q) == det * pencil.combinant(r)


def test_swapping_members_negates_every_combinant():
    pencil = random_pencil(7, 5)
    swapped = Pencil(pencil.b, pencil.a)
    for r in range(1, pencil.max_combinant_index() + 1):
        assert swapped.combinant(r) == -1 * pencil.combinant(r)


class TestWronskian:
    def test_member_rows_vanish(self):
        pencil = random_pencil(5, 6)
        assert wronskian(pencil, pencil.a).is_zero()
        combo = 3 * pencil.a - 5 * pencil.b
        assert wronskian(pencil, combo).is_zero()

    def test_outside_forms_detected(self):
        pencil = random_pencil(5, 7)
        found = 0
        for seed in range(10):
            f = random_form(5, 300 + seed)
            if coefficient_rank([pencil.a, pencil.b, f]) == 3:
                assert not wronskian(pencil, f).is_zero()
                found += 1
        assert found >= 8

    def test_order_checks(self):
        pencil = random_pencil(5, 8)
        w = wronskian(pencil, random_form(5, 9))
        assert w.order == 3 * (5 - 2)
        with pytest.raises(DegreeMismatchError):
            wronskian(pencil, random_form(4, 9))


class TestMembershipDefect:
    def test_members_vanish(self):
        pencil = random_pencil(7, 10)
        assert membership_defect(pencil, pencil.a).is_zero()
        rng = random.Random(3)
        for _ in range(10):
            a, b = Fraction(rng.randint(-7, 7)), Fraction(rng.randint(-7, 7))
            if not a and not b:
                continue
            assert membership_defect(pencil, a * pencil.a + b * pencil.b).is_zero()

    def test_non_members_detected(self):
        pencil = random_pencil(5, 11)
        for seed in range(10):
            f = random_form(5, 400 + seed)
            if coefficient_rank([pencil.a, pencil.b, f]) == 3:
                assert not membership_defect(pencil, f).is_zero()

    def test_verdict_matches_wronskian(self):
        for d in (4, 5, 7):
            pencil = random_pencil(d, 12)
            for seed in range(15):
                f = random_form(d, 500 + seed)
                assert wronskian(pencil, f).is_zero() == membership_defect(pencil, f).is_zero()

    def test_needs_order_three(self):
        pencil = random_pencil(2, 13)
        with pytest.raises(ValueError):
            membership_defect(pencil, random_form(2, 1))

    def test_output_order(self):
        pencil = random_pencil(6, 14)
        assert membership_defect(pencil, random_form(6, 2)).order == 3 * 6 - 6


def test_random_pencil_deterministic_and_valid():
    p1 = random_pencil(7, 42)
    p2 = random_pencil(7, 42)
    assert p1.a == p2.a and p1.b == p2.b
    assert not transvectant(p1.a, p1.b, 1).is_zero()
