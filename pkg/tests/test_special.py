"""Closed forms: quadratics, degrees near n, symmetric functions."""

import itertools
import random

import pytest

import oracles
from degstab import ANF, deg_stab
from degstab.anf import NEG_INF
from degstab.degreedrop import enumerate_degree_drop
from degstab.errors import NotQuadraticError, NotSymmetricError
from degstab.special import (
    DropAmount,
    canonical_quadratic,
    elementary_symmetric,
    high_degree_facts,
    majority,
    quadratic_coefficient_matrix,
    quadratic_deg_stab,
    quadratic_t,
    symmetric_dd,
    symmetric_drop_amount,
    symmetric_from_weights,
)
from helpers import random_degree


def hyperplane_count(f):
    return sum(1 for _ in enumerate_degree_drop(f, 1))


# -- quadratics ------------------------------------------------------------------


def test_quadratic_matrix_shape():
    f = ANF.parse("12+23+14", 4)
    b = quadratic_coefficient_matrix(f)
    assert b.rows == (0b1010, 0b0101, 0b0010, 0b0001)
    assert b.rank() == 4


def test_quadratic_matrix_ignores_affine_part():
    f = ANF.parse("12+3+1", 4)
    g = ANF.parse("12", 4)
    assert quadratic_coefficient_matrix(f).rows == quadratic_coefficient_matrix(g).rows


def test_quadratic_t_canonical():
    for n in (4, 6, 8):
        for t in range(1, n // 2 + 1):
            assert quadratic_t(canonical_quadratic(t, n)) == t


def test_quadratic_deg_stab_exhaustive():
    # every nonzero quadratic top part at n = 4 and 5 against the scan engine
    for n in (4, 5):
        pairs = [m for m in range(1 << n) if bin(m).count("1") == 2]
        for bits in range(1, 1 << len(pairs)):
            monos = [pairs[i] for i in range(len(pairs)) if bits >> i & 1]
            f = ANF.from_monomials(n, monos)
            assert quadratic_deg_stab(f) == deg_stab(f)


def test_quadratic_deg_stab_ignores_affine_part():
    rng = random.Random(11)
    for _ in range(30):
        f = random_degree(rng, 6, 2)
        top = f.top_part()
        assert quadratic_deg_stab(f) == quadratic_deg_stab(top) == deg_stab(f)


def test_canonical_quadratic_rejects():
    with pytest.raises(ValueError):
        canonical_quadratic(0, 4)
    with pytest.raises(ValueError):
        canonical_quadratic(3, 5)


def test_quadratic_rejects_other_degrees():
    with pytest.raises(NotQuadraticError):
        quadratic_coefficient_matrix(ANF.parse("123", 4))
    with pytest.raises(NotQuadraticError):
        quadratic_t(ANF.parse("1+2", 4))


# -- degrees n, n-1, n-2 -----------------------------------------------------------


def test_high_degree_full():
    rng = random.Random(21)
    for n in (4, 5, 6):
        facts = high_degree_facts(n, n)
        assert (facts.deg_stab, facts.k1_empty) == (0, True)
        assert facts.dd_hyperplane_count == (1 << n) - 1
        for _ in range(10):
            f = random_degree(rng, n, n)
            assert hyperplane_count(f) == facts.dd_hyperplane_count
            assert deg_stab(f) == 0


def test_high_degree_n_minus_1():
    rng = random.Random(22)
    for n in (5, 6, 7):
        facts = high_degree_facts(n - 1, n)
        assert (facts.deg_stab, facts.k1_empty) == (0, True)
        assert facts.dd_hyperplane_count == (1 << (n - 1)) - 1
        for _ in range(10):
            f = random_degree(rng, n, n - 1)
            assert hyperplane_count(f) == facts.dd_hyperplane_count
            assert deg_stab(f) == 0


def test_high_degree_n_minus_2_odd():
    facts = high_degree_facts(5, 7)
    assert (facts.deg_stab, facts.k1_empty) == (0, True)
    assert facts.dd_hyperplane_count is None
    rng = random.Random(23)
    for _ in range(10):
        f = random_degree(rng, 7, 5)
        assert deg_stab(f) == 0


def test_high_degree_n_minus_2_even():
    facts = high_degree_facts(4, 6)
    assert (facts.deg_stab, facts.k1_empty) == (1, False)
    assert facts.dd_hyperplane_count is None
    # the bound is attained by the complement of a full-rank quadratic
    g = canonical_quadratic(3, 6).complement()
    assert deg_stab(g) == 1
    rng = random.Random(24)
    assert all(deg_stab(random_degree(rng, 6, 4)) <= 1 for _ in range(15))


def test_high_degree_rejects_low_degrees():
    with pytest.raises(ValueError):
        high_degree_facts(3, 7)


# -- symmetric functions --------------------------------------------------------------


def test_symmetric_from_weights():
    f = symmetric_from_weights(4, [0, 1, 0, 1, 0])
    tt = oracles.truth_table(4, f.monomials())
    for x in range(16):
        assert tt[x] == bin(x).count("1") % 2
    assert f.is_symmetric()
    with pytest.raises(ValueError):
        symmetric_from_weights(4, [0, 1])


def test_elementary_symmetric():
    e = elementary_symmetric(5, 3)
    assert set(e.monomials()) == {m for m in range(32) if bin(m).count("1") == 3}
    assert e.degree() == 3 and e.is_symmetric()
    assert elementary_symmetric(4, 0).monomials() == (0,)
    with pytest.raises(ValueError):
        elementary_symmetric(4, 5)


def test_majority_definition_and_degree():
    for n in range(3, 11):
        m = majority(n)
        tt = oracles.truth_table(n, m.monomials())
        for x in range(1 << n):
            assert tt[x] == (1 if bin(x).count("1") > n / 2 else 0)
        assert m.degree() == 1 << (n.bit_length() - 1)


def test_majority_hyperplanes():
    # drops on some hyperplane only when n or n-1 is a power of two
    expected = {4: 15, 5: 15, 6: 0, 7: 0, 8: 255, 9: 255, 10: 0}
    for n, count in expected.items():
        assert hyperplane_count(majority(n)) == count


def test_symmetric_dd_closed_form():
    assert symmetric_dd(8, 4).count == 0
    v = symmetric_dd(8, 5)
    assert (v.count, v.normal) == (1, 0b11111111)
    with pytest.raises(ValueError):
        symmetric_dd(8, 7)


def test_symmetric_dd_exhaustive():
    # all symmetric functions of degree 2..n-2 at n = 5, 6 against the engine
    for n in (5, 6):
        for bits in itertools.product((0, 1), repeat=n + 1):
            f = symmetric_from_weights(n, bits)
            d = f.degree()
            if d is NEG_INF or not 2 <= d <= n - 2:
                continue
            v = symmetric_dd(n, int(d))
            normals = [s.forms[0] for s in enumerate_degree_drop(f, 1)]
            assert len(normals) == v.count
            if v.count:
                assert normals == [v.normal]


def oracle_drop_amount(f, omega, eps):
    d = oracles.restriction_degree(f.n, f.monomials(), [(1 << omega) - 1], eps)
    drop = int(f.degree()) - (d if d is not None else -1000)
    if drop <= 0:
        return DropAmount.NO_DROP
    return DropAmount.ONE if drop == 1 else DropAmount.AT_LEAST_TWO


def test_symmetric_drop_amount_exhaustive():
    # every symmetric f with deg >= 2, every normal weight, both constants
    for n in (4, 5, 6, 7):
        for bits in itertools.product((0, 1), repeat=n + 1):
            f = symmetric_from_weights(n, bits)
            d = f.degree()
            if d is NEG_INF or d < 2:
                continue
            for omega in range(1, n + 1):
                for eps in (0, 1):
                    got = symmetric_drop_amount(f, omega, eps)
                    assert got == oracle_drop_amount(f, omega, eps), (bits, omega, eps)


def test_symmetric_drop_amount_rejects():
    with pytest.raises(NotSymmetricError):
        symmetric_drop_amount(ANF.parse("12", 4), 1, 0)
    f = elementary_symmetric(5, 3)
    with pytest.raises(ValueError):
        symmetric_drop_amount(f, 0, 0)
    with pytest.raises(ValueError):
        symmetric_drop_amount(f, 1, 2)
    with pytest.raises(ValueError):
        symmetric_drop_amount(elementary_symmetric(4, 1), 1, 0)
