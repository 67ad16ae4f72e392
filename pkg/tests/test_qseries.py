import random
from fractions import Fraction

import pytest

from shsym.harmonic import basis_element, q_lambda
from shsym.operators import e_hat, laplacian, q2_hat
from shsym.partitions import enumerate_min_part, enumerate_partitions
from shsym.qseries import (
    QSeries,
    d_series,
    eisenstein,
    partition_gf,
    q_bracket,
    sigma,
)
from shsym.ssym import SSPoly, eval_at, parse_poly

Q1, Q2, Q3 = (SSPoly.gen(k) for k in (1, 2, 3))


def brute_bracket(f, order):
    """Direct definition: partition sums divided by the counting series,
    with the division done by explicit coefficient recursion."""
    num = []
    den = []
    for n in range(order + 1):
        lams = enumerate_partitions(n)
        num.append(sum((eval_at(f, lam) for lam in lams), Fraction(0)))
        den.append(Fraction(len(lams)))
    out = []
    for n in range(order + 1):
        value = num[n] - sum(den[i] * out[n - i] for i in range(1, n + 1))
        out.append(value / den[0])
    return QSeries(out)


def test_series_arithmetic_examples():
    one_plus_q = QSeries([1, 1], 6)
    assert (one_plus_q - one_plus_q).is_zero
    geom = QSeries([1] * 7)
    assert QSeries([1, -1], 6) * geom == QSeries.one(6)
    assert QSeries([2, 4], 5) * Fraction(1, 2) == QSeries([1, 2], 5)


def test_series_equality_uses_common_order():
    assert QSeries([1, 1], 3) == QSeries([1, 1], 9)
    assert QSeries([1, 1], 3) != QSeries([1, 2], 9)


def test_series_order_shrinks_to_smaller_operand():
    a = QSeries([1, 2, 3], 2)
    b = QSeries([1, 1], 1)
    assert (a + b).order == 1
    assert (a * b).order == 1


def test_series_str():
    assert str(QSeries([1, -24, -72], 2)) == "1 - 24*q - 72*q^2 + O(q^3)"
    assert str(QSeries.zero(4)) == "0 + O(q^5)"
    assert str(QSeries([Fraction(-1, 24), 1], 1)) == "-1/24 + q + O(q^2)"


def test_inverse():
    gf = partition_gf(15)
    assert gf * gf.inverse() == QSeries.one(15)
    with pytest.raises(ZeroDivisionError):
        QSeries([0, 1], 3).inverse()


def test_partition_gf_examples():
    assert partition_gf(3) == QSeries([1, 1, 2, 3])
    assert partition_gf(0) == QSeries([1])
    assert partition_gf(10).coeff(10) == 42


def test_partition_gf_euler_product():
    order = 20
    gf = partition_gf(order)
    prod = QSeries.one(order)
    for m in range(1, order + 1):
        prod = prod * QSeries([1] + [0] * (m - 1) + [-1], order)
    assert gf * prod == QSeries.one(order)


def test_sigma_by_direct_divisor_sums():
    for n in range(1, 40):
        for k in (1, 3, 5):
            assert sigma(k, n) == sum(d**k for d in range(1, n + 1) if n % d == 0)


def test_eisenstein_leading_coefficients():
    p = eisenstein(2, 6)
    q = eisenstein(4, 6)
    r = eisenstein(6, 6)
    assert p.coeffs[:3] == (1, -24, -72)
    assert q.coeffs[:3] == (1, 240, 2160)
    assert r.coeffs[:3] == (1, -504, -16632)
    with pytest.raises(ValueError):
        eisenstein(8, 6)


def test_d_series_examples():
    assert d_series(QSeries.one(5)).is_zero
    assert d_series(QSeries([0, 1], 5)) == QSeries([0, 1], 5)


def test_partition_gf_logarithmic_derivative():
    order = 25
    gf = partition_gf(order)
    lhs = d_series(gf) * gf.inverse()
    rhs = (QSeries.one(order) - eisenstein(2, order)) * Fraction(1, 24)
    assert lhs == rhs


def test_q_bracket_examples():
    assert q_bracket(SSPoly.one(), 10) == QSeries.one(10)
    assert q_bracket(Q2, 20) == eisenstein(2, 20) * Fraction(-1, 24)
    assert q_bracket(basis_element((3,)), 25).is_zero


def test_q_bracket_against_direct_definition():
    rng = random.Random(97)
    for _ in range(5):
        f = SSPoly.zero()
        for w in rng.sample(range(7), 3):
            for lam in enumerate_min_part(w, 1):
                f = f + q_lambda(lam) * rng.randint(-4, 4)
        assert q_bracket(f, 12) == brute_bracket(f, 12)


def test_q_bracket_rejects_bad_exponents():
    with pytest.raises(ValueError):
        q_bracket(parse_poly("Q2^(1/2)"), 10)


def test_q_bracket_linearity():
    rng = random.Random(101)
    for _ in range(5):
        f = q_lambda((3, 2)) * rng.randint(-4, 4) + q_lambda((5,)) * rng.randint(-4, 4)
        g = q_lambda((4,)) * rng.randint(-4, 4) + q_lambda((2, 2)) * rng.randint(-4, 4)
        a, b = Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3))
        assert q_bracket(a * f + b * g, 15) == q_bracket(f, 15) * a + q_bracket(g, 15) * b


def test_q1_multiples_have_zero_bracket():
    rng = random.Random(103)
    for _ in range(5):
        f = q_lambda((2, 1)) * rng.randint(-4, 4) + q_lambda((4,)) * rng.randint(-4, 4)
        assert q_bracket(Q1 * f, 15).is_zero


def test_q2_shift_identity():
    order = 20
    p_over_24 = eisenstein(2, order) * Fraction(1, 24)
    rng = random.Random(107)
    for _ in range(5):
        f = SSPoly.zero()
        for lam in enumerate_min_part(rng.randint(0, 6), 1):
            f = f + q_lambda(lam) * rng.randint(-4, 4)
        bf = q_bracket(f, order)
        assert q_bracket(Q2 * f, order) == d_series(bf) - p_over_24 * bf


def test_sl2_images_under_bracket_vanish_consistently():
    # odd-weight input: every bracket in sight vanishes
    f = q_lambda((3,)) + q_lambda((2, 1))
    for g in (f, q2_hat(f).pr(), laplacian(f).pr(), e_hat(f).pr()):
        assert q_bracket(g.pr(), 15).is_zero


def test_truncate():
    s = partition_gf(10)
    assert s.truncate(4) == partition_gf(4)
    with pytest.raises(ValueError):
        s.truncate(11)
