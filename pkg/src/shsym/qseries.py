"""Truncated formal power series in q with exact rational coefficients.

A series carries an explicit truncation order N and stores the
coefficients of q^0 ... q^N exactly.  Arithmetic never claims precision
beyond the smaller operand order, and equality is likewise defined up to
the common truncation order.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from .partitions import count_partitions, enumerate_partitions
from .ssym import Monomial, SSPoly, eval_qk

Scalar = Union[int, Fraction]

_ZERO = Fraction(0)


class QSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            if len(cs) < order + 1:
                cs += [_ZERO] * (order + 1 - len(cs))
            else:
                cs = cs[: order + 1]
        elif not cs:
            cs = [_ZERO]
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls([1], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, order: int) -> "QSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return QSeries(self.coeffs[: order + 1])

    def __add__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return QSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], n)

    def __sub__(self, other: "QSeries") -> "QSeries":
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return QSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], n)

    def __neg__(self) -> "QSeries":
        return QSeries([-c for c in self.coeffs])

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            n = min(self.order, other.order)
            out = [_ZERO] * (n + 1)
            for i, a in enumerate(self.coeffs[: n + 1]):
                if not a:
                    continue
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
            return QSeries(out)
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return QSeries([a * c for a in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "QSeries":
        """Multiplicative inverse; needs a nonzero constant term."""
        a0 = self.coeffs[0]
        if not a0:
            raise ZeroDivisionError("series has no inverse: constant term is 0")
        n = self.order
        out = [_ZERO] * (n + 1)
        out[0] = 1 / a0
        for m in range(1, n + 1):
            out[m] = -sum(self.coeffs[i] * out[m - i] for i in range(1, m + 1)) / a0
        return QSeries(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return self.coeffs[: n + 1] == other.coeffs[: n + 1]

    __hash__ = None  # equality is order-relative

    def __repr__(self) -> str:
        return f"QSeries({self})"

    def __str__(self) -> str:
        chunks = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if n == 0:
                body = str(mag)
            elif mag == 1:
                body = "q" if n == 1 else f"q^{n}"
            else:
                body = f"{mag}*q" if n == 1 else f"{mag}*q^{n}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f" + {body}" if c > 0 else f" - {body}")
        if not chunks:
            chunks.append("0")
        chunks.append(f" + O(q^{self.order + 1})")
        return "".join(chunks)


def partition_gf(order: int) -> QSeries:
    """Generating function of the partition counts, exactly."""
    return QSeries([count_partitions(n) for n in range(order + 1)])


@lru_cache(maxsize=None)
def _inverse_gf(order: int) -> QSeries:
    return partition_gf(order).inverse()


def sigma(k: int, n: int) -> int:
    """Divisor power sum over the divisors of n, by trial division."""
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**k
            e = n // d
            if e != d:
                total += e**k
        d += 1
    return total


_EISENSTEIN_FACTOR = {2: (-24, 1), 4: (240, 3), 6: (-504, 5)}


@lru_cache(maxsize=None)
def eisenstein(k: int, order: int) -> QSeries:
    """Weight-k series for k in {2, 4, 6}, in the classical normalization
    with constant term 1."""
    if k not in _EISENSTEIN_FACTOR:
        raise ValueError("weight must be one of 2, 4, 6")
    factor, power = _EISENSTEIN_FACTOR[k]
    coeffs = [Fraction(1)] + [
        Fraction(factor * sigma(power, n)) for n in range(1, order + 1)
    ]
    return QSeries(coeffs)


def d_series(a: QSeries) -> QSeries:
    """The derivation q d/dq: coefficient c_n goes to n c_n."""
    return QSeries([n * c for n, c in enumerate(a.coeffs)])


@lru_cache(maxsize=None)
def _monomial_series(mono: Monomial, order: int) -> tuple[Fraction, ...]:
    # sum over all partitions of n <= order of the monomial value, per n
    out = []
    for n in range(order + 1):
        total = _ZERO
        for lam in enumerate_partitions(n):
            val = Fraction(1)
            for k, e2 in mono.items2():
                val *= eval_qk(k, lam) ** (e2 // 2)
            total += val
        out.append(total)
    return tuple(out)


def q_bracket(f: SSPoly, order: int) -> QSeries:
    """Partition average of f as a truncated series: the sum of
    f(lambda) q^|lambda| divided by the partition generating function.

    The projection killing Q1 is applied first.
    """
    if not f.in_r():
        raise ValueError("q-bracket requires non-negative integer exponents")
    num = [_ZERO] * (order + 1)
    for mono, c in f.pr().terms():
        series = _monomial_series(mono, order)
        for i in range(order + 1):
            num[i] += c * series[i]
    return QSeries(num) * _inverse_gf(order)
