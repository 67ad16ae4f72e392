"""Differential operators on the ring of shifted symmetric polynomials.

All operators act linearly, term by term, with the formal power rule on
the (possibly half-integer) exponents of Q2.  The n-th order operator
`d_op_n` is evaluated per monomial by enumerating multisets of derivative
slots drawn from the monomial's support; the defining sum over ordered
index vectors has only finitely many nonzero terms on any polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable

from .partitions import check_partition
from .ssym import Monomial, SSPoly

Operator = Callable[[SSPoly], SSPoly]

_ZERO = Fraction(0)
_HALF = Fraction(1, 2)


def falling_factorial(x: Fraction | int, n: int) -> Fraction:
    """(x)_n = x (x-1) ... (x-n+1); the empty product is 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    x = Fraction(x)
    out = Fraction(1)
    for i in range(n):
        out *= x - i
    return out


def multinomial(parts: Iterable[int]) -> int:
    """(sum parts)! / prod(part!)."""
    parts = list(parts)
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out


def d_op(f: SSPoly) -> SSPoly:
    """First-order lowering operator: each Q_k derivative slot emits Q_{k-1}."""
    acc: dict[Monomial, Fraction] = {}
    for mono, coeff in f.terms():
        for k, e2 in mono.items2():
            c = coeff * Fraction(e2, 2)
            changes = {k: -2}
            if k > 1:
                changes[k - 1] = 2
            m = mono.shift(changes)
            s = acc.get(m, _ZERO) + c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
    return SSPoly(acc)


def euler_op(f: SSPoly) -> SSPoly:
    """Multiply each weight-homogeneous component by its weight."""
    return SSPoly({m: c * m.weight() for m, c in f.terms()})


def d_op_n(n: int, f: SSPoly) -> SSPoly:
    """The order-n operator generalizing d_op; order 0 is the identity.

    On weight-homogeneous input the weight drops by n.
    """
    if n < 0:
        raise ValueError("order must be non-negative")
    if n == 0:
        return f
    acc: dict[Monomial, Fraction] = {}
    n_fact = factorial(n)
    for mono, coeff in f.terms():
        support = mono.items2()

        def add_term(chosen: tuple[tuple[int, int], ...]):
            arrangements = n_fact
            hook_weight = 0
            deriv = Fraction(1)
            changes: dict[int, int] = {}
            for k, t in chosen:
                arrangements //= factorial(t)
                hook_weight += (k - 1) * t
                deriv *= falling_factorial(Fraction(mono.exponent2(k), 2), t)
                changes[k] = changes.get(k, 0) - 2 * t
            if not deriv:
                return
            inner = factorial(hook_weight)
            for k, t in chosen:
                inner //= factorial(k - 1) ** t
            if hook_weight >= 1:
                changes[hook_weight] = changes.get(hook_weight, 0) + 2
            m = mono.shift(changes)
            s = acc.get(m, _ZERO) + coeff * arrangements * inner * deriv
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)

        def walk(idx: int, remaining: int, chosen: tuple[tuple[int, int], ...]):
            if remaining == 0:
                add_term(chosen)
                return
            if idx == len(support):
                return
            k, e2 = support[idx]
            if k == 2 and (e2 < 0 or e2 % 2):
                cap = remaining  # formal powers of Q2 never exhaust
            else:
                cap = min(remaining, e2 // 2)
            for t in range(cap + 1):
                walk(idx + 1, remaining - t, chosen + ((k, t),) if t else chosen)

        walk(0, n, ())
    return SSPoly(acc)


def laplacian(f: SSPoly) -> SSPoly:
    """Half the difference of the order-2 operator and the squared lowering."""
    return (d_op_n(2, f) - d_op(d_op(f))) * _HALF


def delta_n(n: int, f: SSPoly) -> SSPoly:
    """Alternating binomial combination of d_op_n and powers of d_op.

    delta_n(0) is the identity, delta_n(1) vanishes identically and
    delta_n(2) is twice the laplacian.
    """
    if n < 0:
        raise ValueError("order must be non-negative")
    if n == 0:
        return f
    acc = SSPoly.zero()
    d_power = f
    for i in range(n + 1):
        if i > 0:
            d_power = d_op(d_power)
        sign = -1 if i % 2 else 1
        acc = acc + d_op_n(n - i, d_power) * (sign * comb(n, i))
    return acc


def delta_lambda(lam: Iterable[int], f: SSPoly) -> SSPoly:
    """Multinomial prefactor times the composition of delta_n over the parts.

    The factors commute, so the order of composition is irrelevant; parts
    are applied largest-first, which keeps intermediate supports small.
    """
    lam = check_partition(lam)
    g = f
    for part in lam:
        g = delta_n(part, g)
    return g * multinomial(lam)


def kelvin(f: SSPoly) -> SSPoly:
    """Weight-graded involution: a weight-n component is shifted to weight 3-n.

    Acts componentwise by multiplying with the half-power of Q2 of exponent
    3/2 - n; input must be free of Q1.
    """
    if f.has_q1():
        raise ValueError("Kelvin transform requires input free of Q1")
    acc: dict[Monomial, Fraction] = {}
    for mono, c in f.terms():
        m = mono.shift({2: 3 - 2 * mono.weight()})
        acc[m] = acc.get(m, _ZERO) + c
    return SSPoly(acc)


def dualize_apply(f: SSPoly, g: SSPoly) -> SSPoly:
    """Apply the operator obtained from f by replacing each Q_k with delta_n(k).

    Each monomial of f becomes the composition of the corresponding
    operators (order irrelevant since they commute), scaled by its
    coefficient, and the results are summed.
    """
    if not f.in_r():
        raise ValueError("dualization requires non-negative integer exponents")
    acc = SSPoly.zero()
    for mono, c in f.terms():
        h = g
        for k, e2 in mono.items2():
            for _ in range(e2 // 2):
                h = delta_n(k, h)
        acc = acc + h * c
    return acc


# -- operator combinators and distinguished operators -------------------------


def multiply_by(p: SSPoly) -> Operator:
    return lambda f: p * f


def compose(*ops: Operator) -> Operator:
    def run(f: SSPoly) -> SSPoly:
        for op in reversed(ops):
            f = op(f)
        return f

    return run


def commutator(a: Operator, b: Operator, f: SSPoly) -> SSPoly:
    """[a, b] applied to f: a(b(f)) - b(a(f))."""
    return a(b(f)) - b(a(f))


def q2_hat(f: SSPoly) -> SSPoly:
    """Multiplication by Q2 - Q1^2/2, the raising member of the sl2 triple."""
    shift = SSPoly.gen(2) - SSPoly.gen(1) * SSPoly.gen(1) * _HALF
    return shift * f


def e_hat(f: SSPoly) -> SSPoly:
    """Shifted weight operator, the Cartan member of the sl2 triple."""
    return euler_op(f) - SSPoly.gen(1) * d_op(f) - f * _HALF
