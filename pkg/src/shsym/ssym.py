"""Sparse exact polynomials in the generators Q1, Q2, Q3, ...

The ring carries a weight grading (Q_k has weight k).  Q2 alone may carry
half-integer and negative exponents; every other generator is restricted
to non-negative integer exponents, which keeps all weights integral.
Coefficients are exact rationals throughout.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Mapping, Union

from .partitions import Partition, c_set, check_partition

Scalar = Union[int, Fraction]
ExponentLike = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _as_exponent2(k: int, e: ExponentLike) -> int:
    """Convert an exponent to its doubled integer storage form."""
    e = Fraction(e)
    e2 = e * 2
    if e2.denominator != 1:
        raise ValueError(f"exponent {e} of Q{k} is not a half-integer")
    return int(e2)


class Monomial:
    """A product of generator powers such as Q2^2*Q4.

    Exponents are stored doubled so that half-integer powers of Q2 stay in
    exact integer arithmetic; generators other than Q2 must carry positive
    even stored exponents (i.e. positive integer powers).
    """

    __slots__ = ("_e2", "_hash")

    def __init__(self, e2_items: Iterable[tuple[int, int]]):
        merged: dict[int, int] = {}
        for k, e2 in e2_items:
            merged[k] = merged.get(k, 0) + e2
        items = tuple(sorted((k, e2) for k, e2 in merged.items() if e2))
        for k, e2 in items:
            if k < 1:
                raise ValueError(f"generator index must be >= 1, got Q{k}")
            if k != 2 and (e2 < 0 or e2 % 2):
                raise ValueError(
                    f"only Q2 may carry negative or half-integer exponents (Q{k}^({e2}/2))"
                )
        self._e2 = items
        self._hash = hash(items)

    @classmethod
    def from_exponents(cls, exponents: Mapping[int, ExponentLike]) -> "Monomial":
        return cls((k, _as_exponent2(k, e)) for k, e in exponents.items())

    def items2(self) -> tuple[tuple[int, int], ...]:
        """The (generator, doubled exponent) pairs, sorted by generator."""
        return self._e2

    def exponent2(self, k: int) -> int:
        for gen, e2 in self._e2:
            if gen == k:
                return e2
        return 0

    def exponent(self, k: int) -> Fraction:
        return Fraction(self.exponent2(k), 2)

    def shift(self, changes: Mapping[int, int]) -> "Monomial":
        """New monomial with doubled exponents adjusted by `changes`."""
        merged = dict(self._e2)
        for k, delta in changes.items():
            merged[k] = merged.get(k, 0) + delta
        return Monomial(merged.items())

    def mul(self, other: "Monomial") -> "Monomial":
        return Monomial(self._e2 + other._e2)

    def weight(self) -> int:
        w2 = sum(k * e2 for k, e2 in self._e2)
        if w2 % 2:
            raise ValueError(f"monomial {self} has non-integer weight")
        return w2 // 2

    def has_q1(self) -> bool:
        return bool(self._e2) and self._e2[0][0] == 1

    def in_r(self) -> bool:
        """Non-negative integer exponents only (Q1 allowed)."""
        return all(e2 >= 0 and e2 % 2 == 0 for _, e2 in self._e2)

    def in_lambda_star(self) -> bool:
        return self.in_r() and not self.has_q1()

    def sort_key(self) -> tuple:
        return (self.weight(), self._e2)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self._e2 == other._e2

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Monomial({format_monomial(self) or '1'})"


MONO_ONE = Monomial(())


class SSPoly:
    """Sparse polynomial: a map from Monomial to nonzero exact rationals."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                c = Fraction(coeff)
                if c:
                    clean[mono] = c
        self._terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "SSPoly":
        return cls()

    @classmethod
    def one(cls) -> "SSPoly":
        return cls({MONO_ONE: _ONE})

    @classmethod
    def constant(cls, c: Scalar) -> "SSPoly":
        return cls({MONO_ONE: Fraction(c)})

    @classmethod
    def gen(cls, k: int) -> "SSPoly":
        """The generator Q_k; Q0 is the constant 1."""
        if k == 0:
            return cls.one()
        return cls({Monomial(((k, 2),)): _ONE})

    @classmethod
    def from_monomial(
        cls, exponents: Mapping[int, ExponentLike], coeff: Scalar = 1
    ) -> "SSPoly":
        return cls({Monomial.from_exponents(exponents): Fraction(coeff)})

    # -- ring structure ------------------------------------------------

    def terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in canonical order: weight-major, then exponent-lexicographic."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def coeff(self, mono: Monomial) -> Fraction:
        return self._terms.get(mono, _ZERO)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "SSPoly") -> "SSPoly":
        if not isinstance(other, SSPoly):
            return NotImplemented
        out = dict(self._terms)
        for mono, c in other._terms.items():
            s = out.get(mono, _ZERO) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        res = SSPoly.__new__(SSPoly)
        res._terms = out
        return res

    def __neg__(self) -> "SSPoly":
        res = SSPoly.__new__(SSPoly)
        res._terms = {m: -c for m, c in self._terms.items()}
        return res

    def __sub__(self, other: "SSPoly") -> "SSPoly":
        return self + (-other)

    def __mul__(self, other) -> "SSPoly":
        if isinstance(other, SSPoly):
            out: dict[Monomial, Fraction] = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    m = m1.mul(m2)
                    s = out.get(m, _ZERO) + c1 * c2
                    if s:
                        out[m] = s
                    else:
                        out.pop(m, None)
            res = SSPoly.__new__(SSPoly)
            res._terms = out
            return res
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return SSPoly.zero()
            res = SSPoly.__new__(SSPoly)
            res._terms = {m: v * c for m, v in self._terms.items()}
            return res
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "SSPoly":
        return self * (_ONE / Fraction(scalar))

    def __pow__(self, n: int) -> "SSPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = SSPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, SSPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"SSPoly({format_poly(self)})"

    def __str__(self) -> str:
        return format_poly(self)

    # -- grading and projection -----------------------------------------

    def weight_components(self) -> dict[int, "SSPoly"]:
        """Split into weight-homogeneous parts, keyed by weight, ascending."""
        buckets: dict[int, dict[Monomial, Fraction]] = {}
        for mono, c in self._terms.items():
            buckets.setdefault(mono.weight(), {})[mono] = c
        return {w: SSPoly(buckets[w]) for w in sorted(buckets)}

    def weight(self) -> int:
        """Weight of a homogeneous polynomial; 0 for the zero polynomial."""
        weights = {mono.weight() for mono in self._terms}
        if not weights:
            return 0
        if len(weights) > 1:
            raise ValueError(f"polynomial is not weight-homogeneous: {self}")
        return weights.pop()

    def is_homogeneous(self) -> bool:
        return len({mono.weight() for mono in self._terms}) <= 1

    def pr(self) -> "SSPoly":
        """Projection killing every monomial divisible by Q1."""
        return SSPoly({m: c for m, c in self._terms.items() if not m.has_q1()})

    def in_r(self) -> bool:
        return all(m.in_r() for m in self._terms)

    def in_lambda_star(self) -> bool:
        return all(m.in_lambda_star() for m in self._terms)

    def has_q1(self) -> bool:
        return any(m.has_q1() for m in self._terms)


def pr(f: SSPoly) -> SSPoly:
    return f.pr()


def weight_components(f: SSPoly) -> dict[int, SSPoly]:
    return f.weight_components()


# -- evaluation on partitions ------------------------------------------------


@lru_cache(maxsize=None)
def _beta_list(upto: int) -> tuple[Fraction, ...]:
    # Invert g(z) = sum_j z^(2j) / (4^j (2j+1)!), the odd-part series of
    # the hook generating function divided by z.  g(0) = 1.
    g = [_ZERO] * (upto + 1)
    j = 0
    while 2 * j <= upto:
        g[2 * j] = Fraction(1, 4**j * factorial(2 * j + 1))
        j += 1
    b = [_ZERO] * (upto + 1)
    b[0] = _ONE
    for n in range(1, upto + 1):
        b[n] = -sum(g[i] * b[n - i] for i in range(1, n + 1))
    return tuple(b)


def beta(k: int) -> Fraction:
    """Constant term sequence of the empty-partition evaluation of Q_k."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return _beta_list(max(k, 8))[k]


@lru_cache(maxsize=None)
def eval_qk(k: int, lam: Partition) -> Fraction:
    """Exact value of the generator Q_k on a partition."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return _ONE
    lam = check_partition(lam)
    # sgn(c) * c^(k-1) with c stored doubled: sgn(c2) * c2^(k-1) / 2^(k-1)
    s = 0
    for c2 in c_set(lam):
        term = c2 ** (k - 1)
        s += term if c2 > 0 else -term
    return beta(k) + Fraction(s, 2 ** (k - 1) * factorial(k - 1))


def eval_at(f: SSPoly, lam: Iterable[int]) -> Fraction:
    """Evaluate an element of the plain ring (integer exponents) at a partition.

    The projection killing Q1 is applied first; on partitions Q1 vanishes,
    so this is consistent.
    """
    lam = check_partition(lam)
    if not f.in_r():
        raise ValueError("evaluation requires non-negative integer exponents")
    total = _ZERO
    for mono, coeff in f.pr()._terms.items():
        val = coeff
        for k, e2 in mono.items2():
            val *= eval_qk(k, lam) ** (e2 // 2)
        total += val
    return total


# -- text form ---------------------------------------------------------------


def _format_exponent(e2: int) -> str:
    if e2 % 2 == 0:
        return str(e2 // 2)
    return f"({e2}/2)"


def format_monomial(mono: Monomial) -> str:
    factors = []
    for k, e2 in mono.items2():
        if e2 == 2:
            factors.append(f"Q{k}")
        else:
            factors.append(f"Q{k}^{_format_exponent(e2)}")
    return "*".join(factors)


def format_poly(f: SSPoly) -> str:
    """Deterministic text form; inverse of parse_poly on normalized input."""
    if f.is_zero:
        return "0"
    chunks = []
    for i, (mono, coeff) in enumerate(f.terms()):
        mono_s = format_monomial(mono)
        mag = abs(coeff)
        if not mono_s:
            body = str(mag)
        elif mag == 1:
            body = mono_s
        else:
            body = f"{mag}*{mono_s}"
        if i == 0:
            chunks.append(body if coeff > 0 else f"-{body}")
        else:
            chunks.append(f" + {body}" if coeff > 0 else f" - {body}")
    return "".join(chunks)


def format_monomial_latex(mono: Monomial) -> str:
    factors = []
    for k, e2 in mono.items2():
        base = f"Q_{k}" if k < 10 else f"Q_{{{k}}}"
        if e2 == 2:
            factors.append(base)
        elif e2 % 2 == 0:
            e = e2 // 2
            factors.append(f"{base}^{e}" if 0 <= e <= 9 else f"{base}^{{{e}}}")
        else:
            factors.append(f"{base}^{{{e2}/2}}")
    return " ".join(factors)


def format_fraction_latex(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c)
    sign = "-" if c < 0 else ""
    return f"{sign}\\frac{{{abs(c.numerator)}}}{{{c.denominator}}}"


def format_poly_latex(f: SSPoly) -> str:
    if f.is_zero:
        return "0"
    chunks = []
    for i, (mono, coeff) in enumerate(f.terms()):
        mono_s = format_monomial_latex(mono)
        mag = abs(coeff)
        if not mono_s:
            body = format_fraction_latex(mag)
        elif mag == 1:
            body = mono_s
        else:
            body = f"{format_fraction_latex(mag)} {mono_s}"
        if i == 0:
            chunks.append(body if coeff > 0 else f"-{body}")
        else:
            chunks.append(f" + {body}" if coeff > 0 else f" - {body}")
    return "".join(chunks)


# -- parser ------------------------------------------------------------------


class ParseError(ValueError):
    """Syntax or rule violation in an expression, with a 0-based position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN_RE = re.compile(r"Q(?P<gen>\d+)|(?P<num>\d+)|(?P<op>[-+*/^()])")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens: list[tuple[str, object, int]] = []
        pos = 0
        while pos < len(text):
            if text[pos].isspace():
                pos += 1
                continue
            m = _TOKEN_RE.match(text, pos)
            if not m:
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            if m.lastgroup == "gen":
                self.tokens.append(("gen", int(m.group("gen")), pos))
            elif m.lastgroup == "num":
                self.tokens.append(("num", int(m.group("num")), pos))
            else:
                self.tokens.append(("op", m.group("op"), pos))
            pos = m.end()
        self.tokens.append(("end", None, len(text)))
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, value, pos = self.next()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r}", pos)

    def at_op(self, *ops: str) -> bool:
        kind, value, _ = self.peek()
        return kind == "op" and value in ops

    # expr := ['-'] term (('+'|'-') term)*
    def expr(self) -> SSPoly:
        negate = False
        if self.at_op("-"):
            self.next()
            negate = True
        acc = self.term()
        if negate:
            acc = -acc
        while self.at_op("+", "-"):
            _, op, _ = self.next()
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    # term := factor ('*' factor)*
    def term(self) -> SSPoly:
        acc = self.factor()
        while self.at_op("*"):
            self.next()
            acc = acc * self.factor()
        return acc

    # factor := atom ('^' exponent)?
    def factor(self) -> SSPoly:
        kind, value, pos = self.peek()
        if kind == "gen":
            self.next()
            k = value
            if self.at_op("^"):
                self.next()
                e2, epos = self.exponent()
                if k == 0:
                    return SSPoly.one()
                if k != 2 and e2 % 2:
                    raise ParseError(
                        f"half-integer exponent is only allowed on Q2, not Q{k}", epos
                    )
                if k != 2 and e2 < 0:
                    raise ParseError(
                        f"negative exponent is only allowed on Q2, not Q{k}", epos
                    )
                if e2 == 0:
                    return SSPoly.one()
                return SSPoly({Monomial(((k, e2),)): _ONE})
            return SSPoly.gen(k)
        base = self.atom()
        if self.at_op("^"):
            self.next()
            e2, epos = self.exponent()
            if e2 % 2:
                raise ParseError("half-integer exponent is only allowed on Q2", epos)
            e = e2 // 2
            if e < 0:
                # negative powers only make sense for nonzero constants
                if base.is_zero:
                    raise ParseError("zero has no negative powers", epos)
                if len(base) == 1 and not base.terms()[0][0].items2():
                    c = base.terms()[0][1]
                    return SSPoly.constant(c ** e)
                raise ParseError("negative exponent is only allowed on Q2", epos)
            return base ** e
        return base

    # atom := rational | '(' expr ')'   (generators handled in factor)
    def atom(self) -> SSPoly:
        kind, value, pos = self.peek()
        if kind == "num":
            return SSPoly.constant(self.rational())
        if kind == "op" and value == "(":
            self.next()
            inner = self.expr()
            self.expect_op(")")
            return inner
        if kind == "op" and value == "-":
            # unary minus inside a term, e.g. "2*-3"
            self.next()
            return -self.factor()
        raise ParseError("expected a number, generator or '('", pos)

    def rational(self) -> Fraction:
        kind, value, pos = self.next()
        if kind != "num":
            raise ParseError("expected a number", pos)
        num = value
        if self.at_op("/"):
            save = self.i
            self.next()
            kind, den, dpos = self.peek()
            if kind == "num":
                self.next()
                if den == 0:
                    raise ParseError("division by zero", dpos)
                return Fraction(num, den)
            self.i = save
        return Fraction(num)

    # exponent := '-'? digits | '(' '-'? digits ('/' digits)? ')'
    # The parenthesized denominator must be 1 or 2.
    def exponent(self) -> tuple[int, int]:
        kind, value, pos = self.peek()
        if kind == "num":
            self.next()
            return 2 * value, pos
        if kind == "op" and value == "-":
            self.next()
            kind, value, npos = self.next()
            if kind != "num":
                raise ParseError("expected digits after '-' in exponent", npos)
            return -2 * value, pos
        if kind == "op" and value == "(":
            self.next()
            sign = 1
            if self.at_op("-"):
                self.next()
                sign = -1
            kind, num, npos = self.next()
            if kind != "num":
                raise ParseError("expected digits in exponent", npos)
            e2 = 2 * num
            if self.at_op("/"):
                self.next()
                kind, den, dpos = self.next()
                if kind != "num" or den not in (1, 2):
                    raise ParseError("exponent denominator must be 1 or 2", dpos)
                e2 = num * (2 // den)
            self.expect_op(")")
            return sign * e2, pos
        raise ParseError("expected an exponent", pos)


def parse_poly(text: str) -> SSPoly:
    """Parse an expression in the Q-generator grammar into a polynomial."""
    parser = _Parser(text)
    poly = parser.expr()
    kind, _, pos = parser.peek()
    if kind != "end":
        raise ParseError("trailing input", pos)
    return poly
