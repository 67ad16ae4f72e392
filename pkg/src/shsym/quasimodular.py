"""Quasimodular forms as exact polynomials in the three weight-graded
generators P (weight 2), Q (weight 4) and R (weight 6).

Depth is the degree in P; the depth-0 elements are the modular ones.
Recognition identifies a truncated q-series as the unique weight-k
combination of generator monomials, with an overdetermination margin that
certifies the result at the stated order.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Union

from . import linalg
from .harmonic import Decomposition, decompose
from .qseries import QSeries, eisenstein, q_bracket
from .ssym import SSPoly, format_fraction_latex

Scalar = Union[int, Fraction]
Triple = tuple[int, int, int]

_ZERO = Fraction(0)

RECOGNITION_MARGIN = 10


class RecognitionError(ValueError):
    pass


class InsufficientOrderError(ValueError):
    pass


class CrossCheckError(RuntimeError):
    """Internal disagreement between the recognized depth and the harmonic
    slot brackets; indicates an implementation bug."""


class QMForm:
    """Map from exponent triples (a, b, c) to nonzero rational coefficients,
    representing the sum of c_abc * P^a Q^b R^c."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Triple, Scalar] | None = None):
        clean: dict[Triple, Fraction] = {}
        if terms:
            for (a, b, c), coeff in terms.items():
                if a < 0 or b < 0 or c < 0:
                    raise ValueError("exponents must be non-negative")
                v = Fraction(coeff)
                if v:
                    clean[(a, b, c)] = v
        self._terms = clean

    @classmethod
    def zero(cls) -> "QMForm":
        return cls()

    @classmethod
    def one(cls) -> "QMForm":
        return cls({(0, 0, 0): 1})

    @classmethod
    def constant(cls, c: Scalar) -> "QMForm":
        return cls({(0, 0, 0): Fraction(c)})

    @classmethod
    def gen(cls, name: str) -> "QMForm":
        try:
            triple = {"P": (1, 0, 0), "Q": (0, 1, 0), "R": (0, 0, 1)}[name]
        except KeyError:
            raise ValueError(f"unknown generator {name!r}") from None
        return cls({triple: 1})

    def terms(self) -> list[tuple[Triple, Fraction]]:
        """Terms ordered by descending (a, b, c)."""
        return sorted(self._terms.items(), key=lambda kv: kv[0], reverse=True)

    def coeff(self, triple: Triple) -> Fraction:
        return self._terms.get(triple, _ZERO)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "QMForm") -> "QMForm":
        if not isinstance(other, QMForm):
            return NotImplemented
        out = dict(self._terms)
        for t, c in other._terms.items():
            s = out.get(t, _ZERO) + c
            if s:
                out[t] = s
            else:
                out.pop(t, None)
        res = QMForm.__new__(QMForm)
        res._terms = out
        return res

    def __neg__(self) -> "QMForm":
        res = QMForm.__new__(QMForm)
        res._terms = {t: -c for t, c in self._terms.items()}
        return res

    def __sub__(self, other: "QMForm") -> "QMForm":
        return self + (-other)

    def __mul__(self, other) -> "QMForm":
        if isinstance(other, QMForm):
            out: dict[Triple, Fraction] = {}
            for (a1, b1, c1), x in self._terms.items():
                for (a2, b2, c2), y in other._terms.items():
                    t = (a1 + a2, b1 + b2, c1 + c2)
                    s = out.get(t, _ZERO) + x * y
                    if s:
                        out[t] = s
                    else:
                        out.pop(t, None)
            res = QMForm.__new__(QMForm)
            res._terms = out
            return res
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return QMForm.zero()
            res = QMForm.__new__(QMForm)
            res._terms = {t: v * c for t, v in self._terms.items()}
            return res
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, QMForm) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def weight_components(self) -> dict[int, "QMForm"]:
        buckets: dict[int, dict[Triple, Fraction]] = {}
        for (a, b, c), v in self._terms.items():
            buckets.setdefault(2 * a + 4 * b + 6 * c, {})[(a, b, c)] = v
        return {w: QMForm(buckets[w]) for w in sorted(buckets)}

    def is_homogeneous(self) -> bool:
        return len(self.weight_components()) <= 1

    def weight(self) -> int:
        comps = self.weight_components()
        if not comps:
            return 0
        if len(comps) > 1:
            raise ValueError("form is not weight-homogeneous")
        return next(iter(comps))

    def __repr__(self) -> str:
        return f"QMForm({format_qmform(self)})"

    def __str__(self) -> str:
        return format_qmform(self)


def depth(m: QMForm) -> int:
    """Degree in the weight-2 generator; the zero form has depth 0."""
    return max((a for (a, _, _) in m._terms), default=0)


def monomials_of_weight(k: int) -> list[Triple]:
    """All exponent triples of weight k, in descending lexicographic order."""
    if k < 0 or k % 2:
        return []
    out = []
    for a in range(k // 2, -1, -1):
        rem = k - 2 * a
        for b in range(rem // 4, -1, -1):
            rem2 = rem - 4 * b
            if rem2 % 6 == 0:
                out.append((a, b, rem2 // 6))
    out.sort(reverse=True)
    return out


@lru_cache(maxsize=None)
def _gen_power(name: str, e: int, order: int) -> QSeries:
    if e == 0:
        return QSeries.one(order)
    base = eisenstein({"P": 2, "Q": 4, "R": 6}[name], order)
    return _gen_power(name, e - 1, order) * base


def expand(m: QMForm, order: int) -> QSeries:
    """Exact q-expansion of a form to the given order."""
    acc = QSeries.zero(order)
    for (a, b, c), coeff in m.terms():
        term = _gen_power("P", a, order) * _gen_power("Q", b, order)
        term = term * _gen_power("R", c, order)
        acc = acc + term * coeff
    return acc


def recognize(s: QSeries, k: int, order: int | None = None) -> QMForm:
    """Identify a truncated series as the unique weight-k form.

    Requires order + 1 >= number of weight-k monomials + margin; the extra
    rows turn the solve into an overdetermined consistency check.
    """
    if k % 2:
        raise ValueError("recognition weight must be even; odd-weight series must vanish")
    if order is None:
        order = s.order
    if order > s.order:
        raise InsufficientOrderError(
            f"series order {s.order} is below the requested order {order}"
        )
    triples = monomials_of_weight(k)
    needed = len(triples) + RECOGNITION_MARGIN
    if order + 1 < needed:
        raise InsufficientOrderError(
            f"insufficient order: weight {k} needs at least {needed} coefficients, got {order + 1}"
        )
    columns = [expand(QMForm({t: 1}), order).coeffs for t in triples]
    matrix = [[col[n] for col in columns] for n in range(order + 1)]
    rhs = list(s.coeffs[: order + 1])
    try:
        solution = linalg.solve(matrix, rhs)
    except linalg.LinearSolveError as exc:
        if exc.kind == "inconsistent":
            raise RecognitionError(
                f"not quasimodular of weight {k} at this order"
            ) from None
        raise
    return QMForm({t: c for t, c in zip(triples, solution)})


# -- derivations ---------------------------------------------------------------

_D_OF_GEN = {
    "P": QMForm({(2, 0, 0): Fraction(1, 12), (0, 1, 0): Fraction(-1, 12)}),
    "Q": QMForm({(1, 1, 0): Fraction(1, 3), (0, 0, 1): Fraction(-1, 3)}),
    "R": QMForm({(1, 0, 1): Fraction(1, 2), (0, 2, 0): Fraction(-1, 2)}),
}


def ramanujan_d(m: QMForm) -> QMForm:
    """The derivation q d/dq expressed on the generators, extended by the
    Leibniz rule; raises weight by 2."""
    acc = QMForm.zero()
    for (a, b, c), coeff in m.terms():
        if a:
            acc = acc + QMForm({(a - 1, b, c): coeff * a}) * _D_OF_GEN["P"]
        if b:
            acc = acc + QMForm({(a, b - 1, c): coeff * b}) * _D_OF_GEN["Q"]
        if c:
            acc = acc + QMForm({(a, b, c - 1): coeff * c}) * _D_OF_GEN["R"]
    return acc


def frak_d(m: QMForm) -> QMForm:
    """Twelve times the partial derivative in the weight-2 generator;
    lowers weight by 2 and depth by 1."""
    return QMForm(
        {(a - 1, b, c): 12 * a * coeff for (a, b, c), coeff in m._terms.items() if a}
    )


def d_hat(m: QMForm) -> QMForm:
    """Shifted derivation: the raising member of the sl2 triple; increases
    depth by exactly 1."""
    return ramanujan_d(m) - QMForm.gen("P") * m * Fraction(1, 24)


def w_hat(m: QMForm) -> QMForm:
    """Shifted weight operator (k - 1/2 on weight-k input), the Cartan
    member of the sl2 triple; rejects non-homogeneous input."""
    return m * (Fraction(m.weight()) - Fraction(1, 2))


# -- the modularity decision ---------------------------------------------------


def is_modular_bracket(
    f: SSPoly, order: int
) -> tuple[bool, QMForm, Decomposition]:
    """Decide whether the partition average of a weight-homogeneous Q1-free
    element is modular (depth 0 once recognized).

    Also cross-checks the structural criterion: modularity must coincide
    with the vanishing, to the stated order, of the bracket of every
    harmonic slot beyond the first.
    """
    if not f.in_lambda_star():
        raise ValueError("input must be Q1-free with integer exponents")
    if not f.is_homogeneous():
        raise ValueError("input must be weight-homogeneous")
    k = f.weight()
    series = q_bracket(f, order)
    if k % 2:
        if not series.is_zero:
            raise CrossCheckError("odd-weight bracket did not vanish")
        modular, form = True, QMForm.zero()
    else:
        form = recognize(series, k)
        modular = depth(form) == 0
    dec = decompose(f)
    tail_vanishes = all(q_bracket(h, order).is_zero for h in dec.components[1:])
    if tail_vanishes != modular:
        raise CrossCheckError(
            "recognized depth disagrees with the harmonic slot brackets"
        )
    return modular, form, dec


# -- text form -----------------------------------------------------------------

_GEN_NAMES = ("P", "Q", "R")


def format_qmform(m: QMForm) -> str:
    """Signed sum of c*P^a*Q^b*R^c, omitting unit exponents and coefficients."""
    if m.is_zero:
        return "0"
    chunks = []
    for i, (triple, coeff) in enumerate(m.terms()):
        factors = []
        for name, e in zip(_GEN_NAMES, triple):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}")
        mono_s = "*".join(factors)
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


def format_qmform_latex(m: QMForm) -> str:
    if m.is_zero:
        return "0"
    chunks = []
    for i, (triple, coeff) in enumerate(m.terms()):
        factors = []
        for name, e in zip(_GEN_NAMES, triple):
            if e == 1:
                factors.append(name)
            elif e:
                factors.append(f"{name}^{e}" if e <= 9 else f"{name}^{{{e}}}")
        mono_s = " ".join(factors)
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
