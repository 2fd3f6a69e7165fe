"""Exact arithmetic in Z[t^(1/2), t^(-1/2)] and in its fraction field.

Every matrix entry in this package lives in the ring of Laurent polynomials
in a square root of t with integer coefficients.  Half powers are genuinely
needed: diagonal normalizations are t^(-d/2) for an orbit dimension d that
need not be even.  A polynomial is stored sparsely as a map from *doubled*
exponents to nonzero integer coefficients, so t^(k/2) is stored under the
integer key k and exponent arithmetic never leaves the integers.

Values are immutable after construction and all operations are pure, so they
may be shared freely between workers.  Coefficients are plain Python ints,
hence arbitrary precision.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterator, Mapping

__all__ = [
    "HalfLaurent",
    "RationalHL",
    "NonExactDivision",
    "ZeroDenominator",
    "ZERO",
    "ONE",
    "T",
    "t_power",
    "t_half_power",
    "exact_div",
    "bar",
    "rational_reduce",
]


class NonExactDivision(ArithmeticError):
    """Quotient does not exist in Z[t^(1/2), t^(-1/2)].

    Raised when a division that the surrounding algorithm guarantees to be
    exact turns out not to be: the input data was corrupted or inconsistent.
    """


class ZeroDenominator(ZeroDivisionError):
    """Denominator of a rational function is the zero polynomial."""


class HalfLaurent:
    """A Laurent polynomial in t^(1/2) with integer coefficients.

    Construct from a mapping of doubled exponents to coefficients::

        HalfLaurent({2: 1, 0: -1})    # t - 1
        HalfLaurent({-1: 3})          # 3*t^(-1/2)

    Zero coefficients are dropped on construction; the zero polynomial has an
    empty coefficient map.  Supports +, -, *, ** and mixing with ints.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | None = None):
        c: dict[int, int] = {}
        if coeffs:
            for e, v in coeffs.items():
                if v:
                    c[int(e)] = v
        self._c = c

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def items(self) -> Iterator[tuple[int, int]]:
        """Pairs (doubled exponent, coefficient) in ascending exponent order."""
        return iter(sorted(self._c.items()))

    def coefficient(self, double_exp: int) -> int:
        return self._c.get(double_exp, 0)

    def support(self) -> tuple[int, ...]:
        """Doubled exponents carrying a nonzero coefficient, ascending."""
        return tuple(sorted(self._c))

    def valuation(self) -> int:
        """Smallest doubled exponent; undefined on zero."""
        if not self._c:
            raise ValueError("zero polynomial has no valuation")
        return min(self._c)

    def degree(self) -> int:
        """Largest doubled exponent; undefined on zero."""
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def is_constant(self) -> bool:
        return not self._c or self._c.keys() == {0}

    # -- ring structure ---------------------------------------------------

    def __add__(self, other: HalfLaurent | int) -> HalfLaurent:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c = dict(self._c)
        for e, v in other._c.items():
            s = c.get(e, 0) + v
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        out = HalfLaurent.__new__(HalfLaurent)
        out._c = c
        return out

    __radd__ = __add__

    def __neg__(self) -> HalfLaurent:
        out = HalfLaurent.__new__(HalfLaurent)
        out._c = {e: -v for e, v in self._c.items()}
        return out

    def __sub__(self, other: HalfLaurent | int) -> HalfLaurent:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: int) -> HalfLaurent:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: HalfLaurent | int) -> HalfLaurent:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in other._c.items():
                e = e1 + e2
                s = c.get(e, 0) + v1 * v2
                if s:
                    c[e] = s
                else:
                    del c[e]
        out = HalfLaurent.__new__(HalfLaurent)
        out._c = c
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> HalfLaurent:
        if n < 0:
            # only units (signed monomials) may be inverted
            if len(self._c) == 1:
                ((e, v),) = self._c.items()
                if v in (1, -1):
                    sign = -1 if (v == -1 and n % 2) else 1
                    return HalfLaurent({n * e: sign})
            raise ValueError(f"({self}) is not invertible in the ring")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = _coerce(other)
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    # -- the bar involution and evaluation --------------------------------

    def bar(self) -> HalfLaurent:
        """The ring involution t^(1/2) -> t^(-1/2): every exponent is negated."""
        out = HalfLaurent.__new__(HalfLaurent)
        out._c = {-e: v for e, v in self._c.items()}
        return out

    def shift(self, double_exp: int) -> HalfLaurent:
        """Multiply by the monomial t^(double_exp/2)."""
        out = HalfLaurent.__new__(HalfLaurent)
        out._c = {e + double_exp: v for e, v in self._c.items()}
        return out

    def evaluate_at_one(self) -> int:
        return sum(self._c.values())

    # -- serialization and display -----------------------------------------

    def to_json(self) -> dict[str, int]:
        """JSON form: doubled exponents as string keys, e.g. t^(-1) <-> {"-2": 1}."""
        return {str(e): v for e, v in sorted(self._c.items())}

    @classmethod
    def from_json(cls, obj: Mapping[str, int]) -> HalfLaurent:
        return cls({int(e): int(v) for e, v in obj.items()})

    def pretty(self) -> str:
        """Human-readable form, ascending exponents: "t^-2 + 2*t^-1 - 1"."""
        if not self._c:
            return "0"
        parts: list[str] = []
        for e, v in sorted(self._c.items()):
            mono = _monomial_str(e)
            if mono is None:
                term = str(abs(v))
            elif abs(v) == 1:
                term = mono
            else:
                term = f"{abs(v)}*{mono}"
            if not parts:
                parts.append(term if v > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if v > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return self.pretty()


def _monomial_str(double_exp: int) -> str | None:
    if double_exp == 0:
        return None
    if double_exp % 2 == 0:
        k = double_exp // 2
        return "t" if k == 1 else f"t^{k}"
    return f"t^({double_exp}/2)"


def _coerce(x: HalfLaurent | int) -> HalfLaurent:
    if isinstance(x, HalfLaurent):
        return x
    if isinstance(x, int):
        out = HalfLaurent.__new__(HalfLaurent)
        out._c = {0: x} if x else {}
        return out
    return NotImplemented


ZERO = HalfLaurent()
ONE = HalfLaurent({0: 1})
T = HalfLaurent({2: 1})


def t_power(k: int) -> HalfLaurent:
    """The monomial t^k."""
    return HalfLaurent({2 * k: 1})


def t_half_power(double_exp: int) -> HalfLaurent:
    """The monomial t^(double_exp/2)."""
    return HalfLaurent({double_exp: 1})


def bar(f: HalfLaurent) -> HalfLaurent:
    """Function form of the bar involution t^(1/2) -> t^(-1/2)."""
    return f.bar()


def exact_div(f: HalfLaurent, g: HalfLaurent) -> HalfLaurent:
    """Return q with f = q*g, or raise NonExactDivision if no such q exists.

    Division is over the integers: a remainder, or a leading coefficient
    that fails to divide, both signal inconsistent input data.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return ZERO
    shift = f.valuation() - g.valuation()
    gd = g.degree() - g.valuation()
    g0 = {e - g.valuation(): v for e, v in g._c.items()}
    rem = {e - f.valuation(): v for e, v in f._c.items()}
    glead = g0[gd]
    q: dict[int, int] = {}
    while rem:
        rd = max(rem)
        if rd < gd:
            raise NonExactDivision(f"({f}) is not divisible by ({g})")
        c, r = divmod(rem[rd], glead)
        if r:
            raise NonExactDivision(f"({f}) is not divisible by ({g})")
        qe = rd - gd
        q[qe] = c
        for e, v in g0.items():
            k = e + qe
            s = rem.get(k, 0) - c * v
            if s:
                rem[k] = s
            else:
                rem.pop(k, None)
    return HalfLaurent({e + shift: v for e, v in q.items()})


# -- dense integer polynomials, used only for gcd ---------------------------
#
# A HalfLaurent with valuation shifted to 0 is an ordinary polynomial in
# s = t^(1/2); gcd runs on its dense coefficient list via the primitive
# polynomial remainder sequence, which keeps everything in integers.


def _dense(f: HalfLaurent) -> list[int]:
    v = f.valuation()
    d = f.degree()
    out = [0] * (d - v + 1)
    for e, c in f._c.items():
        out[e - v] = c
    return out


def _content(a: list[int]) -> int:
    g = 0
    for c in a:
        g = gcd(g, c)
    return g


def _primitive(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    if not a:
        return a
    g = _content(a)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    # lc(b)^(deg a - deg b + 1) * a  mod  b, computed in place on a copy
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        lead = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for i, bc in enumerate(b):
            r[shift + i] -= lead * bc
        while r and r[-1] == 0:
            r.pop()
    return r


def _poly_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd in Z[s] of two nonzero dense polynomials."""
    a = _primitive(list(a))
    b = _primitive(list(b))
    while b:
        a, b = b, _primitive(_pseudo_rem(a, b))
    return a


def _from_dense(a: list[int], double_val: int = 0) -> HalfLaurent:
    return HalfLaurent({i + double_val: c for i, c in enumerate(a) if c})


class RationalHL:
    """A rational function num/den over HalfLaurent, kept in canonical form.

    The canonical form divides out the polynomial gcd (computed over the
    rationals, then cleared to a primitive integer pair), moves the whole
    monomial factor into the numerator so the denominator has valuation 0,
    and makes the denominator's lowest coefficient positive.  Reduction is
    idempotent; equality is by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: HalfLaurent | int, den: HalfLaurent | int = 1):
        num = _coerce(num)
        den = _coerce(den)
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        vn, vd = num.valuation(), den.valuation()
        n = _dense(num)
        d = _dense(den)
        g = _poly_gcd(n, d)
        if len(g) > 1:
            n = _dense(exact_div(_from_dense(n), _from_dense(g)))
            d = _dense(exact_div(_from_dense(d), _from_dense(g)))
        c = gcd(_content(n), _content(d))
        if d[0] < 0:
            c = -c
        self.num = HalfLaurent({i + vn - vd: v // c for i, v in enumerate(n) if v})
        self.den = HalfLaurent({i: v // c for i, v in enumerate(d) if v})

    # -- field structure ---------------------------------------------------

    def __add__(self, other: RationalHL | HalfLaurent | int) -> RationalHL:
        other = _coerce_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalHL(self.num * other.den + other.num * self.den,
                          self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RationalHL:
        out = RationalHL.__new__(RationalHL)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other: RationalHL | HalfLaurent | int) -> RationalHL:
        other = _coerce_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: RationalHL | HalfLaurent | int) -> RationalHL:
        other = _coerce_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: RationalHL | HalfLaurent | int) -> RationalHL:
        other = _coerce_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalHL(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: RationalHL | HalfLaurent | int) -> RationalHL:
        other = _coerce_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalHL(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other: RationalHL | HalfLaurent | int) -> RationalHL:
        other = _coerce_rational(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, HalfLaurent)):
            other = _coerce_rational(other)
        if not isinstance(other, RationalHL):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def is_polynomial(self) -> bool:
        return self.den == ONE

    def to_polynomial(self) -> HalfLaurent:
        """The underlying polynomial, certified by exact division."""
        return exact_div(self.num, self.den)

    def __repr__(self) -> str:
        if self.den == ONE:
            return self.num.pretty()
        return f"({self.num.pretty()}) / ({self.den.pretty()})"


def _coerce_rational(x: RationalHL | HalfLaurent | int) -> RationalHL:
    if isinstance(x, RationalHL):
        return x
    if isinstance(x, (HalfLaurent, int)):
        return RationalHL(x, 1)
    return NotImplemented


def rational_reduce(r: RationalHL) -> RationalHL:
    """Re-canonicalize a rational function (idempotent by construction)."""
    return RationalHL(r.num, r.den)


def rational_series(r: RationalHL, n_terms: int) -> list[Fraction]:
    """First n_terms coefficients of r as a power series in t^(1/2).

    Requires the denominator to be nonzero at 0, which canonical form
    guarantees, and the numerator to have no pole (valuation >= 0).  Index k
    of the result is the coefficient of t^(k/2).
    """
    den0 = r.den.coefficient(0)
    num = {e: Fraction(v) for e, v in r.num._c.items()}
    if num and min(num) < 0:
        raise ValueError("series expansion of a function with a pole at 0")
    den = {e: v for e, v in r.den._c.items() if e != 0}
    out: list[Fraction] = []
    for k in range(n_terms):
        acc = num.get(k, Fraction(0))
        for e, v in den.items():
            if 0 <= k - e < k:
                acc -= v * out[k - e]
        out.append(acc / den0)
    return out
