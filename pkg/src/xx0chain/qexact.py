"""Exact arithmetic in the formal variable q.

Laurent polynomials with arbitrary-precision integer coefficients carry all
q-combinatorics: Gaussian (q-)binomial coefficients, the q-Vandermonde
convolution, binomial and q-binomial determinants, and a fraction-free
determinant over the Laurent ring.  Identities in this layer are checked as
coefficient-wise equalities, never by sampling q numerically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import ExactDivisionError

__all__ = [
    "LaurentPoly",
    "q",
    "exact_half",
    "q_number",
    "q_factorial",
    "q_binomial",
    "q_vandermonde",
    "es_special_R",
    "es_special_L",
    "IndexTuples",
    "binomial_determinant",
    "q_binomial_determinant",
    "exact_det",
    "det_by_minors",
    "exact_det_rational",
]


def exact_half(n: int) -> int:
    """Halve an integer that is provably even; parity failure is a bug."""
    if n % 2:
        raise ArithmeticError(f"exponent {n} is odd; expected an even integer")
    return n // 2


class LaurentPoly:
    """Immutable Laurent polynomial in q with integer coefficients.

    Stored canonically as a map exponent -> nonzero coefficient; exponents
    may be negative.  Arithmetic mixes freely with ints.  Division exists
    only as :meth:`exact_div`, which insists on a zero remainder.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c: dict[int, int] = {}
        if coeffs:
            for e, v in coeffs.items():
                e = int(e)
                v = int(v)
                if v:
                    c[e] = v
        self._c = c

    @classmethod
    def monomial(cls, coeff: int, exponent: int) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def const(cls, n: int) -> "LaurentPoly":
        return cls({0: n})

    # -- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def support(self) -> list[int]:
        return sorted(self._c)

    def coefficient(self, exponent: int) -> int:
        return self._c.get(exponent, 0)

    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def min_exponent(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no exponents")
        return min(self._c)

    def degree(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    # -- ring operations ----------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = dict(self._c)
        for e, v in o._c.items():
            w = c.get(e, 0) + v
            if w:
                c[e] = w
            else:
                c.pop(e, None)
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: -v for e, v in self._c.items()}
        return out

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c: dict[int, int] = {}
        for e1, v1 in self._c.items():
            for e2, v2 in o._c.items():
                e = e1 + e2
                w = c.get(e, 0) + v1 * v2
                if w:
                    c[e] = w
                else:
                    del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self._c) == 1:
                ((e, v),) = self._c.items()
                if v in (1, -1):
                    return LaurentPoly({e * k: v if k % 2 else 1})
            raise ValueError("negative powers only for unit monomials")
        result = LaurentPoly({0: 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q**k."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e + k: v for e, v in self._c.items()}
        return out

    # -- evaluation -----------------------------------------------------

    def at_one(self) -> int:
        return sum(self._c.values())

    def evaluate(self, x):
        """Evaluate at a numeric point (complex, float, Fraction, int)."""
        total = 0
        for e, v in self._c.items():
            total += v * x**e
        return total

    def exact_div(self, other) -> "LaurentPoly":
        """Exact division; raises ExactDivisionError on a nonzero remainder."""
        o = self._coerce(other)
        if o is None or o.is_zero():
            raise ExactDivisionError("division by zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        smin, omin = self.min_exponent(), o.min_exponent()
        dn = self.degree() - smin
        dd = o.degree() - omin
        if dn < dd:
            raise ExactDivisionError("quotient would not be polynomial")
        num = [Fraction(self._c.get(e + smin, 0)) for e in range(dn + 1)]
        den = [Fraction(o._c.get(e + omin, 0)) for e in range(dd + 1)]
        quot = [Fraction(0)] * (dn - dd + 1)
        lead = den[-1]
        for k in range(dn - dd, -1, -1):
            coef = num[k + dd] / lead
            quot[k] = coef
            if coef:
                for i, dv in enumerate(den):
                    num[k + i] -= coef * dv
        if any(num):
            raise ExactDivisionError("inexact polynomial division (nonzero remainder)")
        shift = smin - omin
        coeffs: dict[int, int] = {}
        for k, c in enumerate(quot):
            if c:
                if c.denominator != 1:
                    raise ExactDivisionError("quotient has non-integer coefficients")
                coeffs[k + shift] = int(c)
        return LaurentPoly(coeffs)

    # -- serialization ---------------------------------------------------

    def to_json_obj(self) -> dict[str, str]:
        """Bit-exact JSON form: {exponent(str): coefficient(decimal str)}."""
        return {str(e): str(self._c[e]) for e in sorted(self._c)}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "LaurentPoly":
        return cls({int(e): int(v) for e, v in obj.items()})

    def __repr__(self):
        if not self._c:
            return "0"
        terms = []
        for e in sorted(self._c):
            v = self._c[e]
            if e == 0:
                terms.append(f"{v}")
            elif e == 1:
                terms.append("q" if v == 1 else ("-q" if v == -1 else f"{v}*q"))
            else:
                base = f"q^{e}"
                terms.append(base if v == 1 else (f"-{base}" if v == -1 else f"{v}*{base}"))
        return " + ".join(terms).replace("+ -", "- ")


#: the formal variable
q = LaurentPoly({1: 1})

_ZERO = LaurentPoly()
_ONE = LaurentPoly({0: 1})


def q_number(n: int) -> LaurentPoly:
    """[n] = 1 + q + ... + q^(n-1); [0] = 0."""
    if n < 0:
        raise ValueError("q-number requires n >= 0")
    return LaurentPoly({e: 1 for e in range(n)})


def q_factorial(n: int) -> LaurentPoly:
    """[n]! = [1][2]...[n] with [0]! = 1."""
    if n < 0:
        raise ValueError("q-factorial requires n >= 0")
    out = _ONE
    for k in range(2, n + 1):
        out = out * q_number(k)
    return out


@lru_cache(maxsize=None)
def q_binomial(n: int, r: int) -> LaurentPoly:
    """Gaussian binomial coefficient via the Pascal recursion.

    Returns 0 for r < 0 or r > n; at q=1 it reduces to comb(n, r).  The
    quotient-of-factorials form is kept as a test oracle only, so no
    intermediate rational functions ever appear.
    """
    if n < 0:
        raise ValueError("q-binomial requires n >= 0")
    if r < 0 or r > n:
        return _ZERO
    if r == 0 or r == n:
        return _ONE
    return q_binomial(n - 1, r - 1) + LaurentPoly.monomial(1, r) * q_binomial(n - 1, r)


def q_vandermonde(N: int, Np: int, r: int) -> LaurentPoly:
    """Convolution sum_j q^((N-j)(r-j)) [N,j][N',r-j]; equals [N+N', r]."""
    if N < 0 or Np < 0 or r < 0:
        raise ValueError("q-Vandermonde requires non-negative arguments")
    out = _ZERO
    for j in range(0, min(r, N) + 1):
        out = out + LaurentPoly.monomial(1, (N - j) * (r - j)) * q_binomial(N, j) * q_binomial(Np, r - j)
    return out


def es_special_R(r: int, N: int) -> LaurentPoly:
    """R_r(N) = q^(r(r-1)/2) [N, r]: e_r at the points (1, q, ..., q^(N-1))."""
    if r < 0:
        raise ValueError("order must be non-negative")
    return LaurentPoly.monomial(1, exact_half(r * (r - 1))) * q_binomial(N, r)


def es_special_L(r: int, N: int) -> LaurentPoly:
    """L_r(N) = q^(r(r+1)/2) [N, r]: e_r at the points (q, q^2, ..., q^N)."""
    if r < 0:
        raise ValueError("order must be non-negative")
    return LaurentPoly.monomial(1, exact_half(r * (r + 1))) * q_binomial(N, r)


@dataclass(frozen=True)
class IndexTuples:
    """Two strictly increasing non-negative tuples of equal length."""

    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        b = tuple(int(x) for x in self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if len(a) != len(b):
            raise ValueError("index tuples must have equal length")
        for t in (a, b):
            if any(x < 0 for x in t):
                raise ValueError("index tuples must be non-negative")
            if any(t[i] >= t[i + 1] for i in range(len(t) - 1)):
                raise ValueError("index tuples must be strictly increasing")

    @property
    def size(self) -> int:
        return len(self.a)


def binomial_determinant(t: IndexTuples) -> int:
    """det( C(a_j, b_i) ) as an exact integer."""
    n = t.size
    rows = [[comb(t.a[j], t.b[i]) for j in range(n)] for i in range(n)]
    return _det_int(rows)


def q_binomial_determinant(t: IndexTuples) -> LaurentPoly:
    """det( [a_j, b_i]_q ) over the exact Laurent ring."""
    n = t.size
    rows = [[q_binomial(t.a[j], t.b[i]) for j in range(n)] for i in range(n)]
    return exact_det(rows)


# -- determinants ------------------------------------------------------


def _as_laurent_rows(m) -> list[list[LaurentPoly]]:
    rows = []
    for r in m:
        row = []
        for x in r:
            if isinstance(x, LaurentPoly):
                row.append(x)
            elif isinstance(x, int):
                row.append(LaurentPoly({0: x}))
            else:
                raise TypeError(f"matrix entries must be LaurentPoly or int, got {type(x)!r}")
        rows.append(row)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    return rows


def exact_det(m) -> LaurentPoly:
    """Exact determinant of a square LaurentPoly matrix.

    Fraction-free Bareiss elimination; every interior division is exact by
    construction.  Matrices of size <= 4 are additionally re-evaluated by
    expansion in minors as a self-check.
    """
    a = _as_laurent_rows(m)
    n = len(a)
    det = _bareiss_laurent(a)
    if 2 <= n <= 4:
        check = det_by_minors(m)
        if det != check:
            raise RuntimeError("internal error: Bareiss and minor expansion disagree")
    return det


def _bareiss_laurent(a: list[list[LaurentPoly]]) -> LaurentPoly:
    n = len(a)
    if n == 0:
        return _ONE
    sign = 1
    prev = _ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return _ZERO
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    out = a[n - 1][n - 1]
    return out if sign > 0 else -out


def det_by_minors(m) -> LaurentPoly:
    """Laplace expansion with memoization over column subsets (sizes <= ~8)."""
    rows = _as_laurent_rows(m)
    n = len(rows)

    @lru_cache(maxsize=None)
    def minor(r: int, cols: tuple[int, ...]) -> LaurentPoly:
        if not cols:
            return _ONE
        total = _ZERO
        for idx, c in enumerate(cols):
            piv = rows[r][c]
            if piv.is_zero():
                continue
            rest = cols[:idx] + cols[idx + 1:]
            term = piv * minor(r + 1, rest)
            total = total + (term if idx % 2 == 0 else -term)
        return total

    return minor(0, tuple(range(n)))


def _det_int(rows: list[list[int]]) -> int:
    """Bareiss over the integers; all interior divisions are exact."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                if num % prev:
                    raise ExactDivisionError("integer Bareiss division not exact")
                a[i][j] = num // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def exact_det_rational(rows) -> Fraction:
    """Exact determinant of an int/Fraction matrix (Bareiss over Q)."""
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a)
    if n == 0:
        return Fraction(1)
    if any(len(r) != n for r in a):
        raise ValueError("matrix must be square")
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
