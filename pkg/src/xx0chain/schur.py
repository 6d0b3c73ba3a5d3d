"""Schur functions, elementary symmetric functions, and restricted
Cauchy-type kernels.

Two tracks share one code path: a numeric track (complex coordinates,
numpy determinants) and an exact track (int/Fraction or LaurentPoly
coordinates, fraction-free determinants).  The dual Jacobi-Trudi
determinant is the default Schur evaluation; the bialternant ratio is a
cross-check that refuses coincident coordinates, and the tableau sum is a
test-only oracle.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

import numpy as np

from . import qexact
from .combinat import Partition, conjugate, enumerate_partitions_in_box
from .errors import DegenerateInputError, EnumerationBudgetError
from .qexact import LaurentPoly

__all__ = [
    "elementary_symmetric",
    "vandermonde",
    "schur_jacobi_trudi",
    "schur_bialternant",
    "schur_ssyt_oracle",
    "binet_cauchy_kernel",
    "binet_cauchy_bruteforce",
    "padded_schur_sum_bruteforce",
]

_NUMERIC = "numeric"
_RATIONAL = "rational"
_LAURENT = "laurent"


def _classify(coords) -> str:
    has_laurent = any(isinstance(x, LaurentPoly) for x in coords)
    if has_laurent:
        if not all(isinstance(x, (LaurentPoly, int)) for x in coords):
            raise TypeError("exact and numeric coordinates cannot be mixed")
        return _LAURENT
    if all(isinstance(x, (int, Fraction)) for x in coords):
        return _RATIONAL
    return _NUMERIC


def _e_table(coords, rmax: int):
    """e_0..e_rmax by the product recurrence on (1 + t*x_i)."""
    e = [1] + [0] * rmax
    for x in coords:
        for r in range(min(rmax, len(e) - 1), 0, -1):
            e[r] = e[r] + x * e[r - 1]
    return e


def elementary_symmetric(r: int, coords):
    """e_r of the coordinates; e_0 = 1 and e_r = 0 for r > len(coords)."""
    if r < 0:
        raise ValueError("order must be non-negative")
    coords = tuple(coords)
    if r > len(coords):
        return 0
    return _e_table(coords, r)[r]


def vandermonde(coords):
    """prod_{m<l} (x_m - x_l), i.e. det of the decreasing-power moment matrix."""
    coords = tuple(coords)
    out = 1
    for m in range(len(coords)):
        for l in range(m + 1, len(coords)):
            out = out * (coords[m] - coords[l])
    return out


def _det_auto(rows, track: str):
    n = len(rows)
    if n == 0:
        return 1
    if track == _LAURENT:
        return qexact.exact_det(rows)
    if track == _RATIONAL:
        d = qexact.exact_det_rational(rows)
        return int(d) if d.denominator == 1 else d
    return complex(np.linalg.det(np.asarray(rows, dtype=complex)))


def schur_jacobi_trudi(lam, coords):
    """Schur value via the dual Jacobi-Trudi determinant.

    det(e_{conj(lam)_i - i + j}) of size lam_1; valid for arbitrary,
    including repeated, coordinates.
    """
    lam = Partition(lam)
    coords = tuple(coords)
    n = len(coords)
    if len(lam) > n:
        return 0
    if not lam:
        return 1
    track = _classify(coords)
    width = lam[0]
    lbar = conjugate(lam)
    etab = _e_table(coords, n)
    rows = []
    for i in range(1, width + 1):
        row = []
        for j in range(1, width + 1):
            idx = lbar[i - 1] - i + j
            row.append(etab[idx] if 0 <= idx <= n else 0)
        rows.append(row)
    return _det_auto(rows, track)


def _check_distinct(coords, track: str):
    n = len(coords)
    if track == _NUMERIC:
        xs = [complex(x) for x in coords]
        scale = max((abs(x) for x in xs), default=0.0) or 1.0
        for m in range(n):
            for l in range(m + 1, n):
                if abs(xs[m] - xs[l]) <= 1e-10 * scale:
                    raise DegenerateInputError(
                        "coincident coordinates; use schur_jacobi_trudi instead"
                    )
    else:
        for m in range(n):
            for l in range(m + 1, n):
                if coords[m] == coords[l]:
                    raise DegenerateInputError(
                        "coincident coordinates; use schur_jacobi_trudi instead"
                    )


def schur_bialternant(lam, coords):
    """Schur value as the ratio of alternants (requires distinct coordinates)."""
    lam = Partition(lam)
    coords = tuple(coords)
    n = len(coords)
    if len(lam) > n:
        raise ValueError("partition has more parts than coordinates")
    track = _classify(coords)
    _check_distinct(coords, track)
    padded = tuple(lam) + (0,) * (n - len(lam))
    num_rows = [[coords[j] ** (padded[k] + n - 1 - k) for k in range(n)] for j in range(n)]
    den_rows = [[coords[j] ** (n - 1 - k) for k in range(n)] for j in range(n)]
    num = _det_auto(num_rows, track)
    den = _det_auto(den_rows, track)
    if track == _LAURENT:
        num = num if isinstance(num, LaurentPoly) else LaurentPoly.const(num)
        return num.exact_div(den)
    if track == _RATIONAL:
        out = Fraction(num) / Fraction(den)
        return int(out) if out.denominator == 1 else out
    return num / den


def schur_ssyt_oracle(lam, coords, max_weight: int = 12, max_vars: int = 6):
    """Schur value as a sum over semistandard tableaux (test oracle only).

    Rows weakly increase, columns strictly increase, entries in 1..len(coords).
    """
    lam = Partition(lam)
    coords = tuple(coords)
    n = len(coords)
    if lam.weight > max_weight or n > max_vars:
        raise EnumerationBudgetError(
            f"tableau enumeration budget is |shape| <= {max_weight}, vars <= {max_vars}"
        )
    if len(lam) > n:
        return 0
    if not lam:
        return 1

    total = 0

    def fill_row(i: int, above: tuple[int, ...], acc):
        nonlocal total
        length = lam[i]

        def rec(j: int, prev: int, row: list[int], weight):
            nonlocal total
            if j == length:
                if i + 1 == len(lam):
                    total += weight
                else:
                    fill_row(i + 1, tuple(row), weight)
                return
            lo = prev
            if i > 0:
                lo = max(lo, above[j] + 1)
            for v in range(lo, n + 1):
                row.append(v)
                rec(j + 1, v, row, weight * coords[v - 1])
                row.pop()

        rec(0, 1, [], acc)

    fill_row(0, (), 1)
    return total


def kernel_entry(z, exponent: int):
    """(1 - z**m)/(1 - z) with the analytic value m at z = 1.

    Numeric track: the closed form away from z = 1, the explicit geometric
    sum near it (the closed form loses precision there); exact track: the
    geometric sum always.
    """
    if isinstance(z, (LaurentPoly, Fraction, int)):
        if z == 1:
            return exponent
        if isinstance(z, LaurentPoly):
            out = LaurentPoly.const(0)
            p = LaurentPoly.const(1)
            for _ in range(exponent):
                out = out + p
                p = p * z
            return out
        return (1 - z**exponent) / (1 - z)
    zc = complex(z)
    if abs(zc - 1.0) > 1e-8:
        return (1.0 - zc**exponent) / (1.0 - zc)
    total = 0.0 + 0.0j
    p = 1.0 + 0.0j
    for _ in range(exponent):
        total += p
        p *= zc
    return total


def binet_cauchy_kernel(L: int, n: int, y, x):
    """Restricted two-sided Schur sum in determinant form.

    Equals sum over partitions with N parts in [n, L] of S(y) * S(x); the
    matrix entries are geometric kernels in x_k * y_j with exponent
    N + L - n, and the prefactor is prod (x_l y_l)^n over the Vandermondes.
    """
    x = tuple(x)
    y = tuple(y)
    if len(x) != len(y):
        raise ValueError("coordinate tuples must have equal length")
    if not 0 <= n <= L:
        raise ValueError("need 0 <= n <= L")
    N = len(x)
    if N == 0:
        return 1
    track = _classify(x + y)
    _check_distinct(x, track)
    _check_distinct(y, track)
    m = N + L - n
    rows = [[kernel_entry(x[k] * y[j], m) for j in range(N)] for k in range(N)]
    det = _det_auto(rows, track)
    pref = 1
    for xl, yl in zip(x, y):
        pref = pref * (xl * yl) ** n
    vy = vandermonde(y)
    vx = vandermonde(x)
    if track == _LAURENT:
        det = det if isinstance(det, LaurentPoly) else LaurentPoly.const(det)
        out = det.exact_div(vy * vx)
        return pref * out
    return pref * det / (vy * vx)


def _box_sum_budget(max_part: int, length: int, max_terms: int):
    n_terms = comb(max_part + length, length)
    if n_terms > max_terms:
        raise EnumerationBudgetError(
            f"partition sum has {n_terms} terms, budget is {max_terms}"
        )


def binet_cauchy_bruteforce(L: int, n: int, y, x, max_terms: int = 10**6):
    """Direct sum of S(y)*S(x) over partitions with all N parts in [n, L]."""
    x = tuple(x)
    y = tuple(y)
    if len(x) != len(y):
        raise ValueError("coordinate tuples must have equal length")
    if not 0 <= n <= L:
        raise ValueError("need 0 <= n <= L")
    N = len(x)
    _box_sum_budget(L - n, N, max_terms)
    total = 0
    for mu in enumerate_partitions_in_box(L - n, N):
        lam = tuple(mu) + (0,) * (N - len(mu))
        lam = tuple(v + n for v in lam)
        total = total + schur_jacobi_trudi(lam, y) * schur_jacobi_trudi(lam, x)
    return total


def padded_schur_sum_bruteforce(K: int, n: int, v, u, max_terms: int = 10**6):
    """Sum of S_padded(v^-2) * S(u^2) over partitions in a K x (N-n) box.

    v has N entries and u has N-n; each partition of at most N-n parts is
    zero-padded to exactly N parts before the v-side evaluation (padding is
    explicit here even though trailing zero parts do not change the value).
    """
    v = tuple(v)
    u = tuple(u)
    N = len(v)
    if not 0 <= n <= N or len(u) != N - n:
        raise ValueError("need len(v) = N, len(u) = N - n with 0 <= n <= N")
    if K < 0:
        raise ValueError("box width K must be non-negative")
    _box_sum_budget(K, N - n, max_terms)
    vm2 = tuple(x ** (-2) for x in v)
    u2 = tuple(x * x for x in u)
    total = 0
    for mu in enumerate_partitions_in_box(K, N - n):
        lam = tuple(mu) + (0,) * (N - n - len(mu))
        lam_hat = lam + (0,) * n
        total = total + schur_jacobi_trudi(lam_hat, vm2) * schur_jacobi_trudi(lam, u2)
    return total
