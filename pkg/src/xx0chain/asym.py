"""Barnes G-function, the Gaussian-ensemble normalization integral, and the
low-temperature estimates of both persistence correlators.

The estimates keep their undetermined multiplicative constants symbolic:
every asymptotic law is validated downstream as a slope or a ratio, never
as an absolute level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .boxcount import a_cspp, macmahon

__all__ = [
    "GLAISHER_A",
    "barnes_g_integer",
    "log_barnes_g",
    "mehta_integral",
    "phi_n",
    "big_phi",
    "AsymptoticEstimate",
    "ferro_asymptotic",
    "domain_wall_asymptotic",
    "decreasing_regime",
    "log_a_cspp",
    "log_box_count",
]

#: Glaisher-Kinkelin constant, the normalization of the large-z expansion.
GLAISHER_A = 1.2824271291006226369

_LOG_2PI = math.log(2.0 * math.pi)
_EXPANSION_CUTOFF = 20.0


@lru_cache(maxsize=None)
def barnes_g_integer(n: int) -> int:
    """G(n+1) = 0! * 1! * ... * (n-1)! as an exact integer, for 1 <= n <= 40."""
    if not 1 <= n <= 40:
        raise ValueError("integer Barnes values are provided for 1 <= n <= 40")
    out = 1
    fact = 1
    for k in range(1, n):
        fact *= k
        out *= fact
    return out


def _log_barnes_expansion(z: float) -> float:
    # constant term 1/12 - log A (the derivative of zeta at -1); with the
    # bare -log A the expansion misses every exact integer value by 1/12
    return (
        1.0 / 12.0
        - math.log(GLAISHER_A)
        + 0.5 * z * _LOG_2PI
        + (0.5 * z * z - 1.0 / 12.0) * math.log(z)
        - 0.75 * z * z
    )


def log_barnes_g(z: float) -> float:
    """log G(z+1) for z >= 1.

    Integer z <= 40 use the exact product; large z use the asymptotic
    expansion; everything else is shifted upward through the recursion
    log G(z+1) = log G(z+2) - log Gamma(z+1) until the expansion applies.
    """
    if z < 1:
        raise ValueError("log_barnes_g requires z >= 1")
    if float(z).is_integer() and z <= 40:
        return math.log(barnes_g_integer(int(z)))
    if z >= _EXPANSION_CUTOFF:
        return _log_barnes_expansion(z)
    shift = int(math.ceil(_EXPANSION_CUTOFF + 10.0 - z))
    out = _log_barnes_expansion(z + shift)
    for j in range(shift):
        out -= math.lgamma(z + j + 1)
    return out


def mehta_integral(N: int) -> float:
    """Gaussian-ensemble normalization: G(N+1) / (2*pi)^(N/2)."""
    if N < 1:
        raise ValueError("need N >= 1")
    if N <= 40:
        g = barnes_g_integer(N)  # = G(N+1)
        try:
            return float(g) / (2.0 * math.pi) ** (N / 2.0)
        except OverflowError:
            return math.exp(math.log(g) - 0.5 * N * _LOG_2PI)
    return math.exp(log_barnes_g(float(N)) - 0.5 * N * _LOG_2PI)


def phi_n(N: int) -> float:
    """sum_{k<=N} log(Gamma(k)/sqrt(2*pi)); the log of the Mehta value."""
    if N < 1:
        raise ValueError("need N >= 1")
    return sum(math.lgamma(k) for k in range(1, N + 1)) - 0.5 * N * _LOG_2PI


def big_phi(N: int, M: int, beta: float) -> float:
    """N^2 log(2*pi/(M+1)) - (N^2/2) log(beta) + 3*phi_N."""
    if N < 1 or M < 1 or beta <= 0:
        raise ValueError("need N, M >= 1 and beta > 0")
    return N * N * math.log(2.0 * math.pi / (M + 1)) - 0.5 * N * N * math.log(beta) + 3.0 * phi_n(N)


_EXACT_N_LIMIT = 64
_EXACT_P_LIMIT = 10**4


def log_a_cspp(N: int, P: int) -> float:
    """log of the column-strict count in an N x N x P box.

    Exact big-integer product for desk-scale arguments, Barnes G-ratios
    beyond (math.log takes arbitrary ints, so no overflow either way).
    """
    if N == 0:
        return 0.0
    if N <= _EXACT_N_LIMIT and P <= _EXACT_P_LIMIT:
        return math.log(a_cspp(N, P))
    # G^2(N+1) G(P+2+N) G(P+2-N) / (G(2N+1) G^2(P+2)); log_barnes_g(z) = log G(z+1)
    return (
        2.0 * log_barnes_g(N)
        + log_barnes_g(P + 1 + N)
        + log_barnes_g(P + 1 - N)
        - log_barnes_g(2 * N)
        - 2.0 * log_barnes_g(P + 1)
    )


def log_box_count(L: int, N: int, P: int) -> float:
    """log of the plane-partition count in an L x N x P box (exact or Barnes)."""
    if L == 0 or N == 0 or P == 0:
        return 0.0
    if max(L, N) <= _EXACT_N_LIMIT and P <= _EXACT_P_LIMIT:
        return math.log(macmahon(L, N, P))
    # G(L+1)G(N+1)G(L+N+P+1)G(P+1) / (G(L+N+1)G(L+P+1)G(N+P+1)); log_barnes_g(z) = log G(z+1)
    return (
        log_barnes_g(L)
        + log_barnes_g(N)
        - log_barnes_g(L + N)
        + log_barnes_g(L + N + P)
        + log_barnes_g(P)
        - log_barnes_g(L + P)
        - log_barnes_g(N + P)
    )


@dataclass(frozen=True)
class AsymptoticEstimate:
    """Log-scale estimate with its named additive pieces."""

    log_value: float
    pieces: dict[str, float]
    params: tuple

    def __post_init__(self):
        total = sum(self.pieces.values())
        if abs(total - self.log_value) > 1e-9 * max(1.0, abs(self.log_value)):
            raise AssertionError("pieces do not sum to the log value")


def ferro_asymptotic(M: int, N: int, n: int, beta: float) -> AsymptoticEstimate:
    """Low-temperature estimate of the empty-string correlator.

    log T ~ 2 log A_cspp(N, N, M-n) + Phi(N, M, beta): a squared boxed-count
    amplitude, the exactly-linear critical term -(N^2/2) log(beta), and the
    chain-size/Mehta term.
    """
    if n < 0 or M - n < N - 1:
        raise ValueError("need n >= 0 and M - n >= N - 1")
    pieces = {
        "amplitude": 2.0 * log_a_cspp(N, M - n),
        "critical_exponent": -0.5 * N * N * math.log(beta),
        "phi": N * N * math.log(2.0 * math.pi / (M + 1)) + 3.0 * phi_n(N),
    }
    return AsymptoticEstimate(sum(pieces.values()), pieces, (M, N, n, beta))


def domain_wall_asymptotic(M: int, N: int, n: int, beta: float) -> AsymptoticEstimate:
    """Low-temperature estimate of the down-spin-insertion correlator.

    log F ~ 2 log A(N-n, N, M-N+1) + Phi(N, M, beta).
    """
    if not 0 <= n <= N or M - N + 1 < 0:
        raise ValueError("need 0 <= n <= N and M >= N - 1")
    pieces = {
        "amplitude": 2.0 * log_box_count(N - n, N, M - N + 1),
        "critical_exponent": -0.5 * N * N * math.log(beta),
        "phi": N * N * math.log(2.0 * math.pi / (M + 1)) + 3.0 * phi_n(N),
    }
    return AsymptoticEstimate(sum(pieces.values()), pieces, (M, N, n, beta))


def decreasing_regime(T: float, M: int, N: int, n: int, amplitude_constant: float) -> bool:
    """Whether the estimated empty-string correlator decreases as M, N grow.

    True when T < N*M^2 / (c^2 (M-n)^4); the constant c is not fixed by the
    theory and must be supplied by the caller.
    """
    if amplitude_constant <= 0:
        raise ValueError("amplitude constant must be positive")
    return T < N * M * M / (amplitude_constant**2 * (M - n) ** 4)
