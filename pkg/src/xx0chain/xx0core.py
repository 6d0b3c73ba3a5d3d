"""Magnon-sector machinery of the XX0 ring and its thermal correlators.

Quantum numbers, roots, energies and norms; scalar products and
form-factors in determinant form; single- and multi-walker transition
amplitudes; and the two persistence correlators, each with an independent
determinant path and a spectral-sum path.

Momentum grids: the propagator entries are discrete heat kernels on the
ring, and the correct single-particle grid depends on the parity of the
occupied sector - the grid solves exp(i(M+1)phi) = (-1)^(N-1), which is
exactly the set of admissible root values for N particles.  A fixed grid
independent of N reproduces neither exact diagonalization nor the n = 0
normalization on every chain length, so all amplitude tables here carry
the sector parity.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb, cos, pi
from typing import Iterator

import numpy as np

from .errors import DegenerateInputError, EnumerationBudgetError
from .schur import binet_cauchy_kernel, kernel_entry, schur_jacobi_trudi, vandermonde

__all__ = [
    "ChainParams",
    "BetheState",
    "CorrelatorResult",
    "ground_state",
    "energy",
    "enumerate_bethe_states",
    "norm_squared",
    "scalar_product",
    "efp_formfactor",
    "domain_wall_formfactor",
    "walker_amplitude",
    "walker_amplitude_multi",
    "amplitude_table",
    "persistence_ferro",
    "persistence_domain_wall",
]

PIVOT_RATIO_WARNING = 1e10
SPECTRAL_BUDGET = 10**6


@dataclass(frozen=True)
class ChainParams:
    """Ring of M+1 sites with N down spins."""

    M: int
    N: int

    def __post_init__(self):
        if self.M < 0 or not 0 <= self.N <= self.M + 1:
            raise ValueError(f"need 0 <= N <= M+1, got M={self.M}, N={self.N}")

    @property
    def K(self) -> int:
        return self.M + 1 - self.N


@dataclass(frozen=True)
class BetheState:
    """Admissible quantum numbers and the roots they parametrize.

    quantum_numbers is strictly decreasing in 0..M; root j is
    2*pi/(M+1) * (I_j - (N-1)/2), so exp(i(M+1)theta) = (-1)^(N-1) exactly.
    """

    M: int
    N: int
    quantum_numbers: tuple[int, ...]
    roots: tuple[float, ...] = field(init=False)

    def __post_init__(self):
        ChainParams(self.M, self.N)
        I = tuple(int(x) for x in self.quantum_numbers)
        object.__setattr__(self, "quantum_numbers", I)
        if len(I) != self.N:
            raise ValueError("need exactly N quantum numbers")
        if any(I[j] <= I[j + 1] for j in range(len(I) - 1)):
            raise ValueError("quantum numbers must be strictly decreasing")
        if I and (I[0] > self.M or I[-1] < 0):
            raise ValueError("quantum numbers must lie in 0..M")
        shift = (self.N - 1) / 2.0
        roots = tuple(2.0 * pi / (self.M + 1) * (i - shift) for i in I)
        object.__setattr__(self, "roots", roots)


def ground_state(M: int, N: int) -> BetheState:
    """Lowest-energy state: quantum numbers N-1, N-2, ..., 0."""
    return BetheState(M, N, tuple(range(N - 1, -1, -1)))


def energy(state: BetheState) -> float:
    """Eigen-energy -sum_j cos(theta_j)."""
    return -sum(cos(t) for t in state.roots)


def enumerate_bethe_states(M: int, N: int, max_states: int = SPECTRAL_BUDGET) -> Iterator[BetheState]:
    """All C(M+1, N) states, in descending lexicographic quantum-number order."""
    ChainParams(M, N)
    total = comb(M + 1, N)
    if total > max_states:
        raise EnumerationBudgetError(f"sector has {total} states, budget is {max_states}")
    for asc in combinations(range(M, -1, -1), N):
        yield BetheState(M, N, asc)


def norm_squared(state: BetheState) -> float:
    """(M+1)^N over the squared modulus of the root Vandermonde."""
    M, I = state.M, state.quantum_numbers
    den = 1.0
    for m in range(len(I)):
        for l in range(m + 1, len(I)):
            den *= 2.0 * (1.0 - cos(2.0 * pi / (M + 1) * (I[l] - I[m])))
    return (M + 1) ** state.N / den


def _lu_det(rows) -> tuple[complex, float]:
    """Partial-pivoted LU determinant of a small complex matrix.

    Returns (det, pivot ratio max|p|/min|p|); the ratio is inf when singular.
    """
    a = np.array(rows, dtype=complex)
    n = a.shape[0] if a.ndim == 2 else 0
    if n == 0:
        return 1.0 + 0.0j, 1.0
    det = 1.0 + 0.0j
    piv_max, piv_min = 0.0, float("inf")
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[p, k]) == 0.0:
            return 0.0 + 0.0j, float("inf")
        if p != k:
            a[[k, p]] = a[[p, k]]
            det = -det
        piv = a[k, k]
        det *= piv
        piv_max = max(piv_max, abs(piv))
        piv_min = min(piv_min, abs(piv))
        if k + 1 < n:
            a[k + 1:, k + 1:] -= np.outer(a[k + 1:, k] / piv, a[k, k + 1:])
    return complex(det), piv_max / piv_min


def scalar_product(v, u, M: int) -> complex:
    """Overlap of a bra at parameters v with a ket at parameters u.

    Determinant of geometric kernels in u_k^2 / v_j^2 with exponent M+1,
    normalized by the two Vandermondes; diagonal-degenerate entries take
    their analytic value M+1.
    """
    v = tuple(v)
    u = tuple(u)
    if len(v) != len(u):
        raise ValueError("parameter tuples must have equal length")
    N = len(u)
    if N == 0:
        return 1.0 + 0.0j
    u2 = [complex(x) ** 2 for x in u]
    vm2 = [complex(x) ** (-2) for x in v]
    _require_distinct(u2, "ket")
    _require_distinct(vm2, "bra")
    rows = [[kernel_entry(u2[k] * vm2[j], M + 1) for j in range(N)] for k in range(N)]
    det, _ = _lu_det(rows)
    return det / (vandermonde(u2) * vandermonde(vm2))


def _require_distinct(points, which: str):
    scale = max(abs(p) for p in points) or 1.0
    for m in range(len(points)):
        for l in range(m + 1, len(points)):
            if abs(points[m] - points[l]) <= 1e-10 * scale:
                raise DegenerateInputError(
                    f"coincident {which} coordinates; use the brute-force Schur sum instead"
                )


def efp_formfactor(state: BetheState, n: int) -> float:
    """Probability that sites 0..n-1 all hold up spins in the given eigenstate.

    det(I - K_n) with the sine kernel over the state's roots; the diagonal
    takes the analytic value n/(M+1).
    """
    M, N = state.M, state.N
    if not 0 <= n <= M + 1:
        raise ValueError("need 0 <= n <= M+1")
    if N == 0:
        return 1.0
    th = np.asarray(state.roots)
    d = th[:, None] - th[None, :]
    K = np.empty((N, N), dtype=complex)
    off = ~np.eye(N, dtype=bool)
    K[off] = (
        np.exp(1j * (n - 1) * d[off] / 2.0)
        * np.sin(n * d[off] / 2.0)
        / ((M + 1) * np.sin(d[off] / 2.0))
    )
    K[~off] = n / (M + 1)
    det, _ = _lu_det(np.eye(N) - K)
    if abs(det.imag) > 1e-9 * max(1.0, abs(det.real)):
        raise ArithmeticError(f"probability came out non-real: {det}")
    return det.real


def domain_wall_formfactor(v, u, n: int, M: int) -> complex:
    """Transition element that inserts n adjacent down spins.

    v carries N parameters, u carries N-n.  The matrix stacks N-n rows of
    geometric kernels in u_k^2/v_j^2 (exponent M+1) over n monomial rows
    v_j^(-2(N-k)); the determinant is divided by both Vandermondes.
    """
    v = tuple(v)
    u = tuple(u)
    N = len(v)
    if not 0 <= n <= N or len(u) != N - n:
        raise ValueError("need len(v) = N and len(u) = N - n")
    if N == 0:
        return 1.0 + 0.0j
    u2 = [complex(x) ** 2 for x in u]
    vm2 = [complex(x) ** (-2) for x in v]
    if u2:
        _require_distinct(u2, "ket")
    _require_distinct(vm2, "bra")
    rows = []
    for k in range(1, N - n + 1):
        rows.append([kernel_entry(u2[k - 1] * vm2[j - 1], M + 1) for j in range(1, N + 1)])
    for k in range(N - n + 1, N + 1):
        rows.append([vm2[j - 1] ** (N - k) for j in range(1, N + 1)])
    det, _ = _lu_det(rows)
    vu = vandermonde(u2) if u2 else 1.0
    return det / (vu * vandermonde(vm2))


# -- walker amplitudes --------------------------------------------------


def _momentum_grid(M: int, parity_even_sector: bool) -> np.ndarray:
    # Solutions of exp(i(M+1)phi) = -1 for even particle number, +1 for odd.
    offset = 0.5 if parity_even_sector else 0.0
    return 2.0 * pi / (M + 1) * (np.arange(M + 1) + offset)


@lru_cache(maxsize=64)
def _amplitude_table_cached(M: int, beta: complex, parity_even: bool) -> np.ndarray:
    phi = _momentum_grid(M, parity_even)
    w = np.exp(beta * np.cos(phi)) / (M + 1)
    d = np.arange(-M, M + 1)
    f = np.exp(1j * np.outer(d, phi)) @ w
    idx = np.subtract.outer(np.arange(M + 1), np.arange(M + 1)) + M
    table = f[idx]
    table.setflags(write=False)
    return table


def amplitude_table(M: int, beta, n_particles: int = 1) -> np.ndarray:
    """Read-only (M+1) x (M+1) table of single-step heat-kernel amplitudes.

    Entry [k, l] is the generating function of one walker travelling from
    site l to site k, built on the momentum grid of the n_particles sector
    (only the parity of n_particles matters).
    """
    if M < 0 or n_particles < 1:
        raise ValueError("need M >= 0 and n_particles >= 1")
    return _amplitude_table_cached(M, complex(beta), n_particles % 2 == 0)


def walker_amplitude(k: int, l: int, beta, M: int) -> complex:
    """Single-walker amplitude between sites l and k at inverse temperature beta."""
    if not (0 <= k <= M and 0 <= l <= M):
        raise ValueError("sites must lie in 0..M")
    return complex(amplitude_table(M, beta, 1)[k, l])


def walker_amplitude_multi(mu_left, mu_right, beta, M: int) -> complex:
    """Amplitude for N non-colliding walkers: determinant of single-walker entries.

    Endpoints are strictly decreasing site tuples of equal length; the
    single-walker table is built on the N-particle momentum grid.
    """
    mu_left = tuple(mu_left)
    mu_right = tuple(mu_right)
    if len(mu_left) != len(mu_right):
        raise ValueError("endpoint tuples must have equal length")
    for t in (mu_left, mu_right):
        if any(t[i] <= t[i + 1] for i in range(len(t) - 1)):
            raise ValueError("endpoints must be strictly decreasing")
        if t and (t[0] > M or t[-1] < 0):
            raise ValueError("endpoints must lie in 0..M")
    N = len(mu_left)
    if N == 0:
        return 1.0 + 0.0j
    F = amplitude_table(M, beta, N)
    rows = [[F[mu_left[k], mu_right[l]] for l in range(N)] for k in range(N)]
    det, _ = _lu_det(rows)
    return det


# -- persistence correlators ---------------------------------------------


@dataclass(frozen=True)
class CorrelatorResult:
    value: complex
    method: str
    params: tuple
    warnings: tuple[str, ...] = ()


def _phase_matrix(roots, lo: int, hi: int) -> np.ndarray:
    # rows: roots; columns: site index l in lo..hi; entry exp(i*l*theta)
    th = np.asarray(roots)
    ls = np.arange(lo, hi + 1)
    return np.exp(1j * np.outer(th, ls))


def _ferro_det_value(M: int, N: int, n: int, beta) -> tuple[complex, float]:
    gs = ground_state(M, N)
    if N == 0:
        return 1.0 + 0.0j, 1.0
    F = amplitude_table(M, beta, N)
    U = _phase_matrix(gs.roots, n, M)
    G = U @ F[n:, n:].T @ U.conj().T
    det, ratio = _lu_det(G)
    value = cmath.exp(complex(beta) * energy(gs)) * det / (M + 1) ** N
    return value, ratio


@lru_cache(maxsize=256)
def _ferro_spectral_terms(M: int, N: int, n: int):
    gs = ground_state(M, N)
    K = M + 1 - N
    xg = tuple(cmath.exp(1j * t) for t in gs.roots)
    terms = []
    for state in enumerate_bethe_states(M, N):
        if n > K:
            # no room for n empty sites next to N down spins: empty partition sum
            terms.append((energy(state), 0.0))
            continue
        y = tuple(cmath.exp(-1j * t) for t in state.roots)
        V = vandermonde(tuple(cmath.exp(1j * t) for t in state.roots))
        P = binet_cauchy_kernel(K, n, y, xg)
        terms.append((energy(state), abs(V * P) ** 2))
    return energy(gs), norm_squared(gs), tuple(terms)


def persistence_ferro(
    M: int, N: int, n: int, beta, method: str = "determinant", max_states: int = SPECTRAL_BUDGET
) -> CorrelatorResult:
    """Thermal correlator of the n-site empty-string projector on the ground state.

    The determinant path contracts the walker table against ground-state
    phases; the spectral path sums the kernel form-factor over every state
    in the sector.  Either path yields 1 identically at n = 0, where the
    projector is the identity.
    """
    ChainParams(M, N)
    if not 0 <= n <= M + 1:
        raise ValueError("need 0 <= n <= M+1")
    params = (M, N, n, beta)
    if n == 0:
        return CorrelatorResult(1.0 + 0.0j, method, params)
    warnings: tuple[str, ...] = ()
    if method == "determinant":
        value, ratio = _ferro_det_value(M, N, n, beta)
        if ratio > PIVOT_RATIO_WARNING:
            warnings = (f"ill-conditioned determinant (pivot ratio {ratio:.2e})",)
    elif method == "spectral_sum":
        if comb(M + 1, N) > max_states:
            raise EnumerationBudgetError("spectral sum exceeds sector budget")
        e0, nrm2, terms = _ferro_spectral_terms(M, N, n)
        acc = 0.0 + 0.0j
        for e, w in terms:
            acc += cmath.exp(-complex(beta) * (e - e0)) * w
        value = acc / (nrm2 * (M + 1) ** N)
    else:
        raise ValueError(f"unknown method {method!r}")
    value = _realify(value, warnings_out := list(warnings), beta)
    return CorrelatorResult(value, method, params, tuple(warnings_out))


def _realify(value: complex, warnings: list[str], beta) -> complex:
    if isinstance(beta, complex) and beta.imag != 0:
        return value
    if abs(value.imag) > 1e-9 * max(1.0, abs(value.real)):
        warnings.append(f"imaginary part {value.imag:.3e} exceeds reality tolerance")
    return value


@lru_cache(maxsize=256)
def _dw_spectral_terms(M: int, N: int, n: int):
    # weights |V * sum_lam S_lam(exp(-i theta)) S_lam(exp(i theta_gs))|^2
    # summed over the N-particle sector; the bra/ket ground state has N-n particles
    from .combinat import enumerate_partitions_in_box

    K = M + 1 - N
    gs = ground_state(M, N - n)
    xg = tuple(cmath.exp(1j * t) for t in gs.roots)
    lams = []
    for mu in enumerate_partitions_in_box(K, N - n):
        lam = tuple(mu) + (0,) * (N - n - len(mu))
        lams.append((lam, schur_jacobi_trudi(lam, xg) if lam else 1))
    terms = []
    for state in enumerate_bethe_states(M, N):
        y = tuple(cmath.exp(-1j * t) for t in state.roots)
        inner = 0.0 + 0.0j
        for lam, s_g in lams:
            inner += schur_jacobi_trudi(lam, y) * s_g
        V = vandermonde(tuple(cmath.exp(1j * t) for t in state.roots))
        terms.append((energy(state), abs(V * inner) ** 2))
    return energy(gs), norm_squared(gs), tuple(terms)


def _dw_det_value(M: int, N: int, n: int, beta) -> tuple[complex, float]:
    Nn = N - n
    gs = ground_state(M, Nn)
    F = amplitude_table(M, beta, N)
    blocks = np.zeros((N, N), dtype=complex)
    if Nn:
        U = _phase_matrix(gs.roots, 0, M)
        blocks[:Nn, :Nn] = U @ F.T @ U.conj().T
        for j in range(1, n + 1):
            blocks[:Nn, Nn + j - 1] = U @ F[n - j, :]
        for i in range(1, n + 1):
            blocks[Nn + i - 1, :Nn] = U.conj() @ F[:, n - i]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            blocks[Nn + i - 1, Nn + j - 1] = F[n - i, n - j]
    det, ratio = _lu_det(blocks)
    value = cmath.exp(complex(beta) * energy(gs)) * det / (M + 1) ** Nn
    return value, ratio


def persistence_domain_wall(
    M: int, N: int, n: int, beta, method: str = "determinant", max_states: int = SPECTRAL_BUDGET
) -> CorrelatorResult:
    """Thermal correlator of the n-site down-spin insertion on the (N-n)-ground state.

    The determinant path evaluates the N x N block matrix (kernel block,
    two single-sum strips, and a pure walker block) at the (N-n)-particle
    ground-state phases; the spectral path resolves the propagator over the
    full N-particle sector with zero-padded Schur sums.  At n = 0 both
    operators are the identity and the correlator is 1.
    """
    ChainParams(M, N)
    if not 0 <= n <= N:
        raise ValueError("need 0 <= n <= N")
    params = (M, N, n, beta)
    if n == 0:
        return CorrelatorResult(1.0 + 0.0j, method, params)
    warnings: tuple[str, ...] = ()
    if method == "determinant":
        value, ratio = _dw_det_value(M, N, n, beta)
        if ratio > PIVOT_RATIO_WARNING:
            warnings = (f"ill-conditioned determinant (pivot ratio {ratio:.2e})",)
    elif method == "spectral_sum":
        if comb(M + 1, N) > max_states:
            raise EnumerationBudgetError("spectral sum exceeds sector budget")
        e0, nrm2, terms = _dw_spectral_terms(M, N, n)
        acc = 0.0 + 0.0j
        for e, w in terms:
            acc += cmath.exp(-complex(beta) * (e - e0)) * w
        value = acc / (nrm2 * (M + 1) ** N)
    else:
        raise ValueError(f"unknown method {method!r}")
    value = _realify(value, warnings_out := list(warnings), beta)
    return CorrelatorResult(value, method, params, tuple(warnings_out))
