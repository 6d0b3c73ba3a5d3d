import cmath
from math import comb

import numpy as np
import pytest

from xx0chain.edoracle import (
    build_hamiltonian,
    build_state_vector,
    domain_wall_insertion,
    oracle_correlator,
    projector_empty_sites,
    sector_basis,
    thermal_operator,
)
from xx0chain.errors import EnumerationBudgetError
from xx0chain.xx0core import energy, enumerate_bethe_states, ground_state, norm_squared


def bethe_vector(state):
    u = tuple(cmath.exp(0.5j * t) for t in state.roots)
    return build_state_vector(u, state.M, state.N)


class TestBasis:
    def test_dimensions(self):
        assert sector_basis(4, 2).dim == comb(5, 2)
        assert sector_basis(3, 0).dim == 1

    def test_colex_order_is_bitmask_ascending(self):
        basis = sector_basis(4, 2)
        masks = [sum(1 << s for s in c) for c in basis.configurations]
        assert masks == sorted(masks)

    def test_budget(self):
        with pytest.raises(EnumerationBudgetError):
            sector_basis(20, 10)


class TestHamiltonian:
    def test_two_site_ring_frozen(self):
        H = build_hamiltonian(1, 1)
        assert np.allclose(H, [[0.0, -1.0], [-1.0, 0.0]])

    def test_empty_sector(self):
        H = build_hamiltonian(4, 0)
        assert H.shape == (1, 1) and H[0, 0] == 0.0

    def test_symmetric(self):
        for M, N in [(5, 2), (6, 3)]:
            H = build_hamiltonian(M, N)
            assert np.allclose(H, H.T)

    def test_spectrum_matches_root_energies(self):
        for M in range(1, 10):
            for N in (1, 2, 3):
                if N > M + 1:
                    continue
                H = build_hamiltonian(M, N)
                got = np.sort(np.linalg.eigvalsh(H))
                want = np.sort([energy(s) for s in enumerate_bethe_states(M, N)])
                assert np.allclose(got, want, atol=1e-9), (M, N)


class TestStateVectors:
    def test_single_particle_geometric(self):
        u = (0.8 + 0.1j,)
        vec = build_state_vector(u, 3, 1)
        basis = sector_basis(3, 1)
        for i, (site,) in enumerate(basis.configurations):
            assert vec[i] == pytest.approx(u[0] ** (2 * site))

    def test_eigen_residual(self):
        for M in range(2, 9):
            for N in (1, 2, 3):
                if N > M + 1:
                    continue
                H = build_hamiltonian(M, N)
                for state in enumerate_bethe_states(M, N):
                    v = bethe_vector(state)
                    r = H @ v - energy(state) * v
                    assert np.linalg.norm(r) <= 1e-9 * np.linalg.norm(v), (M, N, state)

    def test_squared_length_matches_norm_formula(self):
        for M in (4, 6):
            for N in (1, 2, 3):
                for state in enumerate_bethe_states(M, N):
                    v = bethe_vector(state)
                    got = np.vdot(v, v).real
                    assert got == pytest.approx(norm_squared(state), rel=1e-10)

    def test_completeness_gram_determinant(self):
        # normalized eigenvectors span the sector: |det Gram| = 1
        for M in range(2, 7):
            for N in (1, 2):
                vecs = []
                for state in enumerate_bethe_states(M, N):
                    v = bethe_vector(state)
                    vecs.append(v / np.linalg.norm(v))
                G = np.array([[np.vdot(a, b) for b in vecs] for a in vecs])
                assert abs(abs(np.linalg.det(G)) - 1.0) <= 1e-6


class TestOperators:
    def test_projector_diagonal(self):
        p = projector_empty_sites(4, 2, 1)
        basis = sector_basis(4, 2)
        for i, c in enumerate(basis.configurations):
            assert p[i] == (0.0 if 0 in c else 1.0)

    def test_insertion_maps_sectors(self):
        F = domain_wall_insertion(5, 3, 2)
        assert F.shape == (comb(6, 3), comb(6, 1))

    def test_insertion_projector_identity(self):
        # F^dagger F projects onto source configs with sites 0..n-1 empty
        for M, N, n in [(4, 2, 1), (5, 3, 2)]:
            F = domain_wall_insertion(M, N, n)
            got = F.T @ F
            want = np.diag(projector_empty_sites(M, N - n, n))
            assert np.allclose(got, want)

    def test_thermal_operator_is_identity_at_beta_zero(self):
        eop = thermal_operator(4, 2, 0.0)
        assert np.allclose(eop, np.eye(comb(5, 2)))


class TestAgainstClosedForms:
    def test_single_walker_amplitudes(self):
        from xx0chain.xx0core import walker_amplitude

        for M in range(1, 10):
            for k in range(M + 1):
                for l in range(M + 1):
                    want = oracle_correlator("walker", M, 1, beta=0.7, endpoints=((k,), (l,)))
                    assert walker_amplitude(k, l, 0.7, M) == pytest.approx(want, abs=1e-12)

    def test_multi_walker_amplitudes(self):
        from itertools import combinations

        from xx0chain.xx0core import walker_amplitude_multi

        for M in (3, 5, 7):
            for N in (2, 3):
                configs = [tuple(reversed(c)) for c in combinations(range(M + 1), N)][:5]
                for muL in configs:
                    for muR in configs:
                        want = oracle_correlator("walker", M, N, beta=0.9, endpoints=(muL, muR))
                        got = walker_amplitude_multi(muL, muR, 0.9, M)
                        assert got == pytest.approx(want, abs=1e-10), (M, N, muL, muR)

    def test_state_vector_length_for_free_parameters(self):
        from xx0chain.xx0core import scalar_product

        rng = np.random.default_rng(13)
        for M, N in [(4, 2), (6, 3)]:
            u = tuple(rng.uniform(0.6, 1.4, N) * np.exp(2j * np.pi * rng.uniform(0, 1, N)))
            vec = build_state_vector(u, M, N)
            # the matching bra has squared-inverse parameters conj(u^2)
            v = tuple(1.0 / np.conj(x) for x in u)
            want = scalar_product(v, u, M)
            assert np.vdot(vec, vec) == pytest.approx(want, rel=1e-10)

    def test_efp_matches_projected_expectation(self):
        from xx0chain.xx0core import efp_formfactor

        for M in range(2, 10):
            for N in (1, 2, 3):
                if N > M + 1:
                    continue
                gs = ground_state(M, N)
                for n in range(M + 2):
                    want = oracle_correlator("ferro", M, N, n, 0.0).real
                    assert efp_formfactor(gs, n) == pytest.approx(want, abs=1e-10), (M, N, n)


class TestOracleCorrelators:
    def test_ferro_identity(self):
        assert oracle_correlator("ferro", 5, 2, 0, 1.0) == pytest.approx(1.0)

    def test_walker_beta_zero(self):
        assert oracle_correlator("walker", 5, 2, beta=0.0, endpoints=((3, 1), (3, 1))) == pytest.approx(1.0)
        assert oracle_correlator("walker", 5, 2, beta=0.0, endpoints=((3, 1), (2, 0))) == pytest.approx(
            0.0, abs=1e-12
        )

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            oracle_correlator("mystery", 3, 1)
