"""Five-diagonal unitary matrices, quasi-reflections and sign patterns."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import random_persymmetric, random_verblunsky
from popuc import (
    LaurentEigenvector,
    NotPersymmetricError,
    ShapeError,
    VerblunskySequence,
    build_system,
    characteristic_polynomial,
    cmv_matrix,
    factors,
    laurent_eigenvector,
    mirror_dual,
    principal_sqrt_unimodular,
    quasi_reflection,
    spectrum,
    theta_block,
    unitarity_residual,
    verify_mirror_relations,
    persymmetric_sign_pattern,
)


def test_theta_block_values():
    assert np.allclose(theta_block(0.0), [[0, 1], [1, 0]])
    assert np.allclose(theta_block(0.6), [[0.6, 0.8], [0.8, -0.6]])
    b = theta_block(0.3j)
    assert np.isclose(b[0, 0], 0.3j)
    assert np.isclose(b[1, 1], 0.3j)  # -conj(0.3j) = 0.3j
    with pytest.raises(ValueError):
        theta_block(1.0)


def test_factor_layout_odd():
    rng = np.random.default_rng(3)
    v = random_verblunsky(rng, 3)
    m1, m2 = factors(v)
    assert m1[0, 0] == 1.0
    assert np.isclose(m1[1, 1], np.conj(v.a[1]))
    assert np.isclose(m1[2, 2], -v.a[1])
    assert np.isclose(m1[3, 3], np.conj(v.omega))
    assert np.isclose(m2[0, 0], np.conj(v.a[0]))
    assert np.isclose(m2[1, 1], -v.a[0])
    assert np.isclose(m2[2, 2], np.conj(v.a[2]))
    assert np.isclose(m2[3, 3], -v.a[2])
    # everything outside the blocks vanishes
    assert m1[0, 1] == 0 and m1[1, 3] == 0 and m2[1, 2] == 0


def test_factor_layout_even():
    rng = np.random.default_rng(7)
    v = random_verblunsky(rng, 4)
    m1, m2 = factors(v)
    assert m1[0, 0] == 1.0
    assert np.isclose(m1[1, 1], np.conj(v.a[1]))
    assert np.isclose(m1[3, 3], np.conj(v.a[3]))
    assert np.isclose(m2[4, 4], np.conj(v.omega))
    assert unitarity_residual(m1) <= 1e-14
    assert unitarity_residual(m2) <= 1e-14


def test_free_cmv_is_a_permutation():
    v = VerblunskySequence(np.zeros(3, dtype=complex), 1.0)
    u = cmv_matrix(v)
    expected = np.array(
        [
            [0, 0, 1, 0],
            [1, 0, 0, 0],
            [0, 0, 0, 1],
            [0, 1, 0, 0],
        ],
        dtype=complex,
    )
    assert np.array_equal(u, expected)
    assert unitarity_residual(u) == 0.0


def test_dual_factors_match_hand_built_pattern():
    # the dual factors carry entries -conj(omega) a_{n-1-k} on the upper left,
    # omega conj(a_{n-1-k}) on the lower right, and the reversed rho
    rng = np.random.default_rng(11)
    v = random_verblunsky(rng, 5)
    w = v.omega
    rho = np.sqrt(1.0 - np.abs(v.a) ** 2)
    size = 6
    mh1 = np.zeros((size, size), dtype=complex)
    mh2 = np.zeros((size, size), dtype=complex)
    mh1[0, 0] = 1.0
    for k in (1, 3):
        j = 4 - k
        mh1[k : k + 2, k : k + 2] = [
            [-np.conj(w) * v.a[j], rho[j]],
            [rho[j], w * np.conj(v.a[j])],
        ]
    mh1[5, 5] = np.conj(w)
    for k in (0, 2, 4):
        j = 4 - k
        mh2[k : k + 2, k : k + 2] = [
            [-np.conj(w) * v.a[j], rho[j]],
            [rho[j], w * np.conj(v.a[j])],
        ]
    g1, g2 = factors(mirror_dual(v))
    assert float(np.max(np.abs(g1 - mh1))) <= 1e-12
    assert float(np.max(np.abs(g2 - mh2))) <= 1e-12


def test_cmv_is_pentadiagonal():
    rng = np.random.default_rng(13)
    for _ in range(20):
        v = random_verblunsky(rng, int(rng.integers(1, 13)))
        u = cmv_matrix(v)
        i, j = np.indices(u.shape)
        off_band = np.abs(u[np.abs(i - j) > 2])
        assert float(np.max(off_band, initial=0.0)) <= 1e-14


def test_cmv_unitarity():
    rng = np.random.default_rng(17)
    for _ in range(30):
        v = random_verblunsky(rng, int(rng.integers(1, 13)))
        assert unitarity_residual(cmv_matrix(v)) <= 1e-12


def test_eigenvector_relation():
    rng = np.random.default_rng(19)
    for _ in range(30):
        v = random_verblunsky(rng, int(rng.integers(1, 13)))
        sys_ = build_system(v)
        u = cmv_matrix(v)
        for node in spectrum(sys_):
            psi = laurent_eigenvector(sys_, node).components
            resid = np.max(np.abs(u @ psi - complex(node) * psi))
            assert float(resid) / max(1.0, float(np.max(np.abs(psi)))) <= 1e-9


def test_characteristic_polynomial_matches_ladder_top():
    rng = np.random.default_rng(23)
    for n in range(1, 9):
        v = random_verblunsky(rng, n)
        sys_ = build_system(v)
        chi = characteristic_polynomial(cmv_matrix(v))
        assert float(np.max(np.abs(chi.coeffs - sys_.phis[-1].coeffs))) <= 1e-10


def test_numpy_eigenvalues_match_spectrum():
    rng = np.random.default_rng(27)
    for _ in range(20):
        v = random_verblunsky(rng, int(rng.integers(1, 13)))
        sys_ = build_system(v)
        eig = np.linalg.eigvals(cmv_matrix(v))
        z = np.array([complex(p) for p in spectrum(sys_)])
        # Hausdorff distance between the two point sets
        d = np.abs(eig[:, None] - z[None, :])
        assert float(max(d.min(axis=0).max(), d.min(axis=1).max())) <= 1e-8


def test_characteristic_polynomial_small_oracle():
    chi = characteristic_polynomial(np.array([[0.0, 1.0], [1.0, 0.0]]))
    assert np.allclose(chi.coeffs, [-1, 0, 1])
    with pytest.raises(ShapeError):
        characteristic_polynomial(np.zeros((2, 3)))


def test_laurent_pattern_for_monomials():
    n = 5
    v = VerblunskySequence(np.zeros(n, dtype=complex), np.exp(0.8j))
    sys_ = build_system(v)
    node = spectrum(sys_)[2]
    z = complex(node)
    psi = laurent_eigenvector(sys_, node).components
    expected = [1, z**-1, z, z**-2, z**2, z**-3]
    assert np.allclose(psi, expected)


def test_laurent_component_zero_validation():
    with pytest.raises(ValueError):
        LaurentEigenvector(np.array([2.0, 1.0], dtype=complex))
    with pytest.raises(ShapeError):
        LaurentEigenvector(np.zeros((2, 2), dtype=complex))


def test_quasi_reflection_layout():
    q = quasi_reflection(3, 1j).matrix
    expected = np.zeros((4, 4), dtype=complex)
    expected[0, 3] = 1j
    expected[1, 2] = -1j
    expected[2, 1] = 1j
    expected[3, 0] = -1j
    assert np.array_equal(q, expected)
    q1 = quasi_reflection(4, 1.0).matrix
    assert np.array_equal(q1, np.fliplr(np.eye(5)))


def test_quasi_reflection_validation():
    with pytest.raises(ValueError):
        quasi_reflection(3, 2.0)


@given(st.floats(min_value=0.0, max_value=2 * np.pi, exclude_max=True), st.integers(1, 6))
def test_quasi_reflection_odd_squares_to_identity(angle, half):
    n = 2 * half - 1
    tau = np.exp(1j * angle)
    q = quasi_reflection(n, tau).matrix
    assert float(np.max(np.abs(q @ q - np.eye(n + 1)))) <= 1e-12


@given(st.floats(min_value=0.0, max_value=2 * np.pi, exclude_max=True), st.integers(1, 6))
def test_quasi_reflection_even_pairing(angle, half):
    n = 2 * half
    tau = np.exp(1j * angle)
    q = quasi_reflection(n, tau).matrix
    qi = quasi_reflection(n, 1.0 / tau).matrix
    assert float(np.max(np.abs(q @ qi - np.eye(n + 1)))) <= 1e-12
    assert float(np.max(np.abs(q - q.T))) == 0.0
    eig = np.linalg.eigvals(q)
    allowed = np.array([tau, -tau, 1.0 / tau, -1.0 / tau])
    for lam in eig:
        assert float(np.min(np.abs(lam - allowed))) <= 1e-9


def test_mirror_relations_monomial():
    v = VerblunskySequence(np.zeros(4, dtype=complex), np.exp(1.9j))
    assert verify_mirror_relations(v).max_residual <= 1e-13


def test_mirror_relations_random_corpus():
    rng = np.random.default_rng(29)
    for n in range(1, 13):
        for _ in range(5):
            v = random_verblunsky(rng, n)
            report = verify_mirror_relations(v)
            assert report.max_residual <= 1e-10, f"n={n}: {report}"
            assert report.parity == ("odd" if n % 2 else "even")


def test_persymmetric_commutation():
    # for self-dual data with odd n the reflection commutes with the matrix
    rng = np.random.default_rng(31)
    for n in range(1, 13, 2):
        v = random_persymmetric(rng, n)
        u = cmv_matrix(v)
        tau = np.conj(principal_sqrt_unimodular(v.omega))
        q = quasi_reflection(n, tau).matrix
        assert float(np.max(np.abs(q @ u - u @ q))) <= 1e-10


def test_even_persymmetric_transport():
    # even n: reflecting and conjugating an eigenvector gives another
    # eigenvector of U with the same eigenvalue, tau^2 = omega
    rng = np.random.default_rng(37)
    for n in range(2, 13, 2):
        v = random_persymmetric(rng, n)
        sys_ = build_system(v)
        u = cmv_matrix(v)
        tau = principal_sqrt_unimodular(v.omega)
        qi = quasi_reflection(n, 1.0 / tau).matrix
        for node in spectrum(sys_):
            psi = laurent_eigenvector(sys_, node).components
            phi = qi @ np.conj(psi)
            resid = float(np.max(np.abs(u @ phi - complex(node) * phi)))
            assert resid / max(1.0, float(np.max(np.abs(phi)))) <= 1e-9


def test_sign_pattern_monomial():
    v = VerblunskySequence(np.zeros(3, dtype=complex), 1.0)
    signs = persymmetric_sign_pattern(v)
    assert signs in ([1, -1, 1, -1], [-1, 1, -1, 1])


def test_sign_pattern_random_corpus():
    rng = np.random.default_rng(41)
    for n in range(1, 13, 2):
        v = random_persymmetric(rng, n)
        signs = persymmetric_sign_pattern(v)
        assert len(signs) == n + 1
        eps = signs[0]
        assert signs == [eps * (-1) ** s for s in range(n + 1)]


def test_sign_pattern_input_gates():
    rng = np.random.default_rng(43)
    with pytest.raises(ShapeError):
        persymmetric_sign_pattern(random_persymmetric(rng, 4))
    with pytest.raises(NotPersymmetricError):
        persymmetric_sign_pattern(VerblunskySequence([0.5, 0.1, 0.0], 1.0))
