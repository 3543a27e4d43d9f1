"""Mirror duality, persymmetric construction and the three characterizations."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import random_persymmetric, random_verblunsky
from popuc import (
    NotPersymmetricError,
    PersymmetricSeed,
    ShapeError,
    UnitCirclePoint,
    VerblunskySequence,
    build_system,
    derivative_at,
    dual_weights,
    is_persymmetric,
    krawtchouk_family,
    make_persymmetric,
    mirror_dual,
    persymmetric_weights,
    persymmetry_defect,
    phi_n_values,
    principal_sqrt_unimodular,
    single_moment,
    single_moment_dual,
    single_moment_persymmetric,
    spectrum,
    verify_persymmetry_characterizations,
    weights,
)


def test_principal_sqrt():
    assert principal_sqrt_unimodular(1.0) == 1.0
    assert np.isclose(principal_sqrt_unimodular(-1.0), 1j)
    assert np.isclose(principal_sqrt_unimodular(1j), np.exp(0.25j * np.pi))
    # principal branch: argument taken in (-pi, pi]
    assert np.isclose(principal_sqrt_unimodular(np.exp(-0.1j)), np.exp(-0.05j))


@given(st.integers(min_value=1, max_value=12), st.integers(min_value=0, max_value=2**32 - 1))
def test_dual_is_an_involution(n, seed):
    rng = np.random.default_rng(seed)
    v = random_verblunsky(rng, n)
    again = mirror_dual(mirror_dual(v))
    assert float(np.max(np.abs(again.a - v.a))) <= 1e-14
    assert abs(again.omega - v.omega) <= 1e-14


def test_dual_of_running_sum_family():
    for n in range(1, 9):
        d = mirror_dual(single_moment(n).v)
        expect = single_moment_dual(n).v
        assert np.allclose(d.a, expect.a)
        assert np.isclose(d.omega, expect.omega)


def test_zero_sequence_is_self_dual():
    v = VerblunskySequence(np.zeros(5, dtype=complex), np.exp(0.7j))
    assert persymmetry_defect(v) <= 1e-16
    assert is_persymmetric(v)


def test_running_sum_is_not_persymmetric():
    for n in range(2, 7):
        assert not is_persymmetric(single_moment(n).v)
        assert persymmetry_defect(single_moment(n).v) > 1e-2


def test_make_persymmetric_even():
    v = make_persymmetric(PersymmetricSeed((0.3,), 1.0, 2))
    assert np.allclose(v.a, [0.3, -0.3])
    assert is_persymmetric(v)


def test_make_persymmetric_odd():
    v = make_persymmetric(PersymmetricSeed((0.2j,), 1.0, 3, middle_r=0.5))
    assert np.allclose(v.a, [0.2j, 0.5j, 0.2j])
    assert is_persymmetric(v)


def test_make_persymmetric_odd_rotated():
    # middle coefficient sits on the i * sqrt(omega) ray
    v = make_persymmetric(PersymmetricSeed((), 1j, 1, middle_r=0.4))
    assert np.allclose(v.a, [0.4j * np.exp(0.25j * np.pi)])
    assert is_persymmetric(v)


def test_seed_validation():
    with pytest.raises(ShapeError):
        PersymmetricSeed((0.1, 0.2), 1.0, 2)
    with pytest.raises(ValueError):
        PersymmetricSeed((1.2,), 1.0, 2)
    with pytest.raises(ValueError):
        PersymmetricSeed((0.1,), 2.0, 2)
    with pytest.raises(ShapeError):
        PersymmetricSeed((0.1,), 1.0, 3)  # odd n needs middle_r
    with pytest.raises(ShapeError):
        PersymmetricSeed((0.1,), 1.0, 2, middle_r=0.5)  # even n forbids it
    with pytest.raises(ValueError):
        PersymmetricSeed((0.1,), 1.0, 3, middle_r=1.5)
    with pytest.raises(ValueError):
        PersymmetricSeed((0.1,), 1.0, 2, epsilon=2)


def test_random_persymmetric_seeds_verify():
    rng = np.random.default_rng(43)
    for n in list(range(1, 13)):
        v = random_persymmetric(rng, n)
        assert persymmetry_defect(v) <= 1e-14


def test_dual_weights_of_running_sum_are_flat():
    for n in range(1, 8):
        sys_ = build_system(single_moment(n).v)
        hat = dual_weights(sys_)
        assert np.allclose(hat, np.full(n + 1, 1.0 / (n + 1)), atol=1e-12)


def test_weight_product_identity():
    # w * w_dual * |phi_top'|^2 / h_n == 1 at every node
    rng = np.random.default_rng(47)
    for _ in range(40):
        v = random_verblunsky(rng, int(rng.integers(1, 13)))
        sys_ = build_system(v)
        nodes = spectrum(sys_)
        w = weights(sys_, nodes).weights
        hat = dual_weights(sys_)
        top = sys_.phis[-1]
        dvals = np.abs([derivative_at(top, complex(p)) for p in nodes])
        combined = w * hat * dvals**2 / sys_.h[-1]
        assert float(np.max(np.abs(combined - 1.0))) <= 1e-8


def test_persymmetric_weights_match_dual():
    rng = np.random.default_rng(53)
    for n in range(1, 11):
        v = random_persymmetric(rng, n)
        sys_ = build_system(v)
        nodes = spectrum(sys_)
        w = weights(sys_, nodes).weights
        hat = dual_weights(sys_)
        assert float(np.max(np.abs(w - hat))) <= 1e-9


def test_persymmetric_weights_closed_form_flat():
    n = 4
    v = VerblunskySequence(np.zeros(n, dtype=complex), np.exp(0.9j))
    sys_ = build_system(v)
    nodes = spectrum(sys_)
    w = persymmetric_weights(nodes, sys_.h[-1])
    assert np.allclose(w, np.full(n + 1, 1.0 / (n + 1)))


def test_persymmetric_weights_two_nodes():
    nodes = (UnitCirclePoint(0.0), UnitCirclePoint(np.pi))
    w = persymmetric_weights(nodes, 1.0)
    assert np.allclose(w, [0.5, 0.5])


def test_persymmetric_weights_against_system():
    rng = np.random.default_rng(59)
    for n in range(1, 11):
        v = random_persymmetric(rng, n)
        sys_ = build_system(v)
        nodes = spectrum(sys_)
        w_direct = weights(sys_, nodes).weights
        w_closed = persymmetric_weights(nodes, sys_.h[-1])
        assert float(np.max(np.abs(w_direct - w_closed))) <= 1e-9


def test_phi_values_modulus():
    rng = np.random.default_rng(61)
    for n in range(1, 11):
        v = random_persymmetric(rng, n)
        sys_ = build_system(v)
        nodes = spectrum(sys_)
        for eps in (1, -1):
            vals = phi_n_values(nodes, v.omega, sys_.h[-1], eps)
            assert np.allclose(np.abs(vals), np.sqrt(sys_.h[-1]))


def test_phi_values_match_recurrence():
    # the closed phase formula reproduces the actual next-to-top values
    # for one of the two sign choices
    rng = np.random.default_rng(67)
    for n in range(1, 11):
        v = random_persymmetric(rng, n)
        sys_ = build_system(v)
        nodes = spectrum(sys_)
        actual = np.array([sys_.phis[n](complex(p)) for p in nodes])
        errs = []
        for eps in (1, -1):
            vals = phi_n_values(nodes, v.omega, sys_.h[-1], eps)
            errs.append(float(np.max(np.abs(vals - actual))))
        assert min(errs) <= 1e-9


def test_phi_values_consecutive_ratio():
    # sign alternation: ratio of consecutive values is -exp(i (n-1) dtheta / 2)
    n = 5
    rng = np.random.default_rng(71)
    v = random_persymmetric(rng, n)
    sys_ = build_system(v)
    nodes = spectrum(sys_)
    vals = phi_n_values(nodes, v.omega, sys_.h[-1], 1)
    thetas = np.array([p.theta for p in nodes])
    for s in range(n):
        expected = -np.exp(0.5j * (n - 1) * (thetas[s + 1] - thetas[s]))
        assert np.isclose(vals[s + 1] / vals[s], expected)


def test_characterizations_monomial():
    v = VerblunskySequence(np.zeros(4, dtype=complex), np.exp(0.4j))
    report = verify_persymmetry_characterizations(v)
    assert report.max_residual <= 1e-12
    assert report.epsilon in (1, -1)


def test_characterizations_krawtchouk():
    fam = krawtchouk_family(4, np.exp(1j * np.pi / 3))
    report = verify_persymmetry_characterizations(fam.v)
    assert report.max_residual <= 1e-8


def test_characterizations_running_sum_persymmetric():
    fam = single_moment_persymmetric(6)
    report = verify_persymmetry_characterizations(fam.v)
    assert report.max_residual <= 1e-8


def test_characterizations_random_corpus():
    rng = np.random.default_rng(73)
    for n in range(1, 13):
        v = random_persymmetric(rng, n)
        report = verify_persymmetry_characterizations(v)
        assert report.max_residual <= 1e-8, f"n={n}: {report}"


def test_characterizations_reject_non_persymmetric():
    with pytest.raises(NotPersymmetricError):
        verify_persymmetry_characterizations(single_moment(4).v)
