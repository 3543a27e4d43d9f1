"""Shared corpus generators for the deterministic random tests."""

from __future__ import annotations

import numpy as np
from hypothesis import settings

from popuc import PersymmetricSeed, VerblunskySequence, make_persymmetric

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


def random_verblunsky(rng: np.random.Generator, n: int, max_mag: float = 0.85) -> VerblunskySequence:
    """Coefficients uniform in the disc of radius max_mag, omega uniform on the circle."""
    radius = max_mag * np.sqrt(rng.uniform(size=n))
    phase = rng.uniform(0.0, 2.0 * np.pi, n)
    omega = complex(np.exp(1j * rng.uniform(0.0, 2.0 * np.pi)))
    return VerblunskySequence(radius * np.exp(1j * phase), omega)


def random_persymmetric(rng: np.random.Generator, n: int, max_mag: float = 0.8) -> VerblunskySequence:
    """Self-dual data from a random seed; middle parameter bounded like the rest."""
    half = n // 2
    radius = max_mag * np.sqrt(rng.uniform(size=half))
    free = radius * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, half))
    mid = float(rng.uniform(-max_mag, max_mag)) if n % 2 else None
    omega = complex(np.exp(1j * rng.uniform(0.0, 2.0 * np.pi)))
    return make_persymmetric(PersymmetricSeed(free, omega, n, middle_r=mid))
