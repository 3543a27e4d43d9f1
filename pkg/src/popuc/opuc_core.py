"""Finite paraorthogonal systems on the unit circle.

A system is generated from truncated Verblunsky data (a_0 .. a_{N-1} in the
open unit disc, plus a unimodular closure parameter omega) by the Szego
recurrence

    Phi_{n+1}(z) = z Phi_n(z) - conj(a_n) Phi_n^*(z),

where the final step substitutes a_N = omega.  That closure pushes every
root of Phi_{N+1} onto the unit circle and turns the system into an
(N+1)-point discrete orthogonality problem: nodes are the roots, weights
come from the derivative of the final polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .complex_poly import (
    Polynomial,
    UnitCirclePoint,
    as_complex_array,
    derivative_at,
    evaluate,
    roots,
    star,
)
from .errors import ShapeError, SpectralValidityError, WeightError
from .tolerances import DEFAULT, Tolerances


@dataclass(frozen=True, eq=False)
class VerblunskySequence:
    """Truncated coefficient data: a_0 .. a_{N-1} plus unimodular omega."""

    a: np.ndarray
    omega: complex

    def __post_init__(self) -> None:
        arr = np.atleast_1d(np.asarray(self.a, dtype=np.complex128))
        if arr.ndim != 1 or arr.size < 1:
            raise ShapeError("need at least one Verblunsky coefficient")
        if not np.all(np.isfinite(arr)):
            raise ValueError("Verblunsky coefficients must be finite")
        mags = np.abs(arr)
        if np.any(mags > 1.0 - DEFAULT.verblunsky_margin):
            k = int(np.argmax(mags))
            raise ValueError(f"|a_{k}| = {mags[k]!r} violates the strict bound |a| < 1")
        w = complex(self.omega)
        if abs(abs(w) - 1.0) > DEFAULT.unimodular:
            raise ValueError(f"|omega| = {abs(w)!r} is not unimodular")
        object.__setattr__(self, "a", arr)
        object.__setattr__(self, "omega", w)

    @property
    def n(self) -> int:
        return self.a.size


@dataclass(frozen=True, eq=False)
class OpucSystem:
    """Verblunsky data plus the polynomial ladder Phi_0 .. Phi_{N+1} and norms h_0 .. h_N."""

    v: VerblunskySequence
    phis: tuple[Polynomial, ...]
    h: np.ndarray

    def __post_init__(self) -> None:
        n = self.v.n
        if len(self.phis) != n + 2:
            raise ShapeError(f"expected {n + 2} polynomials, got {len(self.phis)}")
        for k, p in enumerate(self.phis):
            if p.degree != k:
                raise ShapeError(f"ladder entry {k} has degree {p.degree}")
            if abs(p.leading - 1.0) > 1e-9:
                raise ShapeError(f"ladder entry {k} is not monic")
        h = np.asarray(self.h, dtype=np.float64)
        if h.shape != (n + 1,):
            raise ShapeError(f"expected {n + 1} squared norms, got shape {h.shape}")
        if h[0] != 1.0 or np.any(h <= 0.0):
            raise ValueError("squared norms must be positive with h_0 = 1")
        object.__setattr__(self, "phis", tuple(self.phis))
        object.__setattr__(self, "h", h)


@dataclass(frozen=True, eq=False)
class SpectralData:
    """Theta-sorted unimodular nodes with positive weights summing to one."""

    nodes: tuple[UnitCirclePoint, ...]
    weights: np.ndarray

    def __post_init__(self) -> None:
        nodes = tuple(self.nodes)
        if len(nodes) < 1:
            raise ShapeError("need at least one node")
        thetas = np.array([p.theta for p in nodes])
        if np.any(np.diff(thetas) <= 0.0):
            raise ShapeError("nodes must be strictly increasing in theta")
        w = np.asarray(self.weights, dtype=np.float64)
        if w.shape != (len(nodes),):
            raise ShapeError("one weight per node required")
        if np.any(w <= 0.0):
            raise WeightError(f"non-positive weight {float(np.min(w))!r}")
        total = float(np.sum(w))
        if abs(total - 1.0) > DEFAULT.weight_sum:
            raise WeightError(f"weights sum to {total!r}, expected 1")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", w)


def build_system(v: VerblunskySequence) -> OpucSystem:
    """Run the Szego recurrence through the unimodular closure a_N = omega."""
    phis = [Polynomial(np.array([1.0 + 0.0j]))]
    for k in range(v.n + 1):
        a_k = v.omega if k == v.n else complex(v.a[k])
        prev = phis[-1]
        nxt = np.zeros(k + 2, dtype=np.complex128)
        nxt[1:] = prev.coeffs
        nxt[: k + 1] -= np.conj(a_k) * star(prev, k).coeffs
        phis.append(Polynomial(nxt))
    h = np.ones(v.n + 1)
    h[1:] = np.cumprod(1.0 - np.abs(v.a) ** 2)
    return OpucSystem(v, tuple(phis), h)


def verblunsky_from_polys(phis: Sequence[Polynomial]) -> np.ndarray:
    """Read coefficients back off the ladder: a_k = -conj(Phi_{k+1}(0))."""
    if len(phis) < 2:
        raise ShapeError("need at least Phi_0 and Phi_1")
    for k, p in enumerate(phis):
        if p.degree != k:
            raise ShapeError(f"entry {k} has degree {p.degree}, expected {k}")
        if abs(p.leading - 1.0) > 1e-9:
            raise ShapeError(f"entry {k} is not monic")
    return np.array([-np.conj(p.coeffs[0]) for p in phis[1:]])


def spectrum(sys: OpucSystem, tol: Tolerances = DEFAULT) -> list[UnitCirclePoint]:
    """Theta-sorted roots of the final polynomial, snapped onto the circle."""
    pts = []
    for r in roots(sys.phis[-1], tol):
        drift = abs(abs(r) - 1.0)
        if drift > tol.spectrum_radius:
            raise SpectralValidityError(f"root radius off the circle by {drift:.3e}")
        pts.append(UnitCirclePoint(float(np.angle(r))))
    pts.sort()
    return pts


def weights(sys: OpucSystem, nodes: Sequence[UnitCirclePoint], tol: Tolerances = DEFAULT) -> SpectralData:
    """Quadrature weights w_s = h_N / (Phi'_{N+1}(z_s) conj(Phi_N(z_s))).

    On the circle conj(Phi_N)(1/z) equals conj(Phi_N(z)), which is what the
    denominator uses.  Each weight must come out real and positive, and the
    family must sum to one; violations raise WeightError.
    """
    z = as_complex_array(nodes)
    top = sys.phis[-1]
    under = sys.phis[-2]
    dvals = np.array([derivative_at(top, zz) for zz in z])
    nvals = np.array([evaluate(under, zz) for zz in z])
    raw = sys.h[-1] / (dvals * np.conj(nvals))
    bad = np.abs(raw.imag) > tol.weight_realness * np.abs(raw) + 1e-30
    if np.any(bad):
        k = int(np.argmax(np.abs(raw.imag)))
        raise WeightError(f"weight {k} has imaginary part {raw.imag[k]!r}")
    return SpectralData(tuple(nodes), raw.real)


def paraorthogonality_residual(sys: OpucSystem) -> float:
    """Max coefficient magnitude of star(Phi_{N+1}) + omega * Phi_{N+1}.

    The closure a_N = omega forces Phi_{N+1}^* = -omega Phi_{N+1}, so this
    vanishes for every valid system regardless of omega's phase.
    """
    top = sys.phis[-1]
    resid = star(top, top.degree).coeffs + sys.v.omega * top.coeffs
    return float(np.max(np.abs(resid)))


def orthogonality_residual(sys: OpucSystem, data: SpectralData) -> float:
    """Max deviation of the weighted Gram matrix of Phi_0 .. Phi_N from diag(h)."""
    z = as_complex_array(data.nodes)
    vals = np.array([[evaluate(p, zz) for zz in z] for p in sys.phis[:-1]])
    gram = (vals * data.weights) @ np.conj(vals.T)
    gram[np.diag_indices_from(gram)] -= sys.h
    return float(np.max(np.abs(gram)))
