"""Closed-form example families and their cross-checks.

Each constructor returns a ``FamilyInstance`` bundling the coefficient data
with whatever closed forms the family admits (ladder polynomials, nodes,
weights).  ``verify_family`` rebuilds everything from the recurrence and
reports the worst deviation per closed form, so the instances double as
regression fixtures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .complex_poly import Polynomial, UnitCirclePoint, as_complex_array
from .errors import ShapeError
from .mirror import persymmetry_defect
from .opuc_core import (
    VerblunskySequence,
    build_system,
    orthogonality_residual,
    paraorthogonality_residual,
    spectrum,
    weights,
)
from .tolerances import DEFAULT, Tolerances

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True, eq=False)
class FamilyInstance:
    """Coefficient data plus the closed forms a family is known to satisfy."""

    name: str
    v: VerblunskySequence
    closed_form_phis: tuple[Polynomial, ...] | None = None
    closed_form_nodes: tuple[UnitCirclePoint, ...] | None = None
    closed_form_weights: np.ndarray | None = None
    persymmetric: bool = False


def free_family(n: int, nu: float = 0.0) -> FamilyInstance:
    """All coefficients zero; closure omega = exp(2*pi*i*nu).

    The ladder is the monomials, the final polynomial is
    z^(n+1) - 1/omega, nodes are equally spaced angles shifted by nu and
    every weight is 1 / (n + 1).
    """
    if n < 1:
        raise ShapeError("need n >= 1")
    omega = complex(np.exp(2j * np.pi * nu))
    v = VerblunskySequence(np.zeros(n, dtype=np.complex128), omega)
    phis = []
    for m in range(n + 1):
        c = np.zeros(m + 1, dtype=np.complex128)
        c[m] = 1.0
        phis.append(Polynomial(c))
    top = np.zeros(n + 2, dtype=np.complex128)
    top[n + 1] = 1.0
    top[0] = -np.conj(omega)
    phis.append(Polynomial(top))
    nodes = sorted(
        UnitCirclePoint(TWO_PI * (s - nu) / (n + 1)) for s in range(n + 1)
    )
    w = np.full(n + 1, 1.0 / (n + 1))
    return FamilyInstance("free", v, tuple(phis), tuple(nodes), w, persymmetric=True)


def _running_sum_poly(m: int, scale: float) -> Polynomial:
    # scale * (1 + 2 z + ... + (m + 1) z^m)
    return Polynomial(scale * np.arange(1, m + 2, dtype=np.float64))


def single_moment(n: int) -> FamilyInstance:
    """Coefficients a_k = -1/(k+2) with omega = -1.

    Ladder entries are running sums Phi_m = (1 + 2z + .. + (m+1)z^m)/(m+1),
    the final polynomial is 1 + z + .. + z^(n+1), nodes are the
    (n+2)-th roots of unity except 1, and the normalized weights are
    (2/(n+2)) sin^2(pi (s+1) / (n+2)).
    """
    if n < 1:
        raise ShapeError("need n >= 1")
    a = np.array([-1.0 / (k + 2) for k in range(n)], dtype=np.complex128)
    v = VerblunskySequence(a, -1.0 + 0.0j)
    phis = [_running_sum_poly(m, 1.0 / (m + 1)) for m in range(n + 1)]
    phis.append(Polynomial(np.ones(n + 2, dtype=np.complex128)))
    half = np.pi * (np.arange(n + 1) + 1.0) / (n + 2)
    nodes = tuple(UnitCirclePoint(2.0 * t) for t in half)
    w = (2.0 / (n + 2)) * np.sin(half) ** 2
    return FamilyInstance("single_moment", v, tuple(phis), nodes, w)


def single_moment_dual(n: int) -> FamilyInstance:
    """Mirror dual of the single-moment family: a_k = -1/(n-k+1), omega = -1.

    Shares nodes and the final polynomial with the primal family; the dual
    weights are flat, 1/(n+1), and the ladder is
    Phi_m = z^m + (z^m - 1) / ((n - m + 2)(z - 1)).
    """
    if n < 1:
        raise ShapeError("need n >= 1")
    a = np.array([-1.0 / (n - k + 1) for k in range(n)], dtype=np.complex128)
    v = VerblunskySequence(a, -1.0 + 0.0j)
    phis = []
    for m in range(n + 2):
        c = np.zeros(m + 1, dtype=np.complex128)
        c[m] = 1.0
        c[:m] += 1.0 / (n - m + 2)  # geometric sum (z^m - 1)/(z - 1)
        phis.append(Polynomial(c))
    half = np.pi * (np.arange(n + 1) + 1.0) / (n + 2)
    nodes = tuple(UnitCirclePoint(2.0 * t) for t in half)
    w = np.full(n + 1, 1.0 / (n + 1))
    return FamilyInstance("single_moment_dual", v, tuple(phis), nodes, w)


def single_moment_persymmetric(n: int) -> FamilyInstance:
    """The persymmetric system sharing the single-moment spectrum.

    With nu = pi / (2 (n + 2)): a_k = -sin(nu) / sin(nu (2k + 3)), omega = -1.
    Its weights are tan(nu) sin(theta_s / 2) at node angle theta_s, which is
    proportional to the square root of the single-moment weight.
    """
    if n < 1:
        raise ShapeError("need n >= 1")
    nu = np.pi / (2.0 * (n + 2))
    a = np.array(
        [-np.sin(nu) / np.sin(nu * (2 * k + 3)) for k in range(n)],
        dtype=np.complex128,
    )
    v = VerblunskySequence(a, -1.0 + 0.0j)
    half = np.pi * (np.arange(n + 1) + 1.0) / (n + 2)
    nodes = tuple(UnitCirclePoint(2.0 * t) for t in half)
    w = np.tan(nu) * np.sin(half)
    return FamilyInstance(
        "single_moment_persymmetric", v, None, nodes, w, persymmetric=True
    )


def _symmetric_poly_in_z(coeffs: np.ndarray, m: int) -> np.ndarray:
    # turn sum_j c_j x^j into z^m * (value at x = z + 1/z), ascending in z
    acc = np.zeros(2 * m + 1, dtype=np.complex128)
    base = np.array([1.0, 0.0, 1.0], dtype=np.complex128)  # 1 + z^2
    power = np.array([1.0 + 0.0j])
    for j in range(m + 1):
        c = coeffs[j] if j < coeffs.size else 0.0
        if c != 0.0:
            shifted = np.concatenate([np.zeros(m - j, dtype=np.complex128), power])
            acc[: shifted.size] += c * shifted
        power = np.convolve(power, base)
    return acc


def _divide_out_linear(coeffs: np.ndarray, root: complex) -> tuple[np.ndarray, complex]:
    # synthetic division of an ascending-coefficient polynomial by (w - root)
    d = coeffs.size - 1
    q = np.zeros(d, dtype=np.complex128)
    q[d - 1] = coeffs[d]
    for j in range(d - 1, 0, -1):
        q[j - 1] = coeffs[j] + root * q[j]
    remainder = coeffs[0] + root * q[0]
    return q, complex(remainder)


def krawtchouk_family(n: int, omega: complex, tol: Tolerances = DEFAULT) -> FamilyInstance:
    """Linear-coefficient family a_k = (omega + 1)(k + 1)/(n + 1) - 1.

    The ladder comes from symmetric Krawtchouk polynomials K_m rescaled by
    kappa with kappa^2 = 4 (omega + 1)^2 / (omega (n + 1)^2), a positive
    real.  With P_m(z) = z^m K_m((z + 1/z) / kappa) kappa^m the ladder is
    Phi_m(z^2) = (P_{m+1}(z) - A_m P_m(z)) / (z^2 - omega),
    A_m = (omega + 1)(n - m + 1)/(n + 1).  Nodes come from
    cos(theta_k / 2) = (2k/(n+1) - 1) cos(sigma/2), k = 0 .. n+1 with
    sigma = arg(omega); the candidate equal to omega itself is dropped.
    Weights are 1/(k! (n+1-k)!) times |sin(theta_k/2 - sigma/2)/sin(theta_k/2)|,
    normalized to sum one.  All node angles stay outside the arc
    |theta| < |sigma|.
    """
    if n < 1:
        raise ShapeError("need n >= 1")
    w_om = complex(omega)
    if abs(abs(w_om) - 1.0) > DEFAULT.unimodular:
        raise ValueError("omega must be unimodular")
    if abs(1.0 + w_om) < 1e-4:
        raise ValueError("omega too close to -1, the family degenerates")
    a = np.array(
        [(w_om + 1.0) * (k + 1.0) / (n + 1.0) - 1.0 for k in range(n)],
        dtype=np.complex128,
    )
    v = VerblunskySequence(a, w_om)

    kappa_sq = 4.0 * abs(1.0 + w_om) ** 2 / (n + 1.0) ** 2
    # scaled symmetric Krawtchouk ladder, ascending coefficients in x
    ktilde = [np.array([1.0 + 0.0j]), np.array([0.0, 1.0 + 0.0j])]
    for m in range(1, n + 2):
        recur = m * (n + 2.0 - m) / 4.0
        nxt = np.zeros(m + 2, dtype=np.complex128)
        nxt[1:] = ktilde[m]
        nxt[: ktilde[m - 1].size] -= kappa_sq * recur * ktilde[m - 1]
        ktilde.append(nxt)
    p_polys = [_symmetric_poly_in_z(ktilde[m], m) for m in range(n + 3)]

    phis = []
    for m in range(n + 2):
        a_m = (w_om + 1.0) * (n - m + 1.0) / (n + 1.0)
        num = p_polys[m + 1].copy()
        num[: p_polys[m].size] -= a_m * p_polys[m]
        odd_worst = float(np.max(np.abs(num[1::2]))) if num.size > 1 else 0.0
        if odd_worst > 1e-10:
            raise ValueError(f"ladder entry {m}: odd powers did not cancel ({odd_worst:.3e})")
        quotient, remainder = _divide_out_linear(num[::2], w_om)
        scale = max(1.0, float(np.max(np.abs(num))))
        if abs(remainder) > 1e-8 * scale:
            raise ValueError(f"ladder entry {m}: division remainder {abs(remainder):.3e}")
        phis.append(Polynomial(quotient))

    sigma = float(np.angle(w_om))
    ks = np.arange(n + 2)
    xs = (2.0 * ks / (n + 1.0) - 1.0) * np.cos(sigma / 2.0)
    half_angles = np.arccos(np.clip(xs, -1.0, 1.0))
    cand = np.exp(2j * half_angles)
    drop = int(np.argmin(np.abs(cand - w_om)))
    if abs(cand[drop] - w_om) > 1e-6:
        raise ValueError("no root candidate matches the closure parameter")
    kept = [int(k) for k in ks if k != drop]
    raw = np.empty(len(kept))
    for i, k in enumerate(kept):
        s_half = float(np.sin(half_angles[k]))
        if abs(s_half) < 1e-12:
            # reachable only when sigma = 0, where the two endpoint candidates
            # coincide at z = 1 and contribute jointly; the limit of the ratio
            # along sigma -> 0 is 2 cos(sigma / 2) -> 2, matching the merged
            # binomial masses C(n+1, 0) + C(n+1, n+1)
            ratio = 2.0
        else:
            ratio = abs(np.sin(half_angles[k] - sigma / 2.0)) / abs(s_half)
        raw[i] = ratio / (math.factorial(k) * math.factorial(n + 1 - k))
    raw /= raw.sum()
    nodes = [UnitCirclePoint(2.0 * float(half_angles[k])) for k in kept]
    order = np.argsort([p.theta for p in nodes])
    nodes_sorted = tuple(nodes[i] for i in order)
    w_sorted = raw[order]
    return FamilyInstance(
        "krawtchouk", v, tuple(phis), nodes_sorted, w_sorted, persymmetric=True
    )


def verify_family(inst: FamilyInstance, tol: Tolerances = DEFAULT) -> dict[str, float]:
    """Rebuild a family instance from the recurrence and report worst deviations.

    Keys present depend on which closed forms the instance carries:
    "phi" (coefficientwise ladder deviation), "nodes", "weights", always
    "orthogonality" and "paraorthogonality", and "persymmetry_defect" for
    families that claim it.
    """
    sys = build_system(inst.v)
    report: dict[str, float] = {}
    if inst.closed_form_phis is not None:
        if len(inst.closed_form_phis) != len(sys.phis):
            raise ShapeError("closed-form ladder has the wrong length")
        worst = 0.0
        for ours, closed in zip(sys.phis, inst.closed_form_phis):
            worst = max(worst, float(np.max(np.abs(ours.coeffs - closed.coeffs))))
        report["phi"] = worst
    nodes = spectrum(sys, tol)
    if inst.closed_form_nodes is not None:
        closed_z = as_complex_array(inst.closed_form_nodes)
        report["nodes"] = float(np.max(np.abs(closed_z - as_complex_array(nodes))))
    data = weights(sys, nodes, tol)
    if inst.closed_form_weights is not None:
        report["weights"] = float(np.max(np.abs(inst.closed_form_weights - data.weights)))
    report["orthogonality"] = orthogonality_residual(sys, data)
    report["paraorthogonality"] = paraorthogonality_residual(sys)
    if inst.persymmetric:
        report["persymmetry_defect"] = persymmetry_defect(inst.v)
    return report
