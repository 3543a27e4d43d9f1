"""CMV matrices, quasi-reflections and the spectral identities they satisfy.

The unitary matrix U = M2 @ M1 acts on the Laurent-polynomial basis built
from the ladder; its eigenvalues are exactly the spectrum of the final
polynomial.  Two entry conventions for the 2x2 rotation blocks circulate in
the literature, differing by conjugation of the coefficient.  The one used
by ``factors`` (conjugated coefficient on the upper-left, plain negated
coefficient on the lower-right, scalar tail conj(omega)) is the one that
reproduces the spectrum; the calibration test demonstrates the other choice
produces the conjugate system.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complex_poly import Polynomial, UnitCirclePoint, evaluate
from .errors import NotPersymmetricError, PersymmetryViolationError, ShapeError
from .mirror import is_persymmetric, mirror_dual, principal_sqrt_unimodular
from .opuc_core import OpucSystem, VerblunskySequence, build_system, spectrum
from .tolerances import DEFAULT, Tolerances


def theta_block(a: complex) -> np.ndarray:
    """2x2 rotation block [[a, rho], [rho, -conj(a)]] with rho = sqrt(1 - |a|^2)."""
    a = complex(a)
    if abs(a) >= 1.0 - DEFAULT.verblunsky_margin:
        raise ValueError(f"|a| = {abs(a)!r} must stay strictly inside the unit disc")
    rho = np.sqrt(1.0 - abs(a) ** 2)
    return np.array([[a, rho], [rho, -np.conj(a)]], dtype=np.complex128)


def _factors(v: VerblunskySequence, conjugate_blocks: bool) -> tuple[np.ndarray, np.ndarray]:
    # calibration knob: True is the convention validated by the spectral tests
    size = v.n + 1
    m1 = np.zeros((size, size), dtype=np.complex128)
    m2 = np.zeros((size, size), dtype=np.complex128)

    def block(a: complex) -> np.ndarray:
        return theta_block(np.conj(a)) if conjugate_blocks else theta_block(a)

    tail = np.conj(v.omega) if conjugate_blocks else v.omega
    m1[0, 0] = 1.0
    for k in range(1, v.n, 2):
        m1[k : k + 2, k : k + 2] = block(v.a[k])
    if v.n % 2 == 1:
        m1[v.n, v.n] = tail
    for k in range(0, v.n, 2):
        m2[k : k + 2, k : k + 2] = block(v.a[k])
    if v.n % 2 == 0:
        m2[v.n, v.n] = tail
    return m1, m2


def factors(v: VerblunskySequence) -> tuple[np.ndarray, np.ndarray]:
    """Block-diagonal unitary factors (M1, M2) of the CMV matrix U = M2 @ M1.

    M1 carries a leading scalar 1 and the odd-index blocks, M2 the
    even-index blocks; whichever factor runs out of blocks first ends in
    the scalar conj(omega).
    """
    return _factors(v, conjugate_blocks=True)


def cmv_matrix(v: VerblunskySequence) -> np.ndarray:
    """The (N+1) x (N+1) unitary five-diagonal matrix U = M2 @ M1."""
    m1, m2 = factors(v)
    return m2 @ m1


def unitarity_residual(m: np.ndarray) -> float:
    """Max deviation of m* m from the identity."""
    eye = np.eye(m.shape[0], dtype=np.complex128)
    return float(np.max(np.abs(np.conj(m.T) @ m - eye)))


@dataclass(frozen=True, eq=False)
class LaurentEigenvector:
    """Values of the orthonormal Laurent basis at one spectral point."""

    components: np.ndarray

    def __post_init__(self) -> None:
        c = np.asarray(self.components, dtype=np.complex128)
        if c.ndim != 1 or c.size < 1:
            raise ShapeError("component vector must be one-dimensional and non-empty")
        if abs(c[0] - 1.0) > 1e-9:
            raise ValueError("component 0 must equal 1")
        object.__setattr__(self, "components", c)


def laurent_eigenvector(sys: OpucSystem, z: UnitCirclePoint) -> LaurentEigenvector:
    """Eigenvector of the CMV matrix at a spectral point z.

    Component 2m is z^(-m) Phi_2m(z) / sqrt(h_2m); component 2m+1 is
    z^m conj(Phi_{2m+1}(z)) / sqrt(h_{2m+1}), using that 1/z = conj(z) on
    the circle.  At roots of the final polynomial this satisfies
    U psi = z psi.
    """
    zz = complex(z)
    comps = np.empty(sys.v.n + 1, dtype=np.complex128)
    for k in range(sys.v.n + 1):
        val = evaluate(sys.phis[k], zz)
        root_h = np.sqrt(float(sys.h[k]))
        if k % 2 == 0:
            comps[k] = zz ** (-(k // 2)) * val / root_h
        else:
            comps[k] = zz ** ((k - 1) // 2) * np.conj(val) / root_h
    return LaurentEigenvector(comps)


@dataclass(frozen=True)
class QuasiReflection:
    """Antidiagonal involution-like matrix with alternating tau, 1/tau entries."""

    tau: complex
    size: int

    def __post_init__(self) -> None:
        if self.size < 1:
            raise ShapeError("size must be positive")
        if abs(abs(complex(self.tau)) - 1.0) > DEFAULT.unimodular:
            raise ValueError("tau must be unimodular")

    @property
    def matrix(self) -> np.ndarray:
        q = np.zeros((self.size, self.size), dtype=np.complex128)
        tau = complex(self.tau)
        for i in range(self.size):
            q[i, self.size - 1 - i] = tau if i % 2 == 0 else 1.0 / tau
        return q


def quasi_reflection(n: int, tau: complex) -> QuasiReflection:
    """Antidiagonal matrix of size n + 1: row i holds tau (i even) or 1/tau (i odd).

    For n odd the matrix squares to the identity for any unimodular tau;
    for n even Q(tau) Q(1/tau) is the identity and Q(tau) is symmetric.
    """
    return QuasiReflection(complex(tau), n + 1)


@dataclass(frozen=True)
class MirrorRelationReport:
    """Residuals of the reflection identities linking a system to its mirror dual."""

    parity: str               # "odd" or "even" (parity of n)
    tau: complex              # branch of the square root that matched
    branch_flipped: bool      # True when -principal was the matching branch
    m1_residual: float
    m2_residual: float
    u_residual: float

    @property
    def max_residual(self) -> float:
        return max(self.m1_residual, self.m2_residual, self.u_residual)


def verify_mirror_relations(v: VerblunskySequence) -> MirrorRelationReport:
    """Check that quasi-reflections conjugate the factors into the dual factors.

    With n odd and tau^2 = 1/omega:
        Q(1/tau) M1 Q(tau) = dual M1,  Q(tau) M2 Q(1/tau) = dual M2,
        Q(tau) U Q(tau) = dual U.
    With n even and tau^2 = omega:
        Q(1/tau) M1 Q(1/tau) = dual M2,  Q(tau) M2 Q(tau) = dual M1,
        Q(tau) U Q(1/tau) = transpose of dual U.
    Every identity involves tau quadratically, so both square root branches
    satisfy them simultaneously; the report records the branch that scored
    the smaller residual anyway.
    """
    vh = mirror_dual(v)
    m1, m2 = factors(v)
    mh1, mh2 = factors(vh)
    u = m2 @ m1
    uh = mh2 @ mh1
    odd = v.n % 2 == 1
    root = principal_sqrt_unimodular(v.omega)
    tau0 = np.conj(root) if odd else root
    best: MirrorRelationReport | None = None
    for flipped in (False, True):
        tau = -tau0 if flipped else tau0
        q = quasi_reflection(v.n, tau).matrix
        qi = quasi_reflection(v.n, 1.0 / tau).matrix
        if odd:
            r1 = float(np.max(np.abs(qi @ m1 @ q - mh1)))
            r2 = float(np.max(np.abs(q @ m2 @ qi - mh2)))
            r3 = float(np.max(np.abs(q @ u @ q - uh)))
        else:
            r1 = float(np.max(np.abs(qi @ m1 @ qi - mh2)))
            r2 = float(np.max(np.abs(q @ m2 @ q - mh1)))
            r3 = float(np.max(np.abs(q @ u @ qi - uh.T)))
        report = MirrorRelationReport(
            "odd" if odd else "even", complex(tau), flipped, r1, r2, r3
        )
        if best is None or report.max_residual < best.max_residual:
            best = report
    assert best is not None
    return best


def persymmetric_sign_pattern(v: VerblunskySequence, tol: float = 1e-8) -> list[int]:
    """Eigenvalue signs of the quasi-reflection on the CMV eigenvectors.

    Requires n odd and self-dual data.  With tau the principal branch of
    omega^(-1/2), each eigenvector psi(z_s) of U is also an eigenvector of
    Q(tau) with eigenvalue epsilon (-1)^s for one global sign epsilon
    (nodes in theta-sorted order).  Componentwise this is the transport
    identity psi_{N-k} = epsilon (-1)^s omega^(+-1/2) psi_k, with exponent
    +1/2 for even k and -1/2 for odd k; both are verified here.

    Returns the per-node signs; raises PersymmetryViolationError when the
    pattern fails.
    """
    if v.n % 2 == 0:
        raise ShapeError("the sign pattern needs odd n")
    if not is_persymmetric(v, 1e-10):
        raise NotPersymmetricError("coefficient list is not self-dual")
    sys = build_system(v)
    nodes = spectrum(sys)
    tau = np.conj(principal_sqrt_unimodular(v.omega))
    q = quasi_reflection(v.n, tau).matrix
    omega_half = principal_sqrt_unimodular(v.omega)
    signs: list[int] = []
    for s, node in enumerate(nodes):
        psi = laurent_eigenvector(sys, node).components
        qpsi = q @ psi
        mu = complex(np.vdot(psi, qpsi) / np.vdot(psi, psi))
        scale = max(1.0, float(np.max(np.abs(psi))))
        resid = float(np.max(np.abs(qpsi - mu * psi))) / scale
        if resid > tol:
            raise PersymmetryViolationError(
                f"node {s}: eigenvector not reproduced, residual {resid:.3e}"
            )
        if abs(mu - 1.0) <= 1e-6:
            sign = 1
        elif abs(mu + 1.0) <= 1e-6:
            sign = -1
        else:
            raise PersymmetryViolationError(f"node {s}: eigenvalue {mu!r} is not +-1")
        signs.append(sign)
        # componentwise transport across the middle of the vector
        for k in range(sys.v.n + 1):
            twist = omega_half if k % 2 == 0 else np.conj(omega_half)
            predicted = sign * twist * psi[k]
            if abs(psi[sys.v.n - k] - predicted) > tol * scale:
                raise PersymmetryViolationError(
                    f"node {s}, component {k}: transport identity off by "
                    f"{abs(psi[sys.v.n - k] - predicted):.3e}"
                )
    for s, sign in enumerate(signs):
        if sign != signs[0] * (-1) ** s:
            raise PersymmetryViolationError("signs do not alternate from a single epsilon")
    return signs


def characteristic_polynomial(m: np.ndarray) -> Polynomial:
    """Monic characteristic polynomial det(zI - m) by the Faddeev-LeVerrier recursion.

    Exact up to rounding and intended as an independent oracle for small
    matrices (size <= 9 or so); cost grows like size^4.
    """
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeError("need a square matrix")
    size = m.shape[0]
    coeffs = np.zeros(size + 1, dtype=np.complex128)
    coeffs[size] = 1.0
    aux = np.zeros_like(m)
    eye = np.eye(size, dtype=np.complex128)
    for k in range(1, size + 1):
        aux = m @ (aux + coeffs[size - k + 1] * eye)
        coeffs[size - k] = -np.trace(aux) / k
    return Polynomial(coeffs)
