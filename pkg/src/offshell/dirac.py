"""Fixed conventions and kinematic building blocks.

Metric signature is (+,-,-,-) and the gamma matrices are hard-coded in
the Dirac representation:

    gamma^0 = sigma_3 (x) I_2,   gamma^i = i (sigma_2 (x) sigma_i),
    gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3.

These are deliberately not configurable: several closed forms downstream
(the concurrence in particular) are representation dependent.

4-vectors are plain numpy arrays of shape (4,), complex capable.
Momenta must have exactly real components; polarization vectors may be
complex.  The off-shell mass M = sqrt(v.v) always uses the principal
branch of the complex square root, so spacelike momenta get a purely
imaginary M with non-negative imaginary part.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SingularFrame

_SIGMA = (
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)
_I2 = np.eye(2, dtype=np.complex128)

GAMMA0 = np.kron(_SIGMA[2], _I2)
GAMMA1 = 1j * np.kron(_SIGMA[1], _SIGMA[0])
GAMMA2 = 1j * np.kron(_SIGMA[1], _SIGMA[1])
GAMMA3 = 1j * np.kron(_SIGMA[1], _SIGMA[2])
GAMMA5 = 1j * (GAMMA0 @ GAMMA1 @ GAMMA2 @ GAMMA3)
METRIC = np.diag([1.0, -1.0, -1.0, -1.0])
IDENTITY4 = np.eye(4, dtype=np.complex128)

for _g in (GAMMA0, GAMMA1, GAMMA2, GAMMA3, GAMMA5, METRIC, IDENTITY4):
    _g.flags.writeable = False

#: Spatial gamma^i gamma^0 products, used all over the place.
_GAMMA_SPATIAL_G0 = tuple(g @ GAMMA0 for g in (GAMMA1, GAMMA2, GAMMA3))
for _g in _GAMMA_SPATIAL_G0:
    _g.flags.writeable = False


def gamma_matrices() -> tuple[np.ndarray, ...]:
    """Return (gamma^0, gamma^1, gamma^2, gamma^3, gamma^5) as read-only arrays."""
    return GAMMA0, GAMMA1, GAMMA2, GAMMA3, GAMMA5


def as_vector(v) -> np.ndarray:
    """Coerce to a complex 4-vector."""
    arr = np.asarray(v, dtype=np.complex128)
    if arr.shape != (4,):
        raise ValueError(f"expected a 4-vector, got shape {arr.shape}")
    return arr


def as_momentum(v) -> np.ndarray:
    """Coerce to a 4-momentum; momenta must be real-valued."""
    arr = as_vector(v)
    if np.any(arr.imag != 0.0):
        raise ValueError("momentum components must be exactly real")
    return arr


def minkowski_square(v) -> complex:
    """v.v = c0^2 - c1^2 - c2^2 - c3^2 (no conjugation, complex capable)."""
    c = as_vector(v)
    return complex(c[0] * c[0] - c[1] * c[1] - c[2] * c[2] - c[3] * c[3])


def slash(v) -> np.ndarray:
    """Contraction v_mu gamma^mu with the index lowered by the metric."""
    c = as_vector(v)
    return c[0] * GAMMA0 - c[1] * GAMMA1 - c[2] * GAMMA2 - c[3] * GAMMA3


def off_shell_mass(v) -> complex:
    """Principal branch of sqrt(v.v).

    Real and non-negative for timelike v, exactly 0 for lightlike v,
    and +i|sqrt(-v.v)| for spacelike v.  The branch cut sits on the
    negative real axis of v.v.
    """
    sq = minkowski_square(v)
    if sq.imag == 0.0:
        # guard the branch cut against a negative-zero imaginary part
        sq = complex(sq.real, 0.0)
    return complex(np.sqrt(sq))


def _spatial_block(v: np.ndarray) -> np.ndarray:
    """sum_i v^i gamma^i gamma^0 for the spatial components of v."""
    return (
        v[1] * _GAMMA_SPATIAL_G0[0]
        + v[2] * _GAMMA_SPATIAL_G0[1]
        + v[3] * _GAMMA_SPATIAL_G0[2]
    )


def w_matrix(v) -> np.ndarray:
    """Eigenvector matrix W_v = ((v0+M)I - v_i gamma^i gamma^0) / sqrt(2M(v0+M)).

    Its columns diagonalize slash(v):

        slash(v) @ W_v = W_v @ diag(M, M, -M, -M)

    i.e. the first two columns solve (slash(v) - M) u = 0 and the last
    two solve (slash(v) + M) w = 0.  Defined for momenta and (complex)
    polarization vectors alike; for complex denominators the principal
    square root fixes the overall column phases.

    Raises SingularFrame when 2M(v0+M) vanishes (M = 0 or v0 = -M).
    """
    c = as_vector(v)
    m = off_shell_mass(c)
    denom = 2.0 * m * (c[0] + m)
    if abs(denom) < 1e-24:
        raise SingularFrame(f"2*M*(v0+M) = {denom} for v = {c}")
    return ((c[0] + m) * IDENTITY4 - _spatial_block(c)) / np.sqrt(denom)


def w_pseudo_adjoint(v) -> np.ndarray:
    """Adjoint of W_v that conjugates the vector components but not M.

    For real momenta this coincides with W_v itself (the matrices
    gamma^i gamma^0 are hermitian and every coefficient except M is
    real).  It never equals the entrywise adjoint when M is complex:
    M is treated as a fixed symbol, which is the only convention under
    which the eigen-decomposition of the propagator closes off shell.
    """
    c = np.conj(as_vector(v))
    m = off_shell_mass(v)  # unconjugated vector: same M
    denom = 2.0 * m * (c[0] + m)
    if abs(denom) < 1e-24:
        raise SingularFrame(f"2*M*(v0*+M) = {denom} for v = {v}")
    return ((c[0] + m) * IDENTITY4 - _spatial_block(c)) / np.sqrt(denom)


@dataclass(frozen=True)
class SpinorQuartet:
    """The four eigen-spinors of slash(k) plus their pseudo-adjoint rows.

    u1, u2 carry eigenvalue +M; v1, v2 carry -M.  The bar rows are built
    from the pseudo-adjoint of W (M never conjugated) times gamma^0, so

        sum_s u_s bar_u_s / (M - m) + sum_s v_s bar_v_s / (M + m)

    reconstructs the propagator for any mass m.
    """

    u1: np.ndarray
    u2: np.ndarray
    v1: np.ndarray
    v2: np.ndarray
    bar_u1: np.ndarray
    bar_u2: np.ndarray
    bar_v1: np.ndarray
    bar_v2: np.ndarray
    mass: complex

    @property
    def kets(self) -> tuple[np.ndarray, ...]:
        return self.u1, self.u2, self.v1, self.v2

    @property
    def bars(self) -> tuple[np.ndarray, ...]:
        return self.bar_u1, self.bar_u2, self.bar_v1, self.bar_v2


def spinor_basis(k) -> SpinorQuartet:
    """Off-shell spinor quartet of a momentum k (columns of W_k)."""
    km = as_momentum(k)
    w = w_matrix(km)
    wbar = w_pseudo_adjoint(km) @ GAMMA0
    return SpinorQuartet(
        u1=w[:, 0].copy(),
        u2=w[:, 1].copy(),
        v1=w[:, 2].copy(),
        v2=w[:, 3].copy(),
        bar_u1=wbar[0, :].copy(),
        bar_u2=wbar[1, :].copy(),
        bar_v1=wbar[2, :].copy(),
        bar_v2=wbar[3, :].copy(),
        mass=off_shell_mass(km),
    )


def hermiticity_defect(m: np.ndarray) -> float:
    """max |M - M^dagger|, a cheap hermiticity gauge used by many tests."""
    a = np.asarray(m, dtype=np.complex128)
    return float(np.max(np.abs(a - a.conj().T)))
