"""The hermitized trace-1 operator of an internal fermion line.

The momentum-space propagator D(k) = (slash(k) + m) / (k.k - m^2) is not
hermitian, but right-multiplying by gamma^0 and rescaling yields

    rho(k) = ((k.k - m^2) / 4 k0) D(k) gamma^0
           = I/4 + (m gamma^0 - k_i gamma^i gamma^0) / (4 k0)

which is hermitian with unit trace for every real k with k0 != 0,
including on shell where the propagator itself has a pole.  The whole
spectrum is controlled by the single parameter

    r = sqrt(k1^2 + k2^2 + k3^2 + m^2) / k0,

with eigenvalues (1 +- r)/4, each twice.  |r| <= 1 is exactly the region
where rho(k) is a valid (separable, thermal) 2-qubit density matrix;
for |r| > 1 it stays a hermitian trace-1 operator with one doubly
degenerate negative eigenvalue.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dirac import (
    GAMMA0,
    GAMMA3,
    GAMMA5,
    IDENTITY4,
    _spatial_block,
    as_momentum,
    minkowski_square,
    off_shell_mass,
    slash,
    w_matrix,
    w_pseudo_adjoint,
)
from .errors import OnShellPole, ZeroEnergy

STATE_VALID = "StateValid"
OPERATOR_ONLY = "OperatorOnly"

_ZERO_ENERGY_TOL = 1e-12


def propagator(k, m: float, pole_tol: float = 1e-9) -> np.ndarray:
    """Momentum-space propagator (slash(k) + m I) / (k.k - m^2).

    Raises OnShellPole when |k.k - m^2| <= pole_tol.
    """
    km = as_momentum(k)
    denom = minkowski_square(km).real - m * m
    if abs(denom) <= pole_tol:
        raise OnShellPole(f"k.k - m^2 = {denom} within pole tolerance {pole_tol}")
    return (slash(km) + m * IDENTITY4) / denom


def rho_matrix(k, m: float) -> np.ndarray:
    """rho(k) from the closed polynomial form (no propagator pole involved)."""
    km = as_momentum(k)
    k0 = km[0].real
    if abs(k0) < _ZERO_ENERGY_TOL:
        raise ZeroEnergy(f"k0 = {k0}")
    return 0.25 * IDENTITY4 + (m * GAMMA0 - _spatial_block(km)) / (4.0 * k0)


def r_param(k, m: float) -> complex:
    """r = sqrt(|k_vec|^2 + m^2) / k0.  Real for real momenta, negative if k0 < 0."""
    km = as_momentum(k)
    k0 = km[0].real
    if abs(k0) < _ZERO_ENERGY_TOL:
        raise ZeroEnergy(f"k0 = {k0}")
    spatial = km[1:].real
    return complex(np.sqrt(float(spatial @ spatial) + m * m) / k0)


@dataclass(frozen=True)
class FermionOperator:
    """rho(k) together with the inputs and the spectral parameter r."""

    matrix: np.ndarray
    momentum: np.ndarray
    mass: float
    r: complex


def rho(k, m: float) -> FermionOperator:
    """Bundle rho_matrix(k, m) with its momentum, mass and r."""
    km = as_momentum(k)
    return FermionOperator(
        matrix=rho_matrix(km, m), momentum=km, mass=m, r=r_param(km, m)
    )


def purity(k, m: float) -> float:
    """Tr[rho^2] = (1 + r^2)/4, ranging from 1/4 (r=0) upward."""
    r = r_param(k, m)
    return float((1.0 + (r * r).real) / 4.0)


def eigenvalues_closed(k, m: float) -> tuple[float, float]:
    """(lambda_plus, lambda_minus) = ((1+r)/4, (1-r)/4), each doubly degenerate."""
    r = r_param(k, m).real
    return (1.0 + r) / 4.0, (1.0 - r) / 4.0


@dataclass(frozen=True)
class ValidityClass:
    """Density-matrix validity of rho(k): StateValid iff |r| <= 1."""

    tag: str
    r: complex
    min_eigenvalue: float

    @property
    def is_state(self) -> bool:
        return self.tag == STATE_VALID


def validity(k, m: float, tol: float = 1e-12) -> ValidityClass:
    """Classify rho(k, m), cross-checking |r| <= 1 against the spectrum."""
    r = r_param(k, m)
    w = np.linalg.eigvalsh(rho_matrix(k, m))
    by_r = abs(r) <= 1.0 + tol
    by_spectrum = float(w[0]) >= -tol
    if by_r != by_spectrum:
        # |r|=1 boundary with opposing round-off on the two routes
        boundary = abs(abs(r) - 1.0) < 1e-9
        if not boundary:
            raise RuntimeError(
                f"validity cross-check failed: |r|={abs(r)}, min eig={w[0]}"
            )
    tag = STATE_VALID if by_r else OPERATOR_ONLY
    return ValidityClass(tag=tag, r=r, min_eigenvalue=float(w[0]))


# -- qubit projectors and the mixture decomposition -------------------------

#: gamma^5 gamma^3 gamma^0, the spin-projection direction of this representation
_SPIN_AXIS = GAMMA5 @ GAMMA3 @ GAMMA0


def projectors(lambda_e: int, lambda_s: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Rest-frame projectors (Lambda, Sigma, Lambda @ Sigma).

    Lambda(lambda_e) = (I + (-1)^lambda_e gamma^0)/2 selects particle
    (0) vs anti-particle (1); Sigma(lambda_s) selects spin up (0) vs
    down (1).  Their product is the computational-basis projector
    |lambda_e lambda_s><lambda_e lambda_s|.
    """
    if lambda_e not in (0, 1) or lambda_s not in (0, 1):
        raise ValueError("qubit labels must be 0 or 1")
    lam = 0.5 * (IDENTITY4 + (-1.0) ** lambda_e * GAMMA0)
    sig = 0.5 * (IDENTITY4 - (-1.0) ** lambda_s * _SPIN_AXIS)
    return lam, sig, lam @ sig


@dataclass(frozen=True)
class MixtureComponent:
    """One pure component of the 4-term mixture of rho(k)."""

    lambda_e: int
    lambda_s: int
    weight: float
    matrix: np.ndarray


def mixture_weight(lambda_e: int, m: float, mk: complex) -> complex:
    """p = (1 + (-1)^lambda_e m/M) / 4."""
    return (1.0 + (-1.0) ** lambda_e * m / mk) / 4.0


def mixture_decomposition(k, m: float) -> list[MixtureComponent]:
    """The four weighted pure components whose sum is rho(k).

    Component (lambda_e, lambda_s) is (M/k0) |lambda_e,lambda_s;k><...|
    built from the columns of W_k, with the bra from the pseudo-adjoint
    (identical to W_k for real momenta).  Each component has unit trace;
    in the StateValid region all weights lie in [0, 1] and the
    components are positive semi-definite.
    """
    km = as_momentum(k)
    k0 = km[0].real
    if abs(k0) < _ZERO_ENERGY_TOL:
        raise ZeroEnergy(f"k0 = {k0}")
    mk = off_shell_mass(km)
    w = w_matrix(km)
    wbar = w_pseudo_adjoint(km)
    scale = mk / k0
    out = []
    for lambda_e in (0, 1):
        for lambda_s in (0, 1):
            idx = 2 * lambda_e + lambda_s
            comp = scale * np.outer(w[:, idx], wbar[idx, :])
            weight = mixture_weight(lambda_e, m, mk)
            out.append(
                MixtureComponent(
                    lambda_e=lambda_e,
                    lambda_s=lambda_s,
                    weight=complex(weight).real if abs(complex(weight).imag) < 1e-14 else weight,
                    matrix=comp,
                )
            )
    return out
