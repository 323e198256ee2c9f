"""Exception types raised by the library.

Every error is a ValueError subclass so callers that only care about
"bad input" can catch one base class.
"""


class OffshellError(ValueError):
    """Base class for all library errors."""


class SingularFrame(OffshellError):
    """The eigenvector-matrix normalization 2*M*(v0+M) vanishes."""


class OnShellPole(OffshellError):
    """Propagator evaluated at (or too close to) the mass-shell pole."""


class ZeroEnergy(OffshellError):
    """Time component of the momentum is zero; 1/k0 factors blow up."""


class OnShellLimit(OffshellError):
    """|r| is too close to 1; the inverse temperature diverges."""


class MaximallyMixed(OffshellError):
    """r is (numerically) zero; the Hamiltonian direction is undefined."""


class NotComplexRegime(OffshellError):
    """Real/imaginary split of beta requested but |r| <= 1."""


class NotNormalized(OffshellError):
    """Two-qubit amplitudes do not have unit norm."""


class DegenerateMomentum(OffshellError):
    """No polarization basis completes for this momentum/gauge."""


class DegenerateChannel(OffshellError):
    """The s-channel invariant (p1+p2)^2 is (numerically) zero."""


class SChannelPole(OffshellError):
    """s = m^2 pole of the fermion line in the s-channel."""


class PropagatorPole(OffshellError):
    """A loop-integrand denominator is (numerically) on shell."""


class ZeroTimeComponent(OffshellError):
    """Polarization has eps0 = 0; the ket normalization is singular."""


class EmptyGrid(OffshellError):
    """Loop-momentum grid contains no usable points."""


class SingularWavefunction(OffshellError):
    """Renormalization denominator 1+A2 (or 1+C1) vanishes."""
