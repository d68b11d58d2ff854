"""Exception types shared across the library."""


class ExovortexError(Exception):
    """Base class for all library errors."""


class DegenerateLatticeError(ExovortexError):
    """Lattice basis with Im(omega2/omega1) below the degeneracy threshold."""


class PoleProximityError(ExovortexError):
    """Evaluation point too close to a pole (lattice point of the Weierstrass function)."""


class DegenerateMapError(ExovortexError):
    """Map components share a common factor / degenerate to lower degree."""


class TwistConsistencyError(ExovortexError):
    """Transition maps fail the flatness/unitarity consistency checks."""


class NonQuantizedFluxError(ExovortexError):
    """Total flux is not within tolerance of an integer multiple of 2*pi."""


class PreconditionError(ExovortexError):
    """Operation called with inputs outside its documented domain."""


class ToleranceError(ExovortexError):
    """A verification quantity exceeded its tolerance."""
