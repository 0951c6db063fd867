"""Exception types shared across the package."""


class DeltaVecError(Exception):
    """Base class for every error raised by this library."""


class MixedDimensions(DeltaVecError):
    """Vertex vectors do not all have the same length."""


class AffinelyDependent(DeltaVecError):
    """The given vertices do not span a simplex."""


class NonPositiveDilation(DeltaVecError):
    """Dilation factors must be integers >= 1."""


class VolumeCapExceeded(DeltaVecError):
    """Box-point enumeration would emit more points than the configured cap."""


class BoxCapExceeded(DeltaVecError):
    """A brute-force bounding-box scan would visit more points than the cap."""


class AllZeroSequence(DeltaVecError):
    """The operation is undefined for the all-zero sequence."""


class PreconditionViolated(DeltaVecError):
    """Input violates a documented precondition of the operation."""


class BadParams(DeltaVecError):
    """Family parameters are outside the admissible range."""


class NoClosedForm(DeltaVecError):
    """The family has no closed-form delta vector; use the histogram route."""


class InconsistentCounts(DeltaVecError):
    """The count table cannot come from a lattice polytope."""


class DilationBoundViolated(DeltaVecError):
    """A proved dilation guarantee failed to hold; this signals a bug."""


class CertificateMismatch(DeltaVecError):
    """An exact certificate check failed; this signals a bug."""
