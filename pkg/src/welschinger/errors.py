"""Exception taxonomy shared across the package."""


class WelschingerError(Exception):
    """Base class for all package-specific errors."""


class InconsistentSamples(WelschingerError):
    """Interpolation samples do not fit any polynomial within the degree bound."""


class ZeroSeries(WelschingerError):
    """Valuation of the zero series is undefined."""


class UndeterminedTruncation(WelschingerError):
    """A required initial coefficient is not determined by the truncation order."""


class FaceNotInSubdivision(WelschingerError):
    """Requested face is not a face of the subdivision."""


class NotSmooth(WelschingerError):
    """Arc parametrization has vanishing linear part."""


class NotSingular(WelschingerError):
    """Point is not a singular point of the curve."""


class DegenerateNode(WelschingerError):
    """A node with degenerate Hessian was encountered; the sign is undefined."""


class PositiveDimensionalSingularLocus(WelschingerError):
    """Curve has a multiple component; its singular locus is not finite."""


class NonGenericCoefficients(WelschingerError):
    """Fixed coefficients of a triangle family fail a genericity check."""


class DegenerateDoubleRoot(WelschingerError):
    """A double root degenerates to higher contact; classification refused."""


class RankDeficient(WelschingerError):
    """Constraint system does not have the expected full rank."""


class IdenticallySingularPencil(WelschingerError):
    """Every member of the pencil is singular."""


class NonGenericConfiguration(WelschingerError):
    """Configuration fails a genericity gate; the caller should resample."""


class IncompatibleSignatures(WelschingerError):
    """Sweep endpoints have different tangency signatures."""


class UnsupportedOrder(WelschingerError):
    """Requested order is outside the implemented range."""
