"""Exception types shared across the package."""


class MaskSwapError(Exception):
    """Base class for all library errors."""


class LevelMismatch(MaskSwapError):
    """Operands describe qudits of different levels."""


class ShapeMismatch(MaskSwapError):
    """Operands live in incompatible Hilbert spaces."""


class BadSubset(MaskSwapError):
    """A particle subset is empty, duplicated, or out of range."""


class BadLabel(MaskSwapError):
    """A state-family label violates its constraints."""


class BadScenario(MaskSwapError):
    """A swap scenario is degenerate or inconsistent."""


class NotNormalized(MaskSwapError):
    """Amplitudes do not form a unit vector."""


class ZeroProbabilityOutcome(MaskSwapError):
    """Projection onto an outcome with (numerically) zero probability."""


class DimensionTooLarge(MaskSwapError):
    """Requested Hilbert space exceeds the dense-storage cap."""


class ScenarioFormatError(MaskSwapError):
    """A scenario file violates the expected schema."""
