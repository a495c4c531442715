"""Exception types shared across the toolkit.

Every error raised on bad input derives from :class:`FakevalError`, so
callers (and the CLI) can distinguish validation failures from bugs.
"""


class FakevalError(Exception):
    """Base class for all input-validation and domain errors."""


# --- prediction file ingestion -------------------------------------------

class MalformedRow(FakevalError):
    """Row has the wrong column count, a bad header, or an unparseable number."""


class LabelOutOfDomain(FakevalError):
    """Class label is not 0 or 1."""


class ScoreOutOfRange(FakevalError):
    """Raw prediction score falls outside the closed interval [0, 1]."""


class DuplicateId(FakevalError):
    """The same sample_id appears more than once in one file."""


class EmptyInput(FakevalError):
    """An operation that needs records received none."""


# --- metrics / ROC ---------------------------------------------------------

class ArgumentOutOfRange(FakevalError):
    """Scalar argument outside its documented domain."""


class DegenerateClass(FakevalError):
    """A rate or curve needs both classes but one of them is empty."""


# --- density ---------------------------------------------------------------

class DegenerateSamples(FakevalError):
    """Too few samples, or zero variance, for a bandwidth estimate."""


# --- curation --------------------------------------------------------------

class UnsortedTimestamps(FakevalError):
    """Frame timestamps must be presented in ascending order."""


class BadRatios(FakevalError):
    """Split ratios must be positive and sum to 1."""


class EmptyManifest(FakevalError):
    """The sample manifest contains no rows."""


class BoxOutsideImage(FakevalError):
    """Crop box does not intersect the image."""


class NonPositiveBox(FakevalError):
    """Crop box has zero or negative width or height."""


class AlreadyNormalized(FakevalError):
    """Image pixels are already real-valued in [0, 1]."""


# --- architecture audit ----------------------------------------------------

class InputTooSmall(FakevalError):
    """Input resolution too small to propagate through all stages."""


# --- training dynamics -----------------------------------------------------

class NonFiniteGradient(FakevalError):
    """Gradient contains NaN or infinity."""


class NonMonotoneEpochs(FakevalError):
    """Epochs must be fed to the early-stopping monitor in increasing order."""
