"""Exception types shared across the package."""


class CoveridError(Exception):
    """Base class for all errors raised by this package."""


# audio decoding
class MalformedContainer(CoveridError):
    """The file is not a well-formed RIFF/WAVE container."""


class UnsupportedEncoding(CoveridError):
    """The WAV encoding is not PCM16 or float32."""


class EmptyAudio(CoveridError):
    """The audio stream contains no samples."""


class TooShort(CoveridError):
    """The clip is shorter than one analysis frame."""


# neural net
class ShapeMismatch(CoveridError):
    """Tensor shapes are inconsistent with the operation."""


class DegenerateBatch(CoveridError):
    """Batch statistics are undefined (fewer than 2 values per channel)."""


class StaleCache(CoveridError):
    """Backward called with a cache not produced by a train-mode forward."""


class MalformedModelFile(CoveridError):
    """Model file is truncated, corrupted, or not a CNNW file."""


class SpecMismatch(CoveridError):
    """Model file was written for a different architecture."""


# pipeline
class InsufficientCliques(CoveridError):
    """Fewer than two cliques available for pair construction."""


class EmptyDataset(CoveridError):
    """No records to train or score on."""


class DivergedLoss(CoveridError):
    """Training loss became non-finite."""


class InvalidConfig(CoveridError):
    """Configuration values are out of range or unusable."""


# retrieval / evaluation
class MissingMatrix(CoveridError):
    """No cross-similarity matrix obtainable for a pair."""


class LengthMismatch(CoveridError):
    """Parallel sequences have different lengths."""


class MissingQuery(CoveridError):
    """A ranking's query has no ground-truth entry."""


class NoRelevantCandidate(CoveridError):
    """A query's ranking contains no relevant candidate."""


# cli
class NoInputs(CoveridError):
    """An input directory contained nothing to process."""
