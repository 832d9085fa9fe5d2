"""Exception types shared across the package."""


class RishapeError(Exception):
    """Base class for all errors raised by rishape."""


class ContourError(RishapeError):
    """Invalid or degenerate contour geometry."""


class DatasetError(RishapeError):
    """Manifest or contour-file problems: missing files, malformed lines,
    duplicate ids, out-of-range labels."""


class EncodingError(RishapeError):
    """Invalid local-area encoding request (bad k/m, degenerate point pair)."""


class LayerError(RishapeError):
    """Shape or argument mismatch in a network layer."""


class CheckpointError(RishapeError):
    """Corrupt or incompatible checkpoint file."""


class ConfigError(RishapeError):
    """Invalid run or network configuration."""
