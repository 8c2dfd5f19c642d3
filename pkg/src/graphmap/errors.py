"""Exception hierarchy and process exit codes.

Exit code classes: 0 success, 2 input parse/format errors, 3 configuration
errors, 4 verification failures, 1 anything else.
"""

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PARSE = 2
EXIT_CONFIG = 3
EXIT_VERIFY = 4


class GraphMapError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = EXIT_ERROR


class GfaParseError(GraphMapError):
    """Malformed GFA record; message carries the 1-based line number."""

    exit_code = EXIT_PARSE

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class AlphabetError(GraphMapError):
    """Sequence contains a symbol outside A/C/G/T."""

    exit_code = EXIT_PARSE


class SegmentReferenceError(GfaParseError):
    """Link names a segment that was never declared."""


class UnsupportedFeatureError(GfaParseError):
    """GFA feature outside the supported subset (e.g. reverse-strand link)."""


class CycleError(GraphMapError):
    """Graph contains a cycle; message names one node on it."""

    exit_code = EXIT_PARSE

    def __init__(self, node_id: int):
        super().__init__(f"cycle detected through node {node_id}")
        self.node_id = node_id


class FormatError(GraphMapError):
    """Corrupt or truncated binary artifact."""

    exit_code = EXIT_PARSE


class ReadFileError(GraphMapError):
    """Malformed FASTA/FASTQ input."""

    exit_code = EXIT_PARSE


class BoundsError(GraphMapError):
    """Position argument outside the addressed structure."""


class ConfigError(GraphMapError):
    """Invalid or inconsistent parameter combination."""

    exit_code = EXIT_CONFIG


class UnsupportedKError(ConfigError):
    """K-mer length outside the packable range."""


class WidthError(ConfigError):
    """Pattern longer than the configured bitvector width."""


class EmptyIndexError(GraphMapError):
    """Operation requires a non-empty index."""


class EmptyRegionError(GraphMapError):
    """Candidate region contains no characters."""


class InternalConsistencyError(GraphMapError):
    """Stored alignment state admits no explaining move; indicates a kernel bug."""


class VerificationError(GraphMapError):
    """An emitted alignment failed independent replay checking."""

    exit_code = EXIT_VERIFY
