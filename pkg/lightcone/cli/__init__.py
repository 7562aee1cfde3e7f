"""Command-line surface."""

from .app import EXIT_INVALID, EXIT_OK, EXIT_RESOURCE, build_parser, run
from .manifest import RunManifest
from .output import ERROR_SCHEMA, error_payload
from .settings import ConfigFileError, UsageError

__all__ = [
    "ERROR_SCHEMA",
    "EXIT_INVALID",
    "EXIT_OK",
    "EXIT_RESOURCE",
    "ConfigFileError",
    "RunManifest",
    "UsageError",
    "build_parser",
    "error_payload",
    "run",
]
