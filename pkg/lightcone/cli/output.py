"""Payload and error output for the command-line surface.

Payloads go to stdout and, with ``--out``, to files in the output directory;
logs and errors go to stderr.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, Sequence, TextIO

from .manifest import MANIFEST_FILENAME, RunManifest

ERROR_SCHEMA: Dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "lightcone error",
    "type": "object",
    "required": ["error", "message", "exit_code"],
    "additionalProperties": False,
    "properties": {
        "error": {"type": "string"},
        "message": {"type": "string"},
        "exit_code": {"type": "integer", "enum": [1, 2]},
    },
}


def dumps(payload: Any) -> str:
    return json.dumps(payload, indent=2) + "\n"


def error_payload(exc: BaseException, exit_code: int) -> Dict[str, Any]:
    return {"error": type(exc).__name__, "message": str(exc), "exit_code": exit_code}


def write_error(
    exc: BaseException, exit_code: int, stream: Optional[TextIO] = None
) -> None:
    target = sys.stderr if stream is None else stream
    target.write(json.dumps(error_payload(exc, exit_code)) + "\n")


def format_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


class OutputWriter:
    """Sends payloads to stdout and records files written under ``out_dir``."""

    def __init__(
        self,
        manifest: RunManifest,
        out_dir: Optional[Path] = None,
        stdout: Optional[TextIO] = None,
    ) -> None:
        self.manifest = manifest
        self.out_dir = out_dir
        self.stdout = sys.stdout if stdout is None else stdout
        if out_dir is not None:
            out_dir.mkdir(parents=True, exist_ok=True)

    def emit(self, text: str) -> None:
        self.stdout.write(text)

    def emit_json(
        self, payload: Dict[str, Any], filename: Optional[str] = None
    ) -> None:
        """Print ``payload``; with an output directory also save it.

        Saved JSON payloads reference the manifest by file name.
        """
        self.emit(dumps(payload))
        if filename is not None:
            self.save(filename, dumps({**payload, "manifest": MANIFEST_FILENAME}))

    def save(self, filename: str, text: str) -> None:
        if self.out_dir is None:
            return
        (self.out_dir / filename).write_text(text)
        self.manifest.outputs.append(filename)

    def save_csv(
        self, filename: str, header: Sequence[str], rows: Iterable[Sequence[Any]]
    ) -> None:
        self.save(filename, format_csv(header, rows))

    def close(self) -> None:
        if self.out_dir is not None:
            self.manifest.write(self.out_dir)
