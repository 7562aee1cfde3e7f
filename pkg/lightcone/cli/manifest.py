"""Run manifests written next to command outputs."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List

from .. import __version__

MANIFEST_FILENAME = "manifest.json"


def utc_now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


@dataclass
class RunManifest:
    """What produced a set of output files.

    Only ``started_at``, ``finished_at`` and ``timings`` vary between reruns
    with equal arguments; payload files never include them.
    """

    command: str
    arguments: Dict[str, Any]
    seed: int
    inputs: List[str] = field(default_factory=list)
    outputs: List[str] = field(default_factory=list)
    timings: Dict[str, float] = field(default_factory=dict)
    version: str = __version__
    started_at: str = field(default_factory=utc_now)
    finished_at: str | None = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command,
            "version": self.version,
            "seed": self.seed,
            "inputs": list(self.inputs),
            "arguments": dict(self.arguments),
            "outputs": list(self.outputs),
            "timings": dict(self.timings),
            "started_at": self.started_at,
            "finished_at": self.finished_at,
        }

    def write(self, out_dir: Path) -> Path:
        self.finished_at = utc_now()
        path = out_dir / MANIFEST_FILENAME
        path.write_text(json.dumps(self.to_dict(), indent=2) + "\n")
        return path
