"""Named random substreams derived from one integer seed."""

from __future__ import annotations

import zlib

import numpy as np


def substream(seed: int, name: str, *indices: int) -> np.random.Generator:
    """Independent generator for stage ``name`` (and optional indices).

    The same (seed, name, indices) always yields the same stream, whatever
    other stages consumed, so each stage is reproducible on its own.
    """
    return np.random.default_rng([seed, zlib.crc32(name.encode("utf-8")), *indices])
