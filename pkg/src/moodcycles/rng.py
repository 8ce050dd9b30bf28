"""Keyed random substreams for reproducible permutation and bootstrap draws.

Every randomised iteration anywhere in the package draws from a generator
keyed by (master seed, stream label, iteration index). Streams depend only
on their key, never on creation order, so serial and parallel runs produce
bit-identical results.
"""

from __future__ import annotations

import hashlib

import numpy as np


def _key_part(part: object) -> int:
    if isinstance(part, (int, np.integer)):
        value = int(part)
        if value < 0:
            raise ValueError(f"negative key part: {value}")
        return value
    digest = hashlib.sha256(str(part).encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little")


def substream(master_seed: int, *path: object) -> np.random.Generator:
    """Generator for the substream keyed by (master_seed, *path).

    String path parts are hashed to stable 64-bit integers; integer parts
    are used as-is. The same key always yields the same stream.
    """
    entropy = (int(master_seed),) + tuple(_key_part(p) for p in path)
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy)))
