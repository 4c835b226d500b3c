"""Small shared helpers."""

from __future__ import annotations

import hashlib
import random


def stable_seed(*parts) -> int:
    """Process-independent integer seed derived from the given parts.

    Python's string hashing is randomized per process, so seeding RNGs with
    tuples/strings directly would break byte-identical reproducibility.
    """
    blob = "\x1f".join(repr(p) for p in parts).encode("utf-8")
    return int.from_bytes(hashlib.sha256(blob).digest()[:8], "big")


def seeded_rng(*parts) -> random.Random:
    return random.Random(stable_seed(*parts))
