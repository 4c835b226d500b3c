"""State novelty over boolean feature sets.

The novelty of a state is the size of the smallest subset of its features
that was never collectively true in any previously registered state. A table
of bound k tracks every seen feature tuple of size 1..k; states whose
subsets of size <= k are all known (exact duplicates in particular) are
ABOVE_K and get pruned by width-bounded search.
"""

from __future__ import annotations

from itertools import combinations


class EmptyFeatureSet(ValueError):
    """A state must expose at least one boolean feature."""


class _AboveK:
    """Singleton returned when no feature subset of size <= k is new."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ABOVE_K"


ABOVE_K = _AboveK()


class NoveltyTable:
    """Seen feature tuples per size 1..max_size, in canonical sorted order."""

    __slots__ = ("max_size", "seen")

    def __init__(self, max_size: int):
        if max_size < 1:
            raise ValueError("novelty bound must be >= 1")
        self.max_size = max_size
        self.seen: dict[int, set[tuple]] = {t: set() for t in range(1, max_size + 1)}

    def __repr__(self) -> str:
        sizes = ", ".join(f"{t}: {len(s)}" for t, s in self.seen.items())
        return f"NoveltyTable(k={self.max_size}, seen={{{sizes}}})"


def novelty(features, table: NoveltyTable):
    """Smallest t <= k such that some size-t subset of ``features`` is unseen.

    Returns ABOVE_K when every subset of size <= k is already in the table;
    never mutates the table.
    """
    ordered = sorted(features)
    if not ordered:
        raise EmptyFeatureSet("novelty of an empty feature set is undefined")
    for t in range(1, table.max_size + 1):
        if t > len(ordered):
            break
        seen_t = table.seen[t]
        for combo in combinations(ordered, t):
            if combo not in seen_t:
                return t
    return ABOVE_K


def register(features, table: NoveltyTable) -> None:
    """Record all subsets of size 1..k of ``features`` as seen. Idempotent."""
    ordered = sorted(features)
    if not ordered:
        raise EmptyFeatureSet("cannot register an empty feature set")
    for t in range(1, table.max_size + 1):
        if t > len(ordered):
            break
        table.seen[t].update(combinations(ordered, t))


def novelty_and_register(features, table: NoveltyTable):
    """Single pass used by the search loop: query, and register if novel."""
    ordered = sorted(features)
    if not ordered:
        raise EmptyFeatureSet("novelty of an empty feature set is undefined")
    value = None
    for t in range(1, table.max_size + 1):
        if t > len(ordered):
            break
        seen_t = table.seen[t]
        if value is None:
            for combo in combinations(ordered, t):
                if combo not in seen_t:
                    value = t
                    break
        if value is not None:
            seen_t.update(combinations(ordered, t))
    return ABOVE_K if value is None else value
