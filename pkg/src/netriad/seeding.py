"""Counter-keyed derivation of independent random streams.

Batch operations (ensembles of realizations, rewiring repetitions) derive
one child stream per realization from a single master seed, keyed by the
realization counter rather than by draw order. Results are therefore
independent of execution order and worker count: realization ``r`` sees the
same stream whether it runs first, last, or in another process.
"""

from __future__ import annotations

import numpy as np


def child_seed(master_seed: int, *key: int) -> np.random.SeedSequence:
    """Seed for the child stream identified by an integer counter key."""
    return np.random.SeedSequence(master_seed, spawn_key=tuple(key))


def child_rng(master_seed: int, *key: int) -> np.random.Generator:
    """Generator for the child stream identified by a counter key."""
    return np.random.default_rng(child_seed(master_seed, *key))


def derive_int_seed(master_seed: int, *key: int) -> int:
    """Integer master seed for a keyed sub-analysis (own child streams)."""
    return int(child_seed(master_seed, *key).generate_state(1, np.uint64)[0])


def as_rng(seed) -> np.random.Generator:
    """Coerce an int, SeedSequence, Generator, or None into a Generator."""
    return np.random.default_rng(seed)
