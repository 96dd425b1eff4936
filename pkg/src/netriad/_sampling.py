"""Shared randomization primitives on edge sets.

Kept private so that the measurement module and the null-model module can
both use them without importing each other.
"""

from __future__ import annotations

import numpy as np

from .netcore import EdgeSet, NodeUniverse


def uniform_edge_set(universe: NodeUniverse, n_edges: int,
                     rng: np.random.Generator) -> EdgeSet:
    """Uniformly random edge set with exactly ``n_edges`` edges."""
    if n_edges == 0:
        return EdgeSet(universe, frozenset())
    idx = rng.choice(universe.pair_count, size=n_edges, replace=False)
    return EdgeSet.from_indices(universe, idx)


def degree_preserving_shuffle(edges: EdgeSet, rng: np.random.Generator,
                              swap_factor: int = 10) -> EdgeSet:
    """Randomize an edge set by repeated double-edge swaps.

    Attempts ``swap_factor * len(edges)`` swaps; each valid swap replaces
    edges (u,v), (x,y) with (u,y), (x,v), preserving every node degree.
    Swaps creating self-loops or duplicate edges are skipped.
    """
    m = len(edges)
    if m < 2:
        return edges
    pair_list = sorted(edges.pairs)
    members = set(pair_list)
    n_attempts = swap_factor * m
    picks = rng.integers(0, m, size=(n_attempts, 2))
    orients = rng.random(n_attempts) < 0.5
    for (e1, e2), flip in zip(picks.tolist(), orients.tolist()):
        if e1 == e2:
            continue
        u, v = pair_list[e1]
        x, y = pair_list[e2]
        if flip:
            x, y = y, x
        if u == y or x == v:
            continue
        new1 = (u, y) if u < y else (y, u)
        new2 = (x, v) if x < v else (v, x)
        if new1 in members or new2 in members:
            continue
        members.discard((u, v) if u < v else (v, u))
        members.discard(tuple(sorted((x, y))))
        members.add(new1)
        members.add(new2)
        pair_list[e1] = new1
        pair_list[e2] = new2
    return EdgeSet(edges.universe, frozenset(members))
