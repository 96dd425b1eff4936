"""Shared strategies and helpers for the test suite."""

from __future__ import annotations

from hypothesis import strategies as st

from netriad.netcore import EdgeSet, NodeUniverse


@st.composite
def universe_and_edge_sets(draw, n_sets=2, max_nodes=8):
    """A small universe plus ``n_sets`` independent edge sets over it."""
    n = draw(st.integers(min_value=2, max_value=max_nodes))
    universe = NodeUniverse(n)
    all_pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    sets = tuple(
        EdgeSet(universe, frozenset(draw(
            st.sets(st.sampled_from(all_pairs)))))
        for _ in range(n_sets))
    return (universe, *sets)
