"""Immutable edge sets over a fixed node universe, plus their set algebra.

Every quantity in this package is defined on simple, undirected, unweighted
graphs sharing one node set: an edge is an unordered pair of distinct node
indices, stored canonically as ``(i, j)`` with ``i < j``. Edge sets are
frozen after construction and all operations return new objects, so values
can be shared freely across worker processes.

Pairs are numbered by a linear index in row-major order ``(0,1), (0,2),
..., (0,n-1), (1,2), ...``, which is both the storage representation (set
operations run on integers) and the order in which generators consume
random draws.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import UniverseMismatch

NodePair = tuple[int, int]


def canonical_pair(i: int, j: int) -> NodePair:
    """Return the unordered pair ``{i, j}`` in canonical ``(min, max)`` form.

    Raises:
        ValueError: if ``i == j`` (self-loops are not representable).
    """
    if i == j:
        raise ValueError(f"self-loop ({i}, {i}) is not a valid node pair")
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class NodeUniverse:
    """A fixed set of ``n_nodes`` nodes, indexed 0..n_nodes-1."""

    n_nodes: int

    def __post_init__(self):
        if self.n_nodes < 2:
            raise ValueError(f"need at least 2 nodes, got {self.n_nodes}")

    @property
    def pair_count(self) -> int:
        """Number of distinct unordered node pairs, n*(n-1)/2."""
        return self.n_nodes * (self.n_nodes - 1) // 2

    def contains_pair(self, pair: NodePair) -> bool:
        i, j = pair
        return 0 <= i < j < self.n_nodes

    def all_pairs(self) -> Iterator[NodePair]:
        """All pairs in row-major (linear index) order."""
        n = self.n_nodes
        return ((i, j) for i in range(n) for j in range(i + 1, n))

    def pair_index(self, pair: NodePair) -> int:
        i, j = pair
        return i * self.n_nodes - i * (i + 1) // 2 + (j - i - 1)


def pairs_to_indices(universe: NodeUniverse, pairs: np.ndarray) -> np.ndarray:
    """Map an ``(m, 2)`` array of canonical pairs to linear indices."""
    n = universe.n_nodes
    i = pairs[:, 0]
    j = pairs[:, 1]
    return i * n - i * (i + 1) // 2 + (j - i - 1)


def indices_to_pairs(universe: NodeUniverse, indices: np.ndarray) -> np.ndarray:
    """Map linear indices back to an ``(m, 2)`` array of canonical pairs."""
    n = universe.n_nodes
    rows = np.arange(n - 1, dtype=np.int64)
    starts = rows * n - rows * (rows + 1) // 2  # first index of row i
    i = np.searchsorted(starts, indices, side="right") - 1
    j = indices - starts[i] + i + 1
    return np.stack([i, j], axis=1)


class EdgeSet:
    """An immutable set of node pairs within one universe.

    Stored as a frozenset of linear pair indices (``index_set``); the
    ``pairs`` view materializes canonical tuples on first use. Construct
    via :meth:`from_pairs` (validates and canonicalizes arbitrary input),
    :meth:`from_indices` / :meth:`from_index_set` (trusted indices), or
    the plain constructor with already-canonical pairs.
    """

    __slots__ = ("universe", "index_set", "_pairs")

    def __init__(self, universe: NodeUniverse, pairs: Iterable[NodePair] = ()):
        self.universe = universe
        n = universe.n_nodes
        self.index_set = frozenset(
            i * n - i * (i + 1) // 2 + (j - i - 1) for i, j in pairs)
        self._pairs = None

    @classmethod
    def from_index_set(cls, universe: NodeUniverse,
                       index_set: frozenset) -> "EdgeSet":
        out = object.__new__(cls)
        out.universe = universe
        out.index_set = index_set
        out._pairs = None
        return out

    @classmethod
    def from_indices(cls, universe: NodeUniverse,
                     indices: np.ndarray) -> "EdgeSet":
        return cls.from_index_set(
            universe, frozenset(np.asarray(indices, dtype=np.int64).tolist()))

    @classmethod
    def from_pairs(cls, universe: NodeUniverse,
                   pairs: Iterable[tuple[int, int]]) -> "EdgeSet":
        canon = set()
        for i, j in pairs:
            p = canonical_pair(int(i), int(j))
            if not universe.contains_pair(p):
                raise ValueError(f"pair {p} outside universe of "
                                 f"{universe.n_nodes} nodes")
            canon.add(p)
        return cls(universe, canon)

    @classmethod
    def complete(cls, universe: NodeUniverse) -> "EdgeSet":
        return cls.from_index_set(universe,
                                  frozenset(range(universe.pair_count)))

    @property
    def pairs(self) -> frozenset:
        """Member pairs as canonical ``(i, j)`` tuples."""
        if self._pairs is None:
            if not self.index_set:
                self._pairs = frozenset()
            else:
                arr = indices_to_pairs(self.universe, self.to_indices())
                self._pairs = frozenset(map(tuple, arr.tolist()))
        return self._pairs

    def to_indices(self) -> np.ndarray:
        """Sorted linear indices of the member pairs."""
        arr = np.fromiter(self.index_set, dtype=np.int64,
                          count=len(self.index_set))
        arr.sort()
        return arr

    # set algebra; all operations require a shared universe and are pure

    def _check(self, other: "EdgeSet") -> None:
        if self.universe != other.universe:
            raise UniverseMismatch(
                f"universes differ: {self.universe.n_nodes} vs "
                f"{other.universe.n_nodes} nodes")

    def intersect(self, other: "EdgeSet") -> "EdgeSet":
        """Pairs present in both edge sets."""
        self._check(other)
        return EdgeSet.from_index_set(self.universe,
                                      self.index_set & other.index_set)

    def unite(self, other: "EdgeSet") -> "EdgeSet":
        """Pairs present in either edge set."""
        self._check(other)
        return EdgeSet.from_index_set(self.universe,
                                      self.index_set | other.index_set)

    def subtract(self, other: "EdgeSet") -> "EdgeSet":
        """Pairs of this set that are absent from ``other``."""
        self._check(other)
        return EdgeSet.from_index_set(self.universe,
                                      self.index_set - other.index_set)

    def symmetric_difference(self, other: "EdgeSet") -> "EdgeSet":
        """Pairs present in exactly one of the two edge sets."""
        self._check(other)
        return EdgeSet.from_index_set(self.universe,
                                      self.index_set ^ other.index_set)

    __and__ = intersect
    __or__ = unite
    __sub__ = subtract
    __xor__ = symmetric_difference

    def __len__(self) -> int:
        return len(self.index_set)

    def __contains__(self, pair) -> bool:
        return (self.universe.contains_pair(pair)
                and self.universe.pair_index(pair) in self.index_set)

    def __iter__(self) -> Iterator[NodePair]:
        return iter(self.pairs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EdgeSet):
            return NotImplemented
        return (self.universe == other.universe
                and self.index_set == other.index_set)

    def __hash__(self) -> int:
        return hash((self.universe, self.index_set))

    def __le__(self, other: "EdgeSet") -> bool:
        self._check(other)
        return self.index_set <= other.index_set

    def __repr__(self) -> str:
        return (f"EdgeSet(n_nodes={self.universe.n_nodes}, "
                f"n_edges={len(self.index_set)})")

    def __reduce__(self):
        return (EdgeSet.from_index_set, (self.universe, self.index_set))

    @property
    def density(self) -> float:
        return len(self.index_set) / self.universe.pair_count


def intersect(x: EdgeSet, y: EdgeSet) -> EdgeSet:
    return x.intersect(y)


def unite(x: EdgeSet, y: EdgeSet) -> EdgeSet:
    return x.unite(y)


def subtract(x: EdgeSet, y: EdgeSet) -> EdgeSet:
    return x.subtract(y)


def symmetric_difference(x: EdgeSet, y: EdgeSet) -> EdgeSet:
    return x.symmetric_difference(y)


@dataclass(frozen=True)
class Triplet:
    """Three labeled edge sets over one shared node universe."""

    a: EdgeSet
    b: EdgeSet
    c: EdgeSet
    labels: tuple[str, str, str] = ("A", "B", "C")

    def __post_init__(self):
        if not (self.a.universe == self.b.universe == self.c.universe):
            raise UniverseMismatch("triplet layers must share one universe")

    @property
    def universe(self) -> NodeUniverse:
        return self.a.universe
