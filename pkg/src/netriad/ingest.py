"""Parsing and preparation of real-world multiplex edge lists.

File format: whitespace-separated records ``layer node_i node_j [weight]``,
one per line; ``#`` starts a comment line; a missing weight defaults to 1.
Records are symmetrized (an undirected edge per unordered node pair),
duplicate records for the same layer and pair are merged by summing
weights, and self-loops are dropped (counted). Node identifiers are
arbitrary whitespace-free strings, mapped to dense 0-based indices in
order of first appearance.

The node universe of a dataset is the union of nodes appearing in any
record, so a node isolated in one layer still belongs to every layer's
universe. Overlap measures depend only on edge sets; the universe size
additionally fixes the vacancy pool of the rewiring null models, so it is
kept explicit for reproducibility.
"""

from __future__ import annotations

import io
import math
import os
from dataclasses import dataclass, field

from .errors import (ConfigError, EmptyInput, ParseError, TooFewEdges,
                     UnknownLayer)
from .netcore import EdgeSet, NodePair, NodeUniverse, Triplet


@dataclass(frozen=True)
class MultiplexDataset:
    """Named weighted layers over one shared node universe.

    Treat instances as immutable: the dicts are owned by the dataset and
    must not be mutated after construction.
    """

    node_names: tuple[str, ...]
    layers: dict[str, dict[NodePair, float]]
    dropped_self_loops: int = 0

    @property
    def n_nodes(self) -> int:
        return len(self.node_names)

    @property
    def universe(self) -> NodeUniverse:
        return NodeUniverse(self.n_nodes)

    @property
    def layer_names(self) -> tuple[str, ...]:
        return tuple(self.layers)

    def layer_edge_count(self, name: str) -> int:
        if name not in self.layers:
            raise UnknownLayer(f"no layer named {name!r}; "
                               f"have {sorted(self.layers)}")
        return len(self.layers[name])

    def named_edges(self) -> dict[str, dict[tuple[str, str], float]]:
        """Layers keyed by node names instead of indices (for comparing
        datasets whose index assignments differ)."""
        out = {}
        for layer, edges in self.layers.items():
            out[layer] = {
                (self.node_names[i], self.node_names[j]): w
                for (i, j), w in edges.items()
            }
        return out


def _iter_lines(source):
    if isinstance(source, (str, os.PathLike)):
        with open(source, "r", encoding="utf-8") as fh:
            yield from fh
    else:
        yield from source


def parse_multiplex(source) -> MultiplexDataset:
    """Parse an edge-list file (path or line iterable) into a dataset.

    Raises:
        ParseError: malformed record, with its line number.
        EmptyInput: no edge records at all.
    """
    node_index: dict[str, int] = {}
    layers: dict[str, dict[NodePair, float]] = {}
    dropped = 0
    for lineno, raw in enumerate(_iter_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) not in (3, 4):
            raise ParseError(f"expected 'layer node node [weight]', "
                             f"got {len(tokens)} fields", lineno)
        layer, u, v = tokens[0], tokens[1], tokens[2]
        if len(tokens) == 4:
            try:
                weight = float(tokens[3])
            except ValueError:
                raise ParseError(f"bad weight {tokens[3]!r}", lineno) from None
            if not math.isfinite(weight):
                raise ParseError(f"non-finite weight {tokens[3]!r}", lineno)
        else:
            weight = 1.0
        if u == v:
            dropped += 1
            continue
        iu = node_index.setdefault(u, len(node_index))
        iv = node_index.setdefault(v, len(node_index))
        pair = (iu, iv) if iu < iv else (iv, iu)
        edges = layers.setdefault(layer, {})
        edges[pair] = edges.get(pair, 0.0) + weight
    if not layers:
        raise EmptyInput("no edge records in input")
    names = tuple(node_index)  # insertion order == first appearance
    return MultiplexDataset(node_names=names, layers=layers,
                            dropped_self_loops=dropped)


def serialize_multiplex(ds: MultiplexDataset) -> str:
    """Canonical text form: layers sorted by name, edges by node index.

    Serialization is a fixed point of parse-then-serialize, which makes
    the output suitable for golden-file diffs.
    """
    out = io.StringIO()
    for layer in sorted(ds.layers):
        for (i, j) in sorted(ds.layers[layer]):
            w = ds.layers[layer][(i, j)]
            out.write(f"{layer} {ds.node_names[i]} {ds.node_names[j]} "
                      f"{w!r}\n")
    return out.getvalue()


def write_multiplex(ds: MultiplexDataset, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_multiplex(ds))


def binarize_layer(ds: MultiplexDataset, name: str) -> EdgeSet:
    """Edge set of one layer: a pair is an edge iff its weight is > 0."""
    if name not in ds.layers:
        raise UnknownLayer(f"no layer named {name!r}; "
                           f"have {sorted(ds.layers)}")
    pairs = frozenset(p for p, w in ds.layers[name].items() if w > 0)
    return EdgeSet(ds.universe, pairs)


def extract_triplet(ds: MultiplexDataset, names) -> Triplet:
    """Binarized triplet with ``names`` assigned to roles (A, B, C).

    Raises:
        UnknownLayer: if any requested layer is missing.
    """
    names = tuple(names)
    if len(names) != 3:
        raise ConfigError(f"need exactly 3 layer names, got {len(names)}")
    a, b, c = (binarize_layer(ds, n) for n in names)
    return Triplet(a, b, c, labels=names)


@dataclass(frozen=True)
class WindowSpec:
    """Equal-count weight windows described by k+1 increasing thresholds.

    ``boundaries[m]..boundaries[m+1]`` is the weight range of the
    (k-1-m)-th window of :func:`weight_windows` (windows there are ordered
    strongest first, boundaries ascend in weight).
    """

    k: int
    boundaries: tuple[float, ...] = field(default=())

    def __post_init__(self):
        if self.k < 1:
            raise ConfigError(f"need k >= 1 windows, got {self.k}")
        if len(self.boundaries) != self.k + 1:
            raise ConfigError(f"need {self.k + 1} boundaries for k={self.k}")
        if any(b2 <= b1 for b1, b2 in zip(self.boundaries,
                                          self.boundaries[1:])):
            raise ConfigError("boundaries must be strictly increasing")


def _sorted_layer_edges(ds: MultiplexDataset, name: str):
    """Layer edges sorted strongest weight first, pair order as tie-break."""
    if name not in ds.layers:
        raise UnknownLayer(f"no layer named {name!r}; "
                           f"have {sorted(ds.layers)}")
    return sorted(ds.layers[name].items(), key=lambda kv: (-kv[1], kv[0]))


def _window_slices(n_edges: int, k: int):
    base, rem = divmod(n_edges, k)
    sizes = [base + 1 if w < rem else base for w in range(k)]
    start = 0
    for size in sizes:
        yield start, start + size
        start += size


def weight_windows(ds: MultiplexDataset, layer: str, k: int = 7) -> list[EdgeSet]:
    """Split a weighted layer into k equal-count weight windows.

    Edges are sorted by descending weight (ties broken by canonical pair
    order for determinism) and cut into k contiguous groups whose sizes
    differ by at most 1 (the strongest-weight windows absorb remainders).
    Window 0 contains the largest weights: for signal-strength data that
    is the closest-proximity scale.

    Raises:
        TooFewEdges: if the layer has fewer than k weighted edges.
    """
    edges = _sorted_layer_edges(ds, layer)
    if len(edges) < k:
        raise TooFewEdges(f"layer {layer!r} has {len(edges)} edges, "
                          f"needs >= {k}")
    universe = ds.universe
    return [EdgeSet(universe, frozenset(p for p, _ in edges[lo:hi]))
            for lo, hi in _window_slices(len(edges), k)]


def window_spec(ds: MultiplexDataset, layer: str, k: int = 7) -> WindowSpec:
    """Weight thresholds of the k equal-count windows.

    Interior boundaries are midpoints between adjacent windows' extreme
    weights; the outer boundaries are the observed min and max.

    Raises:
        ConfigError: if weight ties straddle a cut, leaving no strictly
            increasing thresholds (the windows themselves are still well
            defined via :func:`weight_windows`).
    """
    edges = _sorted_layer_edges(ds, layer)
    if len(edges) < k:
        raise TooFewEdges(f"layer {layer!r} has {len(edges)} edges, "
                          f"needs >= {k}")
    weights = [w for _, w in edges]  # descending
    bounds = [weights[-1]]
    for lo, hi in reversed(list(_window_slices(len(edges), k))):
        if lo == 0:
            bounds.append(weights[0])
        else:
            bounds.append((weights[lo] + weights[lo - 1]) / 2.0)
    return WindowSpec(k=k, boundaries=tuple(bounds))
