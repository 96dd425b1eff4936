"""Ensemble summaries and histograms for simulation output.

The standard deviation is the sample definition (n-1 denominator)
throughout the package; a single-value ensemble reports std 0.
"""

from __future__ import annotations

from dataclasses import dataclass
import math
from typing import Sequence

import numpy as np

from .errors import EmptyEnsemble, NonMonotonicEdges


@dataclass(frozen=True)
class EnsembleSummary:
    n: int
    mean: float
    std: float
    min: float
    max: float


def summarize(values: Sequence[float]) -> EnsembleSummary:
    """Exact sample moments of a nonempty ensemble.

    Sums use exactly rounded accumulation (math.fsum), so the result is
    independent of input order, not just approximately so.

    Raises:
        EmptyEnsemble: if ``values`` is empty.
    """
    vals = [float(v) for v in values]
    if not vals:
        raise EmptyEnsemble("cannot summarize an empty ensemble")
    n = len(vals)
    mean = math.fsum(vals) / n
    if n > 1:
        std = math.sqrt(math.fsum((v - mean) ** 2 for v in vals) / (n - 1))
    else:
        std = 0.0
    return EnsembleSummary(n=n, mean=mean, std=std,
                           min=min(vals), max=max(vals))


@dataclass(frozen=True)
class Histogram:
    """Bin counts with half-open bins [e_i, e_{i+1}); the last bin is
    closed on the right. Values beyond the outer edges land in the
    underflow/overflow counters, so total counts always equal the input
    size."""

    bin_edges: tuple[float, ...]
    counts: tuple[int, ...]
    underflow: int
    overflow: int

    @property
    def total(self) -> int:
        return sum(self.counts) + self.underflow + self.overflow


def histogram(values: Sequence[float], bins=30) -> Histogram:
    """Histogram of an ensemble.

    Args:
        values: nonempty sequence of reals.
        bins: either a bin count (edges span the observed range; a
            degenerate all-equal sample gets a unit-width range around it)
            or an explicit strictly increasing edge sequence.

    Raises:
        EmptyEnsemble: if ``values`` is empty.
        NonMonotonicEdges: if explicit edges are not strictly increasing.
    """
    arr = np.asarray(values, dtype=float)
    if arr.size == 0:
        raise EmptyEnsemble("cannot histogram an empty ensemble")
    if np.isscalar(bins) and isinstance(bins, (int, np.integer)):
        if bins < 1:
            raise NonMonotonicEdges("need at least one bin")
        lo, hi = float(arr.min()), float(arr.max())
        if lo == hi:
            lo, hi = lo - 0.5, hi + 0.5
        edges = np.linspace(lo, hi, int(bins) + 1)
    else:
        edges = np.asarray(bins, dtype=float)
        if edges.ndim != 1 or edges.size < 2 or not np.all(np.diff(edges) > 0):
            raise NonMonotonicEdges("bin edges must be strictly increasing")
    underflow = int(np.sum(arr < edges[0]))
    overflow = int(np.sum(arr > edges[-1]))
    counts, _ = np.histogram(arr, bins=edges)
    return Histogram(bin_edges=tuple(float(e) for e in edges),
                     counts=tuple(int(c) for c in counts),
                     underflow=underflow, overflow=overflow)
