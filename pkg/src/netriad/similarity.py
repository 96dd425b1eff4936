"""Edge-overlap similarity between networks, plain and conditioned.

Three measures on edge sets a, b, c over one node universe:

- ``nj(a, b)``: |a n b| / |a u b|, the edge-set overlap ratio in [0, 1].
- ``nj_partial(a, b, c)``: |(a n b) \\ c| / |(a u b) \\ c|, the same ratio
  restricted to pairs absent from a third network c.
- ``delta(a, b, c)``: nj_partial - nj, in [-1, 1]. Its sign diagnoses the
  role of c: around 0 when c is unrelated, negative when c mediates or
  confounds the a-b relation, positive when c acts as a suppressor.

0/0 ratios raise typed errors (:class:`~netriad.errors.EmptyUnion`,
:class:`~netriad.errors.EmptyConditionedUnion`); batch pipelines catch
them and count the realization as skipped.

``pairwise_null`` answers the prior question of whether a and b are related
at all: it compares the observed overlap against uniform re-draws of both
layers at fixed edge counts.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _sampling
from .errors import EmptyConditionedUnion, EmptyUnion, InsufficientPairs
from .netcore import EdgeSet
from .seeding import child_rng
from .stats import summarize


def nj(a: EdgeSet, b: EdgeSet) -> float:
    """Overlap ratio |a n b| / |a u b| of two same-universe edge sets.

    Raises:
        EmptyUnion: if both edge sets are empty (0/0 undefined).
    """
    a._check(b)
    inter = len(a.index_set & b.index_set)
    union_size = len(a) + len(b) - inter
    if union_size == 0:
        raise EmptyUnion("both edge sets are empty; overlap ratio is 0/0")
    return inter / union_size


def distance(a: EdgeSet, b: EdgeSet) -> float:
    """The metric 1 - nj(a, b)."""
    return 1.0 - nj(a, b)


def nj_partial(a: EdgeSet, b: EdgeSet, c: EdgeSet) -> float:
    """Overlap ratio of a and b restricted to pairs absent from c.

    Raises:
        EmptyConditionedUnion: if c covers the whole of a u b, leaving a
            0/0 ratio; the net difference is undefined for such triplets.
    """
    a._check(b)
    a._check(c)
    num = len((a.index_set & b.index_set) - c.index_set)
    den = len((a.index_set | b.index_set) - c.index_set)
    if den == 0:
        raise EmptyConditionedUnion(
            "conditioning set covers the whole union of a and b")
    return num / den


def delta(a: EdgeSet, b: EdgeSet, c: EdgeSet) -> float:
    """Net difference nj_partial(a, b | c) - nj(a, b), in [-1, 1]."""
    base = nj(a, b)  # an empty union is the more fundamental degeneracy
    return nj_partial(a, b, c) - base


@dataclass(frozen=True)
class PairwiseNullSummary:
    """Observed overlap of two layers against a randomized baseline."""

    observed_nj: float
    null_mean: float
    null_std: float
    n_randomizations: int
    skipped: int = 0


def pairwise_null(a: EdgeSet, b: EdgeSet, n: int = 500, seed: int = 0,
                  degree_preserving: bool = False,
                  retry_budget: int = 100) -> PairwiseNullSummary:
    """Compare nj(a, b) against randomized re-draws of both layers.

    Each of the ``n`` realizations redraws a and b independently and
    uniformly at fixed edge counts (or, with ``degree_preserving=True``,
    shuffles each by double-edge swaps at fixed degree sequences) and
    records the overlap of the redrawn pair. Realization ``r`` uses the
    child stream keyed by ``r``, so results do not depend on evaluation
    order.

    A redrawn pair with an empty union is resampled up to ``retry_budget``
    times, then counted as skipped. (With edge counts preserved this can
    only arise from the degenerate case excluded by the precondition.)

    Raises:
        EmptyUnion: if the observed pair itself has an empty union.
        InsufficientPairs: if fewer than 2 realizations survive.
    """
    observed = nj(a, b)
    universe = a.universe
    values = []
    skipped = 0
    for r in range(n):
        rng = child_rng(seed, r)
        value = None
        for _ in range(retry_budget):
            if degree_preserving:
                a2 = _sampling.degree_preserving_shuffle(a, rng)
                b2 = _sampling.degree_preserving_shuffle(b, rng)
            else:
                a2 = _sampling.uniform_edge_set(universe, len(a), rng)
                b2 = _sampling.uniform_edge_set(universe, len(b), rng)
            try:
                value = nj(a2, b2)
                break
            except EmptyUnion:
                continue
        if value is None:
            skipped += 1
        else:
            values.append(value)
    if len(values) < 2:
        raise InsufficientPairs(
            f"only {len(values)} non-degenerate randomized pairs out of {n}")
    summary = summarize(values)
    return PairwiseNullSummary(observed_nj=observed,
                               null_mean=summary.mean,
                               null_std=summary.std,
                               n_randomizations=len(values),
                               skipped=skipped)
