"""Rewiring null models that disentangle mediation from suppression.

A single net difference cannot separate coexisting mechanisms, so layer B
is rewired selectively and the net difference recomputed:

- mode ``S`` (suppression removal): every edge of b lying in the symmetric
  difference of a and c is relocated to a vacant pair, destroying any
  exclusive-or coupling between B and (A, C).
- mode ``M`` (mediation removal): the same treatment for every edge of b
  lying in the intersection of a and c.

Finite networks show residual mediation/suppression purely by chance, so
each selective rewiring is also applied to a fully randomized copy of b
(same edge count) as a baseline. The normalized indices divide the excess
over that baseline by the extremal effect attainable at the same edge
count (:func:`max_effect`), and a significance score expresses the excess
in units of the baseline ensemble's spread.

Relocated edges may land on any currently vacant pair, including pairs
that re-trigger the removed condition; the randomized baseline absorbs
exactly that residual, which is why it is subtracted.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import joblib
import numpy as np

from ._sampling import uniform_edge_set
from .errors import (EmptyConditionedUnion, EmptyEnsemble, EmptyUnion,
                     NoVacantPair)
from .netcore import EdgeSet
from .seeding import as_rng, child_seed
from .similarity import delta
from .stats import summarize

# an |X_max| below this is treated as "no effect attainable at all"
_ZERO_MAX_EFFECT = 1e-9


class RewireMode(str, Enum):
    SUPPRESSION_REMOVAL = "S"
    MEDIATION_REMOVAL = "M"


def full_rewire(b: EdgeSet, seed=None) -> EdgeSet:
    """Uniformly random edge set with the same universe and edge count."""
    return uniform_edge_set(b.universe, len(b), as_rng(seed))


def _removal_region(a: EdgeSet, c: EdgeSet, mode: RewireMode,
                    one_sided: bool) -> EdgeSet:
    if mode is RewireMode.MEDIATION_REMOVAL:
        return a.intersect(c)
    if one_sided:
        return a.subtract(c)
    return a.symmetric_difference(c)


def selective_rewire(a: EdgeSet, b: EdgeSet, c: EdgeSet, mode, seed=None,
                     one_sided: bool = False) -> EdgeSet:
    """Relocate the b-edges implicated in one mechanism to vacant pairs.

    Every edge of b inside the mode's removal region is deleted and
    re-inserted at a pair chosen uniformly among currently absent pairs.
    Since each insertion is uniform over the remaining vacancies, the
    relocated edges form a uniform subset of the vacancy pool left after
    deletion, which is how they are sampled here (in one draw). The result
    always has exactly ``len(b)`` edges.

    Args:
        mode: ``"S"`` / ``"M"`` or a :class:`RewireMode`.
        one_sided: restrict mode S to edges in a but not c (the asymmetric
            variant), instead of the default symmetric difference.

    Raises:
        NoVacantPair: if the vacancy pool cannot absorb the moved edges
            (cannot occur while ``len(b)`` fits in the universe; kept as a
            guard).
    """
    mode = RewireMode(mode)
    a._check(b)
    a._check(c)
    moved = b.index_set & _removal_region(a, c, mode, one_sided).index_set
    if not moved:
        return b
    keep = b.index_set - moved
    universe = b.universe
    occupied = np.zeros(universe.pair_count, dtype=bool)
    if keep:
        occupied[np.fromiter(keep, dtype=np.int64, count=len(keep))] = True
    vacant = np.flatnonzero(~occupied)
    if len(vacant) < len(moved):
        raise NoVacantPair(f"{len(moved)} edges to relocate but only "
                           f"{len(vacant)} vacant pairs")
    new_idx = as_rng(seed).choice(vacant, size=len(moved), replace=False)
    return EdgeSet.from_index_set(universe,
                                  keep | frozenset(new_idx.tolist()))


def max_effect(a: EdgeSet, b: EdgeSet, c: EdgeSet, mode,
               n_surrogates: int = 20, seed=None) -> float:
    """Net difference of an extremal surrogate B* at b's edge count.

    Mode S builds the strongest suppression surrogate: B* fills the
    symmetric difference of a and c first and scatters any remaining edges
    uniformly outside it. Mode M fills the intersection of a and c first.
    When the construction involves a random choice (region not exactly
    filled), the result is averaged over ``n_surrogates`` surrogates.

    Returns the signed average; callers normalizing by it should clamp to
    the mode's sign (S >= 0 >= M) before dividing.
    """
    mode = RewireMode(mode)
    a._check(b)
    a._check(c)
    universe = b.universe
    region_idx = _removal_region(a, c, mode, one_sided=False).to_indices()
    m = len(b)
    deterministic = m == 0 or m == len(region_idx) or m == universe.pair_count
    reps = 1 if deterministic else n_surrogates
    rng = as_rng(seed)
    values = []
    for _ in range(reps):
        if m <= len(region_idx):
            idx = rng.choice(region_idx, size=m, replace=False)
        else:
            outside = np.ones(universe.pair_count, dtype=bool)
            outside[region_idx] = False
            pool = np.flatnonzero(outside)
            extra = rng.choice(pool, size=m - len(region_idx), replace=False)
            idx = np.concatenate([region_idx, extra])
        values.append(delta(a, EdgeSet.from_indices(universe, idx), c))
    return float(np.mean(values))


@dataclass(frozen=True)
class TriadReport:
    """Outcome of the full rewiring analysis for one (a, b, c) assignment.

    Ensembles hold one value per surviving realization (equal length
    across the four). ``m_max <= 0 <= s_max`` by construction; when the
    relevant extremal effect is ~0 the corresponding index is NaN and a
    flag is recorded, and a zero-variance baseline reports an infinite
    significance with a flag.
    """

    delta0: float
    delta_s: tuple[float, ...]
    delta_m: tuple[float, ...]
    delta_rs: tuple[float, ...]
    delta_rm: tuple[float, ...]
    m_bar: float
    s_bar: float
    sigma_s: float
    sigma_m: float
    m_max: float
    s_max: float
    skipped: int
    flags: tuple[str, ...] = ()

    @property
    def n_realizations(self) -> int:
        return len(self.delta_s)


def _rewire_realization(a, b, c, seed, r, one_sided):
    """Deltas (S, M, RS, RM) for realization r, or None if degenerate."""
    try:
        d_s = delta(a, selective_rewire(a, b, c, "S", child_seed(seed, r, 0),
                                        one_sided=one_sided), c)
        d_m = delta(a, selective_rewire(a, b, c, "M",
                                        child_seed(seed, r, 1)), c)
        b2 = full_rewire(b, child_seed(seed, r, 2))
        d_rs = delta(a, selective_rewire(a, b2, c, "S", child_seed(seed, r, 3),
                                         one_sided=one_sided), c)
        d_rm = delta(a, selective_rewire(a, b2, c, "M",
                                         child_seed(seed, r, 4)), c)
        return d_s, d_m, d_rs, d_rm
    except (EmptyUnion, EmptyConditionedUnion):
        return None


def triad_indices(a: EdgeSet, b: EdgeSet, c: EdgeSet,
                  n_realizations: int = 500, seed: int = 0,
                  one_sided: bool = False, max_surrogates: int = 20,
                  workers: int = 1) -> TriadReport:
    """Full rewiring analysis of the role c plays between a and b.

    For each of ``n_realizations`` independent realizations, computes the
    net difference after suppression removal and after mediation removal,
    both on b itself and on a fresh full randomization of b (the
    finite-size baseline). Normalized indices and significances:

    - m_bar = (mean delta_S - mean delta_RS) / M_max
    - s_bar = (mean delta_M - mean delta_RM) / S_max
    - sigma_X = |mean delta_X - mean delta_RX| / std(delta_RX)

    Realization r draws its five child streams from ``seed`` keyed by
    (r, slot); the two extremal normalizers use keys (n_realizations, 0/1).
    Results are identical for any ``workers`` value.

    Raises:
        EmptyUnion / EmptyConditionedUnion: if the original triplet's own
            net difference is undefined.
        EmptyEnsemble: if every realization was degenerate.
    """
    delta0 = delta(a, b, c)
    if workers == 1:
        results = [_rewire_realization(a, b, c, seed, r, one_sided)
                   for r in range(n_realizations)]
    else:
        results = joblib.Parallel(n_jobs=workers)(
            joblib.delayed(_rewire_realization)(a, b, c, seed, r, one_sided)
            for r in range(n_realizations))
    kept = [x for x in results if x is not None]
    skipped = n_realizations - len(kept)
    if not kept:
        raise EmptyEnsemble("every rewiring realization was degenerate")
    d_s, d_m, d_rs, d_rm = (list(col) for col in zip(*kept))

    def clamped_max_effect(mode, slot, clamp):
        # a degenerate extremal surrogate means no effect is attainable,
        # which the zero-max-effect flag already expresses
        try:
            raw = max_effect(a, b, c, mode, n_surrogates=max_surrogates,
                             seed=child_seed(seed, n_realizations, slot))
        except (EmptyUnion, EmptyConditionedUnion):
            return 0.0
        return clamp(0.0, raw)

    m_max = clamped_max_effect("M", 0, min)
    s_max = clamped_max_effect("S", 1, max)

    flags = []
    excess_s = summarize(d_s).mean - summarize(d_rs).mean
    excess_m = summarize(d_m).mean - summarize(d_rm).mean
    if m_max <= -_ZERO_MAX_EFFECT:
        m_bar = excess_s / m_max
    else:
        m_bar = float("nan")
        flags.append("zero_max_effect_m")
    if s_max >= _ZERO_MAX_EFFECT:
        s_bar = excess_m / s_max
    else:
        s_bar = float("nan")
        flags.append("zero_max_effect_s")

    def significance(excess, baseline, label):
        spread = summarize(baseline).std
        if spread == 0.0:
            flags.append(f"zero_null_variance_{label}")
            return float("inf")
        return abs(excess) / spread

    sigma_s = significance(excess_s, d_rs, "s")
    sigma_m = significance(excess_m, d_rm, "m")

    return TriadReport(delta0=delta0,
                       delta_s=tuple(d_s), delta_m=tuple(d_m),
                       delta_rs=tuple(d_rs), delta_rm=tuple(d_rm),
                       m_bar=m_bar, s_bar=s_bar,
                       sigma_s=sigma_s, sigma_m=sigma_m,
                       m_max=m_max, s_max=s_max,
                       skipped=skipped, flags=tuple(flags))
