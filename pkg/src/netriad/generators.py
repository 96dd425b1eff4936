"""Generative models for triplets with known ground-truth structure.

Four per-pair mechanisms over a universe of ``n_nodes``, each applied
independently to every node pair:

- ``uncorrelated``: the pair joins each of A, B, C independently with
  probability p. The net difference is 0 in expectation.
- ``mediated``: three independent draws at probability p place the pair in
  A, in B, and (third draw) in C, A, and B simultaneously, so c is always
  a subset of a n b. Conditioning on C destroys the shared part: the net
  difference is negative whenever a and b share an edge outside c.
- ``suppression``: independent draws place the pair in A, B, C; if the
  pair sits in exactly one of A and C, a fourth draw adds it to B with
  probability q. Conditioning on C then raises the overlap ratio: the net
  difference is positive in expectation.
- ``interpolated``: per pair, apply the mediated rule with probability
  1 - mu and the suppression rule with probability mu.

Random draw order is fixed so that seeds are portable: pairs are visited
in row-major linear order, and each pair consumes its draws as
(A, B, C) for uncorrelated/mediated, (A, B, C, XOR) for suppression, and
(MECHANISM, A, B, C, XOR) for interpolated. Conditional draws are always
consumed, whether or not their condition fires.

``pair_expectation`` is the verification oracle: it enumerates the exact
joint distribution of (A, B, C) membership for one pair and reports
expected densities and ratio-of-expected-count measures, which the
Monte Carlo ensembles must reproduce in the large-network regime.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import ConfigError, DegenerateDenominator
from .netcore import EdgeSet, NodeUniverse, Triplet
from .seeding import as_rng

MODELS = ("uncorrelated", "mediated", "suppression", "interpolated")


@dataclass(frozen=True)
class GenParams:
    """Parameters of one generative model.

    ``q`` only matters for the suppression mechanism (and the interpolated
    mixture); ``mu`` only for the interpolated mixture.
    """

    n_nodes: int
    p: float
    q: float = 1.0
    mu: float = 0.0
    model: str = "uncorrelated"

    def __post_init__(self):
        if self.n_nodes < 2:
            raise ConfigError(f"n_nodes must be >= 2, got {self.n_nodes}")
        for name in ("p", "q", "mu"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ConfigError(f"{name} must be in [0, 1], got {value}")
        if self.model not in MODELS:
            raise ConfigError(f"unknown model {self.model!r}; "
                              f"expected one of {MODELS}")

    @property
    def universe(self) -> NodeUniverse:
        return NodeUniverse(self.n_nodes)


def _require(params: GenParams, model: str) -> None:
    if params.model != model:
        raise ConfigError(f"params.model is {params.model!r}, "
                          f"expected {model!r}")


def _triplet(universe, a_mask, b_mask, c_mask) -> Triplet:
    return Triplet(
        EdgeSet.from_indices(universe, np.flatnonzero(a_mask)),
        EdgeSet.from_indices(universe, np.flatnonzero(b_mask)),
        EdgeSet.from_indices(universe, np.flatnonzero(c_mask)),
    )


def gen_uncorrelated(params: GenParams, seed=None) -> Triplet:
    """Three independent edge sets, each pair present with probability p."""
    _require(params, "uncorrelated")
    u = as_rng(seed).random((params.universe.pair_count, 3))
    hit = u < params.p
    return _triplet(params.universe, hit[:, 0], hit[:, 1], hit[:, 2])


def _mediated_masks(u: np.ndarray, p: float):
    d = u < p
    # third draw places the pair in C and forces it into A and B as well
    a = d[:, 0] | d[:, 2]
    b = d[:, 1] | d[:, 2]
    c = d[:, 2]
    return a, b, c


def gen_mediated(params: GenParams, seed=None) -> Triplet:
    """Triplet where every edge of C also appears in A and B."""
    _require(params, "mediated")
    u = as_rng(seed).random((params.universe.pair_count, 3))
    return _triplet(params.universe, *_mediated_masks(u, params.p))


def _suppression_masks(u: np.ndarray, p: float, q: float):
    a = u[:, 0] < p
    b_base = u[:, 1] < p
    c = u[:, 2] < p
    xor = a ^ c
    b = b_base | (xor & (u[:, 3] < q))
    return a, b, c


def gen_suppression(params: GenParams, seed=None) -> Triplet:
    """Triplet where B also receives pairs in exactly one of A, C."""
    _require(params, "suppression")
    u = as_rng(seed).random((params.universe.pair_count, 4))
    return _triplet(params.universe,
                    *_suppression_masks(u, params.p, params.q))


def gen_interpolated(params: GenParams, seed=None) -> Triplet:
    """Per-pair mixture: mediated rule w.p. 1 - mu, suppression w.p. mu."""
    _require(params, "interpolated")
    u = as_rng(seed).random((params.universe.pair_count, 5))
    take_sup = u[:, 0] < params.mu
    med_a, med_b, med_c = _mediated_masks(u[:, 1:4], params.p)
    sup_a, sup_b, sup_c = _suppression_masks(u[:, 1:5], params.p, params.q)
    a = np.where(take_sup, sup_a, med_a)
    b = np.where(take_sup, sup_b, med_b)
    c = np.where(take_sup, sup_c, med_c)
    return _triplet(params.universe, a, b, c)


_GENERATORS = {
    "uncorrelated": gen_uncorrelated,
    "mediated": gen_mediated,
    "suppression": gen_suppression,
    "interpolated": gen_interpolated,
}


def generate(params: GenParams, seed=None) -> Triplet:
    """Dispatch to the generator selected by ``params.model``."""
    return _GENERATORS[params.model](params, seed)


def joint_pmf(params: GenParams) -> np.ndarray:
    """Exact per-pair joint pmf over (A, B, C) membership, shape (2,2,2).

    ``joint_pmf(params)[a, b, c]`` is the probability that one node pair
    has membership pattern (a, b, c) under the chosen model. The
    interpolated pmf is exactly the (1 - mu, mu) mixture of the mediated
    and suppression pmfs, because the mechanism choice is made per pair.
    """
    p, q = params.p, params.q
    if params.model == "uncorrelated":
        m = np.array([1.0 - p, p])
        return np.einsum("a,b,c->abc", m, m, m)
    if params.model == "mediated":
        pmf = np.zeros((2, 2, 2))
        pmf[1, 1, 1] = p
        for a in (0, 1):
            for b in (0, 1):
                pmf[a, b, 0] = ((1.0 - p) * (p if a else 1.0 - p)
                                * (p if b else 1.0 - p))
        return pmf
    if params.model == "suppression":
        pmf = np.zeros((2, 2, 2))
        for a in (0, 1):
            for c in (0, 1):
                base = (p if a else 1.0 - p) * (p if c else 1.0 - p)
                b_prob = 1.0 - (1.0 - p) * (1.0 - q) if a != c else p
                pmf[a, 1, c] = base * b_prob
                pmf[a, 0, c] = base * (1.0 - b_prob)
        return pmf
    med = joint_pmf(replace(params, model="mediated"))
    sup = joint_pmf(replace(params, model="suppression"))
    return (1.0 - params.mu) * med + params.mu * sup


@dataclass(frozen=True)
class PairExpectation:
    """Exact per-pair membership probabilities and the expected measures.

    Ratio expectations are ratios of expected counts, which is the
    large-network limit of the ensemble means.
    """

    p_in_a: float
    p_in_b: float
    p_in_c: float
    p_ab: float
    p_union_ab: float
    p_ab_minus_c: float
    p_union_ab_minus_c: float
    exp_nj: float
    exp_nj_partial: float
    exp_delta: float
    exp_ap: float  # density of edges in A but not C
    exp_cp: float  # density of edges in C but not A
    exp_r: float   # density of edges in B outside both A and C


def pair_expectation(params: GenParams) -> PairExpectation:
    """Expected densities and measures implied by the per-pair pmf.

    Raises:
        DegenerateDenominator: if an expected denominator is 0 (for
            example p = 0, or a conditioning layer covering everything).
    """
    pmf = joint_pmf(params)
    p_in_a = float(pmf[1, :, :].sum())
    p_in_b = float(pmf[:, 1, :].sum())
    p_in_c = float(pmf[:, :, 1].sum())
    p_ab = float(pmf[1, 1, :].sum())
    p_union_ab = float(1.0 - pmf[0, 0, :].sum())
    p_ab_minus_c = float(pmf[1, 1, 0])
    p_union_ab_minus_c = float(pmf[:, :, 0].sum() - pmf[0, 0, 0])
    if p_union_ab <= 0.0:
        raise DegenerateDenominator("expected size of a u b is 0")
    if p_union_ab_minus_c <= 0.0:
        raise DegenerateDenominator("expected size of (a u b) \\ c is 0")
    exp_nj = p_ab / p_union_ab
    exp_nj_partial = p_ab_minus_c / p_union_ab_minus_c
    return PairExpectation(
        p_in_a=p_in_a, p_in_b=p_in_b, p_in_c=p_in_c,
        p_ab=p_ab, p_union_ab=p_union_ab,
        p_ab_minus_c=p_ab_minus_c,
        p_union_ab_minus_c=p_union_ab_minus_c,
        exp_nj=exp_nj, exp_nj_partial=exp_nj_partial,
        exp_delta=exp_nj_partial - exp_nj,
        exp_ap=float(pmf[1, :, 0].sum()),
        exp_cp=float(pmf[0, :, 1].sum()),
        exp_r=float(pmf[0, 1, 0]),
    )
