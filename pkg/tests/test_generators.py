import itertools
from fractions import Fraction

import numpy as np
import pytest

from netriad.errors import ConfigError, DegenerateDenominator
from netriad.generators import (GenParams, gen_mediated, gen_suppression,
                                gen_uncorrelated, generate, joint_pmf,
                                pair_expectation)
from netriad.netcore import NodeUniverse
from netriad.similarity import delta, nj, nj_partial

# ---------------------------------------------------------------------------
# independent oracle: enumerate the raw per-pair Bernoulli draws exactly
# ---------------------------------------------------------------------------


def _bern(p, outcome):
    return p if outcome else 1 - p


def enumerate_pmf(model, p, q=Fraction(1), mu=Fraction(0)):
    """Per-pair pmf over (a, b, c) membership, by brute enumeration."""
    pmf = {pattern: Fraction(0) for pattern in
           itertools.product((0, 1), repeat=3)}
    if model == "uncorrelated":
        for da, db, dc in itertools.product((0, 1), repeat=3):
            prob = _bern(p, da) * _bern(p, db) * _bern(p, dc)
            pmf[(da, db, dc)] += prob
    elif model == "mediated":
        for da, db, dc in itertools.product((0, 1), repeat=3):
            prob = _bern(p, da) * _bern(p, db) * _bern(p, dc)
            pmf[(da | dc, db | dc, dc)] += prob
    elif model == "suppression":
        for da, db, dc, dx in itertools.product((0, 1), repeat=4):
            prob = (_bern(p, da) * _bern(p, db) * _bern(p, dc)
                    * _bern(q, dx))
            b = db | ((da ^ dc) & dx)
            pmf[(da, b, dc)] += prob
    elif model == "interpolated":
        med = enumerate_pmf("mediated", p, q)
        sup = enumerate_pmf("suppression", p, q)
        for k in pmf:
            pmf[k] = (1 - mu) * med[k] + mu * sup[k]
    return pmf


def expected_measures(pmf):
    """(exp_nj, exp_nj_partial, exp_delta) as exact fractions."""
    p_ab = sum(v for (a, b, _), v in pmf.items() if a and b)
    p_union = sum(v for (a, b, _), v in pmf.items() if a or b)
    p_ab_nc = sum(v for (a, b, c), v in pmf.items() if a and b and not c)
    p_union_nc = sum(v for (a, b, c), v in pmf.items()
                     if (a or b) and not c)
    exp_nj = p_ab / p_union
    exp_njp = p_ab_nc / p_union_nc
    return exp_nj, exp_njp, exp_njp - exp_nj


GRID = [
    ("uncorrelated", Fraction(1, 2), Fraction(1), Fraction(0)),
    ("uncorrelated", Fraction(3, 10), Fraction(1), Fraction(0)),
    ("mediated", Fraction(1, 2), Fraction(1), Fraction(0)),
    ("mediated", Fraction(3, 10), Fraction(1), Fraction(0)),
    ("suppression", Fraction(1, 2), Fraction(1), Fraction(0)),
    ("suppression", Fraction(2, 5), Fraction(3, 5), Fraction(0)),
    ("interpolated", Fraction(1, 2), Fraction(1), Fraction(3, 10)),
    ("interpolated", Fraction(2, 5), Fraction(7, 10), Fraction(3, 5)),
]


class TestOracleAgainstEnumeration:
    @pytest.mark.parametrize("model,p,q,mu", GRID)
    def test_joint_pmf_matches_enumeration(self, model, p, q, mu):
        params = GenParams(n_nodes=10, p=float(p), q=float(q), mu=float(mu),
                           model=model)
        pmf = joint_pmf(params)
        ref = enumerate_pmf(model, p, q, mu)
        for pattern, prob in ref.items():
            assert pmf[pattern] == pytest.approx(float(prob), abs=1e-12)

    @pytest.mark.parametrize("model,p,q,mu", GRID)
    def test_pair_expectation_matches_enumeration(self, model, p, q, mu):
        params = GenParams(n_nodes=10, p=float(p), q=float(q), mu=float(mu),
                           model=model)
        pe = pair_expectation(params)
        exp_nj, exp_njp, exp_delta = expected_measures(
            enumerate_pmf(model, p, q, mu))
        assert pe.exp_nj == pytest.approx(float(exp_nj), abs=1e-12)
        assert pe.exp_nj_partial == pytest.approx(float(exp_njp), abs=1e-12)
        assert pe.exp_delta == pytest.approx(float(exp_delta), abs=1e-12)

    def test_frozen_values_p_half(self):
        # hand-enumerated joint outcomes at p = 1/2 (and q = 1)
        med = pair_expectation(GenParams(n_nodes=50, p=0.5, model="mediated"))
        assert med.exp_nj == pytest.approx(float(Fraction(5, 7)))
        assert med.exp_nj_partial == pytest.approx(float(Fraction(1, 3)))
        assert med.exp_delta == pytest.approx(float(Fraction(-8, 21)))
        sup = pair_expectation(GenParams(n_nodes=50, p=0.5, q=1.0,
                                         model="suppression"))
        assert sup.exp_nj == pytest.approx(float(Fraction(3, 7)))
        assert sup.exp_nj_partial == pytest.approx(float(Fraction(2, 3)))
        assert sup.exp_delta == pytest.approx(float(Fraction(5, 21)))

    @pytest.mark.parametrize("p", [0.1, 0.4, 0.9])
    def test_uncorrelated_closed_form(self, p):
        pe = pair_expectation(GenParams(n_nodes=50, p=p,
                                        model="uncorrelated"))
        assert pe.exp_nj == pytest.approx(p / (2 - p))
        assert pe.exp_nj_partial == pytest.approx(p / (2 - p))
        assert pe.exp_delta == pytest.approx(0.0, abs=1e-15)

    def test_residual_densities(self):
        pe = pair_expectation(GenParams(n_nodes=50, p=0.5, q=1.0,
                                        model="suppression"))
        # P(a, not c), P(c, not a), P(b outside both) at p = 1/2, q = 1
        assert pe.exp_ap == pytest.approx(0.25)
        assert pe.exp_cp == pytest.approx(0.25)
        assert pe.exp_r == pytest.approx(0.125)

    def test_degenerate_denominator_p_zero(self):
        with pytest.raises(DegenerateDenominator):
            pair_expectation(GenParams(n_nodes=50, p=0.0,
                                       model="uncorrelated"))

    def test_degenerate_conditioned_denominator(self):
        # mediated at p = 1: c is complete, conditioning removes everything
        with pytest.raises(DegenerateDenominator):
            pair_expectation(GenParams(n_nodes=50, p=1.0, model="mediated"))


class TestDistributionEndpoints:
    def test_suppression_q_zero_is_uncorrelated(self):
        a = joint_pmf(GenParams(n_nodes=20, p=0.37, q=0.0,
                                model="suppression"))
        b = joint_pmf(GenParams(n_nodes=20, p=0.37, model="uncorrelated"))
        assert np.allclose(a, b, atol=1e-15)

    def test_interpolated_mu_zero_is_mediated(self):
        a = joint_pmf(GenParams(n_nodes=20, p=0.37, q=0.8, mu=0.0,
                                model="interpolated"))
        b = joint_pmf(GenParams(n_nodes=20, p=0.37, model="mediated"))
        assert np.allclose(a, b, atol=1e-15)

    def test_interpolated_mu_one_is_suppression(self):
        a = joint_pmf(GenParams(n_nodes=20, p=0.37, q=0.8, mu=1.0,
                                model="interpolated"))
        b = joint_pmf(GenParams(n_nodes=20, p=0.37, q=0.8,
                                model="suppression"))
        assert np.allclose(a, b, atol=1e-15)

    def test_mixture_identity_exact(self):
        mu = 0.42
        med = joint_pmf(GenParams(n_nodes=20, p=0.3, q=0.9,
                                  model="mediated"))
        sup = joint_pmf(GenParams(n_nodes=20, p=0.3, q=0.9,
                                  model="suppression"))
        mix = joint_pmf(GenParams(n_nodes=20, p=0.3, q=0.9, mu=mu,
                                  model="interpolated"))
        assert np.allclose(mix, (1 - mu) * med + mu * sup, atol=1e-15)


class TestGeneration:
    @pytest.mark.parametrize("model", ["uncorrelated", "mediated",
                                       "suppression", "interpolated"])
    def test_determinism(self, model):
        params = GenParams(n_nodes=30, p=0.4, q=0.7, mu=0.5, model=model)
        t1 = generate(params, 123)
        t2 = generate(params, 123)
        assert (t1.a, t1.b, t1.c) == (t2.a, t2.b, t2.c)
        t3 = generate(params, 124)
        assert (t3.a, t3.b, t3.c) != (t1.a, t1.b, t1.c)

    def test_p_zero_empty(self):
        t = gen_uncorrelated(GenParams(n_nodes=20, p=0.0), 1)
        assert len(t.a) == len(t.b) == len(t.c) == 0

    def test_p_one_complete(self):
        t = gen_uncorrelated(GenParams(n_nodes=20, p=1.0), 1)
        full = NodeUniverse(20).pair_count
        assert len(t.a) == len(t.b) == len(t.c) == full

    def test_model_field_enforced(self):
        with pytest.raises(ConfigError):
            gen_mediated(GenParams(n_nodes=20, p=0.5,
                                   model="uncorrelated"), 1)

    def test_param_validation(self):
        with pytest.raises(ConfigError):
            GenParams(n_nodes=1, p=0.5)
        with pytest.raises(ConfigError):
            GenParams(n_nodes=10, p=1.5)
        with pytest.raises(ConfigError):
            GenParams(n_nodes=10, p=0.5, model="nope")

    def test_mediated_structure(self):
        params = GenParams(n_nodes=40, p=0.5, model="mediated")
        for seed in range(25):
            t = gen_mediated(params, seed)
            assert t.c.pairs <= (t.a & t.b).pairs

    def test_suppression_structure_q_one(self):
        params = GenParams(n_nodes=40, p=0.5, q=1.0, model="suppression")
        for seed in range(25):
            t = gen_suppression(params, seed)
            assert (t.a ^ t.c).pairs <= t.b.pairs

    def test_documented_draw_order(self):
        # seed portability contract: row-major pairs, (A, B, C) columns
        params = GenParams(n_nodes=15, p=0.35, model="uncorrelated")
        t = generate(params, 99)
        u = np.random.default_rng(99).random((params.universe.pair_count, 3))
        pairs = list(params.universe.all_pairs())
        for col, layer in ((0, t.a), (1, t.b), (2, t.c)):
            expect = {pairs[k] for k in np.flatnonzero(u[:, col] < 0.35)}
            assert layer.pairs == frozenset(expect)


def _ensemble_means(params, n_triplets, base_seed):
    njs, njps, deltas = [], [], []
    for s in range(n_triplets):
        t = generate(params, np.random.SeedSequence(base_seed,
                                                    spawn_key=(s,)))
        njs.append(nj(t.a, t.b))
        njps.append(nj_partial(t.a, t.b, t.c))
        deltas.append(delta(t.a, t.b, t.c))
    return np.array(njs), np.array(njps), np.array(deltas)


class TestMonteCarloAgreement:
    @pytest.mark.parametrize("model,p,q,mu", [
        ("uncorrelated", 0.5, 1.0, 0.0),
        ("mediated", 0.5, 1.0, 0.0),
        ("mediated", 0.3, 1.0, 0.0),
        ("suppression", 0.5, 1.0, 0.0),
        ("suppression", 0.4, 0.6, 0.0),
        ("interpolated", 0.5, 1.0, 0.3),
    ])
    def test_means_within_three_standard_errors(self, model, p, q, mu):
        params = GenParams(n_nodes=100, p=p, q=q, mu=mu, model=model)
        pe = pair_expectation(params)
        n = 500
        njs, njps, deltas = _ensemble_means(params, n, base_seed=2024)
        for sample, expect in ((njs, pe.exp_nj),
                               (njps, pe.exp_nj_partial),
                               (deltas, pe.exp_delta)):
            se = sample.std(ddof=1) / np.sqrt(n)
            assert abs(sample.mean() - expect) < 3 * se

    def test_mixture_identity_on_counts(self):
        # ensemble-mean per-pair densities of the interpolated model match
        # the (1-mu, mu) mixture of the pure models' expected densities
        mu, p, q, n = 0.4, 0.4, 0.8, 300
        params = GenParams(n_nodes=100, p=p, q=q, mu=mu,
                           model="interpolated")
        pair_count = params.universe.pair_count
        ab, union, ab_nc, union_nc = [], [], [], []
        for s in range(n):
            t = generate(params, np.random.SeedSequence(77, spawn_key=(s,)))
            inter = t.a & t.b
            uni = t.a | t.b
            ab.append(len(inter) / pair_count)
            union.append(len(uni) / pair_count)
            ab_nc.append(len(inter - t.c) / pair_count)
            union_nc.append(len(uni - t.c) / pair_count)
        pe = pair_expectation(params)
        for sample, expect in ((ab, pe.p_ab), (union, pe.p_union_ab),
                               (ab_nc, pe.p_ab_minus_c),
                               (union_nc, pe.p_union_ab_minus_c)):
            arr = np.array(sample)
            se = arr.std(ddof=1) / np.sqrt(n)
            assert abs(arr.mean() - expect) < 4 * se + 1e-9


class TestMediatedSignExactness:
    def test_exact_negative_delta_under_hypothesis(self):
        # whenever a and b share an edge outside a nonempty c and a != b,
        # the net difference is strictly negative (not just on average)
        params = GenParams(n_nodes=20, p=0.3, model="mediated")
        checked = 0
        for seed in range(300):
            t = gen_mediated(params, seed)
            shared_outside = (t.a & t.b) - t.c
            if len(shared_outside) == 0 or t.a == t.b or len(t.c) == 0:
                continue
            assert delta(t.a, t.b, t.c) < 0
            checked += 1
        assert checked > 250
