from __future__ import print_function

import math

import pytest

import numpy as np
from scipy import integrate, stats

from ..lib.simulator import (SimSpec, simulate_pvalues, simulate_statistics, normal_cdf, two_sided_pvalues,
                             standard_normal_stream, NormalStream, regime_summary, increasing_head, P_FLOOR)
from ..lib.fdrman import QValueVector
from ..lib.errors import InvalidSpec


def normal_pdf(t):
    return math.exp(-0.5 * t * t) / math.sqrt(2.0 * math.pi)

def normal_cdf_by_quadrature(x):
    """ Phi(x) by adaptive numerical integration of the density """
    if x < 0:
        return integrate.quad(normal_pdf, -np.inf, x, epsabs=1e-14, epsrel=1e-12)[0]
    return 0.5 + integrate.quad(normal_pdf, 0.0, x, epsabs=1e-14, epsrel=1e-12)[0]


def test_normal_cdf_values():
    """ simulate: test the normal CDF on known values and symmetry """
    assert normal_cdf(0.0) == 0.5
    assert normal_cdf(1.96) == pytest.approx(0.9750021048517795, abs=1e-12)
    rs = np.random.RandomState(0)
    for x in rs.uniform(-8, 8, size=100):
        assert abs(normal_cdf(-x) - (1.0 - normal_cdf(x))) <= 1e-12
    assert 0.0 <= normal_cdf(-40.0) <= normal_cdf(40.0) <= 1.0
    arr = normal_cdf(np.array([-1.0, 0.0, 1.0]))
    assert arr.shape == (3,)
    assert arr[1] == 0.5

def test_normal_cdf_accuracy():
    """ simulate: test the normal CDF against numerical integration on a 1601 points grid over [-8, 8] """
    grid = np.linspace(-8.0, 8.0, 1601)
    oracle = np.array([normal_cdf_by_quadrature(x) for x in grid.tolist()])
    assert np.max(np.abs(normal_cdf(grid) - oracle)) <= 1e-7

def test_two_sided_pvalues():
    """ simulate: test two-sided p-values and the floor """
    p = two_sided_pvalues([0.0, 1.959963984540054, -1.959963984540054, 50.0])
    assert p[0] == 1.0
    assert p[1] == pytest.approx(0.05, rel=1e-12)
    assert p[1] == p[2]
    assert p[3] == P_FLOOR

def test_stream_determinism():
    """ simulate: test the normal variates stream is reproducible """
    s1 = standard_normal_stream(42)
    s2 = standard_normal_stream(42)
    a = s1.draw(1000)
    assert np.array_equal(a, s2.draw(1000))
    assert not np.array_equal(a, standard_normal_stream(43).draw(1000))
    # successive draws continue the sequence
    s3 = NormalStream(42)
    first = [s3.draw() for _ in range(3)]
    assert first == a[:3].tolist()
    # 64-bit seeds are accepted, and the high word matters
    assert not np.array_equal(NormalStream(2**32 + 5).draw(10), NormalStream(5).draw(10))
    NormalStream(2**64 - 1).draw(10)
    with pytest.raises(InvalidSpec):
        NormalStream(-1)
    with pytest.raises(InvalidSpec):
        NormalStream(2**64)

def test_stream_moments():
    """ simulate: test mean and variance of 10^5 variates, for 20 seeds """
    mean_ok = 0
    var_ok = 0
    for seed in range(20):
        z = standard_normal_stream(seed).draw(100000)
        if -0.02 <= z.mean() <= 0.02:
            mean_ok += 1
        if 0.98 <= z.var() <= 1.02:
            var_ok += 1
    assert mean_ok >= 19
    assert var_ok >= 19

def test_sim_spec_validation():
    """ simulate: test the simulation parameters are validated """
    spec = SimSpec()
    assert (spec.m, spec.pattern, spec.pi1, spec.effect, spec.rho, spec.seed) == (200, 'independent', 0.05, 3.5, 0.0, 42)
    assert spec.n_nonnull == 10
    assert SimSpec(m=5, pi1=0.5).n_nonnull == 3
    assert SimSpec(m=200, pi1=0.0).n_nonnull == 0
    for kwargs in (dict(m=0), dict(m=2.5), dict(m=True), dict(pattern='block'), dict(pi1=1.5), dict(pi1=-0.1),
                   dict(effect=-1.0), dict(effect=float('inf')), dict(pattern='equicorrelated', rho=1.0),
                   dict(pattern='equicorrelated', rho=-0.2), dict(rho=0.5), dict(seed=-1), dict(seed=2**64)):
        with pytest.raises(InvalidSpec):
            SimSpec(**kwargs)
    assert SimSpec(pattern='equicorrelated', rho=0.5).rho == 0.5
    assert spec.with_seed(7).seed == 7
    assert "seed=42" in repr(spec)

def test_simulate_determinism():
    """ simulate: test the same parameters give the same dataset """
    spec = SimSpec(m=200, pattern='equicorrelated', rho=0.5, pi1=0.5, effect=1.5, seed=42)
    ps1 = simulate_pvalues(spec)
    ps2 = simulate_pvalues(spec)
    assert ps1 == ps2
    assert ps1.m == 200
    assert ps1.ids[0] == 'test_1' and ps1.ids[-1] == 'test_200'
    assert np.all((ps1.p > 0) & (ps1.p <= 1))
    assert simulate_pvalues(spec.with_seed(43)) != ps1

def test_simulate_model():
    """ simulate: test the statistics follow the one-factor model and the first tests carry the effect """
    spec = SimSpec(m=50, pattern='equicorrelated', rho=0.3, pi1=0.2, effect=2.0, seed=9)
    stream = standard_normal_stream(9)
    z0 = stream.draw()
    eps = stream.draw(50)
    expected = math.sqrt(0.3) * z0 + math.sqrt(1.0 - 0.3) * eps
    expected[:10] += 2.0
    assert np.array_equal(simulate_statistics(spec), expected)
    assert np.array_equal(simulate_pvalues(spec).p, two_sided_pvalues(expected))

def test_simulate_null_uniform():
    """ simulate: test p-values of true nulls are uniform (Kolmogorov-Smirnov distance under 0.04 for at least 98% of 1000 seeds) """
    # about one seed in 200 exceeds 0.04, so small blocks of seeds can hold two exceedances by chance
    passes = 0
    for seed in range(1000):
        ps = simulate_pvalues(SimSpec(m=2000, pattern='independent', pi1=0.0, seed=seed))
        if stats.kstest(ps.p, 'uniform').statistic < 0.04:
            passes += 1
    assert passes >= 980

def test_increasing_head():
    """ simulate: test detection of strictly increasing leading q-values """
    assert increasing_head(QValueVector([0.01, 0.02, 0.03, 0.04, 0.05, 0.05]))
    assert not increasing_head(QValueVector([0.01, 0.02, 0.02, 0.04, 0.05]))
    assert increasing_head(QValueVector([0.5]))

def test_regime_independent():
    """ simulate: test strong independent signals: about 10 discoveries at q=0.1, minimum FDR mostly at the smallest p-value """
    spec = SimSpec(m=200, pattern='independent', pi1=0.05, effect=3.5, seed=1)
    summary = regime_summary(spec, runs=100, q=0.1)
    assert summary.runs == 100
    assert len(summary.discoveries) == 100
    assert 5 <= summary.median_discoveries <= 15
    assert summary.fraction_intermediate_minimum <= 0.4
    assert summary.fraction_increasing_head >= 0.2
    # a pure function of the parameters
    assert regime_summary(spec, runs=100, q=0.1) == summary

def test_regime_equicorrelated():
    """ simulate: test correlated weak signals: minimum FDR mostly at an intermediate p-value, q-values plateau """
    spec = SimSpec(m=200, pattern='equicorrelated', rho=0.5, pi1=0.5, effect=1.5, seed=1)
    seen = []
    summary = regime_summary(spec, runs=100, q=0.1, progress=lambda seeds: seen.append(seeds) or seeds)
    assert list(seen[0]) == list(range(1, 101))
    assert summary.fraction_intermediate_minimum >= 0.5
    assert summary.fraction_increasing_head <= 0.15
    with pytest.raises(InvalidSpec):
        regime_summary(spec, runs=0)
