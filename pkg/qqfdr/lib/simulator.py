#!/usr/bin/env python
#
# Seeded simulation of p-value sets, independent or positively correlated
# Copyright (C) 2026 qqfdr developers
#
# Licensed under the MIT License (MIT)
#
# Generator: numpy's legacy RandomState (Mersenne Twister MT19937), seeded with init_by_array on the
# two 32-bit words [seed & 0xFFFFFFFF, seed >> 32] of the 64-bit seed. Normal variates come from
# RandomState.standard_normal (Marsaglia polar method). The RandomState stream is frozen by numpy's
# compatibility policy, so a given seed gives the same variates across numpy releases.
#
# Draw order for one simulation: the shared factor Z0 first, then eps_1..eps_m.
#   z_i = sqrt(rho)*Z0 + sqrt(1-rho)*eps_i + effect*[i is non-null]
#   p_i = 2*(1 - Phi(|z_i|)), floored at 1e-300
# The non-null tests are the first round(pi1*m) tests (ids test_1..test_k).
#

from __future__ import annotations

import math
from collections import namedtuple

import numpy as np
from scipy.special import ndtr

from .errors import InvalidSpec
from .ingest import PValueSet, order_tests
from .fdrman import q_values, min_attainable_fdr

PATTERNS = ('independent', 'equicorrelated')
P_FLOOR = 1e-300
SEED_MAX = 2**64 - 1


def normal_cdf(x):
    '''Standard normal cumulative distribution function Phi(x). Accepts scalars or arrays.'''
    if np.ndim(x) == 0:
        return float(ndtr(float(x)))
    return ndtr(np.asarray(x, dtype=np.float64))

def two_sided_pvalues(z):
    '''p = 2*(1 - Phi(|z|)), computed as 2*Phi(-|z|) so that tail values keep their precision'''
    z = np.asarray(z, dtype=np.float64)
    return np.maximum(2.0 * ndtr(-np.abs(z)), P_FLOOR)


class NormalStream(object):
    '''Reproducible stream of standard normal variates for a 64-bit seed. Successive draw() calls continue the sequence.'''

    __slots__ = ['seed', '_rs']

    def __init__(self, seed):
        seed = int(seed)
        if not 0 <= seed <= SEED_MAX:
            raise InvalidSpec("seed must be a 64-bit unsigned integer, got %r" % seed)
        self.seed = seed
        self._rs = np.random.RandomState(np.array([seed & 0xFFFFFFFF, seed >> 32], dtype=np.uint32))

    def draw(self, n=None):
        '''One variate (float) if n is None, else an array of n variates'''
        if n is None:
            return float(self._rs.standard_normal())
        return self._rs.standard_normal(n)

    def __iter__(self):
        while True:
            yield self.draw()

def standard_normal_stream(seed):
    return NormalStream(seed)


class SimSpec(object):
    '''Parameters of one simulated dataset.'''

    __slots__ = ['m', 'pattern', 'pi1', 'effect', 'rho', 'seed']

    def __init__(self, m=200, pattern='independent', pi1=0.05, effect=3.5, rho=0.0, seed=42):
        self.m = m
        self.pattern = pattern
        self.pi1 = pi1
        self.effect = effect
        self.rho = rho
        self.seed = seed
        self.validate()

    def validate(self):
        if isinstance(self.m, bool) or not isinstance(self.m, (int, np.integer)) or self.m < 1:
            raise InvalidSpec("m must be a positive integer, got %r" % (self.m,))
        if self.pattern not in PATTERNS:
            raise InvalidSpec("pattern must be one of %s, got %r" % (', '.join(PATTERNS), self.pattern))
        if not 0.0 <= self.pi1 <= 1.0:
            raise InvalidSpec("pi1 must be in [0,1], got %r" % (self.pi1,))
        if not (self.effect >= 0.0 and math.isfinite(self.effect)):
            raise InvalidSpec("effect must be a finite real >= 0, got %r" % (self.effect,))
        if not 0.0 <= self.rho < 1.0:
            raise InvalidSpec("rho must be in [0,1), got %r" % (self.rho,))
        if self.pattern == 'independent' and self.rho != 0.0:
            raise InvalidSpec("rho must be 0 when pattern is independent (got rho=%r)" % (self.rho,))
        if isinstance(self.seed, bool) or not isinstance(self.seed, (int, np.integer)) or not 0 <= self.seed <= SEED_MAX:
            raise InvalidSpec("seed must be a 64-bit unsigned integer, got %r" % (self.seed,))

    @property
    def n_nonnull(self):
        '''round(pi1*m), halves rounded up'''
        return int(math.floor(self.pi1 * self.m + 0.5))

    def with_seed(self, seed):
        return SimSpec(self.m, self.pattern, self.pi1, self.effect, self.rho, seed)

    def __repr__(self):
        return "SimSpec(m=%i, pattern=%r, pi1=%r, effect=%r, rho=%r, seed=%i)" % (self.m, self.pattern, self.pi1, self.effect, self.rho, self.seed)


def simulate_statistics(spec):
    '''Test statistics z_1..z_m of a simulation'''
    spec.validate()
    stream = standard_normal_stream(spec.seed)
    z0 = stream.draw()
    eps = stream.draw(spec.m)
    z = math.sqrt(spec.rho) * z0 + math.sqrt(1.0 - spec.rho) * eps
    z[:spec.n_nonnull] += spec.effect
    return z

def simulate_pvalues(spec):
    '''Simulated PValueSet (ids test_1..test_m). A pure function of spec.'''
    p = two_sided_pvalues(simulate_statistics(spec))
    return PValueSet.from_pvalues(p.tolist())


#***********************************
#           REGIME STUDY
#***********************************

RegimeSummary = namedtuple('RegimeSummary', ['runs', 'q', 'median_discoveries', 'fraction_intermediate_minimum',
                                             'fraction_increasing_head', 'discoveries'])

def increasing_head(qvals, n=5):
    '''True if the first n q-values are strictly increasing'''
    head = qvals.q_vals[:n]
    return bool(np.all(head[1:] > head[:-1]))

def regime_summary(spec, runs=100, q=0.1, progress=None):
    '''Replicate a simulation over seeds spec.seed .. spec.seed+runs-1 and summarize its FDR regime:
    median count of q-values <= q, fraction of runs whose minimum FDR is reached at an intermediate
    rank (k_at_min > 1), and fraction whose first five q-values are strictly increasing.
    progress wraps the seeds iterable (eg: a tqdm factory).'''
    if runs < 1:
        raise InvalidSpec("runs must be >= 1, got %r" % (runs,))
    seeds = range(spec.seed, spec.seed + runs)
    if progress is not None:
        seeds = progress(seeds)
    discoveries = []
    intermediate = 0
    increasing = 0
    for seed in seeds:
        ordered = order_tests(simulate_pvalues(spec.with_seed(seed)))
        qvals = q_values(ordered)
        discoveries.append(int(np.count_nonzero(qvals.q_vals <= q)))
        if min_attainable_fdr(ordered).k_at_min > 1:
            intermediate += 1
        if increasing_head(qvals):
            increasing += 1
    return RegimeSummary(runs=runs, q=q, median_discoveries=float(np.median(discoveries)),
                         fraction_intermediate_minimum=intermediate / float(runs),
                         fraction_increasing_head=increasing / float(runs),
                         discoveries=tuple(discoveries))
