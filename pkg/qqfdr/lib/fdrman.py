#!/usr/bin/env python
#
# FDR manager: Benjamini-Hochberg / Benjamini-Yekutieli step-up, q-values and read-offs
# Copyright (C) 2026 qqfdr developers
#
# Licensed under the MIT License (MIT)
#
# Every decision (step-up cut, q-values, the geometric test in qqgeometry) compares
# fdr_ratio() against q. fdr_ratio() is the exact rational m*p/i (times H_m for BY), with p read as the
# decimal it was written as, rounded up to a double. For any level q, ratio <= q then holds exactly when
# p <= q*i/m, so q-values and the step-up cut always agree, on-line p-values included.
#

from __future__ import annotations

import math
from collections import namedtuple
from fractions import Fraction

import numpy as np

from .errors import InvalidLevel

METHODS = ('BH', 'BY')


HarmonicCorrection = namedtuple('HarmonicCorrection', ['m', 'H_m'])
MinimumFdr = namedtuple('MinimumFdr', ['q_min', 'k_at_min'])


def harmonic_number(m):
    '''H_m = sum(1/j, j=1..m), the BY correction factor c(m). Correctly rounded double.'''
    m = int(m)
    if m < 1:
        raise ValueError("harmonic_number needs m >= 1, got %i" % m)
    return HarmonicCorrection(m, math.fsum(1.0 / j for j in range(1, m + 1)))

def check_level(q):
    '''Return q as a float, or raise InvalidLevel if q is not in (0, 1]'''
    try:
        qf = float(q)
    except (TypeError, ValueError):
        raise InvalidLevel(q)
    if not 0.0 < qf <= 1.0:  # nan fails here too
        raise InvalidLevel(q)
    return qf

def check_method(method):
    method = str(method).upper()
    if method not in METHODS:
        raise ValueError("unknown FDR method %r (expected one of %s)" % (method, ', '.join(METHODS)))
    return method

def correction_factor(m, method='BH'):
    '''Multiplier applied to m*p/i: 1 for BH, H_m for BY'''
    if check_method(method) == 'BY':
        return harmonic_number(m).H_m
    return 1.0

def decimal_value(x):
    '''Exact rational value of the shortest decimal that reads back as the double x: 0.025 is 1/40, not the
    nearest binary fraction. Increasing in x, and equal to the value as written for inputs of up to 15 digits.'''
    return Fraction(repr(float(x)))

def exact_ratio(p, i, m, correction=1.0):
    '''m*p/i (times correction) as an exact rational, p taken at its decimal value'''
    return decimal_value(p) * m * Fraction(float(correction)) / i

def ceil_to_double(x):
    '''Smallest double whose decimal value is >= the rational x'''
    f = float(x)
    for candidate in (float(np.nextafter(f, -np.inf)), f):
        if decimal_value(candidate) >= x:
            return candidate
    return float(np.nextafter(f, np.inf))

def fdr_ratio(p, i, m, correction=1.0):
    '''Scalar m*p/i (times correction): the smallest level at which rank i passes the step-up inequality on its own.
    Rounded up, so that fdr_ratio(p, i, m) <= q exactly when p <= q*i/m holds on the decimal values. At i = m the ratio is p itself.'''
    return ceil_to_double(exact_ratio(p, i, m, correction))

def fdr_ratios(ordered, method='BH'):
    '''fdr_ratio() over all ranks of an OrderedTests, as a float64 array'''
    m = ordered.m
    correction = correction_factor(m, method)
    return np.array([fdr_ratio(p, i, m, correction) for i, p in enumerate(ordered.p.tolist(), 1)], dtype=np.float64)


class FdrResult(object):
    '''One step-up analysis at level q.'''

    __slots__ = ['q', 'method', 'k_star', 'alpha_implied', 'proportion_significant', 'rejected', 'm', 'correction']

    def __init__(self, q, method, k_star, m, p_cut=None, correction=1.0):
        self.q = q
        self.method = method
        self.k_star = int(k_star)
        self.m = int(m)
        self.correction = correction
        self.alpha_implied = float(p_cut) if self.k_star >= 1 else None
        self.proportion_significant = self.k_star / float(self.m)
        rejected = np.zeros(self.m, dtype=bool)
        rejected[:self.k_star] = True
        rejected.setflags(write=False)
        self.rejected = rejected

    @property
    def effective_level(self):
        '''The level of the equivalent BH line: q for BH, q/H_m for BY'''
        return self.q / self.correction

    def __repr__(self):
        return "FdrResult(method=%s, q=%r, k_star=%i, m=%i, alpha_implied=%r)" % (self.method, self.q, self.k_star, self.m, self.alpha_implied)


class QValueVector(object):
    '''Per-rank minimum FDR level at which each test is declared significant, capped at 1.'''

    __slots__ = ['q_vals', 'm', 'method']

    def __init__(self, q_vals, method='BH'):
        q_vals = np.asarray(q_vals, dtype=np.float64)
        q_vals.setflags(write=False)
        self.q_vals = q_vals
        self.m = int(q_vals.size)
        self.method = method

    def __len__(self):
        return self.m

    def __getitem__(self, i):
        return self.q_vals[i]

    def tolist(self):
        return self.q_vals.tolist()


def stepup(ordered, q, method='BH'):
    '''Step-up procedure: k* = max{ i : ratio_i <= q }, ranks 1..k* are rejected.'''
    q = check_level(q)
    method = check_method(method)
    correction = correction_factor(ordered.m, method)
    passing = np.flatnonzero(fdr_ratios(ordered, method) <= q)
    k_star = int(passing[-1]) + 1 if passing.size else 0
    p_cut = ordered.p[k_star - 1] if k_star >= 1 else None
    return FdrResult(q, method, k_star, ordered.m, p_cut=p_cut, correction=correction)

def bh_stepup(ordered, q):
    '''Benjamini-Hochberg step-up: largest i with p_(i) <= q*i/m.'''
    return stepup(ordered, q, 'BH')

def by_stepup(ordered, q):
    '''Benjamini-Yekutieli step-up: largest i with p_(i) <= q*i/(m*H_m), valid under arbitrary dependence.'''
    return stepup(ordered, q, 'BY')

def q_values(ordered, method='BH'):
    '''q_i = min(1, min_{j >= i} ratio_j), the suffix minimum of the step-up ratios.
    Duality: { i : q_i <= q } is exactly the rejection set of stepup(ordered, q, method).'''
    method = check_method(method)
    ratios = fdr_ratios(ordered, method)
    suffix_min = np.minimum.accumulate(ratios[::-1])[::-1]
    return QValueVector(np.minimum(suffix_min, 1.0), method=method)

def min_attainable_fdr(ordered, method='BH'):
    '''Smallest level at which anything is declared significant, and how many tests are rejected at that level.
    Below q_min the step-up procedure rejects nothing.'''
    qvals = q_values(ordered, method)
    q_min = float(qvals.q_vals[0])
    k_at_min = stepup(ordered, q_min, method).k_star
    return MinimumFdr(q_min, k_at_min)

def raw_minimum_rank(ordered, method='BH'):
    '''Rank (1-based, first occurrence) at which the raw ratio m*p/i is smallest.
    1 means the minimum FDR is attained at the smallest p-value, larger ranks mean the smallest
    p-values are "not small enough" and curve back towards the H0 line.'''
    m = ordered.m
    correction = correction_factor(m, method)
    ratios = [exact_ratio(p, i, m, correction) for i, p in enumerate(ordered.p.tolist(), 1)]
    return ratios.index(min(ratios)) + 1
