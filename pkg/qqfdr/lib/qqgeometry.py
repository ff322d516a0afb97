#!/usr/bin/env python
#
# Q-Q plot geometry: -log10 transforms, H0 and FDR lines, point colours and read-offs
# Copyright (C) 2026 qqfdr developers
#
# Licensed under the MIT License (MIT)
#
# Plot space: x = -log10(i/m) (expected), y = -log10(p_(i)) (observed).
#
# The plotting position is i/m, not i/(m+1): the FDR line y = x - log10(q) is crossed where
# p_(i) = q*i/m, and 10**(-x) at the cut is k*/m.
#

from __future__ import annotations

import math
from collections import namedtuple

from .errors import NoDiscoveries
from .fdrman import (check_level, check_method, correction_factor, fdr_ratio, stepup,
                     min_attainable_fdr, raw_minimum_rank)

AXIS_PADDING = 1.05

# Colour scale anchors: light red at q >= 0.5, deep red at q <= 0.05, linear in -log10(q) in between
COLOR_LIGHT = (255, 214, 214)
COLOR_DEEP = (139, 0, 0)
COLOR_LIGHT_LOGQ = 0.30103
COLOR_SPAN_LOGQ = 1.0


PlotPoint = namedtuple('PlotPoint', ['rank', 'x', 'y', 'q_value', 'color', 'significant', 'p', 'm', 'clipped'])
FdrLine = namedtuple('FdrLine', ['q', 'slope', 'intercept', 'correction'])
Readouts = namedtuple('Readouts', ['k_star', 'alpha_implied', 'proportion_significant', 'x_at_cut', 'y_at_cut',
                                   'q_min', 'k_at_min', 'minimum_at_smallest', 'n_below_h0'])


def neg_log10(v):
    '''-log10(v), with -log10(1) returned as +0.0 rather than -0.0'''
    return -math.log10(v) + 0.0

def expected_position(i, m):
    '''Abscissa of rank i among m tests: -log10(i/m).'''
    if not 1 <= i <= m:
        raise ValueError("rank %r is outside 1..%r" % (i, m))
    return neg_log10(i / float(m))

def fdr_line(q, correction=1.0):
    '''Line parallel to H0 with intercept -log10(q/correction). correction is H_m for a BY line, so the line sits at the effective BH level.'''
    q = check_level(q)
    return FdrLine(q, 1.0, neg_log10(q / correction), correction)

H0_LINE = FdrLine(1.0, 1.0, 0.0, 1.0)

def point_on_or_above(point, line):
    '''True if the point lies on or above the FDR line. Evaluated on the untransformed inequality
    (the same ratio the step-up procedure uses), so it is exactly p_(i) <= q*i/m on the written decimals.'''
    return fdr_ratio(point.p, point.rank, point.m, line.correction) <= line.q

def on_or_above_in_plot_space(point, line):
    '''The same test done in -log10 space: y >= x + intercept. Agrees with point_on_or_above() except within rounding of the line.'''
    return point.y >= point.x + line.intercept

def first_above_from_left(points, line):
    '''Reading from the left (ascending x, ie descending rank), return the rank of the first point on or above the line, 0 if none.
    For a BH line this is the step-up cut k*.'''
    for point in points:
        if point_on_or_above(point, line):
            return point.rank
    return 0

def _round_half_away(v):
    return int(math.floor(abs(v) + 0.5)) * (1 if v >= 0 else -1)

def color_for_q(q_value):
    '''RGB colour of a plotting symbol given its q-value: deep red for small FDR, light red for large FDR.'''
    t = (neg_log10(q_value) - COLOR_LIGHT_LOGQ) / COLOR_SPAN_LOGQ
    t = min(1.0, max(0.0, t))
    return tuple(_round_half_away(light + (deep - light) * t) for light, deep in zip(COLOR_LIGHT, COLOR_DEEP))

def color_hex(rgb):
    return "#%02x%02x%02x" % tuple(rgb)


class QQPlotModel(object):
    '''Everything the renderer needs, in plot space. Built by build_plot_model(), not modified afterwards.'''

    def __init__(self, points, fdr_lines, reference_q, method, result, axis_max_x, axis_max_y, y_cap=None):
        self.points = tuple(points)
        self.h0_line = H0_LINE
        self.fdr_lines = tuple(fdr_lines)
        self.reference_q = reference_q
        self.method = method
        self.result = result
        self.axis_max_x = axis_max_x
        self.axis_max_y = axis_max_y
        self.y_cap = y_cap
        self.annotations = None

    @property
    def m(self):
        return len(self.points)

    @property
    def reference_line(self):
        return self.fdr_lines[0]

    @property
    def n_clipped(self):
        return sum(1 for pt in self.points if pt.clipped)

    def points_from_left(self):
        '''Points by ascending x (descending rank)'''
        return tuple(reversed(self.points))


def annotate_readouts(model, result, minimum=None, minimum_at_smallest=None, n_below_h0=None):
    '''Coordinates of the largest significant p-value and their back-transforms:
    10**(-y_at_cut) = alpha_implied and 10**(-x_at_cut) = k*/m. Raises NoDiscoveries when k* = 0.'''
    if result.k_star == 0:
        raise NoDiscoveries(result.q)
    k, m = result.k_star, result.m
    if minimum is None:
        minimum = (None, None)
    return Readouts(k_star=k,
                    alpha_implied=result.alpha_implied,
                    proportion_significant=result.proportion_significant,
                    x_at_cut=expected_position(k, m),
                    y_at_cut=neg_log10(result.alpha_implied),
                    q_min=minimum[0],
                    k_at_min=minimum[1],
                    minimum_at_smallest=minimum_at_smallest,
                    n_below_h0=n_below_h0)

def build_plot_model(ordered, qvals, reference_q, extra_q_lines=(), method='BH', y_cap=None):
    '''Assemble the Q-Q plot model: one point per test, the H0 line, one FDR line per requested level
    (the reference level first), colours from the q-values and significance from the step-up cut at reference_q.
    Significance is never derived from a point's own position relative to the line: points below the line but
    left of the cut are still significant.'''
    method = check_method(method)
    reference_q = check_level(reference_q)
    levels = [reference_q]
    for q in extra_q_lines:
        q = check_level(q)
        if q not in levels:
            levels.append(q)
    if qvals.m != ordered.m:
        raise ValueError("q-values (m=%i) do not belong to this dataset (m=%i)" % (qvals.m, ordered.m))
    if y_cap is not None and not y_cap > 0:
        raise ValueError("y_cap must be positive, got %r" % (y_cap,))

    m = ordered.m
    correction = correction_factor(m, method)
    lines = [fdr_line(q, correction) for q in levels]
    result = stepup(ordered, reference_q, method)

    xs = [expected_position(i, m) for i in range(1, m + 1)]
    ys = [neg_log10(p) for p in ordered.p.tolist()]
    axis_max_x = AXIS_PADDING * max(xs)
    axis_max_y = AXIS_PADDING * max(max(ys), max(xs), max(line.intercept for line in lines))
    if y_cap is not None and y_cap < axis_max_y:
        axis_max_y = float(y_cap)

    points = []
    for idx, (p, x, y) in enumerate(zip(ordered.p.tolist(), xs, ys)):
        q_value = float(qvals.q_vals[idx])
        points.append(PlotPoint(rank=idx + 1, x=x, y=y, q_value=q_value, color=color_for_q(q_value),
                                significant=bool(result.rejected[idx]), p=p, m=m, clipped=y > axis_max_y))

    model = QQPlotModel(points, lines, reference_q, method, result, axis_max_x, axis_max_y, y_cap=y_cap)

    minimum = min_attainable_fdr(ordered, method)
    raw_min_rank = raw_minimum_rank(ordered, method)
    # Extreme p-values that are not small enough: left of the raw minimum and under the H0 line
    n_below_h0 = sum(1 for pt in points[:raw_min_rank - 1] if pt.y < pt.x)
    try:
        model.annotations = annotate_readouts(model, result, minimum, raw_min_rank == 1, n_below_h0)
    except NoDiscoveries:
        model.annotations = Readouts(k_star=0, alpha_implied=None, proportion_significant=0.0, x_at_cut=None,
                                     y_at_cut=None, q_min=minimum.q_min, k_at_min=minimum.k_at_min,
                                     minimum_at_smallest=raw_min_rank == 1, n_below_h0=n_below_h0)
    return model
