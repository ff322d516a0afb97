#!/usr/bin/env python
#
# Deterministic SVG rendering of Q-Q plot models, and JSON/CSV reports
# Copyright (C) 2026 qqfdr developers
#
# Licensed under the MIT License (MIT)
#
# Output is a pure function of the inputs: no timestamps, no generated ids, fixed element order,
# every coordinate printed with a fixed number of decimals (%-formatting ignores the locale).
# Element order: background, axes, tick labels, axis titles, H0 line (dashed), FDR lines (solid, labeled),
# points in ascending rank, alpha/proportion callouts, legend.
#

from __future__ import annotations

import csv
import io
import json
import math
from xml.sax.saxutils import escape

from .errors import DegenerateExtent, InvalidOptions
from .qqgeometry import color_for_q, color_hex

MINUS = u'\u2212'
LEGEND_LEVELS = (0.05, 0.1, 0.25, 0.5)
TICK_STEPS = (0.1, 0.2, 0.5, 1, 2, 5, 10, 20, 50, 100, 200, 500)
MAX_TICKS = 8
FONT = 'font-family="sans-serif" font-size="11"'


def format_real(x, digits=12):
    '''Shortest round-trip representation of x rounded to `digits` significant digits'''
    return repr(float('%.*g' % (digits, x)))

def round_real(x, digits=12):
    return float('%.*g' % (digits, x))


class RenderOptions(object):
    '''Canvas size, margin, point radius (pixels) and decimals used for coordinates.'''

    __slots__ = ['width_px', 'height_px', 'margin_px', 'point_radius_px', 'precision']

    def __init__(self, width_px=720, height_px=720, margin_px=60, point_radius_px=3, precision=4):
        self.width_px = width_px
        self.height_px = height_px
        self.margin_px = margin_px
        self.point_radius_px = point_radius_px
        self.precision = precision
        if not (width_px > 0 and height_px > 0 and point_radius_px > 0 and margin_px >= 0):
            raise InvalidOptions("width, height and point radius must be positive, margin non-negative")
        if not margin_px < min(width_px, height_px) / 2.0:
            raise InvalidOptions("margin (%r) must be less than half the smallest canvas dimension" % (margin_px,))
        if int(precision) != precision or not 0 <= precision <= 12:
            raise InvalidOptions("precision must be an integer in 0..12, got %r" % (precision,))


class Viewport(object):
    '''Affine map from data space [0, axis_max_x] x [0, axis_max_y] to the pixel box inside the margins (y axis pointing up).'''

    def __init__(self, axis_max_x, axis_max_y, opts):
        if not (axis_max_x > 0 and axis_max_y > 0):
            raise DegenerateExtent(axis_max_x, axis_max_y)
        self.axis_max_x = axis_max_x
        self.axis_max_y = axis_max_y
        self.left = opts.margin_px
        self.top = opts.margin_px
        self.right = opts.width_px - opts.margin_px
        self.bottom = opts.height_px - opts.margin_px
        self.plot_width = opts.width_px - 2 * opts.margin_px
        self.plot_height = opts.height_px - 2 * opts.margin_px

    def px(self, x):
        return self.left + x / self.axis_max_x * self.plot_width

    def py(self, y):
        return self.bottom - y / self.axis_max_y * self.plot_height

    def to_data(self, px, py):
        '''Inverse transform of (px(x), py(y))'''
        return ((px - self.left) / self.plot_width * self.axis_max_x,
                (self.bottom - py) / self.plot_height * self.axis_max_y)


def _tick_values(maximum):
    for step in TICK_STEPS:
        if maximum / step <= MAX_TICKS:
            break
    n = int(math.floor(maximum / step + 1e-9))
    return [k * step for k in range(n + 1)]

def _clip_line(line, axis_max_x, axis_max_y):
    '''Segment of y = x + intercept inside the data box, or None if the line misses it'''
    c = line.intercept
    if c >= axis_max_y:
        return None
    x2 = min(axis_max_x, axis_max_y - c)
    return (0.0, c, x2, x2 + c)

def _level_label(line, method):
    label = "FDR q=%s" % format_real(line.q)
    if method == 'BY':
        label += " (BY)"
    return label

def render_svg(model, opts=None):
    '''Render a QQPlotModel to SVG 1.1 (UTF-8 bytes). Identical inputs give identical bytes.
    Raises DegenerateExtent when an axis has no extent (eg: a single test).'''
    if opts is None:
        opts = RenderOptions()
    vp = Viewport(model.axis_max_x, model.axis_max_y, opts)
    prec = int(opts.precision)
    W, H, r = opts.width_px, opts.height_px, opts.point_radius_px

    def num(v):
        s = '%.*f' % (prec, v)
        if s.startswith('-') and float(s) == 0.0:
            s = s[1:]
        return s

    out = []
    w = out.append
    w(u'<?xml version="1.0" encoding="UTF-8" standalone="no"?>')
    w(u'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="%s" height="%s" viewBox="0 0 %s %s">' % (W, H, W, H))
    w(u'<title>Q-Q plot of %i p-values with FDR lines</title>' % model.m)
    w(u'<desc>viewport: x in [0, %s] maps to px [%s, %s]; y in [0, %s] maps to px [%s, %s]</desc>'
      % (num(model.axis_max_x), num(vp.left), num(vp.right), num(model.axis_max_y), num(vp.bottom), num(vp.top)))
    w(u'<rect x="0" y="0" width="%s" height="%s" fill="#ffffff"/>' % (W, H))

    # Axes and ticks
    xticks = _tick_values(model.axis_max_x)
    yticks = _tick_values(model.axis_max_y)
    w(u'<g id="axes" stroke="#000000" stroke-width="1" fill="none">')
    w(u'<path d="M%s %s L%s %s L%s %s"/>' % (num(vp.left), num(vp.top), num(vp.left), num(vp.bottom), num(vp.right), num(vp.bottom)))
    ticks = [u'M%s %s L%s %s' % (num(vp.px(t)), num(vp.bottom), num(vp.px(t)), num(vp.bottom + 5)) for t in xticks]
    ticks += [u'M%s %s L%s %s' % (num(vp.left - 5), num(vp.py(t)), num(vp.left), num(vp.py(t))) for t in yticks]
    w(u'<path d="%s"/>' % u' '.join(ticks))
    w(u'</g>')
    w(u'<g id="tick-labels" %s fill="#000000">' % FONT)
    for t in xticks:
        w(u'<text x="%s" y="%s" text-anchor="middle">%s</text>' % (num(vp.px(t)), num(vp.bottom + 18), format_real(t, 6)))
    for t in yticks:
        w(u'<text x="%s" y="%s" text-anchor="end">%s</text>' % (num(vp.left - 8), num(vp.py(t) + 4), format_real(t, 6)))
    w(u'</g>')
    w(u'<text x="%s" y="%s" %s text-anchor="middle">Expected %slog10(p)</text>' % (num((vp.left + vp.right) / 2.0), num(H - 12), FONT, MINUS))
    ylab_x, ylab_y = num(16), num((vp.top + vp.bottom) / 2.0)
    w(u'<text x="%s" y="%s" %s text-anchor="middle" transform="rotate(-90 %s %s)">Observed %slog10(p)</text>' % (ylab_x, ylab_y, FONT, ylab_x, ylab_y, MINUS))

    # H0 and FDR lines
    seg = _clip_line(model.h0_line, model.axis_max_x, model.axis_max_y)
    w(u'<line id="h0" x1="%s" y1="%s" x2="%s" y2="%s" stroke="#555555" stroke-width="1" stroke-dasharray="6,4"/>'
      % (num(vp.px(seg[0])), num(vp.py(seg[1])), num(vp.px(seg[2])), num(vp.py(seg[3]))))
    for line in model.fdr_lines:
        seg = _clip_line(line, model.axis_max_x, model.axis_max_y)
        if seg is None:
            continue
        x2, y2 = vp.px(seg[2]), vp.py(seg[3])
        w(u'<line class="fdr" x1="%s" y1="%s" x2="%s" y2="%s" stroke="#b22222" stroke-width="1.5"/>'
          % (num(vp.px(seg[0])), num(vp.py(seg[1])), num(x2), num(y2)))
        w(u'<text class="fdr-label" x="%s" y="%s" %s fill="#b22222" text-anchor="end">%s</text>'
          % (num(x2 - 4), num(y2 + 14), FONT, escape(_level_label(line, model.method))))

    # Points, in ascending rank; off-scale observations become upward triangles on the top edge
    w(u'<g id="points" stroke="none">')
    for pt in model.points:
        fill = color_hex(pt.color)
        cx = vp.px(pt.x)
        if pt.clipped:
            top = vp.py(model.axis_max_y)
            w(u'<polygon points="%s,%s %s,%s %s,%s" fill="%s"/>'
              % (num(cx), num(top - 1.5 * r), num(cx - 1.3 * r), num(top + r), num(cx + 1.3 * r), num(top + r), fill))
        else:
            w(u'<circle cx="%s" cy="%s" r="%s" fill="%s"/>' % (num(cx), num(vp.py(pt.y)), num(r), fill))
    w(u'</g>')

    # Read-offs of the largest significant p-value
    ro = model.annotations
    if ro is not None and ro.k_star > 0:
        cx, cy = vp.px(ro.x_at_cut), vp.py(min(ro.y_at_cut, model.axis_max_y))
        w(u'<g id="callouts" stroke="#000000" stroke-width="0.75" stroke-dasharray="2,3" fill="none">')
        w(u'<path d="M%s %s L%s %s M%s %s L%s %s"/>' % (num(cx), num(cy), num(vp.left), num(cy), num(cx), num(cy), num(cx), num(vp.bottom)))
        w(u'</g>')
        w(u'<text class="callout" x="%s" y="%s" %s>%s = 10^%s%s = %s</text>'
          % (num(vp.left + 4), num(cy - 4), FONT, u'\u03b1', MINUS, num(ro.y_at_cut), format_real(ro.alpha_implied, 4)))
        w(u'<text class="callout" x="%s" y="%s" %s>proportion = 10^%s%s = %s (%i of %i)</text>'
          % (num(cx + 4), num(vp.bottom - 4), FONT, MINUS, num(ro.x_at_cut), format_real(ro.proportion_significant, 4), ro.k_star, model.m))

    # Legend
    lx = vp.left + 10
    ly = vp.top + 14
    w(u'<g id="legend" %s fill="#000000">' % FONT)
    if ro is not None and ro.k_star > 0:
        w(u'<text x="%s" y="%s">%s: k*=%i of m=%i significant</text>' % (num(lx), num(ly), escape(_level_label(model.reference_line, model.method)), ro.k_star, model.m))
    else:
        w(u'<text x="%s" y="%s">no discoveries at q=%s</text>' % (num(lx), num(ly), format_real(model.reference_q)))
    if ro is not None and ro.q_min is not None:
        ly += 14
        w(u'<text x="%s" y="%s">minimum attainable FDR q=%s (k=%i)</text>' % (num(lx), num(ly), format_real(ro.q_min, 4), ro.k_at_min))
    for level in LEGEND_LEVELS:
        ly += 14
        w(u'<rect x="%s" y="%s" width="8" height="8" fill="%s"/>' % (num(lx), num(ly - 8), color_hex(color_for_q(level))))
        w(u'<text x="%s" y="%s">q=%s</text>' % (num(lx + 12), num(ly), format_real(level)))
    if model.n_clipped:
        ly += 14
        w(u'<text x="%s" y="%s">%s %i point(s) above y=%s clipped</text>' % (num(lx), num(ly), u'\u25b2', model.n_clipped, num(model.axis_max_y)))
    w(u'</g>')
    w(u'</svg>')
    return (u'\n'.join(out) + u'\n').encode('utf-8')


#***********************************
#           REPORTS
#***********************************

def _json_real(x):
    return None if x is None else round_real(x)

def write_report(result, qvals, readouts, ordered):
    '''JSON summary and per-test CSV table of one analysis, as (json_bytes, csv_bytes).
    JSON keys are emitted in a fixed order; reals keep at most 12 significant digits.'''
    summary = [
        ('m', ordered.m),
        ('method', result.method),
        ('q', _json_real(result.q)),
        ('k_star', result.k_star),
        ('alpha_implied', _json_real(result.alpha_implied)),
        ('proportion_significant', _json_real(result.proportion_significant)),
        ('q_min', _json_real(readouts.q_min) if readouts is not None else None),
        ('k_at_min', readouts.k_at_min if readouts is not None else None),
    ]
    json_bytes = (json.dumps(dict(summary), indent=2, ensure_ascii=True, allow_nan=False) + '\n').encode('utf-8')

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n', delimiter=',', quotechar='"')
    writer.writerow(['id', 'p', 'rank', 'q_value', 'significant'])
    for i in range(ordered.m):
        writer.writerow([ordered.ids[i], format_real(ordered.p[i]), i + 1, format_real(qvals.q_vals[i]),
                         'true' if result.rejected[i] else 'false'])
    return json_bytes, buf.getvalue().encode('utf-8')

def write_pvalues_csv(pset, digits=17):
    '''Two-column (id,p) CSV of a PValueSet. 17 digits keep every p-value exact when read back.'''
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator='\n', delimiter=',', quotechar='"')
    writer.writerow(['id', 'p'])
    for rec in pset:
        writer.writerow([rec.id, format_real(rec.p, digits)])
    return buf.getvalue().encode('utf-8')

def write_regime_json(summary, spec):
    '''JSON summary of a regime study'''
    data = [
        ('m', spec.m), ('pattern', spec.pattern), ('pi1', _json_real(spec.pi1)), ('effect', _json_real(spec.effect)),
        ('rho', _json_real(spec.rho)), ('first_seed', spec.seed), ('runs', summary.runs), ('q', _json_real(summary.q)),
        ('median_discoveries', _json_real(summary.median_discoveries)),
        ('fraction_intermediate_minimum', _json_real(summary.fraction_intermediate_minimum)),
        ('fraction_increasing_head', _json_real(summary.fraction_increasing_head)),
    ]
    return (json.dumps(dict(data), indent=2) + '\n').encode('utf-8')
