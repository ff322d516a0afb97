#!/usr/bin/env python
#
# Q-Q plot of p-values annotated with FDR lines, rendered as SVG
# Copyright (C) 2026 qqfdr developers
#
# Licensed under the MIT License (MIT)
#
#=================================
#        qqfdr Q-Q Plot
#                       License: MIT
#=================================
#
# Observed -log10(p) against expected -log10(i/m), with the H0 line (dashed), one FDR line per level
# (intercept -log10(q)), points coloured by their q-value, and read-offs of the implied alpha and of the
# proportion of discoveries.
#

import argparse
import sys

from .analyze import load_dataset, analyze, summary_line, describe_readouts
from .lib.aux_funcs import parse_argv, add_dataset_arguments, add_level_arguments, add_log_arguments, is_level_list, is_positive_real, is_positive_int, write_bytes
from .lib.tee import open_tees
from .lib.errors import QQFdrError
from .lib.render import RenderOptions, render_svg, write_report


def main(argv=None, command=None):
    '''Run the tool on argv (a string, a list, or None for sys.argv) and return its exit code: 0 success,
    1 input/output error, 2 invalid data or options. Command-line errors found by argparse, such as a level
    outside (0,1], are not returned: argparse prints the usage and raises SystemExit(2), as --help raises SystemExit(0).'''
    argv = parse_argv(argv)

    #==== COMMANDLINE PARSER ====

    #== Commandline description
    desc = '''Q-Q plot with FDR annotations
Description: Plot the sorted p-values against their expected quantiles under H0 (both on the -log10 scale), with the H0 line, FDR lines of intercept -log10(q), and every point coloured by its q-value (deep red: small FDR, light red: large FDR). The largest significant p-value is read off on both axes: the vertical read-off gives the implied significance threshold alpha, the horizontal one the proportion of discoveries.
    '''
    ep = '''Example usage:
- Plot at FDR 5%:
qqf plot --input pvalues.csv --q 0.05 --out qq.svg
- Several FDR lines, the first level (--q) is the one used for significance and read-offs:
qqf plot --input pvalues.csv --q 0.3 --q-lines 0.05,0.1,0.3 --out qq.svg
- Clip extremely small p-values at -log10(p) = 20 (drawn as triangles on the top edge):
qqf plot --input gwas.tsv --p-column P --y-max 20 --out qq.svg

Exit codes: 0 success, 1 input/output error, 2 validation error.
'''

    #== Commandline arguments
    main_parser = argparse.ArgumentParser(add_help=True, description=desc, epilog=ep, formatter_class=argparse.RawTextHelpFormatter, prog=command)
    add_dataset_arguments(main_parser)
    add_level_arguments(main_parser)
    main_parser.add_argument('--q-lines', metavar='Q1,Q2,...', type=is_level_list, default=[],
                        help='Additional FDR lines to draw, comma-separated levels in (0,1] (default: only the --q line).')
    main_parser.add_argument('-o', '--out', metavar='/some/folder/qqplot.svg', type=str, required=True,
                        help='Path to the SVG file to write.')
    main_parser.add_argument('--report', metavar='/some/folder/report.json', type=str, required=False,
                        help='Also write the JSON report of the analysis.')
    main_parser.add_argument('-t', '--table', metavar='/some/folder/table.csv', type=str, required=False,
                        help='Also write the per-test CSV table.')
    main_parser.add_argument('--y-max', metavar='Y', type=is_positive_real, default=None,
                        help='Ceiling of the vertical axis, in -log10(p) units; points beyond are clipped (default: fit all points).')
    main_parser.add_argument('--width', type=is_positive_int, default=720, help='Canvas width in pixels (default: %(default)s).')
    main_parser.add_argument('--height', type=is_positive_int, default=720, help='Canvas height in pixels (default: %(default)s).')
    main_parser.add_argument('--margin', type=int, default=60, help='Margin around the plot area in pixels (default: %(default)s).')
    main_parser.add_argument('--point-radius', type=is_positive_real, default=3, help='Radius of the plotting symbols in pixels (default: %(default)s).')
    main_parser.add_argument('--precision', type=int, default=4, help='Decimals of the SVG coordinates (default: %(default)s).')
    add_log_arguments(main_parser)

    #== Parsing the arguments
    args = main_parser.parse_args(argv) # Storing all arguments to args

    ptee, perr = open_tees(args.log, args.silent)

    if args.verbose:
        ptee.write("====================================")
        ptee.write("QQFDR plot")
        ptee.write("====================================")

    retval = 0
    try:
        opts = RenderOptions(width_px=args.width, height_px=args.height, margin_px=args.margin,
                             point_radius_px=args.point_radius, precision=args.precision)
        ordered = load_dataset(args)
        if args.verbose: ptee.write("Loaded %i p-values from %s" % (ordered.m, args.input))
        result, qvals, model = analyze(ordered, args.q, args.method, extra_q_lines=args.q_lines, y_cap=args.y_max)
        svg = render_svg(model, opts)
        write_bytes(args.out, svg)
        if args.report or args.table:
            json_bytes, csv_bytes = write_report(result, qvals, model.annotations, ordered)
            if args.report: write_bytes(args.report, json_bytes)
            if args.table: write_bytes(args.table, csv_bytes)
        ptee.write(summary_line(result))
        if args.verbose:
            describe_readouts(ptee, model.annotations)
            if model.n_clipped: ptee.write("- %i point(s) clipped at y=%s" % (model.n_clipped, model.axis_max_y))
            ptee.write("Plot written to %s" % args.out)
    except QQFdrError as exc:
        perr.write("ERROR: %s" % exc)
        retval = 2
    except (IOError, OSError) as exc:
        perr.write("ERROR: %s" % exc)
        retval = 1

    ptee.close()
    perr.close()
    return retval

# Calling main function if the script is directly called (not imported as a library in another program)
if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
