#!/usr/bin/env python
#
# FDR analysis of a p-values file: step-up cut, q-values, implied alpha, minimum attainable FDR
# Copyright (C) 2026 qqfdr developers
#
# Licensed under the MIT License (MIT)
#
#=================================
#        qqfdr FDR Analysis
#                       License: MIT
#=================================
#
# Exit codes: 0 success, 1 input/output error, 2 validation error.
#

import argparse
import sys

from .lib.aux_funcs import parse_argv, add_dataset_arguments, add_level_arguments, add_log_arguments, guess_format, write_bytes
from .lib.tee import open_tees
from .lib.errors import QQFdrError
from .lib.ingest import load_pvalues, order_tests
from .lib.fdrman import stepup, q_values
from .lib.qqgeometry import build_plot_model
from .lib.render import write_report, format_real


#***********************************
#                   FUNCTIONS
#***********************************

def load_dataset(args):
    '''Read and order the dataset designated by the common dataset arguments'''
    fmt = args.format or guess_format(args.input)
    pset = load_pvalues(args.input, format=fmt, p_column=args.p_column, id_column=args.id_column, clamp_zero=args.clamp_zero)
    return order_tests(pset)

def analyze(ordered, q, method, extra_q_lines=(), y_cap=None):
    '''Run one analysis: returns (FdrResult, QValueVector, QQPlotModel). The model carries the read-offs.'''
    method = method.upper()
    result = stepup(ordered, q, method)
    qvals = q_values(ordered, method)
    model = build_plot_model(ordered, qvals, q, extra_q_lines, method=method, y_cap=y_cap)
    return result, qvals, model

def summary_line(result):
    alpha = format_real(result.alpha_implied) if result.alpha_implied is not None else "none"
    return "k*=%i of m=%i significant at FDR q=%s (alpha=%s)" % (result.k_star, result.m, format_real(result.q), alpha)

def describe_readouts(ptee, readouts):
    '''Verbose account of the read-offs'''
    if readouts.k_star > 0:
        ptee.write("- implied alpha = 10^-%.4f = %s" % (readouts.y_at_cut, format_real(readouts.alpha_implied, 4)))
        ptee.write("- proportion significant = 10^-%.4f = %s" % (readouts.x_at_cut, format_real(readouts.proportion_significant, 4)))
    ptee.write("- minimum attainable FDR q=%s, reached with k=%i discoveries (%s)"
               % (format_real(readouts.q_min, 4), readouts.k_at_min,
                  "at the smallest p-value" if readouts.minimum_at_smallest else "at an intermediate p-value"))
    if readouts.n_below_h0:
        ptee.write("- %i of the most extreme p-values lie below the H0 line" % readouts.n_below_h0)


#***********************************
#                       MAIN
#***********************************

def main(argv=None, command=None):
    '''Run the tool on argv (a string, a list, or None for sys.argv) and return its exit code: 0 success,
    1 input/output error, 2 invalid data or options. Command-line errors found by argparse, such as a level
    outside (0,1], are not returned: argparse prints the usage and raises SystemExit(2), as --help raises SystemExit(0).'''
    argv = parse_argv(argv)

    #==== COMMANDLINE PARSER ====

    #== Commandline description
    desc = '''FDR analysis of a set of p-values
Description: Sort the p-values, apply the Benjamini-Hochberg (or Benjamini-Yekutieli) step-up procedure at the FDR level q, and compute the q-value of every test, the significance threshold alpha implied by q, the proportion of discoveries and the minimum attainable FDR.
    '''
    ep = '''Example usage:
- Analyze a csv file at FDR 5%:
qqf analyze --input pvalues.csv --q 0.05 --out report.json --table table.csv
- Same with the Benjamini-Yekutieli correction (valid under any dependence between tests):
qqf analyze --input pvalues.txt --q 0.05 --method by

Exit codes: 0 success, 1 input/output error, 2 validation error.
'''

    #== Commandline arguments
    main_parser = argparse.ArgumentParser(add_help=True, description=desc, epilog=ep, formatter_class=argparse.RawTextHelpFormatter, prog=command)
    add_dataset_arguments(main_parser)
    add_level_arguments(main_parser)
    main_parser.add_argument('-o', '--out', '--report', dest='out', metavar='/some/folder/report.json', type=str, required=False,
                        help='Path to the JSON report (default: print it to the console).')
    main_parser.add_argument('-t', '--table', metavar='/some/folder/table.csv', type=str, required=False,
                        help='Path to the per-test CSV table (id,p,rank,q_value,significant).')
    add_log_arguments(main_parser)

    #== Parsing the arguments
    args = main_parser.parse_args(argv) # Storing all arguments to args

    # -- Configure the log file if enabled (ptee.write() will write to both stdout/console and to the log file)
    ptee, perr = open_tees(args.log, args.silent)

    if args.verbose:
        ptee.write("====================================")
        ptee.write("QQFDR analysis")
        ptee.write("====================================")

    retval = 0
    try:
        ordered = load_dataset(args)
        if args.verbose: ptee.write("Loaded %i p-values from %s" % (ordered.m, args.input))
        result, qvals, model = analyze(ordered, args.q, args.method)
        json_bytes, csv_bytes = write_report(result, qvals, model.annotations, ordered)
        if args.out:
            write_bytes(args.out, json_bytes)
        else:
            ptee.write(json_bytes.decode('utf-8'), end='')
        if args.table:
            write_bytes(args.table, csv_bytes)
        ptee.write(summary_line(result))
        if args.verbose: describe_readouts(ptee, model.annotations)
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
