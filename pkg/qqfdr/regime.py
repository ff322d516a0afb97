#!/usr/bin/env python
#
# Regime study: replicate a simulation over many seeds and summarize how its FDR behaves
# Copyright (C) 2026 qqfdr developers
#
# Licensed under the MIT License (MIT)
#

import argparse
import sys

import tqdm

from .simulate import spec_from_args
from .lib.aux_funcs import parse_argv, add_simulation_arguments, add_log_arguments, is_level, is_positive_int, write_bytes
from .lib.tee import open_tees
from .lib.errors import QQFdrError
from .lib.simulator import regime_summary
from .lib.render import write_regime_json, format_real


def main(argv=None, command=None):
    '''Run the tool on argv (a string, a list, or None for sys.argv) and return its exit code: 0 success,
    1 input/output error, 2 invalid data or options. Command-line errors found by argparse, such as a level
    outside (0,1], are not returned: argparse prints the usage and raises SystemExit(2), as --help raises SystemExit(0).'''
    argv = parse_argv(argv)

    desc = '''Regime study of simulated p-values
Description: Simulate --runs datasets with consecutive seeds starting at --seed, and report the median number of tests with q-value <= q, the fraction of runs where the minimum attainable FDR is reached at an intermediate p-value (k_at_min > 1), and the fraction where the first five q-values are strictly increasing.
    '''
    ep = '''Example usage:
- Independent strong signals:
qqf regime --pattern independent --pi1 0.05 --effect 3.5 --runs 100 --q 0.1
- Positively correlated tests:
qqf regime --pattern equicorrelated --rho 0.5 --pi1 0.5 --effect 1.5 --runs 100 --out regime.json
'''

    main_parser = argparse.ArgumentParser(add_help=True, description=desc, epilog=ep, formatter_class=argparse.RawTextHelpFormatter, prog=command)
    add_simulation_arguments(main_parser)
    main_parser.add_argument('--runs', metavar='N', type=is_positive_int, default=100,
                        help='Number of simulated datasets (default: %(default)s).')
    main_parser.add_argument('--q', metavar='LEVEL', type=is_level, default=0.1,
                        help='FDR level at which discoveries are counted (default: %(default)s).')
    main_parser.add_argument('-o', '--out', metavar='/some/folder/regime.json', type=str, required=False,
                        help='Path to the JSON summary to write.')
    add_log_arguments(main_parser)

    args = main_parser.parse_args(argv)

    ptee, perr = open_tees(args.log, args.silent)

    retval = 0
    try:
        spec = spec_from_args(args)
        progress = lambda seeds: tqdm.tqdm(seeds, file=ptee.stream_view(), total=args.runs, leave=True, disable=args.silent or not args.verbose)
        summary = regime_summary(spec, runs=args.runs, q=args.q, progress=progress)
        if args.out:
            write_bytes(args.out, write_regime_json(summary, spec))
        ptee.write("%i runs of %r" % (summary.runs, spec))
        ptee.write("- median number of q-values <= %s: %s" % (format_real(args.q), format_real(summary.median_discoveries)))
        ptee.write("- minimum FDR at an intermediate p-value: %s of runs" % format_real(summary.fraction_intermediate_minimum, 4))
        ptee.write("- strictly increasing q-values over ranks 1-5: %s of runs" % format_real(summary.fraction_increasing_head, 4))
    except QQFdrError as exc:
        perr.write("ERROR: %s" % exc)
        retval = 2
    except (IOError, OSError) as exc:
        perr.write("ERROR: %s" % exc)
        retval = 1

    ptee.close()
    perr.close()
    return retval

if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
