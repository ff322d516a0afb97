#!/usr/bin/env python
#
# Seeded simulation of p-value datasets
# Copyright (C) 2026 qqfdr developers
#
# Licensed under the MIT License (MIT)
#
#=================================
#        qqfdr P-values Simulator
#                       License: MIT
#=================================
#
# Two regimes are of interest:
# - independent tests with a few strong signals: the minimum FDR is attained at the smallest p-value,
#   and the smallest p-values lie further and further from the H0 line;
# - equicorrelated tests (one shared factor): the effective number of tests is smaller than m, the
#   smallest p-values are not as small as they should be and curve back towards the H0 line, so the
#   minimum FDR is attained at an intermediate p-value and q-values plateau.
#

import argparse
import sys

from .lib.aux_funcs import parse_argv, add_simulation_arguments, add_log_arguments, write_bytes
from .lib.tee import open_tees
from .lib.errors import QQFdrError
from .lib.simulator import SimSpec, simulate_pvalues
from .lib.render import write_pvalues_csv


def spec_from_args(args):
    return SimSpec(m=args.m, pattern=args.pattern, pi1=args.pi1, effect=args.effect, rho=args.rho, seed=args.seed)

def main(argv=None, command=None):
    '''Run the tool on argv (a string, a list, or None for sys.argv) and return its exit code: 0 success,
    1 input/output error, 2 invalid data or options. Command-line errors found by argparse, such as a level
    outside (0,1], are not returned: argparse prints the usage and raises SystemExit(2), as --help raises SystemExit(0).'''
    argv = parse_argv(argv)

    #== Commandline description
    desc = '''Simulate a set of p-values
Description: Draw m two-sided p-values from z-statistics z_i = sqrt(rho)*Z0 + sqrt(1-rho)*eps_i + effect*[i non-null], where the first round(pi1*m) tests are non-null. The same parameters and seed always give the same file, byte for byte.
    '''
    ep = '''Example usage:
- Independent tests, 5% strong signals:
qqf simulate --m 200 --pattern independent --pi1 0.05 --effect 3.5 --seed 42 --out p.csv
- Positively correlated tests:
qqf simulate --m 200 --pattern equicorrelated --rho 0.5 --pi1 0.5 --effect 1.5 --seed 42 --out p.csv

Exit codes: 0 success, 1 input/output error, 2 validation error.
'''

    main_parser = argparse.ArgumentParser(add_help=True, description=desc, epilog=ep, formatter_class=argparse.RawTextHelpFormatter, prog=command)
    add_simulation_arguments(main_parser)
    main_parser.add_argument('-o', '--out', metavar='/some/folder/pvalues.csv', type=str, required=False,
                        help='Path to the CSV file to write (columns id,p) (default: print to the console).')
    add_log_arguments(main_parser)

    args = main_parser.parse_args(argv)

    ptee, perr = open_tees(args.log, args.silent)

    retval = 0
    try:
        spec = spec_from_args(args)
        if args.verbose: ptee.write("Simulating %r" % spec)
        data = write_pvalues_csv(simulate_pvalues(spec))
        if args.out:
            write_bytes(args.out, data)
            ptee.write("Simulated m=%i p-values (%s, seed=%i) written to %s" % (spec.m, spec.pattern, spec.seed, args.out))
        else:
            ptee.write(data.decode('utf-8'), end='')
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
