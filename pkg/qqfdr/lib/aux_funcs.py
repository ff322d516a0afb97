#!/usr/bin/env python
#
# Auxiliary functions library
# Copyright (C) 2026 qqfdr developers
#

import os

from argparse import ArgumentTypeError


def is_level(value):
    '''Checks that a commandline value is a valid FDR level q in (0, 1]'''
    try:
        q = float(value)
    except (TypeError, ValueError):
        raise ArgumentTypeError("q must be in (0,1], got %r" % value)
    if not 0.0 < q <= 1.0:  # also rejects nan
        raise ArgumentTypeError("q must be in (0,1], got %r" % value)
    return q

def is_level_list(value):
    '''Comma-separated list of FDR levels, eg "0.05,0.1,0.3"'''
    parts = [x.strip() for x in value.split(',') if x.strip()]
    if not parts:
        raise ArgumentTypeError("expected a comma-separated list of levels in (0,1], got %r" % value)
    return [is_level(x) for x in parts]

def is_fraction(value):
    '''Checks that a commandline value lies in [0, 1]'''
    try:
        x = float(value)
    except (TypeError, ValueError):
        raise ArgumentTypeError("%r is not a number" % value)
    if not 0.0 <= x <= 1.0:
        raise ArgumentTypeError("%r is not in [0,1]" % value)
    return x

def is_positive_int(value):
    try:
        x = int(value)
    except (TypeError, ValueError):
        raise ArgumentTypeError("%r is not an integer" % value)
    if x < 1:
        raise ArgumentTypeError("%r must be a positive integer" % value)
    return x

def is_positive_real(value):
    try:
        x = float(value)
    except (TypeError, ValueError):
        raise ArgumentTypeError("%r is not a number" % value)
    if not x > 0.0 or x == float('inf'):
        raise ArgumentTypeError("%r must be a positive finite number" % value)
    return x

def fullpath(relpath):
    '''Relative path to absolute'''
    if (type(relpath) is object or hasattr(relpath, 'read')): # relpath is either an object or file-like, try to get its name
        relpath = relpath.name
    return os.path.abspath(os.path.expanduser(relpath))

def guess_format(path, default='plain'):
    '''Guess the dataset format from the file extension (.csv, .tsv/.tab, anything else is plain)'''
    ext = os.path.splitext(path)[1].lower()
    if ext == '.csv':
        return 'csv'
    elif ext in ('.tsv', '.tab'):
        return 'tsv'
    return default

def create_dir_if_not_exist(path):
    """Create a directory if it does not already exist, else nothing is done and no error is return"""
    if path and not os.path.exists(path):
        os.makedirs(path)

def write_bytes(path, data):
    '''Write an artifact, creating the parent folder if needed. Artifacts are always written in binary mode so line endings are never translated.'''
    create_dir_if_not_exist(os.path.dirname(fullpath(path)))
    with open(path, 'wb') as fh:
        fh.write(data)

#### COMMANDLINE AUX FUNCTIONS ####
# Arguments shared by several qqfdr tools, so that they are spelled and documented the same everywhere

def parse_argv(argv):
    '''Normalize the argv given to a tool's main(): None means sys.argv, a string is split like a shell would'''
    import shlex
    import sys
    if argv is None: # if argv is empty, fetch from the commandline
        return sys.argv[1:]
    elif isinstance(argv, str): # else if argv is supplied but it's a simple string, we need to parse it to a list of arguments before handing to argparse
        return shlex.split(argv)
    return list(argv)

def add_dataset_arguments(parser):
    parser.add_argument('-i', '--input', metavar='/some/folder/pvalues.csv', type=str, required=True,
                        help='Path to the p-values file (plain text: one p-value per line, or csv/tsv with a header row).')
    parser.add_argument('--format', choices=['plain', 'csv', 'tsv'], default=None,
                        help='Input format (default: guessed from the extension, .csv -> csv, .tsv/.tab -> tsv, else plain).')
    parser.add_argument('--p-column', metavar='NAME_OR_NUMBER', type=str, default=None,
                        help='Header name or 1-based number of the p-value column (default: first of p, pvalue, p_value, pval).')
    parser.add_argument('--id-column', metavar='NAME_OR_NUMBER', type=str, default=None,
                        help='Header name or 1-based number of the test id column (default: "id" if present, else ids are test_<row>).')
    parser.add_argument('--clamp-zero', metavar='TINY', type=is_positive_real, default=None,
                        help='Replace p = 0 by this tiny positive value (default: p = 0 is an error).')

def add_level_arguments(parser, default_q=0.05):
    parser.add_argument('--q', metavar='LEVEL', type=is_level, default=default_q,
                        help='FDR level q in (0,1] (default: %(default)s).')
    parser.add_argument('--method', choices=['bh', 'by'], default='bh', type=str.lower,
                        help='Step-up procedure: bh (Benjamini-Hochberg) or by (Benjamini-Yekutieli, any dependence) (default: %(default)s).')

def add_simulation_arguments(parser):
    parser.add_argument('--m', metavar='COUNT', type=is_positive_int, default=200,
                        help='Number of tests (default: %(default)s).')
    parser.add_argument('--pattern', choices=['independent', 'equicorrelated'], default='independent',
                        help='Dependence between test statistics (default: %(default)s).')
    parser.add_argument('--pi1', metavar='FRACTION', type=is_fraction, default=0.05,
                        help='Fraction of non-null tests (default: %(default)s).')
    parser.add_argument('--effect', metavar='DELTA', type=float, default=3.5,
                        help='Mean shift of the non-null test statistics (default: %(default)s).')
    parser.add_argument('--rho', metavar='RHO', type=float, default=0.0,
                        help='Equicorrelation of the test statistics, in [0,1), must be 0 for independent (default: %(default)s).')
    parser.add_argument('--seed', metavar='SEED', type=int, default=42,
                        help='64-bit seed of the normal variates generator (default: %(default)s).')

def add_log_arguments(parser):
    parser.add_argument('-l', '--log', metavar='/some/folder/filename.log', type=str, required=False,
                        help='Path to the log file. (Output will be piped to both the stdout and the log file)')
    parser.add_argument('-v', '--verbose', action='store_true', required=False, default=False,
                        help='Verbose mode (show more output).')
    parser.add_argument('--silent', action='store_true', required=False, default=False,
                        help='No console output (but if --log specified, the log will still be saved in the specified file).')
