#!/usr/bin/env python
#
# Main script entry point for qqfdr, provides an interface with subcommands
# Copyright (C) 2026 qqfdr developers
#
# Licensed under the MIT License (MIT)
#
#=================================
#     qqfdr Main Subcommands Facade API
#                       License: MIT
#=================================
# Inspired by Adam Johnson's template for a script with subcommands: https://adamj.eu/tech/2021/10/15/a-python-script-template-with-sub-commands-and-type-hints/
#

from __future__ import annotations

# Import tools for argument parsing and typing
import argparse
from collections.abc import Sequence

# Import all qqfdr subcommands tools
from .analyze import main as analyze_main
from .plot import main as plot_main
from .simulate import main as simulate_main
from .regime import main as regime_main

SUBCOMMANDS = {
    "analyze": analyze_main,
    "plot": plot_main,
    "simulate": simulate_main,
    "regime": regime_main,
}

def main(argv: Sequence[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="qqf", description="False discovery rate analysis and annotated Q-Q plots of p-values.")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    # Add sub-commands
    analyze_parser = subparsers.add_parser("analyze", help="Step-up FDR analysis of a p-values file: q-values, implied alpha, discoveries, minimum FDR (JSON + CSV).", add_help=False)  # disable help, so that we can redefine it and propagate as an argument downstream to the called module
    analyze_parser.add_argument('-h', '--help', action='store_true')  # redefine help argument so that we can pass it downstream to submodules' argparse parsers

    plot_parser = subparsers.add_parser("plot", aliases=["qq"], help="Annotated Q-Q plot with H0 and FDR lines, points coloured by q-value (SVG).", add_help=False)
    plot_parser.add_argument('-h', '--help', action='store_true')

    simulate_parser = subparsers.add_parser("simulate", aliases=["sim"], help="Seeded simulation of independent or equicorrelated p-values (CSV).", add_help=False)
    simulate_parser.add_argument('-h', '--help', action='store_true')

    regime_parser = subparsers.add_parser("regime", help="Replicate a simulation over many seeds and summarize its FDR regime.", add_help=False)
    regime_parser.add_argument('-h', '--help', action='store_true')

    # Parse known arguments only, everything else (except helps) is passed downstream for the tools to handle with their own argparse
    args, args_remainder = parser.parse_known_args(argv)  # if argv is None, then parse_known_args() will fallback to sys.argv

    subargs = []
    if args.help is True:
        # Manage custom case of manually propagating --help to downstream module
        subargs.append("--help")
    subargs.extend(args_remainder)

    name = {"qq": "plot", "sim": "simulate"}.get(args.subcommand, args.subcommand)
    fullcommand = "qqf " + name
    if name not in SUBCOMMANDS:
        # Unreachable
        raise NotImplementedError(
            f"Command {args.subcommand} is not implemented (dev forgot!).",
        )
    return SUBCOMMANDS[name](argv=subargs, command=fullcommand)


if __name__ == "__main__":
    raise SystemExit(main())
