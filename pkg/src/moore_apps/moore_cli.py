"""The `moore` command: dispatches `moore <command> [flags]` to the tools
"""

import sys
import logging
import argparse

from moore_apps import moore_homology, moore_pushforward, moore_enumerate, \
    moore_realization_check, moore_compare_h0, moore_snf

# === Set up logging
logger = logging.getLogger(__name__)

_COMMANDS = {'homology': moore_homology.main,
             'pushforward': moore_pushforward.main,
             'enumerate': moore_enumerate.main,
             'realization-check': moore_realization_check.main,
             'compare-h0': moore_compare_h0.main,
             'snf': moore_snf.main}

# === Functions ===


def main(argv=None):
    """Run one of the tools; the flags after the command go to the tool

    Keyword Arguments
    -----------------
    command: (required, str)
        One of homology, pushforward, enumerate, realization-check,
        compare-h0, snf

    """
    parser = argparse.ArgumentParser(
        prog='moore',
        description='Moore homology of groupoids over the Cantor set')

    parser.add_argument(
        'command',
        help='The tool to run',
        choices=list(_COMMANDS.keys()))

    parser.add_argument(
        'tool_args',
        help='Flags of the tool (see moore <command> -h)',
        nargs=argparse.REMAINDER)

    args = parser.parse_args(sys.argv[1:] if argv is None else argv)

    _COMMANDS[args.command](args.tool_args)


# === MAIN ===
if __name__ == "__main__":
    main()
