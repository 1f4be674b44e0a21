"""The command line tool `moore_pushforward`: the fiber sum p_* f of a
function along a local homeomorphism
"""

import sys
import logging
import argparse

from moore_utils.maps import check_valid, pushforward
from moore_utils.serialization import dumps, function_from_json, \
    function_to_json, load_json_file, map_from_json

from moore_apps import apps_util
from moore_apps import apps_defaults

# === Set up logging
logger = logging.getLogger(__name__)

# === Functions ===


def format_function_table(f):
    rows = [[name, cell, value] for name, cell, value in f.iter_cells()]
    return apps_util.format_table(['component', 'cell', 'value'], rows)


def main(argv=None):
    """Push a function forward along a map

    Keyword Arguments
    -----------------
    '-m' or '--map': (required, str)
        Map JSON file

    '-fn' or '--function': (required, str)
        Function JSON file, living on the domain of the map

    """
    # === Set arguments
    parser = argparse.ArgumentParser(
        description='Fiber sum pushforward of a locally constant function')

    parser.add_argument(
        '-m',
        '--map',
        required=True,
        help='Map JSON file',
        action='store',
        type=str)

    parser.add_argument(
        '-fn',
        '--function',
        required=True,
        help='Function JSON file',
        action='store',
        type=str)

    apps_util.add_run_arguments(parser)

    # ===========================================================================
    args = parser.parse_args(argv)  # Get the arguments

    apps_util.init_tool_logger(args)

    def body():
        config = apps_util.resolve_run_config(args, 'pushforward')

        p = check_valid(map_from_json(load_json_file(args.map)))
        f = function_from_json(load_json_file(args.function), space=p.domain)

        logger.info('Pushing forward along {0:d} charts'.format(
            len(p.charts)))

        g = pushforward(p, f)

        if config.format == 'table':
            text = format_function_table(g)
        else:
            text = dumps(function_to_json(g))

        apps_util.write_output(text, config.out)

        return apps_defaults._EXIT_SUCCESS

    sys.exit(apps_util.run_tool('moore_pushforward', body))


# === MAIN ===
if __name__ == "__main__":
    main()
