"""The command line tool `moore_enumerate`: the first k functions of the
enumeration of C(X, Z), one per line
"""

import sys
import logging
import argparse

from moore_utils.zfun import iter_enumeration
from moore_utils.serialization import dumps, function_to_json
from moore_utils.errors import ParseError

from moore_apps import apps_util
from moore_apps import apps_defaults

# === Set up logging
logger = logging.getLogger(__name__)

# === Functions ===


def main(argv=None):
    """List the beginning of the enumeration of C(X, Z)

    Keyword Arguments
    -----------------
    '-k' or '--count': Optional[int], default 10
        Number of functions to list

    """
    # === Set arguments
    parser = argparse.ArgumentParser(
        description='Enumeration of the locally constant functions X -> Z')

    parser.add_argument(
        '-k',
        '--count',
        required=False,
        default=apps_defaults._default_enumerate_count,
        help='Number of functions to list',
        action='store',
        type=int)

    apps_util.add_run_arguments(parser)

    # ===========================================================================
    args = parser.parse_args(argv)  # Get the arguments

    apps_util.init_tool_logger(args)

    def body():
        config = apps_util.resolve_run_config(args, 'enumerate')

        if args.count < 1:
            raise ParseError('The count has to be positive!')

        lines = []

        for k, f in enumerate(iter_enumeration()):
            if k >= args.count:
                break

            if config.format == 'table':
                cells = ' '.join('{0:s}:{1:d}'.format(cell, value)
                                 for _, cell, value in f.iter_cells())
                lines.append('{0:d}  {1:s}'.format(k, cells or '0'))
            else:
                lines.append(dumps(function_to_json(f)))

        logger.info('Listed {0:d} functions'.format(len(lines)))

        apps_util.write_output('\n'.join(lines), config.out)

        return apps_defaults._EXIT_SUCCESS

    sys.exit(apps_util.run_tool('moore_enumerate', body))


# === MAIN ===
if __name__ == "__main__":
    main()
