"""The command line tool `moore_snf`: Smith normal form of a triplet matrix
"""

import sys
import logging
import argparse

from moore_utils.snf import read_triplet_file, smith_normal_form
from moore_utils.serialization import dumps, snf_to_json

from moore_apps import apps_util
from moore_apps import apps_defaults

# === Set up logging
logger = logging.getLogger(__name__)

# === Functions ===


def main(argv=None):
    """Smith normal form of an integer matrix

    Keyword Arguments
    -----------------
    '-m' or '--matrix': (required, str)
        Triplet text file, one 'row col value' per line (0-indexed)

    '-t' or '--transforms': Optional[bool], default False
        If set, the transforms U and V are written as well

    """
    # === Set arguments
    parser = argparse.ArgumentParser(
        description='Smith normal form of an integer matrix')

    parser.add_argument(
        '-m',
        '--matrix',
        required=True,
        help='Triplet text file of the matrix',
        action='store',
        type=str)

    parser.add_argument(
        '-t',
        '--transforms',
        required=False,
        help='If set, the transforms U and V are written as well',
        action='store_true')

    apps_util.add_run_arguments(parser)

    # ===========================================================================
    args = parser.parse_args(argv)  # Get the arguments

    apps_util.init_tool_logger(args)

    def body():
        config = apps_util.resolve_run_config(args, 'snf')

        matrix = read_triplet_file(args.matrix)
        result = smith_normal_form(matrix)

        logger.info('{0:d}x{1:d} matrix of rank {2:d}'.format(
            matrix.rows, matrix.cols, result.rank))

        if config.format == 'table':
            text = apps_util.format_table(
                ['rank', 'divisors', 'torsion'],
                [[result.rank,
                  ','.join(str(d) for d in result.divisors) or '-',
                  ','.join(str(t) for t in result.torsion) or '-']])
        else:
            text = dumps(snf_to_json(matrix, result,
                                     transforms=args.transforms))

        apps_util.write_output(text, config.out)

        return apps_defaults._EXIT_SUCCESS

    sys.exit(apps_util.run_tool('moore_snf', body))


# === MAIN ===
if __name__ == "__main__":
    main()
