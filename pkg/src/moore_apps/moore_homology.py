"""The command line tool `moore_homology`: homology groups of a presentation
at one or at all truncation depths
"""

import sys
import logging
import argparse

from moore_utils.chain_complex import homology_report
from moore_utils.serialization import dumps, homology_report_to_json

from moore_apps import apps_util
from moore_apps import apps_defaults

# === Set up logging
logger = logging.getLogger(__name__)

# === Functions ===


def format_homology_table(report):
    """Human readable form of a HomologyReport
    """
    rows = [[e.level, e.depth, e.group.rank,
             ','.join(str(t) for t in e.group.torsion) or '-',
             str(e.group)] for e in report.entries]

    table = apps_util.format_table(
        ['level', 'depth', 'rank', 'torsion', 'group'], rows)

    stable = ' '.join('H_{0:d}:{1:s}'.format(n, 'yes' if flag else 'no')
                      for n, flag in report.stable.items())

    return table + '\nstable: ' + stable


def main(argv=None):
    """Homology of a built-in or a file presentation

    Keyword Arguments
    -----------------
    '-g' or '--groupoid': Optional[str], default 'unit-cantor'
        Built-in presentation: unit-cantor, unit-discrete:k or pair:k

    '-f' or '--file': Optional[str]
        Presentation JSON file (instead of a built-in)

    '-l' or '--levels': Optional[int]
        Top level of the built-in nerve; H_0..H_{levels-1} are reported

    '-d' or '--depth': Optional[int]
        Truncation depth

    '-a' or '--all_depths': Optional[bool], default False
        If set, every depth 0..depth is reported

    """
    # === Set arguments
    parser = argparse.ArgumentParser(
        description='Moore homology of a simplicial presentation')

    apps_util.add_presentation_arguments(parser)
    apps_util.add_run_arguments(parser)

    parser.add_argument(
        '-a',
        '--all_depths',
        required=False,
        help='If set, every depth from 0 up to --depth is reported',
        action='store_true')

    # ===========================================================================
    args = parser.parse_args(argv)  # Get the arguments

    apps_util.init_tool_logger(args)

    def body():
        config = apps_util.resolve_run_config(args, 'homology')
        P = apps_util.build_presentation(config)

        if args.all_depths:
            depths = list(range(config.depth + 1))
        else:
            depths = [config.depth]

        report = homology_report(P, P.max_level, depths)

        if config.format == 'table':
            text = format_homology_table(report)
        else:
            text = dumps(homology_report_to_json(report))

        apps_util.write_output(text, config.out)

        return apps_defaults._EXIT_SUCCESS

    sys.exit(apps_util.run_tool('moore_homology', body))


# === MAIN ===
if __name__ == "__main__":
    main()
