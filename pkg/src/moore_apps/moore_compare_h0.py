"""The command line tool `moore_compare_h0`: compare the Moore H_0 of the
unit groupoid of the Cantor set with the singular H_0 of its classifying space
"""

import sys
import logging
import argparse

from moore_utils.chain_complex import corrupt_presentation, nerve_unit_cantor
from moore_utils.realization import Verdict, compare_h0
from moore_utils.serialization import comparison_to_json, dumps

from moore_apps import apps_util
from moore_apps import apps_defaults

# === Set up logging
logger = logging.getLogger(__name__)

# === Functions ===


def format_comparison_table(report):
    rows = [[w.name, 'pass' if w.passed else 'FAIL', w.detail]
            for w in report.witnesses]

    lines = ['moore:    {0:s} ({1:s})'.format(report.moore['group'],
                                              report.moore['cardinality']),
             'singular: {0:s} ({1:s})'.format(report.singular['group'],
                                              report.singular['cardinality']),
             apps_util.format_table(['witness', 'status', 'detail'], rows),
             'verdict:  {0:s} ({1:s})'.format(report.verdict.value,
                                              report.reason)]

    return '\n'.join(lines)


def main(argv=None):
    """Run the comparison and report the verdict

    Keyword Arguments
    -----------------
    '-l' or '--levels': Optional[int], default 3
        Top level N of the nerve, at least 2

    '-d' or '--depth': Optional[int], default 3
        Truncation depth of the Moore side checks

    '-s' or '--samples': Optional[int], default 100
        Enumerated functions and sampled points

    """
    # === Set arguments
    parser = argparse.ArgumentParser(
        description='Moore H_0 versus singular H_0 of the classifying space')

    apps_util.add_run_arguments(parser)

    # Test hook: runs the comparison on a corrupted nerve
    parser.add_argument(
        '--inject_fault',
        required=False,
        help=argparse.SUPPRESS,
        action='store_true')

    # ===========================================================================
    args = parser.parse_args(argv)  # Get the arguments

    apps_util.init_tool_logger(args)

    def body():
        config = apps_util.resolve_run_config(args, 'compare-h0')

        presentation = None
        if args.inject_fault:
            logger.warning('Injecting a fault into the nerve!')
            presentation = corrupt_presentation(
                nerve_unit_cantor(config.levels), *apps_defaults._fault_face)

        report = compare_h0(config.levels, config.depth, config.samples,
                            config.seed, presentation=presentation)

        if config.format == 'table':
            text = format_comparison_table(report)
        else:
            text = dumps(comparison_to_json(report))

        apps_util.write_output(text, config.out)

        if report.verdict != Verdict.NOT_ISOMORPHIC:
            return apps_defaults._EXIT_CHECK_FAILED

        return apps_defaults._EXIT_SUCCESS

    sys.exit(apps_util.run_tool('moore_compare_h0', body))


# === MAIN ===
if __name__ == "__main__":
    main()
