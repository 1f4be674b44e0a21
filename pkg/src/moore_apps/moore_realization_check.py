"""The command line tool `moore_realization_check`: randomized check of the
affine, j, kappa and contraction identities
"""

import sys
import logging
import argparse

from moore_utils.realization import run_realization_checks
from moore_utils.serialization import dumps, realization_report_to_json

from moore_apps import apps_util
from moore_apps import apps_defaults

# === Set up logging
logger = logging.getLogger(__name__)

# === Functions ===


def main(argv=None):
    """Run the realization property suite

    Keyword Arguments
    -----------------
    '-s' or '--samples': Optional[int], default 100
        Random cases per property

    '--seed': Optional[int], default 1729

    """
    # === Set arguments
    parser = argparse.ArgumentParser(
        description='Property checks of the Delta^inf_fin model')

    apps_util.add_run_arguments(parser)

    # Test hook: replaces the affine push by a broken one
    parser.add_argument(
        '--inject_fault',
        required=False,
        help=argparse.SUPPRESS,
        action='store_true')

    # ===========================================================================
    args = parser.parse_args(argv)  # Get the arguments

    apps_util.init_tool_logger(args)

    def body():
        config = apps_util.resolve_run_config(args, 'realization-check')

        report = run_realization_checks(config.samples, config.seed,
                                        inject_fault=args.inject_fault)

        if config.format == 'table':
            text = apps_util.format_table(
                ['property', 'passed', 'failed'],
                [[r.name, r.passed, r.failed] for r in report.results])
        else:
            text = dumps(realization_report_to_json(report))

        apps_util.write_output(text, config.out)

        for r in report.results:
            if r.failed > 0:
                logger.error('Property {0:s} failed, e.g. for {1:s}'.format(
                    r.name, r.witness))

        if not report.passed:
            return apps_defaults._EXIT_CHECK_FAILED

        return apps_defaults._EXIT_SUCCESS

    sys.exit(apps_util.run_tool('moore_realization_check', body))


# === MAIN ===
if __name__ == "__main__":
    main()
