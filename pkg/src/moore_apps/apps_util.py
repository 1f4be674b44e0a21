"""Collection of utility functions shared by the `moore` command line tools:
the common flags, the run config resolution, the built-in presentations and
the output handling.
"""

__all__ = ['RunConfig',
           'add_presentation_arguments',
           'add_run_arguments',
           'init_tool_logger',
           'resolve_run_config',
           'parse_groupoid_name',
           'build_presentation',
           'write_output',
           'format_table',
           'run_tool']

import sys
import logging

from dataclasses import dataclass
from typing import Optional

from moore_utils import pipeline
from moore_utils.serialization import load_json_file, presentation_from_json
from moore_utils.chain_complex import check_presentation, \
    corrupt_presentation, nerve_pair_groupoid, nerve_unit_cantor, \
    nerve_unit_discrete
from moore_utils.errors import MapValidationError, MooreError, ParseError, \
    UnsupportedPresentationError

# === Import globals
from moore_utils.globals import _TABLE_WHITESPACE_SKIP

# Load the tool default parameters
from moore_apps import apps_defaults

# === Set up logging
logger = logging.getLogger(__name__)

# === Classes ===


@dataclass(frozen=True)
class RunConfig:
    """Resolved parameters of a single tool run
    """
    command: str
    groupoid: Optional[str]
    file: Optional[str]
    depth: int
    levels: int
    samples: int
    seed: int
    format: str
    out: Optional[str]
    log_level: str

# === Functions ===


def add_presentation_arguments(parser):
    """Add the mutually exclusive --groupoid / --file flags
    """
    source = parser.add_mutually_exclusive_group()

    source.add_argument(
        '-g',
        '--groupoid',
        required=False,
        help='Built-in presentation: {0:s}'.format(
            ', '.join(apps_defaults._builtin_groupoids)),
        action='store',
        type=str)

    source.add_argument(
        '-f',
        '--file',
        required=False,
        help='Presentation JSON file',
        action='store',
        type=str)


def add_run_arguments(parser):
    """Add the flags every tool understands
    """
    parser.add_argument(
        '-c',
        '--config_file',
        required=False,
        help='YAML run config (see templates/run_config_template.yml)',
        action='store',
        type=str)

    parser.add_argument(
        '-l',
        '--levels',
        required=False,
        help='Top level N of the built-in presentation',
        action='store',
        type=int)

    parser.add_argument(
        '-d',
        '--depth',
        required=False,
        help='Truncation depth',
        action='store',
        type=int)

    parser.add_argument(
        '-s',
        '--samples',
        required=False,
        help='Number of sampled cases',
        action='store',
        type=int)

    parser.add_argument(
        '--seed',
        required=False,
        help='Seed of every sampled check',
        action='store',
        type=int)

    parser.add_argument(
        '--format',
        required=False,
        help='Output format: json (default) or table',
        action='store',
        choices=apps_defaults._valid_output_formats,
        type=str)

    parser.add_argument(
        '-o',
        '--out',
        required=False,
        help='Output file (default: stdout)',
        action='store',
        type=str)

    parser.add_argument(
        '-v',
        '--verbosity_debug',
        required=False,
        help='If set, the log level is DEBUG',
        action='store_true')

    parser.add_argument(
        '--log_file',
        required=False,
        help='If given, the log goes to this file instead of stderr',
        action='store',
        type=str,
        default=None)

    parser.add_argument(
        '--color_log',
        required=False,
        help='If set, the stderr log is colored by level',
        action='store_true')


def init_tool_logger(args):
    """Initialise the logger of a tool from its parsed flags
    """
    return pipeline.init_logger(
        log_level='DEBUG' if getattr(args, 'verbosity_debug', False)
        else 'INFO',
        color=getattr(args, 'color_log', False),
        log_file=getattr(args, 'log_file', None))


def resolve_run_config(args, command):
    """Merge flags, run config file and defaults into a RunConfig

    Parameters
    ----------
    args: argparse.Namespace
        Parsed flags

    command: str
        Name of the tool

    Returns
    -------
    RunConfig

    """
    config_dict = None

    if getattr(args, 'config_file', None) is not None:
        config_dict = pipeline.read_yaml_config(args.config_file)

        if config_dict is not None and not isinstance(config_dict, dict):
            raise ParseError("The run config '{0:s}' is not a mapping".format(
                args.config_file))

    values = {}

    for name, default in apps_defaults._default_run_config_dict.items():
        flag_value = getattr(args, name, None)

        if flag_value is not None:
            values[name] = flag_value
        else:
            values[name] = pipeline.get_valued_param_from_config(
                config_dict, name,
                apps_defaults._run_config_param_types[name], default)

    if getattr(args, 'verbosity_debug', False):
        values['log_level'] = 'DEBUG'
    elif values['log_level'] != 'INFO':
        try:
            pipeline.update_log_level(values['log_level'])
        except ValueError as e:
            raise ParseError(str(e))

    if values['depth'] < 0:
        raise ParseError('The depth has to be nonnegative!')
    if values['samples'] < 1:
        raise ParseError('The number of samples has to be positive!')
    if values['levels'] < 1:
        raise ParseError('The number of levels has to be positive!')
    if values['format'] not in apps_defaults._valid_output_formats:
        raise ParseError("Unknown output format '{0:s}'".format(
            values['format']))

    return RunConfig(command=command,
                     groupoid=getattr(args, 'groupoid', None),
                     file=getattr(args, 'file', None),
                     out=getattr(args, 'out', None),
                     **values)


def parse_groupoid_name(name):
    """Split a built-in name into (kind, size)

    'unit-cantor' has no size, 'unit-discrete:k' and 'pair:k' need k >= 1.
    """
    kind, _, size = name.partition(':')

    if kind == 'unit-cantor' and size == '':
        return kind, None

    if kind in ('unit-discrete', 'pair'):
        try:
            k = int(size)
        except ValueError:
            k = 0
        if k >= 1:
            return kind, k

    raise ParseError("Unknown groupoid '{0:s}', use one of: {1:s}".format(
        name, ', '.join(apps_defaults._builtin_groupoids)))


def build_presentation(config, inject_fault=False):
    """The presentation named by the run config, validated

    Parameters
    ----------
    config: RunConfig

    inject_fault: bool, optional
        Replace one face by the bit swap (built-in unit-cantor only)

    Returns
    -------
    SimplicialPresentation

    """
    if config.file is not None:
        logger.info("Reading presentation from '{0:s}'".format(config.file))
        P = presentation_from_json(load_json_file(config.file))
    else:
        kind, size = parse_groupoid_name(
            config.groupoid or apps_defaults._default_groupoid)

        if kind == 'unit-cantor':
            P = nerve_unit_cantor(config.levels)
        elif kind == 'unit-discrete':
            P = nerve_unit_discrete(size, config.levels)
        else:
            P = nerve_pair_groupoid(size, config.levels)

    check_presentation(P)

    if inject_fault:
        logger.warning('Injecting a fault into the presentation!')
        P = corrupt_presentation(P, *apps_defaults._fault_face)

    logger.info('Using presentation {0:s} with levels 0..{1:d}'.format(
        P.name, P.max_level))

    return P


def write_output(text, out=None):
    """Write the result text to the output file or to stdout
    """
    if out is None:
        sys.stdout.write(text + '\n')
        sys.stdout.flush()
    else:
        with open(out, 'w') as file:
            file.write(text + '\n')
        logger.info("Output written to '{0:s}'".format(out))


def format_table(header, rows):
    """Plain text table with left aligned, fixed width columns
    """
    width = max([_TABLE_WHITESPACE_SKIP] +
                [len(str(cell)) + 2 for row in [header] + rows
                 for cell in row])

    lines = [''.join(str(cell).ljust(width) for cell in row).rstrip()
             for row in [header] + rows]

    return '\n'.join(lines)


def run_tool(tool_name, body):
    """Run the body of a tool and map the outcome to an exit code

    Parameters
    ----------
    tool_name: str

    body: callable
        Takes no argument and returns the exit code

    Returns
    -------
    int

    """
    logger.info("Running *{0:s}*".format(tool_name))

    try:
        exit_code = body()
    except UnsupportedPresentationError as e:
        logger.error('Unsupported presentation: {0:s}'.format(str(e)))
        exit_code = apps_defaults._EXIT_UNSUPPORTED
    except MapValidationError as e:
        for diagnostic in e.diagnostics:
            logger.error('Invalid chart presentation: {0:s}'.format(
                str(diagnostic)))
        exit_code = apps_defaults._EXIT_INPUT_ERROR
    except (MooreError, ValueError, OSError) as e:
        logger.error('Invalid input: {0:s}'.format(str(e)))
        exit_code = apps_defaults._EXIT_INPUT_ERROR

    logger.info("Exit {0:d}".format(exit_code))

    return exit_code


# === MAIN ===
if __name__ == "__main__":
    pass
