"""Collection of utility functions general to the command-line tools: logger
initialisation and reading of the YAML run config files.

NOTE: the command-line tools write their machine-readable output to stdout, so
    the default log stream is stderr.
"""

__all__ = [
    'init_logger',
    'update_log_level',
    'read_yaml_config',
    'get_valued_param_from_config',
    'remove_comment']

import sys
import logging
import yaml

# ===Import globals
from moore_utils.globals import _VALID_LOG_LEVELS
from moore_utils.errors import ParseError

# === Set up logging
logger = logging.getLogger(__name__)

# Attribute marking the handlers installed by `init_logger`
_HANDLER_TAG = '_moore_handler'

# Supported variable types for the run config values
_SUPPORTED_CONFIG_VAR_TYPES = {'int': int, 'str': str}

_LOG_FORMAT = '%(asctime)s -- %(levelname)s: %(message)s'

# === Classes ===


class CustomColorFormatter(logging.Formatter):
    """Formatter wrapping every record in the ANSI color of its level
    """

    _LEVEL_COLORS = {logging.DEBUG: "\x1b[38;20m",
                     logging.INFO: "\x1b[38;20m",
                     logging.WARNING: "\x1b[33;20m",
                     logging.ERROR: "\x1b[31;20m",
                     logging.CRITICAL: "\x1b[31;1m"}
    _RESET = "\x1b[0m"

    def __init__(self, fmt=_LOG_FORMAT):
        super().__init__(fmt)

    def format(self, record):
        color = self._LEVEL_COLORS.get(record.levelno, self._RESET)
        return color + super().format(record) + self._RESET

# === Functions ===


def init_logger(log_level='INFO', color=False,
                log_file=None, null_logger=False):
    """Initialize the logger and formatting. This is a convenience function

    Calling it again replaces the handler installed by an earlier call, so the
    tools can be chained in a single process (e.g. in the tests) without
    duplicated log lines.

    Parameters
    ----------
    log_level: str, optional
        The level of the logger

    color: bool, optional
        If True the logger will be colored by levels

    log_file: str, optional
        If given the log will go to this file rather than to stderr

    null_logger: bool, optional
        If True, the log messages are discarded

    Returns
    -------
    Logger object
    """
    if log_level not in _VALID_LOG_LEVELS:
        raise ValueError('Invalid log level!')

    logger = logging.getLogger()
    logger.setLevel(logging.getLevelName(log_level))

    for old_handler in list(logger.handlers):
        if getattr(old_handler, _HANDLER_TAG, False):
            logger.removeHandler(old_handler)

    if null_logger:
        handler = logging.NullHandler()
    elif log_file is None:
        handler = logging.StreamHandler(sys.stderr)
    else:
        handler = logging.FileHandler(log_file)

    if color:
        handler.setFormatter(CustomColorFormatter())
    else:
        handler.setFormatter(logging.Formatter(_LOG_FORMAT))

    setattr(handler, _HANDLER_TAG, True)
    logger.addHandler(handler)

    return logger


def update_log_level(log_level):
    """Update the level of the root logger, e.g. based on a config file

    Parameters
    ----------
    log_level: str
        One of the valid log levels

    Returns
    -------
    None

    """
    if log_level not in _VALID_LOG_LEVELS:
        raise ValueError(
            "Invalid log level '{0:s}'!".format(str(log_level)))

    if log_level != 'INFO':
        logger.info(
            "Updating logger level to '{0:s}' based on config file...".format(
                log_level))

    logging.getLogger().setLevel(logging.getLevelName(log_level))


def remove_comment(arg_string, comment_character='#'):
    """Strip a trailing comment from a run config string value

    Parameters
    ----------
    arg_string: str
        Raw value

    comment_character: str
        Character opening the comment

    Returns
    -------
    Everything before the first comment character

    """
    return arg_string.split(comment_character)[0]


def read_yaml_config(yaml_path):
    """Read a whole .yml (or .json) file into a python object

    Parameters
    ----------
    yaml_path: str
        Path to the file

    Returns
    -------
    The parsed content

    """
    try:
        with open(yaml_path) as file:
            return yaml.safe_load(file)
    except yaml.YAMLError as e:
        raise ParseError(
            "Error while parsing '{0:s}': {1:s}".format(yaml_path, str(e)))
    except OSError as e:
        raise ParseError(
            "Cannot read '{0:s}': {1:s}".format(yaml_path, str(e)))


def get_valued_param_from_config(config_dict,
                                 param_name,
                                 param_type,
                                 param_default=None):
    """Get a typed value from a parsed run config, falling back to a default
    value if the parameter is not defined.

    Parameters
    ----------
    config_dict: dict or None
        The parsed run config (None if no config file was given)

    param_name: str
        Name of the parameter

    param_type: str
        Either 'int' or 'str'

    param_default: optional
        Value returned if the config does not define the parameter

    Returns
    -------
    The value of the parameter

    """
    if param_type not in _SUPPORTED_CONFIG_VAR_TYPES:
        raise ValueError(
            'Unsupported config variable type {0:s}!'.format(param_type))

    if config_dict is None or config_dict.get(param_name) is None:
        logger.debug(
            "No '{0:s}' is defined, fallback to default: {1:s} ...".format(
                param_name, str(param_default)))
        return param_default

    cparam = config_dict[param_name]

    if isinstance(cparam, str):
        cparam = remove_comment(cparam).strip()

    # bool is an int subclass, do not accept it for numeric parameters
    if param_type == 'int' and isinstance(cparam, bool):
        raise ParseError(
            "Invalid value for '{0:s}': {1:s}".format(param_name, str(cparam)))

    try:
        cparam = _SUPPORTED_CONFIG_VAR_TYPES[param_type](cparam)
    except (TypeError, ValueError):
        raise ParseError(
            "Invalid value for '{0:s}': {1:s}".format(param_name, str(cparam)))

    logger.debug("Set '{0:s}' to {1:s} ...".format(param_name, str(cparam)))

    return cparam


# === MAIN ===
if __name__ == "__main__":
    pass
