"""Default variables used by the `moore` command line tools
"""

# === Import globals
from moore_utils.globals import _DEFAULT_SEED

# Default values of the run config; explicit flags override the config file,
# which overrides these
_default_run_config_dict = {'depth': 3,
                            'levels': 3,
                            'samples': 100,
                            'seed': _DEFAULT_SEED,
                            'format': 'json',
                            'log_level': 'INFO'}

# Types of the run config variables (see `pipeline.get_valued_param_from_config`)
_run_config_param_types = {'depth': 'int',
                           'levels': 'int',
                           'samples': 'int',
                           'seed': 'int',
                           'format': 'str',
                           'log_level': 'str'}

_valid_output_formats = ['json', 'table']

# Exit codes shared by every tool
_EXIT_SUCCESS = 0
_EXIT_CHECK_FAILED = 1
_EXIT_INPUT_ERROR = 2
_EXIT_UNSUPPORTED = 3

# Built-in presentations: the name, or the name and a size after a colon
_default_groupoid = 'unit-cantor'
_builtin_groupoids = ['unit-cantor', 'unit-discrete:k', 'pair:k']

# Number of functions listed by `moore_enumerate` if no count is given
_default_enumerate_count = 10

# The face replaced by the bit swap when a fault is injected: (level, index)
_fault_face = (1, 0)
