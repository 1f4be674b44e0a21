"""Global variables used by `moore_utils`
"""

# Define the allowed log levels
global _VALID_LOG_LEVELS

_VALID_LOG_LEVELS = ['CRITICAL', 'ERROR', 'WARNING', 'INFO', 'DEBUG']

# The bit alphabet of the Cantor set X = {0,1}^N
_BITS = ('0', '1')

# Component kinds of a presented space
_CANTOR_KIND = 'cantor'
_DISCRETE_KIND = 'discrete'

# Name of the single component used for the standard Cantor copy
_CANTOR_COMPONENT_NAME = 'X'

# Prefix of the component names of the nerve levels (G0, G1, ...)
_LEVEL_COMPONENT_PREFIX = 'G'

# Seed used by every sampled check, unless a seed is given
_DEFAULT_SEED = 1729

# Value bound and depth used when sampling random chains
_DEFAULT_CHAIN_VALUE_BOUND = 5

# Bounds used by the randomized realization checks
_MAX_SAMPLE_SIMPLEX_DIM = 6
_MAX_SAMPLE_SEQUENCE_INDEX = 24
_MAX_SAMPLE_WEIGHT = 12

# Bounds for sampled eventually periodic points
_MAX_SAMPLE_PREPERIOD = 10
_MAX_SAMPLE_PERIOD = 5

# Whitespace skip used for the human readable tables of the command line tools
_TABLE_WHITESPACE_SKIP = 12
