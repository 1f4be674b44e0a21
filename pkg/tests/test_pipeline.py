import logging
import pytest

from moore_utils import pipeline
from moore_utils.misc import fraction_to_string, string_to_fraction, \
    zigzag_integer
from moore_utils.errors import ParseError


def test_init_logger_replaces_its_handler():
    pipeline.init_logger()
    pipeline.init_logger('DEBUG')

    root = logging.getLogger()
    tagged = [h for h in root.handlers
              if getattr(h, pipeline._HANDLER_TAG, False)]

    assert len(tagged) == 1
    assert root.level == logging.DEBUG

    with pytest.raises(ValueError):
        pipeline.init_logger('LOUD')

    pipeline.init_logger(null_logger=True)


def test_color_formatter_wraps_by_level():
    formatter = pipeline.CustomColorFormatter()
    record = logging.LogRecord('moore', logging.WARNING, __file__, 1,
                               'watch out', None, None)
    text = formatter.format(record)

    assert text.startswith('\x1b[33;20m')
    assert text.endswith('\x1b[0m')
    assert 'WARNING: watch out' in text


def test_update_log_level():
    pipeline.init_logger(null_logger=True)
    pipeline.update_log_level('WARNING')

    assert logging.getLogger().level == logging.WARNING

    with pytest.raises(ValueError):
        pipeline.update_log_level('LOUD')


def test_remove_comment():
    assert pipeline.remove_comment('3 # the depth') == '3 '
    assert pipeline.remove_comment('json') == 'json'


def test_config_values(tmp_path):
    path = tmp_path / 'run.yml'
    path.write_text('depth: 4\nformat: table # human readable\nseed: abc\n')
    config = pipeline.read_yaml_config(str(path))

    assert pipeline.get_valued_param_from_config(config, 'depth', 'int') == 4
    assert pipeline.get_valued_param_from_config(
        config, 'format', 'str') == 'table'
    assert pipeline.get_valued_param_from_config(
        config, 'samples', 'int', 100) == 100
    assert pipeline.get_valued_param_from_config(
        None, 'samples', 'int', 7) == 7

    with pytest.raises(ParseError):
        pipeline.get_valued_param_from_config(config, 'seed', 'int')

    with pytest.raises(ValueError):
        pipeline.get_valued_param_from_config(config, 'depth', 'float')


def test_missing_config():
    with pytest.raises(ParseError):
        pipeline.read_yaml_config('/nonexistent/run.yml')


def test_misc():
    assert fraction_to_string(3) == '3/1'
    assert string_to_fraction(' 2/4 ') == string_to_fraction('1/2')
    assert [zigzag_integer(i) for i in range(5)] == [0, 1, -1, 2, -2]

    with pytest.raises(ParseError):
        string_to_fraction('1/0')
