import json
import time
import logging

import pytest

from quandlepilot.shared import load_params, logtools
from quandlepilot.shared.misc import RepeatedTimer


## load_params
def test_defaults_have_every_key():
    params = load_params.load_defaults()
    for key in load_params.REQUIRED_DEFAULTS:
        assert key in params
    assert params['long_run_k'] == 7

def test_missing_key(tmp_path):
    path = tmp_path / 'defaults.json'
    path.write_text(json.dumps({'log_level': 'INFO'}))
    with pytest.raises(IOError):
        load_params.load_defaults(str(path))

def test_bad_json(tmp_path):
    path = tmp_path / 'defaults.json'
    path.write_text('{"k": ')
    with pytest.raises(IOError):
        load_params.simple_json_loader(str(path))
    path.write_text('[1, 2]')
    with pytest.raises(IOError):
        load_params.simple_json_loader(str(path))

@pytest.mark.parametrize('name, k, long_run', [
    ('quick', 5, False), ('desk', 6, False), ('long_run', 7, True)])
def test_search_presets(name, k, long_run):
    params = load_params.load_search_params(name)
    assert params['k'] == k
    assert params['long_run'] is long_run
    assert params['name'] == name
    # merged over the defaults
    assert 'max_library_exponent' in params

def test_missing_preset():
    with pytest.raises(IOError):
        load_params.load_search_params('no_such_preset')


## logtools
def test_get_logger_is_cached():
    a = logtools.get_logger('test_cached', 'DEBUG')
    b = logtools.get_logger('test_cached', logging.WARNING)
    assert a is b
    assert len(a.handlers) == 1
    assert a.level == logging.WARNING

def test_repeats_are_dropped():
    logger = logtools.get_logger('test_repeats', 'INFO', wait_seconds=60)
    records = []
    handler = logging.Handler()
    handler.emit = records.append
    logger.addHandler(handler)
    try:
        logger.info('units done')
        logger.info('units done')
        logger.info('another line')
    finally:
        logger.removeHandler(handler)
    assert [r.getMessage() for r in records] == ['units done', 'another line']

def test_message_cache_is_capped():
    logger = logtools.NonRepetitiveLogger('test_capped', 'INFO', wait_seconds=60, max_cached=10)
    records = []
    handler = logging.Handler()
    handler.emit = records.append
    logger.addHandler(handler)
    for i in range(50):
        logger.info(f'unit {i} done')
    assert len(records) == 50
    assert len(logger._message_cache) <= 10

    # recent lines are still dropped, forgotten ones are logged again
    logger.info('unit 49 done')
    logger.info('unit 0 done')
    assert [r.getMessage() for r in records[50:]] == ['unit 0 done']


## RepeatedTimer
def test_repeated_timer_calls_and_stops():
    calls = []
    timer = RepeatedTimer(0.05, calls.append, 'tick')
    time.sleep(0.3)
    timer.stop()
    n = len(calls)
    assert n >= 2
    assert timer.n_calls == n
    time.sleep(0.15)
    assert len(calls) == n

def test_repeated_timer_not_started():
    calls = []
    timer = RepeatedTimer(0.01, calls.append, 1, start=False)
    time.sleep(0.05)
    assert calls == [] and not timer.is_running
    timer.stop()
