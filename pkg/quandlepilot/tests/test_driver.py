import pytest

from quandlepilot.search.driver import (RECORD_FIELDS, SearchReport,
    SearchDriver, search)


def _untimed(records):
    """Records without the per-unit timings, which differ between runs"""
    return [{k: v for k, v in r.items() if k != 'seconds'} for r in records]


@pytest.mark.parametrize('k, n_records', [(4, 1), (5, 4)])
def test_small_orders_have_no_witness(k, n_records, params):
    report = search(k, params=params)
    assert report.verdict == 'NO'
    assert len(report.records) == n_records
    assert report.records_with_witness == []
    for record in report.records:
        assert record['nonmedial'] == 'no'
        assert record['generators'] > 0

def test_k4_record(params):
    record = search(4, params=params).records[0]
    assert record['fiber'] == 'Z2^2'
    assert record['base'] == '4_1'
    assert record['unknowns'] == 32
    assert record['witness'] == ''

def test_units_in_search_order(params):
    units = SearchDriver(5, params=params).work_units()
    # (fiber signature, base name) in loop order
    assert [(u[0], u[3]) for u in units] == [
        ((1, 1), '8_1'), ((1, 1), '8_2'),
        ((1, 1, 1), '4_1'), ((1, 1, 1), '4_1')]
    assert [u[1] for u in units] == [0, 0, 0, 1]

def test_parallel_matches_serial(params):
    serial = search(5, params=params)
    parallel = search(5, jobs=2, params=params)
    assert _untimed(parallel.records) == _untimed(serial.records)

def test_bounds(params):
    with pytest.raises(ValueError):
        SearchDriver(3, params=params)
    with pytest.raises(ValueError):
        SearchDriver(8, params=params)
    # k = 7 only runs when asked for explicitly
    with pytest.raises(ValueError):
        SearchDriver(7, params=params)
    assert SearchDriver(7, long_run=True, params=params).k == 7

def test_report_format(tmp_path, params):
    report = search(4, params=params)
    text = report.format()
    lines = text.splitlines()
    assert lines[0] == '# k\t4'
    assert lines[1] == '# order\t16'
    assert lines[2] == '# verdict\tNO'
    assert '# records\t1' in lines
    assert '# library_sizes\t4:1' in lines
    assert lines[8] == '\t'.join(RECORD_FIELDS)
    assert len(lines) == 10
    assert RECORD_FIELDS[-1] == 'seconds'
    elapsed = [l for l in lines if l.startswith('# elapsed_seconds\t')]
    assert len(elapsed) == 1 and float(elapsed[0].split('\t')[1]) >= 0

    path = tmp_path / 'k4.tsv'
    report.write(path)
    assert path.read_text() == text

def test_report_verdict():
    record = {field: '' for field in RECORD_FIELDS}
    record['nonmedial'] = 'yes'
    report = SearchReport(6, [record], {16: 9})
    assert report.verdict == 'YES'
    assert len(report.to_dataframe()) == 1
    assert 'YES' in repr(report)

def test_records_are_timed(params):
    report = search(5, params=params)
    assert report.elapsed > 0
    assert all(r['seconds'] >= 0 for r in report.records)
    df = report.to_dataframe()
    assert df['seconds'].dtype.kind == 'f'
    assert SearchReport(4, [], {}).format().splitlines()[6] == '# elapsed_seconds\t'
