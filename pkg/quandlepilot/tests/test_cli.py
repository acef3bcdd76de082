import pytest

from quandlepilot.algebra.groups import AbelianGroup2
from quandlepilot.algebra.modlinalg import ModMatrix
from quandlepilot.algebra.quandles import MagmaTable, direct_product
from quandlepilot.algebra.onoi import OnoiRing, ALPHA_4, ring_by_name
from quandlepilot.shared import textio
from quandlepilot.search.cocycles import assemble
from quandlepilot.search.start_cli import build_parser, main


@pytest.fixture
def files(tmp_path, q4):
    """Table, psi and ring files in a temporary directory"""
    paths = {
        'q4': tmp_path / 'q4.txt',
        'q16': tmp_path / 'q16.txt',
        'bad': tmp_path / 'bad.txt',
        'psi': tmp_path / 'psi.txt',
        'identity': tmp_path / 'identity.txt',
        'ring': tmp_path / 'dot2.txt',
    }
    textio.write_table(paths['q4'], q4)
    textio.write_table(paths['q16'], direct_product(q4, q4))
    textio.write_table(paths['bad'], MagmaTable([[1, 0], [0, 1]]))
    textio.write_modmatrix(paths['psi'], ModMatrix([[0, 1], [1, 1]], 2))
    textio.write_modmatrix(paths['identity'], ModMatrix([[1, 0], [0, 1]], 2))
    textio.write_onoi_ring(paths['ring'], ring_by_name('dot2'))
    return {k: str(v) for k, v in paths.items()}


def test_parser_requires_command():
    with pytest.raises(SystemExit):
        build_parser().parse_args([])

def test_verify(files, capsys):
    assert main(['verify', files['q4']]) == 0
    out = capsys.readouterr().out
    assert 'quandle: True' in out and 'medial: True' in out

def test_verify_failing_property(files, capsys):
    assert main(['verify', files['bad'], '--property', 'idempotent']) == 1
    assert 'idempotent: False' in capsys.readouterr().out

def test_verify_missing_file(tmp_path):
    assert main(['verify', str(tmp_path / 'nope.txt')]) == 2

def test_construct_extension(files, tmp_path, capsys):
    out = tmp_path / 'q64.txt'
    assert main(['construct', 'extension-64', '--ring', 'dot1', '--out', str(out)]) == 0
    q = textio.read_table(str(out))
    assert q.order == 64
    text = capsys.readouterr().out
    assert 'medial: False' in text

def test_construct_with_ring_file(files, tmp_path):
    out = tmp_path / 'q4.txt'
    assert main(['construct', 'onoi-affine', '--ring', files['ring'], '--out', str(out)]) == 0
    assert textio.read_table(str(out)).order == 4

def test_construct_affine_with_psi(files, tmp_path):
    out = tmp_path / 'aff.txt'
    assert main(['construct', 'affine', '--group', 'Z2^2', '--psi', files['psi'],
        '--out', str(out)]) == 0
    assert textio.read_table(str(out)).order == 4

def test_construct_product(files, tmp_path):
    out = tmp_path / 'prod.txt'
    assert main(['construct', 'product', '--left', files['q4'], '--right', files['q4'],
        '--out', str(out)]) == 0
    assert textio.read_table(str(out)).order == 16

def test_construct_errors(files, tmp_path):
    out = str(tmp_path / 'x.txt')
    assert main(['construct', 'recipe', '--k', '7', '--out', out]) == 2
    assert main(['construct', 'extension-64', '--ring', 'zero', '--out', out]) == 2
    assert main(['construct', 'product', '--left', files['q4'], '--out', out]) == 2

def test_construct_rejects_invalid_ring_file(tmp_path):
    mul = [list(row) for row in ring_by_name('dot1').mul]
    mul[1][3] = 0
    ring = tmp_path / 'broken.txt'
    textio.write_onoi_ring(ring, OnoiRing(mul, ALPHA_4))
    out = tmp_path / 'x.txt'
    for kind in ('extension-64', 'onoi-affine'):
        assert main(['construct', kind, '--ring', str(ring), '--out', str(out)]) == 2
    assert not out.exists()

def test_solve_cocycles(files, tmp_path, capsys, q4, z2_2, psi3):
    out = tmp_path / 'zld.txt'
    assert main(['solve-cocycles', '--quandle', files['q4'], '--group', 'Z2^2',
        '--psi', files['psi'], '--out', str(out)]) == 0
    text = capsys.readouterr().out
    assert 'unknowns\t32' in text
    assert f'rank\t{assemble(q4, z2_2, psi3).rank()}' in text
    assert 'all generators satisfy (M)\tyes' in text
    thetas = textio.read_cocycles(str(out), q4)
    assert len(thetas) > 0
    assert all(th.fiber == AbelianGroup2((1, 1)) for th in thetas)

def test_solve_cocycles_nonmedial(files, tmp_path, capsys):
    out = tmp_path / 'zld.txt'
    assert main(['solve-cocycles', '--quandle', files['q16'], '--group', 'Z2^2',
        '--psi', files['psi'], '--out', str(out)]) == 0
    assert 'all generators satisfy (M)\tno' in capsys.readouterr().out

def test_solve_cocycles_bad_psi(files, tmp_path):
    out = str(tmp_path / 'zld.txt')
    assert main(['solve-cocycles', '--quandle', files['q4'], '--group', 'Z2^2',
        '--psi', files['identity'], '--out', out]) == 2

def test_search(tmp_path, capsys):
    report = tmp_path / 'k4.tsv'
    assert main(['search', '--k', '4', '--report', str(report)]) == 0
    assert 'k=4: NO (0/1 records with a witness)' in capsys.readouterr().out
    assert report.read_text().startswith('# k\t4\n')

def test_search_preset(tmp_path, capsys):
    report = tmp_path / 'quick.tsv'
    assert main(['search', '--preset', 'quick', '--report', str(report)]) == 0
    assert 'k=5: NO (0/4 records with a witness)' in capsys.readouterr().out

def test_search_refuses_long_run(tmp_path):
    assert main(['search', '--k', '7', '--report', str(tmp_path / 'k7.tsv')]) == 2
    assert main(['search', '--preset', 'nope', '--report', str(tmp_path / 'x.tsv')]) == 2

def test_isomorphic(files, tmp_path, capsys):
    assert main(['isomorphic', files['q4'], files['q4']]) == 0
    assert capsys.readouterr().out.startswith('isomorphic')
    assert main(['isomorphic', files['q4'], files['q16']]) == 1
    assert 'not isomorphic' in capsys.readouterr().out

def test_library(capsys):
    assert main(['library', '--order', '8']) == 0
    out = capsys.readouterr().out
    assert out.startswith('# 8: 2 latin quandles')
    assert main(['library', '--order', '2']) == 0
    assert '# 2: 0 latin quandles' in capsys.readouterr().out
