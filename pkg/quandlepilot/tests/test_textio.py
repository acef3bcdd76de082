import numpy as np
import pytest

from quandlepilot.algebra.groups import AbelianGroup2
from quandlepilot.algebra.modlinalg import ModMatrix
from quandlepilot.algebra.onoi import ring_by_name
from quandlepilot.algebra.extensions import Cocycle
from quandlepilot.shared import textio


## Tables
def test_parse_table_with_comments():
    text = '# the order-3 quandle\n3\n\n0 2 1\n2 1 0\n1 0 2\n'
    q = textio.parse_table(text)
    assert q.order == 3
    assert q.table.tolist() == [[0, 2, 1], [2, 1, 0], [1, 0, 2]]

@pytest.mark.parametrize('text', [
    '',
    '2\n0 1\n',
    '2\n0 1\n1\n',
    '2\n0 x\n1 0\n',
    '2\n0 2\n1 0\n',
    '0\n',
])
def test_parse_table_errors(text):
    with pytest.raises(IOError):
        textio.parse_table(text)

def test_table_file(tmp_path, q4):
    path = str(tmp_path / 'q4.txt')
    textio.write_table(path, q4)
    assert textio.read_table(path) == q4
    with pytest.raises(IOError):
        textio.read_table(str(tmp_path / 'missing.txt'))


## Matrices
def test_modmatrix_format():
    m = ModMatrix([[1, 2], [3, 0]], 4)
    assert textio.format_modmatrix(m) == 'mod 2^2 2 2\n1 2\n3 0\n'

def test_modmatrix_entries_may_wrap():
    m = textio.parse_modmatrix('mod 2^3 2 3\n1 2 3 4\n5 6\n')
    assert m.modulus == 8
    assert m.entries.tolist() == [[1, 2, 3], [4, 5, 6]]

@pytest.mark.parametrize('text', [
    '', 'mod 4 1 1\n1\n', 'mod 2^2 1 2\n1\n', 'mod 2^a 1 1\n1\n'])
def test_modmatrix_errors(text):
    with pytest.raises(IOError):
        textio.parse_modmatrix(text)


## Onoi rings
def test_onoi_ring_file(tmp_path):
    o = ring_by_name('dot3')
    text = textio.format_onoi_ring(o)
    assert text.startswith('dim 2\n')
    path = str(tmp_path / 'dot3.txt')
    textio.write_onoi_ring(path, o)
    assert textio.read_onoi_ring(path) == o

def test_onoi_ring_errors():
    with pytest.raises(IOError):
        textio.parse_onoi_ring('dim 2\n0 1\n1 1\n')
    with pytest.raises(IOError):
        textio.parse_onoi_ring('dimension 2\n')


## Cocycles
def test_cocycles_file(tmp_path, q4, z2_2):
    rng = np.random.default_rng(2)
    thetas = [Cocycle(q4, z2_2, rng.integers(0, 2, size=(4, 4, 2))) for _ in range(3)]
    path = str(tmp_path / 'zld.txt')
    textio.write_cocycles(path, thetas, header=['generators\t3'])
    with open(path) as fi:
        assert fi.readline() == '# generators\t3\n'
    assert textio.read_cocycles(path, q4) == thetas

def test_cocycle_trivial_fiber(q4):
    g = AbelianGroup2(())
    text = textio.format_cocycle(Cocycle.zero(q4, g))
    assert text == '4\n-\n'
    assert textio.parse_cocycle(text, q4).fiber == g

def test_cocycle_errors(q4):
    with pytest.raises(IOError):
        textio.parse_cocycle('3\n1 1\n', q4)
    with pytest.raises(IOError):
        textio.parse_cocycle('4\n1 1\n0 0\n', q4)
    with pytest.raises(IOError):
        textio.parse_cocycle('4\n1 2\n', q4)
