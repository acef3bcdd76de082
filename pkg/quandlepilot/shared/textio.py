"""Plain-text readers and writers

Every format is whitespace-separated integers. Lines starting with '#' are
comments and blank lines are ignored, except in files holding several
cocycles, where a blank line separates blocks.

Quandle table
    line 1 : n
    then n lines of n integers in [0, n)

Modular matrix
    line 1 : mod 2^e rows cols
    then `rows` lines of `cols` integers

Onoi ring
    line 1 : dim n
    then n lines of the alpha matrix over Z_2 (column j is alpha(e_j))
    then 2^n lines of 2^n integers, the multiplication table

Cocycle
    line 1 : base order q
    line 2 : the fiber exponents, e.g. "1 1" for Z2^2, or "-" if trivial
    then q^2 lines of fiber coordinates, pair (a, b) on line a*q + b
"""

import numpy as np

from ..algebra.groups import AbelianGroup2
from ..algebra.modlinalg import ModMatrix
from ..algebra.quandles import MagmaTable
from ..algebra.onoi import OnoiRing
from ..algebra.extensions import Cocycle


## Helpers
def _content_lines(text):
    """Yield (line number, stripped line) for non-comment, non-blank lines"""
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        yield lineno, line

def _ints(line, lineno, source):
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise IOError(f'{source}, line {lineno}: expected integers, got "{line}"')

def _read(path):
    try:
        with open(path, 'r') as fi:
            return fi.read()
    except FileNotFoundError:
        raise IOError(f'no such file: {path}')

def _write(path, text):
    with open(path, 'w') as fi:
        fi.write(text)

def _int_rows(arr):
    return '\n'.join(' '.join(str(int(v)) for v in row) for row in arr)


## Quandle tables
def format_table(q):
    return f'{q.order}\n' + _int_rows(q.table) + '\n'

def parse_table(text, source='<string>'):
    lines = list(_content_lines(text))
    if not lines:
        raise IOError(f'{source}: empty quandle table')

    lineno, head = lines[0]
    head = _ints(head, lineno, source)
    if len(head) != 1 or head[0] < 1:
        raise IOError(f'{source}, line {lineno}: expected the order n >= 1')
    n = head[0]

    if len(lines) != n + 1:
        raise IOError(
            f'{source}: expected {n} table rows, found {len(lines) - 1}')

    rows = []
    for lineno, line in lines[1:]:
        row = _ints(line, lineno, source)
        if len(row) != n:
            raise IOError(
                f'{source}, line {lineno}: expected {n} entries, got {len(row)}')
        rows.append(row)

    try:
        return MagmaTable(rows)
    except ValueError as e:
        raise IOError(f'{source}: {e}')

def write_table(path, q):
    _write(path, format_table(q))

def read_table(path):
    return parse_table(_read(path), source=path)


## Modular matrices
def format_modmatrix(m):
    lines = [f'mod 2^{m.exponent} {m.rows} {m.cols}']
    if m.rows:
        lines.append(_int_rows(m.entries))
    return '\n'.join(lines) + '\n'

def parse_modmatrix(text, source='<string>'):
    lines = list(_content_lines(text))
    if not lines:
        raise IOError(f'{source}: empty matrix file')

    lineno, head = lines[0]
    toks = head.split()
    if len(toks) != 4 or toks[0] != 'mod' or not toks[1].startswith('2^'):
        raise IOError(
            f'{source}, line {lineno}: expected "mod 2^e rows cols", got "{head}"')
    try:
        exponent, rows, cols = int(toks[1][2:]), int(toks[2]), int(toks[3])
    except ValueError:
        raise IOError(f'{source}, line {lineno}: bad header "{head}"')

    # Entries may wrap over lines; they are read row-major
    values = []
    for lineno, line in lines[1:]:
        values.extend(_ints(line, lineno, source))
    if len(values) != rows * cols:
        raise IOError(
            f'{source}: expected {rows * cols} entries, found {len(values)}')

    try:
        return ModMatrix(
            np.array(values, dtype=np.int64).reshape(rows, cols), 
            2 ** exponent)
    except ValueError as e:
        raise IOError(f'{source}: {e}')

def write_modmatrix(path, m):
    _write(path, format_modmatrix(m))

def read_modmatrix(path):
    return parse_modmatrix(_read(path), source=path)


## Onoi rings
def format_onoi_ring(o):
    lines = [f'dim {o.dim}']
    if o.dim:
        lines.append(_int_rows(o.alpha_matrix()))
    lines.append(_int_rows(o.mul))
    return '\n'.join(lines) + '\n'

def parse_onoi_ring(text, source='<string>'):
    lines = list(_content_lines(text))
    if not lines:
        raise IOError(f'{source}: empty ring file')

    lineno, head = lines[0]
    toks = head.split()
    if len(toks) != 2 or toks[0] != 'dim':
        raise IOError(f'{source}, line {lineno}: expected "dim n", got "{head}"')
    dim = _ints(toks[1], lineno, source)[0]
    size = 2 ** dim

    if len(lines) != 1 + dim + size:
        raise IOError(
            f'{source}: expected {dim} alpha rows and {size} table rows, '
            f'found {len(lines) - 1} lines')

    alpha_rows = [_ints(line, lineno, source) for lineno, line in lines[1:1 + dim]]
    mul_rows = [_ints(line, lineno, source) for lineno, line in lines[1 + dim:]]
    if any(len(row) != dim for row in alpha_rows):
        raise IOError(f'{source}: alpha matrix must be {dim}x{dim}')
    if any(len(row) != size for row in mul_rows):
        raise IOError(f'{source}: multiplication table must be {size}x{size}')

    try:
        return OnoiRing.from_alpha_matrix(mul_rows, alpha_rows)
    except ValueError as e:
        raise IOError(f'{source}: {e}')

def write_onoi_ring(path, o):
    _write(path, format_onoi_ring(o))

def read_onoi_ring(path):
    return parse_onoi_ring(_read(path), source=path)


## Cocycles
def format_cocycle(theta):
    q = theta.base.order
    sig = ' '.join(str(k) for k in theta.fiber.signature) or '-'
    lines = [str(q), sig]
    if theta.fiber.dim:
        lines.append(_int_rows(theta.values.reshape(q * q, theta.fiber.dim)))
    return '\n'.join(lines) + '\n'

def parse_cocycle(text, base, source='<string>'):
    """Parse one cocycle block over the quandle table `base`"""
    lines = list(_content_lines(text))
    if len(lines) < 2:
        raise IOError(f'{source}: cocycle needs a base order and a signature')

    lineno, head = lines[0]
    q = _ints(head, lineno, source)
    if len(q) != 1 or q[0] != base.order:
        raise IOError(
            f'{source}, line {lineno}: base order {head} does not match the '
            f'quandle of order {base.order}')
    q = q[0]

    lineno, sig = lines[1]
    signature = () if sig == '-' else tuple(_ints(sig, lineno, source))
    try:
        fiber = AbelianGroup2(signature)
    except ValueError as e:
        raise IOError(f'{source}, line {lineno}: {e}')

    coords = [_ints(line, lineno, source) for lineno, line in lines[2:]]
    if fiber.dim == 0:
        values = np.zeros((q, q, 0), dtype=np.int64)
    else:
        if len(coords) != q * q or any(len(c) != fiber.dim for c in coords):
            raise IOError(
                f'{source}: expected {q * q} lines of {fiber.dim} coordinates')
        values = np.array(coords, dtype=np.int64).reshape(q, q, fiber.dim)

    try:
        return Cocycle(base, fiber, values)
    except ValueError as e:
        raise IOError(f'{source}: {e}')

def format_cocycles(thetas, header=()):
    """Several cocycles, '#' header lines first, blocks split by blank lines"""
    parts = [''.join(f'# {line}\n' for line in header)]
    parts.append('\n'.join(format_cocycle(theta) for theta in thetas))
    return ''.join(parts)

def write_cocycles(path, thetas, header=()):
    _write(path, format_cocycles(thetas, header))

def read_cocycles(path, base):
    text = _read(path)
    blocks, current = [], []
    for line in text.splitlines():
        if line.strip().startswith('#'):
            continue
        if not line.strip():
            if current:
                blocks.append('\n'.join(current))
                current = []
            continue
        current.append(line)
    if current:
        blocks.append('\n'.join(current))
    return [parse_cocycle(block, base, source=path) for block in blocks]
