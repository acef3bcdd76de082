"""Linear algebra over Z/2^e

ModMatrix holds a system M v = 0 mod 2^e. kernel_basis is the production
solver: bitset elimination for e = 1, Howell form for e >= 2.
lifting_kernel and brute_force_kernel are independent oracles for it.
"""

import itertools

import numpy as np


class ModMatrix(object):
    def __init__(self, entries, modulus, cols=None):
        """A matrix over Z/modulus, modulus a power of 2 (>= 2)

        Arguments
        ---------
        entries : 2d array-like, or an empty list together with `cols`
        modulus : int
        cols : int, only needed when there are no rows
        """
        modulus = int(modulus)
        exponent = modulus.bit_length() - 1
        if modulus < 2 or modulus != 2 ** exponent:
            raise ValueError(f'modulus must be a power of 2, got {modulus}')

        entries = np.asarray(entries, dtype=np.int64)
        if entries.size == 0 and cols is not None:
            entries = entries.reshape(0, cols)
        if entries.ndim != 2:
            raise ValueError(f'expected a 2d matrix, got shape {entries.shape}')

        entries = entries % modulus
        if modulus <= 256:
            entries = entries.astype(np.uint8)
        entries.setflags(write=False)

        self.modulus = modulus
        self.exponent = exponent
        self.entries = entries

    @property
    def rows(self):
        return self.entries.shape[0]

    @property
    def cols(self):
        return self.entries.shape[1]

    def apply(self, v):
        """M v mod modulus; v may be a vector or a stack of row vectors"""
        v = np.asarray(v, dtype=np.int64)
        return (v @ self.entries.astype(np.int64).T) % self.modulus

    def annihilates(self, v):
        return not np.any(self.apply(v))

    def __repr__(self):
        return f'ModMatrix(mod {self.modulus}, {self.rows}x{self.cols})'


## Over Z_2, rows packed into python ints (bit c = column c)
def pack_rows(bits):
    """Pack a 0/1 matrix into a list of ints, one per row"""
    bits = np.asarray(bits, dtype=np.uint8) & 1
    if bits.shape[0] == 0:
        return []
    packed = np.packbits(bits, axis=1, bitorder='little')
    return [int.from_bytes(row.tobytes(), 'little') for row in packed]

def unpack_rows(ints, cols):
    out = np.zeros((len(ints), cols), dtype=np.int64)
    for r, x in enumerate(ints):
        while x:
            low = x & -x
            out[r, low.bit_length() - 1] = 1
            x ^= low
    return out

def _gf2_echelon(rows):
    """Insert rows one by one; returns {pivot column: row}

    A row's pivot is its lowest set bit, and no stored row has a set bit at
    another stored row's pivot below its own.
    """
    basis = {}
    for row in rows:
        while row:
            p = (row & -row).bit_length() - 1
            if p not in basis:
                basis[p] = row
                break
            row ^= basis[p]
    return basis

def gf2_rank(matrix):
    """Rank over Z_2 of a 0/1 matrix (2d array) or of a list of packed rows"""
    if isinstance(matrix, np.ndarray):
        matrix = pack_rows(matrix % 2) if matrix.size else []
    return len(_gf2_echelon(matrix))

def gf2_kernel(rows, cols):
    """Basis of {v : r . v = 0 for every row r}, as packed ints"""
    basis = _gf2_echelon(rows)

    # Back-substitute so every pivot column is set in its own row only
    for p in sorted(basis, reverse=True):
        row = basis[p]
        for q in basis:
            if q != p and (basis[q] >> p) & 1:
                basis[q] ^= row

    kernel = []
    for free in range(cols):
        if free in basis:
            continue
        v = 1 << free
        for p, row in basis.items():
            if (row >> free) & 1:
                v |= 1 << p
        kernel.append(v)
    return kernel


## Over Z/2^e
def _valuation(x, exponent):
    """2-adic valuation of a nonzero residue"""
    return (x & -x).bit_length() - 1 if x else exponent

def _unit_inverse(u, modulus):
    return pow(int(u), -1, modulus)

def howell_form(rows, modulus):
    """Howell form of the row span of `rows` over Z/modulus

    Returns a list of (pivot column, valuation, row) with increasing pivot
    columns. Row i has 2^valuation at its pivot and zeros before it, and
    entries above a pivot are reduced below it. Every element of the span
    whose first c coordinates vanish is a combination of the rows with
    pivot >= c.
    """
    exponent = modulus.bit_length() - 1
    pool = [np.asarray(r, dtype=np.int64) % modulus for r in rows]
    pool = [r for r in pool if r.any()]
    if not pool:
        return []
    cols = len(pool[0])

    pivots = []
    for c in range(cols):
        live = [r for r in pool if r[c]]
        if not live:
            continue

        # Pivot on the entry of least valuation
        vals = [_valuation(int(r[c]), exponent) for r in live]
        best = int(np.argmin(vals))
        v = vals[best]
        p = live[best]
        unit = int(p[c]) >> v
        p = (p * _unit_inverse(unit, modulus)) % modulus

        rest = []
        for r in pool:
            if r is live[best]:
                continue
            if r[c]:
                r = (r - (int(r[c]) >> v) * p) % modulus
            if r.any():
                rest.append(r)

        # 2^(e - v) p vanishes at c but may not elsewhere
        annihilated = (p << (exponent - v)) % modulus
        if annihilated.any():
            rest.append(annihilated)
        pool = rest

        # Reduce the entries above the new pivot
        reduced = []
        for (pc, pv, prow) in pivots:
            q = int(prow[c]) >> v
            if q:
                prow = (prow - q * p) % modulus
            reduced.append((pc, pv, prow))
        pivots = reduced + [(c, v, p)]
    return pivots

def in_row_span(howell, x, modulus):
    """Whether x is in the span of a Howell form"""
    x = np.asarray(x, dtype=np.int64) % modulus
    for (c, v, row) in howell:
        if x[c] % (1 << v):
            return False
        q = int(x[c]) >> v
        if q:
            x = (x - q * row) % modulus
    return not x.any()

def span_size(generators, modulus):
    """Number of elements in the span of the generators"""
    size = 1
    exponent = modulus.bit_length() - 1
    for (_, v, _) in howell_form(generators, modulus):
        size *= 2 ** (exponent - v)
    return size

def _prune(generators, modulus):
    """Drop generators lying in the span of the others"""
    kept = list(generators)
    i = 0
    while i < len(kept):
        others = kept[:i] + kept[i + 1:]
        if others and in_row_span(howell_form(others, modulus), kept[i], modulus):
            kept.pop(i)
        else:
            i += 1
    return kept

def _howell_kernel(entries, modulus):
    s = entries.shape[1]
    h = howell_form(entries, modulus)
    if not h:
        return np.eye(s, dtype=np.int64)

    # Rows of [H^T | I] combine to (H y, y); the kernel is where H y = 0
    ht = np.stack([row for (_, _, row) in h], axis=1)
    aug = np.concatenate([ht, np.eye(s, dtype=np.int64)], axis=1)
    n_left = ht.shape[1]
    gens = [row[n_left:] for (c, _, row) in howell_form(aug, modulus)
        if c >= n_left]
    gens = _prune(gens, modulus)
    if not gens:
        return np.zeros((0, s), dtype=np.int64)
    return np.array(gens, dtype=np.int64)

def kernel_basis(m):
    """Generators of {v : M v = 0 mod 2^e}, none in the span of the others

    Returns : array of shape (n_generators, cols)
    """
    if m.cols == 0:
        return np.zeros((0, 0), dtype=np.int64)
    if m.exponent == 1:
        kernel = gf2_kernel(pack_rows(m.entries), m.cols)
        return unpack_rows(kernel, m.cols)
    return _howell_kernel(m.entries.astype(np.int64), m.modulus)


## Oracles
def _integer_row_reduce(rows, n_left):
    """Unimodular row reduction over Z on the first n_left columns

    Returns the rows whose first n_left entries are zero after the
    reduction, i.e. a Z-basis of the left null combinations.
    """
    rows = [list(r) for r in rows]
    top = 0
    for c in range(n_left):
        while True:
            live = [i for i in range(top, len(rows)) if rows[i][c]]
            if not live:
                break
            i_min = min(live, key=lambda i: abs(rows[i][c]))
            rows[top], rows[i_min] = rows[i_min], rows[top]
            pivot = rows[top]
            done = True
            for i in range(top + 1, len(rows)):
                if rows[i][c]:
                    q = rows[i][c] // pivot[c]
                    rows[i] = [a - q * b for a, b in zip(rows[i], pivot)]
                    if rows[i][c]:
                        done = False
            if done:
                top += 1
                break
    return [r[n_left:] for r in rows[top:]]

def lifting_kernel(m):
    """Kernel generators through an integer lift

    With A+ = (A | mI), A v = 0 mod m iff A+ v+ = 0 over the integers for
    some v+ extending v. An integer basis of ker A+ reduced mod m and cut
    to its first s coordinates generates the kernel mod m.
    """
    s = m.cols
    entries = np.unique(m.entries.astype(np.int64), axis=0)
    entries = [row for row in entries.tolist() if any(row)]
    r = len(entries)
    if r == 0:
        return np.eye(s, dtype=np.int64)

    # Rows of [A+^T | I]: s + r rows of length r + (s + r)
    width = s + r
    aug = []
    for j in range(width):
        left = [entries[i][j] if j < s else (m.modulus if j - s == i else 0)
            for i in range(r)]
        right = [1 if jj == j else 0 for jj in range(width)]
        aug.append(left + right)

    gens = [[x % m.modulus for x in v[:s]] for v in _integer_row_reduce(aug, r)]
    gens = [g for g in gens if any(g)]
    if not gens:
        return np.zeros((0, s), dtype=np.int64)
    return np.array(gens, dtype=np.int64)

def brute_force_kernel(m, max_candidates=2 ** 16):
    """Every kernel vector, by enumeration of all modulus^cols vectors"""
    n_cand = m.modulus ** m.cols
    if n_cand > max_candidates:
        raise ValueError(
            f'{n_cand} candidate vectors exceed the bound {max_candidates}')
    cand = np.array(list(itertools.product(range(m.modulus), repeat=m.cols)),
        dtype=np.int64).reshape(-1, m.cols)
    if m.rows == 0:
        return cand
    return cand[~np.any(m.apply(cand), axis=1)]

def span_elements(generators, modulus, cols):
    """Every element of the span, as a set of tuples (small spans only)"""
    span = {tuple([0] * cols)}
    for g in generators:
        g = np.asarray(g, dtype=np.int64)
        multiples = [tuple((k * g) % modulus) for k in range(modulus)]
        span = {tuple((np.array(a) + np.array(b)) % modulus)
            for a in span for b in multiples}
    return span

def random_span_element(generators, modulus, rng):
    generators = np.asarray(generators, dtype=np.int64)
    if len(generators) == 0:
        return None
    coeffs = rng.integers(0, modulus, size=len(generators))
    return (coeffs @ generators) % modulus
