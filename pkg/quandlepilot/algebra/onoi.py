"""Onoi rings and Onoi mappings

An Onoi ring is Z_2^n with a bilinear multiplication and an automorphism
alpha such that alpha^2(a) + alpha(a) + a = 0 and alpha(a) b = a alpha(b).

Elements are ints in [0, 2^n). Bit n-1-i holds coordinate i, so an element
equals its index in AbelianGroup2((1,) * n) and addition is XOR. The basis
vector e_i is 1 << (n - 1 - i). Rings keep full multiplication tables;
mappings keep their values on basis triples and extend trilinearly.
"""

import itertools

import numpy as np

from .groups import AbelianGroup2, EndoMatrix, TooLargeError, automorphisms
from .quandles import MagmaTable, Violation

# Largest dimension for which a full multiplication table is built
MAX_RING_DIM = 12

# Largest source ring for which a full mapping table is cached
MAX_MAPPING_TABLE = 256

# Classification runs over every bilinear multiplication
MAX_CLASSIFY_DIM = 2


## Linear maps on packed elements
def basis_element(dim, i):
    return 1 << (dim - 1 - i)

def linear_table(images, dim):
    """Table of the Z_2-linear map sending e_i to images[i]"""
    table = np.zeros(1, dtype=np.int64)
    for bit in range(dim):
        table = np.concatenate([table, table ^ images[dim - 1 - bit]])
    return table

def bilinear_table(products, dim):
    """Table of the bilinear map with e_i e_j = products[i][j]"""
    rows = [linear_table(products[i], dim) for i in range(dim)]
    table = np.zeros((1, 2 ** dim), dtype=np.int64)
    for bit in range(dim):
        table = np.concatenate([table, table ^ rows[dim - 1 - bit][None, :]])
    return table

def _bits(x, dim):
    """Coordinates i with a set bit in x"""
    return [i for i in range(dim) if (x >> (dim - 1 - i)) & 1]


class OnoiRing(object):
    def __init__(self, mul, alpha, name=''):
        """A ring on Z_2^dim given by full tables

        Arguments
        ---------
        mul : 2^dim x 2^dim array-like, mul[a, b] = a b
        alpha : array-like of length 2^dim
        name : str, for reports
        """
        mul = np.array(mul, dtype=np.int64)
        alpha = np.array(alpha, dtype=np.int64).reshape(-1)
        size = len(alpha)
        dim = size.bit_length() - 1
        if size != 2 ** dim:
            raise ValueError(f'ring size {size} is not a power of 2')
        if dim > MAX_RING_DIM:
            raise TooLargeError(f'dimension {dim} exceeds {MAX_RING_DIM}')
        if mul.shape != (size, size):
            raise ValueError(
                f'multiplication table has shape {mul.shape}, expected ({size}, {size})')
        if mul.size and (mul.min() < 0 or mul.max() >= size or
            alpha.min() < 0 or alpha.max() >= size):
            raise ValueError(f'table entries must lie in [0, {size})')

        dtype = np.uint8 if size <= 256 else np.uint16
        self.mul = mul.astype(dtype)
        self.alpha = alpha.astype(dtype)
        self.mul.setflags(write=False)
        self.alpha.setflags(write=False)
        self.dim = dim
        self.size = size
        self.name = name

    @classmethod
    def from_basis(cls, dim, products, alpha_images, name=''):
        """Build from the products of basis vectors and alpha(e_i)

        Arguments
        ---------
        products : dim x dim nested list, products[i][j] = e_i e_j as ints
        alpha_images : list of int, alpha(e_i)
        """
        if dim == 0:
            return cls([[0]], [0], name=name)
        return cls(bilinear_table(products, dim),
            linear_table(alpha_images, dim), name=name)

    @classmethod
    def from_alpha_matrix(cls, mul, alpha_matrix, name=''):
        """Full multiplication table plus alpha as a Z_2 matrix"""
        alpha_matrix = np.array(alpha_matrix, dtype=np.int64) % 2
        dim = len(alpha_matrix)
        images = [int(sum(int(alpha_matrix[r, i]) << (dim - 1 - r)
            for r in range(dim))) for i in range(dim)]
        alpha = linear_table(images, dim) if dim else [0]
        return cls(mul, alpha, name=name)

    @classmethod
    def zero(cls, dim, name='zero'):
        """The zero Onoi ring with alpha block-diagonal of order 3"""
        if dim % 2:
            raise ValueError(f'an Onoi ring has even dimension, got {dim}')
        images = []
        for block in range(dim // 2):
            i = 2 * block
            e0, e1 = basis_element(dim, i), basis_element(dim, i + 1)
            # alpha(e0) = e0 + e1, alpha(e1) = e0
            images.extend([e0 | e1, e0])
        return cls.from_basis(dim, [[0] * dim for _ in range(dim)], images, name=name)

    def basis(self):
        return [basis_element(self.dim, i) for i in range(self.dim)]

    def alpha_matrix(self):
        """Matrix over Z_2 whose column i is alpha(e_i)"""
        m = np.zeros((self.dim, self.dim), dtype=np.int64)
        for i, e in enumerate(self.basis()):
            for r in _bits(int(self.alpha[e]), self.dim):
                m[r, i] = 1
        return m

    def additive_group(self):
        return AbelianGroup2((1,) * self.dim)

    def alpha_endo(self):
        return EndoMatrix(self.additive_group(), self.alpha_matrix())

    def products(self):
        """Basis products e_i e_j as a nested list of ints"""
        b = self.basis()
        return [[int(self.mul[x, y]) for y in b] for x in b]

    def __eq__(self, other):
        return (isinstance(other, OnoiRing) and np.array_equal(self.mul, other.mul)
            and np.array_equal(self.alpha, other.alpha))

    def __hash__(self):
        return hash((self.mul.tobytes(), self.alpha.tobytes()))

    def __repr__(self):
        return f'OnoiRing(dim={self.dim}{", " + self.name if self.name else ""})'


def validate_onoi_ring(o):
    """None if o is an Onoi ring, else the first failing axiom"""
    mul = o.mul.astype(np.int64)
    alpha = o.alpha.astype(np.int64)
    n = o.size
    a = np.arange(n)
    grid_b, grid_c = np.meshgrid(a, a, indexing='ij')

    for x in range(n):
        # x(b + c) = xb + xc
        row = mul[x]
        bad = np.argwhere(row[grid_b ^ grid_c] != row[grid_b] ^ row[grid_c])
        if len(bad):
            return Violation('left_distributive', (x, *bad[0]))
    for x in range(n):
        col = mul[:, x]
        bad = np.argwhere(col[grid_b ^ grid_c] != col[grid_b] ^ col[grid_c])
        if len(bad):
            b, c = bad[0]
            return Violation('right_distributive', (b, c, x))

    bad = np.argwhere(alpha[grid_b ^ grid_c] != alpha[grid_b] ^ alpha[grid_c])
    if len(bad):
        return Violation('alpha_additive', bad[0])
    if len(np.unique(alpha)) != n:
        return Violation('alpha_bijective', (int(np.argmax(np.bincount(alpha))),))
    bad = np.argwhere(alpha[mul] != mul[alpha[:, None], alpha[None, :]])
    if len(bad):
        return Violation('alpha_multiplicative', bad[0])
    bad = np.flatnonzero(alpha[alpha] ^ alpha ^ a)
    if len(bad):
        return Violation('alpha_cubic', (bad[0],),
            'alpha^2(a) + alpha(a) + a != 0')
    bad = np.argwhere(mul[alpha[:, None], a[None, :]] != mul[a[:, None], alpha[None, :]])
    if len(bad):
        return Violation('alpha_balanced', bad[0], 'alpha(a) b != a alpha(b)')
    return None


## The four rings on four elements
# alpha = (1 2 3); with XOR as addition 1 + 2 = 3 as required
ALPHA_4 = (0, 2, 3, 1)

TABLES_4 = {
    'zero': ((0, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0), (0, 0, 0, 0)),
    'dot1': ((0, 0, 0, 0), (0, 1, 3, 2), (0, 3, 2, 1), (0, 2, 1, 3)),
    'dot2': ((0, 0, 0, 0), (0, 3, 2, 1), (0, 2, 1, 3), (0, 1, 3, 2)),
    'dot3': ((0, 0, 0, 0), (0, 2, 1, 3), (0, 1, 3, 2), (0, 3, 2, 1)),
}

def four_element_rings():
    """The zero ring and the rings dot1, dot2, dot3, in that order"""
    return [OnoiRing(table, ALPHA_4, name=name) for name, table in TABLES_4.items()]

def ring_by_name(name):
    for o in four_element_rings():
        if o.name == name:
            return o
    raise ValueError(f'no four-element ring named "{name}"; use one of {list(TABLES_4)}')


## Classification
def _linear_bijections(dim):
    """Every invertible linear map of Z_2^dim as an element table"""
    g = AbelianGroup2((1,) * dim)
    return [m.permutation() for m in automorphisms(g)]

def ring_isomorphism(o1, o2, preserve_alpha=True):
    """A linear bijection f with f(ab) = f(a)f(b), or None

    With preserve_alpha, f must also commute with alpha.
    """
    if o1.dim != o2.dim:
        return None
    mul1, mul2 = o1.mul.astype(np.int64), o2.mul.astype(np.int64)
    for f in _linear_bijections(o1.dim):
        if preserve_alpha and not np.array_equal(f[o1.alpha], o2.alpha[f]):
            continue
        if np.array_equal(f[mul1], mul2[f[:, None], f[None, :]]):
            return f
    return None

def _all_rings(dim):
    """Every Onoi multiplication for the canonical alpha of Z_2^dim"""
    alpha = OnoiRing.zero(dim).alpha
    size = 2 ** dim
    found = []
    for flat in itertools.product(range(size), repeat=dim * dim):
        products = [list(flat[i * dim:(i + 1) * dim]) for i in range(dim)]
        o = OnoiRing(bilinear_table(products, dim), alpha)
        if validate_onoi_ring(o) is None:
            found.append(o)
    return found

def _dedupe(rings, preserve_alpha):
    reps = []
    for o in rings:
        if not any(ring_isomorphism(r, o, preserve_alpha) is not None for r in reps):
            reps.append(o)
    return reps

def classify_onoi_rings(dim, preserve_alpha=True):
    """All Onoi rings on Z_2^dim up to isomorphism, dim <= 2

    alpha is fixed to the canonical order-3 map; two rings are identified
    by an isomorphism commuting with alpha (or any ring isomorphism when
    preserve_alpha is False). A representative equal to one of
    four_element_rings() is named after it.
    """
    if dim < 0 or dim > MAX_CLASSIFY_DIM:
        raise ValueError(f'classification supports dim <= {MAX_CLASSIFY_DIM}, got {dim}')
    if dim == 0:
        return [OnoiRing.from_basis(0, [], [], name='zero')]
    if dim % 2:
        return []

    reps = _dedupe(_all_rings(dim), preserve_alpha)
    if dim == 2:
        named = {o: o.name for o in four_element_rings()}
        for o in reps:
            o.name = named.get(o, '')
    return reps

def onoi_ring_isomorphism_counts(dim):
    """Number of classes under alpha-commuting and under plain isomorphisms"""
    rings = classify_onoi_rings(dim)
    return {
        'alpha': len(rings),
        'ring': len(_dedupe(rings, preserve_alpha=False)),
    }


## Constructions
def power_sigma(o, k, sigma):
    """O^sigma: componentwise + and alpha, (a b)_i = a_sigma(i) b_i

    Arguments
    ---------
    o : OnoiRing
    k : int, number of factors
    sigma : sequence of length k, sigma[i - 1] = sigma(i), values in 1..k

    Component 1 occupies the most significant bits.
    """
    sigma = tuple(int(s) for s in sigma)
    if sorted(sigma) != list(range(1, k + 1)):
        raise ValueError(f'sigma {sigma} is not a permutation of 1..{k}')
    d = o.dim
    dim = k * d
    if dim > MAX_RING_DIM:
        raise TooLargeError(f'O^sigma would have dimension {dim} > {MAX_RING_DIM}')

    base = o.products()
    products = [[0] * dim for _ in range(dim)]
    for comp_a in range(k):
        for comp_b in range(k):
            # e in component comp_a times f in component comp_b lands in
            # component comp_b when sigma(comp_b) = comp_a
            if sigma[comp_b] - 1 != comp_a:
                continue
            for p in range(d):
                for q in range(d):
                    products[comp_a * d + p][comp_b * d + q] = (
                        base[p][q] << (d * (k - 1 - comp_b)))

    alpha_images = []
    for comp in range(k):
        for p in range(d):
            alpha_images.append(
                int(o.alpha[basis_element(d, p)]) << (d * (k - 1 - comp)))

    name = f'{o.name}^{"".join(map(str, sigma))}' if o.name else ''
    return OnoiRing.from_basis(dim, products, alpha_images, name=name)

def direct_power(o, k):
    return power_sigma(o, k, tuple(range(1, k + 1)))

def matrix_ring(o, n, sigma=None):
    """M_n^sigma(O): (a b)_ij = sum_k a_sigma(i,k) b_kj, alpha entrywise

    Arguments
    ---------
    o : OnoiRing
    n : int
    sigma : dict mapping (i, k) to (i', k'), 1-based, or None for identity

    Entry (1, 1) occupies the most significant bits, then row-major.
    """
    cells = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    if sigma is None:
        sigma = {c: c for c in cells}
    sigma = {tuple(k): tuple(v) for k, v in sigma.items()}
    if sorted(sigma) != cells or sorted(sigma.values()) != cells:
        raise ValueError(f'sigma must permute the {n}x{n} index pairs')

    d = o.dim
    dim = n * n * d
    if dim > MAX_RING_DIM:
        raise TooLargeError(f'M_n(O) would have dimension {dim} > {MAX_RING_DIM}')

    def slot(i, j):
        return (i - 1) * n + (j - 1)

    def shift(i, j):
        return d * (n * n - 1 - slot(i, j))

    base = o.products()
    products = [[0] * dim for _ in range(dim)]
    for (r, s) in cells:
        for (kk, j) in cells:
            for i in range(1, n + 1):
                if sigma[(i, kk)] != (r, s):
                    continue
                for p in range(d):
                    for q in range(d):
                        products[slot(r, s) * d + p][slot(kk, j) * d + q] ^= (
                            base[p][q] << shift(i, j))

    alpha_images = []
    for (i, j) in cells:
        for p in range(d):
            alpha_images.append(int(o.alpha[basis_element(d, p)]) << shift(i, j))

    return OnoiRing.from_basis(dim, products, alpha_images,
        name=f'M{n}({o.name})' if o.name else '')


## Onoi mappings
class OnoiMapping(object):
    def __init__(self, source, target, basis_values, function=None, name=''):
        """A trilinear map source^3 -> target

        Arguments
        ---------
        basis_values : array (n1, n1, n1), mu(e_i, e_j, e_k) as target ints
        function : the callable it was sampled from, if any; the validator
            checks it against the trilinear extension
        """
        n1 = source.dim
        values = np.array(basis_values, dtype=np.int64).reshape(n1, n1, n1)
        if values.size and (values.min() < 0 or values.max() >= target.size):
            raise ValueError('values must be elements of the target ring')
        values.setflags(write=False)
        self.source = source
        self.target = target
        self.values = values
        self.function = function
        self.name = name
        self._table = None

    @classmethod
    def from_function(cls, source, target, function, name=''):
        b = source.basis()
        values = [[[int(function(x, y, z)) for z in b] for y in b] for x in b]
        if source.dim == 0:
            values = np.zeros((0, 0, 0), dtype=np.int64)
        return cls(source, target, values, function=function, name=name)

    def slice(self, a):
        """Table of the bilinear map (b, c) -> mu(a, b, c)"""
        n1 = self.source.dim
        if n1 == 0:
            return np.zeros((1, 1), dtype=np.int64)
        contracted = np.zeros((n1, n1), dtype=np.int64)
        for i in _bits(int(a), n1):
            contracted ^= self.values[i]
        return bilinear_table(contracted.tolist(), n1)

    def table(self):
        """Full table mu[a, b, c]; only for sources of <= 256 elements"""
        if self._table is None:
            if self.source.size > MAX_MAPPING_TABLE:
                raise TooLargeError(
                    f'full table of a mapping on {self.source.size} elements')
            rows = [self.slice(basis_element(self.source.dim, i))
                for i in range(self.source.dim)]
            table = np.zeros((1, self.source.size, self.source.size), dtype=np.int64)
            for bit in range(self.source.dim):
                table = np.concatenate(
                    [table, table ^ rows[self.source.dim - 1 - bit][None]])
            table.setflags(write=False)
            self._table = table
        return self._table

    def __call__(self, a, b, c):
        result = 0
        n1 = self.source.dim
        for i in _bits(int(a), n1):
            for j in _bits(int(b), n1):
                for k in _bits(int(c), n1):
                    result ^= int(self.values[i, j, k])
        return result

    def __repr__(self):
        return f'OnoiMapping({self.source!r} -> {self.target!r}{", " + self.name if self.name else ""})'


def canonical_mapping(o):
    """mu(a, b, c) = a(bc), an Onoi mapping O^3 -> O"""
    mul = o.mul
    return OnoiMapping.from_function(o, o,
        lambda a, b, c: mul[a, mul[b, c]], name='canonical')

def split_mapping(o):
    """mu((a,b), (c,d), (u,v)) = b(du), an Onoi mapping from O^2 to O"""
    square = direct_power(o, 2)
    n = o.size
    mul = o.mul

    def mu(x, y, z):
        b, d, u = x % n, y % n, z // n
        return mul[b, mul[d, u]]

    return OnoiMapping.from_function(square, o, mu, name='split')

def validate_onoi_mapping(m, n_samples=4096, seed=0):
    """None if m is an Onoi mapping, else the first failing condition

    Trilinearity of the sampled function is checked on every triple when
    |O1|^3 <= n_samples, otherwise on n_samples random triples. OM1 to OM3
    are trilinear in (a, b, c), so basis triples decide them.
    """
    src, tgt = m.source, m.target
    if m.function is not None:
        size = src.size
        if size ** 3 <= n_samples:
            triples = itertools.product(range(size), repeat=3)
        else:
            rng = np.random.default_rng(seed)
            triples = rng.integers(0, size, size=(n_samples, 3)).tolist()
        for (a, b, c) in triples:
            if int(m.function(a, b, c)) != m(a, b, c):
                return Violation('trilinear', (a, b, c))

    a1, a2 = src.alpha, tgt.alpha
    for (a, b, c) in itertools.product(src.basis(), repeat=3):
        if m(a1[a], a1[b], a1[c]) != a2[m(a, b, c)]:
            return Violation('OM1', (a, b, c), 'mu(alpha a, alpha b, alpha c) != alpha mu(a, b, c)')
        if m(a1[a], b, c) != m(a, a1[b], a1[c]):
            return Violation('OM2', (a, b, c), 'mu(alpha a, b, c) != mu(a, alpha b, alpha c)')
        if m(a, a1[b], c) != m(a, b, a1[c]):
            return Violation('OM3', (a, b, c), 'mu(a, alpha b, c) != mu(a, b, alpha c)')
    return None

def diagonal_table(m):
    """D[a, b] = mu(a, b, b)"""
    return np.stack([np.diag(m.slice(a)) for a in range(m.source.size)])

def check_mu_identities(m):
    """The failures of mu(a,b,b) = mu(b,a,a) and mu(a,b,c) = mu(a,c,b)

    Returns : list of Violation, empty when both hold. The first identity
    is scanned over all pairs; the second is trilinear and is scanned over
    basis triples.
    """
    violations = []
    diag = diagonal_table(m)
    bad = np.argwhere(diag != diag.T)
    if len(bad):
        violations.append(Violation('mu1', bad[0], 'mu(a, b, b) != mu(b, a, a)'))

    basis = m.source.basis()
    swapped = np.swapaxes(m.values, 1, 2)
    bad = np.argwhere(m.values != swapped)
    if len(bad):
        i, j, k = bad[0]
        violations.append(Violation('mu2', (basis[i], basis[j], basis[k]),
            'mu(a, b, c) != mu(a, c, b)'))
    return violations

def find_cube_nonzero(o):
    """Least e with e(ee) != 0, or None"""
    mul = o.mul.astype(np.int64)
    e = np.arange(o.size)
    hits = np.flatnonzero(mul[e, mul[e, e]])
    return int(hits[0]) if len(hits) else None

def aff_of_onoi(o):
    """Aff(O): a * b = alpha^2(a) + alpha(b)"""
    alpha = o.alpha.astype(np.int64)
    return MagmaTable(alpha[alpha][:, None] ^ alpha[None, :])
