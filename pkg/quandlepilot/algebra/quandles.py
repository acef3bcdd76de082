"""Finite binary operation tables and the quandle predicates

A MagmaTable is an n x n array with x * y at table[x, y]. Predicates scan
exhaustively, vectorized over the inner indices. Failed identities come
back as a Violation holding the lexicographically first witness.
"""

import numpy as np

from .groups import is_admissible

# Largest number of table entries compared in one vectorized block
_BLOCK = 2 ** 22


class Violation(object):
    """An identity that fails, with the first witness found"""
    def __init__(self, axiom, witness, detail=''):
        self.axiom = axiom
        self.witness = tuple(int(w) for w in witness)
        self.detail = detail

    def __eq__(self, other):
        return (isinstance(other, Violation) and self.axiom == other.axiom
            and self.witness == other.witness)

    def __hash__(self):
        return hash((self.axiom, self.witness))

    def __repr__(self):
        extra = f', {self.detail}' if self.detail else ''
        return f'Violation({self.axiom}, {self.witness}{extra})'


class MedialityWitness(Violation):
    """A quadruple (a, b, c, d) with (a*b)*(c*d) != (a*c)*(b*d)"""
    def __init__(self, a, b, c, d):
        super().__init__('medial', (a, b, c, d))

    def holds_in(self, q):
        """Re-evaluate against a table: True if the inequality is reproduced"""
        a, b, c, d = self.witness
        t = q.table
        return t[t[a, b], t[c, d]] != t[t[a, c], t[b, d]]


class MagmaTable(object):
    def __init__(self, table):
        """An order-n binary operation, immutable once built

        Arguments
        ---------
        table : n x n array-like of ints in [0, n)
        """
        table = np.array(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] < 1:
            raise ValueError(f'expected a square n x n table, got shape {table.shape}')
        n = table.shape[0]
        if table.min() < 0 or table.max() >= n:
            raise ValueError(f'table entries must lie in [0, {n})')

        dtype = np.int16 if n <= 2 ** 15 else np.int32
        self.table = table.astype(dtype)
        self.table.setflags(write=False)
        self.order = n
        self._cache = {}

    def __eq__(self, other):
        return isinstance(other, MagmaTable) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        return f'MagmaTable(order={self.order})'

    def cached(self, name, compute):
        """Memoize a predicate result on this (immutable) table"""
        if name not in self._cache:
            self._cache[name] = compute(self)
        return self._cache[name]


## Predicates
def _rows_are_permutations(t):
    n = t.shape[0]
    return bool(np.all(np.sort(t, axis=1) == np.arange(n)))

def is_latin(q):
    """Every row and every column is a permutation"""
    return q.cached('latin', lambda q:
        _rows_are_permutations(q.table) and _rows_are_permutations(q.table.T))

def idempotency_violation(q):
    bad = np.flatnonzero(np.diag(q.table) != np.arange(q.order))
    if len(bad):
        return Violation('idempotent', (bad[0],))
    return None

def is_idempotent(q):
    return idempotency_violation(q) is None

def left_distributivity_violation(q):
    """First (x, y, z) with x*(y*z) != (x*y)*(x*z), or None"""
    def scan(q):
        t = q.table
        for x in range(q.order):
            row = t[x]
            lhs = row[t]
            rhs = t[row[:, None], row[None, :]]
            bad = np.argwhere(lhs != rhs)
            if len(bad):
                return Violation('left_distributive', (x, bad[0][0], bad[0][1]))
        return None
    return q.cached('ld', scan)

def is_left_distributive(q):
    return left_distributivity_violation(q) is None

def quandle_violation(q):
    """First failing quandle axiom, or None"""
    v = idempotency_violation(q)
    if v is not None:
        return v
    if not _rows_are_permutations(q.table):
        row = int(np.flatnonzero(
            np.any(np.sort(q.table, axis=1) != np.arange(q.order), axis=1))[0])
        return Violation('left_translation', (row,))
    return left_distributivity_violation(q)

def is_quandle(q):
    """Idempotent, left distributive, left translations bijective"""
    return quandle_violation(q) is None

def find_medial_witness(q, first=None):
    """First (a, b, c, d) breaking mediality, a scanned over `first`

    Arguments
    ---------
    q : MagmaTable
    first : iterable of int or None
        The values of a to scan, in order. None scans them all. For a
        latin quandle a = 0 suffices, since the left translations are
        automorphisms acting transitively.

    Returns : MedialityWitness or None
    """
    t = q.table.astype(np.int64)
    n = q.order
    if first is None:
        first = range(n)
    block = max(1, _BLOCK // (n * n))
    for a in first:
        row = t[a]
        for b0 in range(0, n, block):
            bs = np.arange(b0, min(b0 + block, n))
            # lhs[b, c, d] = (a*b)*(c*d), rhs[b, c, d] = (a*c)*(b*d)
            lhs = t[row[bs][:, None, None], t[None, :, :]]
            rhs = t[row[None, :, None], t[bs][:, None, :]]
            bad = np.argwhere(lhs != rhs)
            if len(bad):
                b, c, d = bad[0]
                return MedialityWitness(a, bs[b], c, d)
    return None

def is_medial(q):
    """True, or the lexicographically first MedialityWitness

    For latin quandles this decides affineness.
    """
    w = q.cached('medial', find_medial_witness)
    return True if w is None else w

def is_homomorphism(p, q, f):
    """Whether f (array, p-index -> q-index) respects the operations"""
    f = np.asarray(f, dtype=np.int64)
    return bool(np.array_equal(f[p.table], q.table[f[:, None], f[None, :]]))


## Constructions
def affine_quandle(g, psi):
    """Aff(A, psi): x * y = (1 - psi)(x) + psi(y), elements in index order"""
    if psi.group != g:
        raise ValueError(f'psi is over {psi.group}, not {g}')
    if not is_admissible(psi):
        raise ValueError(f'{psi!r} is not admissible: psi and 1 - psi must be bijective')
    elems = g.elements()
    px = psi.one_minus().apply_coords(elems)
    py = psi.apply_coords(elems)
    return MagmaTable(g.index_of(px[:, None, :] + py[None, :, :]))

def direct_product(p, q):
    """(a, s) * (b, t) = (a*b, s*t), with (a, s) at index a*|q| + s"""
    m = q.order
    t = (p.table.astype(np.int64)[:, None, :, None] * m +
        q.table.astype(np.int64)[None, :, None, :])
    return MagmaTable(t.reshape(p.order * m, p.order * m))


## Isomorphism
def _cycle_type(perm):
    n = len(perm)
    seen = np.zeros(n, dtype=bool)
    lengths = []
    for start in range(n):
        if seen[start]:
            continue
        length, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths))

def _translation_type(row):
    """Cycle type of a translation, or its image size if not a bijection"""
    if len(np.unique(row)) == len(row):
        return _cycle_type(row)
    return ('image', len(np.unique(row)))

def element_invariants(q):
    """Per-element isomorphism invariants: idempotence and translation types"""
    def compute(q):
        t = q.table
        return [(bool(t[x, x] == x), _translation_type(t[x]), _translation_type(t[:, x]))
            for x in range(q.order)]
    return q.cached('invariants', compute)

def fingerprint(q):
    """Isomorphism-invariant text: the multiset of translation cycle types"""
    counts = {}
    for (_, left, right) in element_invariants(q):
        counts[(left, right)] = counts.get((left, right), 0) + 1

    def fmt(kind):
        if kind and kind[0] == 'image':
            return f'img{kind[1]}'
        return '.'.join(str(c) for c in kind)

    parts = [f'{count}xL[{fmt(left)}]R[{fmt(right)}]'
        for (left, right), count in sorted(counts.items(), key=str)]
    return f'{q.order}:' + ';'.join(parts)

def _generating_sequence(q):
    """Greedy generators: next is the least element outside the closure"""
    t = q.table
    n = q.order
    inside = np.zeros(n, dtype=bool)
    members = []
    gens = []
    while not inside.all():
        g = int(np.flatnonzero(~inside)[0])
        gens.append(g)
        frontier = [g]
        inside[g] = True
        members.append(g)
        while frontier:
            new = []
            for x in frontier:
                for y in members:
                    for z in (t[x, y], t[y, x]):
                        if not inside[z]:
                            inside[z] = True
                            new.append(int(z))
            members.extend(new)
            frontier = new
    return gens

def _extend(p, q, f, used, assigned):
    """Close the partial map f under the operation; False on a clash"""
    tp, tq = p.table, q.table
    frontier = list(assigned)
    done = [x for x in range(p.order) if f[x] >= 0 and x not in assigned]
    while frontier:
        new = []
        domain = done + frontier
        for x in frontier:
            for y in domain:
                for (a, b) in ((x, y), (y, x)):
                    z = tp[a, b]
                    image = tq[f[a], f[b]]
                    if f[z] < 0:
                        if used[image]:
                            return False
                        f[z] = image
                        used[image] = True
                        new.append(int(z))
                    elif f[z] != image:
                        return False
        done = domain
        frontier = new
    return True

def is_isomorphic(p, q):
    """An isomorphism p -> q as an index array, or None

    Backtracking over a generating sequence of p. Each choice of image is
    closed under the operation, and candidate images must share the
    element invariants. If q is a latin quandle its automorphisms act
    transitively, so the first generator may be sent to 0 without loss.
    """
    if p.order != q.order:
        return None
    inv_p, inv_q = element_invariants(p), element_invariants(q)
    if sorted(map(str, inv_p)) != sorted(map(str, inv_q)):
        return None

    n = p.order
    gens = _generating_sequence(p)
    homogeneous = is_latin(q) and is_quandle(q)

    def candidates(i, x):
        if i == 0 and homogeneous:
            return [0] if inv_q[0] == inv_p[x] else []
        return [y for y in range(n) if inv_q[y] == inv_p[x]]

    def search(i, f, used):
        if i == len(gens):
            return f
        x = gens[i]
        if f[x] >= 0:
            return search(i + 1, f, used)
        for y in candidates(i, x):
            if used[y]:
                continue
            f2, used2 = f.copy(), used.copy()
            f2[x] = y
            used2[y] = True
            if _extend(p, q, f2, used2, [x]):
                found = search(i + 1, f2, used2)
                if found is not None:
                    return found
        return None

    f = search(0, np.full(n, -1, dtype=np.int64), np.zeros(n, dtype=bool))
    if f is None or not is_homomorphism(p, q, f):
        return None
    return f
