"""Finite abelian 2-groups and their endomorphisms

A group Z_{2^k1} x ... x Z_{2^kn} (k1 >= ... >= kn >= 1) is an AbelianGroup2.
Its elements are coordinate vectors and are indexed lexicographically,
coordinate 0 most significant. An endomorphism is an EndoMatrix: column j
is the image of the j-th generator, and entry (i, j) is stored mod 2^ki.

The functions at the bottom enumerate automorphisms, the admissible ones
(psi with 1 - psi bijective too), and representatives of their conjugacy
classes.
"""

import re
import itertools

import numpy as np

from .modlinalg import gf2_rank

# Exhaustive bounds; the driver passes the values from config/defaults.json
MAX_ENUMERATION_ORDER = 1024
MAX_AUTOMORPHISM_GROUP_ORDER = 10 ** 7

# Number of automorphisms conjugated at once
_CHUNK = 65536


class TooLargeError(ValueError):
    """An exhaustive computation was asked for beyond its bound"""
    pass


class AbelianGroup2(object):
    def __init__(self, signature):
        """A finite abelian 2-group

        Arguments
        ---------
        signature : sequence of int
            The exponents (k1, ..., kn), non-increasing, each >= 1.
            The empty sequence is the trivial group.
        """
        signature = tuple(int(k) for k in signature)
        if any(k < 1 for k in signature):
            raise ValueError(f'exponents must be >= 1, got {signature}')
        if any(a < b for a, b in zip(signature, signature[1:])):
            raise ValueError(f'signature must be non-increasing, got {signature}')

        self.signature = signature
        self.dim = len(signature)
        self.moduli = np.array([2 ** k for k in signature], dtype=np.int64)
        self.order = 2 ** sum(signature)

        # weights[i] is the index step of coordinate i
        self.weights = np.ones(self.dim, dtype=np.int64)
        for i in range(self.dim - 2, -1, -1):
            self.weights[i] = self.weights[i + 1] * self.moduli[i + 1]

        self._elements = None

    @classmethod
    def parse(cls, text):
        """Parse 'Z4xZ2', 'Z2^3', 'Z4^2xZ2' or a comma list of exponents '2,1'

        'Z1' and '' are the trivial group.
        """
        text = text.replace(' ', '')
        if text in ('', 'Z1', '1'):
            return cls(())
        if re.fullmatch(r'\d+(,\d+)*', text):
            return cls(int(tok) for tok in text.split(','))

        signature = []
        for factor in re.split(r'[x*]', text):
            match = re.fullmatch(r'Z_?(\d+)(?:\^(\d+))?', factor)
            if match is None:
                raise ValueError(f'cannot parse group factor "{factor}" in "{text}"')
            modulus, power = int(match.group(1)), int(match.group(2) or 1)
            k = modulus.bit_length() - 1
            if modulus < 2 or modulus != 2 ** k:
                raise ValueError(f'{modulus} is not a power of 2 in "{text}"')
            signature.extend([k] * power)
        return cls(sorted(signature, reverse=True))

    @property
    def is_homocyclic(self):
        return len(set(self.signature)) <= 1

    @property
    def is_elementary(self):
        return all(k == 1 for k in self.signature)

    def elements(self):
        """All elements as an (order, dim) array, in index order"""
        if self._elements is None:
            idx = np.arange(self.order, dtype=np.int64)
            self._elements = self.coords_of(idx)
            self._elements.setflags(write=False)
        return self._elements

    def coords_of(self, indices):
        """Coordinates of element indices; works on arrays of any shape"""
        indices = np.asarray(indices, dtype=np.int64)
        return (indices[..., None] // self.weights) % self.moduli

    def index_of(self, coords):
        """Indices of coordinate vectors; the last axis holds coordinates"""
        coords = np.asarray(coords, dtype=np.int64) % self.moduli
        return (coords * self.weights).sum(axis=-1)

    def element(self, coords):
        return GroupElement(self, coords)

    def zero(self):
        return GroupElement(self, [0] * self.dim)

    def __eq__(self, other):
        return isinstance(other, AbelianGroup2) and self.signature == other.signature

    def __hash__(self):
        return hash(('AbelianGroup2', self.signature))

    def __str__(self):
        if not self.signature:
            return 'Z1'
        parts = []
        for k, grp in itertools.groupby(self.signature):
            power = len(list(grp))
            parts.append(f'Z{2 ** k}' + (f'^{power}' if power > 1 else ''))
        return 'x'.join(parts)

    def __repr__(self):
        return f'AbelianGroup2({self})'


class GroupElement(object):
    """An element of an AbelianGroup2, coordinates reduced on construction"""
    def __init__(self, group, coords):
        coords = np.asarray(coords, dtype=np.int64).reshape(-1)
        if len(coords) != group.dim:
            raise ValueError(
                f'element has {len(coords)} coordinates, {group} needs {group.dim}')
        self.group = group
        self.coords = tuple(int(c) for c in coords % group.moduli)

    @property
    def index(self):
        return int(self.group.index_of(self.coords))

    def __eq__(self, other):
        return (isinstance(other, GroupElement) and
            self.group == other.group and self.coords == other.coords)

    def __hash__(self):
        return hash((self.group, self.coords))

    def __repr__(self):
        return f'GroupElement({self.group}, {self.coords})'


def _check_member(g, x):
    if not isinstance(x, GroupElement) or x.group != g:
        raise ValueError(f'{x!r} is not an element of {g}')

def group_add(g, x, y):
    _check_member(g, x)
    _check_member(g, y)
    return GroupElement(g, np.add(x.coords, y.coords))

def group_neg(g, x):
    _check_member(g, x)
    return GroupElement(g, np.negative(x.coords))

def group_zero(g):
    return g.zero()


class EndoMatrix(object):
    def __init__(self, group, entries):
        """An endomorphism of `group` as an integer matrix

        Column j is the image of the j-th generator. Entry (i, j) is reduced
        mod 2^ki. When ki > kj it has to be divisible by 2^(ki - kj),
        otherwise the column is not the image of an element of order 2^kj.
        """
        n = group.dim
        entries = np.asarray(entries, dtype=np.int64).reshape(n, n)
        entries = entries % group.moduli[:, None]

        k = np.array(group.signature, dtype=np.int64)
        gap = np.maximum(k[:, None] - k[None, :], 0)
        if np.any(entries % (2 ** gap) != 0):
            i, j = map(int, np.argwhere(entries % (2 ** gap) != 0)[0])
            raise ValueError(
                f'entry ({i}, {j}) = {entries[i, j]} does not define a '
                f'homomorphism of {group}: it must be divisible by {2 ** gap[i, j]}')

        entries.setflags(write=False)
        self.group = group
        self.entries = entries

    @classmethod
    def identity(cls, group):
        return cls(group, np.eye(group.dim, dtype=np.int64))

    @classmethod
    def zero(cls, group):
        return cls(group, np.zeros((group.dim, group.dim), dtype=np.int64))

    def _check_group(self, other):
        if self.group != other.group:
            raise ValueError(f'endomorphisms of {self.group} and {other.group}')

    def apply(self, x):
        """Image of one GroupElement"""
        _check_member(self.group, x)
        return GroupElement(self.group, self.entries @ np.array(x.coords))

    def apply_coords(self, coords):
        """Images of coordinate vectors; the last axis holds coordinates"""
        coords = np.asarray(coords, dtype=np.int64)
        return (coords @ self.entries.T) % self.group.moduli

    def permutation(self):
        """The map on element indices, as an array of length |A|"""
        return self.group.index_of(self.apply_coords(self.group.elements()))

    def compose(self, other):
        """self after other"""
        self._check_group(other)
        return EndoMatrix(self.group, self.entries @ other.entries)

    def __matmul__(self, other):
        return self.compose(other)

    def __add__(self, other):
        self._check_group(other)
        return EndoMatrix(self.group, self.entries + other.entries)

    def __sub__(self, other):
        self._check_group(other)
        return EndoMatrix(self.group, self.entries - other.entries)

    def __neg__(self):
        return EndoMatrix(self.group, -self.entries)

    def one_minus(self):
        """1 - self, i.e. phi when self is psi"""
        return EndoMatrix.identity(self.group) - self

    def power(self, e):
        result = EndoMatrix.identity(self.group)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def order(self):
        """Multiplicative order; only meaningful for automorphisms"""
        if not is_bijective_endo(self):
            raise ValueError('only an automorphism has a multiplicative order')
        one = EndoMatrix.identity(self.group)
        current, n = self, 1
        while current != one:
            current = current @ self
            n += 1
        return n

    def inverse(self):
        return self.power(self.order() - 1)

    def socle_matrix(self):
        """The action on the elements of order <= 2, as a matrix over Z_2

        Those elements form Z_2^n with basis 2^(kj - 1) e_j. The endomorphism
        is bijective iff this matrix is invertible.
        """
        return _socle_bits(self.group, self.entries)

    def key(self):
        return self.entries.tobytes()

    def __eq__(self, other):
        return (isinstance(other, EndoMatrix) and self.group == other.group
            and np.array_equal(self.entries, other.entries))

    def __hash__(self):
        return hash((self.group, self.key()))

    def __repr__(self):
        return f'EndoMatrix({self.group}, {self.entries.tolist()})'


def _socle_bits(group, entries):
    k = np.array(group.signature, dtype=np.int64)
    scaled = (entries * (2 ** (k - 1))[None, :]) % group.moduli[:, None]
    return scaled >> (k - 1)[:, None]

def endo_apply(m, x):
    return m.apply(x)

def brute_force_bijective(m, max_order=MAX_ENUMERATION_ORDER):
    """Exhaustive image check: is the image all of the group?"""
    if m.group.order > max_order:
        raise TooLargeError(
            f'{m.group} has {m.group.order} elements, above the bound {max_order}')
    return len(np.unique(m.permutation())) == m.group.order

def is_bijective_endo(m, max_order=MAX_ENUMERATION_ORDER):
    """True iff the endomorphism permutes the group

    Homocyclic groups: determinant odd, i.e. full rank mod 2.
    Mixed signatures: exhaustive image check up to `max_order` elements,
    the socle test above that.
    """
    g = m.group
    if g.dim == 0:
        return True
    if g.is_homocyclic:
        return gf2_rank(m.entries % 2) == g.dim
    if g.order <= max_order:
        return brute_force_bijective(m, max_order)
    return gf2_rank(m.socle_matrix()) == g.dim

def is_admissible(psi):
    """psi and 1 - psi both bijective"""
    return is_bijective_endo(psi) and is_bijective_endo(psi.one_minus())

def automorphism_group_order(g):
    """|Aut(g)| from the signature alone

    Uses the count of Hillar and Rhea for Z_{p^e1} x ... x Z_{p^en} with
    e1 <= ... <= en, where d_k and c_k are the last and first positions
    holding the value e_k.
    """
    e = sorted(g.signature)
    n = len(e)
    total = 1
    for k in range(1, n + 1):
        d = max(l for l in range(1, n + 1) if e[l - 1] == e[k - 1])
        c = min(l for l in range(1, n + 1) if e[l - 1] == e[k - 1])
        total *= 2 ** d - 2 ** (k - 1)
        total *= (2 ** e[k - 1]) ** (n - d)
        total *= (2 ** (e[k - 1] - 1)) ** (n - c + 1)
    return total


## Enumeration
def _column_options(g):
    """For each column j, every admissible image of e_j, lexicographic"""
    k = g.signature
    options = []
    for j in range(g.dim):
        ranges = [range(0, 2 ** k[i], 2 ** max(k[i] - k[j], 0))
            for i in range(g.dim)]
        options.append(np.array(list(itertools.product(*ranges)),
            dtype=np.int64).reshape(-1, g.dim))
    return options

def _socle_column_ints(g, j, cols):
    """Socle images of candidate columns j, each packed into an int"""
    k = np.array(g.signature, dtype=np.int64)
    bits = ((cols * 2 ** (k[j] - 1)) % g.moduli) >> (k - 1)
    weights = 1 << np.arange(g.dim, dtype=np.int64)
    return (bits * weights).sum(axis=1).tolist()

def _enumerate(g, admissible_only):
    """Depth-first over columns, pruning on socle independence

    A column's socle image depends on that column alone, so a partial
    matrix whose socle columns are dependent has no bijective completion.
    For admissible_only, 1 - psi is pruned the same way.
    """
    n = g.dim
    if n == 0:
        return [EndoMatrix.identity(g)]

    options = _column_options(g)
    psi_bits = [_socle_column_ints(g, j, options[j]) for j in range(n)]
    eye = np.eye(n, dtype=np.int64)
    phi_bits = [
        _socle_column_ints(g, j, (eye[j] - options[j]) % g.moduli)
        for j in range(n)]

    found = []
    columns = [None] * n

    def descend(j, span_psi, span_phi):
        if j == n:
            found.append(EndoMatrix(g, np.stack(columns, axis=1)))
            return
        for col, pb, fb in zip(options[j], psi_bits[j], phi_bits[j]):
            if pb in span_psi:
                continue
            if admissible_only and fb in span_phi:
                continue
            columns[j] = col
            descend(j + 1,
                span_psi | {s ^ pb for s in span_psi},
                span_phi | {s ^ fb for s in span_phi})

    descend(0, frozenset([0]), frozenset([0]))
    return found

def _check_enumerable(g, max_order, max_aut_order):
    if g.order > max_order:
        raise TooLargeError(
            f'{g} has {g.order} elements, above the enumeration bound {max_order}')
    n_aut = automorphism_group_order(g)
    if n_aut > max_aut_order:
        raise TooLargeError(
            f'Aut({g}) has {n_aut} elements, above the bound {max_aut_order}')

def automorphisms(g, max_order=MAX_ENUMERATION_ORDER,
    max_aut_order=MAX_AUTOMORPHISM_GROUP_ORDER):
    """Every automorphism of g, in a fixed order"""
    _check_enumerable(g, max_order, max_aut_order)
    return _enumerate(g, admissible_only=False)

def admissible_automorphisms(g, max_order=MAX_ENUMERATION_ORDER,
    max_aut_order=MAX_AUTOMORPHISM_GROUP_ORDER):
    """Every automorphism psi of g such that 1 - psi is bijective

    Empty whenever k1 > k2: psi is then diagonal mod 2 in its first
    coordinate, with a unit a1 there, and 1 - a1 is even.
    """
    _check_enumerable(g, max_order, max_aut_order)
    return _enumerate(g, admissible_only=True)


## Conjugacy
def _stack(mats):
    return np.stack([m.entries for m in mats]).astype(np.int64)

def _batch_inverse(g, stack, group_order):
    """Inverses of a stack of automorphisms, as A^(|Aut| - 1)"""
    mod = g.moduli[None, :, None]
    result = np.broadcast_to(np.eye(g.dim, dtype=np.int64), stack.shape).copy()
    base = stack.copy()
    e = group_order - 1
    while e:
        if e & 1:
            result = np.matmul(result, base) % mod
        base = np.matmul(base, base) % mod
        e >>= 1
    return result

def _conjugate_keys(g, auts, auts_inv, x):
    """bytes keys of a x a^-1 for every a in the stacks"""
    mod = g.moduli[None, :, None]
    conj = np.matmul(np.matmul(auts, x.entries), auts_inv) % mod
    return {row.tobytes() for row in conj}

def conjugacy_class_reps(g, candidates, max_aut_order=MAX_AUTOMORPHISM_GROUP_ORDER,
    max_order=MAX_ENUMERATION_ORDER):
    """One representative per Aut(g)-conjugacy orbit meeting `candidates`

    The representative of an orbit is its first member in `candidates`.

    Arguments
    ---------
    g : AbelianGroup2
    candidates : list of EndoMatrix over g

    Returns : list of EndoMatrix
    """
    if len(candidates) <= 1:
        return list(candidates)

    auts = automorphisms(g, max_order=max_order, max_aut_order=max_aut_order)
    n_aut = len(auts)
    stack = _stack(auts)

    reps = []
    seen = set()
    for cand in candidates:
        if cand.group != g:
            raise ValueError(f'candidate {cand!r} is not over {g}')
        if cand.key() in seen:
            continue
        reps.append(cand)
        for start in range(0, n_aut, _CHUNK):
            chunk = stack[start:start + _CHUNK]
            seen |= _conjugate_keys(g, chunk, _batch_inverse(g, chunk, n_aut), cand)
    return reps

def find_conjugator(g, x, y, max_aut_order=MAX_AUTOMORPHISM_GROUP_ORDER,
    max_order=MAX_ENUMERATION_ORDER):
    """An automorphism a with a x a^-1 = y, or None"""
    auts = automorphisms(g, max_order=max_order, max_aut_order=max_aut_order)
    stack = _stack(auts)
    mod = g.moduli[None, :, None]

    # a x = y a avoids inverting every a
    for start in range(0, len(auts), _CHUNK):
        chunk = stack[start:start + _CHUNK]
        lhs = np.matmul(chunk, x.entries) % mod
        rhs = np.matmul(y.entries, chunk) % mod
        hits = np.flatnonzero(np.all(lhs == rhs, axis=(1, 2)))
        if len(hits):
            return auts[start + int(hits[0])]
    return None


## Rational canonical forms over Z_2
# Polynomials over Z_2 are ints, bit i holding the coefficient of x^i
def _poly_deg(f):
    return f.bit_length() - 1

def _poly_mod(a, b):
    db = _poly_deg(b)
    while a and _poly_deg(a) >= db:
        a ^= b << (_poly_deg(a) - db)
    return a

def _poly_divides(a, b):
    return _poly_mod(b, a) == 0

def _poly_at_one(f):
    return bin(f).count('1') % 2

def _admissible_polys(d):
    """Monic degree-d polynomials with f(0) = f(1) = 1"""
    return [f for f in range(1 << d, 1 << (d + 1))
        if f & 1 and _poly_at_one(f)]

def invariant_factor_chains(n):
    """Chains f1 | f2 | ... | fr of total degree n with fr(0) = fr(1) = 1

    These are the invariant factors of the automorphisms psi of Z_2^n for
    which 1 + psi is bijective too, one chain per conjugacy class.
    """
    def chains(total, top):
        # chains of total degree `total` whose last factor divides `top`
        if total == 0:
            return [()]
        out = []
        for d in range(1, min(total, _poly_deg(top)) + 1):
            for f in range(1 << d, 1 << (d + 1)):
                if _poly_divides(f, top):
                    out.extend(c + (f,) for c in chains(total - d, f))
        return out

    result = []
    for d in range(1, n + 1):
        for top in _admissible_polys(d):
            result.extend(c + (top,) for c in chains(n - d, top))
    return sorted(result, key=lambda c: (len(c), c))

def companion_matrix(f):
    d = _poly_deg(f)
    c = np.zeros((d, d), dtype=np.int64)
    for i in range(d - 1):
        c[i + 1, i] = 1
    for i in range(d):
        c[i, d - 1] = (f >> i) & 1
    return c

def rational_canonical_form(g, chain):
    blocks = [companion_matrix(f) for f in chain]
    m = np.zeros((g.dim, g.dim), dtype=np.int64)
    pos = 0
    for b in blocks:
        m[pos:pos + len(b), pos:pos + len(b)] = b
        pos += len(b)
    return EndoMatrix(g, m)

def admissible_class_reps(g, max_order=MAX_ENUMERATION_ORDER,
    max_aut_order=MAX_AUTOMORPHISM_GROUP_ORDER):
    """Representatives of the conjugacy classes of admissible automorphisms

    Elementary abelian groups use rational canonical forms, so Z_2^5 and
    beyond need no enumeration of GL(n, 2). Other groups go through
    admissible_automorphisms and conjugacy_class_reps.
    """
    if g.dim == 0:
        return [EndoMatrix.identity(g)]
    if g.is_elementary:
        return [rational_canonical_form(g, chain)
            for chain in invariant_factor_chains(g.dim)]
    if not g.is_homocyclic:
        # empty by the argument in admissible_automorphisms; enumerating
        # confirms it while the group is small
        if g.order > max_order:
            return []
    candidates = admissible_automorphisms(g, max_order, max_aut_order)
    return conjugacy_class_reps(g, candidates, max_aut_order, max_order)
