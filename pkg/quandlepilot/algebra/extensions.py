"""Central extensions Q x_{phi,psi,theta} A

(a, s) * (b, t) = (a*b, phi(s) + psi(t) + theta[a, b]) with phi = 1 - psi.
The pair (a, s) has index a * |A| + index(s).

check_LD and check_M test the cocycle conditions under which the extension
is a left distributive quasigroup, and medial, respectively. Both are
evaluated on the cocycle, without building the |Q||A| table.
"""

import numpy as np

from .groups import EndoMatrix, is_admissible
from .quandles import MagmaTable, Violation, affine_quandle, _BLOCK
from .onoi import aff_of_onoi


class Cocycle(object):
    def __init__(self, base, fiber, values):
        """A map theta: Q x Q -> A

        Arguments
        ---------
        base : MagmaTable Q
        fiber : AbelianGroup2 A
        values : array (|Q|, |Q|, dim A) of coordinates
        """
        q = base.order
        values = np.asarray(values, dtype=np.int64)
        if values.shape != (q, q, fiber.dim):
            raise ValueError(
                f'cocycle values have shape {values.shape}, '
                f'expected {(q, q, fiber.dim)}')
        values = values % fiber.moduli
        values.setflags(write=False)
        self.base = base
        self.fiber = fiber
        self.values = values

    @classmethod
    def zero(cls, base, fiber):
        return cls(base, fiber, np.zeros((base.order, base.order, fiber.dim), dtype=np.int64))

    @classmethod
    def from_vector(cls, base, fiber, vector):
        """Unknown (a, b, j) sits at position (a * |Q| + b) * dim + j"""
        q = base.order
        return cls(base, fiber, np.asarray(vector).reshape(q, q, fiber.dim))

    @classmethod
    def from_indices(cls, base, fiber, indices):
        """From a |Q| x |Q| array of fiber element indices"""
        return cls(base, fiber, fiber.coords_of(indices))

    def to_vector(self):
        return self.values.reshape(-1).copy()

    def indices(self):
        """theta as a |Q| x |Q| array of fiber element indices"""
        return self.fiber.index_of(self.values)

    def at(self, a, b):
        return self.fiber.element(self.values[a, b])

    def is_zero(self):
        return not self.values.any()

    def _check_compatible(self, other):
        if self.base != other.base or self.fiber != other.fiber:
            raise ValueError('cocycles over different bases or fibers')

    def __add__(self, other):
        self._check_compatible(other)
        return Cocycle(self.base, self.fiber, self.values + other.values)

    def __sub__(self, other):
        self._check_compatible(other)
        return Cocycle(self.base, self.fiber, self.values - other.values)

    def scale(self, k):
        return Cocycle(self.base, self.fiber, int(k) * self.values)

    def __eq__(self, other):
        return (isinstance(other, Cocycle) and self.base == other.base
            and self.fiber == other.fiber and np.array_equal(self.values, other.values))

    def __hash__(self):
        return hash((self.fiber, self.values.tobytes()))

    def __repr__(self):
        return f'Cocycle(|Q|={self.base.order}, A={self.fiber})'


class ExtensionSpec(object):
    def __init__(self, base, fiber, psi, theta):
        """The data (Q, A, psi, theta) of a central extension

        psi must be admissible; phi is 1 - psi.
        """
        if psi.group != fiber:
            raise ValueError(f'psi acts on {psi.group}, the fiber is {fiber}')
        if not is_admissible(psi):
            raise ValueError(f'{psi!r} is not admissible: psi and 1 - psi must be bijective')
        if theta.base != base or theta.fiber != fiber:
            raise ValueError('theta is not over the given base and fiber')
        self.base = base
        self.fiber = fiber
        self.psi = psi
        self.phi = psi.one_minus()
        self.theta = theta

    @property
    def order(self):
        return self.base.order * self.fiber.order

    def __repr__(self):
        return f'ExtensionSpec(|Q|={self.base.order}, A={self.fiber}, psi={self.psi.entries.tolist()})'


def build_extension(e):
    """The table of Q x_{phi,psi,theta} A"""
    q, m = e.base.order, e.fiber.order
    fiber = e.fiber
    elems = fiber.elements()
    phi_s = e.phi.apply_coords(elems)
    psi_t = e.psi.apply_coords(elems)
    # phi(s) + psi(t), indexed (s, t, coordinate)
    lin = phi_s[:, None, :] + psi_t[None, :, :]

    bt = e.base.table.astype(np.int64)
    table = np.empty((q, m, q, m), dtype=np.int64)
    for a in range(q):
        # (b, s, t, coordinate)
        shifted = lin[None, :, :, :] + e.theta.values[a][:, None, None, :]
        fibre_idx = fiber.index_of(shifted)
        table[a] = np.transpose(bt[a][:, None, None] * m + fibre_idx, (1, 0, 2))
    return MagmaTable(table.reshape(q * m, q * m))


## Cocycle conditions
def _images(e):
    """psi(theta) and phi(theta), both (|Q|, |Q|, dim)"""
    th = e.theta.values
    return e.psi.apply_coords(th), e.phi.apply_coords(th)

def _structural_violation(e):
    one = EndoMatrix.identity(e.fiber)
    if e.phi + e.psi != one:
        return Violation('phi_plus_psi', ())
    diag = e.theta.values[np.arange(e.base.order), np.arange(e.base.order)]
    bad = np.flatnonzero(diag.any(axis=1))
    if len(bad):
        return Violation('diagonal', (bad[0],), 'theta[a, a] != 0')
    return None

def check_LD(e):
    """None if (LD) holds, else the first failing (a, b, c)

    (LD): psi(th[b,c]) + th[a,b*c] = psi(th[a,c]) + phi(th[a,b]) + th[a*b,a*c]
    together with phi + psi = 1 and th[a,a] = 0.
    """
    v = _structural_violation(e)
    if v is not None:
        return v

    t = e.base.table.astype(np.int64)
    th = e.theta.values
    psi_th, phi_th = _images(e)
    mod = e.fiber.moduli
    for a in range(e.base.order):
        row = t[a]
        lhs = psi_th + th[a][t]
        rhs = (psi_th[a][None, :, :] + phi_th[a][:, None, :] +
            th[row[:, None], row[None, :]])
        bad = np.argwhere(((lhs - rhs) % mod).any(axis=-1))
        if len(bad):
            return Violation('LD', (a, *bad[0]))
    return None

def check_M(e):
    """None if (M) holds, else the first failing (a, b, c, d)

    (M): phi(th[a,b]) + psi(th[c,d]) + th[a*b,c*d]
        = phi(th[a,c]) + psi(th[b,d]) + th[a*c,b*d]
    """
    t = e.base.table.astype(np.int64)
    th = e.theta.values
    psi_th, phi_th = _images(e)
    mod = e.fiber.moduli
    n = e.base.order
    block = max(1, _BLOCK // (n * n * max(1, e.fiber.dim)))
    for a in range(n):
        row = t[a]
        for start in range(0, n, block):
            bs = np.arange(start, min(n, start + block))
            # axes (b, c, d, coordinate)
            lhs = (phi_th[a][bs][:, None, None, :] + psi_th[None, :, :, :] +
                th[row[bs][:, None, None], t[None, :, :]])
            rhs = (phi_th[a][None, :, None, :] + psi_th[bs][:, None, :, :] +
                th[row[None, :, None], t[bs][:, None, :]])
            bad = np.argwhere(((lhs - rhs) % mod).any(axis=-1))
            if len(bad):
                b, c, d = bad[0]
                return Violation('M', (a, bs[b], c, d))
    return None


## Onoi extensions
def theta_from_mu(m):
    """theta[a, b] = mu(a, a + b, a + b), over Aff(O1) with fiber O2"""
    base = aff_of_onoi(m.source)
    n = m.source.size
    idx = np.empty((n, n), dtype=np.int64)
    b = np.arange(n)
    for a in range(n):
        diag = np.diag(m.slice(a))
        idx[a] = diag[a ^ b]
    return Cocycle.from_indices(base, m.target.additive_group(), idx)

def onoi_extension_spec(m):
    """Aff(O1) x_{alpha2^2, alpha2, theta} O2 as an ExtensionSpec"""
    theta = theta_from_mu(m)
    return ExtensionSpec(theta.base, theta.fiber, m.target.alpha_endo(), theta)

def quandle_QOOmu(o1, o2, m):
    """Q(O1, O2, mu), a latin quandle of order |O1| |O2|"""
    if m.source != o1 or m.target != o2:
        raise ValueError('the mapping does not go from O1^3 to O2')
    return build_extension(onoi_extension_spec(m))


## Transport and the canonical maps
def conjugate_extension(e, a):
    """Q x_{a phi a^-1, a psi a^-1, a theta} A, isomorphic to e via (x,s) -> (x,a(s))"""
    if a.group != e.fiber:
        raise ValueError(f'{a!r} does not act on {e.fiber}')
    a_inv = a.inverse()
    psi = a @ e.psi @ a_inv
    theta = Cocycle(e.base, e.fiber, a.apply_coords(e.theta.values))
    return ExtensionSpec(e.base, e.fiber, psi, theta)

def fiber_map(e, a):
    """(x, s) -> (x, a(s)) on element indices"""
    m = e.fiber.order
    perm = a.permutation()
    idx = np.arange(e.order)
    return (idx // m) * m + perm[idx % m]

def canonical_projection_ok(e, table=None):
    """(a, s) -> a is a homomorphism onto Q"""
    if table is None:
        table = build_extension(e)
    m = e.fiber.order
    proj = np.arange(e.order) // m
    return bool(np.array_equal(proj[table.table],
        e.base.table[proj[:, None], proj[None, :]]))

def canonical_injection_ok(e, idem, table=None):
    """The fiber over an idempotent `idem` is a copy of Aff(A, psi)

    s -> (idem, s) has to be a homomorphism from Aff(A, psi), with phi the
    linear part of the left factor.
    """
    if e.base.table[idem, idem] != idem:
        raise ValueError(f'{idem} is not idempotent in the base')
    if table is None:
        table = build_extension(e)
    m = e.fiber.order
    block = np.arange(idem * m, (idem + 1) * m)
    sub = table.table[block[:, None], block[None, :]]
    if np.any(sub // m != idem):
        return False
    return bool(np.array_equal(sub % m, affine_quandle(e.fiber, e.psi).table))
