"""The linear system whose solutions are Z_LD(F, A, psi)

There is one unknown per fiber coordinate of every theta[a, b], at
position (a * |F| + b) * dim + j. Every triple (a, b, c) contributes dim
rows from (LD), and every a contributes dim rows from theta[a, a] = 0.
"""

import numpy as np

from ..algebra.groups import is_admissible
from ..algebra.modlinalg import (ModMatrix, kernel_basis, lifting_kernel,
    howell_form, in_row_span, span_size, gf2_rank)
from ..algebra.extensions import Cocycle, ExtensionSpec, check_LD, check_M


class SolverError(RuntimeError):
    """A solved generator failed a check it must pass"""
    pass


class LDSystem(object):
    def __init__(self, base, fiber, psi, matrix, n_relations):
        """An assembled (LD) system

        Arguments
        ---------
        matrix : ModMatrix, deduplicated rows
        n_relations : number of rows before deduplication
        """
        self.base = base
        self.fiber = fiber
        self.psi = psi
        self.matrix = matrix
        self.n_relations = n_relations

    @property
    def n_unknowns(self):
        return self.matrix.cols

    def rank(self):
        """Rank of the relations; mod 2^e, e > 1, the row count of their Howell form"""
        m = self.matrix
        if m.rows == 0:
            return 0
        if m.modulus == 2:
            return gf2_rank(m.entries)
        return len(howell_form(list(m.entries), m.modulus))

    def __repr__(self):
        return (f'LDSystem(|F|={self.base.order}, A={self.fiber}, '
            f'{self.matrix.rows} rows, {self.n_unknowns} unknowns mod {self.matrix.modulus})')


def assemble(F, A, psi):
    """Build the (LD) system for theta over F with values in A

    A must be homocyclic so one modulus serves every coordinate.
    """
    if not A.is_homocyclic:
        raise ValueError(f'the solver needs a homocyclic fiber, got {A}')
    if psi.group != A:
        raise ValueError(f'psi acts on {psi.group}, not on {A}')
    if not is_admissible(psi):
        raise ValueError(f'{psi!r} is not admissible: psi and 1 - psi must be bijective')

    q, n = F.order, A.dim
    if n == 0:
        return LDSystem(F, A, psi, ModMatrix(np.zeros((0, 0)), 2, cols=0), 0)
    modulus = int(A.moduli[0])
    n_unknowns = q * q * n
    t = F.table.astype(np.int64)
    psi_m = psi.entries.astype(np.int64)
    phi_m = psi.one_minus().entries.astype(np.int64)
    eye = np.eye(n, dtype=np.int64)

    def col(x, y, j):
        return (x * q + y) * n + j

    b = np.arange(q)[:, None, None, None]
    c = np.arange(q)[None, :, None, None]
    i = np.arange(n)[None, None, :, None]
    j = np.arange(n)[None, None, None, :]
    full = (q, q, n, n)
    row_of = np.broadcast_to(i, full)
    b_of = np.broadcast_to(b, full)
    c_of = np.broadcast_to(c, full)

    chunks = []
    for a in range(q):
        rows = np.zeros((q, q, n, n_unknowns), dtype=np.int64)

        def put(cols, coeff):
            np.add.at(rows, (b_of, c_of, row_of, np.broadcast_to(cols, full)),
                np.broadcast_to(coeff, full))

        bc = t[b, c]
        put(col(b, c, j), psi_m[i, j])
        put(col(a, bc, j), eye[i, j])
        put(col(a, c, j), -psi_m[i, j])
        put(col(a, b, j), -phi_m[i, j])
        put(col(t[a, b], t[a, c], j), -eye[i, j])

        rows = rows.reshape(q * q * n, n_unknowns) % modulus
        chunks.append(np.unique(rows, axis=0))

    # theta[a, a] = 0
    diag = np.zeros((q * n, n_unknowns), dtype=np.int64)
    for a in range(q):
        for jj in range(n):
            diag[a * n + jj, col(a, a, jj)] = 1
    chunks.append(diag)

    stacked = np.unique(np.concatenate(chunks, axis=0), axis=0)
    stacked = stacked[stacked.any(axis=1)]
    n_relations = n * (q ** 3 + q)
    return LDSystem(F, A, psi, ModMatrix(stacked, modulus, cols=n_unknowns), n_relations)

def same_span(gens1, gens2, modulus):
    """Whether two generating sets span the same submodule"""
    gens1 = [g for g in np.asarray(gens1, dtype=np.int64)]
    gens2 = [g for g in np.asarray(gens2, dtype=np.int64)]
    if span_size(gens1, modulus) != span_size(gens2, modulus):
        return False
    h1, h2 = howell_form(gens1, modulus), howell_form(gens2, modulus)
    return (all(in_row_span(h1, g, modulus) for g in gens2) and
        all(in_row_span(h2, g, modulus) for g in gens1))

def solve_ZLD(s, cross_check=False):
    """A generating set of Z_LD(F, A, psi), as Cocycles

    Every generator is checked against (LD). With cross_check, systems mod
    4 or more are also solved through the integer lift and the two spans
    compared.
    """
    if s.matrix.cols == 0:
        return []
    gens = kernel_basis(s.matrix)

    if cross_check and s.matrix.modulus > 2:
        lifted = lifting_kernel(s.matrix)
        if not same_span(gens, lifted, s.matrix.modulus):
            raise SolverError(
                f'Howell and lifting kernels differ for {s!r}')

    thetas = [Cocycle.from_vector(s.base, s.fiber, g) for g in gens]
    for k, theta in enumerate(thetas):
        v = check_LD(ExtensionSpec(s.base, s.fiber, s.psi, theta))
        if v is not None:
            raise SolverError(f'generator {k} of {s!r} fails (LD): {v!r}')
    return thetas

def zld_size(s):
    """|Z_LD| from a fresh kernel computation"""
    return span_size(list(kernel_basis(s.matrix)), s.matrix.modulus)

def nonmedial_generator(thetas, psi, with_violation=False):
    """The first generator failing (M), or None

    Cocycles satisfying (M) form a subgroup of Z_LD, so if every generator
    satisfies it, every cocycle does.
    """
    for theta in thetas:
        v = check_M(ExtensionSpec(theta.base, theta.fiber, psi, theta))
        if v is not None:
            return (theta, v) if with_violation else theta
    return None


## Oracle
def enumerate_ld_cocycles(F, A, psi, max_nodes=10 ** 7):
    """Every theta satisfying (LD), by backtracking over the pairs (a, b)

    The diagonal is fixed at 0. After each assignment, the (LD) equations
    whose five pairs are all assigned are checked.

    Returns : list of Cocycle
    """
    q = F.order
    m = A.order
    t = F.table.astype(np.int64)

    elems = A.elements()
    add = A.index_of(elems[:, None, :] + elems[None, :, :])
    psi_t = psi.permutation()
    phi_t = psi.one_minus().permutation()

    pairs = [(a, b) for a in range(q) for b in range(q) if a != b]
    position = {p: k for k, p in enumerate(pairs)}
    for a in range(q):
        position[(a, a)] = -1

    # Equations indexed by the last position they need
    checks = [[] for _ in pairs]
    for a in range(q):
        for b in range(q):
            for c in range(q):
                involved = [(b, c), (a, t[b, c]), (a, c), (a, b), (t[a, b], t[a, c])]
                last = max(position[(int(x), int(y))] for x, y in involved)
                # equations on diagonal pairs only read 0 = 0
                if last >= 0:
                    checks[last].append((a, b, c))

    theta = np.zeros((q, q), dtype=np.int64)
    found = []
    nodes = [0]

    def holds(a, b, c):
        lhs = add[psi_t[theta[b, c]], theta[a, t[b, c]]]
        rhs = add[add[psi_t[theta[a, c]], phi_t[theta[a, b]]], theta[t[a, b], t[a, c]]]
        return lhs == rhs

    def descend(k):
        nodes[0] += 1
        if nodes[0] > max_nodes:
            raise ValueError(f'oracle exceeded {max_nodes} search nodes')
        if k == len(pairs):
            found.append(theta.copy())
            return
        a, b = pairs[k]
        for v in range(m):
            theta[a, b] = v
            if all(holds(*abc) for abc in checks[k]):
                descend(k + 1)
        theta[a, b] = 0

    descend(0)
    return [Cocycle.from_indices(F, A, th) for th in found]
