"""Libraries of latin quandles of small 2-power order

Every latin quandle of order 2^m, m <= 5, is affine, so a library is made
of the tables Aff(A, psi), one per admissible group A and conjugacy class
of psi, deduplicated by isomorphism. Members are named '<order>_<i>'.
"""

import functools

import pandas

from ..algebra.groups import AbelianGroup2, admissible_class_reps
from ..algebra.quandles import (affine_quandle, direct_product, fingerprint,
    is_isomorphic, is_latin, is_quandle)
from ..shared import load_params, logtools

# Statement attached to every library; it is what makes the search complete
COMPLETENESS_NOTE = (
    'every latin quandle of order 2^m, m <= 5, is affine; the library holds '
    'all of them up to isomorphism')


class QuandleLibrary(object):
    def __init__(self, order, members, provenance):
        """Pairwise non-isomorphic latin quandles of one order

        Arguments
        ---------
        order : int
        members : list of MagmaTable
        provenance : list of str, how each member was produced
        """
        self.order = order
        self.members = list(members)
        self.provenance = list(provenance)
        self.names = [f'{order}_{i + 1}' for i in range(len(members))]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(zip(self.names, self.members, self.provenance))

    def find(self, q):
        """Name of the member isomorphic to q, or None"""
        for name, member, _ in self:
            if is_isomorphic(q, member) is not None:
                return name
        return None

    def summary(self):
        """One row per member: name, provenance, fingerprint"""
        return pandas.DataFrame({
            'name': self.names,
            'provenance': self.provenance,
            'fingerprint': [fingerprint(q) for q in self.members],
        })

    def __repr__(self):
        return f'QuandleLibrary(order={self.order}, {len(self)} members)'


def partitions(m, largest=None):
    """Partitions of m into non-increasing parts, largest first"""
    if largest is None:
        largest = m
    if m == 0:
        return [()]
    out = []
    for first in range(min(m, largest), 0, -1):
        out.extend((first,) + rest for rest in partitions(m - first, first))
    return out

def groups_of_order(order):
    """Every abelian group of a 2-power order, as AbelianGroup2"""
    m = int(order).bit_length() - 1
    if order < 1 or order != 2 ** m:
        raise ValueError(f'{order} is not a power of 2')
    return [AbelianGroup2(p) for p in partitions(m)]

def _psi_text(psi):
    return ';'.join(','.join(str(int(x)) for x in row) for row in psi.entries)

@functools.lru_cache(maxsize=None)
def _build(order, max_exponent, max_order, max_aut_order):
    m = int(order).bit_length() - 1
    if order < 1 or order != 2 ** m:
        raise ValueError(f'library order must be a power of 2, got {order}')
    if m > max_exponent:
        raise ValueError(
            f'library order {order} = 2^{m} is above the supported 2^{max_exponent}')

    members, provenance = [], []
    for g in groups_of_order(order):
        reps = admissible_class_reps(g, max_order=max_order, max_aut_order=max_aut_order)
        for k, psi in enumerate(reps):
            q = affine_quandle(g, psi)
            if any(is_isomorphic(q, other) is not None for other in members):
                continue
            members.append(q)
            provenance.append(f'Aff({g},psi[{k}]={_psi_text(psi)})')

    # Label members that are products of smaller library members
    for m1 in range(2, m - 1):
        m2 = m - m1
        if m1 > m2:
            break
        left = _build(2 ** m1, max_exponent, max_order, max_aut_order)
        right = _build(2 ** m2, max_exponent, max_order, max_aut_order)
        for n1, q1, _ in left:
            for n2, q2, _ in right:
                if m1 == m2 and n2 < n1:
                    continue
                prod = direct_product(q1, q2)
                for i, q in enumerate(members):
                    if is_isomorphic(prod, q) is not None:
                        provenance[i] += f' = {n1} x {n2}'
                        break

    for q in members:
        if not (is_quandle(q) and is_latin(q)):
            raise RuntimeError(f'library member of order {order} is not a latin quandle')
    return QuandleLibrary(order, members, provenance)

def build_library(order, params=None):
    """All latin quandles of order 2^m up to isomorphism, m <= max_library_exponent

    Order 2 gives an empty library, order 1 the one-element quandle.
    """
    if params is None:
        params = load_params.load_defaults()
    logger = logtools.get_logger('library', params['log_level'])
    lib = _build(int(order), int(params['max_library_exponent']),
        int(params['max_enumeration_order']), int(params['max_automorphism_group_order']))
    logger.debug(f'library of order {order}: {len(lib)} members')
    return lib

def count_affine_latin_quandles(order, params=None):
    return len(build_library(order, params))
