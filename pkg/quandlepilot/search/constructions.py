"""Explicit non-affine latin quandles

extension-64   Q(O^2, O, split) for a nonzero ring O on four elements
extension-256  Q(O^sigma, O^sigma, canonical) with sigma = (1 2)
extension-4k   the same over O^sigma with j factors, order 2^(4j)
extension-6k   Q((O^j)^2, O^j, split), order 2^(6j)
onoi-affine    Aff(O)
affine         Aff(A, psi)
product        the direct product of two tables
recipe         a non-affine latin quandle of order 2^k, when one exists
"""

from ..algebra.groups import admissible_class_reps
from ..algebra.quandles import (affine_quandle, direct_product,
    find_medial_witness, idempotency_violation, is_latin, left_distributivity_violation,
    quandle_violation)
from ..algebra.onoi import (ring_by_name, power_sigma, direct_power,
    canonical_mapping, split_mapping, aff_of_onoi, find_cube_nonzero,
    validate_onoi_ring)
from ..algebra.extensions import quandle_QOOmu
from ..shared import load_params, logtools
from . import library

KINDS = ('onoi-affine', 'extension-64', 'extension-256', 'extension-4k',
    'extension-6k', 'product', 'affine', 'recipe')

# Largest table a recipe will build
MAX_RECIPE_ORDER = 4096


## Existence
def existence_recipe(k):
    """How to build a non-affine latin quandle of order 2^k, or None

    k = 6 and 6 | k use extension-6k, 4 | k (k >= 8) uses extension-4k,
    anything else takes a product with an affine latin quandle of order 4
    or 8. There is none for k <= 5 or k = 7.

    Returns : dict with key 'kind', or None
    """
    if k <= 5 or k == 7:
        return None
    if k == 6:
        return {'kind': 'extension-64'}
    if k % 4 == 0:
        return {'kind': 'extension-4k', 'j': k // 4}
    if k % 6 == 0:
        return {'kind': 'extension-6k', 'j': k // 6}
    inner = existence_recipe(k - 2)
    if inner is not None:
        return {'kind': 'product', 'left': inner, 'right': {'kind': 'affine', 'order': 4}}
    return {'kind': 'product', 'left': existence_recipe(k - 3),
        'right': {'kind': 'affine', 'order': 8}}

def describe_recipe(recipe):
    if recipe is None:
        return 'none'
    kind = recipe['kind']
    if kind == 'product':
        return f'{describe_recipe(recipe["left"])} x {describe_recipe(recipe["right"])}'
    if kind == 'affine':
        return f'affine-{recipe["order"]}'
    if 'j' in recipe:
        return f'{kind}(j={recipe["j"]})'
    return kind

def recipe_order(recipe):
    kind = recipe['kind']
    if kind == 'product':
        return recipe_order(recipe['left']) * recipe_order(recipe['right'])
    if kind == 'affine':
        return recipe['order']
    if kind == 'extension-64':
        return 64
    if kind == 'extension-4k':
        return 2 ** (4 * recipe['j'])
    return 2 ** (6 * recipe['j'])

def build_recipe(recipe, ring='dot1', params=None):
    if recipe_order(recipe) > MAX_RECIPE_ORDER:
        raise ValueError(
            f'{describe_recipe(recipe)} has order {recipe_order(recipe)}, '
            f'above {MAX_RECIPE_ORDER}')
    kind = recipe['kind']
    if kind == 'product':
        return direct_product(build_recipe(recipe['left'], ring, params),
            build_recipe(recipe['right'], ring, params))
    if kind == 'affine':
        return library.build_library(recipe['order'], params).members[0]
    if kind == 'extension-64':
        return extension_6k(1, ring)
    if kind == 'extension-4k':
        return extension_4k(recipe['j'], ring)
    return extension_6k(recipe['j'], ring)


## Onoi constructions
def _ring(ring):
    """A ring name or OnoiRing, checked against the Onoi ring axioms"""
    o = ring_by_name(ring) if isinstance(ring, str) else ring
    v = validate_onoi_ring(o)
    if v is not None:
        raise ValueError(f'{o!r} is not an Onoi ring: {v!r}')
    return o

def _nonzero_ring(ring):
    o = _ring(ring)
    if find_cube_nonzero(o) is None:
        raise ValueError(f'{o!r} has no e with e(ee) != 0')
    return o

def extension_6k(j, ring='dot1'):
    """Q((O^j)^2, O^j, split), order 64^j"""
    if j < 1:
        raise ValueError(f'j must be >= 1, got {j}')
    o = direct_power(_nonzero_ring(ring), j)
    mu = split_mapping(o)
    return quandle_QOOmu(mu.source, o, mu)

def extension_4k(j, ring='dot1', sigma=None):
    """Q(O^sigma, O^sigma, canonical), order 16^j; sigma swaps 1 and 2"""
    if j < 2:
        raise ValueError(f'j must be >= 2, got {j}')
    if sigma is None:
        sigma = (2, 1) + tuple(range(3, j + 1))
    sigma = tuple(sigma)
    if len(sigma) != j or sigma[0] != 2 or sigma[1] != 1:
        raise ValueError(f'sigma must have length {j} with sigma(1)=2, sigma(2)=1')
    os = power_sigma(_nonzero_ring(ring), j, sigma)
    return quandle_QOOmu(os, os, canonical_mapping(os))


## Properties
def property_summary(q, full_scan_max_order=512):
    """Latin, idempotent, left distributive, quandle and medial checks

    Tables above full_scan_max_order skip the O(n^3) left-distributivity
    scan (reported as None) and take latin to mean a latin quandle. Latin
    quandles are scanned for a medial witness with first element 0 only.
    """
    summary = {
        'order': q.order,
        'latin': is_latin(q),
        'idempotent': idempotency_violation(q) is None,
    }
    if q.order <= full_scan_max_order:
        summary['left_distributive'] = left_distributivity_violation(q) is None
        summary['quandle'] = quandle_violation(q) is None
        summary['scan'] = 'full'
        transitive = summary['latin'] and summary['quandle']
    else:
        summary['left_distributive'] = None
        summary['quandle'] = None
        summary['scan'] = 'partial'
        transitive = summary['latin']
    # left translations of a latin quandle move 0 to every element
    witness = find_medial_witness(q, first=[0] if transitive else None)
    summary['medial'] = witness is None
    summary['medial_witness'] = witness.witness if witness is not None else None
    return summary

def format_summary(summary):
    lines = []
    for key in ('order', 'scan', 'latin', 'idempotent', 'left_distributive',
        'quandle', 'medial', 'medial_witness'):
        value = summary[key]
        if value is None:
            value = 'not checked' if key != 'medial_witness' else '-'
        lines.append(f'{key}: {value}')
    return '\n'.join(lines)


def construct(kind, ring='dot1', sigma=None, j=None, k=None, group=None,
    psi=None, psi_class=0, left=None, right=None, params=None):
    """Build a table of the given kind

    Arguments
    ---------
    kind : one of KINDS
    ring : name of a four-element ring ('dot1', 'dot2', 'dot3') or an OnoiRing
    sigma : permutation for extension-256 / extension-4k, 1-based tuple
    j : number of factors for extension-4k and extension-6k
    k : exponent for recipe
    group, psi : AbelianGroup2 and EndoMatrix for affine; without psi the
        class representative number psi_class is used
    left, right : MagmaTable for product

    Returns : MagmaTable
    """
    if params is None:
        params = load_params.load_defaults()
    logger = logtools.get_logger('construct', params['log_level'])
    logger.debug(f'constructing {kind}')

    if kind == 'extension-64':
        return extension_6k(1, ring)
    if kind == 'extension-256':
        return extension_4k(2, ring, sigma)
    if kind == 'extension-4k':
        return extension_4k(j if j is not None else 2, ring, sigma)
    if kind == 'extension-6k':
        return extension_6k(j if j is not None else 1, ring)
    if kind == 'onoi-affine':
        return aff_of_onoi(_ring(ring))
    if kind == 'affine':
        if group is None:
            raise ValueError('affine needs a group')
        if psi is None:
            reps = admissible_class_reps(group)
            if not reps:
                raise ValueError(f'{group} has no admissible automorphism')
            if not 0 <= psi_class < len(reps):
                raise ValueError(f'{group} has {len(reps)} psi classes, got {psi_class}')
            psi = reps[psi_class]
        return affine_quandle(group, psi)
    if kind == 'product':
        if left is None or right is None:
            raise ValueError('product needs two tables')
        return direct_product(left, right)
    if kind == 'recipe':
        if k is None:
            raise ValueError('recipe needs k')
        recipe = existence_recipe(k)
        if recipe is None:
            raise ValueError(f'there is no non-affine latin quandle of order 2^{k}')
        logger.info(f'2^{k}: {describe_recipe(recipe)}')
        return build_recipe(recipe, ring, params)
    raise ValueError(f'unknown kind "{kind}"; use one of {", ".join(KINDS)}')
