import numpy as np
import pytest

from quandlepilot.algebra.quandles import is_isomorphic
from quandlepilot.algebra.onoi import (OnoiRing, OnoiMapping, ALPHA_4,
    validate_onoi_ring, four_element_rings, ring_by_name, ring_isomorphism,
    classify_onoi_rings, onoi_ring_isomorphism_counts, power_sigma,
    direct_power, matrix_ring, canonical_mapping, split_mapping,
    validate_onoi_mapping, check_mu_identities, diagonal_table,
    find_cube_nonzero, aff_of_onoi)


## Rings
@pytest.mark.parametrize('name', ['zero', 'dot1', 'dot2', 'dot3'])
def test_four_element_rings_are_valid(name):
    o = ring_by_name(name)
    assert validate_onoi_ring(o) is None
    assert o.dim == 2
    assert o.alpha.tolist() == list(ALPHA_4)

def test_four_element_tables():
    assert ring_by_name('dot1').mul[1, 2] == 3
    assert ring_by_name('dot2').mul[1, 1] == 3
    with pytest.raises(ValueError):
        ring_by_name('dot4')

def test_identity_alpha_is_rejected():
    o = OnoiRing(ring_by_name('dot1').mul, [0, 1, 2, 3])
    assert validate_onoi_ring(o).axiom == 'alpha_cubic'

def test_non_distributive_is_rejected():
    mul = np.array(ring_by_name('dot1').mul, dtype=np.int64)
    mul[1, 3] = 0
    v = validate_onoi_ring(OnoiRing(mul, ALPHA_4))
    assert v.axiom == 'left_distributive'

def test_zero_ring():
    o = OnoiRing.zero(4)
    assert validate_onoi_ring(o) is None
    assert not o.mul.any()
    with pytest.raises(ValueError):
        OnoiRing.zero(3)

def test_alpha_matrix_round_trip():
    o = ring_by_name('dot3')
    again = OnoiRing.from_alpha_matrix(o.mul, o.alpha_matrix())
    assert again == o
    assert o.alpha_endo().order() == 3


## Classification
def test_classify_dims():
    assert len(classify_onoi_rings(0)) == 1
    assert classify_onoi_rings(1) == []
    assert len(classify_onoi_rings(2)) == 4
    with pytest.raises(ValueError):
        classify_onoi_rings(4)

def test_isomorphism_counts():
    assert onoi_ring_isomorphism_counts(2) == {'alpha': 4, 'ring': 3}

def test_named_rings_pairwise_non_isomorphic():
    rings = four_element_rings()
    for i, o1 in enumerate(rings):
        for o2 in rings[i + 1:]:
            assert ring_isomorphism(o1, o2) is None
    f = ring_isomorphism(rings[1], rings[1])
    assert f is not None

def test_classification_covers_named_rings():
    reps = classify_onoi_rings(2)
    for o in four_element_rings():
        assert sum(ring_isomorphism(r, o) is not None for r in reps) == 1


## Constructions
def test_power_sigma_swap_is_valid():
    o = power_sigma(ring_by_name('dot1'), 2, (2, 1))
    assert o.dim == 4
    assert validate_onoi_ring(o) is None

def test_direct_power_is_componentwise():
    o = ring_by_name('dot1')
    sq = direct_power(o, 2)
    assert validate_onoi_ring(sq) is None
    for a in range(16):
        for b in range(16):
            expected = o.mul[a // 4, b // 4] * 4 + o.mul[a % 4, b % 4]
            assert sq.mul[a, b] == expected

def test_power_sigma_rejects_non_permutation():
    with pytest.raises(ValueError):
        power_sigma(ring_by_name('dot1'), 2, (1, 1))

def test_matrix_ring():
    o = ring_by_name('dot1')
    assert matrix_ring(o, 1) == OnoiRing(o.mul, o.alpha)
    z = matrix_ring(ring_by_name('zero'), 2)
    assert z.dim == 8 and not z.mul.any()
    m = matrix_ring(o, 2)
    assert validate_onoi_ring(m) is None

def test_find_cube_nonzero():
    assert find_cube_nonzero(ring_by_name('dot1')) == 1
    assert find_cube_nonzero(ring_by_name('dot2')) == 1
    assert find_cube_nonzero(ring_by_name('zero')) is None

def test_aff_of_onoi_is_the_order4_quandle(q4):
    for o in four_element_rings():
        assert is_isomorphic(aff_of_onoi(o), q4) is not None
    assert aff_of_onoi(OnoiRing.from_basis(0, [], [])).order == 1


## Mappings
@pytest.mark.parametrize('name', ['zero', 'dot1', 'dot2', 'dot3'])
def test_canonical_and_split_mappings_are_valid(name):
    o = ring_by_name(name)
    assert validate_onoi_mapping(canonical_mapping(o)) is None
    assert validate_onoi_mapping(split_mapping(o)) is None

def test_canonical_over_power_sigma_is_valid():
    squared = power_sigma(ring_by_name('dot2'), 2, (2, 1))
    assert validate_onoi_mapping(canonical_mapping(squared)) is None

def test_split_mapping_values():
    o = ring_by_name('dot1')
    mu = split_mapping(o)
    e = find_cube_nonzero(o)
    # (x, y) has index 4x + y
    assert mu(e, e, 4 * e) == o.mul[e, o.mul[e, e]]
    assert mu(e, 4 * e, e) == 0
    assert np.array_equal(mu.slice(e)[:, :4], np.zeros((16, 4)))

def test_zero_ring_gives_zero_mapping():
    mu = canonical_mapping(ring_by_name('zero'))
    assert not mu.values.any()
    assert check_mu_identities(mu) == []

def test_mapping_that_is_not_trilinear():
    o = ring_by_name('dot1')
    mul = o.mul
    mu = OnoiMapping.from_function(o, o, lambda a, b, c: mul[a, b])
    assert validate_onoi_mapping(mu).axiom == 'trilinear'

def test_perturbed_mapping_breaks_om():
    o = ring_by_name('dot1')
    values = np.array(canonical_mapping(o).values)
    values[0, 0, 0] ^= 1
    v = validate_onoi_mapping(OnoiMapping(o, o, values))
    assert v is not None and v.axiom in ('OM1', 'OM2', 'OM3')

def test_mapping_table_matches_call():
    mu = split_mapping(ring_by_name('dot3'))
    table = mu.table()
    rng = np.random.default_rng(5)
    for a, b, c in rng.integers(0, 16, size=(50, 3)):
        assert table[a, b, c] == mu(a, b, c)

def test_split_breaks_mu2():
    mu = split_mapping(ring_by_name('dot1'))
    axioms = [v.axiom for v in check_mu_identities(mu)]
    assert 'mu2' in axioms
    d = diagonal_table(mu)
    assert d.shape == (16, 16)
