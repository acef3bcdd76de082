import numpy as np
import pytest

from quandlepilot.algebra.groups import AbelianGroup2, EndoMatrix, admissible_class_reps
from quandlepilot.algebra.quandles import (MagmaTable, Violation,
    MedialityWitness, is_latin, is_idempotent, idempotency_violation,
    left_distributivity_violation, is_left_distributive, quandle_violation,
    is_quandle, find_medial_witness, is_medial, is_homomorphism,
    affine_quandle, direct_product, fingerprint, is_isomorphic)
from quandlepilot.search.constructions import extension_6k


def _nonmedial_latin_quandle():
    """The order-64 extension built from the dot1 ring"""
    return extension_6k(1, 'dot1')


## Tables
def test_table_validation():
    with pytest.raises(ValueError):
        MagmaTable([[0, 1]])
    with pytest.raises(ValueError):
        MagmaTable([[0, 2], [1, 0]])
    q = MagmaTable([[0]])
    assert q.order == 1
    with pytest.raises(ValueError):
        q.table[0, 0] = 0


## Predicates
def test_latin(q4, q1):
    assert is_latin(q4)
    assert is_latin(q1)
    assert not is_latin(MagmaTable([[0, 0], [0, 0]]))

def test_predicates_on_affine(q4, q3):
    for q in (q4, q3):
        assert is_idempotent(q)
        assert is_left_distributive(q)
        assert is_quandle(q)
        assert is_medial(q) is True

def test_idempotency_witness():
    q = MagmaTable([[1, 0], [0, 1]])
    assert not is_idempotent(q)
    assert idempotency_violation(q) == Violation('idempotent', (0,))
    assert quandle_violation(q).axiom == 'idempotent'

def test_left_distributivity_witness():
    # x * y = x is idempotent and left distributive with constant translations
    q = MagmaTable([[0, 0, 0], [1, 1, 1], [2, 2, 2]])
    assert is_left_distributive(q)
    assert quandle_violation(q).axiom == 'left_translation'

    # the latin square of Z_3 addition is not left distributive
    x = np.arange(3)
    q = MagmaTable((x[:, None] + x[None, :]) % 3)
    v = left_distributivity_violation(q)
    assert v is not None and v.axiom == 'left_distributive'
    a, b, c = v.witness
    t = q.table
    assert t[a, t[b, c]] != t[t[a, b], t[a, c]]

def test_medial_witness_on_extension():
    q = _nonmedial_latin_quandle()
    assert is_quandle(q) and is_latin(q)
    w = is_medial(q)
    assert isinstance(w, MedialityWitness)
    assert w.holds_in(q)
    # latin quandles have a witness with a = 0
    w0 = find_medial_witness(q, first=[0])
    assert w0 is not None and w0.witness[0] == 0

def test_medial_witness_is_lexicographically_first():
    q = _nonmedial_latin_quandle()
    w = find_medial_witness(q)
    a, b, c, d = w.witness
    t = q.table.astype(np.int64)
    for bb in range(b):
        row = t[t[a, bb], t]
        other = t[t[a][:, None], t[bb][None, :]]
        assert np.array_equal(row, other)


## Affine quandles and products
def test_affine_quandle_from_example_psi():
    g = AbelianGroup2((1, 1))
    psi = EndoMatrix(g, [[1, 1], [1, 0]])
    q = affine_quandle(g, psi)
    assert is_latin(q) and is_quandle(q)
    assert is_isomorphic(q, affine_quandle(g, psi @ psi)) is not None

def test_affine_rejects_inadmissible():
    g = AbelianGroup2((2,))
    with pytest.raises(ValueError):
        affine_quandle(g, EndoMatrix(g, [[3]]))
    with pytest.raises(ValueError):
        affine_quandle(g, EndoMatrix.identity(g))

def test_affine_trivial_group():
    g = AbelianGroup2(())
    q = affine_quandle(g, EndoMatrix.identity(g))
    assert q.order == 1

def test_two_order8_quandles_differ():
    g = AbelianGroup2((1, 1, 1))
    x, y = admissible_class_reps(g)
    p, q = affine_quandle(g, x), affine_quandle(g, y)
    assert is_latin(p) and is_latin(q)
    assert is_isomorphic(p, q) is None

def test_direct_product(q4, q1, q3):
    p = direct_product(q4, q1)
    assert is_isomorphic(p, q4) is not None
    pq = direct_product(q4, q3)
    assert pq.order == 12
    assert is_quandle(pq) and is_latin(pq) and is_medial(pq) is True
    # (a, s) * (b, t) = (a * b, s * t)
    assert pq.table[1 * 3 + 2, 3 * 3 + 0] == q4.table[1, 3] * 3 + q3.table[2, 0]

def test_product_with_nonmedial_is_nonmedial(q4):
    q = direct_product(q4, _nonmedial_latin_quandle())
    assert q.order == 256
    assert is_latin(q)
    assert find_medial_witness(q, first=[0]) is not None


## Isomorphism
def test_isomorphic_self(q4):
    f = is_isomorphic(q4, q4)
    assert f is not None
    assert is_homomorphism(q4, q4, f)

def test_isomorphic_orders_differ(q4, q3):
    assert is_isomorphic(q4, q3) is None

def test_isomorphic_relabelled():
    g = AbelianGroup2((1, 1, 1))
    q = affine_quandle(g, admissible_class_reps(g)[0])
    rng = np.random.default_rng(3)
    perm = rng.permutation(q.order)
    inv = np.argsort(perm)
    # relabel x -> perm[x]
    relabelled = MagmaTable(perm[q.table[inv[:, None], inv[None, :]]])
    f = is_isomorphic(q, relabelled)
    assert f is not None
    assert is_homomorphism(q, relabelled, f)

def test_fingerprint_is_invariant():
    g = AbelianGroup2((1, 1, 1))
    p = affine_quandle(g, admissible_class_reps(g)[0])
    perm = np.roll(np.arange(8), 3)
    inv = np.argsort(perm)
    relabelled = MagmaTable(perm[p.table[inv[:, None], inv[None, :]]])
    assert fingerprint(p) == fingerprint(relabelled)
    assert fingerprint(p).startswith('8:')
