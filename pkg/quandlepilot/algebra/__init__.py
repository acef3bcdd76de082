"""The algebra workers. Nothing here logs; functions return or raise.

groups.py
    Finite abelian 2-groups, their endomorphisms as integer matrices,
    admissible automorphisms and conjugacy class representatives.

modlinalg.py
    Matrices over Z/2^e and their kernels: GF(2) bitset elimination, the
    Howell form, and two oracles (integer lifting, brute force).

quandles.py
    MagmaTable and the latin/idempotent/left-distributive/medial
    predicates, affine quandles, products and isomorphism testing.

onoi.py
    Onoi rings and Onoi mappings, the four-element rings, powers and
    matrix rings, the canonical and split mappings.

extensions.py
    Central extensions Q x_{phi,psi,theta} A, the (LD) and (M) cocycle
    conditions and the Q(O1, O2, mu) construction.
"""
