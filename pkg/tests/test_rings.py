import itertools

import numpy as np
import pytest

import oracles
from twistsemi.config import caps
from twistsemi.errors import CapExceeded, NoIdentity, NotAbelianAddition, NotAssociative, NotDistributive, ValidationError
from twistsemi.rings import check_ring, enumerate_units, gf, matrix_ring, poly_quotient, product, subring, zmod


def test_zmod_tables():
    R = zmod(6)
    assert R.add(4, 5) == 3 and R.mul(4, 5) == 2
    assert R.neg(2) == 4 and R.power(5, 2) == 1


@pytest.mark.parametrize("R", [zmod(6), gf(2, [1, 1, 1]), gf(3, [1, 0, 1]), poly_quotient(2, [0, 0, 1]),
                               product(zmod(2), zmod(3)), matrix_ring(zmod(2), 2)], ids=lambda r: r.label)
def test_recipes_satisfy_axioms_by_oracle(R):
    add, mul = oracles.tables(R)
    assert oracles.ring_axiom_failures(add, mul, R.zero, R.one) == []


def test_gf4_names_and_frobenius():
    F4 = gf(2, [1, 1, 1])
    assert [F4.name(a) for a in range(4)] == ["0", "1", "x", "x+1"]
    assert F4.mul(2, 2) == 3  # x^2 = x + 1
    assert all(F4.power(a, 4) == a for a in range(4))


def test_gf_rejects_reducible_and_composite():
    with pytest.raises(ValidationError):
        gf(2, [1, 0, 1])
    with pytest.raises(ValidationError):
        gf(4, [1, 1, 1])


def test_units():
    assert len(enumerate_units(zmod(4))) == 2
    assert len(enumerate_units(matrix_ring(zmod(2), 2))) == 6
    F9 = gf(3, [1, 0, 1])
    u = enumerate_units(F9)
    assert len(u) == 8
    assert all(F9.mul(a, int(u.inverse[a])) == F9.one for a in u)
    assert 0 not in u


@pytest.mark.parametrize("R", [zmod(8), matrix_ring(zmod(2), 2), product(zmod(2), zmod(4))], ids=lambda r: r.label)
def test_units_match_oracle(R):
    assert list(enumerate_units(R)) == oracles.units(R)


def _z2_add():
    return [[0, 1], [1, 0]]


@pytest.mark.parametrize(
    "add, mul, exc",
    [
        ([[0, 1], [0, 1]], [[0, 0], [0, 1]], NotAbelianAddition),
        (_z2_add(), [[0, 0], [0, 0]], NoIdentity),
        ([[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]],
         [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 3]], NotAssociative),
        (_z2_add(), [[1, 0], [0, 1]], NotDistributive),
    ],
)
def test_check_ring_rejects(add, mul, exc):
    with pytest.raises(exc) as info:
        check_ring(add, mul)
    assert isinstance(info.value, ValidationError)


def test_non_distributive_witness():
    add = [[(a + b) % 3 for b in range(3)] for a in range(3)]
    mul = [[0, 0, 0], [0, 1, 2], [0, 2, 2]]
    with pytest.raises((NotDistributive, NotAssociative)) as info:
        check_ring(add, mul, 0, 1)
    assert len(info.value.witness) == 3


def test_product_and_matrix_orders():
    assert product(zmod(2), zmod(3), zmod(5)).order == 30
    assert not matrix_ring(zmod(2), 2).is_commutative
    assert product(zmod(2), zmod(2)).is_commutative


def test_subring_upper_triangular():
    M = matrix_ring(zmod(2), 2)
    T = subring(M, [e for e in range(M.order) if (e >> 1) & 1 == 0])
    assert T.order == 8 and not T.is_commutative
    with pytest.raises(ValidationError):
        subring(M, [0, 1, 2])


def test_additive_orders():
    R = product(zmod(2), zmod(4))
    assert sorted(set(R.additive_orders.tolist())) == [1, 2, 4]


def test_ring_cap():
    with caps(ring=10):
        with pytest.raises(CapExceeded) as info:
            zmod(11)
    assert info.value.cap == "ring" and info.value.limit == 10
    with pytest.raises(ValueError):
        with caps(nonsense=1):
            pass


def test_tables_are_read_only():
    R = zmod(3)
    with pytest.raises(ValueError):
        R.add_table[0, 0] = 1


def test_shuffled_relabeling_is_still_a_ring():
    R = gf(2, [1, 1, 1])
    rng = np.random.default_rng(3)
    p = rng.permutation(R.order)
    inv = np.argsort(p)
    add = p[R.add_table[np.ix_(inv, inv)]]
    mul = p[R.mul_table[np.ix_(inv, inv)]]
    S = check_ring(add, mul)
    assert S.zero == p[R.zero] and S.one == p[R.one]
    for a, b in itertools.product(range(4), repeat=2):
        assert S.mul(p[a], p[b]) == p[R.mul(a, b)]
