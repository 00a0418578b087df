import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from twistsemi import family
from twistsemi.config import caps
from twistsemi.errors import CapExceeded, NotAGroup, NotAHomomorphism, ValidationError
from twistsemi.groups import check_group, cyclic, direct_product, symmetric, trivial_group
from twistsemi.homs import GroupHom, RingHom, brute_force_homs, hom_search
from twistsemi.rings import gf, matrix_ring, product, zmod


@pytest.mark.parametrize("G", [cyclic(5), direct_product(cyclic(2), cyclic(3)), symmetric(3), trivial_group()],
                         ids=lambda g: g.label)
def test_group_recipes_pass_oracle(G):
    assert oracles.group_axiom_failures(G.op.tolist(), G.identity) == []


def test_symmetric_group_convention():
    S3 = symmetric(3)
    assert not S3.is_abelian and sorted(S3.element_orders.tolist()) == [1, 2, 2, 2, 3, 3]
    perms = [tuple(itertools.permutations(range(3)))[g] for g in range(6)]
    for s, t in itertools.product(range(6), repeat=2):
        st_ = perms[S3.mul(s, t)]
        assert st_ == tuple(perms[s][perms[t][i]] for i in range(3))


def test_check_group_rejects_non_group():
    with pytest.raises(NotAGroup):
        check_group([[0, 1], [1, 1]])
    with pytest.raises(ValidationError):
        check_group([[0, 2], [1, 0]])


def test_group_cap():
    with caps(group=5):
        with pytest.raises(CapExceeded):
            cyclic(6)
        with pytest.raises(CapExceeded):
            symmetric(3)


def test_hom_counts():
    assert len(hom_search(zmod(4), zmod(2))) == 1
    assert len(hom_search(cyclic(2), symmetric(3))) == 4
    assert len(hom_search(gf(2, [1, 1, 1]), zmod(4))) == 0
    assert len(hom_search(cyclic(6), cyclic(6))) == 6


@pytest.mark.parametrize(
    "src, tgt",
    [(zmod(6), product(zmod(2), zmod(3))), (product(zmod(2), zmod(2)), zmod(2)), (zmod(4), zmod(4)),
     (gf(2, [1, 1, 1]), matrix_ring(zmod(2), 2)), (cyclic(4), direct_product(cyclic(2), cyclic(2))),
     (symmetric(3), cyclic(2)), (cyclic(3), symmetric(3))],
    ids=lambda x: x.label,
)
def test_search_matches_brute_force(src, tgt):
    fast = [h.table.tolist() for h in hom_search(src, tgt)]
    slow = [h.table.tolist() for h in brute_force_homs(src, tgt)]
    assert fast == slow


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_search_result_independent_of_seed(seed):
    src, tgt = cyclic(3), symmetric(3)
    base = [h.table.tolist() for h in hom_search(src, tgt)]
    assert [h.table.tolist() for h in hom_search(src, tgt, seed=seed)] == base


def test_constraints_and_injective():
    F4 = gf(2, [1, 1, 1])
    assert [h.table.tolist() for h in hom_search(F4, F4, {2: 3})] == [[0, 1, 3, 2]]
    assert hom_search(F4, F4, {2: [2, 3]}, injective=True)
    assert hom_search(F4, F4, {2: 1}) == []


def test_ring_hom_validation_and_composition():
    Z6, Z3 = zmod(6), zmod(3)
    with pytest.raises(NotAHomomorphism):
        RingHom(Z6, Z3, [0, 1, 1, 0, 1, 1])
    red = RingHom(Z6, Z3, [a % 3 for a in range(6)])
    assert red @ RingHom.identity(Z6) == red
    with pytest.raises(ValidationError):
        red @ red


def test_search_node_budget():
    with caps(search_nodes=1):
        with pytest.raises(CapExceeded) as info:
            hom_search(symmetric(4), symmetric(4))
    assert info.value.cap == "search_nodes"


def test_group_hom_witness():
    with pytest.raises(NotAHomomorphism) as info:
        GroupHom(cyclic(2), cyclic(2), [1, 0])
    assert info.value.witness is not None
