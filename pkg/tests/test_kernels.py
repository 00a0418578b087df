import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twistsemi import kernels
from twistsemi.closure import closure, generating_set
from twistsemi.rings import gf, matrix_ring, product, zmod

BACKENDS = kernels.backends()


def test_cython_backend_is_built():
    # the compiled extension is the default unless explicitly disabled
    assert "cython" in BACKENDS
    assert kernels.BACKEND in BACKENDS


def square_tables(max_n=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n)
    )


def _i32(t):
    return np.ascontiguousarray(t, dtype=np.int32)


@settings(max_examples=150, deadline=None)
@given(square_tables())
def test_assoc_and_commut_agree_across_backends(t):
    t = _i32(t)
    results = {name: (mod.assoc_violation(t), mod.commut_violation(t)) for name, mod in BACKENDS.items()}
    assert len(set(map(repr, results.values()))) == 1


def _naive_assoc(t):
    n = len(t)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if t[t[a][b]][c] != t[a][t[b][c]]:
                    return (a, b, c)
    return None


@settings(max_examples=100, deadline=None)
@given(square_tables(5))
def test_assoc_matches_first_naive_witness(t):
    for mod in BACKENDS.values():
        w = mod.assoc_violation(_i32(t))
        assert w == _naive_assoc(t)


@settings(max_examples=100, deadline=None)
@given(square_tables(4), st.randoms(use_true_random=False))
def test_distrib_agrees_across_backends(add, rnd):
    n = len(add)
    mul = [[rnd.randrange(n) for _ in range(n)] for _ in range(n)]
    out = {repr(mod.distrib_violation(_i32(add), _i32(mul))) for mod in BACKENDS.values()}
    assert len(out) == 1


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_clean_ring_tables_have_no_violations(name):
    mod = BACKENDS[name]
    R = matrix_ring(zmod(2), 2)
    add, mul = _i32(R.add_table), _i32(R.mul_table)
    assert mod.assoc_violation(mul) is None
    assert mod.distrib_violation(add, mul) is None
    assert mod.commut_violation(mul) is not None  # M2 is not commutative
    f = np.arange(R.order, dtype=np.int32)
    assert mod.hom_violation(mul, mul, f) is None
    assert mod.hom_violation(add, add, f) is None


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_hom_violation_reports_first_bad_pair(name):
    mod = BACKENDS[name]
    Z4 = zmod(4)
    add = _i32(Z4.add_table)
    f = np.array([0, 1, 1, 1], dtype=np.int32)
    assert mod.hom_violation(add, add, f) == (1, 1)  # f(1+1) = 1 but f(1)+f(1) = 2


def test_close_map_agrees_across_backends():
    R = gf(2, [1, 1, 0, 1])
    results = []
    for mod in BACKENDS.values():
        ops = mod.prepare(_i32(R.ops))
        fmap = np.full(R.order, -1, dtype=np.int32)
        order = np.zeros(R.order, dtype=np.int32)
        fmap[0], fmap[1], fmap[2] = 0, 1, 4  # x -> x^2
        order[:3] = [0, 1, 2]
        used = np.full(R.order, -1, dtype=np.int32)
        used[[0, 1, 4]] = [0, 1, 2]
        count, conflict = mod.close_map(ops, ops, fmap, order, 0, 3, used)
        results.append((count, conflict, fmap.tolist()))
    assert all(r == results[0] for r in results)
    count, conflict, fmap = results[0]
    assert conflict is None and count == R.order and sorted(fmap) == list(range(R.order))


def test_closure_and_generating_set():
    R = zmod(12)
    assert np.nonzero(closure(R.ops[:1], [4], R.order))[0].tolist() == [0, 4, 8]
    assert generating_set(R.ops, R.order, base=[0, 1]) == []
    A = zmod(2)
    S = product(A, A, A)
    gens = generating_set(S.ops, S.order, base=[S.zero, S.one])
    assert closure(S.ops, [S.zero, S.one, *gens], S.order).all()
    assert len(gens) == 2
