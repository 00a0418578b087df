"""Closure of element sets under operation tables, and greedy generating sets."""
import numpy as np

from . import kernels


def closure(ops, start, n):
    """Closure of ``start`` under the stacked binary operations ``ops``."""
    h = kernels.prepare(ops)
    fmap = np.full(n, -1, dtype=np.int32)
    order = np.zeros(n, dtype=np.int32)
    count = 0
    for s in dict.fromkeys(int(x) for x in start):
        fmap[s] = s
        order[count] = s
        count += 1
    count, _ = kernels.close_map(h, h, fmap, order, 0, count)
    return fmap != -1


def generating_set(ops, n, base=(), rng=None):
    """Greedy small generating set for the structure with op tables ``ops``.

    ``base`` is always included (but not returned); each step adds the
    element whose inclusion enlarges the closure most, ties to the lowest id
    (or a random tie order when ``rng`` is given).
    """
    h = kernels.prepare(ops)
    fmap = np.full(n, -1, dtype=np.int32)
    order = np.zeros(n, dtype=np.int32)
    count = 0
    for s in dict.fromkeys(int(x) for x in base):
        fmap[s] = s
        order[count] = s
        count += 1
    count, _ = kernels.close_map(h, h, fmap, order, 0, count)
    gens = []
    while count < n:
        pool = np.nonzero(fmap == -1)[0]
        if rng is not None:
            pool = rng.permutation(pool)
        best = None
        for c in pool:
            fm, od = fmap.copy(), order.copy()
            fm[c] = c
            od[count] = c
            got, _ = kernels.close_map(h, h, fm, od, count, count + 1)
            if best is None or got > best[0]:
                best = (got, int(c), fm, od)
            if got == n:
                break
        count, c, fmap, order = best
        gens.append(c)
    return gens
