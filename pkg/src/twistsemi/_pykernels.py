"""Pure-Python/numpy implementations of the hot kernels.

Same signatures and results as the compiled ``_ckernels`` module; selected
by ``twistsemi.kernels`` when the extension is unavailable.
"""
import numpy as np

BACKEND = "python"

_CHUNK = 1 << 20


def _first(mask):
    idx = np.argwhere(mask)
    return tuple(int(v) for v in idx[0]) if len(idx) else None


def _blocks(n):
    step = max(1, _CHUNK // max(1, n * n))
    for lo in range(0, n, step):
        yield lo, min(n, lo + step)


def assoc_violation(t):
    n = t.shape[0]
    ar = np.arange(n)
    for lo, hi in _blocks(n):
        a = ar[lo:hi, None, None]
        ab = t[a, ar[None, :, None]]
        lhs = t[ab, ar[None, None, :]]
        bc = t[ar[:, None], ar[None, :]]
        rhs = t[a, bc[None, :, :]]
        hit = _first(lhs != rhs)
        if hit is not None:
            return (hit[0] + lo, hit[1], hit[2])
    return None


def commut_violation(t):
    return _first(t != t.T)


def distrib_violation(add, mul):
    n = add.shape[0]
    ar = np.arange(n)
    b = ar[None, :, None]
    c = ar[None, None, :]
    for lo, hi in _blocks(n):
        a = ar[lo:hi, None, None]
        left = mul[a, add[b, c]] != add[mul[a, b], mul[a, c]]
        right = mul[add[a, b], c] != add[mul[a, c], mul[b, c]]
        bad = left | right
        hit = _first(bad)
        if hit is not None:
            side = "left" if left[hit] else "right"
            return (side, hit[0] + lo, hit[1], hit[2])
    return None


def hom_violation(src, tgt, f):
    lhs = f[src]
    rhs = tgt[f[:, None], f[None, :]]
    return _first(lhs != rhs)


def prepare(ops):
    """Convert a stack of operation tables into the backend's working form."""
    return [row for row in np.asarray(ops).tolist()]


def close_map(src, tgt, fmap, order, processed, count, used):
    """Propagate a partial map through the operations until closed.

    ``src``/``tgt`` are prepared op stacks; ``fmap`` (-1 = unknown), ``order``
    and ``used`` are int32 arrays updated in place. ``used`` may be None;
    when given, a collision of images is a conflict (injective search).
    Returns ``(count, conflict)`` where conflict is None or
    ``(op, x, y, c, existing, computed)``.
    """
    fm = fmap.tolist()
    od = order.tolist()
    us = used.tolist() if used is not None else None
    nops = len(src)
    conflict = None
    i = processed
    while i < count and conflict is None:
        a = od[i]
        for j in range(i + 1):
            b = od[j]
            for k in range(nops):
                s = src[k]
                t = tgt[k]
                pairs = ((a, b),) if j == i else ((a, b), (b, a))
                for x, y in pairs:
                    c = s[x][y]
                    img = t[fm[x]][fm[y]]
                    cur = fm[c]
                    if cur == -1:
                        if us is not None and us[img] != -1:
                            conflict = (k, x, y, c, -1, img)
                            break
                        fm[c] = img
                        if us is not None:
                            us[img] = c
                        od[count] = c
                        count += 1
                    elif cur != img:
                        conflict = (k, x, y, c, cur, img)
                        break
                if conflict:
                    break
            if conflict:
                break
        i += 1
    fmap[:] = fm
    order[:] = od
    if us is not None:
        used[:] = us
    return count, conflict
