"""Ring and group homomorphisms, and backtracking homomorphism search."""
from __future__ import annotations

import functools
import itertools
from collections.abc import Iterable, Mapping

import numpy as np

from . import kernels
from ._util import frozen
from .closure import generating_set
from .config import get_caps, require
from .errors import CapExceeded, NotAHomomorphism, ValidationError
from .groups import FiniteGroup
from .rings import FiniteRing


def ring_hom_violation(source: FiniteRing, target: FiniteRing, table):
    """Return a description of the first failed hom law, or None.

    Exhaustive for table rings. For on-demand rings the check runs over
    ``source.spanning_set()``: additivity on (all, span) pairs and
    multiplicativity on span pairs, which is equivalent by bilinearity.
    """
    f = np.asarray(table)
    if f[source.one] != target.one:
        return ("one", source.one)
    if source.materialized and target.materialized:
        w = kernels.hom_violation(source.add_table, target.add_table, f)
        if w is not None:
            return ("add",) + w
        w = kernels.hom_violation(source.mul_table, target.mul_table, f)
        if w is not None:
            return ("mul",) + w
        return None
    span = np.asarray(source.spanning_set(), dtype=np.int64)
    ids = source.elements
    lhs = f[source.addv(ids[:, None], span[None, :])]
    rhs = target.addv(f[ids][:, None], f[span][None, :])
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        a, j = bad[0]
        return ("add", int(a), int(span[j]))
    lhs = f[source.mulv(span[:, None], span[None, :])]
    rhs = target.mulv(f[span][:, None], f[span][None, :])
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        i, j = bad[0]
        return ("mul", int(span[i]), int(span[j]))
    return None


def group_hom_violation(source: FiniteGroup, target: FiniteGroup, table):
    f = np.asarray(table)
    if f[source.identity] != target.identity:
        return ("identity", source.identity)
    w = kernels.hom_violation(source.op, target.op, f)
    return None if w is None else ("op",) + w


class _Hom:
    _violation = None

    def __init__(self, source, target, table, check=True):
        table = np.asarray(table)
        if table.shape != (source.order,):
            raise ValidationError(f"map table must have length {source.order}, got shape {table.shape}")
        if table.size and (table.min() < 0 or table.max() >= target.order):
            raise ValidationError("map value out of range")
        self.source = source
        self.target = target
        self.table = frozen(table, dtype=np.int64)
        if check:
            w = type(self)._violation(source, target, self.table)
            if w is not None:
                raise NotAHomomorphism(f"{w[0]} is not preserved at {w[1:]}", witness=w)

    def __call__(self, a):
        return int(self.table[a])

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and self.source == other.source
            and self.target == other.target
            and np.array_equal(self.table, other.table)
        )

    def __hash__(self):
        return hash((self.source.key, self.target.key, self.table.tobytes()))

    def __matmul__(self, inner):
        """``self @ inner`` is the composite ``self . inner``."""
        if inner.target != self.source:
            raise ValidationError("maps are not composable")
        return type(self)(inner.source, self.target, self.table[inner.table], check=False)

    @property
    def is_bijective(self):
        return self.source.order == self.target.order and len(np.unique(self.table)) == self.target.order

    def __repr__(self):
        return f"<{type(self).__name__} {self.source.label} -> {self.target.label} {self.table.tolist()}>"

    @classmethod
    def identity(cls, obj):
        return cls(obj, obj, np.arange(obj.order), check=False)


class RingHom(_Hom):
    _violation = staticmethod(ring_hom_violation)


class GroupHom(_Hom):
    _violation = staticmethod(group_hom_violation)


def _normalize(constraints):
    out = {}
    for k, v in (constraints or {}).items():
        if isinstance(v, Iterable) and not isinstance(v, (str, bytes)):
            out[int(k)] = sorted({int(x) for x in v})
        else:
            out[int(k)] = [int(v)]
    return out


def _structure(source, target):
    if isinstance(source, FiniteRing) and isinstance(target, FiniteRing):
        if not (source.materialized and target.materialized):
            require("materialize", max(source.order, target.order))
        pins = {source.zero: target.zero, source.one: target.one}
        return RingHom, source.ops, target.ops, pins, source.additive_orders, target.additive_orders
    if isinstance(source, FiniteGroup) and isinstance(target, FiniteGroup):
        pins = {source.identity: target.identity}
        return GroupHom, source.ops, target.ops, pins, source.element_orders, target.element_orders
    raise TypeError("hom_search needs two rings or two groups")


def hom_search(source, target, constraints: Mapping | None = None, *, injective=False, seed=None):
    """All homomorphisms ``source -> target`` satisfying ``constraints``.

    ``constraints`` maps a source element to a required image or to a
    collection of allowed images. The search assigns images to a greedy
    generating set, propagating each choice through the operation tables and
    pruning on the first conflict. ``seed`` randomizes the internal generator
    and candidate order; the returned list is canonical (sorted by table)
    regardless. Raises :class:`CapExceeded` if the node budget runs out.
    """
    kind, sops, tops, pins, sord, tord = _structure(source, target)
    n, m = source.order, target.order
    allowed = _normalize(constraints)
    rng = np.random.default_rng(seed) if seed is not None else None
    hs, ht = kernels.prepare(sops), kernels.prepare(tops)

    fmap = np.full(n, -1, dtype=np.int32)
    order = np.zeros(n, dtype=np.int32)
    used = np.full(m, -1, dtype=np.int32) if injective else None
    count = 0
    for a, b in pins.items():
        if fmap[a] != -1:
            if fmap[a] != b:
                return []
            continue
        if used is not None:
            if used[b] != -1:
                return []
            used[b] = a
        fmap[a] = b
        order[count] = a
        count += 1
    count, conflict = kernels.close_map(hs, ht, fmap, order, 0, count, used)
    if conflict is not None:
        return []

    base = list(pins) + sorted(allowed)
    gens = sorted(allowed) + generating_set(sops, n, base=base, rng=rng)
    cands = []
    for g in gens:
        pool = np.array(allowed[g]) if g in allowed else np.arange(m)
        if injective:
            pool = pool[tord[pool] == sord[g]]
        else:
            pool = pool[sord[g] % tord[pool] == 0]
        if rng is not None:
            pool = rng.permutation(pool)
        cands.append(pool.tolist())

    budget = get_caps().search_nodes
    nodes = 0
    found = []

    def rec(k, fmap, order, count, used):
        nonlocal nodes
        if k == len(gens):
            found.append(fmap.copy())
            return
        g = gens[k]
        if fmap[g] != -1:
            if g not in allowed or fmap[g] in allowed[g]:
                rec(k + 1, fmap, order, count, used)
            return
        for c in cands[k]:
            nodes += 1
            if nodes > budget:
                raise CapExceeded("search_nodes", budget, nodes)
            if used is not None and used[c] != -1:
                continue
            fm, od = fmap.copy(), order.copy()
            us = used.copy() if used is not None else None
            fm[g] = c
            od[count] = g
            if us is not None:
                us[c] = g
            got, conflict = kernels.close_map(hs, ht, fm, od, count, count + 1, us)
            if conflict is None:
                rec(k + 1, fm, od, got, us)

    rec(0, fmap, order, count, used)
    homs = [kind(source, target, t) for t in found]
    homs.sort(key=lambda h: h.table.tolist())
    return homs


def brute_force_homs(source, target, constraints: Mapping | None = None, *, injective=False, limit=2_000_000):
    """Reference enumeration over every value table (only for tiny structures)."""
    kind, _, _, pins, _, _ = _structure(source, target)
    allowed = _normalize(constraints)
    for a, b in pins.items():
        allowed[a] = [b] if a not in allowed or b in allowed[a] else []
    free = list(range(source.order))
    pools = [allowed.get(a, range(target.order)) for a in free]
    total = functools.reduce(lambda x, p: x * len(p), pools, 1)
    if total > limit:
        raise CapExceeded("brute_force", limit, total)
    out = []
    for values in itertools.product(*pools):
        if injective and len(set(values)) != len(values):
            continue
        if kind._violation(source, target, np.array(values)) is None:
            out.append(kind(source, target, values, check=False))
    out.sort(key=lambda h: h.table.tolist())
    return out
