"""Finite groups as Cayley tables."""
from __future__ import annotations

import functools
import math
import itertools

import numpy as np

from . import kernels
from ._util import digest, frozen, from_digits, to_digits
from .config import require
from .errors import NotAGroup, ValidationError
from .closure import generating_set


class FiniteGroup:
    def __init__(self, op, identity, label="", names=None):
        self.op = frozen(op)
        self.order = int(self.op.shape[0])
        self.identity = int(identity)
        self.label = label
        self._names = names
        a, b = np.nonzero(self.op == self.identity)
        inv = np.empty(self.order, dtype=np.int32)
        inv[a] = b
        self.inv = frozen(inv)

    def __repr__(self):
        return f"<FiniteGroup {self.label or '?'} order={self.order}>"

    def __len__(self):
        return self.order

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    @functools.cached_property
    def key(self):
        return digest("group", self.identity, self.op)

    @property
    def elements(self):
        return np.arange(self.order)

    @property
    def ops(self):
        return self.op[None]

    def name(self, g):
        if self._names is None:
            return str(int(g))
        return self._names[int(g)]

    def mul(self, g, h):
        return int(self.op[g, h])

    def power(self, g, k):
        out = self.identity
        for _ in range(k):
            out = self.mul(out, g)
        return out

    @functools.cached_property
    def element_orders(self):
        orders = np.zeros(self.order, dtype=np.int64)
        acc = np.full(self.order, self.identity)
        for k in range(1, self.order + 1):
            acc = self.op[acc, np.arange(self.order)]
            orders[(orders == 0) & (acc == self.identity)] = k
        return orders

    @functools.cached_property
    def generators(self):
        return tuple(generating_set(self.ops, self.order, base=(self.identity,)))

    @functools.cached_property
    def is_abelian(self):
        return kernels.commut_violation(self.op) is None


def check_group(op, identity=None, label="", names=None, cap="group") -> FiniteGroup:
    op = np.asarray(op)
    if op.ndim != 2 or op.shape[0] != op.shape[1] or op.shape[0] == 0:
        raise ValidationError(f"group table must be square and non-empty, got shape {op.shape}")
    n = op.shape[0]
    if cap:
        require(cap, n)
    if op.min() < 0 or op.max() >= n:
        raise ValidationError("group table entry out of range")
    ar = np.arange(n)
    ids = [e for e in range(n) if np.array_equal(op[e], ar) and np.array_equal(op[:, e], ar)]
    if identity is None:
        if not ids:
            raise NotAGroup("no identity element")
        identity = ids[0]
    elif identity not in ids:
        raise NotAGroup(f"{identity} is not an identity element", witness=(identity,))
    w = kernels.assoc_violation(op)
    if w is not None:
        raise NotAGroup(f"operation is not associative at {w}", witness=w)
    left = (op == identity).any(axis=1)
    right = (op == identity).any(axis=0)
    if not (left.all() and right.all()):
        g = int(np.argmin(left & right))
        raise NotAGroup(f"element {g} has no inverse", witness=(g,))
    return FiniteGroup(op, identity, label=label, names=names)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValidationError(f"cyclic group order must be positive, got {n}")
    require("group", n)
    ar = np.arange(n)
    names = ["e", "g"] + [f"g^{k}" for k in range(2, n)]
    return check_group((ar[:, None] + ar) % n, 0, label=f"C{n}", names=names[:n])


def trivial_group() -> FiniteGroup:
    return check_group([[0]], 0, label="1", names=["e"])


def direct_product(*groups: FiniteGroup) -> FiniteGroup:
    radices = [g.order for g in groups]
    size = int(np.prod(radices))
    require("group", size)
    dig = to_digits(np.arange(size), radices)
    out = np.empty((size, size, len(groups)), dtype=np.int64)
    for k, g in enumerate(groups):
        out[..., k] = g.op[dig[:, None, k], dig[None, :, k]]
    names = ["(" + ",".join(g.name(x) for g, x in zip(groups, row)) + ")" for row in dig]
    ident = from_digits([g.identity for g in groups], radices)
    return check_group(from_digits(out, radices), int(ident), label=" x ".join(g.label for g in groups), names=names)


def symmetric(n: int) -> FiniteGroup:
    """``S_n`` on one-line permutations in lexicographic order; ``(st)(i) = s(t(i))``."""
    require("group", math.factorial(n))
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    op = [[index[tuple(s[t[i]] for i in range(n))] for t in perms] for s in perms]
    names = ["[" + ",".join(map(str, p)) + "]" for p in perms]
    return check_group(op, 0, label=f"S{n}", names=names)
