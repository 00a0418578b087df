"""Finite unital rings stored as operation tables, and the standard recipes."""
from __future__ import annotations

import functools
import itertools

import numpy as np

from . import kernels
from ._util import digest, frozen, from_digits, to_digits
from .config import require
from .errors import (
    NoIdentity,
    NotAbelianAddition,
    NotAssociative,
    NotDistributive,
    ValidationError,
)


class FiniteRing:
    """A finite ring with identity on element ids ``0 .. order-1``.

    Table-backed by default. Subclasses may compute operations on demand
    (see :class:`LazyRing`); all algorithms go through :meth:`addv` and
    :meth:`mulv`, which broadcast over numpy arrays of ids.
    """

    materialized = True

    def __init__(self, add, mul, zero, one, label="", names=None):
        self._add = frozen(add)
        self._mul = frozen(mul)
        self.order = int(self._add.shape[0])
        self.zero = int(zero)
        self.one = int(one)
        self.label = label
        self._names = names

    def __repr__(self):
        return f"<FiniteRing {self.label or '?'} order={self.order}>"

    def __len__(self):
        return self.order

    def __eq__(self, other):
        return isinstance(other, FiniteRing) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    @functools.cached_property
    def key(self):
        return digest("ring", self.order, self.zero, self.one, self._add, self._mul)

    @property
    def elements(self):
        return np.arange(self.order)

    @property
    def add_table(self):
        return self._add

    @property
    def mul_table(self):
        return self._mul

    def name(self, a):
        if self._names is None:
            return str(int(a))
        if callable(self._names):
            return self._names(int(a))
        return self._names[int(a)]

    def addv(self, a, b):
        return self._add[a, b]

    def mulv(self, a, b):
        return self._mul[a, b]

    def add(self, a, b):
        return int(self.addv(a, b))

    def mul(self, a, b):
        return int(self.mulv(a, b))

    @functools.cached_property
    def neg_table(self):
        a, b = np.nonzero(self.add_table == self.zero)
        out = np.empty(self.order, dtype=np.int32)
        out[a] = b
        return frozen(out)

    def neg(self, a):
        return int(self.neg_table[a])

    def spanning_set(self):
        """Ids whose additive span is the whole ring (all ids, for tables)."""
        return self.elements

    @functools.cached_property
    def additive_orders(self):
        orders = np.zeros(self.order, dtype=np.int64)
        acc = np.full(self.order, self.zero, dtype=np.int64)
        ids = self.elements
        for k in range(1, self.order + 1):
            acc = self.addv(acc, ids)
            newly = (orders == 0) & (acc == self.zero)
            orders[newly] = k
            if orders.all():
                break
        return orders

    @property
    def ops(self):
        return np.stack([self.add_table, self.mul_table])

    def power(self, a, k):
        out = self.one
        for _ in range(k):
            out = self.mul(out, a)
        return out

    @functools.cached_property
    def is_commutative(self):
        if self.materialized:
            return kernels.commut_violation(self.mul_table) is None
        s = self.spanning_set()
        return bool(np.all(self.mulv(s[:, None], s[None, :]) == self.mulv(s[None, :], s[:, None])))


class LazyRing(FiniteRing):
    """A ring whose operations are computed on demand from vectorized callables."""

    materialized = False

    def __init__(self, order, addv, mulv, zero, one, spanning, label="", names=None, key=None):
        self.order = int(order)
        self._addv = addv
        self._mulv = mulv
        self.zero = int(zero)
        self.one = int(one)
        self._spanning = np.asarray(spanning, dtype=np.int64)
        self.label = label
        self._names = names
        self._key = key

    @functools.cached_property
    def key(self):
        return digest("lazy", self.order, self._key)

    @property
    def add_table(self):
        require("materialize", self.order)
        raise AssertionError("unreachable")  # pragma: no cover

    mul_table = add_table

    def addv(self, a, b):
        return self._addv(np.asarray(a), np.asarray(b))

    def mulv(self, a, b):
        return self._mulv(np.asarray(a), np.asarray(b))

    def additive_orders_of(self, ids):
        ids = np.asarray(ids, dtype=np.int64)
        orders = np.zeros(len(ids), dtype=np.int64)
        acc = np.full(len(ids), self.zero, dtype=np.int64)
        k = 0
        while not orders.all():
            k += 1
            acc = self.addv(acc, ids)
            orders[(orders == 0) & (acc == self.zero)] = k
        return orders

    def spanning_set(self):
        return self._spanning

    @functools.cached_property
    def additive_orders(self):
        return self.additive_orders_of(self.elements)


def check_ring(add, mul, zero=None, one=None, label="", names=None, cap="ring"):
    """Validate operation tables exhaustively and return a :class:`FiniteRing`.

    ``cap`` names the size cap enforced on the order (None to skip).

    Raises the first failing axiom with a witness tuple of element ids.
    """
    add = np.asarray(add)
    mul = np.asarray(mul)
    if add.ndim != 2 or add.shape[0] != add.shape[1] or mul.shape != add.shape:
        raise ValidationError(f"tables must be square and equal-shaped, got {add.shape} and {mul.shape}")
    n = add.shape[0]
    if n == 0:
        raise ValidationError("a ring needs at least one element")
    if cap:
        require(cap, n)
    for t, what in ((add, "add"), (mul, "mul")):
        if t.min() < 0 or t.max() >= n:
            bad = tuple(int(v) for v in np.argwhere((t < 0) | (t >= n))[0])
            raise ValidationError(f"{what} table entry out of range at {bad}", witness=bad)
    ar = np.arange(n)

    zeros = [z for z in range(n) if np.array_equal(add[z], ar) and np.array_equal(add[:, z], ar)]
    if zero is None:
        if not zeros:
            raise NotAbelianAddition("addition has no identity element")
        zero = zeros[0]
    elif zero not in zeros:
        bad = int(np.argwhere((add[zero] != ar) | (add[:, zero] != ar))[0][0])
        raise NotAbelianAddition(f"{zero} is not an additive identity (fails at {bad})", witness=(zero, bad))
    w = kernels.commut_violation(add)
    if w is not None:
        raise NotAbelianAddition(f"addition is not commutative at {w}", witness=w)
    w = kernels.assoc_violation(add)
    if w is not None:
        raise NotAbelianAddition(f"addition is not associative at {w}", witness=w)
    has_neg = (add == zero).any(axis=1)
    if not has_neg.all():
        a = int(np.argmin(has_neg))
        raise NotAbelianAddition(f"element {a} has no additive inverse", witness=(a,))

    ones = [u for u in range(n) if np.array_equal(mul[u], ar) and np.array_equal(mul[:, u], ar)]
    if one is None:
        if not ones:
            raise NoIdentity("multiplication has no two-sided identity")
        one = ones[0]
    elif one not in ones:
        bad = int(np.argwhere((mul[one] != ar) | (mul[:, one] != ar))[0][0])
        raise NoIdentity(f"{one} is not a two-sided multiplicative identity (fails at {bad})", witness=(one, bad))
    w = kernels.assoc_violation(mul)
    if w is not None:
        raise NotAssociative(f"multiplication is not associative at {w}", witness=w)
    w = kernels.distrib_violation(add, mul)
    if w is not None:
        side, a, b, c = w
        raise NotDistributive(f"{side} distributivity fails at {(a, b, c)}", witness=(a, b, c))
    return FiniteRing(add, mul, zero, one, label=label, names=names)


# -- recipes -----------------------------------------------------------------


def zmod(n: int) -> FiniteRing:
    if n < 1:
        raise ValidationError(f"modulus must be positive, got {n}")
    require("ring", n)
    ar = np.arange(n)
    return check_ring((ar[:, None] + ar) % n, (ar[:, None] * ar) % n, 0, 1 % n, label=f"Z/{n}")


def _poly_name(coeffs):
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = int(coeffs[i])
        if c == 0:
            continue
        mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if not mono:
            terms.append(str(c))
        else:
            terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms) or "0"


def poly_quotient(n: int, modulus, label=None) -> FiniteRing:
    """``Z/n[x]/(f)`` for a monic ``f`` given by coefficients, lowest degree first.

    Elements are coefficient vectors ordered lexicographically from the
    highest-degree coefficient, so the id of ``c_0 + c_1 x + ...`` is
    ``sum(c_i * n**i)``.
    """
    modulus = [int(c) % n for c in modulus]
    d = len(modulus) - 1
    if d < 1 or modulus[-1] != 1:
        raise ValidationError(f"modulus polynomial must be monic of degree >= 1, got {modulus}")
    radices = [n] * d
    size = n**d
    require("ring", size)
    ids = np.arange(size)
    dig = to_digits(ids, radices)[:, ::-1]  # low degree first
    a = dig[:, None, :]
    b = dig[None, :, :]
    prod = np.zeros((size, size, 2 * d - 1), dtype=np.int64)
    for i in range(d):
        for j in range(d):
            prod[:, :, i + j] += a[..., i] * b[..., j]
    for k in range(2 * d - 2, d - 1, -1):
        lead = prod[:, :, k] % n
        prod[:, :, k] = 0
        for i in range(d):
            prod[:, :, k - d + i] -= lead * modulus[i]
    prod = prod[:, :, :d] % n
    mul = from_digits(prod[..., ::-1], radices)
    add = from_digits((a + b)[..., ::-1] % n, radices)
    names = [_poly_name(row) for row in dig]
    if label is None:
        label = f"Z/{n}[x]/({_poly_name(modulus)})"
    return check_ring(add, mul, 0, 1 % size, label=label, names=names)


def _is_irreducible(p, modulus):
    d = len(modulus) - 1
    for k in range(1, d // 2 + 1):
        for tail in itertools.product(range(p), repeat=k):
            g = list(tail) + [1]
            # polynomial long division over Z/p
            rem = list(modulus)
            for shift in range(d - k, -1, -1):
                c = rem[shift + k] % p
                if c:
                    for i in range(k + 1):
                        rem[shift + i] = (rem[shift + i] - c * g[i]) % p
            if not any(r % p for r in rem):
                return False
    return True


def gf(p: int, modulus) -> FiniteRing:
    """Finite field ``Z/p[x]/(f)``; ``f`` must be monic irreducible and ``p`` prime."""
    if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise ValidationError(f"{p} is not prime")
    modulus = [int(c) % p for c in modulus]
    if not _is_irreducible(p, modulus):
        raise ValidationError(f"{_poly_name(modulus)} is reducible over Z/{p}")
    d = len(modulus) - 1
    return poly_quotient(p, modulus, label=f"GF({p}^{d})" if d > 1 else f"GF({p})")


def product(*rings: FiniteRing) -> FiniteRing:
    """Direct product; tuples ordered lexicographically."""
    if not rings:
        raise ValidationError("product needs at least one factor")
    radices = [r.order for r in rings]
    size = int(np.prod(radices))
    require("ring", size)
    dig = to_digits(np.arange(size), radices)
    a = dig[:, None, :]
    b = dig[None, :, :]
    add = np.empty((size, size, len(rings)), dtype=np.int64)
    mul = np.empty_like(add)
    for k, r in enumerate(rings):
        add[..., k] = r.addv(a[..., k], b[..., k])
        mul[..., k] = r.mulv(a[..., k], b[..., k])
    zero = from_digits([r.zero for r in rings], radices)
    one = from_digits([r.one for r in rings], radices)
    names = ["(" + ",".join(r.name(x) for r, x in zip(rings, row)) + ")" for row in dig]
    label = " x ".join(r.label for r in rings)
    return check_ring(from_digits(add, radices), from_digits(mul, radices), int(zero), int(one), label=label, names=names)


def matrix_ring(base: FiniteRing, n: int) -> FiniteRing:
    """``M_n(base)``; entries row-major, ordered lexicographically."""
    radices = [base.order] * (n * n)
    size = base.order ** (n * n)
    require("ring", size)
    dig = to_digits(np.arange(size), radices).reshape(size, n, n)
    A = dig[:, None]
    B = dig[None, :]
    add = base.addv(A, B)
    mul = np.full((size, size, n, n), base.zero, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            acc = np.full((size, size), base.zero, dtype=np.int64)
            for k in range(n):
                acc = base.addv(acc, base.mulv(A[..., i, k], B[..., k, j]))
            mul[..., i, j] = acc
    ident = np.full((n, n), base.zero)
    np.fill_diagonal(ident, base.one)
    names = ["[" + ";".join(",".join(base.name(x) for x in row) for row in m) + "]" for m in dig]
    return check_ring(
        from_digits(add.reshape(size, size, -1), radices),
        from_digits(mul.reshape(size, size, -1), radices),
        0,
        int(from_digits(ident.reshape(-1), radices)),
        label=f"M{n}({base.label})",
        names=names,
    )


def subring(ring: FiniteRing, elements, label="") -> FiniteRing:
    """Restrict ``ring`` to a subset containing 0 and 1 and closed under both operations."""
    elems = sorted({int(e) for e in elements})
    pos = np.full(ring.order, -1, dtype=np.int64)
    pos[elems] = np.arange(len(elems))
    sub = np.asarray(elems)
    add = pos[ring.add_table[np.ix_(sub, sub)]]
    mul = pos[ring.mul_table[np.ix_(sub, sub)]]
    if (add < 0).any() or (mul < 0).any() or pos[ring.zero] < 0 or pos[ring.one] < 0:
        raise ValidationError(f"subset of {ring.label} is not a subring")
    return check_ring(add, mul, int(pos[ring.zero]), int(pos[ring.one]), label=label or f"sub({ring.label})",
                      names=[ring.name(e) for e in elems])


# -- units --------------------------------------------------------------------


class Units:
    """The unit group of a ring: ``elements`` in canonical order, ``inverse`` per element (-1 if none)."""

    def __init__(self, ring, elements, inverse):
        self.ring = ring
        self.elements = elements
        self.inverse = inverse

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements.tolist())

    def __contains__(self, a):
        return self.inverse[a] != -1


def enumerate_units(ring: FiniteRing) -> Units:
    require("ring", ring.order)
    ids = ring.elements
    inverse = np.full(ring.order, -1, dtype=np.int64)
    for a in ids:
        right = ring.mulv(a, ids) == ring.one
        left = ring.mulv(ids, a) == ring.one
        both = np.nonzero(right & left)[0]
        if len(both):
            inverse[a] = both[0]
    units = np.nonzero(inverse != -1)[0]
    inverse.setflags(write=False)
    return Units(ring, units, inverse)
