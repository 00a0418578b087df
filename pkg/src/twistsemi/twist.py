"""Twisted group rings ``R_theta[G]`` and the twistification functor."""
from __future__ import annotations

import functools

import numpy as np

from ._util import from_digits, to_digits
from .actions import CosliceRingMorphism, GroupAction, SliceGroupMorphism, check_coslice_morphism
from .config import get_caps, require
from .errors import NoIdentity, NotAbelianAddition, NotAssociative, NotDistributive
from .homs import RingHom
from .rings import FiniteRing, LazyRing, check_ring

AXIOM_SAMPLES = 10_000
AXIOM_SEED = 0


class TwistedGroupRing:
    """``R_theta[G]`` realized as a finite ring.

    An element is a coefficient table ``c[g]`` over the canonical order of
    ``G``; ids are the lexicographic rank of that table (``c[0]`` most
    significant). The product of monomials is
    ``(r1 h1)(r2 h2) = r1 theta_h1(r2) (h1 h2)``, extended bilinearly.
    """

    def __init__(self, action: GroupAction):
        self.action = action
        self.base = action.ring
        self.group = action.group
        self.radices = [self.base.order] * self.group.order
        self.order = self.base.order ** self.group.order
        self.ring = self._realize()
        self.structure_map = RingHom(
            self.base, self.ring, [self.monomial(r, self.group.identity) for r in range(self.base.order)]
        )

    def __repr__(self):
        return f"<TwistedGroupRing {self.ring.label} order={self.order}>"

    @property
    def label(self):
        a = self.action
        tag = "" if a.is_trivial else "_theta"
        return f"{self.base.label}{tag}[{self.group.label}]"

    # -- coordinates --------------------------------------------------------
    def coefficients(self, x):
        return to_digits(x, self.radices)

    def from_coefficients(self, coeffs):
        return from_digits(coeffs, self.radices)

    def monomial(self, r, g):
        c = np.full(self.group.order, self.base.zero, dtype=np.int64)
        c[g] = r
        return int(self.from_coefficients(c))

    @functools.cached_property
    def monomials(self):
        """``monomials[r, g]`` is the id of ``r g``."""
        R, G = self.base, self.group
        out = np.empty((R.order, G.order), dtype=np.int64)
        for r in range(R.order):
            for g in range(G.order):
                out[r, g] = self.monomial(r, g)
        return out

    def name(self, x):
        c = self.coefficients(x)
        paren = lambda t: f"({t})" if any(ch in t for ch in "+ ") else t  # noqa: E731
        terms = [
            f"{paren(self.base.name(r))}*{self.group.name(g)}" for g, r in enumerate(c.tolist()) if r != self.base.zero
        ]
        return " + ".join(terms) or self.base.name(self.base.zero)

    # -- arithmetic ---------------------------------------------------------
    def addv(self, x, y):
        return self.from_coefficients(self.base.addv(self.coefficients(x), self.coefficients(y)))

    def mulv(self, x, y):
        R, G = self.base, self.group
        X = self.coefficients(x)
        Y = self.coefficients(y)
        X, Y = np.broadcast_arrays(X, Y)
        acc = np.full(X.shape, R.zero, dtype=np.int64)
        perms = self.action.perms
        for h in range(G.order):
            twisted = perms[h][Y]  # theta_h applied coefficient-wise
            for k in range(G.order):
                t = G.op[h, k]
                acc[..., t] = R.addv(acc[..., t], R.mulv(X[..., h], twisted[..., k]))
        return self.from_coefficients(acc)

    def _realize(self) -> FiniteRing:
        require("twisted", self.order)
        zero = int(self.from_coefficients([self.base.zero] * self.group.order))
        one = self.monomial(self.base.one, self.group.identity)
        if self.order <= get_caps().materialize:
            ids = np.arange(self.order)
            add = self.addv(ids[:, None], ids[None, :])
            mul = self.mulv(ids[:, None], ids[None, :])
            names = [self.name(x) for x in range(self.order)]
            return check_ring(add, mul, zero, one, label=self.label, names=names, cap=None)
        spanning = np.unique(self.monomials)
        ring = LazyRing(
            self.order,
            self.addv,
            self.mulv,
            zero,
            one,
            spanning,
            label=self.label,
            names=self.name,
            key=(self.base.key, self.group.key, self.action.theta.table.tobytes()),
        )
        check_lazy_ring(ring)
        return ring


def check_lazy_ring(ring: LazyRing, samples=AXIOM_SAMPLES, seed=AXIOM_SEED):
    """Axiom checks for on-demand rings.

    Exhaustive over all triples of spanning elements, then ``samples``
    random general triples from a fixed seed.
    """
    span = np.asarray(ring.spanning_set(), dtype=np.int64)
    a, b, c = np.meshgrid(span, span, span, indexing="ij")
    triples = [(a.ravel(), b.ravel(), c.ravel())]
    rng = np.random.default_rng(seed)
    triples.append(tuple(rng.integers(0, ring.order, size=samples) for _ in range(3)))
    for a, b, c in triples:
        add, mul = ring.addv, ring.mulv
        for lhs, rhs, exc, what in (
            (add(a, b), add(b, a), NotAbelianAddition, "addition is not commutative"),
            (add(add(a, b), c), add(a, add(b, c)), NotAbelianAddition, "addition is not associative"),
            (add(a, ring.zero), a, NotAbelianAddition, "zero is not an additive identity"),
            (mul(a, ring.one), a, NoIdentity, "one is not a right identity"),
            (mul(ring.one, a), a, NoIdentity, "one is not a left identity"),
            (mul(mul(a, b), c), mul(a, mul(b, c)), NotAssociative, "multiplication is not associative"),
            (mul(a, add(b, c)), add(mul(a, b), mul(a, c)), NotDistributive, "left distributivity fails"),
            (mul(add(a, b), c), add(mul(a, c), mul(b, c)), NotDistributive, "right distributivity fails"),
        ):
            bad = np.nonzero(np.asarray(lhs) != np.asarray(rhs))[0]
            if len(bad):
                i = bad[0]
                w = (int(a[i]), int(b[i]), int(c[i]))
                raise exc(f"{what} at {w}", witness=w)


def twistify(action: GroupAction) -> TwistedGroupRing:
    """Build ``R_theta[G]``; memoized per action and cap setting."""
    return _twistify(action, get_caps())


@functools.lru_cache(maxsize=128)
def _twistify(action, _caps):
    return TwistedGroupRing(action)


def twistify_morphism(j: SliceGroupMorphism, source: TwistedGroupRing | None = None,
                      target: TwistedGroupRing | None = None) -> CosliceRingMorphism:
    """The ring map ``sum r_g g -> sum r_g f(g)`` between twisted group rings, checked under ``R``."""
    source = source or twistify(j.source)
    target = target or twistify(j.target)
    R = source.base
    X = source.coefficients(np.arange(source.order))
    acc = np.full((source.order, target.group.order), R.zero, dtype=np.int64)
    for g, fg in enumerate(j.f.table.tolist()):
        acc[:, fg] = R.addv(acc[:, fg], X[:, g])
    F = RingHom(source.ring, target.ring, target.from_coefficients(acc))
    return check_coslice_morphism(source.structure_map, target.structure_map, F)
