"""Ring automorphism groups."""
from __future__ import annotations

import functools
import itertools

import numpy as np

from .config import get_caps, require
from .errors import CapExceeded, UnknownAutomorphism
from .groups import FiniteGroup, check_group
from .homs import RingHom, hom_search, ring_hom_violation
from .rings import FiniteRing


class AutGroup:
    """``Aut(R)`` as a list of automorphisms plus the group they form.

    Element ``i`` of :attr:`group` is ``autos[i]``; the group law is
    composition, ``op[i, j] = autos[i] . autos[j]``. Index 0 is the identity.
    """

    def __init__(self, ring: FiniteRing, autos):
        self.ring = ring
        self.autos = tuple(autos)
        self.perms = np.stack([a.table for a in self.autos])
        self._index = {tuple(p): i for i, p in enumerate(self.perms.tolist())}
        op = [[self._index[tuple(p[q].tolist())] for q in self.perms] for p in self.perms]
        names = ["id"] + [f"aut{i}" for i in range(1, len(self.autos))]
        self.group: FiniteGroup = check_group(op, 0, label=f"Aut({ring.label})", names=names, cap=None)

    def __len__(self):
        return len(self.autos)

    def __eq__(self, other):
        return isinstance(other, AutGroup) and self.ring == other.ring

    def __hash__(self):
        return hash(self.ring)

    def __iter__(self):
        return iter(self.autos)

    def __getitem__(self, i):
        return self.autos[i]

    def index(self, perm) -> int:
        """Canonical index of the automorphism with value table ``perm``."""
        key = tuple(int(x) for x in perm)
        try:
            return self._index[key]
        except KeyError:
            raise UnknownAutomorphism(f"{list(key)} is not an automorphism of {self.ring.label}", witness=key)

    def apply(self, i, r):
        return self.perms[i][r]

    def inverse(self, i):
        return int(self.group.inv[i])


def enumerate_automorphisms(ring: FiniteRing) -> AutGroup:
    """All ring automorphisms, identity first, sorted by value table."""
    require("ring", ring.order)
    return _enumerate(ring, get_caps())


@functools.lru_cache(maxsize=128)
def _enumerate(ring, _caps):
    autos = hom_search(ring, ring, injective=True)
    return AutGroup(ring, autos)


def brute_force_automorphisms(ring: FiniteRing) -> list[RingHom]:
    """Reference oracle: test every bijection fixing 0 and 1 (tiny rings only)."""
    if ring.order > 8:
        raise CapExceeded("brute_force", 8, ring.order)
    rest = [a for a in range(ring.order) if a not in (ring.zero, ring.one)]
    out = []
    for images in itertools.permutations(rest):
        table = np.empty(ring.order, dtype=np.int64)
        table[ring.zero] = ring.zero
        table[ring.one] = ring.one
        table[rest] = images
        if ring_hom_violation(ring, ring, table) is None:
            out.append(RingHom(ring, ring, table, check=False))
    out.sort(key=lambda h: h.table.tolist())
    return out
