"""Semilinearization: the group ``semi_R(S)`` of a ring map ``f: R -> S``.

``semi_R(S)`` consists of pairs ``(s, phi)`` with ``s`` a unit of ``S`` and
``phi`` an automorphism of ``R`` such that ``s f(r) = f(phi(r)) s`` for all
``r``, multiplied diagonally. For ``S = End(M)`` these are the semilinear
automorphisms of the module ``M``.
"""
from __future__ import annotations

import functools
import itertools
from typing import NamedTuple

import numpy as np

from .abelian import EndomorphismRing, FiniteAbelianGroup, endomorphism_ring
from .actions import CosliceRingMorphism, GroupAction
from .automorphisms import AutGroup, enumerate_automorphisms
from .closure import generating_set
from .config import get_caps, require
from .errors import TargetMembershipFailure, ValidationError
from .groups import FiniteGroup, check_group
from .homs import GroupHom, RingHom, hom_search
from .rings import FiniteRing, enumerate_units


class SemiPair(NamedTuple):
    s: int
    phi: int


class SemiGroup:
    def __init__(self, base: RingHom, autgroup: AutGroup, pairs):
        self.base = base
        self.autgroup = autgroup
        self.pairs = tuple(SemiPair(int(s), int(p)) for s, p in pairs)
        self._index = {p: i for i, p in enumerate(self.pairs)}
        S = base.target
        aut_op = autgroup.group.op
        op = np.empty((len(self.pairs), len(self.pairs)), dtype=np.int64)
        for i, (s, p) in enumerate(self.pairs):
            for j, (t, q) in enumerate(self.pairs):
                k = self._index.get((S.mul(s, t), int(aut_op[p, q])))
                if k is None:
                    raise TargetMembershipFailure(f"product of pairs {i} and {j} left the set")
                op[i, j] = k
        names = [f"({S.name(s)}, {autgroup.group.name(p)})" for s, p in self.pairs]
        self.group: FiniteGroup = check_group(
            op, self._index[(S.one, 0)], label=f"semi({S.label})", names=names, cap=None
        )
        self.to_aut = GroupHom(self.group, autgroup.group, [p for _, p in self.pairs])
        self.to_units = np.array([s for s, _ in self.pairs], dtype=np.int64)

    def __len__(self):
        return len(self.pairs)

    def __repr__(self):
        return f"<SemiGroup of {self.base.target.label} under {self.base.source.label}, order {len(self)}>"

    @property
    def ring(self):
        return self.base.source

    @property
    def target(self):
        return self.base.target

    def index(self, s, phi):
        return self._index.get((int(s), int(phi)))

    def fiber(self, phi):
        """Indices of pairs lying over the automorphism ``phi``."""
        return [i for i, p in enumerate(self.pairs) if p.phi == phi]

    def is_member(self, s, phi, exhaustive=False):
        return is_semilinear_pair(self.base, self.autgroup, s, phi, exhaustive=exhaustive)


def is_semilinear_pair(f: RingHom, autgroup: AutGroup, s, phi, exhaustive=True):
    """Direct test of ``s f(r) = f(phi(r)) s`` over every ``r`` (or over generators)."""
    R, S = f.source, f.target
    units = enumerate_units(S)
    if s not in units:
        return False
    rs = R.elements if exhaustive else np.array(_ring_generators(R), dtype=np.int64)
    if len(rs) == 0:
        return True
    lhs = S.mulv(s, f.table[rs])
    rhs = S.mulv(f.table[autgroup.perms[phi][rs]], s)
    return bool(np.all(lhs == rhs))


def _ring_generators(R: FiniteRing):
    return generating_set(R.ops, R.order, base=(R.zero, R.one))


def semilinearize(f: RingHom, autgroup: AutGroup | None = None) -> SemiGroup:
    """Compute ``semi_R(S)`` for a ring map ``f: R -> S``.

    Membership is tested on a generating set of ``R`` only: the set of ``r``
    satisfying the intertwining condition is a subring.
    """
    autgroup = autgroup or enumerate_automorphisms(f.source)
    return _semilinearize(f, autgroup, get_caps())


@functools.lru_cache(maxsize=128)
def _semilinearize(f, autgroup, _caps):
    R, S = f.source, f.target
    require("ring", S.order)
    units = enumerate_units(S).elements
    gens = _ring_generators(R)
    ok = np.ones((len(units), len(autgroup)), dtype=bool)
    for r in gens:
        lhs = S.mulv(units, f(r))
        rhs = S.mulv(f.table[autgroup.perms[:, r]][None, :], units[:, None])
        ok &= lhs[:, None] == rhs
    pairs = [(units[i], p) for i, p in zip(*np.nonzero(ok))]
    return SemiGroup(f, autgroup, pairs)


def semilinearize_morphism(h: CosliceRingMorphism, source: SemiGroup | None = None,
                           target: SemiGroup | None = None) -> GroupHom:
    """``(s, phi) -> (h(s), phi)`` as a group hom over ``Aut(R)``."""
    source = source or semilinearize(h.f)
    target = target or semilinearize(h.g, source.autgroup)
    table = []
    for i, (s, phi) in enumerate(source.pairs):
        k = target.index(h.h(s), phi)
        if k is None:
            raise TargetMembershipFailure(f"image of pair {i} is not in the target group")
        table.append(k)
    hom = GroupHom(source.group, target.group, table)
    if not np.array_equal(target.to_aut.table[hom.table], source.to_aut.table):
        raise TargetMembershipFailure("image does not commute with the maps to Aut(R)")
    return hom


# -- modules ----------------------------------------------------------------------


class ModuleStructure:
    """An ``R``-module: an abelian group ``M`` and a ring map ``chi: R -> End(M)``."""

    def __init__(self, module: FiniteAbelianGroup, chi: RingHom):
        if not isinstance(chi.target, EndomorphismRing) or chi.target.module.factors != module.factors:
            raise ValidationError("chi must land in End of the given module")
        self.module = module
        self.chi = chi

    @property
    def ring(self):
        return self.chi.source

    @property
    def end(self) -> EndomorphismRing:
        return self.chi.target

    def act(self, r, m):
        return self.end.maps[self.chi.table[r]][m]

    def __repr__(self):
        return f"<ModuleStructure {self.module.label} over {self.ring.label}>"


def additive_invariant_factors(R: FiniteRing):
    """Invariant factors of ``(R, +)``, read off from the sizes of its ``p^k``-torsion."""
    n = R.order
    if n == 1:
        return [1]
    ords = R.additive_orders
    primes = [p for p in range(2, n + 1) if n % p == 0 and all(p % q for q in range(2, p))]
    per_prime = []
    for p in primes:
        top = 0
        while n % p ** (top + 1) == 0:
            top += 1
        # t[k] = log_p #{x : p^k x = 0}
        t = [0]
        while t[-1] < top:
            k = len(t)
            t.append(round(np.log(np.sum(p**k % ords == 0)) / np.log(p)))
        at_least = [t[k] - t[k - 1] for k in range(1, len(t))] + [0]
        sizes = []
        for k in range(len(at_least) - 1, 0, -1):
            sizes += [p**k] * (at_least[k - 1] - at_least[k])
        per_prime.append(sizes)
    width = max(len(s) for s in per_prime)
    return sorted(int(np.prod([s[i] for s in per_prime if i < len(s)])) for i in range(width))


def additive_isomorphism(M: FiniteAbelianGroup, R: FiniteRing):
    """A bijection ``iota: M -> R`` of additive groups, as a value table over ``M``."""
    ords = R.additive_orders
    pools = [[y for y in range(R.order) if ords[y] == n] for n in M.factors]

    def build(images):
        out = np.full(M.order, R.zero, dtype=np.int64)
        for i, y in enumerate(images):
            term = np.full(M.order, R.zero, dtype=np.int64)
            for k in range(M.factors[i]):
                sel = M.tuples[:, i] > k
                term[sel] = R.addv(term[sel], y)
            out = R.addv(out, term)
        return out

    for images in itertools.product(*pools):
        table = build(images)
        if len(np.unique(table)) == M.order:
            return table
    raise ValidationError(f"additive group of {R.label} is not {M.label}")


def regular_module(R: FiniteRing) -> ModuleStructure:
    """``R`` acting on its own additive group by left multiplication."""
    M = FiniteAbelianGroup(additive_invariant_factors(R))
    end = endomorphism_ring(M)
    iota = additive_isomorphism(M, R)
    inv = np.empty(R.order, dtype=np.int64)
    inv[iota] = np.arange(M.order)
    chi = [end.index_of_map(inv[R.mulv(r, iota)]) for r in range(R.order)]
    return ModuleStructure(M, RingHom(R, end, chi))


def module_from_hom(R: FiniteRing, factors, index=0) -> ModuleStructure:
    """The ``index``-th ring map ``R -> End(M)`` in canonical order."""
    M = FiniteAbelianGroup(factors)
    end = endomorphism_ring(M)
    homs = hom_search(R, end)
    if not 0 <= index < len(homs):
        raise ValidationError(f"{len(homs)} module structures of {R.label} on {M.label}; index {index} out of range")
    return ModuleStructure(M, homs[index])


def semilinear_automorphisms(m: ModuleStructure, autgroup: AutGroup | None = None):
    """Pairs ``(sigma, phi)`` with ``sigma`` a ``phi``-semilinear bijection of ``M``.

    Works directly on module elements: enumerates additive bijections from
    basis images and tests ``sigma(r m) = phi(r) sigma(m)``. Returns a
    sorted list of ``(sigma value table, phi)``.
    """
    M = m.module
    autgroup = autgroup or enumerate_automorphisms(m.ring)
    pools = [[y for y in range(M.order) if not np.any((n * M.tuples[y]) % M.factors)] for n in M.factors]
    act = m.end.maps[m.chi.table]  # act[r, x] = r . x
    out = []
    for images in itertools.product(*pools):
        coords = sum(M.tuples[:, i : i + 1] * M.tuples[y][None, :] for i, y in enumerate(images))
        sigma = np.asarray(M.index(coords), dtype=np.int64)
        if len(np.unique(sigma)) != M.order:
            continue
        for phi in range(len(autgroup)):
            # sigma(r . x) against phi(r) . sigma(x)
            if np.array_equal(sigma[act], act[autgroup.perms[phi]][:, sigma]):
                out.append((tuple(sigma.tolist()), phi))
    return sorted(out)


def semilinear_action_check(action: GroupAction, m: ModuleStructure, candidate: GroupHom,
                            semi: SemiGroup | None = None):
    """Whether ``candidate: G -> semi(End M)`` lifts ``theta`` along the map to ``Aut(R)``.

    Returns ``(ok, witness)`` where ``witness`` is the first ``g`` whose
    image lies over the wrong automorphism.
    """
    semi = semi or semilinearize(m.chi, action.autgroup)
    if candidate.target != semi.group or candidate.source != action.group:
        raise ValidationError("candidate must map the acting group into the semilinear group")
    lifted = semi.to_aut.table[candidate.table]
    bad = np.nonzero(lifted != action.theta.table)[0]
    if len(bad):
        return False, int(bad[0])
    return True, None
