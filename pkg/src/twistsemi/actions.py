"""Group actions on rings and the morphisms of the two slice categories.

A :class:`GroupAction` is an object of ``Grp/Aut(R)``; a
:class:`SliceGroupMorphism` is a commuting triangle over ``Aut(R)``. The
dual side, ring maps out of ``R``, uses plain :class:`RingHom` objects as
objects of ``R/Ring`` and :class:`CosliceRingMorphism` for triangles under
``R``.
"""
from __future__ import annotations

from collections.abc import Mapping, Sequence

import numpy as np

from . import kernels
from .automorphisms import AutGroup, enumerate_automorphisms
from .closure import closure
from .errors import NotAHomomorphism, NotOverAut, NotUnderR, UnknownAutomorphism, ValidationError
from .groups import FiniteGroup
from .homs import GroupHom, RingHom
from .rings import FiniteRing


class GroupAction:
    def __init__(self, group: FiniteGroup, ring: FiniteRing, autgroup: AutGroup, theta: GroupHom):
        if theta.source != group or theta.target != autgroup.group or autgroup.ring != ring:
            raise ValidationError("theta must map the group into Aut of the ring")
        self.group = group
        self.ring = ring
        self.autgroup = autgroup
        self.theta = theta

    def __repr__(self):
        return f"<GroupAction {self.group.label} on {self.ring.label} {self.theta.table.tolist()}>"

    def __eq__(self, other):
        return isinstance(other, GroupAction) and self.theta == other.theta and self.ring == other.ring

    def __hash__(self):
        return hash((self.theta, self.ring))

    def aut_index(self, g) -> int:
        return self.theta(g)

    def perm(self, g):
        """Value table of ``theta_g`` on the ring."""
        return self.autgroup.perms[self.theta.table[g]]

    def apply(self, g, r):
        return self.perm(g)[r]

    @property
    def perms(self):
        """``perms[g, r] = theta_g(r)``."""
        return self.autgroup.perms[self.theta.table]

    @property
    def is_trivial(self):
        return not self.theta.table.any()


def _resolve(autgroup, spec):
    if isinstance(spec, (int, np.integer)):
        if not 0 <= spec < len(autgroup):
            raise UnknownAutomorphism(f"automorphism index {spec} out of range (|Aut| = {len(autgroup)})", witness=(spec,))
        return int(spec)
    return autgroup.index(spec)


def make_action(group: FiniteGroup, ring: FiniteRing, images: Mapping, autgroup: AutGroup | None = None) -> GroupAction:
    """Extend generator images to an action ``group -> Aut(ring)``.

    ``images`` maps group elements to an automorphism index or an explicit
    permutation of the ring's elements. The keys must generate the group.
    Raises :class:`NotAHomomorphism` with witness ``(x, y, x*y)`` when the
    assignment violates a relation.
    """
    autgroup = autgroup or enumerate_automorphisms(ring)
    target = autgroup.group
    resolved = {int(g): _resolve(autgroup, v) for g, v in images.items()}
    if resolved.get(group.identity, 0) != 0:
        raise NotAHomomorphism("the identity must act trivially", witness=(group.identity,))
    if not closure(group.ops, [group.identity, *resolved], group.order).all():
        raise ValidationError("the elements given images do not generate the group")

    h_src, h_tgt = kernels.prepare(group.ops), kernels.prepare(target.ops)
    fmap = np.full(group.order, -1, dtype=np.int32)
    order = np.zeros(group.order, dtype=np.int32)
    fmap[group.identity] = target.identity
    order[0] = group.identity
    count = 1
    for g, a in sorted(resolved.items()):
        if g == group.identity:
            continue
        fmap[g] = a
        order[count] = g
        count += 1
    count, conflict = kernels.close_map(h_src, h_tgt, fmap, order, 0, count)
    if conflict is not None:
        _, x, y, c, existing, computed = conflict
        raise NotAHomomorphism(
            f"relation {group.name(x)}*{group.name(y)} = {group.name(c)} violated: "
            f"images compose to automorphism {computed}, expected {existing}",
            witness=(x, y, c),
        )
    theta = GroupHom(group, target, fmap)
    return GroupAction(group, ring, autgroup, theta)


def trivial_action(group: FiniteGroup, ring: FiniteRing, autgroup: AutGroup | None = None) -> GroupAction:
    autgroup = autgroup or enumerate_automorphisms(ring)
    return GroupAction(group, ring, autgroup, GroupHom(group, autgroup.group, np.zeros(group.order, dtype=np.int64)))


class SliceGroupMorphism:
    """A group hom ``f: G -> K`` with ``theta_g = psi_f(g)``."""

    def __init__(self, source: GroupAction, target: GroupAction, f: GroupHom):
        self.source = source
        self.target = target
        self.f = f

    def __repr__(self):
        return f"<SliceGroupMorphism {self.source.group.label} -> {self.target.group.label} {self.f.table.tolist()}>"

    def __matmul__(self, inner: "SliceGroupMorphism") -> "SliceGroupMorphism":
        return SliceGroupMorphism(inner.source, self.target, self.f @ inner.f)

    @classmethod
    def identity(cls, action: GroupAction):
        return cls(action, action, GroupHom.identity(action.group))


def check_slice_morphism(source: GroupAction, target: GroupAction, f) -> SliceGroupMorphism:
    """Validate ``f`` as a morphism over ``Aut(R)``; witness ``(g, r)`` on failure."""
    if source.ring != target.ring:
        raise ValidationError("slice morphisms need actions on the same ring")
    if not isinstance(f, GroupHom):
        f = GroupHom(source.group, target.group, f)
    if f.source != source.group or f.target != target.group:
        raise ValidationError("group hom does not match the actions' groups")
    lhs = source.perms
    rhs = target.perms[f.table]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        g, r = (int(v) for v in bad[0])
        raise NotOverAut(f"theta_{g}({r}) = {lhs[g, r]} but psi_f({g})({r}) = {rhs[g, r]}", witness=(g, r))
    return SliceGroupMorphism(source, target, f)


class CosliceRingMorphism:
    """A ring hom ``h: S -> T`` with ``h . f = g`` for structure maps ``f: R -> S``, ``g: R -> T``."""

    def __init__(self, f: RingHom, g: RingHom, h: RingHom):
        self.f = f
        self.g = g
        self.h = h

    def __repr__(self):
        return f"<CosliceRingMorphism {self.h.source.label} -> {self.h.target.label}>"

    def __matmul__(self, inner: "CosliceRingMorphism") -> "CosliceRingMorphism":
        return CosliceRingMorphism(inner.f, self.g, self.h @ inner.h)

    @classmethod
    def identity(cls, f: RingHom):
        return cls(f, f, RingHom.identity(f.target))


def check_coslice_morphism(f: RingHom, g: RingHom, h) -> CosliceRingMorphism:
    """Validate ``h`` as a morphism under ``R``; witness ``(r,)`` on failure."""
    if f.source != g.source:
        raise ValidationError("structure maps must share their source ring")
    if not isinstance(h, RingHom):
        h = RingHom(f.target, g.target, h)
    if h.source != f.target or h.target != g.target:
        raise ValidationError("ring hom does not match the structure maps' targets")
    bad = np.nonzero(h.table[f.table] != g.table)[0]
    if len(bad):
        r = int(bad[0])
        raise NotUnderR(f"h(f({r})) = {h.table[f.table[r]]} but g({r}) = {g.table[r]}", witness=(r,))
    return CosliceRingMorphism(f, g, h)
