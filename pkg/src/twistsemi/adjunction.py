"""The hom-set bijection between twistification and semilinearization.

For an action ``theta: G -> Aut(R)`` and a ring map ``chi: R -> S``::

    pi: Hom_{R/Ring}(R_theta[G], S) -> Hom_{Grp/Aut(R)}(G, semi_R(S))
        f |-> (g |-> (f(1 g), theta_g))

with inverse ``alpha |-> (r g |-> chi(r) s_alpha(g))``. Both hom-sets are
enumerated independently and the bijection, its inverse, and naturality
are checked exhaustively. All ``verify_*`` functions return a
:class:`~twistsemi.report.Report` rather than raising on failed checks.
"""
from __future__ import annotations

import itertools

import numpy as np

from . import kernels
from .actions import (
    CosliceRingMorphism,
    GroupAction,
    SliceGroupMorphism,
)
from .closure import generating_set
from .config import get_caps, require
from .errors import CapExceeded, NotAHomomorphism, NotOverAut, NotUnderR, TargetMembershipFailure, ValidationError
from .homs import GroupHom, RingHom, hom_search
from .report import Report, timed
from .semilin import (
    ModuleStructure,
    SemiGroup,
    semilinear_automorphisms,
    semilinearize,
    semilinearize_morphism,
)
from .twist import TwistedGroupRing, twistify, twistify_morphism


class HomSetUnder:
    """Ring maps ``R_theta[G] -> S`` under ``R``, in canonical order."""

    def __init__(self, source: TwistedGroupRing, base: RingHom, homs):
        self.source = source
        self.base = base
        self.homs = list(homs)

    def __len__(self):
        return len(self.homs)

    def __iter__(self):
        return iter(self.homs)

    def __getitem__(self, i):
        return self.homs[i]


class HomSetOver:
    """Group maps ``G -> semi_R(S)`` over ``Aut(R)``, in canonical order."""

    def __init__(self, action: GroupAction, semi: SemiGroup, homs):
        self.action = action
        self.semi = semi
        self.homs = list(homs)

    def __len__(self):
        return len(self.homs)

    def __iter__(self):
        return iter(self.homs)

    def __getitem__(self, i):
        return self.homs[i]


def _check_under(twisted: TwistedGroupRing, base: RingHom, f: RingHom):
    if f.source != twisted.ring or f.target != base.target:
        raise ValidationError("map does not go from the twisted group ring to the target ring")
    bad = np.nonzero(f.table[twisted.structure_map.table] != base.table)[0]
    if len(bad):
        raise NotUnderR(f"map is not under R at r = {int(bad[0])}", witness=(int(bad[0]),))


def pi(twisted: TwistedGroupRing, semi: SemiGroup, f: RingHom) -> GroupHom:
    """``g -> (f(1_R g), theta_g)`` as a group hom into ``semi.group``."""
    _check_under(twisted, semi.base, f)
    action = twisted.action
    ones = twisted.monomials[twisted.base.one]
    table = []
    for g in range(action.group.order):
        s, phi = f(ones[g]), action.aut_index(g)
        k = semi.index(s, phi)
        if k is None:
            raise TargetMembershipFailure(f"(f(1*{action.group.name(g)}), theta) = ({s}, {phi}) is not in semi")
        table.append(k)
    return GroupHom(action.group, semi.group, table)


def pi_inverse(twisted: TwistedGroupRing, semi: SemiGroup, alpha: GroupHom) -> RingHom:
    """``sum r_g g -> sum chi(r_g) s_alpha(g)``, validated as a ring map under ``R``."""
    action = twisted.action
    if not np.array_equal(semi.to_aut.table[alpha.table], action.theta.table):
        raise NotOverAut("alpha does not lie over theta")
    S, chi = semi.target, semi.base
    s = semi.to_units[alpha.table]
    X = twisted.coefficients(np.arange(twisted.order))
    acc = np.full(twisted.order, S.zero, dtype=np.int64)
    for g in range(action.group.order):
        acc = S.addv(acc, S.mulv(chi.table[X[:, g]], s[g]))
    try:
        f = RingHom(twisted.ring, S, acc)
        _check_under(twisted, chi, f)
    except (NotAHomomorphism, NotUnderR) as exc:
        raise TargetMembershipFailure(f"inverse construction failed: {exc}") from exc
    return f


def _ring_gens(R):
    return generating_set(R.ops, R.order, base=(R.zero, R.one))


def enumerate_homs_under(twisted: TwistedGroupRing, base: RingHom) -> HomSetUnder:
    """All ring maps ``R_theta[G] -> S`` under ``R``.

    Such a map is fixed by ``chi`` on ``r e`` and by its values on the
    ``1_R g``; the search picks those values on generators of ``G``, closes
    them multiplicatively over ``G``, and validates each completed map.
    """
    R, G, S = twisted.base, twisted.group, base.target
    require("materialize", S.order)
    if base.source != R:
        raise ValidationError("structure map must start at the twisted ring's base ring")
    ones = twisted.monomials[R.one]
    rgens = _ring_gens(R)
    ids = S.elements

    def admissible(g):
        pool = ids
        acc = np.full(len(pool), S.one)
        for _ in range(int(G.element_orders[g])):
            acc = S.mulv(acc, pool)
        pool = pool[acc == S.one]
        for r in rgens:
            # (1 g)(r e) is a monomial c g; its image must be chi(c) s
            prod = twisted.mulv(ones[g], twisted.monomials[r, G.identity])
            c = int(twisted.coefficients(prod)[g])
            keep = S.mulv(pool, base(r)) == S.mulv(base(c), pool)
            pool = pool[keep]
        return pool.tolist()

    gens = list(G.generators)
    cands = [admissible(g) for g in gens]
    h_src = kernels.prepare(G.ops)
    h_tgt = kernels.prepare(S.mul_table[None])
    budget = get_caps().search_nodes
    nodes = 0
    found = []

    def rec(k, fmap, order, count):
        nonlocal nodes
        if k == len(gens):
            found.append(fmap.copy())
            return
        g = gens[k]
        if fmap[g] != -1:
            rec(k + 1, fmap, order, count)
            return
        for c in cands[k]:
            nodes += 1
            if nodes > budget:
                raise CapExceeded("search_nodes", budget, nodes)
            fm, od = fmap.copy(), order.copy()
            fm[g] = c
            od[count] = g
            got, conflict = kernels.close_map(h_src, h_tgt, fm, od, count, count + 1)
            if conflict is None:
                rec(k + 1, fm, od, got)

    fmap = np.full(G.order, -1, dtype=np.int32)
    order = np.zeros(G.order, dtype=np.int32)
    fmap[G.identity] = S.one
    order[0] = G.identity
    count, _ = kernels.close_map(h_src, h_tgt, fmap, order, 0, 1)
    rec(0, fmap, order, count)

    X = twisted.coefficients(np.arange(twisted.order))
    homs = []
    for s in found:
        acc = np.full(twisted.order, S.zero, dtype=np.int64)
        for g in range(G.order):
            acc = S.addv(acc, S.mulv(base.table[X[:, g]], int(s[g])))
        try:
            homs.append(RingHom(twisted.ring, S, acc))
        except NotAHomomorphism:
            continue
    homs.sort(key=lambda h: h.table.tolist())
    return HomSetUnder(twisted, base, homs)


def enumerate_homs_under_naive(twisted: TwistedGroupRing, base: RingHom) -> HomSetUnder:
    """Same hom-set by generic search over the full ring tables (no reduction)."""
    pins = {int(twisted.structure_map(r)): int(base(r)) for r in range(twisted.base.order)}
    return HomSetUnder(twisted, base, hom_search(twisted.ring, base.target, pins))


def enumerate_homs_over(action: GroupAction, semi: SemiGroup) -> HomSetOver:
    """All group maps ``G -> semi_R(S)`` whose composite with ``semi -> Aut(R)`` is ``theta``."""
    require("group", action.group.order)
    constraints = {g: semi.fiber(action.aut_index(g)) for g in range(action.group.order)}
    homs = hom_search(action.group, semi.group, constraints)
    for a in homs:
        if not np.array_equal(semi.to_aut.table[a.table], action.theta.table):
            raise TargetMembershipFailure("fiber-constrained search returned a map not over theta")
    return HomSetOver(action, semi, homs)


# -- verification ---------------------------------------------------------------


def verify_bijection(action: GroupAction, base: RingHom, *, derived=True) -> Report:
    rep = Report()
    with timed(rep):
        tw = twistify(action)
        semi = semilinearize(base, action.autgroup)
        under = enumerate_homs_under(tw, base)
        over = enumerate_homs_over(action, semi)
        card = {"homs_under": len(under), "homs_over": len(over), "semi": len(semi), "twisted": tw.order}
        rep.add("cardinality", len(under) == len(over), cardinalities=card)

        images, bad = [], []
        for i, f in enumerate(under):
            try:
                images.append(pi(tw, semi, f))
            except (TargetMembershipFailure, NotAHomomorphism):
                bad.append(i)
        rep.add("pi_well_defined", not bad, witnesses=bad, cardinalities={"checked": len(under)})
        keys = [tuple(a.table.tolist()) for a in images]
        dup = sorted({k for k in keys if keys.count(k) > 1})
        rep.add("pi_injective", not dup, witnesses=[list(k) for k in dup])
        over_keys = {tuple(a.table.tolist()) for a in over}
        missing = sorted(over_keys - set(keys))
        stray = sorted(set(keys) - over_keys)
        rep.add("pi_surjective", not missing and not stray, witnesses=[list(k) for k in missing + stray])

        bad = [i for i, (f, a) in enumerate(zip(under, images)) if pi_inverse(tw, semi, a) != f]
        rep.add("roundtrip_under", not bad, witnesses=bad, cardinalities={"checked": len(images)})
        bad = []
        for i, a in enumerate(over):
            try:
                if pi(tw, semi, pi_inverse(tw, semi, a)) != a:
                    bad.append(i)
            except TargetMembershipFailure:
                bad.append(i)
        rep.add("roundtrip_over", not bad, witnesses=bad, cardinalities={"checked": len(over)})
    if derived:
        with timed(rep):
            try:
                _derived_checks(rep, action, base, tw, semi, under, over)
            except CapExceeded as exc:
                rep.notes.append(f"unit/counit checks skipped: {exc}")
    return rep


def _semi_action(semi: SemiGroup) -> GroupAction:
    return GroupAction(semi.group, semi.ring, semi.autgroup, semi.to_aut)


def unit(action: GroupAction) -> GroupHom:
    """``eta_G = pi(id)``: ``g -> (1_R g, theta_g)`` into ``semi_R(R_theta[G])``."""
    tw = twistify(action)
    semi_tw = semilinearize(tw.structure_map, action.autgroup)
    return pi(tw, semi_tw, RingHom.identity(tw.ring))


def counit(semi: SemiGroup) -> RingHom:
    """``eps_S = pi^-1(id)``: ``R[semi_R(S)] -> S``, ``r x -> chi(r) s_x``."""
    tw = twistify(_semi_action(semi))
    return pi_inverse(tw, semi, GroupHom.identity(semi.group))


def _derived_checks(rep, action, base, tw, semi, under, over):
    """Unit, counit, and triangle identities, all computed from pi."""
    semi_tw = semilinearize(tw.structure_map, action.autgroup)
    eta = pi(tw, semi_tw, RingHom.identity(tw.ring))
    rep.add("unit_is_hom_over_aut", True, derived=True, cardinalities={"semi_twisted": len(semi_tw)})

    bad = []
    for i, f in enumerate(under):
        via = semilinearize_morphism(CosliceRingMorphism(tw.structure_map, base, f), semi_tw, semi) @ eta
        if via != pi(tw, semi, f):
            bad.append(i)
    rep.add("pi_factors_through_unit", not bad, witnesses=bad, derived=True)

    sa = _semi_action(semi)
    tw_semi = twistify(sa)
    eps = pi_inverse(tw_semi, semi, GroupHom.identity(semi.group))
    rep.add("counit_is_hom_under_R", True, derived=True, cardinalities={"twisted_semi": tw_semi.order})

    bad = []
    for i, a in enumerate(over):
        Fa = twistify_morphism(SliceGroupMorphism(action, sa, a), tw, tw_semi).h
        if eps @ Fa != pi_inverse(tw, semi, a):
            bad.append(i)
    rep.add("pi_inverse_factors_through_counit", not bad, witnesses=bad, derived=True)

    # U(eps_S) . eta_{U S} = id, evaluated pointwise: eps(1_R x) must be s_x
    ones = tw_semi.monomials[semi.ring.one]
    bad = [x for x in range(len(semi)) if eps(ones[x]) != semi.pairs[x].s]
    rep.add("triangle_semilinearization", not bad, witnesses=bad, derived=True)

    # eps_{F G} . F(eta_G) = id on R_theta[G]
    sa_tw = _semi_action(semi_tw)
    tw_big = twistify(sa_tw)
    eps_tw = pi_inverse(tw_big, semi_tw, GroupHom.identity(semi_tw.group))
    F_eta = twistify_morphism(SliceGroupMorphism(action, sa_tw, eta), tw, tw_big).h
    composite = eps_tw @ F_eta
    bad = np.nonzero(composite.table != np.arange(tw.order))[0][:5].tolist()
    rep.add("triangle_twistification", not bad, witnesses=bad, derived=True,
            cardinalities={"twisted_semi_twisted": tw_big.order})


def naturality_squares(j: SliceGroupMorphism, h: CosliceRingMorphism, mu: RingHom, lam: RingHom):
    """Evaluate both squares and both one-element reductions.

    Returns a dict of booleans ``left``, ``right``, ``left_on_1g``,
    ``right_on_units`` plus the first witness where the left square fails.
    """
    aut = j.source.autgroup
    tw_G, tw_K = twistify(j.source), twistify(j.target)
    semi_S = semilinearize(h.f, aut)
    semi_T = semilinearize(h.g, aut)
    _check_under(tw_G, h.f, mu)
    _check_under(tw_K, h.g, lam)
    F_j = twistify_morphism(j, tw_G, tw_K).h
    top = h.h.table[mu.table]
    bottom = lam.table[F_j.table]
    left = bool(np.array_equal(top, bottom))
    semi_h = semilinearize_morphism(h, semi_S, semi_T)
    p_mu, p_lam = pi(tw_G, semi_S, mu), pi(tw_K, semi_T, lam)
    right_top = semi_h.table[p_mu.table]
    right_bottom = p_lam.table[j.f.table]
    right = bool(np.array_equal(right_top, right_bottom))
    ones_G = tw_G.monomials[tw_G.base.one]
    ones_K = tw_K.monomials[tw_K.base.one]
    left_on_1g = bool(np.array_equal(top[ones_G], lam.table[ones_K[j.f.table]]))
    right_on_units = bool(
        np.array_equal(semi_T.to_units[right_top], semi_T.to_units[right_bottom])
    )
    bad = np.nonzero(top != bottom)[0]
    return {
        "left": left,
        "right": right,
        "left_on_1g": left_on_1g,
        "right_on_units": right_on_units,
        "left_witness": int(bad[0]) if len(bad) else None,
    }


def verify_naturality(j: SliceGroupMorphism, h: CosliceRingMorphism, mu: RingHom, lam: RingHom) -> Report:
    """Left square commutes iff right square commutes, plus the reductions to ``1_R g``."""
    rep = Report()
    with timed(rep):
        sq = naturality_squares(j, h, mu, lam)
        wit = [] if sq["left_witness"] is None else [sq["left_witness"]]
        rep.add("naturality_iff", sq["left"] == sq["right"], details={"left": sq["left"], "right": sq["right"]},
                witnesses=wit)
        rep.add("left_reduction", sq["left"] == sq["left_on_1g"], details={"left_on_1g": sq["left_on_1g"]})
        rep.add("right_reduction", sq["right"] == sq["right_on_units"],
                details={"right_on_units": sq["right_on_units"]})
    return rep


def count_semilinear_actions(action: GroupAction, m: ModuleStructure) -> list[dict[int, tuple]]:
    """Semilinear ``G``-actions on ``M`` lifting ``theta``, found on module elements directly.

    Independent of ``semi_R`` and of the twisted ring: candidate images
    come from :func:`semilinear_automorphisms`, generator images are
    extended by composing maps, and every relation is re-checked.
    """
    G = action.group
    pairs = semilinear_automorphisms(m, action.autgroup)
    fibers = {}
    for sigma, phi in pairs:
        fibers.setdefault(phi, []).append(np.array(sigma))
    ident = np.arange(m.module.order)
    gens = list(G.generators)
    out = []

    def extend(assign):
        val = {G.identity: ident}
        for g, s in zip(gens, assign):
            val[g] = s
        frontier = list(val)
        while frontier:
            nxt = []
            for a in frontier:
                for t in gens:
                    c = G.mul(a, t)
                    comp = val[a][val[t]]
                    if c in val:
                        if not np.array_equal(val[c], comp):
                            return None
                    else:
                        val[c] = comp
                        nxt.append(c)
            frontier = nxt
        for a in range(G.order):
            for b in range(G.order):
                if not np.array_equal(val[G.mul(a, b)], val[a][val[b]]):
                    return None
        return val

    members = set(pairs)
    for assign in itertools.product(*[fibers.get(action.aut_index(g), []) for g in gens]):
        val = extend(assign)
        if val is None:
            continue
        if all((tuple(val[g].tolist()), action.aut_index(g)) in members for g in range(G.order)):
            out.append({g: tuple(val[g].tolist()) for g in range(G.order)})
    return out


def verify_modules_corollary(action: GroupAction, m: ModuleStructure) -> Report:
    """Extensions of ``M`` to an ``R_theta[G]``-module versus semilinear ``G``-actions on ``M``."""
    rep = Report()
    rep.extend(verify_bijection(action, m.chi))
    with timed(rep):
        tw = twistify(action)
        semi = semilinearize(m.chi, action.autgroup)
        under = enumerate_homs_under(tw, m.chi)
        direct = count_semilinear_actions(action, m)
        end = m.end
        correspondence = []
        direct_keys = sorted(tuple(sorted(d.items())) for d in direct)
        via_pi = []
        for f in under:
            alpha = pi(tw, semi, f)
            acts = {g: tuple(end.maps[semi.pairs[alpha(g)].s].tolist()) for g in range(action.group.order)}
            via_pi.append(tuple(sorted(acts.items())))
            correspondence.append(
                {
                    "extension": f.table.tolist(),
                    "action": {
                        action.group.name(g): {
                            "map": list(acts[g]),
                            "aut": action.aut_index(g),
                        }
                        for g in range(action.group.order)
                    },
                }
            )
        ok = len(under) == len(direct) and sorted(via_pi) == direct_keys
        rep.add(
            "modules_corollary",
            ok,
            cardinalities={"extensions": len(under), "semilinear_actions": len(direct)},
            details={"correspondence": correspondence},
        )
    return rep
