"""A fixed family of small instances used by the law suites and the CLI.

Everything here is built on demand and memoized. Objects over ``F4``:

* actions ``triv1`` (trivial group), ``frob`` (C2 by Frobenius),
  ``triv2`` (C2 trivially), ``v4`` (C2 x C2, ``(a, b) -> Frob^a``);
* slice morphisms between them (identities, ``frob -> v4 -> frob``,
  ``triv1 -> frob``, ``triv2 -> v4``);
* coslice objects ``id`` (F4 itself), ``twisted`` (structure map into
  ``F4_Frob[C2]``), ``end`` (regular module ``F4 -> End(Z/2 x Z/2)``).
"""
from __future__ import annotations

import functools
import itertools

import numpy as np

from .actions import (
    CosliceRingMorphism,
    SliceGroupMorphism,
    check_coslice_morphism,
    check_slice_morphism,
    make_action,
)
from . import automorphisms, semilin, twist
from .adjunction import enumerate_homs_under, verify_naturality
from .automorphisms import enumerate_automorphisms
from .groups import cyclic, direct_product, trivial_group
from .homs import RingHom, hom_search
from .report import Report, timed
from .rings import check_ring, gf, matrix_ring, poly_quotient, product, subring, zmod
from .semilin import regular_module, semilinearize, semilinearize_morphism
from .twist import twistify, twistify_morphism


@functools.lru_cache(maxsize=None)
def f4():
    return gf(2, [1, 1, 1])


@functools.lru_cache(maxsize=None)
def actions():
    R = f4()
    aut = enumerate_automorphisms(R)
    c2 = cyclic(2)
    v4 = direct_product(cyclic(2), cyclic(2))  # elements (a, b) -> id 2a + b
    return {
        "triv1": make_action(trivial_group(), R, {}, aut),
        "frob": make_action(c2, R, {1: 1}, aut),
        "triv2": make_action(c2, R, {1: 0}, aut),
        "v4": make_action(v4, R, {2: 1, 1: 0}, aut),
    }


@functools.lru_cache(maxsize=None)
def slice_morphisms():
    a = actions()
    out = {name: SliceGroupMorphism.identity(act) for name, act in a.items()}
    out["frob>v4"] = check_slice_morphism(a["frob"], a["v4"], [0, 2])
    out["v4>frob"] = check_slice_morphism(a["v4"], a["frob"], [0, 0, 1, 1])
    out["triv1>frob"] = check_slice_morphism(a["triv1"], a["frob"], [0])
    out["triv1>v4"] = check_slice_morphism(a["triv1"], a["v4"], [0])
    out["triv2>v4"] = check_slice_morphism(a["triv2"], a["v4"], [0, 1])
    out["triv1>triv2"] = check_slice_morphism(a["triv1"], a["triv2"], [0])
    return out


@functools.lru_cache(maxsize=None)
def coslice_objects():
    R = f4()
    return {
        "id": RingHom.identity(R),
        "twisted": twistify(actions()["frob"]).structure_map,
        "end": regular_module(R).chi,
    }


def homs_under_between(f: RingHom, g: RingHom):
    """All coslice morphisms from ``f`` to ``g``."""
    pins = {int(f(r)): int(g(r)) for r in range(f.source.order)}
    return [CosliceRingMorphism(f, g, h) for h in hom_search(f.target, g.target, pins)]


@functools.lru_cache(maxsize=None)
def coslice_morphisms():
    objs = coslice_objects()
    out = {}
    for (a, f), (b, g) in itertools.product(objs.items(), repeat=2):
        for i, h in enumerate(homs_under_between(f, g)):
            out[f"{a}>{b}#{i}"] = h
    return out


def twist_functor_laws() -> Report:
    rep = Report()
    with timed(rep):
        for name, act in actions().items():
            F = twistify_morphism(SliceGroupMorphism.identity(act)).h
            rep.add(f"twist_identity[{name}]", F == RingHom.identity(twistify(act).ring))
        sm = slice_morphisms()
        for first, second in (("frob>v4", "v4>frob"), ("triv1>frob", "frob>v4"), ("triv2>v4", "v4>frob")):
            j1, j2 = sm[first], sm[second]
            lhs = twistify_morphism(j2 @ j1).h
            rhs = twistify_morphism(j2).h @ twistify_morphism(j1).h
            rep.add(f"twist_composition[{first},{second}]", lhs == rhs)
    return rep


def semi_functor_laws() -> Report:
    rep = Report()
    objs = coslice_objects()
    aut = enumerate_automorphisms(f4())
    with timed(rep):
        for name, f in objs.items():
            s = semilinearize(f, aut)
            hom = semilinearize_morphism(CosliceRingMorphism.identity(f), s, s)
            rep.add(f"semi_identity[{name}]", hom.table.tolist() == list(range(len(s))))
        chains = []
        for h1 in homs_under_between(objs["id"], objs["twisted"]):
            for h2 in homs_under_between(objs["twisted"], objs["end"]):
                chains.append(("id>twisted>end", h1, h2))
        for h1 in homs_under_between(objs["twisted"], objs["end"]):
            for h2 in homs_under_between(objs["end"], objs["twisted"]):
                chains.append(("twisted>end>twisted", h1, h2))
        for i, (label, h1, h2) in enumerate(chains):
            lhs = semilinearize_morphism(h2 @ h1)
            rhs = semilinearize_morphism(h2) @ semilinearize_morphism(h1)
            rep.add(f"semi_composition[{label}#{i}]", lhs == rhs)
    return rep


def naturality_quadruples():
    """Every composable ``(j, h, mu, lambda)`` in the family."""
    out = []
    for (jn, j), (hn, h) in itertools.product(slice_morphisms().items(), coslice_morphisms().items()):
        mus = enumerate_homs_under(twistify(j.source), h.f)
        lams = enumerate_homs_under(twistify(j.target), h.g)
        for (a, mu), (b, lam) in itertools.product(enumerate(mus), enumerate(lams)):
            out.append((f"{jn}|{hn}|mu{a}|lam{b}", j, h, mu, lam))
    return out


def broken_quadruples():
    """Quadruples whose ``lambda`` is precomposed with a nontrivial automorphism under ``R``.

    Starting from a commuting square ``(id, id, mu, mu)``, both squares
    must then fail together.
    """
    objs = coslice_objects()
    act = actions()["frob"]
    tw = twistify(act)
    j = slice_morphisms()["frob"]
    out = []
    for target in ("end", "twisted"):
        f = objs[target]
        h = CosliceRingMorphism.identity(f)
        autos = [m.h for m in homs_under_between(tw.structure_map, tw.structure_map) if m.h.is_bijective]
        for i, mu in enumerate(enumerate_homs_under(tw, f)):
            for k, a in enumerate(autos):
                if a == RingHom.identity(tw.ring):
                    continue
                out.append((f"broken[{target}]mu{i}#{k}", j, h, mu, mu @ a))
    return out


def naturality_suite(include_broken=True) -> Report:
    rep = Report()
    quads = naturality_quadruples() + (broken_quadruples() if include_broken else [])
    for name, j, h, mu, lam in quads:
        rep.extend(verify_naturality(j, h, mu, lam), prefix=f"{name}:")
    return rep


def clear_caches():
    """Drop every memoized object (family members, twisted rings, semi groups, Aut groups)."""
    for fn in (f4, actions, slice_morphisms, coslice_objects, coslice_morphisms, small_rings,
               twist._twistify, semilin._semilinearize, automorphisms._enumerate):
        fn.cache_clear()


@functools.lru_cache(maxsize=None)
def small_rings():
    """Rings of order <= 8 for the automorphism-search oracle comparison."""
    z2 = zmod(2)
    return [zmod(n) for n in range(1, 9)] + [
        f4(),
        gf(2, [1, 1, 0, 1]),
        product(z2, z2),
        product(z2, zmod(4)),
        product(z2, z2, z2),
        poly_quotient(2, [0, 0, 1]),
        poly_quotient(2, [0, 0, 0, 1]),
        product(z2, f4()),
        product(z2, poly_quotient(2, [0, 0, 1])),
        _square_zero(),
        _z4_nilpotent(),
        _z4_ramified(),
        _upper_triangular(),
    ]


# remaining order-8 rings, so the list is complete up to isomorphism


def _square_zero():
    # Z/2[u, v]/(u, v)^2 as span{1, x^2, x^3} inside Z/2[x]/(x^4)
    big = poly_quotient(2, [0, 0, 0, 0, 1])
    return subring(big, [a + 4 * b + 8 * c for a in range(2) for b in range(2) for c in range(2)],
                   label="Z/2[u,v]/(u,v)^2")


def _z4_nilpotent():
    # Z/4[y]/(2y, y^2) as span{1, 2x} inside Z/4[x]/(x^2)
    big = poly_quotient(4, [0, 0, 1])
    return subring(big, [a + 4 * 2 * b for a in range(4) for b in range(2)], label="Z/4[y]/(2y,y^2)")


def _z4_ramified():
    # Z/4[y]/(2y, y^2 - 2); id = a + 4b for a + b y
    a, b = np.divmod(np.arange(8), 4)[::-1]
    A, B, C, D = a[:, None], b[:, None], a[None, :], b[None, :]
    add = (A + C) % 4 + 4 * ((B + D) % 2)
    mul = (A * C + 2 * B * D) % 4 + 4 * ((A * D + B * C) % 2)
    names = [f"{x}+{y}y" if y else str(x) for x, y in zip(a, b)]
    return check_ring(add, mul, 0, 1, label="Z/4[y]/(2y,y^2-2)", names=names)


def _upper_triangular():
    m = matrix_ring(zmod(2), 2)
    return subring(m, [e for e in range(m.order) if (e >> 1) & 1 == 0], label="T2(Z/2)")
