"""Independent brute-force oracles.

Plain Python over lists and tuples. Nothing here calls into the package
beyond reading operation tables, so agreement with the library is a real
cross-check.
"""
import itertools


def tables(ring):
    return ring.add_table.tolist(), ring.mul_table.tolist()


def group_ring_table(add, mul, zero, op, perms):
    """Multiplication table of the (twisted) group ring by direct convolution.

    Elements are coefficient tuples ``c[g]``, numbered by base-``n`` rank with
    ``c[0]`` most significant. ``perms[h]`` is the automorphism attached to ``h``.
    """
    n, m = len(add), len(op)
    elems = list(itertools.product(range(n), repeat=m))
    rank = {c: i for i, c in enumerate(elems)}
    out = []
    for x in elems:
        row = []
        for y in elems:
            acc = [zero] * m
            for h in range(m):
                for k in range(m):
                    term = mul[x[h]][perms[h][y[k]]]
                    t = op[h][k]
                    acc[t] = add[acc[t]][term]
            row.append(rank[tuple(acc)])
        out.append(row)
    return out


def ring_axiom_failures(add, mul, zero, one):
    n = len(add)
    bad = []
    for a in range(n):
        if add[a][zero] != a or mul[a][one] != a or mul[one][a] != a:
            bad.append(("identity", a))
        if zero not in add[a]:
            bad.append(("negative", a))
        for b in range(n):
            if add[a][b] != add[b][a]:
                bad.append(("add_comm", a, b))
            for c in range(n):
                if add[add[a][b]][c] != add[a][add[b][c]]:
                    bad.append(("add_assoc", a, b, c))
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    bad.append(("mul_assoc", a, b, c))
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    bad.append(("left_dist", a, b, c))
                if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]:
                    bad.append(("right_dist", a, b, c))
    return bad


def group_axiom_failures(op, e):
    n = len(op)
    bad = [("identity", a) for a in range(n) if op[a][e] != a or op[e][a] != a]
    bad += [("inverse", a) for a in range(n) if e not in op[a]]
    bad += [
        ("assoc", a, b, c)
        for a in range(n) for b in range(n) for c in range(n)
        if op[op[a][b]][c] != op[a][op[b][c]]
    ]
    return bad


def is_ring_hom(f, add1, mul1, one1, add2, mul2, one2):
    n = len(add1)
    if f[one1] != one2:
        return False
    return all(
        f[add1[a][b]] == add2[f[a]][f[b]] and f[mul1[a][b]] == mul2[f[a]][f[b]]
        for a in range(n) for b in range(n)
    )


def automorphisms(ring):
    """Every bijection tested against both tables. Feasible up to order 8."""
    add, mul = tables(ring)
    n = ring.order
    return sorted(
        list(p) for p in itertools.permutations(range(n))
        if is_ring_hom(p, add, mul, ring.one, add, mul, ring.one)
    )


def homs_under(tw, chi):
    """Ring maps ``R_theta[G] -> S`` restricting to ``chi`` on ``R e``.

    Any such map sends ``sum r_g g`` to ``sum chi(r_g) s_g`` with ``s_g`` the
    image of ``1 g``; try every choice of the ``s_g`` and keep those that
    are ring maps on the full tables.
    """
    R, S = tw.base, chi.target
    G = tw.group
    add1, mul1 = tables(tw.ring)
    add2, mul2 = tables(S)
    chi_t = chi.table.tolist()
    coeffs = [tuple(int(v) for v in tw.coefficients(x)) for x in range(tw.order)]
    found = []
    for imgs in itertools.product(range(S.order), repeat=G.order):
        f = []
        for c in coeffs:
            acc = S.zero
            for g in range(G.order):
                acc = add2[acc][mul2[chi_t[c[g]]][imgs[g]]]
            f.append(acc)
        if is_ring_hom(f, add1, mul1, tw.ring.one, add2, mul2, S.one):
            found.append(f)
    return sorted(found)


def semilinear_pairs(chi, perms, units):
    """``(s, phi)`` with ``s`` a unit and ``s chi(r) = chi(phi r) s`` for every ``r``."""
    mul = chi.target.mul_table.tolist()
    f = chi.table.tolist()
    return sorted(
        (s, i) for s in units for i, p in enumerate(perms)
        if all(mul[s][f[r]] == mul[f[p[r]]][s] for r in range(len(f)))
    )


def units(ring):
    mul = ring.mul_table.tolist()
    one = ring.one
    return [a for a in range(ring.order) if any(mul[a][b] == one and mul[b][a] == one for b in range(ring.order))]


def homs_over(action, semi):
    """Group maps ``G -> semi`` lying over ``theta``, by trying every assignment."""
    G = action.group
    gop, sop = G.op.tolist(), semi.group.op.tolist()
    theta = action.theta.table.tolist()
    phis = [p for _, p in semi.pairs]
    found = []
    for f in itertools.product(range(len(semi)), repeat=G.order):
        if any(phis[f[g]] != theta[g] for g in range(G.order)):
            continue
        if all(f[gop[a][b]] == sop[f[a]][f[b]] for a in range(G.order) for b in range(G.order)):
            found.append(list(f))
    return sorted(found)


def semilinear_actions(action, m):
    """``G``-actions on ``M`` by additive bijections with ``g(r x) = theta_g(r) g(x)``.

    Tries every assignment of a permutation of ``M`` to every group element.
    """
    G = action.group
    n = m.module.order
    madd = m.module.add_table.tolist()
    act = m.end.maps[m.chi.table].tolist()  # act[r][x] = r . x
    perms = action.perms.tolist()
    gop = G.op.tolist()
    candidates = []
    for g in range(G.order):
        ok = []
        for s in itertools.permutations(range(n)):
            if any(s[madd[x][y]] != madd[s[x]][s[y]] for x in range(n) for y in range(n)):
                continue
            if any(s[act[r][x]] != act[perms[g][r]][s[x]] for r in range(len(act)) for x in range(n)):
                continue
            ok.append(s)
        candidates.append(ok)
    found = []
    for assign in itertools.product(*candidates):
        if list(assign[G.identity]) != list(range(n)):
            continue
        if all(
            assign[gop[a][b]][x] == assign[a][assign[b][x]]
            for a in range(G.order) for b in range(G.order) for x in range(n)
        ):
            found.append(assign)
    return found
