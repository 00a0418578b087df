"""Acceptance gate: one PASS/FAIL line per criterion, each under its time limit.

Run with ``pytest tests/test_acceptance.py -v`` (lines appear in the
terminal summary) or ``python3 tests/test_acceptance.py``.
"""
import json
import pathlib
import subprocess
import sys
import time

import numpy as np
import pytest

import oracles
from conftest import ACCEPTANCE_LINES
from twistsemi import family
from twistsemi.actions import make_action, trivial_action
from twistsemi.adjunction import (
    count_semilinear_actions,
    enumerate_homs_over,
    enumerate_homs_under,
    enumerate_homs_under_naive,
    pi,
    pi_inverse,
)
from twistsemi.automorphisms import enumerate_automorphisms
from twistsemi.groups import cyclic, direct_product
from twistsemi.homs import RingHom
from twistsemi.rings import product, zmod
from twistsemi.semilin import regular_module, semilinearize
from twistsemi.twist import twistify

ROOT = pathlib.Path(__file__).resolve().parent.parent
FLAGSHIP = ROOT / "instances" / "flagship.inst"


class Gate:
    def __init__(self, number, title, limit):
        self.number, self.title, self.limit = number, title, limit

    def __enter__(self):
        family.clear_caches()  # time every criterion cold
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        ok = exc_type is None and elapsed < self.limit
        why = "" if exc_type is None else f"  [{exc_type.__name__}: {exc}]"
        if exc_type is None and not ok:
            why = f"  [over the {self.limit:g}s limit]"
        ACCEPTANCE_LINES.append(
            f"{'PASS' if ok else 'FAIL'}  criterion {self.number}: {self.title} ({elapsed:.2f}s / {self.limit:g}s){why}"
        )
        if exc_type is None and not ok:
            pytest.fail(f"criterion {self.number} took {elapsed:.2f}s, limit {self.limit}s")
        return False


def flagship():
    F4 = family.f4()
    act = make_action(cyclic(2), F4, {1: 1})
    return act, regular_module(F4)


def test_criterion_1_flagship_bijection():
    with Gate(1, "flagship hom-sets 3 = 3, Pi bijective, round-trips identity", 5):
        act, m = flagship()
        tw = twistify(act)
        semi = semilinearize(m.chi, act.autgroup)
        under = enumerate_homs_under(tw, m.chi)
        over = enumerate_homs_over(act, semi)
        assert len(under) == 3 and len(over) == 3
        assert [h.table.tolist() for h in under] == oracles.homs_under(tw, m.chi)
        assert sorted(a.table.tolist() for a in over) == oracles.homs_over(act, semi)
        images = [pi(tw, semi, f) for f in under]
        assert sorted(a.table.tolist() for a in images) == sorted(a.table.tolist() for a in over)
        assert len({a.table.tobytes() for a in images}) == 3
        assert all(pi_inverse(tw, semi, pi(tw, semi, f)) == f for f in under)
        assert all(pi(tw, semi, pi_inverse(tw, semi, a)) == a for a in over)


def test_criterion_2_trivial_twist_matches_group_ring():
    with Gate(2, "trivial-twist multiplication bit-identical to naive group ring", 5):
        F4 = family.f4()
        cases = [(zmod(4), cyclic(2)), (product(zmod(2), zmod(2)), cyclic(3)), (F4, cyclic(2))]
        for R, G in cases:
            tw = twistify(trivial_action(G, R))
            add, mul = oracles.tables(R)
            ident = [list(range(R.order))] * G.order
            naive = np.array(oracles.group_ring_table(add, mul, R.zero, G.op.tolist(), ident))
            assert np.array_equal(tw.ring.mul_table, naive), (R.label, G.label)


def test_criterion_3_ring_axioms():
    with Gate(3, "ring axioms on three twisted group rings", 30):
        F4, V = family.f4(), product(zmod(2), zmod(2))
        swap = [0, 2, 1, 3]
        for act in (make_action(cyclic(2), F4, {1: 1}), make_action(cyclic(2), V, {1: swap}),
                    trivial_action(cyclic(2), F4)):
            ring = twistify(act).ring
            add, mul = oracles.tables(ring)
            assert oracles.ring_axiom_failures(add, mul, ring.zero, ring.one) == []
            perms = act.perms.tolist()
            naive = oracles.group_ring_table(*oracles.tables(act.ring), act.ring.zero, act.group.op.tolist(), perms)
            assert ring.mul_table.tolist() == naive


def test_criterion_4_semi_group():
    with Gate(4, "semi over every family coslice object; id_F4 order 3, End order 6 non-abelian", 5):
        F4 = family.f4()
        aut = enumerate_automorphisms(F4)
        objs = family.coslice_objects()
        groups = {name: semilinearize(f, aut) for name, f in objs.items()}
        assert len(groups["id"]) == 3 and groups["id"].group.is_abelian
        _, m = flagship()
        assert objs["end"] == m.chi
        for name in ("end", "twisted"):
            assert len(groups[name]) == 6 and not groups[name].group.is_abelian
        for sg in groups.values():
            op = sg.group.op.tolist()
            assert oracles.group_axiom_failures(op, sg.group.identity) == []
            expected = oracles.semilinear_pairs(sg.base, aut.perms.tolist(), oracles.units(sg.target))
            assert sorted(sg.pairs) == expected
            p = sg.to_aut.table.tolist()
            aop = aut.group.op.tolist()
            assert all(p[op[a][b]] == aop[p[a]][p[b]] for a in range(len(op)) for b in range(len(op)))


def test_criterion_5_functor_laws():
    with Gate(5, "functor laws for twistify / semilinearize on 3-object chains", 30):
        rep = family.twist_functor_laws()
        rep.extend(family.semi_functor_laws())
        comps = [r for r in rep.records if "composition" in r.check]
        assert comps and all(r.passed for r in rep.records), [r.check for r in rep.failures()]


def test_criterion_6_naturality_iff():
    with Gate(6, "naturality iff on all composable quadruples plus fault-injected negatives", 120):
        rep = family.naturality_suite()
        iff = [r for r in rep.records if r.check.endswith("naturality_iff")]
        assert iff and all(r.passed for r in rep.records)
        broken = [r for r in iff if r.check.startswith("broken")]
        assert len(broken) >= 2
        assert all(not r.details["left"] and not r.details["right"] for r in broken)


def test_criterion_7_modules_corollary():
    with Gate(7, "modules corollary: flagship 3 <-> 3, Z/4 trivial C2 counts agree", 10):
        act, m = flagship()
        tw = twistify(act)
        assert len(enumerate_homs_under(tw, m.chi)) == 3
        assert len(count_semilinear_actions(act, m)) == 3
        Z4 = zmod(4)
        act4 = trivial_action(cyclic(2), Z4)
        m4 = regular_module(Z4)
        under = enumerate_homs_under(twistify(act4), m4.chi)
        direct = count_semilinear_actions(act4, m4)
        brute_under = oracles.homs_under(twistify(act4), m4.chi)
        brute_actions = oracles.semilinear_actions(act4, m4)
        assert len(under) == len(direct) == len(brute_under) == len(brute_actions) == 2
        assert len(oracles.semilinear_actions(act, m)) == 3


def _hom_cases():
    F4, Z2, Z3, Z4 = family.f4(), zmod(2), zmod(3), zmod(4)
    V = product(Z2, Z2)
    acts = [
        make_action(cyclic(2), F4, {1: 1}),
        trivial_action(cyclic(2), F4),
        trivial_action(cyclic(2), Z4),
        make_action(cyclic(2), V, {1: [0, 2, 1, 3]}),
        trivial_action(cyclic(2), V),
        trivial_action(cyclic(2), Z2),
        trivial_action(cyclic(3), Z2),
        trivial_action(direct_product(cyclic(2), cyclic(2)), Z2),
        trivial_action(cyclic(4), Z2),
        trivial_action(cyclic(2), Z3),
    ]
    for act in acts:
        tw = twistify(act)
        yield act, RingHom.identity(act.ring)
        yield act, tw.structure_map
        yield act, regular_module(act.ring).chi


def test_criterion_8_search_oracles():
    with Gate(8, "automorphism search = brute force (all 21 rings of order <= 8); reduced = naive homs", 60):
        for R in family.small_rings():
            fast = [a.table.tolist() for a in enumerate_automorphisms(R)]
            assert sorted(fast) == oracles.automorphisms(R), R.label
        n = 0
        for act, chi in _hom_cases():
            tw = twistify(act)
            assert tw.order <= 16
            reduced = [h.table.tolist() for h in enumerate_homs_under(tw, chi)]
            naive = [h.table.tolist() for h in enumerate_homs_under_naive(tw, chi)]
            assert sorted(reduced) == sorted(naive) == oracles.homs_under(tw, chi), (tw.label, chi.target.label)
            n += 1
        assert n == 30


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "twistsemi", *args], capture_output=True, cwd=ROOT)


def test_criterion_9_cli():
    with Gate(9, "CLI deterministic JSON byte-identical; exit codes 0/1/2/3", 60):
        a = _cli("check", str(FLAGSHIP), "--deterministic", "--format", "json")
        b = _cli("check", str(FLAGSHIP), "--deterministic", "--format", "json")
        assert a.returncode == b.returncode == 0, a.stderr
        assert a.stdout == b.stdout
        doc = json.loads(a.stdout)
        assert doc["passed"] and "generated_at" not in doc
        assert all("wall_time" not in r for r in doc["records"])
        inst = ROOT / "instances"
        expected = {"wrong_count.inst": 1, "nonassociative.inst": 2, "parse_error.inst": 2,
                    "bad_action.inst": 2, "cap_exceeded.inst": 3}
        for name, code in expected.items():
            assert _cli("check", str(inst / name)).returncode == code, name


if __name__ == "__main__":
    code = pytest.main([__file__, "-q"])
    sys.exit(code)
