"""Line-oriented instance files.

Grammar (``#`` starts a comment; one directive per line)::

    ring    RING
    group   GROUP
    act     INT aut INT            generator image by canonical automorphism index
    act     INT perm LIST          generator image as a permutation of ring ids
    module  INT+ [chi regular | chi hom INT]
    target  identity | twisted | module | ring RING hom INT
    check   NAME [KEY=INT ...]      e.g. check bijection expect_homs=3
    cap     NAME=INT

    RING  := zmod INT | gf INT LIST | poly INT LIST | matrix INT ( RING )
           | product ( RING ) ( RING ) ... | endo INT+
           | tables LIST LIST [zero=INT one=INT]
    GROUP := cyclic INT | trivial | symmetric INT | product ( GROUP ) ...
           | table LIST

LIST is a JSON array. Polynomial coefficients run from the constant term up.
"""
from __future__ import annotations

import dataclasses
import hashlib
import json
import re
from typing import Any

from . import groups as G
from . import rings as R
from .abelian import FiniteAbelianGroup, endomorphism_ring
from .actions import GroupAction, make_action, trivial_action
from .automorphisms import enumerate_automorphisms
from .config import Caps
from .errors import ParseError, ValidationError
from .homs import RingHom, hom_search
from .semilin import ModuleStructure, module_from_hom, regular_module
from .twist import twistify

CHECKS = (
    "ring_axioms",
    "semi_group",
    "bijection",
    "corollary",
    "naturality",
    "functor_laws",
    "aut_oracle",
    "hom_oracle",
)

CAP_NAMES = tuple(f.name for f in dataclasses.fields(Caps))

# optional expectations a check can assert on top of its own verification
CHECK_PARAMS = {
    "semi_group": ("expect_order", "expect_abelian"),
    "bijection": ("expect_homs",),
    "corollary": ("expect_homs",),
    "aut_oracle": ("expect_count",),
}

_TOKEN = re.compile(r"\s*(?:(?P<list>\[)|(?P<lp>\()|(?P<rp>\))|(?P<kv>[A-Za-z_][\w.]*=[^\s()]+)|(?P<int>-?\d+)(?![\w.])|(?P<word>[A-Za-z_][\w.\-]*))")


@dataclasses.dataclass
class Token:
    kind: str
    value: Any
    line: int
    col: int


def tokenize(text: str, line: int = 1):
    out = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            col = len(text) - len(text[pos:].lstrip()) + 1
            raise ParseError(f"unexpected character {text[col - 1]!r}", line, col)
        start = m.start(m.lastgroup) + 1
        kind = m.lastgroup
        if kind == "list":
            depth, end = 0, m.start("list")
            for end in range(m.start("list"), len(text)):
                depth += {"[": 1, "]": -1}.get(text[end], 0)
                if depth == 0:
                    break
            if depth:
                raise ParseError("unterminated list", line, start)
            try:
                value = json.loads(text[m.start("list") : end + 1])
            except json.JSONDecodeError as exc:
                raise ParseError(f"bad list: {exc.msg}", line, start + exc.colno - 1)
            out.append(Token("list", value, line, start))
            pos = end + 1
            continue
        value = m.group(kind)
        if kind == "int":
            value = int(value)
        elif kind == "kv":
            k, v = value.split("=", 1)
            value = (k, int(v) if re.fullmatch(r"-?\d+", v) else v)
        out.append(Token(kind, value, line, start))
        pos = m.end()
    return out


class _Stream:
    def __init__(self, tokens, line, eol_col):
        self.tokens = tokens
        self.i = 0
        self.line = line
        self.eol_col = eol_col

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self, kind=None, what=None):
        tok = self.peek()
        if tok is None:
            raise ParseError(f"expected {what or kind}, found end of line", self.line, self.eol_col)
        if kind is not None and tok.kind != kind:
            raise ParseError(f"expected {what or kind}, found {tok.value!r}", tok.line, tok.col)
        self.i += 1
        return tok

    def word(self, *choices):
        tok = self.next("word", what=" | ".join(choices) or "a keyword")
        if choices and tok.value not in choices:
            raise ParseError(f"expected one of {', '.join(choices)}, found {tok.value!r}", tok.line, tok.col)
        return tok

    def integer(self, what="an integer"):
        return self.next("int", what).value

    def done(self):
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok.value!r}", tok.line, tok.col)


def _parse_ring(s: _Stream):
    kw = s.word("zmod", "gf", "poly", "matrix", "product", "endo", "tables")
    v = kw.value
    if v == "zmod":
        return ("zmod", s.integer())
    if v in ("gf", "poly"):
        return (v, s.integer(), s.next("list", "a coefficient list").value)
    if v == "matrix":
        n = s.integer()
        s.next("lp", "'('")
        base = _parse_ring(s)
        s.next("rp", "')'")
        return ("matrix", n, base)
    if v == "product":
        parts = []
        while s.peek() is not None and s.peek().kind == "lp":
            s.next("lp")
            parts.append(_parse_ring(s))
            s.next("rp", "')'")
        if not parts:
            tok = s.peek()
            raise ParseError("product needs at least one parenthesized factor", s.line, tok.col if tok else s.eol_col)
        return ("product", *parts)
    if v == "endo":
        factors = [s.integer()]
        while s.peek() is not None and s.peek().kind == "int":
            factors.append(s.integer())
        return ("endo", *factors)
    add = s.next("list", "an addition table").value
    mul = s.next("list", "a multiplication table").value
    opts = {}
    while s.peek() is not None and s.peek().kind == "kv":
        k, val = s.next("kv").value
        opts[k] = val
    return ("tables", add, mul, opts.get("zero"), opts.get("one"))


def _parse_group(s: _Stream):
    v = s.word("cyclic", "trivial", "symmetric", "product", "table").value
    if v in ("cyclic", "symmetric"):
        return (v, s.integer())
    if v == "trivial":
        return ("trivial",)
    if v == "table":
        return ("table", s.next("list", "a group table").value)
    parts = []
    while s.peek() is not None and s.peek().kind == "lp":
        s.next("lp")
        parts.append(_parse_group(s))
        s.next("rp", "')'")
    return ("product", *parts)


def build_ring(spec) -> R.FiniteRing:
    kind = spec[0]
    if kind == "zmod":
        return R.zmod(spec[1])
    if kind == "gf":
        return R.gf(spec[1], spec[2])
    if kind == "poly":
        return R.poly_quotient(spec[1], spec[2])
    if kind == "matrix":
        return R.matrix_ring(build_ring(spec[2]), spec[1])
    if kind == "product":
        return R.product(*(build_ring(p) for p in spec[1:]))
    if kind == "endo":
        return endomorphism_ring(FiniteAbelianGroup(spec[1:]))
    _, add, mul, zero, one = spec
    return R.check_ring(add, mul, zero, one, label="tables")


def build_group(spec) -> G.FiniteGroup:
    kind = spec[0]
    if kind == "cyclic":
        return G.cyclic(spec[1])
    if kind == "symmetric":
        return G.symmetric(spec[1])
    if kind == "trivial":
        return G.trivial_group()
    if kind == "table":
        return G.check_group(spec[1], label="table")
    return G.direct_product(*(build_group(p) for p in spec[1:]))


def parse_ring_recipe(text: str):
    s = _Stream(tokenize(text), 1, len(text) + 1)
    spec = _parse_ring(s)
    s.done()
    return spec


@dataclasses.dataclass
class InstanceSpec:
    ring: tuple | None = None
    group: tuple = ("trivial",)
    acts: dict = dataclasses.field(default_factory=dict)
    module: tuple | None = None
    target: tuple | None = None
    checks: list = dataclasses.field(default_factory=list)
    caps: dict = dataclasses.field(default_factory=dict)
    digest: str = ""


def parse(text: str) -> InstanceSpec:
    spec = InstanceSpec(digest=hashlib.sha256(text.encode()).hexdigest())
    seen = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        toks = tokenize(body, lineno)
        if not toks:
            continue
        s = _Stream(toks, lineno, len(body.rstrip()) + 1)
        head = s.word("ring", "group", "act", "module", "target", "check", "cap")
        key = head.value
        if key in ("ring", "group", "module", "target") and key in seen:
            raise ParseError(f"duplicate {key!r} directive (first on line {seen[key]})", lineno, head.col)
        seen.setdefault(key, lineno)
        if key == "ring":
            spec.ring = _parse_ring(s)
        elif key == "group":
            spec.group = _parse_group(s)
        elif key == "act":
            g = s.integer("a group element id")
            how = s.word("aut", "perm").value
            val = s.integer("an automorphism index") if how == "aut" else s.next("list", "a permutation").value
            spec.acts[g] = (how, val, lineno)
        elif key == "module":
            factors = [s.integer("an invariant factor")]
            while s.peek() is not None and s.peek().kind == "int":
                factors.append(s.integer())
            chi = ("regular",)
            if s.peek() is not None:
                s.word("chi")
                how = s.word("regular", "hom").value
                chi = ("hom", s.integer("a hom index")) if how == "hom" else ("regular",)
            spec.module = (tuple(factors), chi)
        elif key == "target":
            how = s.word("identity", "twisted", "module", "ring").value
            if how == "ring":
                ring = _parse_ring(s)
                s.word("hom")
                spec.target = ("ring", ring, s.integer("a hom index"))
            else:
                spec.target = (how,)
        elif key == "check":
            name = s.next("word", "a check name")
            if name.value not in CHECKS + ("all",):
                raise ParseError(f"unknown check {name.value!r}; known: {', '.join(CHECKS + ('all',))}", lineno, name.col)
            params = {}
            allowed = CHECK_PARAMS.get(name.value, ())
            while s.peek() is not None:
                tok = s.next("kv", "KEY=VALUE")
                k, v = tok.value
                if k not in allowed:
                    raise ParseError(f"check {name.value!r} takes no parameter {k!r}", lineno, tok.col)
                if not isinstance(v, int):
                    raise ParseError(f"parameter {k!r} must be an integer, got {v!r}", lineno, tok.col)
                params[k] = v
            spec.checks.append((name.value, params))
        else:
            tok = s.next("kv", "NAME=INT")
            k, v = tok.value
            if k not in CAP_NAMES:
                raise ParseError(f"unknown cap {k!r}; known: {', '.join(CAP_NAMES)}", lineno, tok.col)
            if not isinstance(v, int) or v < 0:
                raise ParseError(f"cap value must be a non-negative integer, got {v!r}", lineno, tok.col)
            spec.caps[k] = v
        s.done()
    if spec.ring is None:
        raise ParseError("missing 'ring' directive", 1, 1)
    if not spec.checks:
        spec.checks = [("all", {})]
    return spec


@dataclasses.dataclass
class Instance:
    spec: InstanceSpec
    ring: R.FiniteRing
    group: G.FiniteGroup
    action: GroupAction
    module: ModuleStructure | None
    target: RingHom

    @property
    def digest(self):
        return self.spec.digest


def build(spec: InstanceSpec) -> Instance:
    """Turn a parsed spec into validated domain objects (domain errors propagate)."""
    ring = build_ring(spec.ring)
    group = build_group(spec.group)
    aut = enumerate_automorphisms(ring)
    if spec.acts:
        images = {}
        for g, (how, val, lineno) in spec.acts.items():
            if not 0 <= g < group.order:
                raise ValidationError(f"line {lineno}: group element {g} out of range")
            images[g] = val
        # elements without an image must still be generated by the given ones
        action = make_action(group, ring, images, aut)
    else:
        action = trivial_action(group, ring, aut)
    module = None
    if spec.module is not None:
        factors, chi = spec.module
        if chi[0] == "regular":
            module = regular_module(ring)
            if module.module.factors != tuple(factors):
                raise ValidationError(
                    f"regular module of {ring.label} has invariant factors {list(module.module.factors)}, not {list(factors)}"
                )
        else:
            module = module_from_hom(ring, factors, chi[1])
    target_spec = spec.target or (("module",) if module is not None else ("twisted",))
    kind = target_spec[0]
    if kind == "identity":
        target = RingHom.identity(ring)
    elif kind == "twisted":
        target = twistify(action).structure_map
    elif kind == "module":
        if module is None:
            raise ValidationError("target 'module' needs a 'module' directive")
        target = module.chi
    else:
        other = build_ring(target_spec[1])
        homs = hom_search(ring, other)
        if not 0 <= target_spec[2] < len(homs):
            raise ValidationError(f"{len(homs)} ring maps {ring.label} -> {other.label}; index {target_spec[2]} out of range")
        target = homs[target_spec[2]]
    return Instance(spec, ring, group, action, module, target)
