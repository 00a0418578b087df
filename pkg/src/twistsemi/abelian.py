"""Finite abelian groups in invariant-factor form and their endomorphism rings."""
from __future__ import annotations

import functools
import itertools

import numpy as np

from ._util import from_digits, to_digits
from .config import require
from .errors import ValidationError
from .rings import FiniteRing, check_ring


class FiniteAbelianGroup:
    """``Z/n1 x Z/n2 x ...`` with ``n1 | n2 | ...``; elements are residue tuples in lex order."""

    def __init__(self, factors):
        factors = tuple(int(n) for n in factors)
        if not factors or any(n < 1 for n in factors):
            raise ValidationError(f"invariant factors must be positive, got {list(factors)}")
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise ValidationError(f"invariant factors must divide each other: {a} does not divide {b}")
        self.factors = factors
        self.order = int(np.prod(factors))
        self.tuples = to_digits(np.arange(self.order), factors)

    def __repr__(self):
        return f"FiniteAbelianGroup({list(self.factors)})"

    def __len__(self):
        return self.order

    @property
    def label(self):
        return " x ".join(f"Z/{n}" for n in self.factors)

    def index(self, residues):
        """Id of a residue tuple, or an array of ids for a stack of tuples."""
        ids = from_digits(np.asarray(residues) % self.factors, self.factors)
        return int(ids) if ids.ndim == 0 else ids

    def add(self, a, b):
        return from_digits((self.tuples[a] + self.tuples[b]) % self.factors, self.factors)

    @functools.cached_property
    def add_table(self):
        return self.add(np.arange(self.order)[:, None], np.arange(self.order)[None, :])

    @functools.cached_property
    def basis(self):
        """Ids of the standard generators ``e_i`` (order ``n_i``)."""
        return [self.index(np.eye(len(self.factors), dtype=np.int64)[i]) for i in range(len(self.factors))]


class EndomorphismRing(FiniteRing):
    """``End(M)``: elements are additive self-maps of ``M``, ids by lex order of value tables."""

    def __init__(self, module, maps, add, mul, one, names):
        super().__init__(add, mul, 0, one, label=f"End({module.label})", names=names)
        self.module = module
        self.maps = maps
        self._by_table = {tuple(t): i for i, t in enumerate(maps.tolist())}

    def index_of_map(self, table):
        return self._by_table[tuple(int(x) for x in table)]


def endomorphism_ring(m: FiniteAbelianGroup) -> EndomorphismRing:
    require("module", m.order)
    # an endomorphism is fixed by the images of the basis; e_i may go to any y with n_i * y = 0
    choices = []
    for n, e in zip(m.factors, m.basis):
        ok = [y for y in range(m.order) if not np.any((n * m.tuples[y]) % m.factors)]
        choices.append(ok)
    tables = []
    coords = m.tuples
    for images in itertools.product(*choices):
        acc = np.zeros((m.order, len(m.factors)), dtype=np.int64)
        for i, y in enumerate(images):
            acc = acc + coords[:, i : i + 1] * m.tuples[y][None, :]
        tables.append(from_digits(acc % m.factors, m.factors))
    maps = np.array(sorted(t.tolist() for t in tables), dtype=np.int64)
    size = len(maps)
    require("ring", size)
    index = {tuple(t): i for i, t in enumerate(maps.tolist())}
    lookup = _lookup(maps, index)
    add = np.empty((size, size), dtype=np.int64)
    mul = np.empty((size, size), dtype=np.int64)
    for i in range(size):
        add[i] = lookup(m.add(maps[i][None, :], maps))
        mul[i] = lookup(maps[i][maps])
    one = index[tuple(range(m.order))]
    names = ["{" + ",".join(str(int(v)) for v in maps[i][m.basis]) + "}" for i in range(size)]
    ring = check_ring(add, mul, 0, one, label=f"End({m.label})", names=names)
    return EndomorphismRing(m, maps, ring.add_table, ring.mul_table, one, names)


def _lookup(maps, index):
    def look(rows):
        return np.array([index[tuple(r)] for r in rows.tolist()], dtype=np.int64)

    return look
