"""Size caps and search budgets.

Caps live in a context variable so they can be overridden for a block::

    with caps(ring=512):
        enumerate_automorphisms(big_ring)
"""
from __future__ import annotations

import contextlib
import contextvars
import dataclasses

from .errors import CapExceeded


@dataclasses.dataclass(frozen=True)
class Caps:
    ring: int = 256
    group: int = 64
    module: int = 64
    twisted: int = 65536
    materialize: int = 256
    search_nodes: int = 2_000_000
    quadruples: int = 20_000


_current: contextvars.ContextVar[Caps] = contextvars.ContextVar("caps", default=Caps())


def get_caps() -> Caps:
    return _current.get()


@contextlib.contextmanager
def caps(**overrides: int):
    unknown = set(overrides) - {f.name for f in dataclasses.fields(Caps)}
    if unknown:
        raise ValueError(f"unknown cap(s): {', '.join(sorted(unknown))}")
    token = _current.set(dataclasses.replace(_current.get(), **overrides))
    try:
        yield _current.get()
    finally:
        _current.reset(token)


def require(name: str, size: int) -> None:
    limit = getattr(get_caps(), name)
    if size > limit:
        raise CapExceeded(name, limit, size)
