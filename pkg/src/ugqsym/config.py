"""Size limits shared by every module.

Limits are read from a context variable so that a caller (or the CLI) can
override them for a block of code without touching global state:

    with limits(max_nodes=20):
        ...
"""

from __future__ import annotations

import contextlib
import contextvars
import dataclasses
import os
from dataclasses import dataclass

from .errors import CapacityError

ENV_PREFIX = "UGQSYM_"


@dataclass(frozen=True)
class Limits:
    # 16 nodes are needed to hold 8K2, the widest graph with 8 edges.
    max_nodes: int = 16
    # generate_by_edges / binomial_of_edge
    max_edges: int = 8
    # generate_by_nodes
    max_gen_nodes: int = 7
    # expand(): labels of a truncated series
    max_labels: int = 12

    @classmethod
    def from_env(cls, environ=None) -> Limits:
        environ = os.environ if environ is None else environ
        values = {}
        for field in dataclasses.fields(cls):
            raw = environ.get(ENV_PREFIX + field.name.upper())
            if raw is not None:
                values[field.name] = int(raw)
        return cls(**values)


_current: contextvars.ContextVar[Limits] = contextvars.ContextVar(
    "ugqsym_limits", default=Limits()
)


def get_limits() -> Limits:
    return _current.get()


@contextlib.contextmanager
def limits(base: Limits | None = None, **overrides):
    """Temporarily replace the active limits."""
    new = dataclasses.replace(base or get_limits(), **overrides)
    token = _current.set(new)
    try:
        yield new
    finally:
        _current.reset(token)


def check(name: str, value: int) -> None:
    bound = getattr(get_limits(), name)
    if value > bound:
        raise CapacityError(f"{name}={bound} exceeded: got {value}")
