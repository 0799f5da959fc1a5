"""Per-instance resource caps shared by the heavy computations."""

from __future__ import annotations

import os
import time
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from typing import Optional


class ResourceLimitExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class Caps:
    max_cells: Optional[int] = None
    deadline: Optional[float] = None  # time.monotonic() value


_caps: ContextVar[Caps] = ContextVar("aiinv_caps", default=Caps())


def env_budget_ms() -> Optional[int]:
    raw = os.environ.get("AIINV_MAX_MS")
    if not raw:
        return None
    return int(raw)


@contextmanager
def limits(max_cells: Optional[int] = None, budget_ms: Optional[int] = None):
    """Apply caps to everything computed inside the block.

    ``AIINV_MAX_MS`` overrides ``budget_ms`` when set.
    """
    env = env_budget_ms()
    if env is not None:
        budget_ms = env
    deadline = None if budget_ms is None else time.monotonic() + budget_ms / 1000
    token = _caps.set(Caps(max_cells, deadline))
    try:
        yield
    finally:
        _caps.reset(token)


def check_cells(n: int) -> None:
    cap = _caps.get().max_cells
    if cap is not None and n > cap:
        raise ResourceLimitExceeded(f"{n} degree cells exceed the cap of {cap}")


def check_time() -> None:
    deadline = _caps.get().deadline
    if deadline is not None and time.monotonic() > deadline:
        raise ResourceLimitExceeded("time budget exhausted")
