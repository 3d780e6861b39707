"""
Cooperative time and size limits for the polynomial kernel
"""

import time
from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass
from typing import Iterator, Optional

from config import settings
from services.errors import ComputationTimeout, TermBudgetExceeded


@dataclass(frozen=True)
class ComputeLimits:
    max_terms: int
    deadline: Optional[float] = None


_active: ContextVar[Optional[ComputeLimits]] = ContextVar("webflat_limits", default=None)


def current_limits() -> ComputeLimits:
    limits = _active.get()
    if limits is None:
        return ComputeLimits(max_terms=settings.WEBFLAT_MAX_TERMS)
    return limits


@contextmanager
def limits(timeout_seconds: Optional[float] = None, max_terms: Optional[int] = None) -> Iterator[ComputeLimits]:
    """Scope a deadline and a term bound over every kernel call made inside the block"""
    outer = current_limits()
    deadline = outer.deadline
    if timeout_seconds:
        candidate = time.monotonic() + timeout_seconds
        deadline = candidate if deadline is None else min(deadline, candidate)
    scoped = ComputeLimits(max_terms=max_terms or outer.max_terms, deadline=deadline)
    token = _active.set(scoped)
    try:
        yield scoped
    finally:
        _active.reset(token)


def checkpoint(size: int = 0) -> None:
    limits_now = current_limits()
    if size > limits_now.max_terms:
        raise TermBudgetExceeded(
            f"intermediate polynomial has {size} terms, budget is {limits_now.max_terms}"
        )
    if limits_now.deadline is not None and time.monotonic() > limits_now.deadline:
        raise ComputationTimeout("computation exceeded its time budget")
