"""Process-wide resource caps.

Every enumerating function reads these at call time unless an explicit cap
is passed, so the CLI can adjust them once per invocation.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass


@dataclass
class Limits:
    ideals: int = 1 << 22
    codewords: int = 1 << 24
    sphere: int = 1 << 24
    ground_set: int = 16


LIMITS = Limits()


@contextmanager
def limits(**overrides: int):
    """Temporarily override caps, e.g. ``with limits(ideals=100): ...``."""
    saved = {k: getattr(LIMITS, k) for k in overrides}
    for k, v in overrides.items():
        if not hasattr(LIMITS, k):
            raise AttributeError(f"unknown limit {k!r}")
        setattr(LIMITS, k, v)
    try:
        yield LIMITS
    finally:
        for k, v in saved.items():
            setattr(LIMITS, k, v)
