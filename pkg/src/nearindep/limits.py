"""Hard size caps for the exact algorithms.

Each algorithm in this package has a documented cap on the graph order it
accepts.  The environment variable SIGMA_MAX_N may lower (never raise)
every cap at once, which is handy for smoke runs on slow machines.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields


class CapabilityError(Exception):
    """A requested size exceeds a documented cap of this library."""


@dataclass(frozen=True)
class Limits:
    graph_max_n: int = 64        # adjacency bitmasks fit one machine word
    recursion_max_n: int = 64    # memo keys are vertex bitmasks
    oracle_max_n: int = 25       # 2^n subset sweep
    canonical_max_n: int = 10    # permutation search
    trees_max_n: int = 18
    forests_max_n: int = 14
    graphs_max_n: int = 8        # 12346 classes at n = 8


def effective_limits() -> Limits:
    """Default limits, clamped by SIGMA_MAX_N when the variable is set."""
    raw = os.environ.get("SIGMA_MAX_N")
    if raw is None:
        return Limits()
    cap = int(raw)
    base = Limits()
    return Limits(**{f.name: min(getattr(base, f.name), cap) for f in fields(base)})


def check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise CapabilityError(f"{what} supports order <= {cap}, got {n}")
