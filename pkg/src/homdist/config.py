"""Resource caps, overridable through environment variables.

HOMDIST_VERTEX_CAP   -- largest graph the automorphism search accepts
HOMDIST_ENUM_BUDGET  -- largest number of vertex maps a brute-force scan
                        may enumerate
"""

import os

DEFAULT_VERTEX_CAP = 12
DEFAULT_ENUM_BUDGET = 10**8


def vertex_cap() -> int:
    return int(os.environ.get("HOMDIST_VERTEX_CAP", DEFAULT_VERTEX_CAP))


def enum_budget() -> int:
    return int(os.environ.get("HOMDIST_ENUM_BUDGET", DEFAULT_ENUM_BUDGET))
