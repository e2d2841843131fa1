"""Brute-force enumeration oracle for cross-validating the search engine.

Generate-and-test over every injective label assignment, in lexicographic
order, filtered by the validator.  Deliberately shares no pruning logic or
state with the backtracking searcher; agreement between the two is the
central cross-check of this repository.
"""

from __future__ import annotations

import itertools
import math

from setgraceful.graph import Graph
from setgraceful.labeling import Labeling, validate
from setgraceful.labels import check_ground_size

DEFAULT_CAP = 10_000_000


class EnumerationCapError(RuntimeError):
    """Enumeration would exceed the oracle's hard cap; carries the size."""

    def __init__(self, size: int, cap: int):
        super().__init__(f"brute force would enumerate {size} assignments (cap {cap})")
        self.size = size
        self.cap = cap


def brute_force_enumerate(g: Graph, m: int, cap: int = DEFAULT_CAP) -> list[Labeling]:
    """All set-graceful labelings of g over ground size m, in lexicographic order.

    Enumerates every injective map from vertices to labels and keeps the ones
    the validator accepts.  An m inconsistent with the edge count is allowed
    and simply yields an empty list.  Refuses to run when the number of
    injective maps exceeds the cap.
    """
    check_ground_size(m)
    size = math.perm(1 << m, g.n) if g.n <= 1 << m else 0
    if size > cap:
        raise EnumerationCapError(size, cap)
    found = []
    for assignment in itertools.permutations(range(1 << m), g.n):
        candidate = Labeling(m, assignment)
        if validate(g, candidate).valid:
            found.append(candidate)
    return found
