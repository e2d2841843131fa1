"""Backtracking search for set-graceful labelings with bitmask occupancy.

The engine assigns labels to vertices in a connected-first order, keeping
two occupancy bitsets (used vertex labels, used edge labels) as plain
integers with one bit per label.  A candidate label survives only if it is
an unused vertex label and every edge to an already-placed neighbor gets a
fresh edge label; distinct vertex labels already rule out empty edge
labels, so the zero bit of the edge bitset can never be set.

Translation symmetry: XOR-ing every vertex label with a fixed A preserves
all edge labels, and the action is free (A xor f = f forces A = 0), so each
orbit has size 2**m and contains exactly one labeling with the anchor
vertex at the empty label.  With symmetry on, the anchor (first vertex in
order) is pinned to 0 and raw counts are anchored counts times 2**m.

Determinism: candidate labels are tried in ascending numeric order, and
emitted witnesses are sorted by their label sequence in vertex order, so
outcomes are identical for any thread_hint.  Parallel fan-out over the
first unpinned vertex's label choices is used only in count/all mode with
no node limit; first mode and node-limited runs are sequential, since their
early-stop points depend on exploration order.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from setgraceful.conditions import feasible_ground_size
from setgraceful.graph import Graph
from setgraceful.labeling import Labeling
from setgraceful.labels import check_ground_size

MODES = ("first", "count", "all")


@dataclass(frozen=True)
class SearchConfig:
    mode: str = "count"
    use_translation_symmetry: bool = True
    node_limit: int | None = None
    thread_hint: int | None = None

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError(f"node_limit must be positive, got {self.node_limit}")
        if self.thread_hint is not None and self.thread_hint < 1:
            raise ValueError(f"thread_hint must be at least 1, got {self.thread_hint}")


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a search run.

    Counts are exact when the whole tree was explored; a node-limited run
    reports the partial counts found before the limit, and first mode stops
    at its first hit, so its counts cover only what was found.  m is None
    only for graphs whose edge count rules out every ground size, with the
    reason recorded.
    """

    m: int | None
    count_raw: int
    count_anchored: int
    witnesses: tuple[Labeling, ...]
    nodes_explored: int
    exhausted: bool
    reason: str | None = field(default=None)


def vertex_order(g: Graph) -> list[int]:
    """Deterministic connected-first assignment order.

    Starts at a maximum-degree vertex, then repeatedly appends the vertex
    with the most already-placed neighbors (ties to the smallest index).
    Isolated vertices come last, in index order.
    """
    deg = g.degrees()
    adj = g.adjacency()
    active = [v for v in range(g.n) if deg[v] > 0]
    isolated = [v for v in range(g.n) if deg[v] == 0]
    order: list[int] = []
    if active:
        start = max(active, key=lambda v: (deg[v], -v))
        placed_nbrs = [0] * g.n
        remaining = set(active)
        current = start
        while True:
            order.append(current)
            remaining.discard(current)
            if not remaining:
                break
            for w in adj[current]:
                placed_nbrs[w] += 1
            current = max(remaining, key=lambda v: (placed_nbrs[v], -v))
    order.extend(isolated)
    return order


def _explore(
    n_pos: int,
    back: list[list[int]],
    labels: list[int],
    full: int,
    used_v: int,
    used_e: int,
    start: int,
    mode: str,
    budget: int | None,
) -> tuple[int, int, list[tuple[int, ...]], int, bool]:
    """Iterative DFS over positions start..n_pos-1.

    labels[0:start] and the occupancy masks describe the already-applied
    prefix.  Returns (solutions, anchored solutions, witness tuples in
    order-space, assignment attempts, limit_hit).
    """
    count = 0
    anchored = 0
    witnesses: list[tuple[int, ...]] = []
    nodes = 0
    limit_hit = False

    if start >= n_pos:
        # The prefix is already a complete assignment.
        count = 1
        anchored = 1 if n_pos == 0 or labels[0] == 0 else 0
        if mode != "count":
            witnesses.append(tuple(labels))
        return count, anchored, witnesses, nodes, limit_hit

    last = n_pos - 1
    avail = [0] * n_pos
    vbit = [0] * n_pos
    ebits = [0] * n_pos
    i = start
    avail[i] = full & ~used_v
    while True:
        a = avail[i]
        if a == 0:
            if i == start:
                break
            i -= 1
            # Undo the assignment currently applied at the shallower depth.
            used_v ^= vbit[i]
            used_e ^= ebits[i]
            continue
        if budget is not None and nodes >= budget:
            limit_hit = True
            break
        nodes += 1
        low = a & -a
        avail[i] = a ^ low
        lab = low.bit_length() - 1
        acc = 0
        ok = True
        for j in back[i]:
            eb = 1 << (lab ^ labels[j])
            if (used_e | acc) & eb:
                ok = False
                break
            acc |= eb
        if not ok:
            continue
        labels[i] = lab
        if i == last:
            count += 1
            if labels[0] == 0:
                anchored += 1
            if mode == "all":
                witnesses.append(tuple(labels))
            elif mode == "first":
                witnesses.append(tuple(labels))
                break
            continue
        vbit[i] = low
        ebits[i] = acc
        used_v |= low
        used_e |= acc
        i += 1
        avail[i] = full & ~used_v
    return count, anchored, witnesses, nodes, limit_hit


def search(g: Graph, cfg: SearchConfig | None = None) -> SearchOutcome:
    """Find, count, or enumerate the set-graceful labelings of g.

    A graph whose edge count is not 2**m - 1 for any m gets an immediate
    zero outcome with the reason recorded (not an error).  Otherwise the
    ground size is forced and the engine explores every injective
    assignment compatible with the occupancy bitsets.
    """
    if cfg is None:
        cfg = SearchConfig()
    verdict = feasible_ground_size(g)
    if not verdict.feasible:
        return SearchOutcome(
            m=None,
            count_raw=0,
            count_anchored=0,
            witnesses=(),
            nodes_explored=0,
            exhausted=True,
            reason=f"edge count {len(g.edges)} is not 2^m - 1 for any m",
        )
    m = verdict.m
    check_ground_size(m)
    universe = 1 << m
    full = (1 << universe) - 1
    n = g.n

    if n == 0:
        wits = (Labeling(m, ()),) if cfg.mode != "count" else ()
        return SearchOutcome(
            m=m, count_raw=1, count_anchored=1, witnesses=wits,
            nodes_explored=0, exhausted=True,
        )

    order = vertex_order(g)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    back: list[list[int]] = [[] for _ in range(n)]
    for u, v in g.edges:
        i, j = pos[u], pos[v]
        if i < j:
            back[j].append(i)
        else:
            back[i].append(j)
    for lst in back:
        lst.sort()

    sym = cfg.use_translation_symmetry
    labels = [0] * n
    if sym:
        # Pin the anchor to the empty label; one attempt on the house.
        used_v, used_e = 1, 0
        start = 1
        nodes = 1
    else:
        used_v = used_e = 0
        start = 0
        nodes = 0

    budget = None
    if cfg.node_limit is not None:
        budget = max(cfg.node_limit - nodes, 0)

    parallel = (
        (cfg.thread_hint or 0) > 1
        and cfg.mode in ("count", "all")
        and cfg.node_limit is None
        and start < n
    )
    if parallel:
        branch_labels = []
        a = full & ~used_v
        while a:
            low = a & -a
            a ^= low
            branch_labels.append(low.bit_length() - 1)
        tasks: list[tuple[int, int]] = []
        for lab in branch_labels:
            nodes += 1
            acc = 0
            ok = True
            for j in back[start]:
                eb = 1 << (lab ^ labels[j])
                if (used_e | acc) & eb:
                    ok = False
                    break
                acc |= eb
            if ok:
                tasks.append((lab, acc))

        def run_branch(task: tuple[int, int]):
            lab, acc = task
            branch_labels_arr = labels.copy()
            branch_labels_arr[start] = lab
            return _explore(
                n, back, branch_labels_arr, full,
                used_v | (1 << lab), used_e | acc,
                start + 1, cfg.mode, None,
            )

        with ThreadPoolExecutor(max_workers=cfg.thread_hint) as pool:
            results = list(pool.map(run_branch, tasks))
        count = sum(r[0] for r in results)
        anchored = sum(r[1] for r in results)
        wit_tuples = [w for r in results for w in r[2]]
        nodes += sum(r[3] for r in results)
        limit_hit = False
    else:
        count, anchored, wit_tuples, explored, limit_hit = _explore(
            n, back, labels, full, used_v, used_e, start, cfg.mode, budget,
        )
        nodes += explored

    count_raw = count * universe if sym else count
    count_anchored = anchored

    if cfg.mode == "count":
        final_witnesses: tuple[Labeling, ...] = ()
    else:
        tuples = wit_tuples
        if sym and cfg.mode == "all":
            # Expand each anchored representative to its full translation orbit.
            tuples = [tuple(x ^ t for x in w) for w in wit_tuples for t in range(universe)]
        if cfg.mode == "all":
            tuples.sort()
        converted = []
        for w in tuples:
            vals = [0] * n
            for i, lab in enumerate(w):
                vals[order[i]] = lab
            converted.append(Labeling(m, tuple(vals)))
        final_witnesses = tuple(converted)

    return SearchOutcome(
        m=m,
        count_raw=count_raw,
        count_anchored=count_anchored,
        witnesses=final_witnesses,
        nodes_explored=nodes,
        exhausted=not limit_hit,
    )
