"""Closed-form necessary conditions and the complete-bipartite decision.

A set-graceful labeling makes the edge map a bijection onto the nonempty
labels, so a graph can only admit one when |E| = 2**m - 1.  For complete
bipartite graphs the decision is total: stars K_{1,q} with q = 2**m - 1
admit a labeling (a constructive witness lives here), every other K_{p,q}
does not.  `proof_trace` instantiates the parity contradiction for a
concrete non-star (p, q) as a checkable list of steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from setgraceful.graph import Graph, make_complete_bipartite
from setgraceful.labeling import Labeling
from setgraceful.labels import check_ground_size

STAR_ADMITS = "star-admits"
NON_STAR_IMPOSSIBLE = "non-star-impossible"
EDGE_COUNT_INFEASIBLE = "edge-count-infeasible"


class TraceNotApplicableError(ValueError):
    """Raised when a proof trace is requested for a star pair."""


@dataclass(frozen=True)
class FeasibilityVerdict:
    """Whether |E| + 1 is a power of two; m is present exactly when it is."""

    feasible: bool
    m: int | None


@dataclass(frozen=True)
class StarDecision:
    """Outcome of the complete-bipartite decision for side sizes (p, q)."""

    kind: str
    m: int | None


@dataclass(frozen=True)
class ProofStep:
    kind: str
    numbers: dict[str, int]
    conclusion: str

    def recheck(self) -> bool:
        """Re-evaluate the step's numeric claim from its recorded numbers."""
        return _RECHECKS[self.kind](self.numbers)


@dataclass(frozen=True)
class ProofTrace:
    """The instantiated contradiction for a non-star K_{p,q}, step by step."""

    p: int
    q: int
    m: int
    steps: tuple[ProofStep, ...]

    def render(self) -> str:
        """One numbered line per step, stable wording."""
        return "\n".join(f"{i}. {s.kind}: {s.conclusion}" for i, s in enumerate(self.steps, 1))


STEP_KINDS = (
    "EdgeCountIdentity",
    "NonStarProduct",
    "UniverseExceedsVertices",
    "TranslationWitnessExists",
    "EmptyExcluded",
    "UniqueDecomposition",
    "InvolutionPairing",
    "EvenSide",
    "OddUniverseContradiction",
)

_RECHECKS: dict[str, Callable[[dict[str, int]], bool]] = {
    "EdgeCountIdentity": lambda ns: ns["p"] * ns["q"] + 1 == 2 ** ns["m"] == ns["universe"],
    "NonStarProduct": lambda ns: ns["product"] == (ns["p"] - 1) * (ns["q"] - 1) > 0,
    "UniverseExceedsVertices": lambda ns: ns["universe"] > ns["vertices"] == ns["p"] + ns["q"],
    "TranslationWitnessExists": lambda ns: ns["unused"] == ns["universe"] - ns["vertices"] >= 1,
    "EmptyExcluded": lambda ns: ns["unused"] >= 1,
    "UniqueDecomposition": lambda ns: ns["edge_count"] == ns["universe"] - 1,
    "InvolutionPairing": lambda ns: ns["pair_size"] == 2,
    "EvenSide": lambda ns: ns["pair_size"] == 2,
    "OddUniverseContradiction": lambda ns: ns["universe"] % 2 == 0 and ns["m"] >= 1,
}


def feasible_ground_size(g: Graph) -> FeasibilityVerdict:
    """The unique ground size m with |E| = 2**m - 1, when one exists."""
    t = len(g.edges) + 1
    if t & (t - 1) == 0:
        return FeasibilityVerdict(feasible=True, m=t.bit_length() - 1)
    return FeasibilityVerdict(feasible=False, m=None)


def star_theorem_decision(p: int, q: int) -> StarDecision:
    """Decide whether K_{p,q} can be set-graceful, without searching.

    Edge-count infeasible when pq + 1 is not a power of two; otherwise a
    star (one side of size 1) admits a labeling and any other shape does not.
    """
    if p < 1 or q < 1:
        raise ValueError(f"side sizes must be positive, got p={p}, q={q}")
    t = p * q + 1
    if t & (t - 1) != 0:
        return StarDecision(kind=EDGE_COUNT_INFEASIBLE, m=None)
    m = t.bit_length() - 1
    if p == 1 or q == 1:
        return StarDecision(kind=STAR_ADMITS, m=m)
    return StarDecision(kind=NON_STAR_IMPOSSIBLE, m=m)


def construct_star_labeling(m: int) -> tuple[Graph, Labeling]:
    """A set-graceful witness for the star K_{1,2**m-1}.

    The center gets the empty label, leaf i gets label i, so edge labels are
    exactly the nonempty subsets.  For m = 0 the star degenerates to the
    one-vertex graph.
    """
    check_ground_size(m)
    if m == 0:
        return Graph(n=1, edges=(), name="K_1"), Labeling(0, (0,))
    g = make_complete_bipartite(1, (1 << m) - 1)
    return g, Labeling(m, tuple(range(1 << m)))


def proof_trace(p: int, q: int) -> ProofTrace:
    """Instantiate the parity contradiction for a non-star K_{p,q}.

    Requires pq + 1 = 2**m and both sides of size at least 2; stars get a
    TraceNotApplicableError because the argument's hypothesis fails for them.
    Every step's arithmetic is re-verified while the trace is built.
    """
    if p < 1 or q < 1:
        raise ValueError(f"side sizes must be positive, got p={p}, q={q}")
    t = p * q + 1
    if t & (t - 1) != 0:
        raise ValueError(f"edge count {p * q} is not 2^m - 1 for any m; no trace to build")
    if p == 1 or q == 1:
        raise TraceNotApplicableError(
            f"K_{{{p},{q}}} is a star; the contradiction needs (|P|-1)(|Q|-1) > 0"
        )
    m = t.bit_length() - 1
    universe = 1 << m
    vertices = p + q
    product = (p - 1) * (q - 1)
    unused = universe - vertices
    name = f"K_{{{p},{q}}}"

    steps = (
        ProofStep(
            "EdgeCountIdentity",
            {"p": p, "q": q, "m": m, "universe": universe},
            f"|E| = |P|*|Q| = {p}*{q} = {p * q}, so |X| = |E| + 1 = {universe} = 2^{m}.",
        ),
        ProofStep(
            "NonStarProduct",
            {"p": p, "q": q, "product": product},
            f"(|P| - 1)*(|Q| - 1) = {p - 1}*{q - 1} = {product} > 0, "
            "so neither side is a single vertex.",
        ),
        ProofStep(
            "UniverseExceedsVertices",
            {"p": p, "q": q, "m": m, "universe": universe, "vertices": vertices},
            f"|X| = {universe} > {vertices} = |V|, because |P|*|Q| + 1 > |P| + |Q| "
            "whenever (|P| - 1)*(|Q| - 1) > 0.",
        ),
        ProofStep(
            "TranslationWitnessExists",
            {"universe": universe, "vertices": vertices, "unused": unused},
            f"an injective labeling f uses {vertices} of the {universe} labels, leaving "
            f"{unused} unused; pick an unused A and set g(v) = A xor f(v), which keeps "
            "every edge label and stays set-graceful.",
        ),
        ProofStep(
            "EmptyExcluded",
            {"unused": unused},
            "A is outside the image of f, so g(v) = A xor f(v) is never the empty label.",
        ),
        ProofStep(
            "UniqueDecomposition",
            {"universe": universe, "edge_count": p * q},
            f"each g(u) with u in P is one of the {universe - 1} nonzero edge labels, so "
            "g(u) = g(p') xor g(q') for some p' in P, q' in Q; injectivity of the edge "
            "map makes p' unique.",
        ),
        ProofStep(
            "InvolutionPairing",
            {"pair_size": 2},
            "mapping u to that unique p' = theta(u) gives theta(u) != u (else g(q') "
            "would be empty) and theta(theta(u)) = u, a fixed-point-free involution on P.",
        ),
        ProofStep(
            "EvenSide",
            {"p": p, "pair_size": 2},
            f"the pairs {{u, theta(u)}} partition P into blocks of size 2, "
            f"so |P| = {p} would be even.",
        ),
        ProofStep(
            "OddUniverseContradiction",
            {"p": p, "q": q, "m": m, "universe": universe},
            f"|P| even would make |X| = |P|*|Q| + 1 odd, but |X| = {universe} = 2^{m} "
            f"is even for m = {m} >= 1; contradiction, so {name} has no "
            "set-graceful labeling.",
        ),
    )
    if tuple(step.kind for step in steps) != STEP_KINDS:
        raise AssertionError("proof steps out of canonical order")
    for step in steps:
        if not step.recheck():
            raise AssertionError(f"proof step {step.kind} failed its arithmetic recheck")
    return ProofTrace(p=p, q=q, m=m, steps=steps)
