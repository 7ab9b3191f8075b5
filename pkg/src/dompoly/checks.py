"""Oracle-equality suites for the recurrence identities and the closed forms.

Each suite yields ``Case`` records; a failing case carries both sides so the
first counterexample can be printed.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator

from . import families as fam
from .domset import (
    EdgeRecurrenceFailure,
    domination_polynomial_bruteforce,
    edge_recurrence_sides,
    vertex_recurrence_sides,
)
from .graph import Graph, all_graphs, corona_k1, random_graph
from .poly import Polynomial

DEFAULT_SEED = 20240601
# ids accepted by ``dompoly verify --theorem``
SUITES = {
    "1": "vertex-identity",
    "3": "edge-identity",
    "4": "friendship",
    "5": "flower4",
    "6": "book",
    "7": "gbook5",
    "8": "corona",
    "9": "prism",
}


@dataclass
class Case:
    suite: str
    label: str
    passed: bool
    lhs: Polynomial | None = None
    rhs: Polynomial | None = None
    note: str = ""


def vertex_identity_cases(
    max_exhaustive: int = 5, trials: int = 50, max_random: int = 8, seed: int = DEFAULT_SEED
) -> Iterator[Case]:
    """Every vertex of every graph up to ``max_exhaustive`` vertices, then random graphs."""
    for order in range(1, max_exhaustive + 1):
        for idx, g in enumerate(all_graphs(order)):
            for u in range(order):
                lhs, rhs = vertex_recurrence_sides(g, u)
                yield Case("vertex-identity", f"order {order} graph #{idx} vertex {u}", lhs == rhs, lhs, rhs)
    rng = random.Random(seed)
    for t in range(trials):
        g = random_graph(rng, rng.randint(1, max_random))
        for u in range(g.order):
            lhs, rhs = vertex_recurrence_sides(g, u)
            yield Case("vertex-identity", f"random #{t} {g!r} vertex {u}", lhs == rhs, lhs, rhs)


def edge_identity_cases(
    max_exhaustive: int = 5, trials: int = 50, max_random: int = 7, seed: int = DEFAULT_SEED
) -> Iterator[Case]:
    def one(g: Graph, label: str) -> Iterator[Case]:
        for u, v in g.edges():
            tag = f"{label} edge ({u}, {v})"
            try:
                lhs, rhs = edge_recurrence_sides(g, u, v)
            except EdgeRecurrenceFailure as exc:
                yield Case("edge-identity", tag, False, note=str(exc))
                continue
            yield Case("edge-identity", tag, lhs == rhs, lhs, rhs)

    for order in range(2, max_exhaustive + 1):
        for idx, g in enumerate(all_graphs(order)):
            yield from one(g, f"order {order} graph #{idx}")
    rng = random.Random(seed)
    for t in range(trials):
        g = random_graph(rng, rng.randint(2, max_random))
        yield from one(g, f"random #{t} {g!r}")


def _family_cases(
    suite: str, kind: str, ns, formula: Callable[[int], Polynomial], extra: tuple = ()
) -> Iterator[Case]:
    for n in ns:
        params = (extra[0], n) if kind == "flower" else (n,) + extra
        spec = fam.FamilySpec(kind, params)
        lhs = domination_polynomial_bruteforce(fam.build(spec))
        rhs = formula(n)
        yield Case(suite, str(spec), lhs == rhs, lhs, rhs)


def corona_cases(trials: int = 20, max_order: int = 6, seed: int = DEFAULT_SEED) -> Iterator[Case]:
    rng = random.Random(seed)
    for t in range(trials):
        h = random_graph(rng, rng.randint(1, max_order))
        lhs = domination_polynomial_bruteforce(corona_k1(h))
        rhs = fam.dompoly_corona_k1(h.order)
        yield Case("corona", f"random #{t} {h!r} corona K1", lhs == rhs, lhs, rhs)


def suite_cases(suite_id: str, max_n: int = 5, seed: int = DEFAULT_SEED, trials: int = 50) -> Iterator[Case]:
    """Cases for one suite id; ``max_n`` bounds family size / exhaustive graph order."""
    name = SUITES.get(suite_id)
    if name == "vertex-identity":
        return vertex_identity_cases(max_n, trials, max_n + 3, seed)
    if name == "edge-identity":
        return edge_identity_cases(max_n, trials, max_n + 2, seed)
    if name == "friendship":
        return _family_cases(name, "friendship", range(1, max_n + 1), fam.dompoly_friendship)
    if name == "flower4":
        return _family_cases(name, "flower", range(1, max_n + 1), fam.dompoly_flower4, (4,))
    if name == "book":
        return _family_cases(name, "book", range(1, max_n + 1), fam.dompoly_book)
    if name == "gbook5":
        return _family_cases(name, "gbook", range(1, max_n + 1), fam.dompoly_gbook5, (5,))
    if name == "corona":
        return corona_cases(trials, max(1, max_n), seed)
    if name == "prism":
        return _family_cases(name, "prism", range(2, max_n + 1), fam.dompoly_prism)
    raise ValueError(f"unknown suite {suite_id!r}; expected one of {sorted(SUITES)} or 'all'")
