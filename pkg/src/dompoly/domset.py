"""Brute-force domination oracle and the two recurrence identity checks.

Subsets are integer bitmasks. The enumeration splits the vertex set into a
low part (enumerated as one numpy vector) and a high part (looped over in
blocks), so the work partitions into independent blocks whose coefficient
vectors are simply added together.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .graph import (
    Graph,
    GraphError,
    closed_neighborhood,
    contract_vertex,
    delete_closed_neighborhood,
    delete_edge,
    delete_vertex,
)
from .poly import ONE, X, NonDivisible, Polynomial, divide_exact

MAX_ORDER = 26
_LOW_BITS = 16


class CapacityError(RuntimeError):
    """Graph too large for exhaustive subset enumeration."""


def _check_capacity(order: int, max_order: int | None) -> None:
    bound = MAX_ORDER if max_order is None else max_order
    if order > bound:
        raise CapacityError(f"order {order} exceeds enumeration bound {bound}")


def _mask_of(g: Graph, s) -> int:
    m = 0
    for v in s:
        if not isinstance(v, int) or not 0 <= v < g.order:
            raise GraphError(f"vertex {v!r} out of range for order {g.order}")
        m |= 1 << v
    return m


def is_dominating(g: Graph, s) -> bool:
    """True iff N[s] covers every vertex (vacuously true on the null graph)."""
    sm = _mask_of(g, s)
    masks = g.closed_masks()
    cover = 0
    for v in range(g.order):
        if sm >> v & 1:
            cover |= masks[v]
    return cover == (1 << g.order) - 1


def _subset_unions(masks: list[int]) -> tuple[np.ndarray, np.ndarray]:
    """Union of ``masks`` and popcount for every subset of their index range."""
    size = 1 << len(masks)
    unions = np.zeros(size, dtype=np.uint32)
    counts = np.zeros(size, dtype=np.int64)
    for i, m in enumerate(masks):
        half = 1 << i
        unions[half:2 * half] = unions[:half] | np.uint32(m)
        counts[half:2 * half] = counts[:half] + 1
    return unions, counts


def count_dominating(
    order: int,
    masks: list[int],
    candidates: list[int],
    workers: int = 1,
) -> list[int]:
    """Count subsets of ``candidates`` by size whose closed-neighbourhood union is full.

    ``masks[v]`` is the closed-neighbourhood bitmask of vertex ``v`` in a graph
    of the given order. Returns ``counts[i]`` = number of dominating
    ``i``-subsets drawn from ``candidates``.
    """
    full = (1 << order) - 1
    k = len(candidates)
    cmasks = [masks[v] for v in candidates]
    lo = cmasks[:_LOW_BITS]
    hi = cmasks[_LOW_BITS:]
    lo_union, lo_count = _subset_unions(lo)
    if hi:
        hi_union, hi_count = _subset_unions(hi)
        hi_union = hi_union.tolist()
        hi_count = hi_count.tolist()
    else:
        hi_union, hi_count = [0], [0]

    def block(indices: range) -> np.ndarray:
        acc = np.zeros(k + 1, dtype=np.int64)
        for h in indices:
            hit = (lo_union | np.uint32(hi_union[h])) == np.uint32(full)
            sizes = lo_count[hit]
            if sizes.size:
                binc = np.bincount(sizes, minlength=len(lo) + 1)
                acc[hi_count[h]:hi_count[h] + len(binc)] += binc
        return acc

    n_hi = len(hi_union)
    if workers <= 1 or n_hi == 1:
        total = block(range(n_hi))
    else:
        step = -(-n_hi // workers)
        chunks = [range(a, min(a + step, n_hi)) for a in range(0, n_hi, step)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            total = sum(pool.map(block, chunks))
    return [int(c) for c in total]


def domination_polynomial_bruteforce(
    g: Graph, max_order: int | None = None, workers: int = 1
) -> Polynomial:
    """D(G, x) by exhaustive enumeration; the null graph gives 1."""
    _check_capacity(g.order, max_order)
    if g.order == 0:
        return ONE
    counts = count_dominating(g.order, g.closed_masks(), list(range(g.order)), workers)
    return Polynomial(counts)


def domination_number(g: Graph, max_order: int | None = None) -> int:
    if g.order == 0:
        return 0
    d = domination_polynomial_bruteforce(g, max_order)
    return next(i for i, c in enumerate(d.coeffs) if c)


def p_u_polynomial(g: Graph, u: int, max_order: int | None = None) -> Polynomial:
    """Sizes of dominating sets of G - u that avoid N[u]."""
    g._check(u)
    _check_capacity(g.order - 1, max_order)
    h = delete_vertex(g, u)
    if h.order == 0:
        return ONE
    banned = closed_neighborhood(g, u)
    # vertex w of g (w != u) becomes w - (w > u) in h
    candidates = [w - (w > u) for w in range(g.order) if w not in banned]
    return Polynomial(count_dominating(h.order, h.closed_masks(), candidates))


def vertex_recurrence_sides(
    g: Graph, u: int, max_order: int | None = None
) -> tuple[Polynomial, Polynomial]:
    D = lambda h: domination_polynomial_bruteforce(h, max_order)  # noqa: E731
    lhs = D(g)
    rhs = (
        X * D(contract_vertex(g, u))
        + D(delete_vertex(g, u))
        + X * D(delete_closed_neighborhood(g, u))
        - (ONE + X) * p_u_polynomial(g, u, max_order)
    )
    return lhs, rhs


def verify_vertex_recurrence(g: Graph, u: int, max_order: int | None = None) -> bool:
    """Check D(G) = xD(G/u) + D(G-u) + xD(G-N[u]) - (1+x)p_u(G) exactly."""
    lhs, rhs = vertex_recurrence_sides(g, u, max_order)
    return lhs == rhs


class EdgeRecurrenceFailure(AssertionError):
    """The edge identity failed; ``non_divisible`` marks a bracket not divisible by x - 1."""

    def __init__(self, message: str, non_divisible: bool, lhs=None, rhs=None):
        super().__init__(message)
        self.non_divisible = non_divisible
        self.lhs = lhs
        self.rhs = rhs


def edge_recurrence_bracket(g: Graph, u: int, v: int, max_order: int | None = None) -> Polynomial:
    D = lambda h: domination_polynomial_bruteforce(h, max_order)  # noqa: E731
    ge = delete_edge(g, u, v)
    return (
        D(contract_vertex(ge, u))
        + D(contract_vertex(ge, v))
        - D(contract_vertex(g, u))
        - D(contract_vertex(g, v))
        - D(delete_closed_neighborhood(g, u))
        - D(delete_closed_neighborhood(g, v))
        + D(delete_closed_neighborhood(ge, u))
        + D(delete_closed_neighborhood(ge, v))
    )


def edge_recurrence_sides(
    g: Graph, u: int, v: int, max_order: int | None = None
) -> tuple[Polynomial, Polynomial]:
    """Both sides of the edge identity; raises EdgeRecurrenceFailure if the bracket is not divisible."""
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    _check_capacity(g.order, max_order)
    bracket = edge_recurrence_bracket(g, u, v, max_order)
    try:
        quotient = divide_exact(bracket, X - 1)
    except NonDivisible as exc:
        raise EdgeRecurrenceFailure(
            f"bracket {bracket} not divisible by x - 1 at edge ({u}, {v})", True
        ) from exc
    lhs = domination_polynomial_bruteforce(g, max_order)
    rhs = domination_polynomial_bruteforce(delete_edge(g, u, v), max_order) + X * quotient
    return lhs, rhs


def verify_edge_recurrence(g: Graph, u: int, v: int, max_order: int | None = None) -> bool:
    """Exact check of the edge identity.

    Returns False on a plain mismatch; a bracket that is not divisible by
    ``x - 1`` raises EdgeRecurrenceFailure with ``non_divisible`` set.
    """
    lhs, rhs = edge_recurrence_sides(g, u, v, max_order)
    return lhs == rhs
