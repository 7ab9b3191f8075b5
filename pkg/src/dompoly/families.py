"""Graph families and exact closed forms for their domination polynomials.

Labelling conventions (fixed so that proof steps can be replayed on the
built graphs):

* flower ``F_{q,n}``: hub is vertex 0; petal ``i`` (0-based) is the path
  ``1 + i(q-1), ..., (i+1)(q-1)`` whose two ends are joined to the hub.
  ``friendship:n`` is ``flower:3,n``.
* generalized book ``B_{n,m}``: spine ``u_1..u_{m-2}`` is ``0..m-3``; page
  ``i`` has ``v_i = m-2+2i`` (joined to ``u_1``) and ``w_i = m-1+2i`` (joined
  to ``u_{m-2}``). ``book:n`` is ``gbook:n,4``.
* star ``K_{1,n}``: centre 0. Path and cycle: consecutive labels.
* prism ``K_n □ K_2``: vertex ``(a, b)`` is ``2a + b``.
* corona ``K_n ∘ K_1``: pendant of ``v`` is ``v + n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, cartesian_product, corona_k1
from .poly import ONE, X, Polynomial

KINDS = {
    "friendship": 1,
    "flower": 2,
    "book": 1,
    "gbook": 2,
    "star": 1,
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "prism": 1,
    "corona": 1,
}


class FamilyError(ValueError):
    """Unknown family or parameters outside the family's range."""


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise FamilyError(f"unknown family {self.kind!r}")
        if len(self.params) != KINDS[self.kind]:
            raise FamilyError(f"{self.kind} takes {KINDS[self.kind]} parameter(s)")
        if any(not isinstance(p, int) for p in self.params):
            raise FamilyError("family parameters must be integers")
        if self.kind == "flower":
            q, n = self.params
            if q < 3 or n < 1:
                raise FamilyError("flower needs q >= 3 and n >= 1")
        elif self.kind == "gbook":
            n, m = self.params
            if m < 4 or n < 1:
                raise FamilyError("gbook needs n >= 1 and m >= 4")
        elif self.kind == "cycle":
            if self.params[0] < 3:
                raise FamilyError("cycle needs n >= 3")
        elif self.params[0] < 1:
            raise FamilyError(f"{self.kind} needs n >= 1")

    @property
    def n(self) -> int:
        return self.params[0] if self.kind != "flower" else self.params[1]

    def with_n(self, n: int) -> FamilySpec:
        if self.kind == "flower":
            return FamilySpec("flower", (self.params[0], n))
        return FamilySpec(self.kind, (n,) + self.params[1:])

    def __str__(self) -> str:
        return f"{self.kind}:{','.join(map(str, self.params))}"


def parse_spec(text: str) -> FamilySpec:
    """Parse ``kind:p1[,p2]``, e.g. ``flower:4,3`` or ``book:5``."""
    kind, sep, rest = text.strip().partition(":")
    if not sep:
        raise FamilyError(f"family spec {text!r} must look like kind:params")
    try:
        params = tuple(int(p) for p in rest.split(","))
    except ValueError:
        raise FamilyError(f"non-integer parameter in {text!r}") from None
    return FamilySpec(kind, params)


def parse_spec_range(text: str) -> list[FamilySpec]:
    """Parse a spec whose ``n`` slot may be a range ``a..b``.

    ``book:1..30`` or ``flower:4,1..12`` or ``gbook:1..30,5``.
    """
    kind, sep, rest = text.strip().partition(":")
    if not sep:
        raise FamilyError(f"family spec {text!r} must look like kind:params")
    parts = rest.split(",")
    slot = 1 if kind == "flower" else 0
    if slot >= len(parts):
        raise FamilyError(f"family spec {text!r} is missing parameters")
    lo, dots, hi = parts[slot].partition("..")
    try:
        ns = range(int(lo), int(hi) + 1) if dots else [int(lo)]
    except ValueError:
        raise FamilyError(f"bad n range in {text!r}") from None
    specs = []
    for n in ns:
        p = list(parts)
        p[slot] = str(n)
        specs.append(parse_spec(f"{kind}:{','.join(p)}"))
    return specs


def _flower(q: int, n: int) -> Graph:
    edges = []
    for i in range(n):
        petal = list(range(1 + i * (q - 1), 1 + (i + 1) * (q - 1)))
        edges.append((0, petal[0]))
        edges.extend(zip(petal, petal[1:]))
        edges.append((petal[-1], 0))
    return Graph.from_edges(1 + n * (q - 1), edges)


def _gbook(n: int, m: int) -> Graph:
    spine = m - 2
    edges = [(i, i + 1) for i in range(spine - 1)]
    for i in range(n):
        v, w = spine + 2 * i, spine + 2 * i + 1
        edges += [(0, v), (spine - 1, w), (v, w)]
    return Graph.from_edges(spine + 2 * n, edges)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def build(spec: FamilySpec) -> Graph:
    k, p = spec.kind, spec.params
    if k == "friendship":
        return _flower(3, p[0])
    if k == "flower":
        return _flower(*p)
    if k == "book":
        return _gbook(p[0], 4)
    if k == "gbook":
        return _gbook(*p)
    if k == "star":
        return star_graph(p[0])
    if k == "path":
        return path_graph(p[0])
    if k == "cycle":
        return cycle_graph(p[0])
    if k == "complete":
        return complete_graph(p[0])
    if k == "prism":
        return cartesian_product(complete_graph(p[0]), complete_graph(2))
    if k == "corona":
        return corona_k1(complete_graph(p[0]))
    raise FamilyError(f"unknown family {k!r}")  # pragma: no cover


def _require_positive(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise FamilyError(f"n must be a positive integer, got {n!r}")


def dompoly_friendship(n: int) -> Polynomial:
    _require_positive(n)
    return (2 * X + X ** 2) ** n + X * (ONE + X) ** (2 * n)


def flower4_step(prev: Polynomial, n: int) -> Polynomial:
    """One step of the F_{4,n} recurrence: D(F_{4,n-1}) -> D(F_{4,n}), n >= 2."""
    k = n - 1
    return (
        ((ONE + X) ** 3 + X) * prev
        - (1 + 3 * X) * (X + 3 * X ** 2 + X ** 3) ** k
        + (ONE + X) ** 3 * X ** k
        - (X ** 2 + X) * (X ** 3 + 3 * X ** 2 + 3 * X) ** k
    )


FLOWER4_BASE = Polynomial([0, 0, 6, 4, 1])


def dompoly_flower4(n: int) -> Polynomial:
    _require_positive(n)
    d = FLOWER4_BASE
    for k in range(2, n + 1):
        d = flower4_step(d, k)
    return d


def dompoly_book(n: int) -> Polynomial:
    _require_positive(n)
    return (X ** 2 + 2 * X) ** n * (2 * X + 1) + X ** 2 * (X + 1) ** (2 * n) - 2 * X ** n


def dompoly_gbook5(n: int) -> Polynomial:
    _require_positive(n)
    return (
        X ** 2 * (X + 1) ** (2 * n + 1)
        - 2 * X ** (n + 1)
        + (X ** 2 + 2 * X) ** n * (2 * X ** 2 + 3 * X)
    )


def dompoly_corona_k1(n: int) -> Polynomial:
    _require_positive(n)
    return (X ** 2 + 2 * X) ** n


def dompoly_prism(n: int) -> Polynomial:
    _require_positive(n)
    return ((ONE + X) ** n - 1) ** 2 + 2 * X ** n


def dompoly_star(n: int) -> Polynomial:
    _require_positive(n)
    return X ** n + X * (ONE + X) ** n


def dompoly_complete(n: int) -> Polynomial:
    _require_positive(n)
    return (ONE + X) ** n - 1


def closed_form(spec: FamilySpec) -> Polynomial:
    """Closed-form evaluator for ``spec``; FamilyError if the family has none."""
    k, p = spec.kind, spec.params
    if k == "friendship" or (k == "flower" and p[0] == 3):
        return dompoly_friendship(spec.n)
    if k == "book" or (k == "gbook" and p[1] == 4):
        return dompoly_book(p[0])
    if k == "gbook" and p[1] == 5:
        return dompoly_gbook5(p[0])
    table = {
        "star": dompoly_star,
        "complete": dompoly_complete,
        "prism": dompoly_prism,
        "corona": dompoly_corona_k1,
    }
    if k in table:
        return table[k](p[0])
    raise FamilyError(f"no closed form for {spec}")


def recurrence_form(spec: FamilySpec) -> Polynomial:
    if spec.kind == "flower" and spec.params[0] == 4:
        return dompoly_flower4(spec.n)
    raise FamilyError(f"no recurrence evaluator for {spec}")
