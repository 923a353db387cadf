"""Walks over pairs of vertices that share at most one facet.

For a simple polytope of dimension d > 1, build a graph whose nodes are
unordered vertex pairs {u, v} sharing no facet (complementary) or exactly
one.  An arc joins {u, x} and {u, y} when x and y are adjacent in the
polytope and no single facet contains u, x and y together.  Every
complementary pair then has 2d arcs leading to 2d different nodes, while a
pair with one common facet has exactly two arcs, so a walk that never turns
back is forced forward until it reaches a complementary pair again.

That walk is the whole point: starting from one complementary pair it finds
a second one (``second_pair``), and starting just past the pivot of a path
between complementary partners it finds one disjoint from the first
(``disjoint_pairs``).  ``verify_2d_parity`` checks the counting law for
polytopes with 2d facets: an even number of complementary pairs, all
pairwise disjoint.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .core import Facets, Polytope, UnsupportedPolytopeError, is_simple


class PairKind(Enum):
    # values double as the short node labels in DOT dumps
    COMPLEMENTARY = "A"        # no common facet
    ALMOST_COMPLEMENTARY = "B"  # exactly one common facet
    EXCLUDED = "-"             # two or more common facets: not a node


@dataclass(frozen=True)
class PairNode:
    u: int
    v: int
    kind: PairKind
    common_facet: int | None  # facet id for ALMOST_COMPLEMENTARY, else None

    @property
    def pair(self) -> tuple[int, int]:
        return (self.u, self.v)


@dataclass(frozen=True)
class PairArc:
    tail: PairNode
    head: PairNode
    moved_vertex: int  # the tail vertex that was replaced
    facet_set: frozenset[int]  # facets containing the kept vertex or the moved edge


def classify_pair(p: Polytope, facets: Facets, u: int, v: int) -> PairKind:
    """Node kind of {u, v} by the number of facets containing both."""
    p._check_vertex_index(u)
    p._check_vertex_index(v)
    if u == v:
        raise ValueError("a pair consists of two distinct vertices")
    shared = len(facets.common(u, v))
    if shared == 0:
        return PairKind.COMPLEMENTARY
    if shared == 1:
        return PairKind.ALMOST_COMPLEMENTARY
    return PairKind.EXCLUDED


def pair_node(p: Polytope, facets: Facets, u: int, v: int) -> PairNode:
    """Canonical node (u < v) for the pair, of whatever kind."""
    kind = classify_pair(p, facets, u, v)
    common = facets.common(u, v)
    facet = next(iter(common)) if kind is PairKind.ALMOST_COMPLEMENTARY else None
    lo, hi = min(u, v), max(u, v)
    return PairNode(lo, hi, kind, facet)


def _require_walkable(p: Polytope, facets: Facets) -> int:
    d = p.dimension
    if d <= 1:
        raise UnsupportedPolytopeError(f"pair-graph walks need dimension > 1, got {d}")
    if not is_simple(p, facets):
        raise UnsupportedPolytopeError(
            "pair-graph walks need a simple polytope; use the combinatorial "
            "adjacency test instead"
        )
    return d


def arcs_from(
    p: Polytope, facets: Facets, neighbors: list[list[int]], node: PairNode
) -> list[PairArc]:
    """All arcs leaving ``node``, in a fixed order: moves of v first, then u,
    each by ascending replacement vertex.

    A complementary node has 2d arcs with pairwise different facet sets; a
    one-common-facet node has exactly 2 arcs with the same facet set.  Facet
    sets have 2d - 1 elements.
    """
    _require_walkable(p, facets)
    if node.kind is PairKind.EXCLUDED:
        raise ValueError(f"pair {node.pair} shares more than one facet")
    arcs = []
    for stay, move in ((node.u, node.v), (node.v, node.u)):
        for x in neighbors[move]:
            if x == stay:
                continue
            # skip when one facet holds all three: the kept vertex and the
            # moved edge must lie on no common facet
            if facets.of_vertex(stay) & facets.of_vertex(move) & facets.of_vertex(x):
                continue
            head = pair_node(p, facets, stay, x)
            if head.kind is PairKind.EXCLUDED:
                raise RuntimeError(
                    f"internal invariant violated: move {node.pair} -> {head.pair} "
                    "left the pair graph"
                )
            facet_set = facets.of_vertex(stay) | (
                facets.of_vertex(move) & facets.of_vertex(x)
            )
            arcs.append(PairArc(node, head, move, frozenset(facet_set)))
    return arcs


def all_complementary_pairs(p: Polytope, facets: Facets) -> list[tuple[int, int]]:
    """All pairs sharing no facet, ascending. Works for any polytope with
    dim >= 1; simplicity is not needed for this count."""
    out = []
    for u in range(p.vertex_count):
        fu = facets.of_vertex(u)
        for v in range(u + 1, p.vertex_count):
            if not fu & facets.of_vertex(v):
                out.append((u, v))
    return out


def _node_budget(p: Polytope, facets: Facets) -> int:
    nodes = 0
    for u in range(p.vertex_count):
        fu = facets.of_vertex(u)
        for v in range(u + 1, p.vertex_count):
            if len(fu & facets.of_vertex(v)) <= 1:
                nodes += 1
    return 2 * nodes


def _walk_forward(
    p: Polytope,
    facets: Facets,
    neighbors: list[list[int]],
    prev: PairNode,
    cur: PairNode,
    budget: int,
) -> PairNode:
    """Follow the two-arc rule from ``cur`` (never back to ``prev``) until a
    complementary node appears. The step budget bounds the walk by twice the
    node count; exceeding it means the forced-forward rule is broken, which
    no valid input can do, so that is reported loudly."""
    steps = 0
    while cur.kind is not PairKind.COMPLEMENTARY:
        if cur.kind is PairKind.EXCLUDED:
            raise RuntimeError(f"walk reached excluded pair {cur.pair}")
        steps += 1
        if steps > budget:
            raise RuntimeError(
                f"walk exceeded {budget} steps without reaching a complementary "
                "pair; forced-forward rule violated"
            )
        onward = [a.head for a in arcs_from(p, facets, neighbors, cur) if a.head.pair != prev.pair]
        if len(onward) != 1:
            raise RuntimeError(
                f"internal invariant violated: node {cur.pair} has "
                f"{len(onward) + 1} arcs, expected exactly 2"
            )
        prev, cur = cur, onward[0]
    return cur


def second_pair(
    p: Polytope, facets: Facets, neighbors: list[list[int]], start: tuple[int, int]
) -> tuple[int, int]:
    """From one complementary pair, walk to a different one.

    Deterministic first move: replace the lower-indexed vertex of ``start``
    by its lowest-indexed neighbor, then follow the two-arc rule forward.
    """
    _require_walkable(p, facets)
    u, v = sorted(start)
    start_node = pair_node(p, facets, u, v)
    if start_node.kind is not PairKind.COMPLEMENTARY:
        raise ValueError(f"pair {start_node.pair} is not complementary")
    first = pair_node(p, facets, min(neighbors[u]), v)
    found = _walk_forward(p, facets, neighbors, start_node, first, _node_budget(p, facets))
    if found.pair == start_node.pair:
        raise RuntimeError("walk returned to its starting pair")
    return found.pair


def disjoint_pairs(
    p: Polytope, facets: Facets, neighbors: list[list[int]], start: tuple[int, int]
) -> tuple[tuple[int, int], tuple[int, int]]:
    """Two complementary pairs with four distinct vertices between them.

    Walk a shortest path z_1 .. z_q from u to v in the polytope graph, find
    the first index where {z_i, v} is complementary but {z_i+1, v} is not,
    and run the forced walk from that edge; the pair it reaches cannot touch
    {z_i, v}.
    """
    _require_walkable(p, facets)
    u, v = sorted(start)
    if classify_pair(p, facets, u, v) is not PairKind.COMPLEMENTARY:
        raise ValueError(f"pair {(u, v)} is not complementary")

    path = _shortest_path(neighbors, u, v)
    pivot = None
    for i in range(len(path) - 1):
        if not facets.common(path[i], v) and facets.common(path[i + 1], v):
            pivot = i
            break
    if pivot is None:
        raise RuntimeError("no pivot on a path between complementary partners")
    anchor = pair_node(p, facets, path[pivot], v)
    step_off = pair_node(p, facets, path[pivot + 1], v)
    found = _walk_forward(
        p, facets, neighbors, anchor, step_off, _node_budget(p, facets)
    )
    if len({*anchor.pair, *found.pair}) != 4:
        raise RuntimeError(
            f"pairs {anchor.pair} and {found.pair} share a vertex; "
            "disjointness argument violated"
        )
    return anchor.pair, found.pair


def _shortest_path(neighbors: list[list[int]], source: int, target: int) -> list[int]:
    """Breadth-first shortest path, deterministic by ascending neighbor order."""
    pred: dict[int, int | None] = {source: None}
    queue = deque([source])
    while queue:
        w = queue.popleft()
        if w == target:
            path = []
            cur: int | None = w
            while cur is not None:
                path.append(cur)
                cur = pred[cur]
            return path[::-1]
        for x in neighbors[w]:
            if x not in pred:
                pred[x] = w
                queue.append(x)
    raise RuntimeError(f"polytope graph is disconnected between {source} and {target}")


@dataclass(frozen=True)
class ParityReport:
    facet_count: int
    pair_count: int
    even: bool
    pairwise_disjoint: bool


def verify_2d_parity(p: Polytope, facets: Facets) -> ParityReport:
    """Count complementary pairs and check the 2d-facet parity law.

    Needs a simple polytope of dimension d > 1.  When the facet count is
    exactly 2d, an odd count or two overlapping pairs would contradict the
    law, so that raises instead of returning a report.
    """
    d = _require_walkable(p, facets)
    pairs = all_complementary_pairs(p, facets)
    used: set[int] = set()
    disjoint = True
    for a, b in pairs:
        if a in used or b in used:
            disjoint = False
        used.update((a, b))
    report = ParityReport(
        facet_count=len(facets),
        pair_count=len(pairs),
        even=len(pairs) % 2 == 0,
        pairwise_disjoint=disjoint,
    )
    if len(facets) == 2 * d and not (report.even and report.pairwise_disjoint):
        raise RuntimeError(
            f"2d-facet parity law violated: {report} on a simple polytope of dimension {d}"
        )
    return report


def to_dot(p: Polytope, facets: Facets, neighbors: list[list[int]]) -> str:
    """DOT dump of the whole pair graph, nodes labeled "u,v:A|B", arcs
    labeled with their facet-set ids. For inspection and golden tests."""
    _require_walkable(p, facets)
    nodes = []
    for u in range(p.vertex_count):
        for v in range(u + 1, p.vertex_count):
            node = pair_node(p, facets, u, v)
            if node.kind is not PairKind.EXCLUDED:
                nodes.append(node)
    lines = ["graph pairs {"]
    for node in nodes:
        lines.append(f'  "{node.u},{node.v}" [label="{node.u},{node.v}:{node.kind.value}"];')
    seen = set()
    for node in nodes:
        for arc in arcs_from(p, facets, neighbors, node):
            key = tuple(sorted((arc.tail.pair, arc.head.pair)))
            if key in seen:
                continue
            seen.add(key)
            label = "{" + ",".join(map(str, sorted(arc.facet_set))) + "}"
            lines.append(
                f'  "{arc.tail.u},{arc.tail.v}" -- "{arc.head.u},{arc.head.v}" '
                f'[label="{label}"];'
            )
    lines.append("}")
    return "\n".join(lines)
