"""Counting trie over zero sets: how many vertex pairs join to each face.

For every unordered pair of distinct vertices {u, v}, the intersection of
their zero sets is the zero set of the smallest face containing both.  The
join map counts, for each coordinate subset S, the pairs whose intersection
is exactly S.  A pair is an edge of the polytope precisely when its subset
has count 1 and the polytope is simple, which is what makes this structure
an adjacency oracle.

Subsets are stored in a binary trie of depth n: the node at depth k branches
on whether coordinate k + 1 is absent (left) or present (right).  Only paths
to subsets with a positive count are allocated, so lookup and insert touch
at most n + 1 nodes and never scan the polytope.
"""

from __future__ import annotations

from collections.abc import Iterator

from .core import Polytope, ZeroSet


class _Node:
    __slots__ = ("absent", "present", "count")

    def __init__(self) -> None:
        self.absent: _Node | None = None
        self.present: _Node | None = None
        self.count = 0  # meaningful at leaves only


class JoinMap:
    """Multiset of coordinate subsets with O(n) increment and lookup.

    ``depth`` is the coordinate count n; every stored subset must have that
    width.  ``node_count`` counts allocated trie nodes, ``pair_total`` the
    sum of all stored counts, ``leaf_count`` the number of distinct subsets.
    """

    def __init__(self, depth: int) -> None:
        if depth < 0:
            raise ValueError(f"depth must be nonnegative, got {depth}")
        self.depth = depth
        self.node_count = 0
        self.pair_total = 0
        self.leaf_count = 0
        self._root: _Node | None = None
        self._frozen = False

    def _check(self, s: ZeroSet) -> None:
        if s.width != self.depth:
            raise ValueError(f"zero set width {s.width} does not match depth {self.depth}")

    def increment(self, s: ZeroSet) -> None:
        """Add one occurrence of ``s``, allocating its path on first use."""
        if self._frozen:
            raise RuntimeError("join map is frozen")
        self._check(s)
        if self._root is None:
            self._root = _Node()
            self.node_count += 1
        node = self._root
        for k in range(self.depth):
            child = node.present if s.bits >> k & 1 else node.absent
            if child is None:
                child = _Node()
                self.node_count += 1
                if s.bits >> k & 1:
                    node.present = child
                else:
                    node.absent = child
            node = child
        if node.count == 0:
            self.leaf_count += 1
        node.count += 1
        self.pair_total += 1

    def probe(self, s: ZeroSet) -> tuple[int, int]:
        """Count for ``s`` plus the number of nodes visited. Never allocates."""
        self._check(s)
        node = self._root
        visited = 0
        for k in range(self.depth):
            if node is None:
                return 0, visited
            visited += 1
            node = node.present if s.bits >> k & 1 else node.absent
        if node is None:
            return 0, visited
        return node.count, visited + 1

    def lookup(self, s: ZeroSet) -> int:
        """Count of pairs stored under exactly ``s`` (0 when absent)."""
        return self.probe(s)[0]

    def freeze(self) -> None:
        """Disallow further increments; reads stay safe under concurrency."""
        self._frozen = True

    @property
    def frozen(self) -> bool:
        return self._frozen

    def items(self) -> Iterator[tuple[ZeroSet, int]]:
        """Stored (subset, count) pairs, absent-branch first."""

        def walk(node: _Node, depth: int, bits: int) -> Iterator[tuple[ZeroSet, int]]:
            if depth == self.depth:
                if node.count:
                    yield ZeroSet(self.depth, bits), node.count
                return
            if node.absent is not None:
                yield from walk(node.absent, depth + 1, bits)
            if node.present is not None:
                yield from walk(node.present, depth + 1, bits | 1 << depth)

        if self._root is not None:
            yield from walk(self._root, 0, 0)

    def dump(self) -> str:
        """Indented text form for golden tests: 0 = absent child, 1 = present."""
        if self._root is None:
            return "(empty)"
        lines = ["root"]

        def walk(node: _Node, depth: int) -> None:
            for label, child in (("0", node.absent), ("1", node.present)):
                if child is None:
                    continue
                line = "  " * (depth + 1) + label
                if depth + 1 == self.depth and child.count:
                    line += f" = {child.count}"
                lines.append(line)
                walk(child, depth + 1)

        walk(self._root, 0)
        return "\n".join(lines)


def build_join_map(p: Polytope) -> JoinMap:
    """Scan all vertex pairs of ``p`` and return the frozen join map.

    O(n V^2): one O(n) intersection and insert per pair.
    """
    jm = JoinMap(p.n)
    zs = p.zero_sets
    for u in range(p.vertex_count):
        zu = zs[u]
        for v in range(u + 1, p.vertex_count):
            jm.increment(zu & zs[v])
    jm.freeze()
    return jm
