"""Trees on integer-labeled vertices, vertex vectors, and the basic geometry.

Vertex ids are arbitrary non-negative integers, not necessarily contiguous.
Every iteration order is sorted by id, so all downstream output is
deterministic. Trees are immutable once built.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import (
    DomainMismatch,
    NotATree,
    NotDisjoint,
    ParseError,
    VertexNotFound,
)

Edge = tuple[int, int]


class Tree:
    """An unrooted tree: sorted vertex tuple plus sorted adjacency lists."""

    __slots__ = ("vertices", "adj", "_edges", "_index")

    def __init__(self, edges: Iterable[Edge], vertices: Iterable[int] = ()) -> None:
        vs: set[int] = set(vertices)
        adj: dict[int, set[int]] = {v: set() for v in vs}
        n_edges = 0
        for e in edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise NotATree(f"not an edge pair: {e!r}")
            if not isinstance(u, int) or not isinstance(v, int) or isinstance(u, bool) or isinstance(v, bool):
                raise NotATree(f"vertex ids must be integers: {e!r}")
            if u < 0 or v < 0:
                raise NotATree(f"vertex ids must be non-negative: {e!r}")
            if u == v:
                raise NotATree(f"self-loop at {u}")
            if u in adj and v in adj[u]:
                raise NotATree(f"duplicate edge {{{u},{v}}}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
            n_edges += 1
        for v in vs:
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise NotATree(f"vertex ids must be non-negative integers: {v!r}")
        if not adj:
            raise NotATree("empty vertex set")
        if n_edges != len(adj) - 1:
            raise NotATree(f"{len(adj)} vertices need {len(adj) - 1} edges, got {n_edges}")
        # connectivity; with the edge count right this also rules out cycles
        start = next(iter(adj))
        seen = {start}
        stack = [start]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(adj):
            raise NotATree("not connected")
        self.vertices: tuple[int, ...] = tuple(sorted(adj))
        self.adj: dict[int, tuple[int, ...]] = {v: tuple(sorted(adj[v])) for v in self.vertices}
        self._edges: tuple[Edge, ...] | None = None
        self._index: dict[int, int] | None = None

    @classmethod
    def _trusted(cls, vertices: tuple[int, ...], adj: dict[int, tuple[int, ...]]) -> "Tree":
        """Internal constructor for structures already known to be valid trees."""
        t = object.__new__(cls)
        t.vertices = vertices
        t.adj = adj
        t._edges = None
        t._index = None
        return t

    # -- basic queries ----------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: int) -> bool:
        return v in self.adj

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Tree) and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges()))

    def __repr__(self) -> str:
        return f"Tree(order={self.order}, edges={list(self.edges())})"

    def neighbors(self, v: int) -> tuple[int, ...]:
        try:
            return self.adj[v]
        except KeyError:
            raise VertexNotFound(f"vertex {v} not in tree")

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def edges(self) -> tuple[Edge, ...]:
        if self._edges is None:
            self._edges = tuple(
                (u, v) for u in self.vertices for v in self.adj[u] if u < v
            )
        return self._edges

    def index(self) -> dict[int, int]:
        """Position of each vertex in the sorted vertex tuple."""
        if self._index is None:
            self._index = {v: i for i, v in enumerate(self.vertices)}
        return self._index

    def has_edge(self, u: int, v: int) -> bool:
        return u in self.adj and v in self.adj[u]

    # -- geometry ---------------------------------------------------------

    def path(self, u: int, v: int) -> list[int]:
        """The unique u-v path, endpoints included."""
        if u not in self.adj:
            raise VertexNotFound(f"vertex {u} not in tree")
        if v not in self.adj:
            raise VertexNotFound(f"vertex {v} not in tree")
        parent: dict[int, int] = {u: u}
        frontier = [u]
        while v not in parent and frontier:
            nxt: list[int] = []
            for x in frontier:
                for w in self.adj[x]:
                    if w not in parent:
                        parent[w] = x
                        nxt.append(w)
            frontier = nxt
        out = [v]
        while out[-1] != u:
            out.append(parent[out[-1]])
        out.reverse()
        return out

    def subtree_toward(self, u: int, v: int) -> "Tree":
        """Induced subtree on the vertices whose path from u passes through v.

        Contains v and everything on the far side of v as seen from u; for
        u == v this is the whole tree.
        """
        if u not in self.adj:
            raise VertexNotFound(f"vertex {u} not in tree")
        if v not in self.adj:
            raise VertexNotFound(f"vertex {v} not in tree")
        if u == v:
            return self
        path = self.path(u, v)
        before = path[-2]  # neighbor of v on the u side
        keep = {v}
        stack = [v]
        while stack:
            for w in self.adj[stack.pop()]:
                if w != before and w not in keep:
                    keep.add(w)
                    stack.append(w)
        return self.induced_subtree(keep)

    def induced_subtree(self, keep: Iterable[int]) -> "Tree":
        """Induced subgraph on `keep`, which must be connected."""
        ks = set(keep)
        for v in ks:
            if v not in self.adj:
                raise VertexNotFound(f"vertex {v} not in tree")
        verts = tuple(sorted(ks))
        adj = {v: tuple(w for w in self.adj[v] if w in ks) for v in verts}
        n_edges = sum(len(ws) for ws in adj.values()) // 2
        if n_edges != len(verts) - 1:
            raise NotATree("induced subgraph is not connected")
        return Tree._trusted(verts, adj)

    def components_within(self, keep: Iterable[int]) -> list["Tree"]:
        """Connected components of the induced subgraph, sorted by least vertex."""
        ks = set(keep)
        out: list[Tree] = []
        seen: set[int] = set()
        for v in sorted(ks):
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                for w in self.adj[stack.pop()]:
                    if w in ks and w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            verts = tuple(sorted(comp))
            adj = {x: tuple(w for w in self.adj[x] if w in comp) for x in verts}
            out.append(Tree._trusted(verts, adj))
        return out


class Forest:
    """Pairwise vertex-disjoint trees, kept sorted by least vertex id."""

    __slots__ = ("trees",)

    def __init__(self, trees: Iterable[Tree]) -> None:
        ts = sorted(trees, key=lambda t: t.vertices[0])
        seen: set[int] = set()
        for t in ts:
            overlap = seen.intersection(t.vertices)
            if overlap:
                raise NotDisjoint(f"vertex {min(overlap)} appears in two components")
            seen.update(t.vertices)
        self.trees: tuple[Tree, ...] = tuple(ts)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(v for t in self.trees for v in t.vertices))

    def __iter__(self) -> Iterator[Tree]:
        return iter(self.trees)

    def __len__(self) -> int:
        return len(self.trees)

    def component_of(self, v: int) -> Tree:
        for t in self.trees:
            if v in t:
                return t
        raise VertexNotFound(f"vertex {v} not in forest")


Rational = Fraction | int


class VertexVector:
    """A vector indexed by the vertices of a fixed tree or forest.

    Entries are exact rationals; vertices absent from `entries` are zero.
    The domain is the sorted vertex tuple of the indexing structure.
    """

    __slots__ = ("domain", "entries")

    def __init__(self, domain: Sequence[int], entries: Mapping[int, Rational]) -> None:
        dom = tuple(domain)
        dset = set(dom)
        clean: dict[int, Rational] = {}
        for v, c in entries.items():
            if v not in dset:
                raise DomainMismatch(f"vertex {v} outside domain")
            if c != 0:
                clean[v] = c
        self.domain: tuple[int, ...] = dom
        self.entries: dict[int, Rational] = clean

    @classmethod
    def unit(cls, domain: Sequence[int], v: int) -> "VertexVector":
        return cls(domain, {v: 1})

    @classmethod
    def indicator(cls, domain: Sequence[int], vs: Iterable[int]) -> "VertexVector":
        return cls(domain, {v: 1 for v in vs})

    def __getitem__(self, v: int) -> Rational:
        if v not in self.domain_set():
            raise DomainMismatch(f"vertex {v} outside domain")
        return self.entries.get(v, 0)

    def domain_set(self) -> frozenset[int]:
        return frozenset(self.domain)

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self.entries))

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, VertexVector)
            and self.domain == other.domain
            and self.entries == other.entries
        )

    def __hash__(self) -> int:
        return hash((self.domain, tuple(sorted(self.entries.items()))))

    def __repr__(self) -> str:
        terms = " ".join(f"{'+' if c > 0 else '-'}{abs(c)}*e{v}" for v, c in sorted(self.entries.items()))
        return f"VertexVector({terms or '0'})"

    def __add__(self, other: "VertexVector") -> "VertexVector":
        if self.domain != other.domain:
            raise DomainMismatch("vector domains differ")
        out = dict(self.entries)
        for v, c in other.entries.items():
            out[v] = out.get(v, 0) + c
        return VertexVector(self.domain, out)

    def __sub__(self, other: "VertexVector") -> "VertexVector":
        return self + (other * -1)

    def __mul__(self, c: Rational) -> "VertexVector":
        return VertexVector(self.domain, {v: c * x for v, x in self.entries.items()})

    __rmul__ = __mul__


def restrict(x: VertexVector, s: Tree | Forest) -> VertexVector:
    """Restriction of x to the vertices of s; s must sit inside x's domain."""
    sub = s.vertices if isinstance(s, (Tree, Forest)) else tuple(sorted(s))
    dset = x.domain_set()
    missing = [v for v in sub if v not in dset]
    if missing:
        raise DomainMismatch(f"vertex {missing[0]} of the target is outside the vector's domain")
    return VertexVector(sub, {v: c for v, c in x.entries.items() if v in set(sub)})


def lift(x: VertexVector, g: Tree | Forest) -> VertexVector:
    """Zero-extension of x to the larger structure g."""
    big = g.vertices if isinstance(g, (Tree, Forest)) else tuple(sorted(g))
    bset = set(big)
    missing = [v for v in x.domain if v not in bset]
    if missing:
        raise DomainMismatch(f"vertex {missing[0]} of the vector's domain is outside the target")
    return VertexVector(big, dict(x.entries))


def in_out(t: Tree, u_set: Iterable[int], v_set: Iterable[int]) -> tuple[int, int]:
    """Entry point of U as seen from V, and the first vertex on the way out.

    Returns (entry, out): `entry` is the vertex of U closest to V, `out` is
    the neighbor of `entry` outside U on the path toward V. Distances are
    measured in t; ties resolve to the smallest vertex id.
    """
    us = set(u_set)
    vs = set(v_set)
    if not us or not vs:
        raise VertexNotFound("empty vertex set")
    for v in us | vs:
        if v not in t:
            raise VertexNotFound(f"vertex {v} not in tree")
    if us & vs:
        raise NotDisjoint(f"sets share vertex {min(us & vs)}")
    # multi-source BFS from V
    dist: dict[int, int] = {v: 0 for v in vs}
    frontier = sorted(vs)
    while frontier:
        nxt: list[int] = []
        for x in frontier:
            for w in t.adj[x]:
                if w not in dist:
                    dist[w] = dist[x] + 1
                    nxt.append(w)
        frontier = sorted(nxt)
    entry = min(us, key=lambda v: (dist[v], v))
    # any neighbor strictly closer to V is automatically outside U
    out = min(w for w in t.adj[entry] if dist[w] == dist[entry] - 1)
    return entry, out


# -- parsing and serialization -------------------------------------------


def parse_tree(text: str) -> Tree:
    """Parse the edge-list format (or its JSON mirror) into a Tree.

    Edge list: one 'u v' pair per line, '#' starts a comment, a bare 'v'
    line declares an isolated vertex (only valid for an order-1 tree).
    JSON: an object {"vertices": [...], "edges": [[u, v], ...]}.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as e:
            raise ParseError(f"bad JSON: {e}") from None
        return tree_from_json(obj)
    edges: list[Edge] = []
    singles: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"line {lineno}: expected integers, got {line!r}")
        if len(nums) == 1:
            singles.append(nums[0])
        elif len(nums) == 2:
            edges.append((nums[0], nums[1]))
        else:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
    if any(v < 0 for v in singles) or any(u < 0 or v < 0 for u, v in edges):
        raise ParseError("vertex ids must be non-negative")
    if not edges and not singles:
        raise ParseError("no vertices found in input")
    return Tree(edges, vertices=singles)


def tree_to_edge_text(t: Tree) -> str:
    if t.order == 1:
        return f"{t.vertices[0]}\n"
    return "".join(f"{u} {v}\n" for u, v in t.edges())


def tree_to_json(t: Tree) -> dict:
    return {
        "vertices": list(t.vertices),
        "edges": [[u, v] for u, v in t.edges()],
    }


def tree_from_json(obj: object) -> Tree:
    if not isinstance(obj, dict):
        raise ParseError("tree JSON must be an object")
    verts = obj.get("vertices", [])
    edges = obj.get("edges", [])
    if not isinstance(verts, list) or not isinstance(edges, list):
        raise ParseError("tree JSON needs 'vertices' and 'edges' lists")
    pairs: list[Edge] = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise ParseError(f"bad edge entry: {e!r}")
        pairs.append((e[0], e[1]))
    for v in verts:
        if not isinstance(v, int) or isinstance(v, bool):
            raise ParseError(f"bad vertex entry: {v!r}")
    return Tree(pairs, vertices=verts)
