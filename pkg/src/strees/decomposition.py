"""Null decomposition of a tree and its atoms.

The support of a tree is the set of vertices where some kernel vector of the
adjacency matrix is nonzero; the core is the neighborhood of the support.
Removing the closed neighborhood of the support splits the tree into
support parts (the components induced by the closed neighborhood) and
nonsingular parts (the rest); the leftover edges are connection edges.
Deleting core-core edges inside support parts yields the atoms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import exact, matching
from .errors import FormulaMismatch, NotCoreVertex
from .tree import Edge, Tree, VertexVector


@dataclass(frozen=True)
class SupportCore:
    support: tuple[int, ...]
    core: tuple[int, ...]

    @property
    def support_size(self) -> int:
        return len(self.support)

    @property
    def core_size(self) -> int:
        return len(self.core)


def support_core(t: Tree, _kernel: Sequence[VertexVector] | None = None) -> SupportCore:
    """Support and core from an exact kernel basis."""
    vecs = exact.tree_kernel(t) if _kernel is None else _kernel
    supp: set[int] = set()
    for x in vecs:
        supp.update(x.entries)
    core = {w for v in supp for w in t.adj[v]} - supp
    return SupportCore(tuple(sorted(supp)), tuple(sorted(core)))


@dataclass(frozen=True, eq=False)
class NullDecomposition:
    tree: Tree
    support: tuple[int, ...]
    core: tuple[int, ...]
    support_parts: tuple[Tree, ...]
    nonsingular_parts: tuple[Tree, ...]
    connection_edges: tuple[Edge, ...]
    part_support_cores: tuple[SupportCore, ...]  # aligned with support_parts

    @property
    def nonsingular_vertex_count(self) -> int:
        return sum(p.order for p in self.nonsingular_parts)


def decompose(t: Tree, _kernel: Sequence[VertexVector] | None = None) -> NullDecomposition:
    sc = support_core(t, _kernel)
    supp = set(sc.support)
    closed = supp | set(sc.core)
    s_parts = t.components_within(closed) if closed else []
    n_parts = t.components_within(set(t.vertices) - closed) if len(closed) < t.order else []
    inside = {e for p in s_parts for e in p.edges()} | {
        e for p in n_parts for e in p.edges()
    }
    connection = tuple(e for e in t.edges() if e not in inside)
    part_classes = tuple(
        SupportCore(
            tuple(v for v in p.vertices if v in supp),
            tuple(v for v in p.vertices if v in closed and v not in supp),
        )
        for p in s_parts
    )
    return NullDecomposition(
        tree=t,
        support=sc.support,
        core=sc.core,
        support_parts=tuple(s_parts),
        nonsingular_parts=tuple(n_parts),
        connection_edges=connection,
        part_support_cores=part_classes,
    )


@dataclass(frozen=True, eq=False)
class AtomSet:
    tree: Tree
    atoms: tuple[Tree, ...]
    bond_edges: tuple[Edge, ...]
    atom_support_cores: tuple[SupportCore, ...]
    max_core_degrees: tuple[int, ...]  # per atom: largest degree of a core vertex


def atom_set(t: Tree, _dec: NullDecomposition | None = None) -> AtomSet:
    """Atoms of every support part: pieces left after cutting core-core edges."""
    dec = decompose(t) if _dec is None else _dec
    supp = set(dec.support)
    core = set(dec.core)
    atoms: list[Tree] = []
    bonds: list[Edge] = []
    for part in dec.support_parts:
        part_bonds = [e for e in part.edges() if e[0] in core and e[1] in core]
        bonds.extend(part_bonds)
        if not part_bonds:
            atoms.append(part)
            continue
        cut = set(part_bonds)
        keep_adj = {
            v: tuple(w for w in part.adj[v] if (min(v, w), max(v, w)) not in cut)
            for v in part.vertices
        }
        seen: set[int] = set()
        for v in part.vertices:
            if v in seen:
                continue
            comp = {v}
            stack = [v]
            while stack:
                for w in keep_adj[stack.pop()]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            verts = tuple(sorted(comp))
            adj = {x: tuple(w for w in keep_adj[x] if w in comp) for x in verts}
            atoms.append(Tree._trusted(verts, adj))
    atoms.sort(key=lambda a: a.vertices[0])
    classes = tuple(
        SupportCore(
            tuple(v for v in a.vertices if v in supp),
            tuple(v for v in a.vertices if v in core),
        )
        for a in atoms
    )
    degrees = tuple(
        max((a.degree(v) for v in cls.core), default=0)
        for a, cls in zip(atoms, classes)
    )
    return AtomSet(
        tree=t,
        atoms=tuple(atoms),
        bond_edges=tuple(sorted(bonds)),
        atom_support_cores=classes,
        max_core_degrees=degrees,
    )


def bouquet(t: Tree, v: int) -> tuple[int, ...]:
    """Supported neighbors of a core vertex."""
    sc = support_core(t)
    if v not in sc.core:
        raise NotCoreVertex(f"vertex {v} is not a core vertex")
    supp = set(sc.support)
    return tuple(w for w in t.neighbors(v) if w in supp)


@dataclass(frozen=True)
class Classification:
    is_support_tree: bool  # closed neighborhood of the support is everything
    is_nonsingular_tree: bool  # adjacency matrix invertible
    is_atom: bool  # support tree without core-core edges
    is_basic: bool  # atom whose core vertices all have degree <= 2, order > 1
    max_core_degree: int


def classify(t: Tree, _kernel: Sequence[VertexVector] | None = None) -> Classification:
    vecs = exact.tree_kernel(t) if _kernel is None else _kernel
    sc = support_core(t, vecs)
    supp = set(sc.support)
    core = set(sc.core)
    closed = supp | core
    is_s = len(closed) == t.order
    is_n = len(vecs) == 0
    no_bond = not any(u in core and w in core for u, w in t.edges())
    is_atom = is_s and no_bond
    mcd = max((t.degree(v) for v in core), default=0)
    is_basic = is_atom and t.order > 1 and mcd == 2
    return Classification(
        is_support_tree=is_s,
        is_nonsingular_tree=is_n,
        is_atom=is_atom,
        is_basic=is_basic,
        max_core_degree=mcd,
    )


@dataclass(frozen=True)
class InvariantReport:
    """Counts of one tree with every cross-formula verified."""

    order: int
    rank: int
    nullity: int
    matching_number: int
    max_matching_count: int
    independence_number: int
    support_size: int
    core_size: int
    nonsingular_vertex_count: int
    checks: tuple[str, ...]


def invariant_report(t: Tree) -> InvariantReport:
    """Compute rank/nullity/matching data and verify the structural formulas.

    Raises FormulaMismatch if any identity fails; a failure here means a bug,
    not a property of the input.
    """
    vecs = exact.tree_kernel(t)
    dec = decompose(t, _kernel=vecs)
    nullity = len(vecs)
    rank = t.order - nullity
    nu, m_count = matching.matching_number_and_count(t)
    alpha = matching.independence_number(t)
    supp_size = len(dec.support)
    core_size = len(dec.core)
    n_count = dec.nonsingular_vertex_count
    checks: list[tuple[str, bool]] = [
        ("rank_is_twice_matching", rank == 2 * nu),
        ("nullity_is_support_minus_core", nullity == supp_size - core_size),
        ("matching_from_parts", nu == core_size + n_count // 2),
        ("independence_from_parts", alpha == supp_size + n_count // 2),
        ("independence_plus_matching", alpha + nu == t.order),
        ("nonsingular_vertices_even", n_count % 2 == 0),
    ]
    ats = atom_set(t, _dec=dec)
    prod = 1
    for a in ats.atoms:
        prod *= matching.count_maximum_matchings(a)
    checks.append(("matching_count_from_atoms", prod == m_count))
    bad = [name for name, ok in checks if not ok]
    if bad:
        raise FormulaMismatch(f"identity failed: {', '.join(bad)}")
    return InvariantReport(
        order=t.order,
        rank=rank,
        nullity=nullity,
        matching_number=nu,
        max_matching_count=m_count,
        independence_number=alpha,
        support_size=supp_size,
        core_size=core_size,
        nonsingular_vertex_count=n_count,
        checks=tuple(name for name, _ in checks),
    )


# -- serialization --------------------------------------------------------


def decomposition_to_json(dec: NullDecomposition) -> dict:
    return {
        "support": list(dec.support),
        "core": list(dec.core),
        "support_parts": [list(p.vertices) for p in dec.support_parts],
        "nonsingular_parts": [list(p.vertices) for p in dec.nonsingular_parts],
        "connection_edges": [list(e) for e in dec.connection_edges],
        "part_support": [list(c.support) for c in dec.part_support_cores],
        "part_core": [list(c.core) for c in dec.part_support_cores],
    }


def atom_set_to_json(ats: AtomSet) -> dict:
    return {
        "atoms": [list(a.vertices) for a in ats.atoms],
        "bond_edges": [list(e) for e in ats.bond_edges],
        "atom_support": [list(c.support) for c in ats.atom_support_cores],
        "atom_core": [list(c.core) for c in ats.atom_support_cores],
        "max_core_degrees": list(ats.max_core_degrees),
    }


def render_dot(t: Tree, dec: NullDecomposition | None = None, ats: AtomSet | None = None) -> str:
    """Graphviz rendering with decomposition roles.

    Supported vertices are filled, core vertices double-circled, nonsingular
    parts sit in dotted clusters, connection edges are dashed, and bond edges
    (when an atom set is given) are bold.
    """
    if dec is None:
        dec = decompose(t)
    supp = set(dec.support)
    core = set(dec.core)
    conn = set(dec.connection_edges)
    bonds = set(ats.bond_edges) if ats is not None else set()
    lines = ["graph tree {", "  node [shape=circle];"]
    clustered = set()
    for i, part in enumerate(dec.nonsingular_parts):
        lines.append(f"  subgraph cluster_n{i} {{")
        lines.append("    style=dotted;")
        for v in part.vertices:
            lines.append(f"    {v};")
            clustered.add(v)
        lines.append("  }")
    for v in t.vertices:
        attrs = []
        if v in supp:
            attrs.append("style=filled")
        if v in core:
            attrs.append("shape=doublecircle")
        if attrs:
            lines.append(f"  {v} [{', '.join(attrs)}];")
        elif v not in clustered:
            lines.append(f"  {v};")
    for u, v in t.edges():
        attrs = []
        if (u, v) in conn:
            attrs.append("style=dashed")
        if (u, v) in bonds:
            attrs.append("style=bold")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {u} -- {v}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"
