import pytest

from strees.decomposition import (
    atom_set,
    atom_set_to_json,
    bouquet,
    classify,
    decompose,
    decomposition_to_json,
    invariant_report,
    render_dot,
    support_core,
)
from strees.errors import NotCoreVertex
from strees.fixtures import path_tree, star_tree
from strees.tree import Tree


class TestSupportCore:
    def test_tree8(self, tree8):
        sc = support_core(tree8)
        assert sc.support == (2, 3, 4, 5, 7, 8)
        assert sc.core == (1, 6)

    def test_tree18(self, tree18):
        sc = support_core(tree18)
        assert sc.support == (2, 3, 6, 7, 8, 10, 11, 12)
        assert sc.core == (1, 4, 5, 9)

    def test_nonsingular_tree_empty(self):
        sc = support_core(path_tree(4))
        assert sc.support == () and sc.core == ()

    def test_single_vertex(self):
        sc = support_core(Tree([], vertices=[3]))
        assert sc.support == (3,) and sc.core == ()

    def test_no_support_support_edges(self, tree18):
        sc = support_core(tree18)
        s = set(sc.support)
        for u, v in tree18.edges():
            assert not (u in s and v in s)

    def test_core_never_pendant(self, tree18):
        sc = support_core(tree18)
        for v in sc.core:
            assert tree18.degree(v) >= 2


class TestDecompose:
    def test_tree18_parts(self, tree18):
        dec = decompose(tree18)
        assert tuple(p.vertices for p in dec.support_parts) == (
            (1, 2, 3),
            (4, 5, 6, 7, 8),
            (9, 10, 11, 12),
        )
        assert tuple(p.vertices for p in dec.nonsingular_parts) == (
            (13, 14),
            (15, 16, 17, 18),
        )
        assert dec.connection_edges == ((1, 13), (4, 14), (9, 13), (9, 16))
        assert dec.nonsingular_vertex_count == 6

    def test_tree8_single_part(self, tree8):
        dec = decompose(tree8)
        assert len(dec.support_parts) == 1
        assert dec.support_parts[0].vertices == tree8.vertices
        assert dec.nonsingular_parts == ()
        assert dec.connection_edges == ()

    def test_nonsingular_whole(self):
        dec = decompose(path_tree(4))
        assert dec.support_parts == ()
        assert len(dec.nonsingular_parts) == 1

    def test_json_shape(self, tree18):
        obj = decomposition_to_json(decompose(tree18))
        assert obj["support_parts"] == [[1, 2, 3], [4, 5, 6, 7, 8], [9, 10, 11, 12]]
        assert obj["nonsingular_parts"] == [[13, 14], [15, 16, 17, 18]]
        assert obj["connection_edges"] == [[1, 13], [4, 14], [9, 13], [9, 16]]


class TestAtoms:
    def test_tree6_bond_split(self, tree6):
        ats = atom_set(tree6)
        assert tuple(a.vertices for a in ats.atoms) == ((1, 2, 3), (4, 5, 6))
        assert ats.bond_edges == ((2, 5),)

    def test_tree18_atoms(self, tree18):
        ats = atom_set(tree18)
        assert tuple(a.vertices for a in ats.atoms) == (
            (1, 2, 3),
            (4, 5, 6, 7, 8),
            (9, 10, 11, 12),
        )
        assert ats.bond_edges == ()
        assert ats.max_core_degrees == (2, 2, 3)

    def test_tree8_one_atom(self, tree8):
        ats = atom_set(tree8)
        assert len(ats.atoms) == 1
        assert ats.max_core_degrees == (4,)

    def test_atoms_bipartite_between_classes(self, tree18):
        ats = atom_set(tree18)
        for a, sc in zip(ats.atoms, ats.atom_support_cores):
            s, c = set(sc.support), set(sc.core)
            for u, v in a.edges():
                assert (u in s) != (v in s)
                assert (u in c) != (v in c)

    def test_json_shape(self, tree6):
        obj = atom_set_to_json(atom_set(tree6))
        assert obj["atoms"] == [[1, 2, 3], [4, 5, 6]]
        assert obj["bond_edges"] == [[2, 5]]


class TestBouquet:
    def test_pinned(self, tree18, tree8):
        assert bouquet(tree18, 4) == (6, 7)
        assert bouquet(tree18, 9) == (10, 11, 12)
        assert bouquet(tree8, 1) == (2, 3, 4, 5)

    def test_rejects_non_core(self, tree8):
        with pytest.raises(NotCoreVertex):
            bouquet(tree8, 2)


class TestClassify:
    def test_tree8(self, tree8):
        c = classify(tree8)
        assert c.is_support_tree
        assert not c.is_nonsingular_tree
        assert c.is_atom
        assert not c.is_basic
        assert c.max_core_degree == 4

    def test_path5_basic(self, p5):
        c = classify(p5)
        assert c.is_atom and c.is_basic
        assert c.max_core_degree == 2

    def test_path4_nonsingular(self):
        c = classify(path_tree(4))
        assert c.is_nonsingular_tree
        assert not c.is_support_tree and not c.is_atom

    def test_tree6_support_but_not_atom(self, tree6):
        c = classify(tree6)
        assert c.is_support_tree
        assert not c.is_atom  # the core-core bond disqualifies it

    def test_single_vertex_conventions(self):
        c = classify(Tree([], vertices=[0]))
        assert c.is_support_tree and c.is_atom
        assert not c.is_basic
        assert c.max_core_degree == 0

    def test_star_atom(self, k13):
        c = classify(k13)
        assert c.is_atom and not c.is_basic
        assert c.max_core_degree == 3


class TestInvariantReport:
    def test_tree18_numbers(self, tree18):
        rep = invariant_report(tree18)
        assert rep.order == 18
        assert rep.rank == 14
        assert rep.nullity == 4
        assert rep.matching_number == 7
        assert rep.independence_number == 11
        assert rep.support_size == 8
        assert rep.core_size == 4
        assert rep.nonsingular_vertex_count == 6
        assert "rank_is_twice_matching" in rep.checks
        assert "matching_count_from_atoms" in rep.checks

    def test_single_vertex(self):
        rep = invariant_report(Tree([], vertices=[0]))
        assert rep.rank == 0 and rep.nullity == 1
        assert rep.matching_number == 0 and rep.independence_number == 1


class TestDot:
    def test_roles_encoded(self, tree18, tree6):
        dec = decompose(tree18)
        dot = render_dot(tree18, dec, atom_set(tree18, _dec=dec))
        assert dot.startswith("graph tree {")
        assert "style=filled" in dot  # supported vertices
        assert "doublecircle" in dot  # core vertices
        assert "style=dotted" in dot and "cluster" in dot  # nonsingular parts
        assert "style=dashed" in dot  # connection edges
        assert dot.rstrip().endswith("}")
        dot6 = render_dot(tree6, ats=atom_set(tree6))
        assert "style=bold" in dot6  # the core-core bond edge

    def test_deterministic(self, tree18):
        assert render_dot(tree18) == render_dot(tree18)
