import pytest

from strees.errors import (
    DomainMismatch,
    NotATree,
    NotDisjoint,
    ParseError,
    VertexNotFound,
)
from strees.tree import (
    Forest,
    Tree,
    VertexVector,
    in_out,
    lift,
    parse_tree,
    restrict,
    tree_from_json,
    tree_to_edge_text,
    tree_to_json,
)


class TestTreeConstruction:
    def test_single_vertex(self):
        t = Tree([], vertices=[5])
        assert t.order == 1
        assert t.vertices == (5,)
        assert t.edges() == ()

    def test_edge_list(self):
        t = Tree([(2, 1), (2, 3)])
        assert t.vertices == (1, 2, 3)
        assert t.edges() == ((1, 2), (2, 3))
        assert t.neighbors(2) == (1, 3)
        assert t.degree(2) == 2
        assert t.has_edge(3, 2)
        assert not t.has_edge(1, 3)

    def test_rejects_cycle(self):
        with pytest.raises(NotATree):
            Tree([(1, 2), (2, 3), (3, 1)])

    def test_rejects_disconnected(self):
        with pytest.raises(NotATree):
            Tree([(1, 2), (3, 4)])

    def test_rejects_self_loop(self):
        with pytest.raises(NotATree):
            Tree([(1, 1)])

    def test_rejects_duplicate_edge(self):
        with pytest.raises(NotATree):
            Tree([(1, 2), (2, 1)])

    def test_rejects_isolated_extra_vertex(self):
        with pytest.raises(NotATree):
            Tree([(1, 2)], vertices=[1, 2, 3])

    def test_rejects_bad_ids(self):
        with pytest.raises(NotATree):
            Tree([(-1, 2)])
        with pytest.raises(NotATree):
            Tree([("a", 2)])

    def test_contains(self):
        t = Tree([(1, 2)])
        assert 1 in t and 2 in t and 3 not in t


class TestTreeQueries:
    def test_path(self, tree8):
        assert tree8.path(2, 7) == [2, 1, 5, 6, 7]
        assert tree8.path(4, 4) == [4]

    def test_path_missing_vertex(self, tree8):
        with pytest.raises(VertexNotFound):
            tree8.path(1, 99)

    def test_subtree_toward(self, tree8):
        sub = tree8.subtree_toward(1, 5)
        assert sub.vertices == (5, 6, 7, 8)
        assert sub.has_edge(6, 7)
        whole = tree8.subtree_toward(3, 3)
        assert whole.vertices == tree8.vertices

    def test_induced_subtree_requires_connected(self, tree8):
        with pytest.raises(NotATree):
            tree8.induced_subtree({2, 7})

    def test_components_within(self, tree8):
        comps = tree8.components_within({2, 3, 6, 7, 8})
        assert tuple(c.vertices for c in comps) == ((2,), (3,), (6, 7, 8))


class TestForest:
    def test_disjointness(self):
        a = Tree([(1, 2)])
        b = Tree([(2, 3)])
        with pytest.raises(NotDisjoint):
            Forest([a, b])

    def test_sorted_parts(self):
        a = Tree([(5, 6)])
        b = Tree([(1, 2)])
        f = Forest([a, b])
        assert tuple(p.vertices for p in f.trees) == ((1, 2), (5, 6))
        assert f.vertices == (1, 2, 5, 6)


class TestVertexVector:
    def test_zero_entries_dropped(self):
        x = VertexVector((1, 2, 3), {1: 1, 2: 0})
        assert x.entries == {1: 1}
        assert x.support() == (1,)

    def test_domain_enforced(self):
        with pytest.raises(DomainMismatch):
            VertexVector((1, 2), {3: 1})

    def test_algebra(self):
        dom = (1, 2, 3)
        x = VertexVector.unit(dom, 1)
        y = VertexVector.unit(dom, 2)
        s = x + y
        assert s.entries == {1: 1, 2: 1}
        assert (s - x).entries == {2: 1}
        assert (2 * x).entries == {1: 2}
        assert (x - x).is_zero()

    def test_indicator(self):
        x = VertexVector.indicator((1, 2, 3), (1, 3))
        assert x.entries == {1: 1, 3: 1}

    def test_restrict_lift(self, tree18):
        sub = tree18.induced_subtree({9, 10, 11, 12})
        x = VertexVector(sub.vertices, {9: 1, 10: 2, 11: 3, 12: 4})
        lifted = lift(x, tree18)
        assert lifted.entries == {9: 1, 10: 2, 11: 3, 12: 4}
        assert set(lifted.domain) == set(tree18.vertices)
        back = restrict(lifted, sub)
        assert back.entries == x.entries
        with pytest.raises(DomainMismatch):
            lift(VertexVector((99,), {99: 1}), tree18)

    def test_equality_hash(self):
        a = VertexVector((1, 2), {1: 1})
        b = VertexVector((1, 2), {1: 1})
        assert a == b and hash(a) == hash(b)


class TestInOut:
    def test_pinned_pair(self, tree8):
        # from the far branch back toward vertex 2: enters at 1
        entry, out = in_out(tree8, {5, 6, 7, 8}, {2})
        assert (entry, out) == (5, 1)

    def test_second_pinned_pair(self, tree18):
        entry, out = in_out(tree18, {4, 5, 6, 7, 8}, {13})
        assert (entry, out) == (4, 14)

    def test_overlap_rejected(self, tree8):
        with pytest.raises(NotDisjoint):
            in_out(tree8, {1, 2}, {2, 3})


class TestParsing:
    def test_edge_text_round_trip(self, tree8):
        text = tree_to_edge_text(tree8)
        again = parse_tree(text)
        assert again.edges() == tree8.edges()

    def test_comments_and_blanks(self):
        t = parse_tree("# a comment\n\n1 2\n2 3\n")
        assert t.vertices == (1, 2, 3)

    def test_single_vertex_line(self):
        t = parse_tree("7\n")
        assert t.vertices == (7,)

    def test_json_round_trip(self, tree18):
        again = tree_from_json(tree_to_json(tree18))
        assert again.edges() == tree18.edges()

    def test_json_text_detected(self, tree6):
        import json

        again = parse_tree(json.dumps(tree_to_json(tree6)))
        assert again.edges() == tree6.edges()

    def test_parse_garbage(self):
        with pytest.raises(ParseError):
            parse_tree("1 2 3\n")
        with pytest.raises(ParseError):
            parse_tree("one two\n")

    def test_parse_empty(self):
        with pytest.raises(ParseError):
            parse_tree("# nothing\n")
