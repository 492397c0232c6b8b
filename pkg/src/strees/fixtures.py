"""Canonical fixture trees shipped with the package.

tree8: 8 vertices; every leaf supported, cores at the two branch vertices.
tree18: 18 vertices; three support parts, two nonsingular parts.
tree6: the double star; a support tree with a bond edge between its cores.
"""

from __future__ import annotations

from importlib import resources

from .tree import Tree, parse_tree

FIXTURE_NAMES = ("tree8", "tree18", "tree6")


def fixture_text(name: str) -> str:
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}; have {FIXTURE_NAMES}")
    return (
        resources.files("strees").joinpath("data", f"{name}.edges").read_text()
    )


def fixture_tree(name: str) -> Tree:
    return parse_tree(fixture_text(name))


def fixture_path(name: str) -> str:
    """Filesystem path of a fixture's edge file (for CLI invocations)."""
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}; have {FIXTURE_NAMES}")
    return str(resources.files("strees").joinpath("data", f"{name}.edges"))


def path_tree(n: int) -> Tree:
    """Path on vertices 1..n."""
    if n == 1:
        return Tree([], vertices=[1])
    return Tree([(i, i + 1) for i in range(1, n)])


def star_tree(leaves: int) -> Tree:
    """Star with center 0 and the given number of leaves."""
    if leaves == 0:
        return Tree([], vertices=[0])
    return Tree([(0, i) for i in range(1, leaves + 1)])
