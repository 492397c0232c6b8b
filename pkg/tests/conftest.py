import pytest

from strees.fixtures import fixture_tree, path_tree, star_tree


@pytest.fixture(scope="session")
def tree8():
    return fixture_tree("tree8")


@pytest.fixture(scope="session")
def tree18():
    return fixture_tree("tree18")


@pytest.fixture(scope="session")
def tree6():
    return fixture_tree("tree6")


@pytest.fixture
def p5():
    return path_tree(5)


@pytest.fixture
def k13():
    return star_tree(3)
