import pytest
from hypothesis import HealthCheck, settings

from dyncut import CutTree, DynamicGraph

settings.register_profile(
    "dyncut",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("dyncut")


@pytest.fixture
def t3():
    """Triangle: {1,2}:1, {2,3}:2, {1,3}:3."""
    return DynamicGraph(edges=[(1, 2, 1), (2, 3, 2), (1, 3, 3)])


@pytest.fixture
def p3():
    """Path: {1,2}:3, {2,3}:2."""
    return DynamicGraph(edges=[(1, 2, 3), (2, 3, 2)])


@pytest.fixture
def c4():
    """Unit 4-cycle 1-2-3-4-1."""
    return DynamicGraph(edges=[(1, 2, 1), (2, 3, 1), (3, 4, 1), (1, 4, 1)])


@pytest.fixture
def t3_tree():
    """A valid cut tree of the triangle fixture."""
    return CutTree(edges=[(1, 3, 4), (2, 3, 3)])


@pytest.fixture
def p3_tree():
    return CutTree(edges=[(1, 2, 3), (2, 3, 2)])
