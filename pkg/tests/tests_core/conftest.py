"""
Pytest configuration for the exact-geometry core.
Provides the root systems shared across test modules.
"""
import pytest

from dscones.core.rootsys import root_system


@pytest.fixture(scope="module")
def a1():
    """The rank-one system."""
    return root_system("A1")


@pytest.fixture(scope="module")
def b2():
    return root_system("B2")


@pytest.fixture(scope="module")
def a2():
    """A system without -1 in W."""
    return root_system("A2")
