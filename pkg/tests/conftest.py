"""
Pytest configuration and fixtures for the Leavitt path algebra toolkit
"""

import random
import shutil
import sys
import tempfile
from pathlib import Path

import pytest

from lpa_toolkit.algebra.field import RATIONALS, Field
from lpa_toolkit.catalogue import catalogue_graph


# Add project root to Python path
PROJECT_ROOT = Path(__file__).parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

CATALOGUE_NAMES = ["R1", "R2", "A3", "C3", "T", "EX5"]
GF5 = Field(5)


@pytest.fixture
def temp_dir():
    """Create a temporary directory for test files"""
    temp_path = tempfile.mkdtemp()
    yield Path(temp_path)
    shutil.rmtree(temp_path)

@pytest.fixture(params=[RATIONALS, GF5], ids=["Q", "GF5"])
def field(request):
    """Both coefficient fields the suites run over"""
    return request.param

@pytest.fixture
def rng():
    """Seeded random source so every run draws the same samples"""
    return random.Random(20241017)

@pytest.fixture(params=CATALOGUE_NAMES)
def catalogue_name(request):
    return request.param

@pytest.fixture
def r1():
    return catalogue_graph("R1")

@pytest.fixture
def r2():
    return catalogue_graph("R2")

@pytest.fixture
def a3():
    return catalogue_graph("A3")

@pytest.fixture
def c3():
    return catalogue_graph("C3")

@pytest.fixture
def loop_exit():
    return catalogue_graph("T")

@pytest.fixture
def example_graph():
    """Six-vertex graph with infinite emitters v, x, w"""
    return catalogue_graph("EX5")

@pytest.fixture
def example_graph_text():
    return """# worked example with three infinite emitters
vertex u
vertex v
vertex x
vertex y
vertex z
vertex w
edge uv u v
edge ux u x
edge uw u w
edge vx v x
edge yz y z
edge zy z y
edge wx w x
edge wu w u
bundle v y
bundle x y
bundle w y
"""
