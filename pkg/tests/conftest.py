import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from artinhomology.complexes import build_KW
from artinhomology.coxeter import parse_coxeter_matrix

# The 6-generator Coxeter matrix whose K_W admits no phi_2-precise matching.
OBSTRUCTION6_TEXT = """6
1 3 3 2 inf 4
3 1 3 4 2 inf
3 3 1 inf 4 2
2 4 inf 1 inf inf
inf 2 4 inf 1 inf
4 inf 2 inf inf 1
"""


@pytest.fixture(scope="session")
def obstruction6_graph():
    return parse_coxeter_matrix(OBSTRUCTION6_TEXT)


@pytest.fixture(scope="session")
def obstruction6_complex(obstruction6_graph):
    return build_KW(obstruction6_graph)


@pytest.fixture()
def obstruction6_file(tmp_path):
    path = tmp_path / "obstruction6.cox"
    path.write_text(OBSTRUCTION6_TEXT)
    return path
