import pytest

from latticeknots import Tabulation, build_knot, knot_from_vertices

# The 12-stick trefoil table: columns x, y, z; type sequence cycling
# z+, x+, y+, z-, x-, y- twice.
TREFOIL_TYPES = ("z+", "x+", "y+", "z-", "x-", "y-") * 2
TREFOIL_X = (2, 3, 2, 1)
TREFOIL_Y = (1, 2, 3, 2)
TREFOIL_Z = (3, 2, 1, 2)


def trefoil_tabulation() -> Tabulation:
    return Tabulation.from_columns(TREFOIL_TYPES, TREFOIL_X, TREFOIL_Y, TREFOIL_Z)


@pytest.fixture
def trefoil():
    return build_knot(trefoil_tabulation())


@pytest.fixture
def unit_square():
    return knot_from_vertices([(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)])


@pytest.fixture
def rectangle():
    return knot_from_vertices([(0, 0, 0), (2, 0, 0), (2, 1, 0), (0, 1, 0)])


@pytest.fixture
def cube_hexagon():
    # nonplanar hexagon around a cube corner, the distortion-one one
    return knot_from_vertices(
        [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1), (0, 1, 1), (0, 0, 1)]
    )
