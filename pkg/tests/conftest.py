import pytest

from levelarr.arrangement import Arrangement, Hyperplane


def hp(normal, offset=0) -> Hyperplane:
    return Hyperplane(normal, offset)


@pytest.fixture(scope="session")
def example_a() -> Arrangement:
    """Worked 5-hyperplane difference arrangement in R^3.

    x1-x2 = 0, x1-x2 = 1, x2-x3 = 0, x1-x3 = 1, x1-x3 = 0.
    Known by hand: chi = t^3 - 5t^2 + 6t, 12 regions with levels (2, 4, 6)
    at levels (1, 2, 3).
    """
    return Arrangement(
        3,
        [
            hp((1, -1, 0), 0),
            hp((1, -1, 0), 1),
            hp((0, 1, -1), 0),
            hp((1, 0, -1), 1),
            hp((1, 0, -1), 0),
        ],
    )


@pytest.fixture(scope="session")
def example_b() -> Arrangement:
    """Worked 4-hyperplane type B deformation in R^2.

    x1 = 0, x1-x2 = 0, x2 = 0, x1+x2 = 1.  chi = t^2 - 4t + 5; 10 regions,
    2 bounded (level 0) and 8 of level 2.
    """
    return Arrangement(
        2,
        [
            hp((1, 0), 0),
            hp((1, -1), 0),
            hp((0, 1), 0),
            hp((1, 1), 1),
        ],
    )


@pytest.fixture(scope="session")
def grid_example() -> Arrangement:
    """Four lines in R^2: x = 0, y = 0, x+y = 1, y = 1.

    chi = t^2 - 4t + 4; 9 regions with level profile (1, 2, 6).
    """
    return Arrangement(
        2,
        [
            hp((1, 0), 0),
            hp((0, 1), 0),
            hp((1, 1), 1),
            hp((0, 1), 1),
        ],
    )
