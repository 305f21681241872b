from fractions import Fraction

import pytest

import tpkit as T


def make_random_disc(seed, target_cells=60, bias=Fraction(1, 2)):
    spec = T.GeneratorSpec(
        "random", seed=seed, target_cells=target_cells, pentagon_bias=bias
    )
    return T.gen_random_cat0_disc(spec)


@pytest.fixture(scope="session")
def presets():
    return {
        "star4": T.gen_star4_pentagons(),
        "fan3": T.gen_fan3_pentagons_triangle(),
        "fan2": T.gen_fan2_pentagons_3triangles(),
        "fan1": T.gen_fan1_pentagon_5triangles(),
    }


@pytest.fixture(scope="session")
def subdivided_presets(presets):
    return {name: T.subdivide(cx) for name, cx in presets.items()}


@pytest.fixture(scope="session")
def dwheel_control():
    """Two interlocking full 5-wheels: hub 7 rim (0,1,2,3,4), hub 1 rim
    (0,5,6,2,7).  Each hub sits on the other wheel's rim, producing one
    planar (5,5)-dwheel with boundary length 6."""
    triangles = [
        (7, 0, 1), (7, 1, 2), (7, 2, 3), (7, 3, 4), (7, 4, 0),
        (1, 0, 5), (1, 5, 6), (1, 6, 2),
    ]
    return T.build_simplicial_complex(8, triangles)
