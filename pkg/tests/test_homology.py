import random

import pytest
from sympy import Matrix
from sympy.matrices.normalforms import invariant_factors

from conftest import HOPF, PHI1
from sbwcube.complexes import build_squared_complex
from sbwcube.homology import (
    DisconnectedComplexError,
    GroupPresentation,
    first_homology,
    fundamental_group_presentation,
    smith_diagonal,
)
from sbwcube.sbw import SbwSpec


def sympy_diagonal(rows):
    return [abs(int(x)) for x in invariant_factors(Matrix(rows)) if x != 0]


@pytest.mark.parametrize("rows, diag", [
    ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], [2, 6, 12]),
    ([[0, 0], [0, 0]], []),
    ([[6]], [6]),
    ([[1, 2], [3, 4]], [1, 2]),
])
def test_smith_small(rows, diag):
    assert smith_diagonal(rows) == diag == sympy_diagonal(rows)


def test_smith_against_sympy():
    rng = random.Random(11)
    for _ in range(300):
        r, c = rng.randint(1, 7), rng.randint(1, 7)
        rows = [[rng.choice([0, 0, rng.randint(-9, 9)]) for _ in range(c)] for _ in range(r)]
        d = smith_diagonal(rows)
        assert d == sympy_diagonal(rows)
        assert all(b % a == 0 for a, b in zip(d, d[1:]))


def test_presentation_phi1():
    p = fundamental_group_presentation(build_squared_complex(PHI1))
    assert p.generators == 2 and len(p.relators) == 1


def test_presentation_trefoil(trefoil):
    p = fundamental_group_presentation(build_squared_complex(trefoil))
    assert p.generators == 4 and len(p.relators) == 3
    assert first_homology(p) == (1, ())


def test_homology_hopf():
    p = fundamental_group_presentation(build_squared_complex(HOPF))
    assert first_homology(p) == (2, ())


def test_free_abelianization():
    assert first_homology(GroupPresentation(3, ())) == (3, ())


def test_torsion_detected():
    # <a, b | a^2, b^3 a^-1 b> abelianizes to Z/8
    p = GroupPresentation(2, ((1, 1), (2, 2, 2, -1, 2)))
    assert first_homology(p) == (0, (8,))
    assert sympy_diagonal(p.exponent_matrix()) == [1, 8]


def test_relator_range_checked():
    with pytest.raises(ValueError):
        GroupPresentation(1, ((2,),))


def test_disconnected_complex_rejected():
    two_curls = SbwSpec.from_mapping(2, {"1.SE": "1.SW", "1.NW": "1.NE", "2.SE": "2.SW", "2.NW": "2.NE"})
    with pytest.raises(DisconnectedComplexError):
        fundamental_group_presentation(build_squared_complex(two_curls))
