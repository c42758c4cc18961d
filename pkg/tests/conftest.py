import pytest

from sbwcube import SbwSpec, checkerboard_coloring, extract_sbw, parse_pd, trace_faces

TREFOIL_PD = "X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3"
HOPF_PD = "X 1 3 2 4 / X 3 1 4 2"
CURL_PD = "X 1 1 2 2"

PHI1 = SbwSpec.from_mapping(1, {"1.SE": "1.SW", "1.NW": "1.NE"})
PHI2 = SbwSpec.from_mapping(1, {"1.SE": "1.NE", "1.NW": "1.SW"})
HOPF = SbwSpec.from_mapping(2, {"1.SE": "2.SW", "1.NW": "2.NE", "2.SE": "1.SW", "2.NW": "1.NE"})
GENUS1 = SbwSpec.from_mapping(2, {"1.SE": "2.SW", "1.NW": "2.NE", "2.SE": "1.NE", "2.NW": "1.SW"})


def spec_of_pd(text):
    return extract_sbw(checkerboard_coloring(trace_faces(parse_pd(text))))


@pytest.fixture
def trefoil():
    return spec_of_pd(TREFOIL_PD)
