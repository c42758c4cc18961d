import random
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import GENUS1, HOPF, PHI1, PHI2
from oracles import cycles_by_powers, isomorphism_search, psi_by_scan
from sbwcube.sbw import (
    CornerRef,
    EdgeRef,
    InvalidSpecError,
    SbwSpec,
    all_specs,
    canonical_form,
    canonical_spec,
    criterion_check,
    find_isomorphism,
    format_spec,
    induced_edge_bijection,
    isomorphic,
    orbit_decomposition,
    parse_spec,
    random_spec,
    transform,
)


def E(text):
    return EdgeRef(int(text[1:]), text[0])


def psi_of(pairs):
    return {E(a): E(b) for a, b in (p.split("->") for p in pairs.split())}


@st.composite
def specs(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    return random_spec(n, random.Random(draw(st.integers(0, 2**32))))


@st.composite
def spec_and_symmetry(draw):
    spec = draw(specs())
    perm = draw(st.permutations(range(1, spec.n + 1)))
    rotated = draw(st.sets(st.integers(1, spec.n)))
    return spec, dict(zip(range(1, spec.n + 1), perm)), rotated


# -- induced bijection -------------------------------------------------------

@pytest.mark.parametrize("spec, expected", [
    (PHI1, "S1->S1 N1->N1 W1->E1 E1->W1"),
    (PHI2, "S1->N1 N1->S1 W1->W1 E1->E1"),
    (HOPF, "S1->S2 S2->S1 N1->N2 N2->N1 W1->E2 E2->W1 W2->E1 E1->W2"),
])
def test_induced_edge_bijection_examples(spec, expected):
    psi = induced_edge_bijection(spec)
    assert psi == psi_of(expected)
    # cross-check against the scanning oracle
    assert {(e.square, e.side): (f.square, f.side) for e, f in psi.items()} == psi_by_scan(spec)


def test_psi_table_from_phi_targets():
    # phi(v) = SW of j gives S_j / W_j, NE of j gives N_j / E_j
    psi = induced_edge_bijection(HOPF)
    assert psi[E("S1")] == E("S2") and psi[E("E1")] == E("W2")


@settings(max_examples=200)
@given(specs())
def test_psi_is_colour_preserving_bijection(spec):
    psi = induced_edge_bijection(spec)
    assert sorted(psi.values()) == sorted(psi)
    assert all(e.color == f.color for e, f in psi.items())


# -- orbits ------------------------------------------------------------------

def test_orbits_phi1():
    o = orbit_decomposition(induced_edge_bijection(PHI1))
    assert o.black_orbits == ((E("S1"),), (E("N1"),))
    assert o.white_orbits == ((E("W1"), E("E1")),)
    assert o.count == 3


def test_orbits_identity_permutation():
    es = [EdgeRef(i, s) for i in (1, 2, 3) for s in "SNWE"]
    assert orbit_decomposition({e: e for e in es}).count == 12


def test_orbits_genus_example():
    o = orbit_decomposition(induced_edge_bijection(GENUS1))
    assert o.black_orbits == ((E("S1"), E("S2"), E("N1"), E("N2")),)
    assert o.white_orbits == ((E("W1"), E("E2"), E("E1"), E("W2")),)
    assert o.count == 2


@settings(max_examples=200)
@given(specs())
def test_orbit_invariants(spec):
    o = orbit_decomposition(induced_edge_bijection(spec))
    assert sum(map(len, o.black_orbits)) == 2 * spec.n
    assert sum(map(len, o.white_orbits)) == 2 * spec.n
    assert 2 <= o.count <= 4 * spec.n
    for orbit in o.orbits:
        assert orbit[0] == min(orbit, key=EdgeRef.sort_key)


def test_orbits_match_brute_force():
    def check(spec):
        o = orbit_decomposition(induced_edge_bijection(spec))
        mine = {frozenset((e.square, e.side) for e in orbit) for orbit in o.orbits}
        assert mine == cycles_by_powers(psi_by_scan(spec))

    for n in (1, 2, 3):
        for spec in all_specs(n):
            check(spec)
    rng = random.Random(20261016)
    for _ in range(1000):
        check(random_spec(rng.randint(1, 6), rng))


# -- criterion ---------------------------------------------------------------

def test_criterion_phi1():
    r = criterion_check(PHI1)
    assert (r.orbit_count, r.verdict, r.chi, r.genera, r.connected) == (3, True, 2, (0,), True)


def test_criterion_genus_example():
    r = criterion_check(GENUS1)
    assert (r.orbit_count, r.verdict, r.chi, r.genera, r.connected) == (2, False, 0, (1,), True)
    assert r.line() == "orbits=2 n=2 verdict=no chi_M=0 genus=1"


def test_criterion_trefoil(trefoil):
    r = criterion_check(trefoil)
    assert r.orbit_count == 5 and r.verdict
    assert r.line() == "orbits=5 n=3 verdict=yes chi_M=2 genus=0"


def test_criterion_disconnected_per_component():
    # PHI1 on square 1 beside GENUS1 on squares 2, 3
    spec = SbwSpec.from_mapping(3, {"1.SE": "1.SW", "1.NW": "1.NE",
                                    "2.SE": "3.SW", "2.NW": "3.NE", "3.SE": "2.NE", "3.NW": "2.SW"})
    r = criterion_check(spec)
    assert r.orbit_count == 5 and r.verdict
    assert r.components == 2 and r.genera == (0, 1)
    assert not r.realizable
    assert r.line().endswith("components=2")


@settings(max_examples=200)
@given(specs())
def test_chi_is_even(spec):
    assert criterion_check(spec).chi % 2 == 0


@settings(max_examples=200)
@given(spec_and_symmetry())
def test_criterion_invariant_under_symmetry(data):
    spec, relabel, rotated = data
    a, b = criterion_check(spec), criterion_check(transform(spec, relabel, rotated))
    assert (a.orbit_count, a.verdict, a.chi, sorted(a.genera)) == \
           (b.orbit_count, b.verdict, b.chi, sorted(b.genera))


# -- canonical forms ---------------------------------------------------------

@settings(max_examples=300)
@given(spec_and_symmetry())
def test_canonical_form_invariant(data):
    spec, relabel, rotated = data
    assert canonical_form(spec) == canonical_form(transform(spec, relabel, rotated))


def test_canonical_form_square_rotation():
    assert canonical_form(HOPF) == canonical_form(transform(HOPF, {1: 1, 2: 2}, {1}))


def test_canonical_spec_is_isomorphic_to_input():
    rng = random.Random(5)
    for _ in range(50):
        spec = random_spec(rng.randint(1, 4), rng)
        assert find_isomorphism(spec, canonical_spec(spec)) is not None


def test_two_one_square_specs_differ():
    assert canonical_form(PHI1) != canonical_form(PHI2)
    assert not isomorphic(PHI1, PHI2)
    assert not isomorphism_search(PHI1, PHI2)


def test_isomorphic_examples():
    assert isomorphic(HOPF, HOPF)
    swapped = transform(HOPF, {1: 2, 2: 1})
    assert isomorphic(HOPF, swapped)
    assert not isomorphic(HOPF, GENUS1)


def test_canonical_dedup_matches_search_n_le_2():
    for n in (1, 2):
        pool = list(all_specs(n))
        forms = [canonical_form(s) for s in pool]
        for (a, fa), (b, fb) in permutations(zip(pool, forms), 2):
            assert (fa == fb) == isomorphism_search(a, b)


def test_find_isomorphism_returns_witness():
    relabel, rotated = find_isomorphism(HOPF, transform(HOPF, {1: 2, 2: 1}, {2}))
    assert transform(HOPF, relabel, rotated) == transform(HOPF, {1: 2, 2: 1}, {2})


# -- text format -------------------------------------------------------------

def test_round_trip_text():
    text = format_spec(HOPF)
    assert text.splitlines()[:2] == ["sbw 1", "n 2"]
    assert parse_spec(text) == HOPF


def test_parse_with_comments_and_any_order():
    text = "# hopf\nsbw 1\nn 2\nphi 2.NW 1.NE  # last\nphi 1.SE 2.SW\nphi 2.SE 1.SW\n\nphi 1.NW 2.NE\n"
    assert parse_spec(text) == HOPF


@pytest.mark.parametrize("text, message", [
    ("sbw 2\nn 1\n", "sbw 1"),
    ("sbw 1\nn 0\n", "at least one"),
    ("sbw 1\nn 1\nphi 1.SE 1.SW\n", "expected 2"),
    ("sbw 1\nn 1\nphi 1.SE 1.SW\nphi 1.SE 1.NE\n", "duplicate pairing source"),
    ("sbw 1\nn 1\nphi 1.SE 1.SW\nphi 1.NW 1.SW\n", "duplicate pairing target"),
    ("sbw 1\nn 1\nphi 1.SE 1.SW\nphi 2.NW 1.NE\n", "out of range"),
    ("sbw 1\nn 1\nphi 1.SE 1.SW\nphi 1.NW 1.SE\n", "negative corner"),
    ("sbw 1\nn 1\nphi 1.SW 1.SW\nphi 1.NW 1.NE\n", "positive corner"),
    ("sbw 1\nn 1\nphi 1.SE 1.SW\nphi 1.NW 1.XX\n", "bad corner"),
    ("sbw 1\nn 1\nphi 1.SE 1.SW\nphi 1.NW 1.NE\nphi 1.NW 1.NE\n", "expected 2"),
])
def test_parse_rejects(text, message):
    with pytest.raises(InvalidSpecError, match=message):
        parse_spec(text)


def test_constructor_rejects_zero_squares():
    with pytest.raises(InvalidSpecError):
        SbwSpec(0, ())


def test_corner_signs():
    assert [CornerRef(1, c).sign for c in ("SW", "SE", "NE", "NW")] == [-1, 1, -1, 1]
    for side in "SNWE":
        e = EdgeRef(1, side)
        assert e.initial.sign == -1 and e.terminal.sign == 1
