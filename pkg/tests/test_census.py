from math import factorial

import pytest

from conftest import GENUS1, HOPF
from oracles import isomorphism_search
from sbwcube.census import CensusCapError, census_report, enumerate_specs, format_table, raw_report
from sbwcube.sbw import all_specs, canonical_form, criterion_check


def test_counts_of_raw_enumeration():
    assert len(list(enumerate_specs(1))) == 2
    assert len(list(enumerate_specs(2))) == 24
    assert len(list(enumerate_specs(3))) == 720


def test_n1_both_satisfy_criterion():
    assert all(criterion_check(s).verdict for s in enumerate_specs(1))


def test_n2_contains_genus_one_and_hopf_classes():
    forms = {canonical_form(s) for s in enumerate_specs(2, up_to_iso=True)}
    assert canonical_form(GENUS1) in forms
    assert canonical_form(HOPF) in forms


def test_caps():
    with pytest.raises(CensusCapError):
        list(enumerate_specs(4))
    with pytest.raises(CensusCapError):
        census_report(5)
    with pytest.raises(CensusCapError):
        list(enumerate_specs(0))


def test_rows_n1_n2():
    row = census_report(1)
    assert row.total == 2 and sum(c.size for c in row.classes) == 2
    assert all(c.verdict and c.genera == (0,) for c in row.classes)
    row = census_report(2)
    assert row.total == 24 and sum(c.size for c in row.classes) == 24
    assert {g for c in row.classes for g in c.genera} <= {0, 1}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_class_sizes_sum(n):
    row = census_report(n)
    assert sum(c.size for c in row.classes) == factorial(2 * n)


def test_connected_criterion_classes_round_trip():
    for n in (1, 2, 3):
        for c in census_report(n).classes:
            if c.verdict and c.connected:
                assert c.round_trip is True
                assert c.link_components >= 1


def test_dedup_is_sound_n_le_2():
    for n in (1, 2):
        reps = list(enumerate_specs(n, up_to_iso=True))
        for s in enumerate_specs(n):
            matches = [r for r in reps if isomorphism_search(s, r)]
            assert len(matches) == 1
            assert canonical_form(matches[0]) == canonical_form(s)


def test_deterministic():
    a, b = census_report(3), census_report(3)
    assert a.as_dict() == b.as_dict()
    assert format_table(a) == format_table(b)


def test_raw_report_rows():
    row = raw_report(2)
    assert len(row.classes) == 24 and all(c.size == 1 for c in row.classes)


def test_dedup_matches_search_n3():
    reps, forms = [], []
    for s in all_specs(3):
        hit = next((k for k, r in enumerate(reps) if isomorphism_search(s, r)), None)
        if hit is None:
            reps.append(s)
            forms.append(canonical_form(s))
        else:
            assert canonical_form(s) == forms[hit]
    assert len(set(forms)) == len(forms) == census_report(3).class_count
