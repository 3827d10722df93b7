import copy

import pytest

from localslices import ValidationError
from localslices import io
from localslices.verify import SUITES, verify_suite


@pytest.mark.parametrize("suite", [s for s in SUITES if s != "all"])
def test_suites_pass(suite):
    results = verify_suite(suite)
    assert results
    assert all(r.passed for r in results), [r.to_json() for r in results if not r.passed]


def test_unknown_suite():
    with pytest.raises(ValidationError):
        verify_suite("nope")


def test_corrupted_figure1_fails_axioms_with_point():
    raw = copy.deepcopy(io.golden_raw("figure1"))
    z, tz = raw["tau"][0]
    orbit_of = {p["id"]: p["orbit"] for p in raw["points"]}
    targets = {t for _, t in raw["tau"]}
    other = next(p for p in orbit_of if p not in targets and orbit_of[p] != orbit_of[z])
    raw["tau"][0] = [z, other]
    g = io.translation_from_json(raw, check=False)
    results = verify_suite("axioms", [("corrupt", g)])
    bad = [r for r in results if not r.passed]
    assert len(bad) == 1 and z in bad[0].counterexample["points"]


def test_repair_logs_increasing_distance():
    (r,) = verify_suite("repair")
    assert r.passed and r.checked > 0
