import pytest

from skewbrace.audit import ALIASES, SUITES, Row, SuiteResult, resolve_keys, run_suites
from skewbrace.catalog import BraceCatalog, Provenance, enumerate_order

from .conftest import catalog_upto


def test_resolve_keys():
    assert resolve_keys("all") == list(SUITES)
    assert resolve_keys("dictionary") == ["dict-prop2"]
    assert resolve_keys("teo2, ybe") == ["teo2", "ybe"]
    with pytest.raises(KeyError):
        resolve_keys("nope")
    assert set(ALIASES.values()) <= set(SUITES)


def test_required_keys_present():
    for key in ("theoremA", "teo2", "teo3", "lemma31", "dict-prop2", "ito-engine", "sli-engine", "tsang11", "ybe"):
        assert key in SUITES


def test_row_and_summary_format():
    r = Row("ybe", "o01-x", "B", "", True)
    assert r.tsv() == "ybe\to01-x\tB\t\tok"
    res = SuiteResult("ybe", scanned=2, rows=[r, Row("ybe", "o01-y", "B", "why", False)])
    assert res.matched == 2 and len(res.failures) == 1
    assert res.summary() == "ybe: 2 instances, 2 matched premises, 1 failures"


def test_empty_catalog():
    out = run_suites([], "all")
    assert all(r.scanned == 0 and r.matched == 0 for r in out.values())


def test_all_suites_order6():
    out = run_suites(catalog_upto(6).entries, "all")
    for key, res in out.items():
        assert not res.failures, key
    assert out["theoremA"].matched > 0
    assert out["lemma31"].matched > 0


def test_parallel_matches_serial():
    entries = catalog_upto(6).entries
    serial = run_suites(entries, "theoremA,ybe,axioms")
    parallel = run_suites(entries, "theoremA,ybe,axioms", jobs=2)
    for k in serial:
        assert [r.tsv() for r in serial[k].rows] == [r.tsv() for r in parallel[k].rows]
        assert serial[k].scanned == parallel[k].scanned


def test_counterexample_suite_never_fires_below_24():
    cat = BraceCatalog.from_braces(enumerate_order(8), Provenance.HOLOMORPH)
    res = run_suites(cat.entries, "counterexample")["counterexample"]
    assert res.matched > 0 and not res.failures
