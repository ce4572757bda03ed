import pytest

from moncurve import report
from moncurve.curve import BadAlpha, new_generator_set
from moncurve.search import (
    ScanTooLarge,
    canonical,
    enumerate_smooth,
    scan,
    universe_size,
    verify_suite,
)

import oracles


def test_enumerate_small():
    assert [A.elements for A in enumerate_smooth(5)] == [
        (0, 1, 4, 5), (0, 1, 2, 4, 5), (0, 1, 3, 4, 5), (0, 1, 2, 3, 4, 5),
    ]
    assert [A.elements for A in enumerate_smooth(2)] == [(0, 1, 2)]
    assert [A.elements for A in enumerate_smooth(3)] == [(0, 1, 2, 3)]
    assert universe_size(17) == 16384
    with pytest.raises(BadAlpha):
        list(enumerate_smooth(1))


def test_enumeration_order_and_count():
    sets = list(enumerate_smooth(9))
    assert len(sets) == 64
    assert [A.free_mask for A in sets] == list(range(64))


def test_scan_counts_and_empty():
    rep = scan(2, 12, "q-counterexample")
    assert rep.total_sets == 1 + sum(2 ** (a - 3) for a in range(3, 13))
    assert rep.findings == []


def test_scan_p1_matches_q_on_17():
    q = scan(17, 17, "q-counterexample")
    p1 = scan(17, 17, "p1-violation")
    assert [f.generator_set for f in q.findings] == [f.generator_set for f in p1.findings]
    paper = new_generator_set(17, [0, 1, 2, 5, 13, 14, 16, 17])
    assert paper in [f.generator_set for f in q.findings]
    for f in q.findings:
        assert (f.invariants.r, f.invariants.reg) == (3, 4)
        assert f.canonical == paper


def test_findings_revalidate_from_scratch():
    for f in scan(17, 17, "q-counterexample").findings:
        A = f.generator_set
        assert oracles.reduction_number(A.elements, A.alpha) < oracles.regularity(A.elements)
        s = oracles.power(A.elements, f.witness.m)
        assert sorted(set(range(f.witness.m * A.alpha + 1)) - s) == f.witness.missing


def test_findings_sorted():
    rep = scan(13, 17, "p2-violation", workers=2)
    keys = [(f.generator_set.alpha, f.generator_set.free_mask) for f in rep.findings]
    assert keys == sorted(keys)


def test_determinism_across_workers():
    a = report.dumps(report.scan_doc(scan(2, 15, "p2-violation", workers=1)))
    b = report.dumps(report.scan_doc(scan(2, 15, "p2-violation", workers=4)))
    assert a == b


def test_canonical():
    A = new_generator_set(6, [0, 1, 4, 5, 6])
    assert canonical(A) == canonical(A.reflect())
    assert canonical(A).elements <= A.elements


def test_range_errors():
    with pytest.raises(ValueError):
        scan(5, 4)
    with pytest.raises(ValueError):
        scan(2, 5, "bogus")
    with pytest.raises(ScanTooLarge):
        scan(29, 29)


def test_verify_trivial_and_17():
    rep = verify_suite(2, 2)
    assert rep.total_sets == 1 and rep.ok
    rep = verify_suite(17, 17, workers=4)
    assert rep.ok
    assert rep.counters["counterexample_minimality"] == [2, 0]
    assert rep.counters["sandwich_reg_upper"][1] == 0


def test_verify_detects_failure(monkeypatch):
    from moncurve import search

    monkeypatch.setattr(search, "_reduction_from_chain", lambda A, chain: len(chain) - 1)
    rep = verify_suite(17, 17, suites=("core",))
    assert not rep.ok
    assert {f["invariant"] for f in rep.failures} == {"interpr_p1_iff_q"}
    assert all({"alpha", "elements", "invariant", "detail"} <= set(f) for f in rep.failures)
