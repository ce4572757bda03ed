"""Exit criteria; each test prints one PASS/FAIL line in the terminal summary."""

import json
import random
import time

import pytest

from moncurve import bitpoly as bp
from moncurve import report
from moncurve.cli import run
from moncurve.curve import new_generator_set
from moncurve.search import scan, universe_size, verify_suite

import oracles

pytestmark = pytest.mark.acceptance

PAPER = new_generator_set(17, [0, 1, 2, 5, 13, 14, 16, 17])


@pytest.mark.criterion("1. golden counterexample r=3, reg=4 (<1s)")
def test_golden_counterexample(capsys):
    t = time.perf_counter()
    code = run(["analyze", "--set", "0,1,2,5,13,14,16,17", "--format", "json"])
    elapsed = time.perf_counter() - t
    doc = json.loads(capsys.readouterr().out)
    assert code == 0
    assert doc["invariants"]["r"] == 3
    assert doc["invariants"]["reg"] == 4
    assert elapsed < 1.0


@pytest.mark.criterion("2. golden sumset 3A and 3A+{0,17} (<1s)")
def test_golden_sumset():
    t = time.perf_counter()
    f3 = PAPER.poly ** 3
    shifted = f3 + f3.shift(17)
    elapsed = time.perf_counter() - t
    assert f3 == bp.from_exponents(set(range(52)) - {25})
    assert shifted == bp.h(68)
    assert elapsed < 1.0


@pytest.mark.criterion("3. exhaustive alpha<=16: no (Q) counterexample, no (P2) violation at m=3")
def test_exhaustive_16():
    expected = sum(universe_size(a) for a in range(2, 17))
    t = time.perf_counter()
    q = scan(2, 16, "q-counterexample", workers=1)
    p2 = scan(2, 16, "p2-violation", workers=1, only_m=3)
    single = time.perf_counter() - t
    t = time.perf_counter()
    q8 = scan(2, 16, "q-counterexample", workers=8)
    p28 = scan(2, 16, "p2-violation", workers=8, only_m=3)
    parallel = time.perf_counter() - t
    assert q.total_sets == p2.total_sets == expected
    assert q.findings == [] and p2.findings == []
    assert q8.findings == [] and p28.findings == []
    print(f"single-worker {single:.2f}s, 8 workers {parallel:.2f}s")
    assert single < 30.0
    assert parallel < 5.0


@pytest.mark.criterion("4. alpha=17 counterexamples all have (r, reg) = (3, 4) (<10s)")
def test_smallest_counterexample():
    t = time.perf_counter()
    rep = scan(17, 17, "q-counterexample", workers=1)
    elapsed = time.perf_counter() - t
    assert rep.total_sets == 2 ** 14
    assert rep.findings
    assert PAPER in [f.generator_set for f in rep.findings]
    assert all((f.invariants.r, f.invariants.reg) == (3, 4) for f in rep.findings)
    assert elapsed < 10.0


CORE_INVARIANTS = {
    "coroB_cross_check",
    "sandwich_r_le_reg",
    "sandwich_reg_upper",
    "interpr_p2_implies_p1",
    "interpr_p1_iff_q",
    "bound_improvement",
    "bound_glp",
    "bound_eisenbud_goto",
}


@pytest.mark.criterion("5. invariant suite alpha<=14, zero failures (<60s)")
def test_invariant_suite():
    t = time.perf_counter()
    rep = verify_suite(2, 14, workers=1, suites=("core",))
    elapsed = time.perf_counter() - t
    assert rep.total_sets == sum(universe_size(a) for a in range(2, 15))
    assert CORE_INVARIANTS <= set(rep.counters)
    for name in CORE_INVARIANTS:
        assert rep.counters[name][0] == rep.total_sets
    assert rep.failures == []
    assert elapsed < 60.0


@pytest.mark.criterion("6. family theorems alpha<=20, zero failures (<60s)")
def test_family_theorems():
    nine = verify_suite(9, 9, suites=("families",))
    assert nine.counters["family_computeR_exact"][0] >= 1
    from moncurve.properties import classify_families
    from moncurve.curve import invariants

    anchor = new_generator_set(9, [0, 1, 5, 8, 9])
    c = classify_families(anchor).compute_r
    inv = invariants(anchor)
    assert c.exact and c.exact_value == inv.r == inv.reg == 4

    t = time.perf_counter()
    rep = verify_suite(2, 20, workers=8, suites=("families",))
    elapsed = time.perf_counter() - t
    for name in ("family_partial_q", "family_komb_ii_p2",
                 "family_computeR_lower", "family_computeR_exact"):
        assert rep.counters[name][0] > 0
    assert rep.failures == []
    assert elapsed < 60.0


@pytest.mark.criterion("7. bitpoly properties on >= 10^4 random cases (<30s)")
def test_bitpoly_properties():
    rng = random.Random(20240617)
    cases = 12_000
    t = time.perf_counter()

    def rand_support(nonempty=False):
        k = rng.randint(1 if nonempty else 0, 20)
        return set(rng.sample(range(61), k))

    for _ in range(cases):
        a, b, c = rand_support(), rand_support(), rand_support()
        f, g, k = bp.from_exponents(a), bp.from_exponents(b), bp.from_exponents(c)
        assert f + g == g + f and f * g == g * f
        assert (f + g) + k == f + (g + k) and (f * g) * k == f * (g * k)
        assert f * (g + k) == f * g + f * k
        assert f * bp.ONE == f and f + bp.ZERO == f
        assert set((f + g).support()) == a | b
        assert set((f * g).support()) == oracles.sumset(a, b)

        a, b = rand_support(True), rand_support(True)
        f, g = bp.from_exponents(a), bp.from_exponents(b)
        p = rng.randint(0, 10)
        i = rng.randint(1, 6)
        lf, lg = bp.lambda_max(f), bp.lambda_max(g)
        assert lf == oracles.lam(a)
        assert bp.lambda_max(bp.h(p) * f) == max(0, lf - p)
        (uf, df), (ug, dg) = bp.extents(f), bp.extents(g)
        assert bp.lambda_max(f + g) <= max(lf, lg, uf - dg - 1, ug - df - 1)
        assert bp.lambda_max(f * g) <= max(lf, lg)
        assert bp.lambda_max(f ** i) <= lf
    for p in range(11):
        for i in range(11):
            assert bp.h(p) ** i == bp.h(i * p)
    elapsed = time.perf_counter() - t
    assert elapsed < 30.0


@pytest.mark.criterion("8. scan reports byte-identical for workers=1 and workers=8, alpha 2..17")
def test_determinism():
    for mode in ("q-counterexample", "p1-violation", "p2-violation"):
        one = report.dumps(report.scan_doc(scan(2, 17, mode, workers=1)))
        eight = report.dumps(report.scan_doc(scan(2, 17, mode, workers=8)))
        assert one == eight, mode
        assert report.scan_csv(scan(17, 17, mode, workers=1)) == report.scan_csv(
            scan(17, 17, mode, workers=8))
