"""Exhaustive deterministic enumeration of smooth generator sets.

The universe for a given ``alpha`` is every subset of the free part
``2..alpha-2`` adjoined to ``{0, 1, alpha-1, alpha}``, visited in
increasing bitmask order.  Parallel runs split each ``alpha`` into
contiguous mask ranges and concatenate results in order, so reports do
not depend on the worker count.
"""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .bitpoly import BitPoly, is_full
from .curve import (
    BadAlpha,
    CurveInvariants,
    GeneratorSet,
    _holes_from_chain,
    _reduction_from_chain,
    from_free_mask,
    glp_bound,
    invariants,
    power_chain,
)
from .properties import Witness, check_bounds, check_p1, check_p2, classify_families

log = logging.getLogger(__name__)

MODES = ("q-counterexample", "p1-violation", "p2-violation")
LARGE_ALPHA = 28
CHUNK = 1 << 12


class ScanTooLarge(ValueError):
    pass


def universe_size(alpha: int) -> int:
    return 1 << (alpha - 3) if alpha >= 4 else 1


def enumerate_smooth(alpha: int) -> Iterator[GeneratorSet]:
    if alpha < 2:
        raise BadAlpha(f"alpha must be >= 2, got {alpha}")
    for mask in range(universe_size(alpha)):
        yield from_free_mask(alpha, mask)


def _check_range(alpha_lo: int, alpha_hi: int, allow_large: bool) -> None:
    if not 2 <= alpha_lo <= alpha_hi:
        raise ValueError(f"need 2 <= alpha_lo <= alpha_hi, got {alpha_lo}..{alpha_hi}")
    if alpha_hi > LARGE_ALPHA and not allow_large:
        total = sum(universe_size(a) for a in range(alpha_lo, alpha_hi + 1))
        raise ScanTooLarge(
            f"alpha_hi={alpha_hi} > {LARGE_ALPHA} means {total} sets; pass allow_large to proceed"
        )


def _chunks(alpha_lo: int, alpha_hi: int) -> list[tuple[int, int, int]]:
    out = []
    for alpha in range(alpha_lo, alpha_hi + 1):
        n = universe_size(alpha)
        for lo in range(0, n, CHUNK):
            out.append((alpha, lo, min(n, lo + CHUNK)))
    return out


def _run_chunks(fn, tasks: list[tuple], workers: int) -> list:
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map preserves task order
        return list(pool.map(fn, tasks))


def default_workers() -> int:
    return os.cpu_count() or 1


def canonical(A: GeneratorSet) -> GeneratorSet:
    """The lexicographically smaller of ``A`` and its reflection."""
    B = A.reflect()
    return A if A.elements <= B.elements else B


@dataclass
class Finding:
    generator_set: GeneratorSet
    invariants: CurveInvariants
    witness: Optional[Witness]
    canonical: GeneratorSet


@dataclass
class ScanReport:
    alpha_range: tuple[int, int]
    mode: str
    total_sets: int
    findings: list[Finding]
    only_m: Optional[int] = None
    elapsed: float = 0.0


def _scan_chunk(task: tuple) -> tuple[int, list[Finding]]:
    alpha, lo, hi, mode, only_m = task
    found = []
    for mask in range(lo, hi):
        A = from_free_mask(alpha, mask)
        chain = power_chain(A)
        reg = len(chain) - 1
        if reg == 1:
            continue
        witness = None
        if mode == "q-counterexample":
            if _reduction_from_chain(A, chain) == reg:
                continue
            witness = check_p1(A, chain).witness
        elif mode == "p1-violation":
            rep = check_p1(A, chain)
            if rep.holds:
                continue
            witness = rep.witness
        else:
            rep = check_p2(A, only_m=only_m, chain=chain)
            if rep.holds:
                continue
            witness = rep.witness
        found.append(Finding(A, invariants(A), witness, canonical(A)))
    return hi - lo, found


def scan(
    alpha_lo: int,
    alpha_hi: int,
    mode: str = "q-counterexample",
    workers: int = 1,
    only_m: Optional[int] = None,
    allow_large: bool = False,
) -> ScanReport:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    _check_range(alpha_lo, alpha_hi, allow_large)
    start = time.perf_counter()
    tasks = [c + (mode, only_m) for c in _chunks(alpha_lo, alpha_hi)]
    total = 0
    findings: list[Finding] = []
    for n, found in _run_chunks(_scan_chunk, tasks, workers):
        total += n
        findings.extend(found)
    elapsed = time.perf_counter() - start
    log.info("scan %d..%d %s: %d sets, %d findings in %.2fs",
             alpha_lo, alpha_hi, mode, total, len(findings), elapsed)
    return ScanReport((alpha_lo, alpha_hi), mode, total, findings, only_m, elapsed)


# -- verification ---------------------------------------------------------

def naive_sumset(elements, m: int) -> set[int]:
    """Independent oracle: m-fold sumset via plain Python sets."""
    s = {0}
    for _ in range(m):
        s = {x + a for x in s for a in elements}
    return s


@dataclass
class VerifyReport:
    alpha_range: tuple[int, int]
    total_sets: int = 0
    counters: dict[str, list[int]] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: "VerifyReport") -> None:
        self.total_sets += other.total_sets
        for name, (p, f) in other.counters.items():
            c = self.counters.setdefault(name, [0, 0])
            c[0] += p
            c[1] += f
        self.failures.extend(other.failures)

    def record(self, A: GeneratorSet, name: str, ok: bool, detail: str = "") -> None:
        c = self.counters.setdefault(name, [0, 0])
        if ok:
            c[0] += 1
        else:
            c[1] += 1
            self.failures.append({
                "alpha": A.alpha,
                "elements": list(A.elements),
                "invariant": name,
                "detail": detail,
            })


def _verify_core(A: GeneratorSet, rep: VerifyReport) -> None:
    chain = power_chain(A)
    reg = len(chain) - 1
    r = _reduction_from_chain(A, chain)
    inv = invariants(A)

    # max hole degree + 1 == min full m, with holes searched past reg
    horizon = glp_bound(A) + 1
    f = A.poly
    p = BitPoly(1)
    top = 0
    for m in range(1, horizon + 1):
        p = p * f
        if not is_full(p):
            top = m
    rep.record(A, "coroB_cross_check", top + 1 == reg, f"max hole degree {top}, reg {reg}")

    hs = _holes_from_chain(A, chain)
    ok = True
    for m in range(1, reg):
        naive = naive_sumset(A.elements, m)
        if sum(1 for x in hs if x.degree == m) != m * A.alpha + 1 - len(naive):
            ok = False
    rep.record(A, "h1_dimension_identity", ok)

    rep.record(A, "sandwich_r_le_reg", r <= reg, f"r={r} reg={reg}")
    upper_ok = reg <= 2 * r - 2 if r >= 2 else reg == 1
    rep.record(A, "sandwich_reg_upper", upper_ok, f"r={r} reg={reg}")
    if r <= 2 or reg <= 3:
        rep.record(A, "small_cases_q", r == reg, f"r={r} reg={reg}")
    if r < reg:
        rep.record(A, "counterexample_minimality", r >= 3 and reg >= 4, f"r={r} reg={reg}")
    cm = [not hs, A.is_full(), reg == 1]
    rep.record(A, "cm_characterization", len(set(cm)) == 1, f"{cm}")

    p1 = check_p1(A, chain)
    p2 = check_p2(A, chain=chain)
    rep.record(A, "interpr_p2_implies_p1", (not p2.holds) or p1.holds)
    rep.record(A, "interpr_p1_iff_q", p1.holds == (r == reg), f"p1={p1.holds} r={r} reg={reg}")
    for name, w in (("p1", p1.witness), ("p2", p2.witness)):
        if w is not None:
            rep.record(A, f"witness_recheck_{name}", _recheck(A, name, w), f"m={w.m}")

    for b in check_bounds(A, inv).bounds:
        if b.name.startswith("computeR"):
            continue
        rep.record(A, f"bound_{b.name}", b.satisfied, f"{b.lhs} <= {b.rhs}")


def _recheck(A: GeneratorSet, prop: str, w: Witness) -> bool:
    alpha, m = A.alpha, w.m
    s = naive_sumset(A.elements, m)
    if s == set(range(m * alpha + 1)):
        return False
    if sorted(set(range(m * alpha + 1)) - s) != w.missing:
        return False
    if prop == "p1":
        shifted = s | {x + alpha for x in s}
        return shifted == set(range((m + 1) * alpha + 1))
    need = set(range(alpha + 1)) | set(range((m - 1) * alpha, m * alpha + 1))
    return need <= s


def _verify_families(A: GeneratorSet, rep: VerifyReport) -> None:
    fam = classify_families(A)
    if not (fam.komb_ii or fam.partial or fam.compute_r):
        return
    chain = power_chain(A)
    reg = len(chain) - 1
    r = _reduction_from_chain(A, chain)
    if fam.partial:
        rep.record(A, "family_partial_q", r == reg, f"r={r} reg={reg}")
    if fam.komb_ii:
        rep.record(A, "family_komb_ii_p2", check_p2(A, chain=chain).holds)
    c = fam.compute_r
    if c is not None:
        rep.record(A, "family_computeR_lower", r >= c.lower_bound, f"r={r} lower={c.lower_bound}")
        if c.exact:
            ok = r == reg == c.exact_value == c.delta + 2
            rep.record(A, "family_computeR_exact", ok,
                       f"r={r} reg={reg} predicted={c.exact_value} delta+2={c.delta + 2}")


SUITES = {"core": _verify_core, "families": _verify_families}


def _verify_chunk(task: tuple) -> VerifyReport:
    alpha, lo, hi, suites = task
    rep = VerifyReport((alpha, alpha))
    for mask in range(lo, hi):
        A = from_free_mask(alpha, mask)
        rep.total_sets += 1
        for s in suites:
            SUITES[s](A, rep)
    return rep


def verify_suite(
    alpha_lo: int,
    alpha_hi: int,
    workers: int = 1,
    suites: tuple[str, ...] = ("core", "families"),
    allow_large: bool = False,
) -> VerifyReport:
    _check_range(alpha_lo, alpha_hi, allow_large)
    for s in suites:
        if s not in SUITES:
            raise ValueError(f"unknown suite {s!r}")
    start = time.perf_counter()
    tasks = [c + (tuple(suites),) for c in _chunks(alpha_lo, alpha_hi)]
    report = VerifyReport((alpha_lo, alpha_hi))
    for part in _run_chunks(_verify_chunk, tasks, workers):
        report.merge(part)
    report.elapsed = time.perf_counter() - start
    return report
