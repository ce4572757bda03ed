"""Decision procedures for (P1), (P2) and (Q), bound checks and family tests.

Both properties quantify over every ``m``, but ``mA`` is full for all
``m >= reg`` and the implications are then vacuous, so scanning
``1 .. reg-1`` is complete.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .bitpoly import BitPoly, lambda_max, missing
from .curve import (
    CurveInvariants,
    GeneratorSet,
    _reduction_from_chain,
    improvement_bound,
    initial_run,
    invariants,
    power_chain,
)


@dataclass
class Witness:
    m: int
    missing: list[int]
    detail: str

    def as_dict(self) -> dict:
        return {"m": self.m, "missing": list(self.missing), "detail": self.detail}


@dataclass
class PropertyReport:
    holds: bool
    witness: Optional[Witness] = None
    scanned: tuple[int, int] = (1, 0)
    truncation: str = "m >= reg gives a full mA, so the implication is vacuous there"

    @property
    def witness_m(self) -> Optional[int]:
        return self.witness.m if self.witness else None


def _m_range(reg: int, m_max: Optional[int], only_m: Optional[int]) -> range:
    if only_m is not None:
        return range(only_m, only_m + 1) if 1 <= only_m < reg else range(0)
    hi = reg - 1 if m_max is None else min(reg - 1, m_max)
    return range(1, hi + 1)


def check_p1(A: GeneratorSet, chain: Optional[list[BitPoly]] = None) -> PropertyReport:
    """(P1): mA not full implies mA + {0, alpha} not full."""
    chain = chain or power_chain(A)
    reg = len(chain) - 1
    for m in range(1, reg):
        pm = chain[m]
        shifted = pm.mask | (pm.mask << A.alpha)
        if shifted & (shifted + 1) == 0:
            w = Witness(
                m=m,
                missing=missing(pm, m * A.alpha),
                detail=f"{m}A is not full but {m}A + {{0,{A.alpha}}} = 0..{(m + 1) * A.alpha}",
            )
            return PropertyReport(False, w, (1, reg - 1))
    return PropertyReport(True, None, (1, reg - 1))


def p2_list(alpha: int, m: int) -> list[int]:
    """The numbers ``0..alpha`` together with ``(m-1)alpha..m*alpha``."""
    return sorted(set(range(alpha + 1)) | set(range((m - 1) * alpha, m * alpha + 1)))


def check_p2(
    A: GeneratorSet,
    m_max: Optional[int] = None,
    only_m: Optional[int] = None,
    chain: Optional[list[BitPoly]] = None,
) -> PropertyReport:
    """(P2): mA not full implies mA misses a number of ``p2_list(alpha, m)``."""
    chain = chain or power_chain(A)
    reg = len(chain) - 1
    alpha = A.alpha
    ms = _m_range(reg, m_max, only_m)
    low = (1 << (alpha + 1)) - 1
    for m in ms:
        pm = chain[m].mask
        high = low << ((m - 1) * alpha)
        need = low | high
        if pm & need == need:
            w = Witness(
                m=m,
                missing=missing(chain[m], m * alpha),
                detail=(
                    f"{m}A is not full but contains 0..{alpha} "
                    f"and {(m - 1) * alpha}..{m * alpha}"
                ),
            )
            return PropertyReport(False, w, (ms.start, ms.stop - 1))
    return PropertyReport(True, None, (ms.start, ms.stop - 1) if ms else (1, 0))


def q_holds(A: GeneratorSet, chain: Optional[list[BitPoly]] = None) -> tuple[bool, int, int]:
    """Return ``(r == reg, r, reg)``."""
    chain = chain or power_chain(A)
    reg = len(chain) - 1
    r = _reduction_from_chain(A, chain)
    return r == reg, r, reg


@dataclass
class Bound:
    name: str
    lhs: int
    rhs: int

    @property
    def satisfied(self) -> bool:
        return self.lhs <= self.rhs

    def as_dict(self) -> dict:
        return {"name": self.name, "lhs": self.lhs, "rhs": self.rhs, "satisfied": self.satisfied}


@dataclass
class BoundReport:
    bounds: list[Bound] = field(default_factory=list)

    @property
    def all_satisfied(self) -> bool:
        return all(b.satisfied for b in self.bounds)

    def __getitem__(self, name: str) -> Bound:
        for b in self.bounds:
            if b.name == name:
                return b
        raise KeyError(name)

    def names(self) -> list[str]:
        return [b.name for b in self.bounds]


@dataclass
class KombMatch:
    p: int
    q: int
    l: int
    mirrored: bool


@dataclass
class ComputeRMatch:
    epsilon: int
    p1: int
    delta: int
    gamma: int
    lower_bound: int
    exact: bool
    exact_value: Optional[int]


@dataclass
class FamilyReport:
    komb_ii: Optional[KombMatch] = None
    partial: bool = False
    compute_r: Optional[ComputeRMatch] = None

    @property
    def komb_ii_member(self) -> bool:
        return self.komb_ii is not None

    @property
    def partial_member(self) -> bool:
        return self.partial

    @property
    def compute_r_member(self) -> bool:
        return self.compute_r is not None

    def as_dict(self) -> dict:
        k = self.komb_ii
        c = self.compute_r
        return {
            "komb_ii_member": k is not None,
            "komb_ii": None if k is None else {"p": k.p, "q": k.q, "l": k.l, "mirrored": k.mirrored},
            "partial_member": self.partial,
            "computeR_member": c is not None,
            "computeR": None if c is None else {
                "epsilon": c.epsilon,
                "p1": c.p1,
                "delta": c.delta,
                "gamma": c.gamma,
                "lower_bound": c.lower_bound,
                "exact": c.exact,
                "exact_value": c.exact_value,
            },
        }


def _match_komb(A: GeneratorSet) -> Optional[tuple[int, int, int]]:
    """Match ``{0..p, q_1 < ... < q_l, alpha}`` with ``p >= alpha - q_1``.

    ``p`` is taken as the full initial run, which is the most permissive choice.
    """
    if A.is_full():
        return None
    p = initial_run(A)
    rest = [a for a in A.elements if a > p and a != A.alpha]
    if not rest:
        return None
    q = rest[0]
    if p < A.alpha - q:
        return None
    return p, q, len(rest)


def classify_families(A: GeneratorSet, lam: Optional[int] = None) -> FamilyReport:
    """Syntactic hypothesis checks only; conclusions are never assumed."""
    report = FamilyReport()
    primary = _match_komb(A)
    if primary is not None:
        report.komb_ii = KombMatch(*primary, mirrored=False)
        # smooth sets always have q_l = alpha-1
        report.partial = A.elements[-2] == A.alpha - 1
    else:
        mirror = _match_komb(A.reflect())
        if mirror is not None:
            report.komb_ii = KombMatch(*mirror, mirrored=True)

    eps = initial_run(A)
    ps = [a for a in A.elements if a > eps and a not in (A.alpha - 1, A.alpha)]
    if ps and ps[0] >= eps + 2 and ps[-1] <= A.alpha - eps:
        p1 = ps[0]
        delta = (p1 - eps - 2) // eps
        gamma = (p1 - eps - 1) - delta * eps
        lower = (p1 - 2) // eps + 1
        if lam is None:
            lam = lambda_max(A.poly)
        elems = set(A.elements)
        exact = all(A.alpha - i in elems for i in range(eps + 1)) and p1 - eps - 1 == lam
        report.compute_r = ComputeRMatch(
            epsilon=eps,
            p1=p1,
            delta=delta,
            gamma=gamma,
            lower_bound=lower,
            exact=exact,
            exact_value=improvement_bound(lam, eps) if exact else None,
        )
    return report


def check_bounds(
    A: GeneratorSet,
    inv: Optional[CurveInvariants] = None,
    families: Optional[FamilyReport] = None,
) -> BoundReport:
    inv = inv or invariants(A)
    families = families or classify_families(A, inv.lambda_)
    reg, r = inv.reg, inv.r
    bounds = [
        Bound("reduction_le_reg", r, reg),
        Bound("reg_upper_from_reduction", reg, 2 * r - 2 if r >= 2 else 1),
        Bound("reg_lt_dim_times_reduction", reg, 2 * r - 1),
        Bound("improvement", reg, inv.improvement_bound),
        Bound("glp", reg, inv.glp_bound),
        Bound("eisenbud_goto", reg, inv.degree - inv.codim),
    ]
    c = families.compute_r
    if c is not None:
        bounds.append(Bound("computeR_lower", c.lower_bound, r))
        if c.exact:
            bounds.append(Bound("computeR_exact_reg", reg, c.exact_value))
            bounds.append(Bound("computeR_exact_r", c.exact_value, r))
    return BoundReport(bounds)
