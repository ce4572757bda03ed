"""Smooth monomial curves encoded by their first-coordinate exponent set.

A smooth monomial curve of degree ``alpha`` is given by a set ``A`` with
``{0, 1, alpha-1, alpha} <= A <= {0..alpha}``; the generator
``(alpha - a, a)`` of the semigroup ``S`` in N^2 is recorded by its first
entry.  Sums of ``m`` generators then correspond to the sumset ``mA``,
i.e. the support of ``f_A ** m`` in H[t].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .bitpoly import BitPoly, gaps, h, is_full, lambda_max, missing, mul


class CurveError(ValueError):
    """Invalid generator set."""


class BadAlpha(CurveError):
    pass


class OutOfRange(CurveError):
    pass


class NotSmooth(CurveError):
    pass


class InternalInconsistency(RuntimeError):
    """A proven relation between invariants failed; indicates a bug."""


@dataclass(frozen=True)
class GeneratorSet:
    alpha: int
    elements: tuple[int, ...]

    def __post_init__(self):
        if self.alpha < 2:
            raise BadAlpha(f"alpha must be >= 2, got {self.alpha}")
        elems = tuple(sorted(set(self.elements)))
        bad = [e for e in elems if e < 0 or e > self.alpha]
        if bad:
            raise OutOfRange(f"elements {bad} outside 0..{self.alpha}")
        need = {0, 1, self.alpha - 1, self.alpha}
        if not need <= set(elems):
            absent = sorted(need - set(elems))
            raise NotSmooth(f"smooth curves need 0, 1, alpha-1, alpha; missing {absent}")
        object.__setattr__(self, "elements", elems)

    @property
    def codim(self) -> int:
        return len(self.elements) - 2

    @property
    def poly(self) -> BitPoly:
        """The indicator polynomial ``f_A``."""
        return BitPoly.from_exponents(self.elements)

    @property
    def free_mask(self) -> int:
        """Bit ``i-2`` is set iff ``i`` is in A, for the free part ``2..alpha-2``."""
        mask = 0
        for e in self.elements:
            if 2 <= e <= self.alpha - 2:
                mask |= 1 << (e - 2)
        return mask

    def is_full(self) -> bool:
        return len(self.elements) == self.alpha + 1

    def reflect(self) -> "GeneratorSet":
        """The mirror set ``{alpha - a}``, i.e. swapping the two coordinates."""
        return GeneratorSet(self.alpha, tuple(self.alpha - a for a in self.elements))

    def pairs(self) -> list[tuple[int, int]]:
        return [(a, self.alpha - a) for a in self.elements]

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.elements)) + "}"


def new_generator_set(alpha: int, elements: Iterable[int]) -> GeneratorSet:
    return GeneratorSet(alpha, tuple(elements))


def from_free_mask(alpha: int, mask: int) -> GeneratorSet:
    elems = {0, 1, alpha - 1, alpha}
    elems.update(i + 2 for i in range(max(alpha - 3, 0)) if mask >> i & 1)
    return GeneratorSet(alpha, tuple(elems))


def from_pairs(pairs: Iterable[tuple[int, int]]) -> GeneratorSet:
    """Build from the raw N^2 generator list; every pair must sum to alpha."""
    pairs = list(pairs)
    if not pairs:
        raise CurveError("empty generator list")
    alpha = pairs[0][0] + pairs[0][1]
    for u1, u2 in pairs:
        if u1 < 0 or u2 < 0:
            raise OutOfRange(f"negative coordinate in {(u1, u2)}")
        if u1 + u2 != alpha:
            raise CurveError(f"pair {(u1, u2)} does not sum to alpha={alpha}")
    return GeneratorSet(alpha, tuple(u1 for u1, _ in pairs))


@dataclass(frozen=True)
class Hole:
    """Lattice point ``(u1, degree*alpha - u1)`` of the normalization not in S."""

    u1: int
    degree: int

    def point(self, alpha: int) -> tuple[int, int]:
        return self.u1, self.degree * alpha - self.u1


@dataclass
class CohomologyTable:
    h1: dict[int, int] = field(default_factory=dict)
    h2: dict[int, int] = field(default_factory=dict)


@dataclass(frozen=True)
class CurveInvariants:
    reg: int
    r: int
    epsilon: int
    lambda_: int
    degree: int
    codim: int
    glp_bound: int
    improvement_bound: int

    def as_dict(self) -> dict:
        return {
            "reg": self.reg,
            "r": self.r,
            "epsilon": self.epsilon,
            "lambda": self.lambda_,
            "degree": self.degree,
            "codim": self.codim,
            "glp_bound": self.glp_bound,
            "improvement_bound": self.improvement_bound,
        }


def power_support(A: GeneratorSet, m: int) -> BitPoly:
    """The sumset ``mA`` as a polynomial."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return A.poly ** m


def glp_bound(A: GeneratorSet) -> int:
    return sum(g.length for g in gaps(A.poly)) + 1


def power_chain(A: GeneratorSet) -> list[BitPoly]:
    """``[f^0, f^1, ..., f^reg]``; the last entry is the first full power."""
    f = A.poly
    cap = glp_bound(A)
    chain = [BitPoly(1), f]
    while not is_full(chain[-1]):
        if len(chain) - 1 >= cap:
            raise InternalInconsistency(
                f"{A} (alpha={A.alpha}): no full power up to GLP bound {cap}"
            )
        chain.append(mul(chain[-1], f))
    return chain


def regularity(A: GeneratorSet) -> int:
    """Least ``m >= 1`` with ``mA`` full."""
    return len(power_chain(A)) - 1


def _reduction_from_chain(A: GeneratorSet, chain: list[BitPoly]) -> int:
    reg = len(chain) - 1
    f = A.poly
    r = 1
    prev = chain[1]
    while True:
        nxt = chain[r + 1] if r + 1 < len(chain) else mul(prev, f)
        if nxt.mask == prev.mask | (prev.mask << A.alpha):
            return r
        r += 1
        if r > reg:
            raise InternalInconsistency(f"{A}: reduction number exceeds reg={reg}")
        prev = nxt


def reduction_number(A: GeneratorSet) -> int:
    """Least ``r >= 1`` with ``(r+1)A = {0, alpha} + rA``."""
    return _reduction_from_chain(A, power_chain(A))


def epsilon(A: GeneratorSet) -> int:
    """Largest ``i`` with ``0..i`` and ``alpha-i..alpha`` all in A."""
    elems = set(A.elements)
    i = 0
    while i + 1 <= A.alpha and (i + 1) in elems and (A.alpha - i - 1) in elems:
        i += 1
    return i


def initial_run(A: GeneratorSet) -> int:
    """Largest ``p`` with ``0..p`` in A."""
    elems = set(A.elements)
    p = 0
    while p + 1 in elems:
        p += 1
    return p


def _holes_from_chain(A: GeneratorSet, chain: list[BitPoly]) -> list[Hole]:
    out = []
    for m in range(1, len(chain) - 1):
        out.extend(Hole(u1, m) for u1 in missing(chain[m], m * A.alpha))
    return out


def holes(A: GeneratorSet) -> list[Hole]:
    """Elements of the normalization minus S, sorted by (degree, u1)."""
    return _holes_from_chain(A, power_chain(A))


def cohomology_dims(A: GeneratorSet, h2_cutoff: int = 3) -> CohomologyTable:
    """Graded dimensions of H^1 and H^2 (the latter in degrees -1..-h2_cutoff)."""
    if h2_cutoff < 1:
        raise ValueError("h2_cutoff must be >= 1")
    chain = power_chain(A)
    table = CohomologyTable()
    for m in range(1, len(chain) - 1):
        table.h1[m] = m * A.alpha + 1 - len(chain[m])
    for m in range(1, h2_cutoff + 1):
        table.h2[-m] = m * A.alpha - 1
    return table


def improvement_bound(lam: int, eps: int) -> int:
    return (lam - 1) // eps + 2 if lam >= 1 else 1


def invariants(A: GeneratorSet) -> CurveInvariants:
    chain = power_chain(A)
    reg = len(chain) - 1
    r = _reduction_from_chain(A, chain)
    eps = epsilon(A)
    lam = lambda_max(A.poly)
    return CurveInvariants(
        reg=reg,
        r=r,
        epsilon=eps,
        lambda_=lam,
        degree=A.alpha,
        codim=A.codim,
        glp_bound=glp_bound(A),
        improvement_bound=improvement_bound(lam, eps),
    )


def full_set(alpha: int) -> GeneratorSet:
    return GeneratorSet(alpha, tuple(h(alpha)))
