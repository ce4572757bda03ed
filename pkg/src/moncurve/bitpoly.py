"""Polynomials over the Boolean semiring H = ({0,1}, or, and).

An element of H[t] is determined by its support, a finite set of
naturals.  Supports are stored as the bits of a Python ``int`` so that
union is ``|``, shifting by ``k`` is multiplication by ``t**k`` and
fullness/gap checks are word-parallel.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

# Hard ceiling on the degree of any constructed polynomial.
MAX_DEGREE = 1 << 24


class ZeroPolynomial(ValueError):
    """Raised when deg/udeg/gaps are requested for the zero polynomial."""


@dataclass(frozen=True, order=True)
class Gap:
    """Maximal run ``lo..hi`` of missing exponents between two present ones."""

    lo: int
    hi: int

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    @property
    def length(self) -> int:
        return self.hi - self.lo + 1

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.lo, self.hi + 1))


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_degree(deg: int) -> None:
    if deg > MAX_DEGREE:
        raise OverflowError(f"degree {deg} exceeds MAX_DEGREE={MAX_DEGREE}")


class BitPoly:
    """Immutable element of H[t] backed by an integer bit mask."""

    __slots__ = ("_mask",)

    def __init__(self, mask: int = 0):
        if mask < 0:
            raise ValueError("bit mask must be non-negative")
        _check_degree(mask.bit_length() - 1)
        object.__setattr__(self, "_mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError("BitPoly is immutable")

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "BitPoly":
        mask = 0
        for e in exponents:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            _check_degree(e)
            mask |= 1 << e
        return cls(mask)

    @property
    def mask(self) -> int:
        return self._mask

    def is_zero(self) -> bool:
        return self._mask == 0

    def support(self) -> list[int]:
        return list(_iter_bits(self._mask))

    def __iter__(self) -> Iterator[int]:
        return _iter_bits(self._mask)

    def __len__(self) -> int:
        return self._mask.bit_count()

    def __contains__(self, e: int) -> bool:
        return e >= 0 and (self._mask >> e) & 1 == 1

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BitPoly) and self._mask == other._mask

    def __hash__(self) -> int:
        return hash(("BitPoly", self._mask))

    def __repr__(self) -> str:
        return f"BitPoly({{{', '.join(map(str, self))}}})"

    def __add__(self, other: "BitPoly") -> "BitPoly":
        return add(self, other)

    def __mul__(self, other: "BitPoly") -> "BitPoly":
        return mul(self, other)

    def __pow__(self, m: int) -> "BitPoly":
        return pow_(self, m)

    def shift(self, k: int) -> "BitPoly":
        """Multiply by ``t**k``."""
        if self._mask:
            _check_degree(self._mask.bit_length() - 1 + k)
        return BitPoly(self._mask << k)

    @property
    def deg(self) -> int:
        return extents(self)[1]

    @property
    def udeg(self) -> int:
        return extents(self)[0]


ZERO = BitPoly(0)
ONE = BitPoly(1)


def from_exponents(exponents: Iterable[int]) -> BitPoly:
    return BitPoly.from_exponents(exponents)


def h(p: int) -> BitPoly:
    """``h_p = 1 + t + ... + t**p``."""
    if p < 0:
        raise ValueError("p must be a natural number")
    _check_degree(p)
    return BitPoly((1 << (p + 1)) - 1)


def add(f: BitPoly, g: BitPoly) -> BitPoly:
    return BitPoly(f.mask | g.mask)


def mul(f: BitPoly, g: BitPoly) -> BitPoly:
    """Semiring product; the support is the sumset of the supports."""
    if f.is_zero() or g.is_zero():
        return ZERO
    # shift-and-OR over the sparser factor
    if len(f) > len(g):
        f, g = g, f
    _check_degree(f.mask.bit_length() + g.mask.bit_length() - 2)
    big = g.mask
    acc = 0
    for e in _iter_bits(f.mask):
        acc |= big << e
    return BitPoly(acc)


def pow_(f: BitPoly, m: int) -> BitPoly:
    if m < 0:
        raise ValueError("exponent must be a natural number")
    if m == 0:
        return ONE
    if f.is_zero():
        return ZERO
    _check_degree(m * (f.mask.bit_length() - 1))
    result = f
    for _ in range(m - 1):
        result = mul(result, f)
    return result


def extents(f: BitPoly) -> tuple[int, int]:
    """Return ``(udeg f, deg f)``."""
    mask = f.mask
    if not mask:
        raise ZeroPolynomial("udeg/deg undefined for the zero polynomial")
    return (mask & -mask).bit_length() - 1, mask.bit_length() - 1


def gaps(f: BitPoly) -> list[Gap]:
    """All gaps of ``f`` in increasing order."""
    lo, hi = extents(f)
    holes = ~f.mask & ((1 << (hi + 1)) - 1)
    holes >>= lo
    holes <<= lo
    out = []
    while holes:
        start = (holes & -holes).bit_length() - 1
        # length of the run of ones starting at ``start``
        run = ~(holes >> start) & ((holes >> start) + 1)
        length = run.bit_length() - 1
        out.append(Gap(start, start + length - 1))
        holes &= ~(((1 << length) - 1) << start)
    return out


def lambda_max(f: BitPoly) -> int:
    """Length of the longest gap, 0 when there is none."""
    return max((g.length for g in gaps(f)), default=0)


def is_full(f: BitPoly) -> bool:
    """True iff the support is ``{0, ..., deg f}``."""
    mask = f.mask
    return mask != 0 and mask & (mask + 1) == 0


def missing(f: BitPoly, upto: int) -> list[int]:
    """Exponents in ``0..upto`` absent from the support."""
    holes = ~f.mask & ((1 << (upto + 1)) - 1)
    return list(_iter_bits(holes))


def format_runs(values: Iterable[int]) -> str:
    """Compact run-length form, e.g. ``6..12, 15``."""
    vals = sorted(values)
    parts = []
    i = 0
    while i < len(vals):
        j = i
        while j + 1 < len(vals) and vals[j + 1] == vals[j] + 1:
            j += 1
        parts.append(str(vals[i]) if i == j else f"{vals[i]}..{vals[j]}")
        i = j + 1
    return ", ".join(parts)


def format_support(f: BitPoly) -> str:
    """Human form of a support, e.g. ``0..51 \\ {25}``."""
    if f.is_zero():
        return "{}"
    lo, hi = extents(f)
    holes = [e for g in gaps(f) for e in g]
    base = f"{lo}..{hi}" if lo != hi else str(lo)
    if not holes:
        return base
    return f"{base} \\ {{{format_runs(holes)}}}"
