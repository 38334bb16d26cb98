"""Monomials, tridegrees, spectrum descriptors and window enumeration.

The first page of the spectral sequence is the trigraded polynomial ring
F2[rho, tau, v_1, v_2, ...] (v-indices capped at the truncation height
for a truncated spectrum), with generator tridegrees

    |tau| = (0, 0, -1)       |rho| = (-1, 0, -1)
    |v_i| = (2^(i+1) - 2, 2^i - 1, 2^i - 1)

in (stem, filtration, weight) coordinates.  A tridegree (p, q, w) pins
the rho- and tau-exponents of any monomial living there to a = 2q - p
and b = p - q - w, so enumerating a tridegree reduces to enumerating
partitions of q into parts 2^i - 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple


class Tridegree(NamedTuple):
    """(stem, slice filtration, motivic weight) grading triple."""

    p: int
    q: int
    w: int

    def shift(self, dp: int, dq: int, dw: int) -> "Tridegree":
        return Tridegree(self.p + dp, self.q + dq, self.w + dw)

    def __str__(self) -> str:
        return f"({self.p},{self.q},{self.w})"


@dataclass(frozen=True)
class SpectrumSpec:
    """Which quotient spectrum is computed.

    `height` is the truncation height n of BP<n>/2; None means the
    untruncated BP/2.  kgl/2 is the height-1 case.
    """

    height: int | None = None

    def __post_init__(self) -> None:
        if self.height is not None and self.height < 1:
            raise ValueError(f"truncation height must be >= 1, got {self.height}")

    @classmethod
    def bp2(cls) -> "SpectrumSpec":
        return cls(None)

    @classmethod
    def bpn(cls, n: int) -> "SpectrumSpec":
        return cls(n)

    @classmethod
    def kgl2(cls) -> "SpectrumSpec":
        return cls(1)

    def allows_index(self, i: int) -> bool:
        return i >= 1 and (self.height is None or i <= self.height)

    @property
    def name(self) -> str:
        return "bp2" if self.height is None else f"bpn:{self.height}"

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Monomial:
    """rho^a tau^b times a product of v_i's, as an exponent record.

    `e` is a sparse, index-sorted tuple of (i, exponent) pairs with no
    zero entries, so equal monomials compare and hash equal.
    """

    a: int = 0
    b: int = 0
    e: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.a < 0 or self.b < 0:
            raise ValueError("negative exponent")
        last = 0
        for i, c in self.e:
            if i <= last or c <= 0:
                raise ValueError(f"malformed exponent table {self.e}")
            last = i

    @classmethod
    def make(cls, a: int = 0, b: int = 0, e: Mapping[int, int] | None = None) -> "Monomial":
        table = tuple(sorted((i, c) for i, c in (e or {}).items() if c != 0))
        return cls(a, b, table)

    @classmethod
    def unit(cls) -> "Monomial":
        return cls()

    @classmethod
    def rho(cls, n: int = 1) -> "Monomial":
        return cls(a=n)

    @classmethod
    def tau(cls, n: int = 1) -> "Monomial":
        return cls(b=n)

    @classmethod
    def v(cls, i: int, exp: int = 1) -> "Monomial":
        return cls.make(e={i: exp})

    def e_dict(self) -> dict[int, int]:
        return dict(self.e)

    def v_exp(self, i: int) -> int:
        for j, c in self.e:
            if j == i:
                return c
        return 0

    def bump_v(self, i: int) -> "Monomial":
        """Same monomial with the v_i exponent incremented."""
        d = self.e_dict()
        d[i] = d.get(i, 0) + 1
        return Monomial.make(self.a, self.b, d)

    def __str__(self) -> str:
        parts = []
        if self.a:
            parts.append("rho" + (f"^{self.a}" if self.a > 1 else ""))
        if self.b:
            parts.append("tau" + (f"^{self.b}" if self.b > 1 else ""))
        for i, c in self.e:
            parts.append(f"v{i}" + (f"^{c}" if c > 1 else ""))
        return "*".join(parts) if parts else "1"


def multiply(m1: Monomial, m2: Monomial) -> Monomial:
    """Product in the polynomial ring: exponent-wise sum."""
    d = m1.e_dict()
    for i, c in m2.e:
        d[i] = d.get(i, 0) + c
    return Monomial.make(m1.a + m2.a, m1.b + m2.b, d)


def tridegree_of(m: Monomial) -> Tridegree:
    """Sum of the generator tridegrees over the factors of m."""
    p = -m.a
    q = 0
    w = -m.a - m.b
    for i, c in m.e:
        p += c * ((1 << (i + 1)) - 2)
        q += c * ((1 << i) - 1)
        w += c * ((1 << i) - 1)
    return Tridegree(p, q, w)


@dataclass(frozen=True)
class Window:
    """A finite box of tridegrees; the filtration range is always [0, q_max]."""

    p_min: int
    p_max: int
    q_max: int
    w_min: int
    w_max: int

    def __post_init__(self) -> None:
        if self.p_min > self.p_max:
            raise ValueError(f"p_min {self.p_min} > p_max {self.p_max}")
        if self.w_min > self.w_max:
            raise ValueError(f"w_min {self.w_min} > w_max {self.w_max}")
        if self.q_max < 0:
            raise ValueError(f"q_max {self.q_max} < 0")

    def contains(self, t: Tridegree) -> bool:
        return (
            self.p_min <= t.p <= self.p_max
            and 0 <= t.q <= self.q_max
            and self.w_min <= t.w <= self.w_max
        )

    def tridegrees(self) -> Iterable[Tridegree]:
        """All cells of the box, ordered by (p, q, w)."""
        for p in range(self.p_min, self.p_max + 1):
            for q in range(self.q_max + 1):
                for w in range(self.w_min, self.w_max + 1):
                    yield Tridegree(p, q, w)

    @property
    def cell_count(self) -> int:
        return (
            (self.p_max - self.p_min + 1)
            * (self.q_max + 1)
            * (self.w_max - self.w_min + 1)
        )


@lru_cache(maxsize=None)
def _count_partitions(height: int | None, q: int) -> int:
    # Coin-style DP over parts 2^i - 1, unordered multisets.
    ways = [1] + [0] * q
    i = 1
    while True:
        part = (1 << i) - 1
        if part > q or (height is not None and i > height):
            break
        for s in range(part, q + 1):
            ways[s] += ways[s - part]
        i += 1
    return ways[q]


def partition_count(spec: SpectrumSpec, q: int) -> int:
    """Number of multisets of parts {2^i - 1 : i allowed} summing to q.

    This counts the v-monomials of slice degree q without enumerating
    them; `monomials_at` enumerates the same set independently.
    """
    if q < 0:
        raise ValueError(f"negative slice degree {q}")
    return _count_partitions(spec.height, q)


@lru_cache(maxsize=None)
def _exponent_tables(height: int | None, q: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """All sparse v-exponent tables of slice degree q, in canonical order.

    Canonical order is descending lexicographic on the dense exponent
    vector (e_1, e_2, ...), realized by recursing over indices ascending
    with the exponent tried largest-first (so v1^3 precedes v2 at q = 3).
    """
    results: list[tuple[tuple[int, int], ...]] = []
    acc: list[tuple[int, int]] = []

    def rec(i: int, remaining: int) -> None:
        if remaining == 0:
            results.append(tuple(acc))
            return
        part = (1 << i) - 1
        if part > remaining or (height is not None and i > height):
            return
        for c in range(remaining // part, -1, -1):
            if c:
                acc.append((i, c))
            rec(i + 1, remaining - c * part)
            if c:
                acc.pop()

    rec(1, q)
    return tuple(results)


def monomials_at(spec: SpectrumSpec, t: Tridegree) -> list[Monomial]:
    """All monomials of tridegree t, in the canonical order.

    The grading forces a = 2q - p and b = p - q - w; when either is
    negative, or q < 0, the cell is empty.
    """
    p, q, w = t
    if q < 0:
        return []
    a = 2 * q - p
    b = p - q - w
    if a < 0 or b < 0:
        return []
    return [Monomial(a, b, e) for e in _exponent_tables(spec.height, q)]


def e1_dim(spec: SpectrumSpec, t: Tridegree) -> int:
    """Closed-form dimension of the cell at t (no enumeration)."""
    p, q, w = t
    if q < 0 or 2 * q - p < 0 or p - q - w < 0:
        return 0
    return partition_count(spec, q)


def enumerate_window(
    spec: SpectrumSpec, win: Window
) -> dict[Tridegree, list[Monomial]]:
    """Monomials for every tridegree of the box; empty cells are omitted."""
    out: dict[Tridegree, list[Monomial]] = {}
    for t in win.tridegrees():
        ms = monomials_at(spec, t)
        if ms:
            out[t] = ms
    return out


def parse_spectrum(name: str) -> SpectrumSpec:
    """Parse a spectrum name: ``bp2``, ``bpn:<n>`` or ``kgl2``."""
    s = name.strip().lower()
    if s == "bp2":
        return SpectrumSpec.bp2()
    if s == "kgl2":
        return SpectrumSpec.kgl2()
    if s.startswith("bpn:"):
        try:
            n = int(s[4:])
        except ValueError:
            raise ValueError(f"malformed spectrum name {name!r}") from None
        return SpectrumSpec.bpn(n)
    raise ValueError(f"unknown spectrum name {name!r}")
