"""Symmetric divisor arithmetic on the moduli space of stable n-pointed
rational curves.

The S_n-invariant Neron-Severi space is spanned by the boundary classes
B_2, ..., B_{floor(n/2)} (with the identification B_i = B_{n-i}, applied at
construction time).  For n = 6 the space is two dimensional and this module
carries the full chamber engine: stable base locus, birational model and
the canonical quotient polarization.

All coefficients are exact rationals; chamber and wall membership tests
compare coefficient pairs exactly, never through floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Mapping

__all__ = [
    "SymmetricDivisor",
    "FCurve",
    "CCurve",
    "Model",
    "BaseLocus",
    "ChamberReport",
    "boundary",
    "total_boundary",
    "canonical_divisor",
    "psi_divisor",
    "from_k_psi",
    "canonical_polarization",
    "intersect_f_curve",
    "intersect_c_curve",
    "four_part_partitions",
    "is_f_nonnegative",
    "is_effective",
    "stable_base_locus",
    "mori_model",
]


class SymmetricDivisor:
    """A symmetric divisor class in the boundary basis.

    Coefficients are indexed by i in 2..floor(n/2); any index i given in the
    unfolded range (up to n-2) is folded onto n-i, and coefficients arriving
    on both sides of a fold are added, because they name the same class.
    """

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[int, Fraction | int] | None = None):
        if n < 4:
            raise ValueError(f"need at least four marked points, got n={n}")
        self.n = n
        acc = {i: Fraction(0) for i in range(2, n // 2 + 1)}
        for i, c in (coeffs or {}).items():
            if not 2 <= i <= n - 2:
                raise ValueError(f"boundary index {i} out of range 2..{n - 2}")
            acc[min(i, n - i)] += Fraction(c)
        self.coeffs = tuple(acc[i] for i in range(2, n // 2 + 1))

    def coefficient(self, i: int) -> Fraction:
        """Coefficient of B_i, folding i onto n-i when needed."""
        if not 2 <= i <= self.n - 2:
            raise ValueError(f"boundary index {i} out of range 2..{self.n - 2}")
        return self.coeffs[min(i, self.n - i) - 2]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check_same_space(self, other: "SymmetricDivisor") -> None:
        if self.n != other.n:
            raise ValueError(f"mixed marked point counts: {self.n} vs {other.n}")

    def __add__(self, other: "SymmetricDivisor") -> "SymmetricDivisor":
        self._check_same_space(other)
        return SymmetricDivisor(
            self.n, {i + 2: a + b for i, (a, b) in enumerate(zip(self.coeffs, other.coeffs))}
        )

    def __sub__(self, other: "SymmetricDivisor") -> "SymmetricDivisor":
        return self + (-other)

    def __neg__(self) -> "SymmetricDivisor":
        return SymmetricDivisor(self.n, {i + 2: -c for i, c in enumerate(self.coeffs)})

    def __mul__(self, scalar) -> "SymmetricDivisor":
        s = Fraction(scalar)
        return SymmetricDivisor(self.n, {i + 2: s * c for i, c in enumerate(self.coeffs)})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymmetricDivisor)
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.n, self.coeffs))

    def __repr__(self) -> str:
        return f"SymmetricDivisor(n={self.n}, {self})"

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs, start=2):
            if c == 0:
                continue
            if c == 1:
                terms.append(f"B{i}")
            elif c == -1:
                terms.append(f"-B{i}")
            else:
                terms.append(f"{c}*B{i}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


def boundary(n: int, i: int) -> SymmetricDivisor:
    """The boundary class B_i."""
    return SymmetricDivisor(n, {i: 1})


def total_boundary(n: int) -> SymmetricDivisor:
    """B = sum of all B_i, i = 2..floor(n/2)."""
    return SymmetricDivisor(n, {i: 1 for i in range(2, n // 2 + 1)})


def canonical_divisor(n: int) -> SymmetricDivisor:
    """Canonical class K in the boundary basis.

    K = sum over i of (i(n-i)/(n-1) - 2) B_i.  For n = 6 this is
    -2/5 B2 - 1/5 B3.
    """
    return SymmetricDivisor(
        n, {i: Fraction(i * (n - i), n - 1) - 2 for i in range(2, n // 2 + 1)}
    )


def psi_divisor(n: int) -> SymmetricDivisor:
    """The total cotangent class psi = K + 2B."""
    return canonical_divisor(n) + 2 * total_boundary(n)


def from_k_psi(n: int, a: Fraction | int, b: Fraction | int) -> SymmetricDivisor:
    """The divisor a*K + b*psi, expressed back in the boundary basis."""
    return Fraction(a) * canonical_divisor(n) + Fraction(b) * psi_divisor(n)


def canonical_polarization() -> SymmetricDivisor:
    """Pullback of the natural quotient polarization, for n = 6.

    This is the unique symmetric class meeting F(1,1,1,3) in 1/2 and
    F(1,1,2,2) in 0; it equals -K/2 = 1/5 B2 + 1/10 B3.
    """
    return Fraction(-1, 2) * canonical_divisor(6)


@dataclass(frozen=True)
class FCurve:
    """An F-curve class, recorded by its partition sizes (a1,a2,a3,a4).

    Only the four part sizes matter against symmetric divisors; the
    partition is stored sorted ascending and must consist of positive parts.
    """

    partition: tuple[int, int, int, int]

    def __init__(self, partition):
        parts = tuple(sorted(int(p) for p in partition))
        if len(parts) != 4 or any(p < 1 for p in parts):
            raise ValueError(f"need four positive parts, got {partition}")
        object.__setattr__(self, "partition", parts)

    @property
    def n(self) -> int:
        return sum(self.partition)

    def __str__(self) -> str:
        return "F(" + ",".join(str(p) for p in self.partition) + ")"


@dataclass(frozen=True)
class CCurve:
    """The sliding-node curve family C_j: a j-pointed component with the
    attaching node of the complementary tail moving along it."""

    j: int

    def __post_init__(self):
        if self.j < 2:
            raise ValueError(f"curve index must be at least 2, got {self.j}")

    def __str__(self) -> str:
        return f"C{self.j}"


def _folded_coefficient(div: SymmetricDivisor, k: int) -> Fraction:
    # r_1 = 0 and r_k = r_{n-k}; valid for k in 1..n-1
    k = min(k, div.n - k)
    if k == 1:
        return Fraction(0)
    return div.coefficient(k)


def intersect_f_curve(div: SymmetricDivisor, curve: FCurve) -> Fraction:
    """Exact intersection number of a symmetric divisor with an F-curve.

    With D = sum r_i B_i, r_1 = 0 and r_{a+b} = r_{n-a-b}:

        F . D = -r_{a1} - r_{a2} - r_{a3} - r_{a4}
                + r_{a1+a2} + r_{a1+a3} + r_{a1+a4}
    """
    if curve.n != div.n:
        raise ValueError(f"curve partition sums to {curve.n}, divisor has n={div.n}")
    a1, a2, a3, a4 = curve.partition
    r = lambda k: _folded_coefficient(div, k)
    return -r(a1) - r(a2) - r(a3) - r(a4) + r(a1 + a2) + r(a1 + a3) + r(a1 + a4)


def intersect_c_curve(div: SymmetricDivisor, curve: CCurve) -> Fraction:
    """Exact intersection number of a symmetric divisor with C_j.

    Against the unfolded boundary, C_j . B_i is j for i = j-1, -(j-2) for
    i = j and 0 otherwise.  Because B_i = B_{n-i}, both unfolded slots of a
    class contribute (they coincide only when n = 2j or n = 2j-2 edge
    cases, handled by the dedup below).
    """
    n, j = div.n, curve.j
    if not 2 <= j <= n - 2:
        raise ValueError(f"curve index {j} out of range 2..{n - 2}")
    total = Fraction(0)
    for k in range(2, n // 2 + 1):
        weight = 0
        for i in {k, n - k}:
            if i == j - 1:
                weight += j
            if i == j:
                weight -= j - 2
        total += div.coefficient(k) * weight
    return total


def four_part_partitions(n: int) -> Iterator[tuple[int, int, int, int]]:
    """All partitions of n into four positive parts, sorted ascending."""
    for a in range(1, n // 4 + 1):
        for b in range(a, (n - a) // 3 + 1):
            for c in range(b, (n - a - b) // 2 + 1):
                d = n - a - b - c
                if d >= c:
                    yield (a, b, c, d)


def is_f_nonnegative(div: SymmetricDivisor) -> tuple[bool, list[tuple[int, int, int, int]]]:
    """Whether D meets every F-curve nonnegatively, plus the violators.

    For n = 6 this is equivalent to nefness.  For other n it is only the
    necessary direction of that equivalence, so treat a True answer as
    "F-nonnegative", not as a nefness certificate.
    """
    violations = [
        p for p in four_part_partitions(div.n) if intersect_f_curve(div, FCurve(p)) < 0
    ]
    return (not violations, violations)


def is_effective(div: SymmetricDivisor) -> bool:
    """Symmetric effectivity: every boundary coefficient is nonnegative."""
    return all(c >= 0 for c in div.coeffs)


class Model(str, Enum):
    """Birational models reachable from the six-pointed space."""

    AMPLE = "AmpleModel_M06"
    SEGRE_CUBIC = "SegreCubic"
    IGUSA_QUARTIC = "IgusaQuartic"
    POINT = "Point"
    OUTSIDE = "OutsideEffectiveCone"


class BaseLocus(str, Enum):
    EMPTY = "Empty"
    B2 = "B2"
    B3 = "B3"
    WHOLE_DIVISOR = "WholeDivisor"


@dataclass(frozen=True)
class ChamberReport:
    model: Model
    stable_base_locus: BaseLocus
    boundary_case: bool


def _chamber_data(div: SymmetricDivisor) -> ChamberReport:
    # Write D = x B2 + y B3.  The wall rays are B2 (y = 0), -K (x = 2y),
    # K + psi/3 (y = 3x) and B3 (x = 0); all comparisons are exact.
    if div.n != 6:
        raise ValueError(f"chamber decomposition is implemented for n=6, got n={div.n}")
    x, y = div.coefficient(2), div.coefficient(3)
    if x < 0 or y < 0:
        return ChamberReport(Model.OUTSIDE, BaseLocus.WHOLE_DIVISOR, False)
    if x == 0 and y == 0:
        # degenerate apex: flagged as a wall case rather than rejected
        return ChamberReport(Model.POINT, BaseLocus.EMPTY, True)
    if y == 0:
        return ChamberReport(Model.POINT, BaseLocus.B2, True)
    if x == 0:
        return ChamberReport(Model.POINT, BaseLocus.B3, True)
    if 2 * y < x:
        return ChamberReport(Model.IGUSA_QUARTIC, BaseLocus.B2, False)
    if 2 * y == x:
        return ChamberReport(Model.IGUSA_QUARTIC, BaseLocus.EMPTY, True)
    if y < 3 * x:
        return ChamberReport(Model.AMPLE, BaseLocus.EMPTY, False)
    if y == 3 * x:
        return ChamberReport(Model.SEGRE_CUBIC, BaseLocus.EMPTY, True)
    return ChamberReport(Model.SEGRE_CUBIC, BaseLocus.B3, False)


def stable_base_locus(div: SymmetricDivisor) -> BaseLocus:
    """Stable base locus of an effective symmetric divisor, n = 6.

    Empty on the closed nef cone [-K, K + psi/3], B3 on (K + psi/3, B3]
    and B2 on [B2, -K).
    """
    if not is_effective(div):
        raise ValueError("stable base locus is only defined for effective divisors")
    return _chamber_data(div).stable_base_locus


def mori_model(div: SymmetricDivisor) -> ChamberReport:
    """Chamber lookup for a symmetric divisor on the six-pointed space.

    The ample chamber is the open cone (-K, K + psi/3); [K + psi/3, B3)
    gives the Segre cubic, (B2, -K] the Igusa quartic, and the two boundary
    rays give a point.  Wall membership sets ``boundary_case``; divisors
    outside the effective quadrant are reported, not rejected.
    """
    return _chamber_data(div)
