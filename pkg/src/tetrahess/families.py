"""Jacobi-Pineiro parameter families: the two explicit six-periodic alpha
sequences factoring the same recursion matrix, region classification of
(alpha, beta), sign-structure checks, and cross-consistency of the two
parametrizations.

The weights are x^alpha (1-x)^gamma and x^beta (1-x)^gamma on [0, 1] with
alpha, beta, gamma > -1 and alpha - beta not an integer (the natural
region R).  R splits by d = alpha - beta into
R1: d > 1, R2: 0 < d < 1, R3: -1 < d < 0, R4: d < -1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .core import AlphaSequence, DenseMatrix, bands_from_alphas, tetra_from_alphas
from .errors import ConsistencyViolation, OutsideNaturalRegion, PredictionMismatch
from .factorization import lm_from_alphas


class Variant(enum.Enum):
    FIRST = "first"
    AKV = "akv"

    def __str__(self):
        return self.value


class Region(enum.Enum):
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    R4 = "R4"
    OUTSIDE = "OUTSIDE"

    def __str__(self):
        return self.value


def _is_integer(value) -> bool:
    if isinstance(value, int):
        return True
    if isinstance(value, Fraction):
        return value.denominator == 1
    return float(value).is_integer()


def jp_region(alpha, beta) -> Region:
    """Strict-inequality region of (alpha, beta); boundaries (integer
    alpha - beta) and points outside alpha, beta > -1 return OUTSIDE."""
    if not (alpha > -1 and beta > -1):
        return Region.OUTSIDE
    d = alpha - beta
    if _is_integer(d):
        return Region.OUTSIDE
    if d > 1:
        return Region.R1
    if d > 0:
        return Region.R2
    if d > -1:
        return Region.R3
    return Region.R4


@dataclass(frozen=True)
class JPParams:
    """Validated parameter triple in the natural region with gamma > -1."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self):
        a, b, g = self.alpha, self.beta, self.gamma
        if not (a > -1 and b > -1):
            raise OutsideNaturalRegion(f"alpha = {a}, beta = {b} must both exceed -1")
        if not g > -1:
            raise OutsideNaturalRegion(f"gamma = {g} must exceed -1")
        if _is_integer(a - b):
            raise OutsideNaturalRegion(f"alpha - beta = {a - b} is an integer")
        # the closed forms divide by (k + alpha + gamma) and (k + beta + gamma),
        # k >= 1; with parameters > -1 only k = 1 can vanish
        if a + g == -1 or b + g == -1:
            raise OutsideNaturalRegion(
                "alpha + gamma = -1 or beta + gamma = -1 degenerates the closed forms"
            )

    @property
    def region(self) -> Region:
        return jp_region(self.alpha, self.beta)


def _jp_value(p: JPParams, variant: Variant, j: int):
    """alpha_j (or the AKV tilde value) from the six-periodic closed forms."""
    n = (j - 1) // 6
    r = j - 6 * n
    a, b, g = p.alpha, p.beta, p.gamma
    if r == 1:
        return ((n + 1 + a) * (2 * n + 1 + a + g) * (2 * n + 1 + b + g)) / (
            (3 * n + 1 + a + g) * (3 * n + 2 + a + g) * (3 * n + 1 + b + g)
        )
    if r == 2:
        if variant is Variant.FIRST:
            return (n * (2 * n + 1 + g) * (2 * n + 1 + a + g)) / (
                (3 * n + 2 + a + g) * (3 * n + 1 + b + g) * (3 * n + 2 + b + g)
            )
        return ((n - a + b) * (2 * n + 1 + g) * (2 * n + 1 + b + g)) / (
            (3 * n + 2 + a + g) * (3 * n + 1 + b + g) * (3 * n + 2 + b + g)
        )
    if r == 3:
        if variant is Variant.FIRST:
            return ((n + 1) * (2 * n + 1 + g) * (2 * n + 2 + b + g)) / (
                (3 * n + 2 + a + g) * (3 * n + 3 + a + g) * (3 * n + 2 + b + g)
            )
        return ((n + 1 + a - b) * (2 * n + 1 + g) * (2 * n + 2 + a + g)) / (
            (3 * n + 2 + a + g) * (3 * n + 3 + a + g) * (3 * n + 2 + b + g)
        )
    if r == 4:
        return ((n + 1 + b) * (2 * n + 2 + a + g) * (2 * n + 2 + b + g)) / (
            (3 * n + 3 + a + g) * (3 * n + 2 + b + g) * (3 * n + 3 + b + g)
        )
    if r == 5:
        if variant is Variant.FIRST:
            return ((n + 1 + a - b) * (2 * n + 2 + g) * (2 * n + 2 + a + g)) / (
                (3 * n + 3 + a + g) * (3 * n + 4 + a + g) * (3 * n + 3 + b + g)
            )
        return ((n + 1) * (2 * n + 2 + g) * (2 * n + 2 + b + g)) / (
            (3 * n + 3 + a + g) * (3 * n + 4 + a + g) * (3 * n + 3 + b + g)
        )
    if variant is Variant.FIRST:
        return ((n + 1 - a + b) * (2 * n + 2 + g) * (2 * n + 3 + b + g)) / (
            (3 * n + 4 + a + g) * (3 * n + 3 + b + g) * (3 * n + 4 + b + g)
        )
    return ((n + 1) * (2 * n + 2 + g) * (2 * n + 3 + a + g)) / (
        (3 * n + 4 + a + g) * (3 * n + 3 + b + g) * (3 * n + 4 + b + g)
    )


def jp_alphas(p: JPParams, variant: Variant, count: int) -> AlphaSequence:
    """First `count` entries of the chosen parametrization, exactly."""
    if count < 1:
        raise ValueError("count must be >= 1")
    return AlphaSequence(values=tuple(_jp_value(p, variant, j) for j in range(1, count + 1)))


def jp_dense_truncation(p: JPParams, n: int):
    """(N+1) x (N+1) leading truncation of the recursion matrix, built from
    the raw band products so it exists in every region (outside the strip
    some a_n are negative and TetraHessenberg would refuse them)."""
    count = 3 * (n + 1) + 1
    alphas = jp_alphas(p, Variant.FIRST, count)
    c, b, a = bands_from_alphas(alphas)
    size = n + 1
    rows = []
    for i in range(size):
        row = [Fraction(0)] * size
        row[i] = c(i)
        if i + 1 < size:
            row[i + 1] = Fraction(1)
        if i >= 1:
            row[i - 1] = b(i)
        if i >= 2:
            row[i - 2] = a(i)
        rows.append(row)
    return DenseMatrix(rows)


# Region sign table for the first period layers; the fixed grids used for
# verification stay within |alpha - beta| < 2, where every entry's sign is
# pinned.
def _predicted_sign(j: int, variant: Variant, region: Region) -> int:
    if variant is Variant.FIRST:
        if j == 2:
            return 0
        if j == 5:
            return -1 if region is Region.R4 else 1
        if j == 6:
            return -1 if region is Region.R1 else 1
        return 1
    if j == 2:
        return -1 if region in (Region.R1, Region.R2) else 1
    if j == 3:
        return -1 if region is Region.R4 else 1
    if j == 8:
        return -1 if region is Region.R1 else 1
    return 1


@dataclass(frozen=True)
class JPSignReport:
    region: Region
    count: int
    first_signs: tuple
    akv_signs: tuple


@dataclass(frozen=True)
class JPConsistencyReport:
    count: int
    bands_compared: int
    subdiagonals_compared: int


def jp_sign_report(p: JPParams, count: int) -> JPSignReport:
    """Record the sign of every alpha_j, j <= count, for both variants and
    check each against the region sign table:

      FIRST: positive except alpha_2 = 0, alpha_5 < 0 in R4, alpha_6 < 0 in R1
      AKV:   positive except alpha_2 < 0 in R1 u R2, alpha_3 < 0 in R4,
             alpha_8 < 0 in R1

    (in particular: FIRST is TN in the strip R2 u R3, AKV is TP in R3).
    Raises PredictionMismatch on the first disagreement.
    """
    region = p.region
    if region is Region.OUTSIDE:
        raise OutsideNaturalRegion(f"({p.alpha}, {p.beta}) sits on a region boundary")
    signs = {}
    for variant in (Variant.FIRST, Variant.AKV):
        seq = jp_alphas(p, variant, count)
        out = []
        for j in range(1, count + 1):
            v = seq.at(j)
            sign = 0 if v == 0 else (1 if v > 0 else -1)
            if sign != _predicted_sign(j, variant, region):
                raise PredictionMismatch(j, str(variant), _predicted_sign(j, variant, region), v)
            out.append(sign)
        signs[variant] = tuple(out)
    return JPSignReport(
        region=region,
        count=count,
        first_signs=signs[Variant.FIRST],
        akv_signs=signs[Variant.AKV],
    )


def jp_cross_consistency(p: JPParams, count: int) -> JPConsistencyReport:
    """Both parametrizations must induce identical L-subdiagonals
    (m_k = alpha_{3k-1}+alpha_{3k}, l_k = alpha_{3k-1} alpha_{3k-3}) and
    identical Hessenberg bands, exactly."""
    first = jp_alphas(p, Variant.FIRST, count)
    akv = jp_alphas(p, Variant.AKV, count)
    depth = count // 3
    m_f, l_f = lm_from_alphas(first, depth)
    m_a, l_a = lm_from_alphas(akv, depth)
    subdiagonals = 0
    for k, (u, v) in enumerate(zip(m_f, m_a), start=1):
        if u != v:
            raise ConsistencyViolation(k, "m", u, v)
        subdiagonals += 1
    for k, (u, v) in enumerate(zip(l_f, l_a), start=2):
        if u != v:
            raise ConsistencyViolation(k, "l", u, v)
        subdiagonals += 1
    cf, bf, af = bands_from_alphas(first)
    ca, ba, aa = bands_from_alphas(akv)
    bands = 0
    for n in range((count - 1) // 3 + 1):
        if cf(n) != ca(n):
            raise ConsistencyViolation(n, "c", cf(n), ca(n))
        bands += 1
    for n in range(1, count // 3 + 1):
        if bf(n) != ba(n):
            raise ConsistencyViolation(n, "b", bf(n), ba(n))
        bands += 1
    for n in range(2, (count + 1) // 3 + 1):
        if af(n) != aa(n):
            raise ConsistencyViolation(n, "a", af(n), aa(n))
        bands += 1
    return JPConsistencyReport(count=count, bands_compared=bands, subdiagonals_compared=subdiagonals)


def jp_matrix(p: JPParams, variant: Variant = Variant.FIRST, count: int = 64):
    """The recursion matrix as a validated TetraHessenberg (only possible
    where the induced a_n stay positive, e.g. the strip R2 u R3)."""
    return tetra_from_alphas(jp_alphas(p, variant, count))


def _grid_points():
    """16 rational (alpha, beta, gamma) points, four per region R1-R4."""
    bases = (
        (Fraction(3, 2), Fraction(0)),  # R1
        (Fraction(5, 2), Fraction(1)),  # R1
        (Fraction(1, 2), Fraction(0)),  # R2
        (Fraction(3, 2), Fraction(1)),  # R2
        (Fraction(0), Fraction(1, 2)),  # R3
        (Fraction(1), Fraction(3, 2)),  # R3
        (Fraction(0), Fraction(3, 2)),  # R4
        (Fraction(1), Fraction(5, 2)),  # R4
    )
    gammas = (Fraction(0), Fraction(1, 2))
    return tuple(
        JPParams(alpha=a, beta=b, gamma=g) for (a, b) in bases for g in gammas
    )


#: Fixed, documented verification grid covering R1-R4 (|alpha - beta| < 2).
JP_VERIFICATION_GRID = _grid_points()
