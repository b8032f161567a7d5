"""Gauss-Borel (LU) data of leading principal truncations and the refinement
into three positive bidiagonal factors.

The LU factorization of T^[N] exists iff every leading principal minor
delta^[n] is nonzero; these minors satisfy the four-term recurrence

    delta^[n] = c_n delta^[n-1] - b_n delta^[n-2] + a_n delta^[n-3]

with delta^[-1] = 1 and delta^[-2] = delta^[-3] = 0 (so a_1, b_0 never
enter).  The refinement T^[N] = L1 L2 U is parametrized by one free value
alpha_2; everything else is forced:

    alpha_{3n+1} = delta^[n] / delta^[n-1]          (diagonal of U)
    alpha_2 + alpha_3 = m_1,   alpha_{3n+2} alpha_{3n} = l_{n+1},
    alpha_{3n+2} + alpha_{3n+3} = m_{n+1}

where m_n, l_n are the two subdiagonals of the unit lower factor L.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import AlphaSequence, Classification, DenseMatrix, TetraHessenberg
from .errors import ExactArithmeticRequired, SingularLeadingMinor, ZeroAlpha3n
from .scalars import is_exact, is_zero, one_like, zero_like


@dataclass(frozen=True)
class GaussBorelFactors:
    """LU data of one truncation T^[N].

    delta  -- (delta^[0], ..., delta^[N]); delta^[-1] = 1 is implicit
    m      -- first subdiagonal of L, (m_1, ..., m_N)
    ell    -- second subdiagonal of L, (l_2, ..., l_N)
    u_diag -- diagonal of U, (alpha_1, alpha_4, ..., alpha_{3N+1})
    """

    delta: tuple
    m: tuple
    ell: tuple
    u_diag: tuple

    @property
    def order(self) -> int:
        return len(self.delta) - 1

    def lower_matrix(self) -> DenseMatrix:
        n = self.order
        one = one_like(self.delta[0])
        zero = zero_like(one)
        rows = []
        for i in range(n + 1):
            row = [zero] * (n + 1)
            row[i] = one
            if i >= 1:
                row[i - 1] = self.m[i - 1]
            if i >= 2:
                row[i - 2] = self.ell[i - 2]
            rows.append(row)
        return DenseMatrix(rows)

    def upper_matrix(self) -> DenseMatrix:
        n = self.order
        zero = zero_like(self.delta[0])
        one = one_like(zero)
        rows = []
        for i in range(n + 1):
            row = [zero] * (n + 1)
            row[i] = self.u_diag[i]
            if i + 1 <= n:
                row[i + 1] = one
            rows.append(row)
        return DenseMatrix(rows)


def gauss_borel(t: TetraHessenberg, n: int) -> GaussBorelFactors:
    """LU data of T^[N]; raises SingularLeadingMinor at the first vanishing
    delta^[n] (float mode treats |delta| < tol * scale as vanishing)."""
    if n < 0:
        raise ValueError("truncation order must be >= 0")
    one = one_like(t.c(0))
    deltas = [one]  # deltas[i] = delta^[i-1]
    for k in range(n + 1):
        term_c = t.c(k) * deltas[k]
        term_b = t.b(k) * deltas[k - 1] if k >= 1 else zero_like(one)
        term_a = t.a(k) * deltas[k - 2] if k >= 2 else zero_like(one)
        value = term_c - term_b + term_a
        if is_zero(value, scale=abs(term_c) + abs(term_b) + abs(term_a)):
            raise SingularLeadingMinor(k)
        deltas.append(value)
    u_diag = tuple(deltas[k + 1] / deltas[k] for k in range(n + 1))
    m = tuple(t.c(k) - u_diag[k] for k in range(1, n + 1))
    ell = tuple(t.a(k) * deltas[k - 2] / deltas[k - 1] for k in range(2, n + 1))
    return GaussBorelFactors(delta=tuple(deltas[1:]), m=m, ell=ell, u_diag=u_diag)


def bidiagonal_factor(t: TetraHessenberg, n: int, alpha2) -> AlphaSequence:
    """Refine the LU data of T^[N] into alpha_1 .. alpha_{3N+1} given the
    free parameter alpha_2.

    Raises ZeroAlpha3n(k) when alpha_{3k} = 0 makes the division for
    alpha_{3k+2} impossible (k = 1 .. N-1; a zero alpha_{3N} is harmless
    because nothing is divided by it)."""
    if t.is_exact and not is_exact(alpha2):
        raise ExactArithmeticRequired("bidiagonal_factor with a float alpha2 on an exact matrix")
    if not t.is_exact:
        alpha2 = float(alpha2)
    gb = gauss_borel(t, n)
    alpha = [None] * (3 * n + 2)  # 1-based
    for k in range(n + 1):
        alpha[3 * k + 1] = gb.u_diag[k]
    if n >= 1:
        alpha[2] = alpha2
        alpha[3] = gb.m[0] - alpha2
        for k in range(1, n):
            if is_zero(alpha[3 * k], scale=abs(gb.m[k - 1])):
                raise ZeroAlpha3n(k)
            alpha[3 * k + 2] = gb.ell[k - 1] / alpha[3 * k]
            alpha[3 * k + 3] = gb.m[k] - alpha[3 * k + 2]
    return AlphaSequence(values=alpha[1:])


def is_pbf(alphas: AlphaSequence, count=None, start=1) -> Classification:
    """Classify an alpha prefix: PBF (all > 0), TN (>= 0 with a zero), or
    INDEFINITE (some entry < 0)."""
    return alphas.classify(count=count, start=start)


def lm_from_alphas(alphas: AlphaSequence, n: int):
    """The L-subdiagonals induced by an alpha sequence:
    m_k = alpha_{3k-1} + alpha_{3k} (k = 1..N) and
    l_k = alpha_{3k-1} alpha_{3k-3} (k = 2..N).

    Any two alpha sequences factoring the same matrix agree on these."""
    m = tuple(alphas.at(3 * k - 1) + alphas.at(3 * k) for k in range(1, n + 1))
    ell = tuple(alphas.at(3 * k - 1) * alphas.at(3 * k - 3) for k in range(2, n + 1))
    return m, ell
