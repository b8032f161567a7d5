"""Recursion polynomial sequences attached to a tetradiagonal lower
Hessenberg matrix.

* type II: monic B_n, deg B_n = n, characteristic polynomials of the
  leading principal truncations (B_{N+1} = det(xI - T^[N]));
* type I: the pair A^(1)_n, A^(2)_n spanning the left null space of
  (T - xI) restricted to n+1 rows, with one free initial value nu != 0;
* second kind: B^(1), B^(2) and the nu-free b^(1) = B^(2) + nu B^(1),
  which are characteristic polynomials of trailing truncations
  (B^(1)_{N+1} = det(xI - T^[N,1]), b^(1)_{N+1} = det(xI - T^[N,2])).

All sequences satisfy four-term recurrences touching only the three bands,
so the cost is O(N) polynomial operations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .core import TetraHessenberg
from .errors import ExactArithmeticRequired, IndexOutOfRange, ZeroNu
from .poly import Poly, constant_poly, x_poly
from .scalars import is_exact, is_zero, one_like, zero_like


class PolyKind(enum.Enum):
    TYPE2 = "type2"
    TYPE1_A1 = "type1_a1"
    TYPE1_A2 = "type1_a2"
    SECOND_KIND_B1 = "second_kind_b1"
    SECOND_KIND_B2 = "second_kind_b2"
    SECOND_KIND_SMALL_B1 = "second_kind_small_b1"
    TRUNCATED_CHAR = "truncated_char"
    TRANSFORMED = "transformed"


@dataclass(frozen=True)
class PolySequence:
    """A finite run of polynomials indexed 0..N, tagged with its kind."""

    kind: PolyKind
    polys: tuple
    nu: object = None
    label: str = ""

    def __len__(self):
        return len(self.polys)

    def __getitem__(self, n) -> Poly:
        return self.polys[n]

    def __iter__(self):
        return iter(self.polys)

    def at_origin(self):
        return tuple(p.constant for p in self.polys)

    def eval_at(self, x):
        return tuple(p(x) for p in self.polys)


def eval_sequence_at(seq: PolySequence, x):
    """Values (P_0(x), ..., P_N(x))."""
    return seq.eval_at(x)


def _check_nu(t: TetraHessenberg, nu):
    if t.is_exact and not is_exact(nu):
        raise ExactArithmeticRequired("type I sequences with a float nu on an exact matrix")
    if not t.is_exact:
        nu = float(nu)
    if is_zero(nu):
        raise ZeroNu()
    return nu


def type2_sequence(t: TetraHessenberg, n: int) -> PolySequence:
    """Monic B_0 .. B_N via

        B_{k+1} = (x - c_k) B_k - b_k B_{k-1} - a_k B_{k-2}

    seeded by B_0 = 1, B_1 = x - c_0, B_2 = (x - c_1) B_1 - b_1."""
    if n < 0:
        raise ValueError("sequence length must be >= 0")
    one = one_like(t.c(0))
    x = x_poly(one)
    polys = [constant_poly(one)]
    if n >= 1:
        polys.append(x - constant_poly(t.c(0)))
    for k in range(1, n):
        new = (x - constant_poly(t.c(k))) * polys[k] - polys[k - 1].scale(t.b(k))
        if k >= 2:
            new = new - polys[k - 2].scale(t.a(k))
        polys.append(new)
    return PolySequence(PolyKind.TYPE2, tuple(polys))


def type1_sequences(t: TetraHessenberg, n: int, nu):
    """The type I pair (A^(1), A^(2)), indices 0..N.

    Seeds: A^(1)_0 = 1, A^(1)_1 = nu; A^(2)_0 = 0, A^(2)_1 = 1.  The next
    value is forced row by row by the left eigenvector relation,

        a_k A_k = -b_{k-1} A_{k-1} + (x - c_{k-2}) A_{k-2} - A_{k-3},

    (the A_{-1} term is absent for k = 2), which is why a_k > 0 matters.
    """
    if n < 0:
        raise ValueError("sequence length must be >= 0")
    nu = _check_nu(t, nu)
    one = one_like(t.c(0))
    zero = zero_like(one)
    x = x_poly(one)
    a1 = [constant_poly(one), constant_poly(nu * one)]
    a2 = [Poly(), constant_poly(one)]
    for k in range(2, n + 1):
        inv_a = one / t.a(k)
        for seq in (a1, a2):
            acc = (x - constant_poly(t.c(k - 2))) * seq[k - 2] - seq[k - 1].scale(t.b(k - 1))
            if k >= 3:
                acc = acc - seq[k - 3]
            seq.append(acc.scale(inv_a))
    return (
        PolySequence(PolyKind.TYPE1_A1, tuple(a1[: n + 1]), nu=nu),
        PolySequence(PolyKind.TYPE1_A2, tuple(a2[: n + 1]), nu=nu),
    )


def second_kind_sequences(t: TetraHessenberg, n: int, nu):
    """Second kind sequences (B^(1), B^(2), b^(1)), indices 0..N.

    All satisfy the type II recurrence extended to n >= 0 with the boundary
    coefficients b_0 = a_0 = a_1 = -1 and seeds at indices (-2, -1, 0):

        B^(1): (1, 0, 0)    B^(2): (-1 - nu, 1, 0)    b^(1): (-1, 1, 0)

    b^(1) = B^(2) + nu B^(1) is independent of nu.
    """
    if n < 0:
        raise ValueError("sequence length must be >= 0")
    nu = _check_nu(t, nu)
    one = one_like(t.c(0))
    x = x_poly(one)

    def run(seed_m2, seed_m1):
        window = [constant_poly(seed_m2), constant_poly(seed_m1), Poly()]
        out = [window[2]]
        for k in range(n):
            new = (x - constant_poly(t.c(k))) * window[2]
            if k >= 1:
                new = new - window[1].scale(t.b(k))
            else:
                new = new + window[1]  # b_0 = -1
            if k >= 2:
                new = new - window[0].scale(t.a(k))
            else:
                new = new + window[0]  # a_0 = a_1 = -1
            window = [window[1], window[2], new]
            out.append(new)
        return out

    b1 = run(one, zero_like(one))
    b2 = run(-one - nu, one)
    small = [q + p.scale(nu) for p, q in zip(b1, b2)]
    return (
        PolySequence(PolyKind.SECOND_KIND_B1, tuple(b1), nu=nu),
        PolySequence(PolyKind.SECOND_KIND_B2, tuple(b2), nu=nu),
        PolySequence(PolyKind.SECOND_KIND_SMALL_B1, tuple(small), nu=nu),
    )


def char_poly_truncation(t: TetraHessenberg, n: int, k: int) -> Poly:
    """det(xI - T^[N,k]) by banded expansion along the last row: O(N)
    polynomial operations, never materializing the dense truncation.

    Seeds D_k = 1, D_{k+1} = x - c_k; then the four-term recurrence runs on
    the bands shifted by k.  k = N gives x - c_N; k = N+1 (the empty
    truncation) gives the constant 1, honouring det(empty) = 1.
    """
    if not 0 <= k <= n + 1:
        raise IndexOutOfRange(f"char poly truncation index {k} not in [0, {n + 1}]")
    one = one_like(t.c(0))
    x = x_poly(one)
    d_prev2 = Poly()            # D_{k-1}
    d_prev = Poly()             # unused until the window fills
    d_cur = constant_poly(one)  # D_k
    for m in range(k, n + 1):
        new = (x - constant_poly(t.c(m))) * d_cur
        if m >= k + 1:
            new = new - d_prev.scale(t.b(m))
        if m >= k + 2:
            new = new - d_prev2.scale(t.a(m))
        d_prev2, d_prev, d_cur = d_prev, d_cur, new
    return d_cur
