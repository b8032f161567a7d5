"""Darboux transformations of a factored matrix and everything built on
them: transformed polynomial families, reconstruction of the alphas from
polynomial values at the origin, the Christoffel-correspondence identity
checks, and the vector-convergent sign inequalities.

With T = L1 L2 U, the two Darboux transforms are the cyclic reorderings

    hat T = L2 U L1        hathat T = U L1 L2

which are again tetradiagonal lower Hessenberg with unit superdiagonal.
Throughout this module the free type I constant is forced to nu = -1/alpha_2
(the divisibility results underlying every transformed type I family need
1 + nu alpha_2 = 0), and all operations require exact scalars: they hinge
on polynomials being exactly divisible by x.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    AlphaSequence,
    Band,
    Classification,
    TetraHessenberg,
    alpha_factor_matrices,
    leading_principal,
)
from .errors import (
    ExactArithmeticRequired,
    IdentityViolation,
    InexactDivision,
    SignViolation,
    SingularQuasiDetSystem,
    TetraError,
    ZeroAlphaTwo,
    ZeroAtOrigin,
    ZeroNu,
)
from .polynomials import (
    PolyKind,
    PolySequence,
    char_poly_truncation,
    second_kind_sequences,
    type1_sequences,
    type2_sequence,
)
from .scalars import is_zero


@dataclass(frozen=True)
class DarbouxPair:
    """The two transformed matrices together with the alphas producing them."""

    hat: TetraHessenberg
    hathat: TetraHessenberg
    source_alphas: AlphaSequence


@dataclass(frozen=True)
class TransformedPolys:
    """Transformed polynomial families; type II parts may be absent when only
    the type I transform was requested."""

    nu: object
    tildeB: PolySequence = None
    tildetildeB: PolySequence = None
    hatA1: PolySequence = None
    tildeA2: PolySequence = None
    tildetildeA1: PolySequence = None
    tildetildeA2: PolySequence = None


@dataclass(frozen=True)
class ChristoffelReport:
    n_max: int
    identities: tuple
    checked: int


@dataclass(frozen=True)
class AkvReport:
    n_max: int
    xs: tuple
    checked: int
    max_value: object
    max_location: tuple  # (det_id, n, x)
    zeros_at_origin: int


def _require_exact(t, op):
    if not t.is_exact:
        raise ExactArithmeticRequired(op)


def _forced_nu(alphas: AlphaSequence):
    alpha2 = alphas.at(2)
    if is_zero(alpha2):
        raise ZeroAlphaTwo()
    return -1 / alpha2


def darboux_transforms(alphas: AlphaSequence) -> DarbouxPair:
    """Both Darboux transforms, built from the closed-form band products

        hat:    c_n = a_{3n+2}+a_{3n+1}+a_{3n}   (writing a for alpha)
                b_n = a_{3n}a_{3n-1}+a_{3n+1}a_{3n-1}+a_{3n}a_{3n-2}
                a_n = a_{3n}a_{3n-2}a_{3n-4}
        hathat: the same pattern shifted one more alpha up.

    Positivity of the transformed lowest bands is enforced exactly as for
    any other TetraHessenberg (guaranteed when the alphas are PBF).
    """
    at = alphas.at

    def c_hat(n):
        return at(3 * n + 2) + at(3 * n + 1) + at(3 * n)

    def b_hat(n):
        return (
            at(3 * n) * at(3 * n - 1)
            + at(3 * n + 1) * at(3 * n - 1)
            + at(3 * n) * at(3 * n - 2)
        )

    def a_hat(n):
        return at(3 * n) * at(3 * n - 2) * at(3 * n - 4)

    def c_hathat(n):
        return at(3 * n + 3) + at(3 * n + 2) + at(3 * n + 1)

    def b_hathat(n):
        return (
            at(3 * n + 1) * at(3 * n)
            + at(3 * n + 2) * at(3 * n)
            + at(3 * n + 1) * at(3 * n - 1)
        )

    def a_hathat(n):
        return at(3 * n + 1) * at(3 * n - 1) * at(3 * n - 3)

    k = alphas.length

    def build(c, b, a, c_need, b_need, a_need):
        if k is None:
            limits = (None, None, None)
        else:
            limits = ((k - c_need) // 3, (k - b_need) // 3, (k - a_need) // 3)
        t = TetraHessenberg(
            Band("a", 2, func=a, limit=limits[2]),
            Band("b", 1, func=b, limit=limits[1]),
            Band("c", 0, func=c, limit=limits[0]),
        )
        if limits[2] is not None:
            for n in range(2, limits[2] + 1):
                t.a(n)  # NonPositiveSubSubDiagonal unless PBF-compatible
        return t

    hat = build(c_hat, b_hat, a_hat, 2, 1, 0)
    hathat = build(c_hathat, b_hathat, a_hathat, 3, 2, 1)
    return DarbouxPair(hat=hat, hathat=hathat, source_alphas=alphas)


def truncation_mismatch(alphas: AlphaSequence, n: int, which: str) -> dict:
    """Diagnostic comparing leading_principal of a Darboux transform with
    the dense product of truncated factors in the corresponding order.

    Returns {(i, j): (band_value, product_value)} for differing entries.
    A truncated product loses boundary terms: the hat case differs exactly
    at (N, N) by alpha_{3N+2}; the hathat case at (N, N) by
    alpha_{3N+2} + alpha_{3N+3} and at (N, N-1) by alpha_{3N+2} alpha_{3N}.
    """
    if which not in ("hat", "hathat"):
        raise ValueError(f"unknown transform {which!r}")
    pair = darboux_transforms(alphas)
    l1, l2, u = alpha_factor_matrices(alphas, n)
    if which == "hat":
        product = l2.mul(u).mul(l1)
        truncated = leading_principal(pair.hat, n)
    else:
        product = u.mul(l1).mul(l2)
        truncated = leading_principal(pair.hathat, n)
    out = {}
    for i in range(n + 1):
        for j in range(n + 1):
            bv = truncated.entry(i, j)
            pv = product.entry(i, j)
            if bv != pv:
                out[(i, j)] = (bv, pv)
    return out


def transformed_type2(t: TetraHessenberg, alphas: AlphaSequence, n: int):
    """The transformed type II sequences (tildeB, tildetildeB), indices 0..N:

        x tildeB_k     = B_{k+1} + (a_{3k+1}+a_{3k}) B_k + a_{3k} a_{3k-2} B_{k-1}
        x tildetildeB_k = B_{k+1} + a_{3k+1} B_k

    The division by x is asserted by checking the constant term vanishes,
    which fails (InexactDivision) whenever alphas do not factor T.
    """
    _require_exact(t, "transformed_type2")
    if n < 1:
        raise ValueError("transformed sequences need N >= 1")
    b = type2_sequence(t, n + 1)
    at = alphas.at
    tilde = []
    tildetilde = []
    for k in range(n + 1):
        bracket = b[k + 1] + b[k].scale(at(3 * k + 1) + at(3 * k))
        if k >= 1:
            bracket = bracket + b[k - 1].scale(at(3 * k) * at(3 * k - 2))
        tilde.append(bracket.exact_div_x(context=f"tildeB_{k}"))
        tildetilde.append(
            (b[k + 1] + b[k].scale(at(3 * k + 1))).exact_div_x(context=f"tildetildeB_{k}")
        )
    return (
        PolySequence(PolyKind.TRANSFORMED, tuple(tilde), label="tildeB"),
        PolySequence(PolyKind.TRANSFORMED, tuple(tildetilde), label="tildetildeB"),
    )


def transformed_char_polys(pair: DarbouxPair, n: int, k: int, nu):
    """Characteristic polynomials of trailing truncations of the hat matrix:
    (tildeB^[k]_{N+1}, tildeB^(1)_{N+1}, tildeB^(2)_{N+1}) where

        tildeB^(1)_{N+1} = tildeB^[1]_{N+1}
        tildeB^(2)_{N+1} = tildeB^[2]_{N+1} - nu tildeB^[1]_{N+1}.
    """
    if is_zero(nu):
        raise ZeroNu()
    main = char_poly_truncation(pair.hat, n, k)
    first = char_poly_truncation(pair.hat, n, 1)
    second = char_poly_truncation(pair.hat, n, 2) - first.scale(nu)
    return main, first, second


def transformed_type1(t: TetraHessenberg, alphas: AlphaSequence, n: int) -> TransformedPolys:
    """Transformed type I sequences, indices 0..N, with nu forced to
    -1/alpha_2.  Writing a for alpha:

        hatA1_k        = A2_k + a_{3k+2} A2_{k+1}            (no division)
        x tildeA2_k    = A1_k + a_{3k+2} A1_{k+1}
        x tildetildeA1_k = A1_k + (a_{3k+2}+a_{3k+3}) A1_{k+1}
                                + a_{3k+5} a_{3k+3} A1_{k+2}
        tildetildeA2_k   = the same combination of A2.

    Requires alphas materializable to index 3N+5 and the matrix bands to
    a_{N+2} (the A sequences run to index N+2).
    """
    _require_exact(t, "transformed_type1")
    nu = _forced_nu(alphas)
    a1, a2 = type1_sequences(t, n + 2, nu)
    at = alphas.at
    hat_a1 = []
    tilde_a2 = []
    tt_a1 = []
    tt_a2 = []
    for k in range(n + 1):
        w = at(3 * k + 2)
        hat_a1.append(a2[k] + a2[k + 1].scale(w))
        tilde_a2.append((a1[k] + a1[k + 1].scale(w)).exact_div_x(context=f"tildeA2_{k}"))
        s = at(3 * k + 2) + at(3 * k + 3)
        p = at(3 * k + 5) * at(3 * k + 3)
        tt_a1.append(
            (a1[k] + a1[k + 1].scale(s) + a1[k + 2].scale(p)).exact_div_x(
                context=f"tildetildeA1_{k}"
            )
        )
        tt_a2.append(
            (a2[k] + a2[k + 1].scale(s) + a2[k + 2].scale(p)).exact_div_x(
                context=f"tildetildeA2_{k}"
            )
        )

    def seq(polys, label):
        return PolySequence(PolyKind.TRANSFORMED, tuple(polys), nu=nu, label=label)

    return TransformedPolys(
        nu=nu,
        hatA1=seq(hat_a1, "hatA1"),
        tildeA2=seq(tilde_a2, "tildeA2"),
        tildetildeA1=seq(tt_a1, "tildetildeA1"),
        tildetildeA2=seq(tt_a2, "tildetildeA2"),
    )


def darboux_polynomials(t: TetraHessenberg, alphas: AlphaSequence, n: int) -> TransformedPolys:
    """All six transformed sequences in one TransformedPolys."""
    tilde_b, tildetilde_b = transformed_type2(t, alphas, n)
    tp = transformed_type1(t, alphas, n)
    return TransformedPolys(
        nu=tp.nu,
        tildeB=tilde_b,
        tildetildeB=tildetilde_b,
        hatA1=tp.hatA1,
        tildeA2=tp.tildeA2,
        tildetildeA1=tp.tildetildeA1,
        tildetildeA2=tp.tildetildeA2,
    )


def alphas_from_polynomials(t: TetraHessenberg, n: int, alpha2) -> AlphaSequence:
    """Reconstruct alpha_1 .. alpha_{3N+1} from polynomial values at the
    origin, given the free parameter alpha_2 != 0:

        alpha_{3k+1} = -B_{k+1}(0) / B_k(0)
        alpha_{3k+2} = -A1_k(0) / A1_{k+1}(0)        (nu = -1/alpha_2)
        [alpha_{3k+2}+alpha_{3k+3}, alpha_{3k+5} alpha_{3k+3}]
                     = -[A1_k(0), A2_k(0)] M_k^{-1}

    with M_k the 2x2 matrix of (A1, A2) values at 0 at indices k+1, k+2;
    the third strand is alpha_{3k+3} = (first component) - alpha_{3k+2}.
    Needs the matrix bands up to a_{N+1}.
    """
    _require_exact(t, "alphas_from_polynomials")
    if is_zero(alpha2):
        raise ZeroAlphaTwo()
    nu = -1 / alpha2
    b = type2_sequence(t, n + 1)
    a1, a2 = type1_sequences(t, n + 1, nu)
    b0 = [p.constant for p in b]
    a10 = [p.constant for p in a1]
    a20 = [p.constant for p in a2]
    alpha = [None] * (3 * n + 2)  # 1-based
    for k in range(n + 1):
        if b0[k] == 0:
            raise ZeroAtOrigin(k, "B")
        alpha[3 * k + 1] = -b0[k + 1] / b0[k]
    for k in range(n):
        if a10[k + 1] == 0:
            raise ZeroAtOrigin(k + 1, "A1")
        alpha[3 * k + 2] = -a10[k] / a10[k + 1]
    for k in range(n):
        det = a10[k + 1] * a20[k + 2] - a20[k + 1] * a10[k + 2]
        if det == 0:
            raise SingularQuasiDetSystem(k)
        # first component of -[A1_k(0), A2_k(0)] M^{-1}
        total = -(a10[k] * a20[k + 2] - a20[k] * a10[k + 2]) / det
        alpha[3 * k + 3] = total - alpha[3 * k + 2]
    return AlphaSequence(values=alpha[1:])


def _check_pbf(alphas: AlphaSequence, count: int, op: str):
    needed = count if alphas.length is None else min(count, alphas.length)
    if alphas.classify(count=needed) is not Classification.PBF:
        raise TetraError(f"{op} requires a PBF alpha sequence (positive entries)")


def verify_christoffel(t: TetraHessenberg, alphas: AlphaSequence, n: int) -> ChristoffelReport:
    """Check the Christoffel-correspondence identities, exactly, for all
    k <= N.  The transformed sequences computed from the alphas must equal
    their expressions in terms of values at the origin:

      tilde_b:       x tildeB_k = B_{k+1}
                       + (A1_{k-1}(0)/A1_k(0) + c_k) B_k
                       - (A1_{k+1}(0)/A1_k(0)) a_{k+1} B_{k-1}
      tildetilde_b:  x tildetildeB_k = B_{k+1} - (B_{k+1}(0)/B_k(0)) B_k
      hat_a1:        hatA1_k = A2_k - (A1_k(0)/A1_{k+1}(0)) A2_{k+1}
      tilde_a2:      x tildeA2_k = A1_k - (A1_k(0)/A1_{k+1}(0)) A1_{k+1}
      tildetilde_a1 / tildetilde_a2:
                     x tildetildeA{a}_k = A{a}_k - s1 A{a}_{k+1} - s2 A{a}_{k+2}
                     with [s1, s2] = [A1_k(0), A2_k(0)] M_k^{-1}.

    Raises IdentityViolation at the first failure, in (k, identity) order.
    """
    _require_exact(t, "verify_christoffel")
    _check_pbf(alphas, 3 * n + 5, "verify_christoffel")
    b = type2_sequence(t, n + 1)
    try:
        polys = darboux_polynomials(t, alphas, n)
    except InexactDivision as exc:
        # a failed x-division while building the transforms already refutes
        # the correspondence; surface it under the verifier's contract
        name, _, idx = exc.context.rpartition("_")
        raise IdentityViolation(name, int(idx) if idx.isdigit() else idx,
                                exc.constant) from exc
    a1, a2 = type1_sequences(t, n + 2, polys.nu)
    b0 = [p.constant for p in b]
    a10 = [p.constant for p in a1]
    a20 = [p.constant for p in a2]
    names = ("tilde_b", "tildetilde_b", "hat_a1", "tilde_a2", "tildetilde_a1", "tildetilde_a2")
    checked = 0
    for k in range(n + 1):
        if a10[k] == 0 or a10[k + 1] == 0:
            raise ZeroAtOrigin(k if a10[k] == 0 else k + 1, "A1")
        if b0[k] == 0:
            raise ZeroAtOrigin(k, "B")
        # tilde_b
        rhs = b[k + 1] + b[k].scale((a10[k - 1] if k >= 1 else 0) / a10[k] + t.c(k))
        if k >= 1:
            rhs = rhs - b[k - 1].scale(a10[k + 1] / a10[k] * t.a(k + 1))
        residual = polys.tildeB[k].times_x() - rhs
        if not residual.is_zero():
            raise IdentityViolation("tilde_b", k, residual)
        # tildetilde_b; the ratio multiplies B_k (monicity forces this
        # orientation -- the two readings coincide only when the ratio is -1)
        rhs = b[k + 1] - b[k].scale(b0[k + 1] / b0[k])
        residual = polys.tildetildeB[k].times_x() - rhs
        if not residual.is_zero():
            raise IdentityViolation("tildetilde_b", k, residual)
        # hat_a1 / tilde_a2 share the ratio A1_k(0)/A1_{k+1}(0)
        ratio = a10[k] / a10[k + 1]
        residual = polys.hatA1[k] - (a2[k] - a2[k + 1].scale(ratio))
        if not residual.is_zero():
            raise IdentityViolation("hat_a1", k, residual)
        residual = polys.tildeA2[k].times_x() - (a1[k] - a1[k + 1].scale(ratio))
        if not residual.is_zero():
            raise IdentityViolation("tilde_a2", k, residual)
        # the 2x2-inverse pair
        det = a10[k + 1] * a20[k + 2] - a20[k + 1] * a10[k + 2]
        if det == 0:
            raise SingularQuasiDetSystem(k)
        s1 = (a10[k] * a20[k + 2] - a20[k] * a10[k + 2]) / det
        s2 = (-a10[k] * a20[k + 1] + a20[k] * a10[k + 1]) / det
        for name, seq, aseq in (
            ("tildetilde_a1", polys.tildetildeA1, a1),
            ("tildetilde_a2", polys.tildetildeA2, a2),
        ):
            rhs = aseq[k] - aseq[k + 1].scale(s1) - aseq[k + 2].scale(s2)
            residual = seq[k].times_x() - rhs
            if not residual.is_zero():
                raise IdentityViolation(name, k, residual)
        checked += len(names)
    return ChristoffelReport(n_max=n, identities=names, checked=checked)


#: The twelve sign-definite 2x2 pairings: (top family, top index shift,
#: bottom family, companion selector).  Families: 0 = B, 1 = hat, 2 = hathat.
_AKV_DETS = (
    (1, 0, 0, 1),
    (1, 0, 0, 2),
    (2, 0, 0, 1),
    (2, 0, 0, 2),
    (2, 0, 1, 1),
    (2, 0, 1, 2),
    (0, 1, 1, 1),
    (0, 1, 1, 2),
    (0, 1, 2, 1),
    (0, 1, 2, 2),
    (1, 1, 2, 1),
    (1, 1, 2, 2),
)


def akv_sign_checks(t: TetraHessenberg, alphas: AlphaSequence, n: int, xs) -> AkvReport:
    """Evaluate the twelve vector-convergent 2x2 determinants for all
    0 <= k <= N at each sample x >= 0 and assert every value <= 0.

    The three strands per family are (B_n, B^(1)_n, B^(2)_n) with
    nu = -1/alpha_2 fixed.  The hatted families apply, entrywise, the same
    brackets that send B_n to x tildeB_n and x tildetildeB_n:

        hat:    v_{n+1} + (a_{3n+1}+a_{3n}) v_n + a_{3n} a_{3n-2} v_{n-1}
        hathat: v_{n+1} + a_{3n+1} v_n

    For the main strand these are divisible by x (eigen-relation); for the
    second-kind strands they are not, and the undivided polynomials are the
    ones entering the determinants.
    """
    _require_exact(t, "akv_sign_checks")
    xs = tuple(xs)
    if not xs:
        raise ValueError("at least one sample point is required")
    for x in xs:
        if x < 0:
            raise ValueError(f"sample x = {x} violates x >= 0")
    _check_pbf(alphas, 3 * n + 4, "akv_sign_checks")
    nu = _forced_nu(alphas)
    sk1, sk2, _ = second_kind_sequences(t, n + 2, nu)
    base = (tuple(type2_sequence(t, n + 2)), tuple(sk1), tuple(sk2))
    at = alphas.at

    def hat_image(v, k):
        out = v[k + 1] + v[k].scale(at(3 * k + 1) + at(3 * k))
        if k >= 1:
            out = out + v[k - 1].scale(at(3 * k) * at(3 * k - 2))
        return out

    def hathat_image(v, k):
        return v[k + 1] + v[k].scale(at(3 * k + 1))

    families = (
        base,
        tuple(tuple(hat_image(v, k) for k in range(n + 2)) for v in base),
        tuple(tuple(hathat_image(v, k) for k in range(n + 2)) for v in base),
    )

    max_value = None
    max_location = None
    zeros_at_origin = 0
    checked = 0
    for x in xs:
        vals = [
            [[p(x) for p in strand] for strand in family] for family in families
        ]
        for det_id, (top, shift, bottom, comp) in enumerate(_AKV_DETS, start=1):
            for k in range(n + 1):
                t_main = vals[top][0][k + shift]
                t_comp = vals[top][comp][k + shift]
                b_main = vals[bottom][0][k]
                b_comp = vals[bottom][comp][k]
                value = t_main * b_comp - t_comp * b_main
                checked += 1
                if value > 0:
                    raise SignViolation(det_id, k, x, value)
                if x == 0 and value == 0:
                    zeros_at_origin += 1
                if max_value is None or value > max_value:
                    max_value = value
                    max_location = (det_id, k, x)
    return AkvReport(
        n_max=n,
        xs=xs,
        checked=checked,
        max_value=max_value,
        max_location=max_location,
        zeros_at_origin=zeros_at_origin,
    )
