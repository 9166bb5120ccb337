"""Monic orthogonal-polynomial families and their recurrence data.

Everything here revolves around the three-term recurrence

    p_{n+1} = (x - rec_a(n)) p_n - rec_b(n) p_{n-1},    p_0 = 1, p_{-1} = 0,

and two concrete instances: the continuous dual q-Hahn family with
parameters (a, b, c | q), and the specialisation at (1, -1, t | t^2)
whose recurrence coefficients also have the closed forms

    B_n = ((1 + t^-2) u + 1 - t^-2) u t / 2,
    C_n = (1 + u t^-2)(1 - u)(1 - u^2 t^-2) / 4,        u = t^(2n),

written directly in the two-variable scalar ring.  The closed forms are
the constructors; the dual q-Hahn substitution is kept separate so the
two derivations can be checked against each other.

`coeff_suite` collects the full set of named scalars that the structure
relations and their inductive certification are phrased with, either
symbolic in u or instantiated at a concrete index.  Negative indices
(B_{-1} and friends) are meaningful ring elements by the same formulas;
only products against the zero polynomials p_{-1}, p_{-2} are dropped,
and that happens at the verification layer, not here.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Callable

from .scalar import Scalar, tpow, upow, rational, HALF, ONE, T, U
from .zsym import SymPoly, XPoly, z_to_x

_ALPHA = (tpow(2) + tpow(-2)) * HALF
_QUARTER = rational(1, 4)

# z-side multiplication by x is convolution with (z + z^-1)/2
_XZ = SymPoly({1: HALF, -1: HALF})


class OPSFamily:
    """A monic family generated by its recurrence coefficients.

    Polynomials are cached; the parallel z-side cache feeds the
    operator pipeline without per-call conversion.  Cache growth is
    guarded by a lock so concurrent readers never see a partially
    built entry.
    """

    def __init__(
        self,
        rec_a: Callable[[int], Scalar],
        rec_b: Callable[[int], Scalar],
        name: str = "",
    ):
        self.rec_a = rec_a
        self.rec_b = rec_b
        self.name = name
        self._lock = threading.Lock()
        self._xs: list[XPoly] = [XPoly.one()]
        self._zs: list[SymPoly] = [SymPoly({0: ONE})]

    def poly(self, n: int) -> XPoly:
        """The monic p_n; p_n = 0 for negative n."""
        if n < 0:
            return XPoly.zero()
        with self._lock:
            xs = self._xs
            while len(xs) <= n:
                m = len(xs) - 1
                nxt = xs[m].shift_up(1) - xs[m].scale(self.rec_a(m))
                if m > 0:
                    nxt = nxt - xs[m - 1].scale(self.rec_b(m))
                xs.append(nxt)
            return xs[n]

    def zpoly(self, n: int) -> SymPoly:
        """The z-side image of p_n, built by the same recurrence."""
        if n < 0:
            return SymPoly()
        with self._lock:
            zs = self._zs
            while len(zs) <= n:
                m = len(zs) - 1
                nxt = (zs[m] * _XZ) - zs[m].scale(self.rec_a(m))
                if m > 0:
                    nxt = nxt - zs[m - 1].scale(self.rec_b(m))
                zs.append(nxt)
            return zs[n]

    def polys(self, nmax: int) -> list[XPoly]:
        self.poly(nmax)
        return list(self._xs[: nmax + 1])


def ttrr_polys(fam: OPSFamily, nmax: int) -> list[XPoly]:
    """p_0 ... p_nmax of the family, monic."""
    return fam.polys(nmax)


@dataclass(frozen=True)
class FamilyParams:
    """Parameters (a, b, c | base) of a continuous dual q-Hahn family.

    The base is a Scalar so that the counterexample's base t^2 and any
    generic base go through the same code path.
    """

    a: Scalar
    b: Scalar
    c: Scalar
    base: Scalar

    def __post_init__(self):
        if self.base.is_zero or self.base.is_one:
            raise ValueError("family base must differ from 0 and 1")


COUNTEREXAMPLE_PARAMS = FamilyParams(ONE, rational(-1), T, tpow(2))


def dual_qhahn_rec_coeffs(p: FamilyParams, qn: Scalar) -> tuple[Scalar, Scalar]:
    """The recurrence pair (a_n, b_n) with base^n supplied as a Scalar.

    Passing qn = u yields the coefficients symbolic in the index, which
    is how the closed forms above are certified against this display.
    """
    a, b, c, q = p.a, p.b, p.c, p.base
    qn1 = qn / q
    ainv = ONE / a
    an = (
        a
        + ainv
        - a * (ONE - qn) * (ONE - b * c * qn1)
        - ainv * (ONE - a * b * qn) * (ONE - a * c * qn)
    ) * HALF
    bn = (
        (ONE - a * b * qn1)
        * (ONE - a * c * qn1)
        * (ONE - b * c * qn1)
        * (ONE - qn)
        * _QUARTER
    )
    return an, bn


def dual_qhahn_family(p: FamilyParams) -> OPSFamily:
    def ra(n: int) -> Scalar:
        return dual_qhahn_rec_coeffs(p, p.base ** n)[0]

    def rb(n: int) -> Scalar:
        return dual_qhahn_rec_coeffs(p, p.base ** n)[1]

    return OPSFamily(ra, rb, name="dual-q-hahn")


# closed-form recurrence coefficients of the counterexample family,
# symbolic in u
B_SYM = ((ONE + tpow(-2)) * U + ONE - tpow(-2)) * U * T * HALF
C_SYM = (ONE + U * tpow(-2)) * (ONE - U) * (ONE - U * U * tpow(-2)) * _QUARTER
c_SYM = C_SYM / U * T

ALPHA_SYM = (U + upow(-1)) * HALF
GAMMA_SYM = (U - upow(-1)) / (tpow(2) - tpow(-2))


def counterexample_family() -> OPSFamily:
    """The family P_n with rec_a = B_n, rec_b = C_n from the closed forms."""
    return OPSFamily(
        lambda n: B_SYM.instantiate_n(n),
        lambda n: C_SYM.instantiate_n(n),
        name="counterexample",
    )


@dataclass(frozen=True)
class CoeffSuite:
    """Every named scalar of the structure relations at one index.

    In symbolic mode the index is u itself and neighbours are reached
    by shift_n; instantiated mode substitutes u = t^(2n) throughout.
    The d_k3 member uses the index-k reading of its B factor; the
    certification layer also examines the alternative.
    """

    alpha_n: Scalar
    gamma_n: Scalar
    B_n: Scalar
    C_n: Scalar
    c_n: Scalar
    c_n1: Scalar
    c_n2: Scalar
    c_n3: Scalar
    c_n4: Scalar
    d_k1: Scalar
    d_k2: Scalar
    d_k3: Scalar
    d_k4: Scalar
    d_k5: Scalar
    d_k6: Scalar


def _build_symbolic_suite() -> CoeffSuite:
    al, ga, B, C, c = ALPHA_SYM, GAMMA_SYM, B_SYM, C_SYM, c_SYM
    a = _ALPHA
    a2m1 = a * a - ONE

    Bm1 = B.shift_n(-1)
    Bp1 = B.shift_n(1)
    Bm2 = B.shift_n(-2)
    Cm1 = C.shift_n(-1)
    Cp1 = C.shift_n(1)
    Cm2 = C.shift_n(-2)
    cm1 = c.shift_n(-1)
    cp1 = c.shift_n(1)

    c1 = a2m1 * ga
    c2 = cp1 - a * c + (ONE - a) * al * B
    c3 = (B - a * Bm1) * c + (ONE - a * a) * ga * C
    c4 = cm1 * C - a * c * Cm1

    d1 = a2m1 * al + a * c1
    d2 = a2m1 * (c + al * (B + Bp1)) + a * c2 - (B - a * Bp1) * c1
    d3 = (
        a2m1 * ((B + Bm1) * c + al * (B * B + C + Cp1 - ONE))
        + a * c1 * Cp1
        - c1.shift_n(-1) * C
        + (a - ONE) * c2 * B
        + a * c3
    )
    d4 = (
        a2m1 * ((B + Bm1) * al * C + (C + Bm1 * Bm1 + Cm1 - ONE) * c)
        - (c2.shift_n(-1) - a * c2) * C
        - (B - a * Bm1) * c3
        + a * c4
    )
    d5 = (
        a2m1 * Cm1 * (al * C + c * (Bm1 + Bm2))
        + a * c3 * Cm1
        - c3.shift_n(-1) * C
        - (B - a * Bm2) * c4
    )
    d6 = a2m1 * c * Cm1 * Cm2 + a * c4 * Cm2 - c4.shift_n(-1) * C

    return CoeffSuite(al, ga, B, C, c, c1, c2, c3, c4, d1, d2, d3, d4, d5, d6)


_SYMBOLIC_SUITE: CoeffSuite | None = None
_SUITE_LOCK = threading.Lock()


def coeff_suite(symbolic: bool = True, n: int | None = None) -> CoeffSuite:
    """The coefficient suite, symbolic in u or instantiated at n."""
    global _SYMBOLIC_SUITE
    with _SUITE_LOCK:
        if _SYMBOLIC_SUITE is None:
            _SYMBOLIC_SUITE = _build_symbolic_suite()
        suite = _SYMBOLIC_SUITE
    if symbolic:
        return suite
    if n is None:
        raise ValueError("instantiated suite needs the index n")
    return CoeffSuite(
        **{
            f: getattr(suite, f).instantiate_n(n)
            for f in CoeffSuite.__dataclass_fields__
        }
    )


def qpochhammer(a: Scalar, base: Scalar, k: int) -> Scalar:
    """(a; base)_k = (1 - a)(1 - a base) ... (1 - a base^(k-1))."""
    if k < 0:
        raise ValueError("q-Pochhammer wants k >= 0")
    out = ONE
    factor = a
    for _ in range(k):
        out = out * (ONE - factor)
        factor = factor * base
    return out


def aw_hyp_poly(
    n: int, a: Scalar, b: Scalar, c: Scalar, d: Scalar, base: Scalar
) -> XPoly:
    """Monic Askey-Wilson polynomial from its terminating 4phi3 sum.

    The z-dependent upper parameters contribute the symmetric product
    prod_{j<k} (1 - a base^j z)(1 - a base^j z^-1); everything else is
    scalar.  No division happens inside the sum: term k carries its
    numerator product times the suffix product of the later terms'
    denominators, which only perturbs the overall scale, and the one
    true division is the final monic normalisation.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if a.is_zero:
        raise ValueError("parameter a must be nonzero")
    q = base
    qmn = q ** (-n)
    big = a * b * c * d * q ** (n - 1)

    dens = []
    qk = ONE
    for _ in range(n):
        dens.append(
            (ONE - qk * q)
            * (ONE - a * b * qk)
            * (ONE - a * c * qk)
            * (ONE - a * d * qk)
        )
        qk = qk * q
    if any(dk.is_zero for dk in dens):
        raise ValueError("degenerate parameters: vanishing denominator factor")
    suffix = [ONE] * (n + 1)
    for j in range(n - 1, -1, -1):
        suffix[j] = dens[j] * suffix[j + 1]

    total = SymPoly()
    zprod = SymPoly({0: ONE})
    numk = ONE
    qk = ONE
    for k in range(n + 1):
        total = total + zprod.scale(numk * suffix[k])
        if k == n:
            break
        numk = numk * (ONE - qmn * qk) * (ONE - big * qk) * q
        g = a * qk
        zprod = zprod * SymPoly({1: -g, -1: -g, 0: ONE + g * g})
        qk = qk * q

    pref = (
        qpochhammer(a * b, q, n)
        * qpochhammer(a * c, q, n)
        * qpochhammer(a * d, q, n)
    )
    f = z_to_x(total)
    if pref.is_zero or f.degree != n or f.leading.is_zero:
        raise ValueError("degenerate parameters: leading coefficient vanished")
    return f.scale(ONE / f.leading)
