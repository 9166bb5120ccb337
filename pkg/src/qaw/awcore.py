"""The divided-difference operator D_q and its companion average S_q.

Both operators act on polynomials in x = (z + z^-1)/2 through the two
half-step substitutions z -> t^2 z and z -> t^-2 z (recall q = t^4, so
t^2 is a square root of q).  Writing f+ and f- for the two shifted
copies of the z-side representation of f,

    D_q f = (f+ - f-) / delta,      delta = (t^2 - t^-2) (z - z^-1) / 2,
    S_q f = (f+ + f-) / 2.

D_q lowers the degree by one and S_q preserves it; the denominator
always divides exactly, anything else is a bug and raises.

The context also owns the two constants that the structure relations
are phrased with: alpha = (t^2 + t^-2)/2, the average damping of x
itself, and U_2 = (alpha^2 - 1)(x^2 - 1), the fixed quadratic that
multiplies D_q throughout.
"""

from __future__ import annotations

from .scalar import Scalar, tpow, HALF, ONE, ZERO
from .zsym import SymPoly, XPoly, ZLaurent, x_to_z, z_to_x


class OperatorContext:
    """Precomputed constants for applying D_q and S_q.

    The context is stateless after construction; a module-level default
    instance backs the convenience functions below.
    """

    def __init__(self):
        self.alpha: Scalar = (tpow(2) + tpow(-2)) * HALF
        self.alpha2m1: Scalar = (self.alpha * self.alpha) - ONE
        # delta = (t^2 - t^-2)(z - z^-1)/2, the z-side divided difference
        s = (tpow(2) - tpow(-2)) * HALF
        self._delta = ZLaurent({1: s, -1: -s})

    def u2(self) -> XPoly:
        """The fixed quadratic (alpha^2 - 1)(x^2 - 1)."""
        return XPoly((-self.alpha2m1, ZERO, self.alpha2m1))

    def dq_sym(self, f: SymPoly) -> SymPoly:
        plus = f.z_scale(1)
        minus = f.z_scale(-1)
        quo = (plus - minus).divide_exact(self._delta)
        return SymPoly.from_zlaurent(quo)

    def sq_sym(self, f: SymPoly) -> SymPoly:
        plus = f.z_scale(1)
        minus = f.z_scale(-1)
        return SymPoly.from_zlaurent((plus + minus).scale(HALF))

    def dq(self, f: XPoly) -> XPoly:
        """Apply D_q; the degree drops by exactly one."""
        return z_to_x(self.dq_sym(x_to_z(f)))

    def sq(self, f: XPoly) -> XPoly:
        """Apply S_q; the degree is preserved."""
        return z_to_x(self.sq_sym(x_to_z(f)))


_DEFAULT = OperatorContext()


def context() -> OperatorContext:
    return _DEFAULT


def dq_apply(f: XPoly) -> XPoly:
    return _DEFAULT.dq(f)


def sq_apply(f: XPoly) -> XPoly:
    return _DEFAULT.sq(f)


def u2() -> XPoly:
    return _DEFAULT.u2()


ALPHA = _DEFAULT.alpha
ALPHA2M1 = _DEFAULT.alpha2m1
