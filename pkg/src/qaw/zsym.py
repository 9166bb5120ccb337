"""Polynomials in x and their z-side Laurent representation.

The substitution x = (z + z^-1)/2 identifies polynomials in x with
symmetric Laurent polynomials in z.  The divided-difference operators of
`awcore` act on the z-side, where the half-step shift in the underlying
lattice variable becomes the clean rescaling z -> t^(+-2) z; this module
supplies the three types that pipeline needs:

    XPoly     polynomial in x, dense coefficient tuple
    ZLaurent  Laurent polynomial in z, sparse
    SymPoly   ZLaurent invariant under z -> z^-1 (checked on build)

plus the two exact conversions between XPoly and SymPoly.
"""

from __future__ import annotations

from math import comb
from math import inf as _INF
from typing import Callable, Iterable, Iterator

from .scalar import ExactDivisionError, Rat, Scalar, as_scalar, ZERO, ONE, HALF

NEG_INF = -_INF


class AsymmetryError(ValueError):
    """A Laurent polynomial expected to be symmetric in z -> z^-1 is not."""


def _as_xpoly(v):
    if isinstance(v, XPoly):
        return v
    try:
        s = as_scalar(v)
    except TypeError:
        return NotImplemented
    return XPoly._raw((s,) if s else ())


class XPoly:
    """A polynomial in x with Scalar coefficients.

    Coefficients are held densely from degree 0 upward with a nonzero
    top entry; the zero polynomial is the empty tuple and reports degree
    -inf so that degree laws like deg(fg) = deg f + deg g stay literal.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):  # accepts Scalars, ints, rationals
        c = [as_scalar(v) for v in coeffs]
        while c and c[-1].is_zero:
            c.pop()
        self._c = tuple(c)

    @staticmethod
    def _raw(coeffs: tuple) -> "XPoly":
        p = XPoly.__new__(XPoly)
        p._c = coeffs
        return p

    @classmethod
    def zero(cls) -> "XPoly":
        return cls._raw(())

    @classmethod
    def one(cls) -> "XPoly":
        return cls._raw((ONE,))

    @classmethod
    def x(cls) -> "XPoly":
        return cls._raw((ZERO, ONE))

    @classmethod
    def monomial(cls, k: int, coeff=1) -> "XPoly":
        s = as_scalar(coeff)
        if s.is_zero:
            return cls.zero()
        return cls._raw((ZERO,) * k + (s,))

    @classmethod
    def parse(cls, text: str) -> "XPoly":
        from . import textio

        return textio.parse_xpoly(text)

    # -- queries -----------------------------------------------------------

    @property
    def degree(self):
        return len(self._c) - 1 if self._c else NEG_INF

    @property
    def leading(self) -> Scalar:
        return self._c[-1] if self._c else ZERO

    def coeff(self, k: int) -> Scalar:
        if 0 <= k < len(self._c):
            return self._c[k]
        return ZERO

    def coeffs(self) -> tuple:
        return self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        other = _as_xpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    # -- arithmetic --------------------------------------------------------

    def __neg__(self) -> "XPoly":
        return XPoly._raw(tuple(-a for a in self._c))

    def __add__(self, other) -> "XPoly":
        other = _as_xpoly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, v in enumerate(b):
            out[k] = out[k] + v
        while out and out[-1].is_zero:
            out.pop()
        return XPoly._raw(tuple(out))

    __radd__ = __add__

    def __sub__(self, other) -> "XPoly":
        other = _as_xpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other) -> "XPoly":
        other = _as_xpoly(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__sub__(self)

    def __mul__(self, other) -> "XPoly":
        other = _as_xpoly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._c, other._c
        if not a or not b:
            return XPoly.zero()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai.is_zero:
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        while out and out[-1].is_zero:
            out.pop()
        return XPoly._raw(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "XPoly":
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        out = XPoly.one()
        for _ in range(e):
            out = out * self
        return out

    def scale(self, c) -> "XPoly":
        s = as_scalar(c)
        if s.is_zero:
            return XPoly.zero()
        return XPoly._raw(tuple(a * s for a in self._c))

    def shift_up(self, k: int) -> "XPoly":
        """Multiply by x^k."""
        if not self._c or k == 0:
            return self
        return XPoly._raw((ZERO,) * k + self._c)

    def map_coeffs(self, fn: Callable[[Scalar], Scalar]) -> "XPoly":
        out = [fn(a) for a in self._c]
        while out and out[-1].is_zero:
            out.pop()
        return XPoly._raw(tuple(out))

    # -- rendering ---------------------------------------------------------

    def render(self) -> str:
        from . import textio

        return textio.render_xpoly(self)

    def to_latex(self) -> str:
        from . import textio

        return textio.latex_xpoly(self)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return "XPoly(%s)" % self.render()


class ZLaurent:
    """A Laurent polynomial in z with Scalar coefficients, kept sparse."""

    __slots__ = ("_t",)

    def __init__(self, terms=None):
        t: dict[int, Scalar] = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for m, c in items:
                s = as_scalar(c)
                if m in t:
                    s = t[m] + s
                if s:
                    t[m] = s
                else:
                    t.pop(m, None)
        self._t = t

    @classmethod
    def _raw(cls, t: dict):
        p = cls.__new__(cls)
        p._t = t
        return p

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def one(cls):
        return cls._raw({0: ONE})

    # -- queries -----------------------------------------------------------

    def coeff(self, m: int) -> Scalar:
        return self._t.get(m, ZERO)

    def terms(self) -> Iterator[tuple[int, Scalar]]:
        for m in sorted(self._t, reverse=True):
            yield m, self._t[m]

    @property
    def max_exp(self):
        return max(self._t) if self._t else NEG_INF

    @property
    def min_exp(self):
        return min(self._t) if self._t else _INF

    def support(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ZLaurent):
            return NotImplemented
        return self._t == other._t

    def is_symmetric(self) -> bool:
        t = self._t
        for m, c in t.items():
            if m > 0 and t.get(-m, ZERO) != c:
                return False
            if m < 0 and -m not in t:
                return False
        return True

    def mirror(self) -> "ZLaurent":
        return ZLaurent._raw({-m: c for m, c in self._t.items()})

    # -- arithmetic --------------------------------------------------------

    def _wrap(self, other, t: dict):
        if isinstance(self, SymPoly) and isinstance(other, SymPoly):
            return SymPoly._raw(t)
        return ZLaurent._raw(t)

    def __neg__(self):
        return type(self)._raw({m: -c for m, c in self._t.items()})

    def __add__(self, other):
        if not isinstance(other, ZLaurent):
            return NotImplemented
        out = dict(self._t)
        for m, c in other._t.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = s
            else:
                del out[m]
        return self._wrap(other, out)

    def __sub__(self, other):
        if not isinstance(other, ZLaurent):
            return NotImplemented
        out = dict(self._t)
        for m, c in other._t.items():
            s = out.get(m)
            s = -c if s is None else s - c
            if s:
                out[m] = s
            else:
                del out[m]
        return self._wrap(other, out)

    def __mul__(self, other):
        if not isinstance(other, ZLaurent):
            return NotImplemented
        a, b = self._t, other._t
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, Scalar] = {}
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = ma + mb
                v = ca * cb
                s = out.get(m)
                s = v if s is None else s + v
                if s:
                    out[m] = s
                else:
                    del out[m]
        return self._wrap(other, out)

    def scale(self, c):
        s = as_scalar(c)
        if s.is_zero:
            return type(self)._raw({})
        return type(self)._raw({m: v * s for m, v in self._t.items()})

    def z_scale(self, k: int) -> "ZLaurent":
        """Rescale z -> t^(2k) z; the coefficient of z^m picks up t^(2km).

        This is the z-side shadow of the half-step lattice shift, which
        is why the result is generally not symmetric.
        """
        if k == 0:
            return ZLaurent._raw(dict(self._t))
        return ZLaurent._raw(
            {m: c.mul_tpow(2 * k * m) for m, c in self._t.items()}
        )

    def divide_exact(self, den: "ZLaurent") -> "ZLaurent":
        """Exact Laurent division; raises ExactDivisionError on remainder."""
        if not den._t:
            raise ZeroDivisionError("z-side division by zero")
        if not self._t:
            return ZLaurent.zero()
        num = dict(self._t)
        top = max(den._t)
        lead = den._t[top]
        bound = min(num) - min(den._t)
        quo: dict[int, Scalar] = {}
        while num:
            m = max(num)
            e = m - top
            if e < bound:
                raise ExactDivisionError("z-side division leaves a remainder")
            c = num.pop(m) / lead
            quo[e] = c
            for dm, dc in den._t.items():
                if dm == top:
                    continue
                key = dm + e
                v = dc * c
                s = num.get(key)
                s = -v if s is None else s - v
                if s:
                    num[key] = s
                else:
                    num.pop(key, None)
        return ZLaurent._raw(quo)

    # -- rendering ---------------------------------------------------------

    def render(self) -> str:
        from . import textio

        return textio.render_zlaurent(self)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return "%s(%s)" % (type(self).__name__, self.render())


class SymPoly(ZLaurent):
    """A ZLaurent constrained to be symmetric under z -> z^-1."""

    __slots__ = ()

    def __init__(self, terms=None):
        super().__init__(terms)
        if not self.is_symmetric():
            raise AsymmetryError("terms are not symmetric under z -> z^-1")

    @classmethod
    def from_zlaurent(cls, zl: ZLaurent) -> "SymPoly":
        if not zl.is_symmetric():
            raise AsymmetryError("Laurent polynomial is not symmetric")
        return cls._raw(dict(zl._t))

    def to_x(self) -> XPoly:
        return z_to_x(self)


def x_to_z(f: XPoly) -> SymPoly:
    """Expand f((z + z^-1)/2) as a symmetric Laurent polynomial."""
    out: dict[int, Scalar] = {}
    for k, a in enumerate(f.coeffs()):
        if a.is_zero:
            continue
        inv = Rat(1) / (1 << k)
        for i in range(k + 1):
            m = k - 2 * i
            v = a.scale(comb(k, i) * inv)
            s = out.get(m)
            s = v if s is None else s + v
            if s:
                out[m] = s
            else:
                del out[m]
    return SymPoly._raw(out)


def z_to_x(g: ZLaurent) -> XPoly:
    """Rewrite a symmetric Laurent polynomial as a polynomial in x.

    Uses z^m + z^-m = E_m(x) with the integer recurrence
    E_{m+1} = 2x E_m - E_{m-1}; asymmetric input signals a bug in the
    caller and raises AsymmetryError.
    """
    if not isinstance(g, SymPoly) and not g.is_symmetric():
        raise AsymmetryError("cannot express an asymmetric polynomial in x")
    if not g:
        return XPoly.zero()
    deg = g.max_exp
    acc = [ZERO] * (deg + 1)
    c0 = g.coeff(0)
    if c0:
        acc[0] = c0
    eprev = [2]
    ecur = [0, 2]
    for m in range(1, deg + 1):
        cm = g.coeff(m)
        if cm:
            for k, r in enumerate(ecur):
                if r:
                    acc[k] = acc[k] + cm.scale(r)
        if m < deg:
            enext = [0] + [2 * v for v in ecur]
            for k, v in enumerate(eprev):
                enext[k] -= v
            eprev, ecur = ecur, enext
    while acc and acc[-1].is_zero:
        acc.pop()
    return XPoly._raw(tuple(acc))
