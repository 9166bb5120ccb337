"""Exact arithmetic in the field Q(t, u).

Every coefficient that appears anywhere in this package lives in the
fraction field of Laurent polynomials in two commuting indeterminates,

    t  (a fixed fourth root of the deformation parameter, q = t^4),
    u  (a placeholder for the n-dependent monomial, u = t^(2n)),

with rational coefficients.  A value is stored as a reduced fraction
num/den of true polynomials; the denominator is monic in its
lexicographically leading term and the pair carries no common monomial
factor, so equal field elements have equal representations and the zero
test is a dict lookup.

Exponent pairs (i, j) are packed into a single integer key
(i << 32) + j, which turns monomial multiplication into integer
addition.  The packing is unambiguous for |j| < 2^31, far beyond
anything the rest of the package produces.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Union

try:
    from gmpy2 import mpq as Rat
except ImportError:  # pragma: no cover - gmpy2 is a hard dep, this is a dev convenience
    from fractions import Fraction as Rat  # type: ignore[assignment]

RatLike = Union[int, Rat]

# Packed exponent keys: key = (i << 32) + j with j in (-2^31, 2^31).
_SHIFT = 32
_HALF = 1 << 31
_MASK = (1 << 32) - 1

# Sanity bound on exponents accepted from external input.  Internal
# arithmetic only ever adds exponents of modest size, so the packing
# cannot silently wrap.
MAX_EXPONENT = 1 << 24

_R0 = Rat(0)
_R1 = Rat(1)


def _pack(i: int, j: int) -> int:
    return (i << _SHIFT) + j


def _unpack(key: int) -> tuple[int, int]:
    j = ((key + _HALF) & _MASK) - _HALF
    return (key - j) >> _SHIFT, j


def _check_exponents(i: int, j: int) -> None:
    if abs(i) > MAX_EXPONENT or abs(j) > MAX_EXPONENT:
        raise OverflowError("exponent (%d, %d) out of supported range" % (i, j))


# ---------------------------------------------------------------------------
# raw dict arithmetic: {packed exponent: nonzero Rat}
# ---------------------------------------------------------------------------


def _padd(a: dict, b: dict) -> dict:
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for k, c in b.items():
        s = out.get(k)
        if s is None:
            out[k] = c
        else:
            s = s + c
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def _psub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, c in b.items():
        s = out.get(k)
        if s is None:
            out[k] = -c
        else:
            s = s - c
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def _pneg(a: dict) -> dict:
    return {k: -c for k, c in a.items()}


def _pmul(a: dict, b: dict) -> dict:
    if not a or not b:
        return {}
    if len(a) < len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    for kb, cb in b.items():
        for ka, ca in a.items():
            k = ka + kb
            s = get(k)
            if s is None:
                out[k] = ca * cb
            else:
                s = s + ca * cb
                if s:
                    out[k] = s
                else:
                    del out[k]
    return out


def _pscale(a: dict, c: Rat) -> dict:
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def _pshift(a: dict, dkey: int) -> dict:
    if not dkey:
        return dict(a)
    return {k + dkey: v for k, v in a.items()}


def _pmins(a: dict) -> tuple[int, int]:
    mi = mj = None
    for k in a:
        i, j = _unpack(k)
        mi = i if mi is None or i < mi else mi
        mj = j if mj is None or j < mj else mj
    return mi, mj  # type: ignore[return-value]


def _is_ufree(a: dict) -> bool:
    return all(((k + _HALF) & _MASK) == _HALF for k in a)


# ---------------------------------------------------------------------------
# exact division and gcd over Q[t, u]
#
# Inputs here are true polynomials (all exponents nonnegative); callers
# guarantee that via the shift step of Scalar normalisation.  Division
# walks lexicographically leading terms; the quotient of an exact
# division is produced in strictly decreasing key order, so the loop
# terminates.
# ---------------------------------------------------------------------------


class ExactDivisionError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


def _pdiv_exact(a: dict, b: dict) -> dict:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return {}
    if len(b) == 1:
        ((kb, cb),) = b.items()
        out = {}
        for k, c in a.items():
            kq = k - kb
            i, j = _unpack(kq)
            if i < 0 or j < 0:
                raise ExactDivisionError("monomial does not divide")
            out[kq] = c / cb
        return out
    rem = dict(a)
    kb = max(b)
    cb = b[kb]
    quo: dict = {}
    while rem:
        ka = max(rem)
        kq = ka - kb
        i, j = _unpack(kq)
        if i < 0 or j < 0:
            raise ExactDivisionError("leading term not divisible")
        cq = rem[ka] / cb
        quo[kq] = cq
        for k, c in b.items():
            kk = k + kq
            s = rem.get(k + kq)
            if s is None:
                rem[kk] = -c * cq
            else:
                s = s - c * cq
                if s:
                    rem[kk] = s
                else:
                    del rem[kk]
    return quo


def _univar(a: dict, tside: bool) -> dict:
    # collapse a u-free (resp. t-free) poly to {exponent: Rat}
    out = {}
    for k, c in a.items():
        i, j = _unpack(k)
        out[i if tside else j] = c
    return out


def _gcd_uni(a: dict, b: dict) -> dict:
    # monic Euclid on {exp: Rat} dicts, single variable
    while b:
        db = max(b)
        lb = b[db]
        r = dict(a)
        while r and max(r) >= db:
            dr = max(r)
            c = r[dr] / lb
            for k, v in b.items():
                kk = k + dr - db
                s = r.get(kk)
                if s is None:
                    r[kk] = -v * c
                else:
                    s = s - v * c
                    if s:
                        r[kk] = s
                    else:
                        del r[kk]
        a, b = b, r
    if not a:
        return {}
    la = a[max(a)]
    return {k: v / la for k, v in a.items()}


def _coeffs_in_u(a: dict) -> dict[int, dict]:
    # split a bivariate poly into {u-exponent: t-poly as {t-exp: Rat}}
    out: dict[int, dict] = {}
    for k, c in a.items():
        i, j = _unpack(k)
        out.setdefault(j, {})[i] = c
    return out


def _join_from_u(rows: dict[int, dict]) -> dict:
    out = {}
    for j, row in rows.items():
        for i, c in row.items():
            out[_pack(i, j)] = c
    return out


def _content_t(rows: dict[int, dict]) -> dict:
    g: dict = {}
    for row in rows.values():
        g = _gcd_uni(g, row)
        if g and max(g) == 0:
            return {0: _R1}
    return g


def _uni_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            s = out.get(k)
            if s is None:
                out[k] = ca * cb
            else:
                s = s + ca * cb
                if s:
                    out[k] = s
                else:
                    del out[k]
    return out


def _uni_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, c in b.items():
        s = out.get(k)
        if s is None:
            out[k] = -c
        else:
            s = s - c
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def _uni_div_exact(a: dict, b: dict) -> dict:
    lb = max(b)
    cb = b[lb]
    rem = dict(a)
    quo: dict = {}
    while rem:
        la = max(rem)
        if la < lb:
            raise ExactDivisionError("univariate division not exact")
        kq = la - lb
        cq = rem[la] / cb
        quo[kq] = cq
        for k, v in b.items():
            kk = k + kq
            s = rem.get(kk)
            if s is None:
                rem[kk] = -v * cq
            else:
                s = s - v * cq
                if s:
                    rem[kk] = s
                else:
                    del rem[kk]
    return quo


def _pgcd(a: dict, b: dict) -> dict:
    """Gcd of two true polynomials in Q[t, u], up to a unit."""
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    if len(a) == 1 or len(b) == 1:
        ai, aj = _pmins(a)
        bi, bj = _pmins(b)
        return {_pack(min(ai, bi), min(aj, bj)): _R1}
    if _is_ufree(a) and _is_ufree(b):
        g = _gcd_uni(_univar(a, True), _univar(b, True))
        return {_pack(i, 0): c for i, c in g.items()}
    ra, rb = _coeffs_in_u(a), _coeffs_in_u(b)
    if max(ra) == 0 and max(rb) == 0:
        g = _gcd_uni(_univar(a, False), _univar(b, False))
        return {_pack(0, j): c for j, c in g.items()}
    ca, cb = _content_t(ra), _content_t(rb)
    gc = _gcd_uni(ca, cb)
    pa = {j: _uni_div_exact(row, ca) for j, row in ra.items()}
    pb = {j: _uni_div_exact(row, cb) for j, row in rb.items()}
    gp = _prs_u(pa, pb)
    if gc != {0: _R1}:
        rows = {j: _uni_mul(row, gc) for j, row in gp.items()}
    else:
        rows = gp
    return _join_from_u(rows)


def _prs_u(f: dict[int, dict], g: dict[int, dict]) -> dict[int, dict]:
    # primitive pseudo-remainder sequence in u, coefficients in Q[t];
    # inputs are primitive wrt their t-content
    if max(f) < max(g):
        f, g = g, f
    while True:
        dg = max(g)
        if dg == 0:
            return {0: {0: _R1}}
        r = _prem_u(f, g)
        if not r:
            cont = _content_t(g)
            return {j: _uni_div_exact(row, cont) for j, row in g.items()}
        cont = _content_t(r)
        r = {j: _uni_div_exact(row, cont) for j, row in r.items()}
        f, g = g, r


def _prem_u(f: dict[int, dict], g: dict[int, dict]) -> dict[int, dict]:
    df, dg = max(f), max(g)
    lg = g[dg]
    r = {j: dict(row) for j, row in f.items()}
    while r and max(r) >= dg:
        dr = max(r)
        lr = r.pop(dr)
        # r := lg * r - lr * u^(dr - dg) * g, applied to the remaining rows
        nr: dict[int, dict] = {j: _uni_mul(row, lg) for j, row in r.items()}
        for j, row in g.items():
            if j == dg:
                continue
            jj = j + dr - dg
            merged = _uni_sub(nr.get(jj, {}), _uni_mul(row, lr))
            if merged:
                nr[jj] = merged
            elif jj in nr:
                del nr[jj]
        r = {j: row for j, row in nr.items() if row}
    return r


# ---------------------------------------------------------------------------
# Scalar
# ---------------------------------------------------------------------------

_ONE_DICT = {0: _R1}


def _normalize(num: dict, den: dict, skip_gcd: bool) -> tuple[dict, dict]:
    if not den:
        raise ZeroDivisionError("scalar with zero denominator")
    if not num:
        return {}, dict(_ONE_DICT)
    ni, nj = _pmins(num)
    di, dj = _pmins(den)
    mi, mj = min(ni, di), min(nj, dj)
    if mi or mj:
        dk = _pack(mi, mj)
        num = {k - dk: c for k, c in num.items()}
        den = {k - dk: c for k, c in den.items()}
    if len(den) > 1 and not skip_gcd:
        # almost every fraction formed in this package reduces all the
        # way to Laurent form, so attempt the one-shot division before
        # paying for a gcd; a miss fails fast on a non-divisible lead
        try:
            num = _pdiv_exact(num, den)
            den = dict(_ONE_DICT)
        except ExactDivisionError:
            g = _pgcd(num, den)
            if len(g) > 1 or max(g) != 0:
                num = _pdiv_exact(num, g)
                den = _pdiv_exact(den, g)
    lead = den[max(den)]
    if lead != _R1:
        num = {k: c / lead for k, c in num.items()}
        den = {k: c / lead for k, c in den.items()}
    return num, den


class Scalar:
    """An element of Q(t, u) in canonical reduced form.

    Construct via the module helpers (`tpow`, `upow`, `rational`,
    `from_terms`, `parse`) or by arithmetic on existing values; the two
    generators are exported as `T` and `U`.

    >>> s = (T ** 2 + 1) / 2
    >>> str(s)
    '(1/2)*t^2 + (1/2)'
    >>> s - s == ZERO
    True
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num: dict, den: dict, _canonical: bool = False):
        if not _canonical:
            num, den = _normalize(num, den, skip_gcd=False)
        self._num = num
        self._den = den

    # -- constructors ------------------------------------------------------

    @staticmethod
    def _make(num: dict, den: dict, skip_gcd: bool = False) -> "Scalar":
        num, den = _normalize(num, den, skip_gcd)
        return Scalar(num, den, _canonical=True)

    @classmethod
    def from_terms(
        cls,
        terms: Mapping[tuple[int, int], RatLike] | Iterable[tuple[tuple[int, int], RatLike]],
        den_terms=None,
    ) -> "Scalar":
        """Build a scalar from {(t-exp, u-exp): coefficient} data."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        num: dict = {}
        for (i, j), c in items:
            _check_exponents(i, j)
            c = Rat(c)
            if c:
                k = _pack(i, j)
                s = num.get(k)
                num[k] = c if s is None else s + c
                if not num[k]:
                    del num[k]
        if den_terms is None:
            den = dict(_ONE_DICT)
        else:
            ditems = den_terms.items() if isinstance(den_terms, Mapping) else den_terms
            den = {}
            for (i, j), c in ditems:
                _check_exponents(i, j)
                c = Rat(c)
                if c:
                    k = _pack(i, j)
                    s = den.get(k)
                    den[k] = c if s is None else s + c
                    if not den[k]:
                        del den[k]
        return cls._make(num, den)

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        """Parse the textual scalar grammar, e.g. ``(1/2)*t^2*u^-1 + 1``."""
        from . import textio

        return textio.parse_scalar(text)

    # -- structure queries -------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._num

    @property
    def is_one(self) -> bool:
        return self._num == _ONE_DICT and self._den == _ONE_DICT

    @property
    def is_laurent(self) -> bool:
        """True when the value is a Laurent polynomial (monomial denominator)."""
        return len(self._den) == 1

    @property
    def is_rational(self) -> bool:
        return len(self._den) == 1 and max(self._den) == 0 and (
            not self._num or (len(self._num) == 1 and max(self._num) == 0)
        )

    @property
    def has_u(self) -> bool:
        m = _HALF
        return any(((k + m) & _MASK) != m for k in self._num) or any(
            ((k + m) & _MASK) != m for k in self._den
        )

    def as_rational(self) -> Rat:
        if not self.is_rational:
            raise ValueError("scalar is not a rational constant")
        if not self._num:
            return _R0
        return self._num[0] / self._den[0]

    def laurent_terms(self) -> Iterator[tuple[int, int, Rat]]:
        """Yield (t-exp, u-exp, coeff) of a Laurent-polynomial scalar."""
        if len(self._den) != 1:
            raise ValueError("scalar has a nontrivial denominator")
        (dk,) = self._den
        for k in sorted(self._num, reverse=True):
            i, j = _unpack(k - dk)
            yield i, j, self._num[k]

    def numerator_terms(self) -> Iterator[tuple[int, int, Rat]]:
        for k in sorted(self._num, reverse=True):
            i, j = _unpack(k)
            yield i, j, self._num[k]

    def denominator_terms(self) -> Iterator[tuple[int, int, Rat]]:
        for k in sorted(self._den, reverse=True):
            i, j = _unpack(k)
            yield i, j, self._den[k]

    # -- ring / field operations ------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._num)

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        return hash(
            (frozenset(self._num.items()), frozenset(self._den.items()))
        )

    def __neg__(self) -> "Scalar":
        return Scalar(_pneg(self._num), self._den, _canonical=True)

    def __add__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._den == other._den:
            return Scalar._make(_padd(self._num, other._num), self._den)
        return Scalar._make(
            _padd(_pmul(self._num, other._den), _pmul(other._num, self._den)),
            _pmul(self._den, other._den),
        )

    __radd__ = __add__

    def __sub__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._den == other._den:
            return Scalar._make(_psub(self._num, other._num), self._den)
        return Scalar._make(
            _psub(_pmul(self._num, other._den), _pmul(other._num, self._den)),
            _pmul(self._den, other._den),
        )

    def __rsub__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__sub__(self)

    def __mul__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar._make(
            _pmul(self._num, other._num), _pmul(self._den, other._den)
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other._num:
            raise ZeroDivisionError("scalar division by zero")
        return Scalar._make(
            _pmul(self._num, other._den), _pmul(self._den, other._num)
        )

    def __rtruediv__(self, other) -> "Scalar":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other.__truediv__(self)

    def __pow__(self, e: int) -> "Scalar":
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return (ONE / self) ** (-e)
        out = ONE
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def inverse(self) -> "Scalar":
        return ONE / self

    def scale(self, c: RatLike) -> "Scalar":
        """Multiply by a plain rational, staying in canonical form."""
        c = Rat(c)
        if not c or not self._num:
            return ZERO
        return Scalar(_pscale(self._num, c), self._den, _canonical=True)

    def mul_tpow(self, e: int) -> "Scalar":
        """Multiply by t^e."""
        if not e or not self._num:
            return self
        dk = e << _SHIFT
        return Scalar._make(_pshift(self._num, dk), dict(self._den), skip_gcd=True)

    # -- the two substitutions ---------------------------------------------

    def shift_n(self, k: int) -> "Scalar":
        """Apply the index shift n -> n + k, i.e. u -> u * t^(2k).

        A ring automorphism, so reduced fractions stay reduced and no
        gcd is recomputed.
        """
        if not k or not self.has_u:
            return self
        d = 2 * k << _SHIFT

        def remap(p: dict) -> dict:
            out = {}
            for key, c in p.items():
                j = ((key + _HALF) & _MASK) - _HALF
                out[key + d * j] = c
            return out

        return Scalar._make(remap(self._num), remap(self._den), skip_gcd=True)

    def instantiate_n(self, n: int) -> "Scalar":
        """Substitute u := t^(2n), collapsing to a u-free scalar.

        Valid for any integer n; the family layer uses n = -1 for its
        out-of-range convention.  Raises ZeroDivisionError when the
        denominator vanishes under the substitution.
        """
        if not self.has_u:
            return self

        def remap(p: dict) -> dict:
            out: dict = {}
            for key, c in p.items():
                j = ((key + _HALF) & _MASK) - _HALF
                k = key + ((2 * n * j) << _SHIFT) - j
                s = out.get(k)
                if s is None:
                    out[k] = c
                else:
                    s = s + c
                    if s:
                        out[k] = s
                    else:
                        del out[k]
            return out

        den = remap(self._den)
        if not den:
            raise ZeroDivisionError(
                "denominator vanishes under u := t^(2n) at n=%d" % n
            )
        return Scalar._make(remap(self._num), den)

    def evaluate(self, q0: float, n: int | None = None) -> float:
        """Evaluate at a numeric q0 in (0, 1), with t = q0^(1/4).

        A scalar that mentions u needs the integer n supplying
        u = q0^(n/2).
        """
        if not 0.0 < q0 < 1.0:
            raise ValueError("q0 must lie strictly between 0 and 1")
        if n is None and self.has_u:
            raise ValueError("scalar depends on u; supply n")

        def val(p: dict) -> float:
            s = 0.0
            for k, c in p.items():
                i, j = _unpack(k)
                e = 0.25 * i + (0.5 * n * j if j else 0.0)
                s += float(c) * q0 ** e
            return s

        d = val(self._den)
        if d == 0.0:
            raise ZeroDivisionError("denominator evaluates to zero")
        return val(self._num) / d

    # -- rendering ---------------------------------------------------------

    def render(self) -> str:
        from . import textio

        return textio.render_scalar(self)

    def to_latex(self) -> str:
        from . import textio

        return textio.latex_scalar(self)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return "Scalar(%s)" % self.render()


def _coerce(v) -> "Scalar":
    if isinstance(v, Scalar):
        return v
    if isinstance(v, int):
        return Scalar({0: Rat(v)} if v else {}, dict(_ONE_DICT), _canonical=True)
    if isinstance(v, Rat):
        return Scalar({0: v} if v else {}, dict(_ONE_DICT), _canonical=True)
    return NotImplemented


def as_scalar(v) -> Scalar:
    """Coerce an int, rational or Scalar to a Scalar."""
    s = _coerce(v)
    if s is NotImplemented:
        raise TypeError("cannot interpret %r as a scalar" % (v,))
    return s


def rational(p: RatLike, q: RatLike = 1) -> Scalar:
    """The constant scalar p/q."""
    c = Rat(p) / Rat(q)
    return Scalar({0: c} if c else {}, dict(_ONE_DICT), _canonical=True)


def tpow(i: int) -> Scalar:
    _check_exponents(i, 0)
    return Scalar({_pack(i, 0): _R1}, dict(_ONE_DICT))


def upow(j: int) -> Scalar:
    _check_exponents(0, j)
    return Scalar({_pack(0, j): _R1}, dict(_ONE_DICT))


ZERO = rational(0)
ONE = rational(1)
HALF = rational(1, 2)
T = tpow(1)
U = upow(1)
Q = tpow(4)
