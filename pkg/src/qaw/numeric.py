"""Floating-point second witness for the exact identities.

For real x with |x| > 1 the lattice variable z = x + sqrt(x^2 - 1) is
real, so D_q and S_q can be evaluated directly from their defining
difference quotients at the shifted points x(s +- 1/2) without any
algebra.  Comparing that float pipeline against Horner evaluation of
the exact operator output (and against the closed-form right-hand
sides) gives an independent, low-precision check that the symbolic
layer computes the operators it claims to.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .awcore import OperatorContext, context
from .families import OPSFamily, coeff_suite, counterexample_family
from .zsym import XPoly


@dataclass(frozen=True)
class NumericConfig:
    q_samples: tuple[float, ...] = (0.3, 0.7)
    x_samples: tuple[float, ...] = (1.1, 1.5, 2.0, 3.0)
    rel_tol: float = 1e-9
    abs_tol: float = 1e-12

    def __post_init__(self):
        for q0 in self.q_samples:
            if not 0.0 < q0 < 1.0:
                raise ValueError("q sample %r outside (0, 1)" % (q0,))
        for x0 in self.x_samples:
            if abs(x0) <= 1.0:
                raise ValueError(
                    "x sample %r needs |x| > 1 for a real lattice variable" % (x0,)
                )
        if self.rel_tol <= 0.0:
            raise ValueError("rel_tol must be positive")

    def grid(self) -> str:
        return "q in %s, x in %s" % (list(self.q_samples), list(self.x_samples))


def eval_poly(f: XPoly, q0: float, x0: float, n_ctx: int | None = None) -> float:
    """Horner evaluation with every coefficient instantiated at q0."""
    acc = 0.0
    for c in reversed(f.coeffs()):
        acc = acc * x0 + c.evaluate(q0, n_ctx)
    return acc


def _lattice_pair(q0: float, x0: float) -> tuple[float, float]:
    # x(s +- 1/2) for the real branch z = x + sqrt(x^2 - 1)
    z = x0 + math.sqrt(x0 * x0 - 1.0)
    rq = math.sqrt(q0)
    zp, zm = z * rq, z / rq
    return 0.5 * (zp + 1.0 / zp), 0.5 * (zm + 1.0 / zm)


def lattice_dq(f: XPoly, q0: float, x0: float, n_ctx: int | None = None) -> float:
    """D_q f at x0 straight from the difference quotient."""
    if abs(x0) <= 1.0:
        raise ValueError("lattice evaluation needs |x| > 1")
    xp, xm = _lattice_pair(q0, x0)
    return (eval_poly(f, q0, xp, n_ctx) - eval_poly(f, q0, xm, n_ctx)) / (xp - xm)


def lattice_sq(f: XPoly, q0: float, x0: float, n_ctx: int | None = None) -> float:
    """S_q f at x0 as the plain average of the shifted values."""
    if abs(x0) <= 1.0:
        raise ValueError("lattice evaluation needs |x| > 1")
    xp, xm = _lattice_pair(q0, x0)
    return 0.5 * (eval_poly(f, q0, xp, n_ctx) + eval_poly(f, q0, xm, n_ctx))


def _rel_dev(a: float, b: float, abs_tol: float) -> float:
    d = abs(a - b)
    if d <= abs_tol:
        return 0.0
    return d / max(abs(a), abs(b))


@dataclass
class NumericSummary:
    nmax: int
    grid: str
    max_rel_dev: float
    status: str
    worst: str = ""

    def record(self) -> dict:
        rec = {
            "check": "numeric",
            "nmax": self.nmax,
            "status": self.status,
            "max_rel_dev": self.max_rel_dev,
            "grid": self.grid,
        }
        if self.worst:
            rec["worst"] = self.worst
        return rec


def numeric_crosscheck(
    cfg: NumericConfig,
    nmax: int,
    fam: OPSFamily | None = None,
    ctx: OperatorContext | None = None,
) -> NumericSummary:
    """Both relations for n <= nmax on the configured grid.

    At every grid point three values of each side are compared: the
    float lattice operator, the Horner value of the exact operator
    output, and the closed-form right-hand side.
    """
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    fam = fam or counterexample_family()
    ctx = ctx or context()
    suite = coeff_suite()
    u2 = ctx.u2()
    worst = 0.0
    worst_at = ""

    def track(a: float, b: float, label: str):
        nonlocal worst, worst_at
        d = _rel_dev(a, b, cfg.abs_tol)
        if d > worst:
            worst, worst_at = d, label

    for n in range(nmax + 1):
        polys = {k: fam.poly(n + k) for k in (-2, -1, 0, 1)}
        sqn = ctx.sq(polys[0])
        dqn = u2 * ctx.dq(polys[0])
        alpha_n = suite.alpha_n.instantiate_n(n)
        c_n = suite.c_n.instantiate_n(n)
        cs = {
            1: suite.c_n1.instantiate_n(n),
            0: suite.c_n2.instantiate_n(n),
            -1: suite.c_n3.instantiate_n(n),
            -2: suite.c_n4.instantiate_n(n),
        }
        for q0 in cfg.q_samples:
            for x0 in cfg.x_samples:
                vals = {k: eval_poly(p, q0, x0) for k, p in polys.items()}
                # S_q side
                lhs_f = lattice_sq(polys[0], q0, x0)
                lhs_e = eval_poly(sqn, q0, x0)
                rhs = alpha_n.evaluate(q0) * vals[0]
                if n >= 1:
                    rhs += c_n.evaluate(q0) * vals[-1]
                at = "sq n=%d q=%g x=%g" % (n, q0, x0)
                track(lhs_f, lhs_e, at + " lattice-vs-exact")
                track(lhs_e, rhs, at + " exact-vs-closed")
                track(lhs_f, rhs, at + " lattice-vs-closed")
                # D_q side
                lhs_f = eval_poly(u2, q0, x0) * lattice_dq(polys[0], q0, x0)
                lhs_e = eval_poly(dqn, q0, x0)
                rhs = cs[1].evaluate(q0) * vals[1] + cs[0].evaluate(q0) * vals[0]
                if n >= 1:
                    rhs += cs[-1].evaluate(q0) * vals[-1]
                if n >= 2:
                    rhs += cs[-2].evaluate(q0) * vals[-2]
                at = "dq n=%d q=%g x=%g" % (n, q0, x0)
                track(lhs_f, lhs_e, at + " lattice-vs-exact")
                track(lhs_e, rhs, at + " exact-vs-closed")
                track(lhs_f, rhs, at + " lattice-vs-closed")

    status = "pass" if worst < cfg.rel_tol else "fail"
    return NumericSummary(nmax, cfg.grid(), worst, status, worst_at)
