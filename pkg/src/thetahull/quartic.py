"""Bitangents of smooth compact plane quartics.

The 28 bitangent lines of a smooth quartic realize its odd theta
characteristics; this module computes all of them, decides exactly which
lines are real and which touch the curve in two distinct real points
(the totally real ones, counted by T), and infers the topological type
(s, a) from the real-line count.

Strategy: after a random rational projective change of coordinates the
restriction of the curve to a line y = a x + b is a quartic in x whose
perfect-square condition gives two polynomial equations G1, G2 in (a, b).
All elimination is exact over the rationals: the slope eliminant is a
resultant, back-substitution uses the degree-one subresultant, and every
reality decision is made by Sturm counts or exact sign evaluation.
Floating point appears only when producing line coordinates and tangency
points for reporting, and is cross-checked against the exact counts.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .exactpoly import (
    BiPoly,
    PolynomialError,
    UniPoly,
    poly_gcd,
    resultant,
    subresultant_linear,
    zp_eval_sign,
)
from .roots import (
    ComplexRoot,
    IsolatingInterval,
    complex_roots,
    count_real_roots_in,
    isolate_real_roots,
    refine,
    sturm_chain,
    _sturm_count,
)

DEFAULT_SEED = 1729
_MAX_COORDINATE_RETRIES = 10
_RESIDUAL_TOL = 1e-8


class QuarticError(Exception):
    """Base class; `code` keys the CLI exit mapping."""

    code = "ERROR"

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class SingularCurve(QuarticError):
    code = "SINGULAR"


class NoncompactCurve(QuarticError):
    code = "NONCOMPACT"


class EmptyRealLocus(QuarticError):
    code = "EMPTY_REAL_LOCUS"


class DegenerateAnalysis(QuarticError):
    code = "DEGENERATE"


class CountMismatch(QuarticError):
    code = "COUNT_MISMATCH"


class InconsistentTopology(QuarticError):
    code = "INCONSISTENT"


class UndecidableReality(QuarticError):
    code = "UNDECIDABLE_REALITY"


@dataclass(frozen=True)
class Quartic:
    """An accepted curve: smooth, compact and with nonempty real locus.

    `bound_x`/`bound_y` bracket the real locus: every real point satisfies
    |x| < bound_x and |y| < bound_y (Cauchy bounds on the tangency
    silhouettes, certified exactly).
    """

    f: BiPoly
    bound_x: Fraction
    bound_y: Fraction


@dataclass(frozen=True)
class ProjLine:
    """A projective line u*x + v*y + w = 0 with complex coefficients,
    normalized to unit norm with the largest component rotated to the
    positive real axis."""

    u: complex
    v: complex
    w: complex
    real: bool

    @staticmethod
    def normalized(u: complex, v: complex, w: complex, real: bool) -> "ProjLine":
        norm = math.sqrt(abs(u) ** 2 + abs(v) ** 2 + abs(w) ** 2)
        if norm == 0:
            raise ValueError("zero line")
        u, v, w = u / norm, v / norm, w / norm
        pivot = max((u, v, w), key=abs)
        phase = pivot / abs(pivot)
        u, v, w = u / phase, v / phase, w / phase
        if real:
            u, v, w = complex(u.real, 0.0), complex(v.real, 0.0), complex(w.real, 0.0)
        return ProjLine(u, v, w, real)

    def conjugate(self) -> "ProjLine":
        return ProjLine.normalized(self.u.conjugate(), self.v.conjugate(),
                                   self.w.conjugate(), self.real)

    def distance(self, other: "ProjLine") -> float:
        d1 = abs(self.u - other.u) + abs(self.v - other.v) + abs(self.w - other.w)
        d2 = abs(self.u + other.u) + abs(self.v + other.v) + abs(self.w + other.w)
        return min(d1, d2)


@dataclass(frozen=True)
class Bitangent:
    """One bitangent line with its two tangency points and classification.

    `degenerate` marks coincident tangency points (a hyperflex tangent);
    those are never totally real and never hull-edge candidates.
    """

    line: ProjLine
    tangency: tuple[complex, complex, complex, complex]  # (x1, y1, x2, y2)
    real_line: bool
    totally_real: bool
    degenerate: bool
    residual: float

    @property
    def tangency_points(self) -> tuple[tuple[complex, complex], tuple[complex, complex]]:
        x1, y1, x2, y2 = self.tangency
        return (x1, y1), (x2, y2)


@dataclass
class QuarticReport:
    """Full analysis record for one curve."""

    s: int
    a: int
    bitangents: list[Bitangent]
    real_lines: int
    T: int
    E: int | None = None
    edge_certs: list = field(default_factory=list)
    avoidance_components: int | None = None
    bound_checks: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# curve validation
# ---------------------------------------------------------------------------

def _elim_y(p: BiPoly, q: BiPoly) -> UniPoly | None:
    """Eliminant of the pair in y: the resultant when both depend on y,
    the y-free factor otherwise; None when the pair shares a component."""
    dp, dq = p.degree_in(1), q.degree_in(1)
    if dp >= 1 and dq >= 1:
        r = resultant(p, q, "y")
        return None if r.is_zero else r
    low = q if dq < 1 else p
    if low.is_zero:
        return None
    return low.coeffs_in(1)[0]


def _shear(f: BiPoly, lam: int) -> BiPoly:
    """Substitute x -> x + lam*y."""
    x = BiPoly.variable(0, f.vars)
    y = BiPoly.variable(1, f.vars)
    sx = x + lam * y
    out = BiPoly.zero(f.vars)
    powx: dict[int, BiPoly] = {0: BiPoly.constant(1, f.vars)}
    for i in range(1, f.degree_in(0) + 1):
        powx[i] = powx[i - 1] * sx
    for (i, j), c in f.terms.items():
        out = out + powx[i] * BiPoly({(0, j): c}, f.vars)
    return out


def _smoothness_gcd(f: BiPoly) -> UniPoly | None:
    """gcd of the three pairwise y-eliminants of (f, f_x, f_y); a constant
    certifies that the affine system has no common solution.  None signals
    a shared component (the curve is not reduced)."""
    fx, fy = f.derivative(0), f.derivative(1)
    elims = []
    for p, q in ((f, fx), (f, fy), (fx, fy)):
        e = _elim_y(p, q)
        if e is None:
            return None
        if not e.is_zero:
            elims.append(e)
    if not elims:
        return None
    g = elims[0]
    for e in elims[1:]:
        g = poly_gcd(g, e)
    return g


def _newton_common_zero(f: BiPoly, starts: list[complex]) -> tuple[float, float] | None:
    """Best-effort real witness of a singular point via Newton on the gradient."""
    fx, fy = f.derivative(0), f.derivative(1)
    fxx, fxy = fx.derivative(0), fx.derivative(1)
    fyx, fyy = fy.derivative(0), fy.derivative(1)
    for s in starts:
        x, y = s.real, s.imag
        ok = False
        for _ in range(60):
            gx = float(fx.evaluate_complex(x, y).real)
            gy = float(fy.evaluate_complex(x, y).real)
            a11 = float(fxx.evaluate_complex(x, y).real)
            a12 = float(fxy.evaluate_complex(x, y).real)
            a21 = float(fyx.evaluate_complex(x, y).real)
            a22 = float(fyy.evaluate_complex(x, y).real)
            det = a11 * a22 - a12 * a21
            if abs(det) < 1e-14:
                break
            dx = (gx * a22 - gy * a12) / det
            dy = (gy * a11 - gx * a21) / det
            x, y = x - dx, y - dy
            if abs(dx) + abs(dy) < 1e-13:
                ok = True
                break
        if ok and abs(f.evaluate_complex(x, y)) < 1e-8:
            return (x, y)
    return None


def check_quartic(f: BiPoly) -> Quartic:
    """Validate a quartic: compact real locus, smooth, nonempty real part.

    Compactness is certified by exact root counting on the leading form;
    smoothness by exact resultant elimination of the gradient system; the
    nonempty real locus by an exact vertical-line sweep between the real
    branches of the tangency silhouette.
    """
    if f.total_degree != 4:
        raise QuarticError(f"expected total degree 4, got {f.total_degree}")

    # (i) compactness: the quartic form has no nontrivial real zero
    lead = f.homogeneous_part(4)
    f04 = lead.terms.get((0, 4), Fraction(0))
    if f04 == 0:
        raise NoncompactCurve("leading form vanishes in the y direction",
                              witness=(0.0, 1.0))
    axis = lead.substitute_line(Fraction(0), Fraction(1))  # F4(x, 1) up to ordering
    # substitute_line maps y -> 0*x + 1, i.e. evaluates F4(x, 1)
    n = count_real_roots_in(axis)
    if n:
        iv = refine(axis, isolate_real_roots(axis)[0], Fraction(1, 10**12))
        t = float(iv.midpoint)
        raise NoncompactCurve("leading form has a real zero", witness=(t, 1.0))
    f40 = lead.terms.get((4, 0), Fraction(0))
    if f40 == 0:
        # cannot happen: a definite quartic form has nonzero extreme coefficients
        raise NoncompactCurve("leading form vanishes in the x direction",
                              witness=(1.0, 0.0))

    # (ii) smoothness via resultant elimination, with shears against
    # accidental abscissa collisions
    g = _smoothness_gcd(f)
    if g is None:
        w = _newton_common_zero(f, [complex(c, s) for c, s in
                                    ((0.5, 0.5), (1.0, 0.0), (0.0, 1.0), (-0.7, 0.3))])
        raise SingularCurve("gradient system shares a component with the curve",
                            witness=w)
    if g.degree > 0:
        for lam in (1, 2, 3):
            gs = _smoothness_gcd(_shear(f, lam))
            if gs is None:
                break
            if gs.degree == 0:
                g = gs
                break
        else:
            gs = g
        if g.degree > 0 and (gs is None or gs.degree > 0):
            seeds = []
            for iv in isolate_real_roots(g)[:4]:
                seeds.append(complex(float(refine(f and g, iv, Fraction(1, 10**8)).midpoint), 0.1))
            w = _newton_common_zero(f, seeds + [complex(0.3, -0.4)])
            raise SingularCurve("curve has a singular point", witness=w)

    # real-locus bounding box from the tangency silhouettes
    wx = resultant(f, f.derivative(1), "y")
    wy = resultant(f, f.derivative(0), "x")
    bound_x = wx.cauchy_bound()
    bound_y = wy.cauchy_bound()

    # (iii) nonempty real locus: sweep vertical lines between silhouette roots
    ivs = [refine(wx, iv, Fraction(1, 1000)) for iv in isolate_real_roots(wx)]
    candidates = []
    for left, right in zip(ivs, ivs[1:]):
        if left.hi < right.lo:
            candidates.append((left.hi + right.lo) / 2)
        else:
            candidates.append(left.hi)
    nonempty = False
    for x0 in candidates:
        sect = f.substitute_x_const(x0)
        if not sect.is_zero and count_real_roots_in(sect) > 0:
            nonempty = True
            break
    if not nonempty:
        raise EmptyRealLocus("no real points found on any vertical sweep line")

    return Quartic(f, bound_x, bound_y)


# ---------------------------------------------------------------------------
# coordinate changes
# ---------------------------------------------------------------------------

def _transform_curve(f: BiPoly, sigma: list[list[int]]) -> BiPoly:
    """Curve of F(sigma * X) dehomogenized at z = 1, for homogenized f."""
    vars = f.vars
    x = BiPoly.variable(0, vars)
    y = BiPoly.variable(1, vars)
    one = BiPoly.constant(1, vars)
    L = [sigma[r][0] * x + sigma[r][1] * y + sigma[r][2] * one for r in range(3)]
    pw = []
    for base in L:
        p = [BiPoly.constant(1, vars)]
        for _ in range(4):
            p.append(p[-1] * base)
        pw.append(p)
    out = BiPoly.zero(vars)
    for (i, j), c in f.terms.items():
        k = 4 - i - j
        out = out + (pw[0][i] * pw[1][j] * pw[2][k]).scalar_mul(c)
    return out


def _matrix_inverse_3x3(m: list[list[int]]) -> list[list[Fraction]]:
    det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
           - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
           + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    if det == 0:
        raise ValueError("singular matrix")
    cof = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            sub = [[m[r][c] for c in range(3) if c != j] for r in range(3) if r != i]
            minor = sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0]
            cof[i][j] = (-1) ** (i + j) * minor
    # adjugate transpose / det
    return [[Fraction(cof[j][i], det) for j in range(3)] for i in range(3)]


def _random_sigma(rng: random.Random, span: int = 3) -> list[list[int]]:
    while True:
        m = [[rng.randint(-span, span) for _ in range(3)] for _ in range(3)]
        det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
               - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
               + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
        if det != 0:
            return m


# ---------------------------------------------------------------------------
# the perfect-square elimination system
# ---------------------------------------------------------------------------

def _restriction_coeffs(f: BiPoly) -> list[BiPoly]:
    """Coefficients c_k(a, b) of x^k in f(x, a x + b), as polynomials in (a, b)."""
    cs: list[dict[tuple[int, int], Fraction]] = [dict() for _ in range(5)]
    for (i, j), c in f.terms.items():
        for k in range(j + 1):
            key = (k, j - k)  # a^k b^(j-k)
            d = cs[i + k]
            d[key] = d.get(key, Fraction(0)) + c * math.comb(j, k)
    return [BiPoly(d, ("a", "b")) for d in cs]


@dataclass
class _Family:
    """Exact data for one line family (nonvertical slopes or verticals)."""

    poly: UniPoly                 # validated squarefree slope polynomial
    disc_num: UniPoly             # sign of this at a root = tangency disc sign
    hyper: UniPoly                # gcd(poly, disc_num): hyperflex slopes
    real_intervals: list[IsolatingInterval]
    real_flags: list[tuple[bool, bool]]   # (totally_real, degenerate) per real root


class _SubresRatio:
    """Evaluates the intercept b = -S0(a)/S1(a) without precision loss.

    The subresultant coefficients routinely reach hundreds of bits, so
    double-precision Horner is useless; real slopes are evaluated exactly
    at their refined rational approximation and complex ones in extended
    precision.
    """

    def __init__(self, S0: UniPoly, S1: UniPoly):
        self.S0 = S0
        self.S1 = S1

    def at_rational(self, a: Fraction) -> Fraction | None:
        denom = self.S1.evaluate(a)
        if denom == 0:
            return None
        return -self.S0.evaluate(a) / denom

    def at_complex(self, a: complex) -> complex | None:
        import mpmath

        with mpmath.workdps(60):
            za = mpmath.mpc(a)
            num = mpmath.mpf(0)
            num = sum((mpmath.mpf(c.numerator) / c.denominator) * za ** i
                      for i, c in enumerate(self.S0.coeffs))
            den = sum((mpmath.mpf(c.numerator) / c.denominator) * za ** i
                      for i, c in enumerate(self.S1.coeffs))
            if den == 0:
                return None
            return complex(-num / den)


def _sign_at_root(numer: UniPoly, vpoly: UniPoly, iv: IsolatingInterval) -> int:
    """Exact sign of numer at the unique root of vpoly in (lo, hi];
    requires the two polynomials to have no common root there."""
    zN, _ = numer.int_coeffs()
    if iv.exact:
        return zp_eval_sign(zN, iv.lo)
    zV, _ = vpoly.int_coeffs()
    chainN = sturm_chain(zN)
    lo, hi = iv.lo, iv.hi
    slo = zp_eval_sign(zV, lo)
    while True:
        if _sturm_count(chainN, lo, hi) == 0:
            s = zp_eval_sign(zN, hi)
            if s == 0:
                raise DegenerateAnalysis("sign query hit an unexpected root")
            return s
        m = (lo + hi) / 2
        sm = zp_eval_sign(zV, m)
        if sm == 0:
            lo = hi = m
            return zp_eval_sign(zN, m)
        if sm == slo:
            lo = m
        else:
            hi = m


def _classify_family(poly: UniPoly, disc_num: UniPoly) -> _Family:
    intervals = [refine(poly, iv, Fraction(1, 10**25))
                 for iv in isolate_real_roots(poly)]
    if disc_num.is_zero:
        # coincident tangency throughout the family: every line is a hyperflex
        flags = [(False, True)] * len(intervals)
        return _Family(poly, disc_num, poly, intervals, flags)
    hyper = poly_gcd(poly, disc_num)
    if hyper.degree < 1:
        hyper = UniPoly.constant(1)
    flags = []
    zH, _ = hyper.int_coeffs()
    chainH = sturm_chain(zH) if hyper.degree >= 1 else None
    for iv in intervals:
        is_hyper = False
        if chainH is not None:
            if iv.exact:
                is_hyper = zp_eval_sign(zH, iv.lo) == 0
            else:
                is_hyper = _sturm_count(chainH, iv.lo, iv.hi) > 0
        if is_hyper:
            flags.append((False, True))
            continue
        s = _sign_at_root(disc_num, poly, iv)
        flags.append((s > 0, False))
    return _Family(poly, disc_num, hyper, intervals, flags)


def _strip_factor(p: UniPoly, factor: UniPoly) -> UniPoly:
    """Divide out every power of `factor` that divides p exactly."""
    if factor.degree < 1:
        return p
    while p.degree >= factor.degree:
        q, r = p.divmod(factor)
        if r.is_zero and not q.is_zero:
            p = q
        else:
            break
    return p


class _RetryCoordinates(Exception):
    """Internal: this coordinate chart is degenerate; pick a new one."""

    def __init__(self, reason: str = ""):
        super().__init__(reason)
        self.reason = reason


def _nonvertical_family(ft: BiPoly) -> tuple[_Family, dict]:
    cs = _restriction_coeffs(ft)
    c4_bp = cs[4]
    if c4_bp.degree_in(1) > 0:
        raise AssertionError("c4 must not depend on the intercept")
    c4 = c4_bp.coeffs_in(1)[0]
    G1 = 8 * c4_bp * c4_bp * cs[1] - 4 * c4_bp * cs[2] * cs[3] + cs[3] ** 3
    G2 = 64 * c4_bp ** 3 * cs[0] - (4 * c4_bp * cs[2] - cs[3] ** 2) ** 2
    if G1.is_zero or G2.is_zero or G1.degree_in(1) < 1 or G2.degree_in(1) < 1:
        raise _RetryCoordinates("degenerate residual system")

    E = resultant(G1, G2, "b")
    if E.is_zero:
        raise _RetryCoordinates("vanishing slope eliminant")
    E = _strip_factor(E, c4)

    g1 = G1.coeffs_in(1)
    g2 = G2.coeffs_in(1)

    # the first subresultant gives the intercept as -S0/S1 at each slope
    try:
        S0, S1 = subresultant_linear(g1, g2, "a")
    except PolynomialError:
        raise _RetryCoordinates("residual system too degenerate in the intercept")
    if S1.is_zero:
        raise _RetryCoordinates("vanishing degree-one subresultant")

    def compose(coeffs: list[UniPoly]) -> UniPoly:
        d = len(coeffs) - 1
        out = UniPoly.zero("a")
        for k, ck in enumerate(coeffs):
            out = out + ck * (-S0) ** k * S1 ** (d - k)
        return out

    NG1 = compose(g1)
    NG2 = compose(g2)
    if NG1.is_zero or NG2.is_zero:
        raise _RetryCoordinates("vanishing validation polynomial")
    V = poly_gcd(poly_gcd(E, NG1), NG2)
    V = V.squarefree_part()
    # ghosts: slopes where the restriction degenerates (leading form root)
    # or where both residuals lose their intercept degree simultaneously
    ghost = poly_gcd(V, c4)
    if ghost.degree >= 1:
        V = V.exact_div(ghost)
    lc_ghost = poly_gcd(g1[-1], g2[-1])
    if lc_ghost.degree >= 1:
        ghost = poly_gcd(V, lc_ghost)
        if ghost.degree >= 1:
            V = V.exact_div(ghost)
    if V.degree < 1:
        raise _RetryCoordinates("empty validated eliminant")
    if poly_gcd(V, S1).degree >= 1:
        # a slope carries two bitangents (or worse); a new chart separates them
        raise _RetryCoordinates("shape position failure")

    # tangency discriminant along the solution curve b = -S0/S1:
    # disc ~ 3 c3^2 - 8 c4 c2, composed and cleared by S1^2
    c3b = cs[3].coeffs_in(1)
    c30 = c3b[0]
    c31 = c3b[1] if len(c3b) > 1 else UniPoly.zero("a")
    c2b = cs[2].coeffs_in(1)
    c20 = c2b[0]
    c21 = c2b[1] if len(c2b) > 1 else UniPoly.zero("a")
    c22 = c2b[2] if len(c2b) > 2 else UniPoly.zero("a")
    N = (3 * (c30 * S1 - c31 * S0) ** 2
         - 8 * c4 * (c22 * S0 ** 2 - c21 * S0 * S1 + c20 * S1 ** 2))

    fam = _classify_family(V, N)
    ctx = {"cs": cs, "c4": c4, "G1": G1, "G2": G2,
           "ratio": _SubresRatio(S0, S1)}
    return fam, ctx


def _vertical_family(ft: BiPoly) -> tuple[_Family | None, dict]:
    ds = ft.coeffs_in(1)
    while len(ds) < 5:
        ds.append(UniPoly.zero("x"))
    d0, d1, d2, d3, d4 = ds
    if d4.degree != 0:
        raise AssertionError("y^4 coefficient must be constant")
    G1v = 8 * d4 * d4 * d1 - 4 * d4 * d2 * d3 + d3 ** 3
    G2v = 64 * d4 ** 3 * d0 - (4 * d4 * d2 - d3 ** 2) ** 2
    ctx = {"ds": ds}
    if G1v.is_zero and G2v.is_zero:
        raise _RetryCoordinates("degenerate vertical system")
    if G1v.is_zero:
        # the odd part of the restriction vanishes identically (curve even
        # in y in this chart); the square condition reduces to G2v alone
        W = G2v
    elif G2v.is_zero:
        W = G1v
    else:
        W = poly_gcd(G1v, G2v)
    if W.degree < 1:
        return None, ctx
    W = W.squarefree_part()
    Nv = 3 * d3 * d3 - 8 * d4 * d2
    fam = _classify_family(W, Nv)
    return fam, ctx


# ---------------------------------------------------------------------------
# numeric line assembly (floats for reporting, flags from the exact engine)
# ---------------------------------------------------------------------------

def _family_roots(fam: _Family, seed_angle: float) -> list[tuple[complex, int]]:
    """All roots of the family polynomial: exact reals by refined interval
    midpoint, non-reals from the float engine; returns (value, real_index)
    pairs where real_index is -1 for non-real roots.

    The float engine is advisory: its real-root count must reproduce the
    exact Sturm count, escalating to extended precision before giving up.
    """
    n_real = len(fam.real_intervals)
    out: list[tuple[complex, int]] = []
    for idx, iv in enumerate(fam.real_intervals):
        out.append((complex(float(iv.midpoint), 0.0), idx))
    if fam.poly.degree > n_real:
        crs = None
        for force_mp in (False, True):
            cand = complex_roots(fam.poly, seed_angle=seed_angle, force_mp=force_mp)
            thr = 1e-7 if not force_mp else 1e-30
            n_float = sum(r.multiplicity for r in cand
                          if abs(r.im) < thr * max(1.0, abs(r.re)))
            if n_float == n_real:
                crs = cand
                break
        if crs is None:
            raise DegenerateAnalysis(
                f"real-root count disagreement at exact count {n_real}")
        pos = [r for r in crs if r.im >= thr * max(1.0, abs(r.re))]
        for r in pos:
            for _ in range(r.multiplicity):
                out.append((r.value, -1))
                out.append((r.value.conjugate(), -1))
    if len(out) != fam.poly.degree:
        raise DegenerateAnalysis("complex root multiset does not match the degree")
    return out


def _polish_pair(G1: BiPoly, G2: BiPoly, a: complex, b: complex) -> tuple[complex, complex]:
    g1a, g1b = G1.derivative(0), G1.derivative(1)
    g2a, g2b = G2.derivative(0), G2.derivative(1)
    for _ in range(40):
        F1 = G1.evaluate_complex(a, b)
        F2 = G2.evaluate_complex(a, b)
        j11 = g1a.evaluate_complex(a, b)
        j12 = g1b.evaluate_complex(a, b)
        j21 = g2a.evaluate_complex(a, b)
        j22 = g2b.evaluate_complex(a, b)
        det = j11 * j22 - j12 * j21
        if det == 0:
            break
        da = (F1 * j22 - F2 * j12) / det
        db = (F2 * j11 - F1 * j21) / det
        a, b = a - da, b - db
        if abs(da) + abs(db) < 1e-15 * (1 + abs(a) + abs(b)):
            break
    return a, b


def _restriction_at(cs: list[BiPoly], a: complex, b: complex) -> list[complex]:
    return [c.evaluate_complex(a, b) for c in cs]


def _square_data(coeffs: list[complex]) -> tuple[float, complex, complex, complex]:
    """Residual of the perfect-square condition and the tangency quadratic.

    coeffs are ascending (c0..c4); returns (residual, p, q, lead) where the
    restriction is lead*(t^2 + p t + q)^2 up to the residual."""
    c0, c1, c2, c3, c4 = coeffs
    if c4 == 0:
        return math.inf, 0j, 0j, 0j
    p = c3 / (2 * c4)
    q = (c2 / c4 - p * p) / 2
    model = [c4 * q * q, 2 * c4 * p * q, c4 * (p * p + 2 * q), c4 * p * 2, c4]
    scale = max(abs(c) for c in coeffs)
    residual = max(abs(m - c) for m, c in zip(model, coeffs)) / (scale or 1.0)
    return residual, p, q, c4


def _tangency_roots(p: complex, q: complex) -> tuple[complex, complex]:
    disc = p * p - 4 * q
    sq = cmath.sqrt(disc)
    return (-p + sq) / 2, (-p - sq) / 2


def bitangents(q: Quartic, seed: int = DEFAULT_SEED) -> list[Bitangent]:
    """All 28 bitangents of an accepted quartic, classified.

    Raises CountMismatch if no random chart yields the full set within the
    retry budget, DegenerateAnalysis if exact and float engines disagree.
    """
    rng = random.Random(seed)
    last_error: Exception | None = None
    for attempt in range(_MAX_COORDINATE_RETRIES):
        sigma = _random_sigma(rng, span=3 + attempt // 2)
        try:
            return _bitangents_in_chart(q, sigma, seed_angle=0.1 + attempt)
        except _RetryCoordinates as exc:
            last_error = exc
            continue
    raise CountMismatch(
        f"no usable coordinate chart after {_MAX_COORDINATE_RETRIES} attempts",
        witness=str(last_error))


def _bitangents_in_chart(q: Quartic, sigma: list[list[int]],
                         seed_angle: float) -> list[Bitangent]:
    ft = _transform_curve(q.f, sigma)
    if ft.terms.get((0, 4), Fraction(0)) == 0:
        raise _RetryCoordinates("chart meets the curve at vertical infinity")
    fam_nv, ctx_nv = _nonvertical_family(ft)
    fam_v, ctx_v = _vertical_family(ft)

    n_nv = fam_nv.poly.degree
    n_v = fam_v.poly.degree if fam_v is not None else 0
    if n_nv + n_v != 28:
        raise _RetryCoordinates(f"found {n_nv} + {n_v} bitangent lines")

    inv_t = _matrix_inverse_3x3(sigma)  # rows of sigma^{-1}; transpose applied below
    sig = [[float(sigma[i][j]) for j in range(3)] for i in range(3)]

    def back_line(u: complex, v: complex, w: complex) -> tuple[complex, complex, complex]:
        # l_old = (sigma^{-1})^T l_new
        out = []
        for i in range(3):
            out.append(sum(complex(float(inv_t[j][i])) * c
                           for j, c in enumerate((u, v, w))))
        return tuple(out)

    def back_point(x: complex, y: complex) -> tuple[complex, complex]:
        vec = (x, y, 1.0 + 0j)
        res = [sum(sig[i][j] * vec[j] for j in range(3)) for i in range(3)]
        if abs(res[2]) < 1e-300:
            return complex(math.inf), complex(math.inf)
        return res[0] / res[2], res[1] / res[2]

    cs = ctx_nv["cs"]
    G1, G2 = ctx_nv["G1"], ctx_nv["G2"]
    ratio = ctx_nv["ratio"]
    out: list[Bitangent] = []

    for val, ridx in _family_roots(fam_nv, seed_angle):
        if ridx >= 0:
            bq = ratio.at_rational(fam_nv.real_intervals[ridx].midpoint)
            if bq is None:
                raise _RetryCoordinates("subresultant vanished at a slope")
            a, b = val, complex(float(bq), 0.0)
        else:
            a = val
            bc = ratio.at_complex(a)
            if bc is None:
                raise _RetryCoordinates("subresultant vanished at a slope")
            b = bc
        a, b = _polish_pair(G1, G2, a, b)
        if ridx >= 0:
            a, b = complex(a.real, 0.0), complex(b.real, 0.0)
        rest = _restriction_at(cs, a, b)
        residual, p, qq, _ = _square_data(rest)
        if not (residual < _RESIDUAL_TOL):
            raise _RetryCoordinates(f"perfect-square residual {residual:.2e}")
        t1, t2 = _tangency_roots(p, qq)
        pts = [(t1, a * t1 + b), (t2, a * t2 + b)]
        real_line = ridx >= 0
        totally_real, degenerate = fam_nv.real_flags[ridx] if ridx >= 0 else (False, False)
        lu, lv, lw = back_line(a, -1.0 + 0j, b)
        (x1, y1), (x2, y2) = (back_point(*pts[0]), back_point(*pts[1]))
        if real_line and totally_real:
            x1, y1 = complex(x1.real, 0.0), complex(y1.real, 0.0)
            x2, y2 = complex(x2.real, 0.0), complex(y2.real, 0.0)
        line = ProjLine.normalized(lu, lv, lw, real_line)
        out.append(Bitangent(line, (x1, y1, x2, y2), real_line,
                             totally_real, degenerate, residual))

    if fam_v is not None:
        ds = ctx_v["ds"]
        for val, ridx in _family_roots(fam_v, seed_angle + 0.31):
            c = val
            rest = [dk.evaluate_complex(c) for dk in ds]
            residual, p, qq, _ = _square_data(rest)
            if not (residual < _RESIDUAL_TOL):
                raise _RetryCoordinates(f"vertical perfect-square residual {residual:.2e}")
            t1, t2 = _tangency_roots(p, qq)
            pts = [(c, t1), (c, t2)]
            real_line = ridx >= 0
            totally_real, degenerate = fam_v.real_flags[ridx] if ridx >= 0 else (False, False)
            lu, lv, lw = back_line(1.0 + 0j, 0j, -c)
            (x1, y1), (x2, y2) = (back_point(*pts[0]), back_point(*pts[1]))
            if real_line and totally_real:
                x1, y1 = complex(x1.real, 0.0), complex(y1.real, 0.0)
                x2, y2 = complex(x2.real, 0.0), complex(y2.real, 0.0)
            line = ProjLine.normalized(lu, lv, lw, real_line)
            out.append(Bitangent(line, (x1, y1, x2, y2), real_line,
                                 totally_real, degenerate, residual))

    # sanity: distinct lines and conjugation closure at the pairing level
    for i in range(len(out)):
        for j in range(i + 1, len(out)):
            if out[i].line.distance(out[j].line) < 1e-9:
                raise _RetryCoordinates("coincident lines after dedup")
    return out


# ---------------------------------------------------------------------------
# classification surface
# ---------------------------------------------------------------------------

_REALITY_EPS = 1e-7


def classify(bt: Bitangent) -> Bitangent:
    """Re-derive the flags of a bitangent from its numeric data.

    The analysis pipeline classifies from exact root bookkeeping; this
    numeric re-check exists for single-line queries and raises when the
    decision falls inside the escalation window instead of guessing.
    """
    line = bt.line
    im_norm = abs(line.u.imag) + abs(line.v.imag) + abs(line.w.imag)
    if 1e-12 < im_norm < _REALITY_EPS:
        raise UndecidableReality("line reality inside the escalation window")
    real_line = im_norm <= 1e-12
    (x1, y1), (x2, y2) = bt.tangency_points
    sep = abs(complex(x1 - x2)) + abs(complex(y1 - y2))
    t_im = max(abs(complex(x1).imag), abs(complex(y1).imag),
               abs(complex(x2).imag), abs(complex(y2).imag))
    scale = max(1.0, abs(complex(x1)), abs(complex(x2)))
    degenerate = sep < 1e-6 * scale
    if not degenerate and t_im < _REALITY_EPS * scale and t_im > 1e-12 * scale:
        raise UndecidableReality("tangency reality inside the escalation window")
    totally_real = real_line and not degenerate and t_im <= 1e-12 * scale
    return replace(bt, real_line=real_line, totally_real=totally_real,
                   degenerate=degenerate)


def count_T(bts: list[Bitangent]) -> int:
    """Number of totally real bitangents (odd theta characteristics whose
    contact divisor is a sum of distinct real points)."""
    return sum(1 for b in bts if b.totally_real)


def count_real_lines(bts: list[Bitangent]) -> int:
    return sum(1 for b in bts if b.real_line)


def infer_topology(real_line_count: int, s: int):
    """Recover the dividing invariant from the real bitangent count:
    a = R/4 - 2^(s-1) + 1 for genus 3."""
    from .thetacount import CurveTopology, TopologyError

    if real_line_count % 4:
        raise InconsistentTopology(
            f"real bitangent count {real_line_count} is not divisible by 4")
    a = real_line_count // 4 - (1 << (s - 1)) + 1
    if a not in (0, 1):
        raise InconsistentTopology(
            f"derived invariant a = {a} is out of range for s = {s}")
    try:
        return CurveTopology(3, s, dividing=(a == 0))
    except TopologyError as exc:
        raise InconsistentTopology(str(exc)) from exc
