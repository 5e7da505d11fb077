"""Univariate root finding: certified real-root isolation over the
rationals (Sturm sequences, exact arithmetic) and simultaneous complex
root finding over floats (Aberth-Ehrlich) with residual reporting.

The real engine is exact and is the authority for any reality-sensitive
decision; the float engine reports residuals and never hides failure.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .exactpoly import (
    PolynomialError,
    UniPoly,
    zp_cauchy_bound,
    zp_deg,
    zp_diff,
    zp_eval_sign,
    zp_norm,
    zp_sqfree,
)


class RootFindingError(RuntimeError):
    """Complex root iteration failed to converge within the cap."""


@dataclass(frozen=True)
class IsolatingInterval:
    """Half-open rational interval (lo, hi] containing exactly one real root.

    When `exact` is set, lo == hi == the root itself.
    """

    lo: Fraction
    hi: Fraction
    exact: bool = False

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2


@dataclass
class ComplexRoot:
    re: float
    im: float
    residual: float
    multiplicity: int = 1

    @property
    def value(self) -> complex:
        return complex(self.re, self.im)


# ---------------------------------------------------------------------------
# Sturm machinery (integer coefficient lists, ascending)
# ---------------------------------------------------------------------------

def _pos_primitive(c: list[int]) -> list[int]:
    """Divide by the positive content only; the sign pattern is preserved."""
    if not c:
        return c
    g = 0
    for ci in c:
        g = math.gcd(g, ci)
        if g == 1:
            return c
    return [ci // g for ci in c]


def _signed_prem(a: list[int], b: list[int]) -> tuple[list[int], int]:
    """Pseudo-remainder of a by b together with the sign of the multiplier."""
    r = list(a)
    db, lb = zp_deg(b), b[-1]
    sign = 1
    while r and zp_deg(r) >= db:
        lr = r[-1]
        r = [ri * lb for ri in r]
        sign *= 1 if lb > 0 else -1
        shift = zp_deg(r) - db
        for i, bi in enumerate(b):
            r[i + shift] -= lr * bi
        r = zp_norm(r)
    return r, sign


def sturm_chain(z: list[int]) -> list[list[int]]:
    """Sturm chain of a squarefree integer polynomial."""
    chain = [list(z), zp_diff(z)]
    while chain[-1] and zp_deg(chain[-1]) > 0:
        r, msign = _signed_prem(chain[-2], chain[-1])
        if not r:
            # non-squarefree input; drop the repeated factor and restart
            return sturm_chain(zp_sqfree(z))
        chain.append(_pos_primitive([-msign * ri for ri in r]))
    return chain


def _variations_at(chain: list[list[int]], q: Fraction) -> int:
    signs = [s for p in chain if (s := zp_eval_sign(p, q)) != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def _variations_at_inf(chain: list[list[int]], positive: bool) -> int:
    signs = []
    for p in chain:
        if not p:
            continue
        s = 1 if p[-1] > 0 else -1
        if not positive and zp_deg(p) % 2 == 1:
            s = -s
        signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a * b < 0)


def _sturm_count(chain: list[list[int]], lo: Fraction | None, hi: Fraction | None) -> int:
    vlo = _variations_at_inf(chain, False) if lo is None else _variations_at(chain, lo)
    vhi = _variations_at_inf(chain, True) if hi is None else _variations_at(chain, hi)
    return vlo - vhi


def count_real_roots_in(p: UniPoly, lo: Fraction | None = None,
                        hi: Fraction | None = None) -> int:
    """Exact number of distinct real roots of p in (lo, hi].

    `None` bounds mean minus/plus infinity.  The count is taken on the
    squarefree part, so multiple roots count once.
    """
    if p.is_zero:
        raise PolynomialError("root counting on the zero polynomial")
    if lo is not None and hi is not None and lo >= hi:
        raise PolynomialError("empty interval")
    z, _ = p.int_coeffs()
    z = zp_sqfree(z)
    if zp_deg(z) < 1:
        return 0
    return _sturm_count(sturm_chain(z), lo, hi)


def _simplest_rational_in(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with smallest denominator strictly inside (lo, hi).

    Standard continued-fraction walk; used to detect rational roots while
    refining a bracket.
    """
    if lo < 0 < hi:
        return Fraction(0)
    if hi <= 0:
        return -_simplest_rational_in(-hi, -lo)
    fl = lo.numerator // lo.denominator
    for cand in (fl, fl + 1):
        if lo < cand < hi:
            return Fraction(cand)
    a = lo - fl  # in [0, 1)
    b = hi - fl
    if a == 0:
        y = b.denominator // b.numerator + 1
        return fl + Fraction(1, y)
    return fl + 1 / _simplest_rational_in(1 / b, 1 / a)


def isolate_real_roots(p: UniPoly) -> list[IsolatingInterval]:
    """Disjoint isolating intervals, one per distinct real root of p."""
    if p.is_zero:
        raise PolynomialError("cannot isolate roots of the zero polynomial")
    z, _ = p.int_coeffs()
    z = zp_sqfree(z)
    if zp_deg(z) < 1:
        return []
    chain = sturm_chain(z)
    bound = zp_cauchy_bound(z)
    out: list[IsolatingInterval] = []

    # non-dyadic fallback split ratios if a midpoint lands on a root
    ratios = (Fraction(1, 2), Fraction(5, 11), Fraction(7, 13), Fraction(9, 17))

    def go(lo: Fraction, hi: Fraction, k: int):
        if k == 0:
            return
        if k == 1:
            out.append(IsolatingInterval(lo, hi))
            return
        for r in ratios:
            m = lo + (hi - lo) * r
            sm = zp_eval_sign(z, m)
            if sm != 0:
                break
        else:
            # midpoint is a root: emit it exactly and recurse around it
            m = lo + (hi - lo) / 2
            out.append(IsolatingInterval(m, m, exact=True))
            w = (hi - lo) / 4
            while _sturm_count(chain, m - w, m + w) > 1:
                w /= 2
            go(lo, m - w, _sturm_count(chain, lo, m - w))
            go(m + w, hi, _sturm_count(chain, m + w, hi))
            return
        kl = _sturm_count(chain, lo, m)
        go(lo, m, kl)
        go(m, hi, k - kl)

    total = _sturm_count(chain, -bound, bound)
    go(-bound, bound, total)
    out.sort(key=lambda iv: iv.lo)
    return out


def refine(p: UniPoly, iv: IsolatingInterval, tol: Fraction) -> IsolatingInterval:
    """Shrink an isolating interval to width <= tol by exact bisection.

    Rational roots are detected on the way (sign change to exactly zero, or
    the simplest rational inside the bracket being a root) and collapse the
    interval to an exact point.
    """
    if iv.exact:
        return iv
    z, _ = p.int_coeffs()
    z = zp_sqfree(z)
    lo, hi = iv.lo, iv.hi
    slo = zp_eval_sign(z, lo)
    if slo == 0:
        return IsolatingInterval(lo, lo, exact=True)
    if zp_eval_sign(z, hi) == 0:
        return IsolatingInterval(hi, hi, exact=True)

    while hi - lo > tol:
        cand = _simplest_rational_in(lo, hi)
        if zp_eval_sign(z, cand) == 0:
            return IsolatingInterval(cand, cand, exact=True)
        m = (lo + hi) / 2
        sm = zp_eval_sign(z, m)
        if sm == 0:
            return IsolatingInterval(m, m, exact=True)
        if sm == slo:
            lo = m
        else:
            hi = m
    cand = _simplest_rational_in(lo, hi)
    if zp_eval_sign(z, cand) == 0:
        return IsolatingInterval(cand, cand, exact=True)
    return IsolatingInterval(lo, hi)


def real_roots_refined(p: UniPoly, tol: Fraction = Fraction(1, 10**20)
                       ) -> list[IsolatingInterval]:
    """Isolate then refine every real root to the requested width."""
    return [refine(p, iv, tol) for iv in isolate_real_roots(p)]


# ---------------------------------------------------------------------------
# Aberth-Ehrlich simultaneous complex root finding
# ---------------------------------------------------------------------------

_ABERTH_MAX_ITER = 400
_CLUSTER_REL = 1e-6


def _poly_scale(coeffs: list[complex], z: complex) -> float:
    az = abs(z)
    return sum(abs(c) * az ** i for i, c in enumerate(coeffs)) or 1.0


def _horner2(coeffs: list[complex], z: complex) -> tuple[complex, complex]:
    p = 0j
    dp = 0j
    for c in reversed(coeffs):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def _aberth_float(coeffs: list[complex], seed_angle: float) -> list[complex] | None:
    n = len(coeffs) - 1
    lc = coeffs[-1]
    mono = [c / lc for c in coeffs]
    radius = 1.0 + max(abs(c) for c in mono[:-1]) if n else 1.0
    radius = min(radius, 1.0 + max(abs(c) ** (1.0 / (n - i)) for i, c in enumerate(mono[:-1])))
    zs = [radius * cmath.exp(2j * math.pi * (k + 0.357) / n + 1j * seed_angle)
          * (1 + 0.05 * math.sin(3.1 * k + seed_angle))
          for k in range(n)]
    for _ in range(_ABERTH_MAX_ITER):
        moved = 0.0
        for i in range(n):
            p, dp = _horner2(mono, zs[i])
            if p == 0:
                continue
            if dp == 0:
                zs[i] += 1e-8 * radius * cmath.exp(1j * (i + seed_angle))
                moved = math.inf
                continue
            newton = p / dp
            s = 0j
            for j in range(n):
                if j != i:
                    d = zs[i] - zs[j]
                    if d == 0:
                        d = 1e-20 * (1 + 1j)
                    s += 1 / d
            denom = 1 - newton * s
            if denom == 0:
                step = newton
            else:
                step = newton / denom
            zs[i] -= step
            moved = max(moved, abs(step) / max(1.0, abs(zs[i])))
        if moved < 1e-15:
            return zs
    return zs  # caller checks residuals


def _aberth_mp(coeffs: list[complex], dps: int = 50) -> list[complex]:
    with mpmath.workdps(dps):
        cs = [mpmath.mpc(c) for c in coeffs]
        try:
            roots = mpmath.polyroots(list(reversed(cs)), maxsteps=200, extraprec=120)
        except mpmath.libmp.libhyper.NoConvergence as exc:
            raise RootFindingError("high-precision root finding did not converge") from exc
        return [complex(r) for r in roots]


def complex_roots(p: UniPoly, tol: float = 1e-10, seed_angle: float = 0.0,
                  force_mp: bool = False) -> list[ComplexRoot]:
    """All complex roots with multiplicity estimates and residuals.

    Simultaneous Aberth-Ehrlich iteration in double precision, escalated to
    high-precision arithmetic when residuals exceed `tol` relative to the
    coefficient scale (or immediately with `force_mp`).  Failure to
    converge raises; it is never silent.
    """
    if p.degree < 1:
        raise PolynomialError("need degree >= 1 for complex roots")
    # exact deflation of roots at the origin
    coeffs = list(p.coeffs)
    nzero = 0
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
        nzero += 1
    scale_f = max(abs(c) for c in coeffs)
    cf = [complex(c / scale_f) for c in coeffs]

    if force_mp:
        zs = None
    else:
        zs = _aberth_float(cf, seed_angle) if len(cf) > 1 else []
    roots: list[complex]
    if zs is None:
        roots = []
    else:
        roots = zs
    bad = not roots and len(cf) > 1
    if roots:
        worst = max(abs(_horner2(cf, z)[0]) / _poly_scale(cf, z) for z in roots)
        bad = worst > max(tol, 1e-11)
    if bad:
        roots = _aberth_mp(cf)
        worst = max(abs(_horner2(cf, z)[0]) / _poly_scale(cf, z) for z in roots)
        if worst > max(tol, 1e-9):
            raise RootFindingError(
                f"root residual {worst:.3e} exceeds tolerance {tol:.3e}")

    # cluster nearby roots into multiplicity estimates
    mag = max([abs(z) for z in roots], default=1.0) or 1.0
    used = [False] * len(roots)
    out: list[ComplexRoot] = []
    for i, zi in enumerate(roots):
        if used[i]:
            continue
        cluster = [zi]
        used[i] = True
        for j in range(i + 1, len(roots)):
            if not used[j] and abs(roots[j] - zi) < _CLUSTER_REL * mag:
                cluster.append(roots[j])
                used[j] = True
        center = sum(cluster) / len(cluster)
        res = abs(_horner2(cf, center)[0]) / _poly_scale(cf, center)
        out.append(ComplexRoot(center.real, center.imag, res, len(cluster)))
    if nzero:
        out.append(ComplexRoot(0.0, 0.0, 0.0, nzero))
    out.sort(key=lambda r: (r.re, r.im))
    return out
