"""Exact rational polynomial arithmetic.

Univariate and bivariate polynomials over arbitrary-precision rationals,
with parsing, resultants and discriminants.  Everything here is exact;
floating point never enters.  Coefficients are `fractions.Fraction`, so
reduction and positive denominators come for free.

Internally there is a fast lane for integer-coefficient univariate
polynomials (plain ``list[int]``, ascending degree) used by the gcd,
squarefree and Sturm machinery; the public classes wrap it.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[int, Fraction]

# Total-degree guard for bivariate results: elimination gone wrong tends to
# blow past this long before exhausting memory.
MAX_TOTAL_DEGREE = 64


class PolynomialError(ValueError):
    """Invalid polynomial operation (zero input, bad degrees, overflow)."""


class ParseError(PolynomialError):
    """Syntax error in polynomial text, with the offending position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def _as_fraction(v: RationalLike) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


# ---------------------------------------------------------------------------
# integer-coefficient fast lane (ascending coefficient lists)
# ---------------------------------------------------------------------------

def zp_norm(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def zp_deg(c: Sequence[int]) -> int:
    return len(c) - 1


def zp_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return zp_norm(out)


def zp_sub(a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = max(len(a), len(b))
    out = [0] * n
    for i, ai in enumerate(a):
        out[i] = ai
    for i, bi in enumerate(b):
        out[i] -= bi
    return zp_norm(out)


def zp_scale(a: Sequence[int], s: int) -> list[int]:
    return zp_norm([ai * s for ai in a]) if s else []


def zp_content(a: Sequence[int]) -> int:
    g = 0
    for ai in a:
        g = math.gcd(g, ai)
        if g == 1:
            break
    return g


def zp_primitive(a: Sequence[int]) -> list[int]:
    if not a:
        return []
    g = zp_content(a)
    if a[-1] < 0:
        g = -g
    return [ai // g for ai in a]


def zp_prem(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Pseudo-remainder: lc(b)^(da-db+1) * a mod b, exact in Z[x]."""
    if not b:
        raise PolynomialError("pseudo-division by zero polynomial")
    r = list(a)
    db, lb = zp_deg(b), b[-1]
    while zp_deg(r) >= db and r:
        dr = zp_deg(r)
        lr = r[-1]
        r = [ri * lb for ri in r]
        shift = dr - db
        for i, bi in enumerate(b):
            r[i + shift] -= lr * bi
        r = zp_norm(r)
    return r


def zp_gcd(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Primitive gcd in Z[x] via a primitive remainder sequence."""
    A, B = zp_primitive(list(a)), zp_primitive(list(b))
    if not A:
        return B
    if not B:
        return A
    if zp_deg(A) < zp_deg(B):
        A, B = B, A
    while B:
        R = zp_primitive(zp_prem(A, B))
        A, B = B, R
    return zp_primitive(A)


def zp_diff(a: Sequence[int]) -> list[int]:
    return zp_norm([i * a[i] for i in range(1, len(a))])


def zp_divexact(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Exact division in Q[x] for inputs known divisible; result in Z[x] when it is."""
    if not b:
        raise PolynomialError("division by zero polynomial")
    r = [Fraction(ai) for ai in a]
    q = [Fraction(0)] * (len(a) - len(b) + 1) if len(a) >= len(b) else []
    db, lb = zp_deg(b), b[-1]
    while r and len(r) - 1 >= db:
        c = r[-1] / lb
        shift = len(r) - 1 - db
        q[shift] = c
        for i, bi in enumerate(b):
            r[i + shift] -= c * bi
        while r and r[-1] == 0:
            r.pop()
    if any(r):
        raise PolynomialError("inexact polynomial division")
    out = []
    for c in q:
        if c.denominator != 1:
            raise PolynomialError("exact division left the integer ring")
        out.append(c.numerator)
    return zp_norm(out)


def zp_sqfree(a: Sequence[int]) -> list[int]:
    """Squarefree part: primitive a / gcd(a, a')."""
    A = zp_primitive(list(a))
    if zp_deg(A) < 1:
        return A
    g = zp_gcd(A, zp_diff(A))
    if zp_deg(g) == 0:
        return A
    return zp_primitive(zp_divexact(A, g))


def zp_eval_sign(a: Sequence[int], q: Fraction) -> int:
    """Exact sign of a(q) at a rational point, staying in Z.

    Uses homogeneous Horner: sign of sum a_i p^i s^(n-i) for q = p/s.
    """
    if not a:
        return 0
    p, s = q.numerator, q.denominator
    acc = 0
    sp = 1
    for i in range(len(a) - 1, -1, -1):
        acc = acc * p + a[i] * sp
        sp *= s
    return (acc > 0) - (acc < 0)


def zp_eval_frac(a: Sequence[int], q: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * q + c
    return acc


def zp_cauchy_bound(a: Sequence[int]) -> Fraction:
    """All real roots lie strictly inside [-B, B]."""
    if zp_deg(a) < 1:
        return Fraction(1)
    lc = abs(a[-1])
    m = max(abs(c) for c in a[:-1]) if len(a) > 1 else 0
    return 1 + Fraction(m, lc)


# ---------------------------------------------------------------------------
# univariate polynomials over Q
# ---------------------------------------------------------------------------

class UniPoly:
    """Univariate polynomial with Fraction coefficients, ascending degree.

    Immutable; the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[RationalLike], var: str = "x"):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.var = var

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls, var: str = "x") -> "UniPoly":
        return cls((), var)

    @classmethod
    def constant(cls, c: RationalLike, var: str = "x") -> "UniPoly":
        return cls((c,), var)

    @classmethod
    def variable(cls, var: str = "x") -> "UniPoly":
        return cls((0, 1), var)

    # -- structure ---------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise PolynomialError("leading coefficient of zero polynomial")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return (isinstance(other, UniPoly) and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPoly({self.to_str()!r})"

    def to_str(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                pv = self.var if i == 1 else f"{self.var}^{i}"
                body = pv if mag == 1 else f"{mag}*{pv}"
            parts.append(("-" if c < 0 else "+", body))
        sign0, body0 = parts[0]
        out = ("-" if sign0 == "-" else "") + body0
        for s, b in parts[1:]:
            out += f" {s} {b}"
        return out

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly.constant(other, self.var)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = max(len(self.coeffs), len(o.coeffs))
        out = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            out[i] += c
        for i, c in enumerate(o.coeffs):
            out[i] += c
        return UniPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        o = self._coerce(other)
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self.coeffs or not o.coeffs:
            return UniPoly.zero(self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise PolynomialError("negative polynomial power")
        out = UniPoly.constant(1, self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derivative(self) -> "UniPoly":
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def evaluate(self, v: RationalLike) -> Fraction:
        q = _as_fraction(v)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def evaluate_complex(self, z: complex) -> complex:
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + complex(c)
        return acc

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        """Quotient and remainder over Q."""
        if other.is_zero:
            raise PolynomialError("division by zero polynomial")
        r = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(r) - len(other.coeffs) + 1)
        d, lb = other.degree, other.lc
        while len(r) - 1 >= d and r:
            c = r[-1] / lb
            shift = len(r) - 1 - d
            q[shift] = c
            for i, bi in enumerate(other.coeffs):
                r[i + shift] -= c * bi
            while r and r[-1] == 0:
                r.pop()
        return UniPoly(q, self.var), UniPoly(r, self.var)

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise PolynomialError("inexact polynomial division")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        return UniPoly([c / self.lc for c in self.coeffs], self.var)

    # -- integer fast lane bridge -------------------------------------------
    def int_coeffs(self) -> tuple[list[int], int]:
        """Return (k * self as int list, k) for the smallest positive k clearing denominators."""
        if not self.coeffs:
            return [], 1
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return [int(c * den) for c in self.coeffs], den

    @classmethod
    def from_int_coeffs(cls, coeffs: Sequence[int], var: str = "x") -> "UniPoly":
        return cls([Fraction(c) for c in coeffs], var)

    def squarefree_part(self) -> "UniPoly":
        """Primitive squarefree part (positive leading coefficient)."""
        z, _ = self.int_coeffs()
        return UniPoly.from_int_coeffs(zp_sqfree(z), self.var)

    def cauchy_bound(self) -> Fraction:
        z, _ = self.int_coeffs()
        return zp_cauchy_bound(z)


def poly_gcd(p: UniPoly, q: UniPoly) -> UniPoly:
    """Primitive gcd over Q[x] (positive leading coefficient, 1 if coprime)."""
    a, _ = p.int_coeffs()
    b, _ = q.int_coeffs()
    return UniPoly.from_int_coeffs(zp_gcd(a, b), p.var if not p.is_zero else q.var)


# ---------------------------------------------------------------------------
# bivariate polynomials over Q
# ---------------------------------------------------------------------------

class BiPoly:
    """Sparse bivariate polynomial: map (i, j) -> nonzero Fraction."""

    __slots__ = ("terms", "vars")

    def __init__(self, terms: dict[tuple[int, int], RationalLike],
                 vars: tuple[str, str] = ("x", "y")):
        tidy: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in terms.items():
            fc = _as_fraction(c)
            if fc:
                if i < 0 or j < 0:
                    raise PolynomialError("negative exponent")
                tidy[(i, j)] = fc
        self.terms = tidy
        self.vars = vars
        if tidy and self.total_degree > MAX_TOTAL_DEGREE:
            raise PolynomialError(
                f"total degree {self.total_degree} exceeds cap {MAX_TOTAL_DEGREE}")

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, vars: tuple[str, str] = ("x", "y")) -> "BiPoly":
        return cls({}, vars)

    @classmethod
    def constant(cls, c: RationalLike, vars: tuple[str, str] = ("x", "y")) -> "BiPoly":
        return cls({(0, 0): c}, vars)

    @classmethod
    def variable(cls, which: int, vars: tuple[str, str] = ("x", "y")) -> "BiPoly":
        key = (1, 0) if which == 0 else (0, 1)
        return cls({key: 1}, vars)

    # -- structure -----------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(i + j for i, j in self.terms)

    def degree_in(self, which: int) -> int:
        if not self.terms:
            return -1
        return max(k[which] for k in self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, BiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"BiPoly({self.to_str()!r})"

    # -- arithmetic -----------------------------------------------------------
    def _coerce(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly.constant(other, self.vars)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return BiPoly(out, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        o = self._coerce(other)
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in o.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, Fraction(0)) + c1 * c2
        return BiPoly(out, self.vars)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise PolynomialError("negative polynomial power")
        out = BiPoly.constant(1, self.vars)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scalar_mul(self, s: RationalLike) -> "BiPoly":
        fs = _as_fraction(s)
        return BiPoly({k: c * fs for k, c in self.terms.items()}, self.vars)

    def derivative(self, which: int) -> "BiPoly":
        out: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in self.terms.items():
            if which == 0 and i > 0:
                out[(i - 1, j)] = out.get((i - 1, j), Fraction(0)) + i * c
            elif which == 1 and j > 0:
                out[(i, j - 1)] = out.get((i, j - 1), Fraction(0)) + j * c
        return BiPoly(out, self.vars)

    # -- evaluation / restriction ----------------------------------------------
    def evaluate(self, x: RationalLike, y: RationalLike) -> Fraction:
        qx, qy = _as_fraction(x), _as_fraction(y)
        acc = Fraction(0)
        for (i, j), c in self.terms.items():
            acc += c * qx ** i * qy ** j
        return acc

    def evaluate_complex(self, x: complex, y: complex) -> complex:
        acc = 0j
        for (i, j), c in self.terms.items():
            acc += complex(c) * x ** i * y ** j
        return acc

    def coeffs_in(self, which: int) -> list[UniPoly]:
        """Coefficients as polynomials in the other variable, ascending in `which`."""
        d = self.degree_in(which)
        if d < 0:
            return []
        other = 1 - which
        buckets: list[dict[int, Fraction]] = [dict() for _ in range(d + 1)]
        for k, c in self.terms.items():
            buckets[k[which]][k[other]] = c
        out = []
        ovar = self.vars[other]
        for bucket in buckets:
            if bucket:
                n = max(bucket) + 1
                cs = [bucket.get(i, Fraction(0)) for i in range(n)]
                out.append(UniPoly(cs, ovar))
            else:
                out.append(UniPoly.zero(ovar))
        return out

    def substitute_line(self, a: RationalLike, b: RationalLike) -> UniPoly:
        """Restrict along y = a*x + b; returns a univariate polynomial in x."""
        fa, fb = _as_fraction(a), _as_fraction(b)
        deg = max(0, self.total_degree)
        out = [Fraction(0)] * (deg + 1)
        for (i, j), c in self.terms.items():
            # (a x + b)^j expanded via binomials
            for k in range(j + 1):
                out[i + k] += c * math.comb(j, k) * fa ** k * fb ** (j - k)
        return UniPoly(out, self.vars[0])

    def substitute_x_const(self, c: RationalLike) -> UniPoly:
        """Restrict along x = c; returns a univariate polynomial in y."""
        fc = _as_fraction(c)
        d = self.degree_in(1)
        out = [Fraction(0)] * (d + 1)
        for (i, j), coef in self.terms.items():
            out[j] += coef * fc ** i
        return UniPoly(out, self.vars[1])

    def homogeneous_part(self, k: int) -> "BiPoly":
        return BiPoly({key: c for key, c in self.terms.items()
                       if key[0] + key[1] == k}, self.vars)

    # -- printing ---------------------------------------------------------------
    def to_str(self) -> str:
        if not self.terms:
            return "0"
        vx, vy = self.vars

        def fmt(key: tuple[int, int], c: Fraction) -> tuple[str, str]:
            i, j = key
            factors = []
            if abs(c) != 1 or (i == 0 and j == 0):
                factors.append(str(abs(c)))
            if i:
                factors.append(vx if i == 1 else f"{vx}^{i}")
            if j:
                factors.append(vy if j == 1 else f"{vy}^{j}")
            return ("-" if c < 0 else "+", "*".join(factors))

        keys = sorted(self.terms, key=lambda k: (k[0] + k[1], -k[0]))
        parts = [fmt(k, self.terms[k]) for k in keys]
        sign0, body0 = parts[0]
        out = ("-" if sign0 == "-" else "") + body0
        for s, b in parts[1:]:
            out += f" {s} {b}"
        return out


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def parse_poly(text: str, vars: tuple[str, str] = ("x", "y")) -> BiPoly:
    """Parse polynomial text into a BiPoly.

    Grammar: sums of '*'-separated factors, each a rational constant,
    a variable, a parenthesized expression, optionally raised by '^' to a
    nonnegative integer.  '/' is only allowed between integer literals.
    Implicit multiplication is rejected.
    """
    vx, vy = vars
    pos = 0
    n = len(text)

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def peek() -> str:
        skip_ws()
        return text[pos] if pos < n else ""

    def read_uint() -> int:
        nonlocal pos
        skip_ws()
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if pos == start:
            raise ParseError("expected an integer", start)
        return int(text[start:pos])

    def parse_rational(allow_sign: bool) -> Fraction:
        nonlocal pos
        skip_ws()
        start = pos
        sign = 1
        if allow_sign and pos < n and text[pos] in "+-":
            if text[pos] == "-":
                sign = -1
            pos += 1
            skip_ws()
        if pos >= n or not text[pos].isdigit():
            raise ParseError("expected digits", pos)
        num = read_uint()
        skip_ws()
        if pos < n and text[pos] == "/":
            pos += 1
            skip_ws()
            if pos >= n or not text[pos].isdigit():
                raise ParseError("division by a non-constant", pos)
            den = read_uint()
            if den == 0:
                raise ParseError("zero denominator", start)
            return Fraction(sign * num, den)
        return Fraction(sign * num)

    def parse_base() -> BiPoly:
        nonlocal pos
        ch = peek()
        if ch == "":
            raise ParseError("unexpected end of input", pos)
        if ch == "(":
            pos += 1
            e = parse_expr()
            if peek() != ")":
                raise ParseError("expected ')'", pos)
            pos += 1
            return e
        if ch == vx:
            pos += 1
            return BiPoly.variable(0, vars)
        if ch == vy:
            pos += 1
            return BiPoly.variable(1, vars)
        if ch.isdigit() or ch in "+-":
            return BiPoly.constant(parse_rational(allow_sign=ch in "+-"), vars)
        raise ParseError(f"unexpected character {ch!r}", pos)

    def parse_factor() -> BiPoly:
        nonlocal pos
        base = parse_base()
        if peek() == "^":
            pos += 1
            skip_ws()
            if pos < n and text[pos] in "+-":
                raise ParseError("non-integer exponent", pos)
            if pos >= n or not text[pos].isdigit():
                raise ParseError("non-integer exponent", pos)
            e = read_uint()
            base = base ** e
        return base

    def parse_term() -> BiPoly:
        nonlocal pos
        out = parse_factor()
        while peek() == "*":
            pos += 1
            out = out * parse_factor()
        # implicit multiplication like "2x" is a syntax error
        nxt = peek()
        if nxt and nxt not in "+-*^)/":
            raise ParseError("implicit multiplication is not allowed", pos)
        return out

    def parse_expr() -> BiPoly:
        nonlocal pos
        skip_ws()
        out = parse_term()
        while True:
            ch = peek()
            if ch == "+":
                pos += 1
                out = out + parse_term()
            elif ch == "-":
                pos += 1
                skip_ws()
                if pos < n and (text[pos].isdigit() or text[pos] in f"{vx}{vy}("):
                    out = out - parse_term()
                else:
                    raise ParseError("expected a term after '-'", pos)
            else:
                return out

    result = parse_expr()
    skip_ws()
    if pos != n:
        raise ParseError(f"unexpected trailing input {text[pos]!r}", pos)
    return result


# ---------------------------------------------------------------------------
# resultants and discriminants
# ---------------------------------------------------------------------------

def _bareiss_det_unipoly(M: list[list[UniPoly]], var: str) -> UniPoly:
    """Fraction-free Bareiss determinant for a matrix of polynomials."""
    n = len(M)
    if n == 0:
        return UniPoly.constant(1, var)
    sign = 1
    prev = UniPoly.constant(1, var)
    M = [row[:] for row in M]
    for k in range(n - 1):
        if M[k][k].is_zero:
            for r in range(k + 1, n):
                if not M[r][k].is_zero:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return UniPoly.zero(var)
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]).exact_div(prev)
            M[i][k] = UniPoly.zero(var)
        prev = pivot
    out = M[n - 1][n - 1]
    return -out if sign < 0 else out


def sylvester_matrix(pc: list[UniPoly], qc: list[UniPoly], var: str) -> list[list[UniPoly]]:
    """Sylvester matrix from ascending coefficient lists in the eliminated variable."""
    m, k = len(pc) - 1, len(qc) - 1
    size = m + k
    zero = UniPoly.zero(var)
    M = [[zero] * size for _ in range(size)]
    prow = list(reversed(pc))
    qrow = list(reversed(qc))
    for r in range(k):
        for c, v in enumerate(prow):
            M[r][r + c] = v
    for r in range(m):
        for c, v in enumerate(qrow):
            M[k + r][r + c] = v
    return M


def subresultant_prs(pc: list[UniPoly], qc: list[UniPoly], var: str) -> list[list[UniPoly]]:
    """Subresultant polynomial remainder sequence.

    Inputs and outputs are polynomials in the eliminated variable given as
    ascending lists of UniPoly coefficients.  The sequence starts with the
    inputs and ends with the last nonzero remainder; intermediate growth is
    controlled by the standard g/h division.
    """

    def deg(p: list[UniPoly]) -> int:
        return len(p) - 1

    def lc(p: list[UniPoly]) -> UniPoly:
        return p[-1]

    def prem(a: list[UniPoly], b: list[UniPoly]) -> list[UniPoly]:
        r = a[:]
        db, lb = deg(b), lc(b)
        while r and deg(r) >= db:
            lr = r[-1]
            r = [ri * lb for ri in r]
            shift = deg(r) - db
            for i, bi in enumerate(b):
                r[i + shift] = r[i + shift] - lr * bi
            while r and r[-1].is_zero:
                r.pop()
        return r

    one = UniPoly.constant(1, var)
    A, B = pc[:], qc[:]
    if deg(A) < deg(B):
        A, B = B, A
    seq = [A, B]
    g, h = one, one
    while True:
        delta = deg(A) - deg(B)
        R = prem(A, B)
        if not R:
            break
        denom = g * h ** delta
        R = [c.exact_div(denom) for c in R]
        seq.append(R)
        A, B = B, R
        g = lc(A)
        if delta == 0:
            # h unchanged by a degree-preserving step
            pass
        elif delta == 1:
            h = g
        else:
            h = (g ** delta).exact_div(h ** (delta - 1))
        if deg(B) == 0:
            break
    return seq


def subresultant_linear(pc: list[UniPoly], qc: list[UniPoly], var: str
                        ) -> tuple[UniPoly, UniPoly]:
    """Constant and linear coefficients (S0, S1) of the first subresultant.

    Computed as determinant polynomials of the Sylvester-type matrix, so the
    result specializes correctly: at any value of the surviving variable
    where the resultant vanishes and S1 does not, the unique common root of
    the input pair in the eliminated variable equals -S0/S1.
    """
    m, n = len(pc) - 1, len(qc) - 1
    if m < 2 or n < 2:
        raise PolynomialError("first subresultant needs both degrees >= 2")
    size = m + n - 2
    width = m + n - 1
    zero = UniPoly.zero(var)
    rows: list[list[UniPoly]] = []
    for t in range(n - 2, -1, -1):
        row = [zero] * width
        for i, v in enumerate(pc):
            row[m + n - 2 - i - t] = v
        rows.append(row)
    for t in range(m - 2, -1, -1):
        row = [zero] * width
        for i, v in enumerate(qc):
            row[m + n - 2 - i - t] = v
        rows.append(row)
    shared = [r[: size - 1] for r in rows]
    s1 = _bareiss_det_unipoly([sh + [rows[i][width - 2]] for i, sh in enumerate(shared)], var)
    s0 = _bareiss_det_unipoly([sh + [rows[i][width - 1]] for i, sh in enumerate(shared)], var)
    return s0, s1


def _resultant_from_lists(pc: list[UniPoly], qc: list[UniPoly], var: str,
                          prs_threshold: int = 12) -> UniPoly:
    m, k = len(pc) - 1, len(qc) - 1
    if m == 0:
        return pc[0] ** k
    if k == 0:
        return qc[0] ** m
    if max(m, k) <= prs_threshold:
        return _bareiss_det_unipoly(sylvester_matrix(pc, qc, var), var)
    return _resultant_via_prs(pc, qc, var)


def _resultant_via_prs(pc: list[UniPoly], qc: list[UniPoly], var: str) -> UniPoly:
    """Resultant by pseudo-division chain, tracked exactly.

    Uses Res(A,B) = (-1)^(da*db) * lc(B)^(da - dr - (d+1) db) * Res(B, R)
    where R = prem(A, B) with multiplier lc(B)^(d+1); negative powers are
    collected into a denominator and divided out at the end.
    """

    def deg(p): return len(p) - 1

    def prem(a, b):
        r = a[:]
        db, lb = deg(b), b[-1]
        while r and deg(r) >= db:
            lr = r[-1]
            r = [ri * lb for ri in r]
            shift = deg(r) - db
            for i, bi in enumerate(b):
                r[i + shift] = r[i + shift] - lr * bi
            while r and r[-1].is_zero:
                r.pop()
        return r

    one = UniPoly.constant(1, var)
    num, den = one, one
    sign = 1
    A, B = pc[:], qc[:]
    while True:
        da, db = deg(A), deg(B)
        if db == 0:
            num = num * B[0] ** da
            break
        R = prem(A, B)
        d = da - db
        if not R:
            return UniPoly.zero(var)
        dr = deg(R)
        if (da * db) % 2:
            sign = -sign
        e = da - dr - (d + 1) * db
        if e >= 0:
            num = num * B[-1] ** e
        else:
            den = den * B[-1] ** (-e)
        A, B = B, R
    out = num.exact_div(den)
    return -out if sign < 0 else out


def resultant(p: BiPoly, q: BiPoly, eliminate: str) -> UniPoly:
    """Exact resultant of two bivariate polynomials w.r.t. one variable.

    Both inputs must be nonzero with positive degree in the eliminated
    variable.  The result is a univariate polynomial in the surviving
    variable.
    """
    if p.is_zero or q.is_zero:
        raise PolynomialError("resultant of a zero polynomial")
    if eliminate not in p.vars:
        raise PolynomialError(f"unknown variable {eliminate!r}")
    which = p.vars.index(eliminate)
    if p.degree_in(which) < 1 or q.degree_in(which) < 1:
        raise PolynomialError("eliminated variable must appear with positive degree")
    survivor = p.vars[1 - which]
    return _resultant_from_lists(p.coeffs_in(which), q.coeffs_in(which), survivor)


def resultant_uni(p: UniPoly, q: UniPoly) -> Fraction:
    """Resultant of two univariate polynomials (a rational number)."""
    if p.is_zero or q.is_zero:
        raise PolynomialError("resultant of a zero polynomial")
    pc = [UniPoly.constant(c, "_") for c in p.coeffs]
    qc = [UniPoly.constant(c, "_") for c in q.coeffs]
    r = _resultant_from_lists(pc, qc, "_")
    return r.coeffs[0] if r.coeffs else Fraction(0)


def discriminant(p: UniPoly) -> Fraction:
    """Discriminant: (-1)^(n(n-1)/2) Res(p, p') / lc(p); zero iff p has a repeated root."""
    n = p.degree
    if n < 1:
        raise PolynomialError("discriminant of a constant polynomial")
    r = resultant_uni(p, p.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * r / p.lc
