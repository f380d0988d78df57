"""Dense univariate polynomials over the rationals.

Coefficients are stored lowest degree first, trailing zeros stripped, so
degree == len(coeffs) - 1 for nonzero polynomials and the zero polynomial
has an empty coefficient tuple.

The sign-critical kernels (Sturm chains, gcd, pseudo-remainders) run on
primitive integer coefficient lists; rescaling a polynomial by a positive
rational never changes any sign pattern, which is the only fact the
certified pipeline relies on.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Sequence

from .errors import InvalidInput
from .rationals import QI, Interval, rat, sign


class UPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = [rat(c) if not isinstance(c, Fraction) else c for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "UPoly":
        return UPoly(())

    @staticmethod
    def const(c) -> "UPoly":
        return UPoly((rat(c),))

    @staticmethod
    def x() -> "UPoly":
        return UPoly((0, 1))

    @staticmethod
    def monomial(k: int, c=1) -> "UPoly":
        return UPoly((0,) * k + (rat(c),))

    # -- structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero:
            return "UPoly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*x^{k}" if k else f"{c}")
        return "UPoly(" + " + ".join(terms) + ")"

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other) -> "UPoly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __sub__(self, other) -> "UPoly":
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UPoly([self[k] - other[k] for k in range(n)])

    def __rsub__(self, other) -> "UPoly":
        return _as_poly(other) - self

    def __neg__(self) -> "UPoly":
        return UPoly([-c for c in self.coeffs])

    def __mul__(self, other) -> "UPoly":
        if isinstance(other, (int, Fraction)):
            return UPoly([c * other for c in self.coeffs])
        other = _as_poly(other)
        if self.is_zero or other.is_zero:
            return UPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UPoly":
        if n < 0:
            raise InvalidInput("negative polynomial power")
        result = UPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: "UPoly") -> tuple["UPoly", "UPoly"]:
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        q = [Fraction(0)] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        r = list(self.coeffs)
        d, l = other.degree, other.lc
        while len(r) - 1 >= d and any(r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < d:
                break
            k = len(r) - 1 - d
            c = r[-1] / l
            q[k] = c
            for i in range(d + 1):
                r[k + i] -= c * other.coeffs[i]
        return UPoly(q), UPoly(r)

    def __floordiv__(self, other: "UPoly") -> "UPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "UPoly") -> "UPoly":
        return self.divmod(other)[1]

    def exact_div(self, other: "UPoly") -> "UPoly":
        q, r = self.divmod(other)
        if not r.is_zero:
            raise InvalidInput("inexact polynomial division")
        return q

    def derivative(self) -> "UPoly":
        return UPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    # -- evaluation ---------------------------------------------------

    def __call__(self, x):
        """Horner evaluation at a Fraction, QI, Interval or UPoly."""
        if isinstance(x, Interval):
            return self.eval_interval(x)
        if self.is_zero:
            return QI.of(0) if isinstance(x, QI) else Fraction(0)
        acc = self.coeffs[-1] if not isinstance(x, (QI, UPoly)) else None
        if acc is None:
            acc = QI.of(self.coeffs[-1]) if isinstance(x, QI) else UPoly.const(self.coeffs[-1])
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def eval_interval(self, iv: Interval) -> Interval:
        acc = Interval.point(0)
        for c in reversed(self.coeffs):
            acc = acc * iv + Interval.point(c)
        return acc

    def compose(self, inner: "UPoly") -> "UPoly":
        acc = UPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + UPoly.const(c)
        return acc

    def reversed_coeffs(self, degree: int | None = None) -> "UPoly":
        """Coefficients reversed relative to a nominal degree (t -> 1/t)."""
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise InvalidInput("nominal degree below actual degree")
        return UPoly([self[d - k] for k in range(d + 1)])

    # -- integer normal form -------------------------------------------

    def int_primitive(self) -> list[int]:
        """Integer coefficients of self scaled by a positive rational (primitive)."""
        if self.is_zero:
            return []
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        return [v // g for v in ints]

    def primitive(self) -> "UPoly":
        return UPoly(self.int_primitive())

    def monic(self) -> "UPoly":
        if self.is_zero:
            return self
        return self * (1 / self.lc)

    def cauchy_root_bound(self) -> Fraction:
        """B with every real root in (-B, B), strict."""
        if self.degree < 1:
            return Fraction(1)
        l = abs(self.lc)
        m = max(abs(c) for c in self.coeffs[:-1])
        return Fraction(1) + m / l + 1


def _as_poly(value) -> UPoly:
    if isinstance(value, UPoly):
        return value
    return UPoly.const(rat(value))


# -- integer coefficient kernels --------------------------------------


def _ideg(a: list[int]) -> int:
    return len(a) - 1


def _inorm(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _iprim(a: list[int]) -> list[int]:
    g = 0
    for v in a:
        g = math.gcd(g, v)
    if g in (0, 1):
        return a
    return [v // g for v in a]


def _ineg(a: list[int]) -> list[int]:
    return [-v for v in a]


def _prem_signed(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b scaled so it is a *positive* multiple of a mod b."""
    da, db = _ideg(a), _ideg(b)
    if db < 0:
        raise ZeroDivisionError("pseudo-remainder by zero")
    l = b[-1]
    r = list(a)
    e = da - db + 1
    while r and _ideg(r) >= db:
        k = _ideg(r) - db
        top = r[-1]
        r = [l * v for v in r]
        for i in range(db + 1):
            r[k + i] -= top * b[i]
        r = _inorm(r)
        e -= 1
    total_e = da - db + 1
    # pad the multiplier so the total is exactly l^(da-db+1), then fix its sign
    if e > 0:
        scale = l ** e
        r = [scale * v for v in r]
    if l < 0 and total_e % 2 == 1:
        r = _ineg(r)
    return r


def _igcd_poly(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd over Z via the primitive pseudo-remainder sequence."""
    a, b = _iprim(list(a)), _iprim(list(b))
    if not a:
        return _pos_lc(b)
    if not b:
        return _pos_lc(a)
    if _ideg(a) < _ideg(b):
        a, b = b, a
    while b:
        r = _iprim(_prem_signed(a, b))
        a, b = b, r
    return _pos_lc(a)


def _pos_lc(a: list[int]) -> list[int]:
    if a and a[-1] < 0:
        return _ineg(a)
    return a


def poly_gcd(p: UPoly, q: UPoly) -> UPoly:
    """Primitive gcd with positive leading coefficient."""
    return UPoly(_igcd_poly(p.int_primitive(), q.int_primitive()))


def squarefree_part(p: UPoly) -> UPoly:
    """p / gcd(p, p'), primitive with positive leading coefficient."""
    if p.is_zero:
        raise InvalidInput("square-free part of the zero polynomial")
    if p.degree == 0:
        return UPoly.const(1)
    g = poly_gcd(p, p.derivative())
    q = p.exact_div(g)
    out = q.primitive()
    if out.lc < 0:
        out = -out
    return out


def is_squarefree(p: UPoly) -> bool:
    if p.is_zero:
        return False
    if p.degree == 0:
        return True
    return poly_gcd(p, p.derivative()).degree == 0


def xgcd(p: UPoly, q: UPoly) -> tuple[UPoly, UPoly, UPoly]:
    """Extended Euclid over Q[x]: returns (g, u, v) with u*p + v*q = g, g monic."""
    r0, r1 = p, q
    s0, s1 = UPoly.const(1), UPoly.zero()
    t0, t1 = UPoly.zero(), UPoly.const(1)
    while not r1.is_zero:
        quo, rem = r0.divmod(r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    if r0.is_zero:
        return r0, s0, t0
    scale = 1 / r0.lc
    return r0 * scale, s0 * scale, t0 * scale


def invert_mod(u: UPoly, modulus: UPoly) -> UPoly:
    """Inverse of u modulo `modulus`; requires gcd(u, modulus) = 1."""
    g, a, _ = xgcd(u, modulus)
    if g.degree != 0:
        raise InvalidInput("not invertible modulo the given polynomial")
    return a % modulus


# -- determinants and resultants --------------------------------------


def det_bareiss(matrix: list[list], zero, is_zero: Callable, exact_div: Callable):
    """Fraction-free Bareiss determinant over an integral domain."""
    m = [row[:] for row in matrix]
    n = len(m)
    if n == 0:
        raise InvalidInput("empty matrix")
    sgn = 1
    prev = None
    for k in range(n - 1):
        if is_zero(m[k][k]):
            for r in range(k + 1, n):
                if not is_zero(m[r][k]):
                    m[k], m[r] = m[r], m[k]
                    sgn = -sgn
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                t = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = t if prev is None else exact_div(t, prev)
            m[i][k] = zero
        prev = m[k][k]
    out = m[n - 1][n - 1]
    return out if sgn == 1 else -out


def sylvester_matrix(p: list, q: list, zero) -> list[list]:
    """Sylvester matrix of p, q given as low-first coefficient lists of ring elements."""
    m, n = len(p) - 1, len(q) - 1
    if m < 0 or n < 0:
        raise InvalidInput("resultant of a zero polynomial")
    size = m + n
    rows = []
    ph = list(reversed(p))
    qh = list(reversed(q))
    for i in range(n):
        rows.append([zero] * i + ph + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + qh + [zero] * (size - n - 1 - i))
    return rows


def resultant(p: UPoly, q: UPoly) -> Fraction:
    """Resultant as the Sylvester determinant (q(root of p) products, standard sign)."""
    if p.is_zero or q.is_zero:
        raise InvalidInput("resultant of a zero polynomial")
    if p.degree == 0:
        return p.lc ** q.degree
    if q.degree == 0:
        return q.lc ** p.degree
    rows = sylvester_matrix(list(p.coeffs), list(q.coeffs), Fraction(0))
    return det_bareiss(rows, Fraction(0), lambda v: v == 0, lambda a, b: a / b)


# -- Sturm machinery ---------------------------------------------------


def sturm_chain(p: UPoly) -> list[list[int]]:
    """Sturm chain of p as primitive integer polynomials (positive rescaling only)."""
    if p.is_zero:
        raise InvalidInput("Sturm chain of the zero polynomial")
    chain = [_iprim(p.int_primitive())]
    d = UPoly(chain[0]).derivative()
    if d.is_zero:
        return chain
    chain.append(_iprim(d.int_primitive()))
    while True:
        a, b = chain[-2], chain[-1]
        r = _prem_signed(a, b)
        r = _iprim(_inorm(r))
        if not r:
            break
        chain.append(_ineg(r))
    return chain


def _sign_at(coeffs: list[int], x: Fraction) -> int:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return sign(acc)


def _sign_at_inf(coeffs: list[int], positive: bool) -> int:
    if not coeffs:
        return 0
    s = sign(coeffs[-1])
    if not positive and (len(coeffs) - 1) % 2 == 1:
        s = -s
    return s


def sturm_variations(chain: list[list[int]], x) -> int:
    """Sign variations at x; x is a Fraction or one of '+inf', '-inf'."""
    signs = []
    for member in chain:
        if x == "+inf":
            s = _sign_at_inf(member, True)
        elif x == "-inf":
            s = _sign_at_inf(member, False)
        else:
            s = _sign_at(member, x)
        if s:
            signs.append(s)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p: UPoly, lo=None, hi=None) -> int:
    """Number of distinct real roots of p in (lo, hi]; all of R by default."""
    chain = sturm_chain(p)
    va = sturm_variations(chain, "-inf" if lo is None else rat(lo))
    vb = sturm_variations(chain, "+inf" if hi is None else rat(hi))
    return va - vb


def isolate_roots_intervals(p: UPoly) -> tuple[list[tuple[Fraction, Fraction, bool]], UPoly]:
    """Isolating data for the real roots of a square-free p, sorted ascending.

    Returns (triples, residual): each triple (lo, hi, exact) is either an
    exact rational root (lo == hi) or an open interval containing exactly one
    root *of residual*, the polynomial left after dividing out the exact
    rational roots. Residual's endpoints are never roots of residual, which
    is the invariant interval refinement relies on.
    """
    if p.is_zero:
        raise InvalidInput("cannot isolate roots of the zero polynomial")
    if not is_squarefree(p):
        raise InvalidInput("root isolation requires a square-free polynomial")
    work = p.primitive()
    exact_roots: list[Fraction] = []
    bound = work.cauchy_root_bound()
    lo0, hi0 = -bound, bound

    while True:
        restart = False
        if work.degree < 1:
            intervals = []
            break
        chain = sturm_chain(work)
        v_lo = sturm_variations(chain, lo0)
        v_hi = sturm_variations(chain, hi0)
        intervals = []
        stack = [(lo0, hi0, v_lo, v_hi)]
        while stack:
            a, b, va, vb = stack.pop()
            k = va - vb
            if k == 0:
                continue
            m = (a + b) / 2
            if work(m) == 0:
                exact_roots.append(m)
                work = work.exact_div(UPoly((-m, 1)))
                restart = True
                break
            if k == 1:
                # shrink until the interval is free of the known exact roots
                while any(a < r < b for r in exact_roots):
                    vm = sturm_variations(chain, m)
                    if va - vm == 1:
                        b, vb = m, vm
                    else:
                        a, va = m, vm
                    m = (a + b) / 2
                    if work(m) == 0:
                        break
                if work(m) == 0:
                    exact_roots.append(m)
                    work = work.exact_div(UPoly((-m, 1)))
                    restart = True
                    break
                intervals.append((a, b))
                continue
            vm = sturm_variations(chain, m)
            stack.append((a, m, va, vm))
            stack.append((m, b, vm, vb))
        if not restart:
            break

    out = [(r, r, True) for r in exact_roots]
    out += [(a, b, False) for a, b in intervals]
    out.sort(key=lambda t: (t[0] + t[1]))
    # open intervals from one Sturm bisection tree are disjoint by
    # construction, and the shrink pass keeps exact roots out of them
    return out, work
