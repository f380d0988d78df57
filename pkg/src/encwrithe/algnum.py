"""Real algebraic numbers and certified sign determination.

An AlgebraicNumber is a square-free defining polynomial plus an isolating
rational interval. Sign queries follow a fixed protocol: decide vanishing
exactly first (reduction modulo the defining data plus a gcd test picking
out the actual root), then refine the interval until interval arithmetic
separates the value from zero. The exact zero test is what guarantees the
refinement loop terminates.

A single quadratic extension layer (SqrtExtension) supports values of the
form a(f) + sqrt(delta(f)) * b(f) at a root f of the base polynomial, with
the square root taken positive. That is the full extent of nesting the
double-point pipeline ever needs: crossing data is symmetric in the two
preimage parameters and therefore lives downstairs, while solitary points
and explicit preimage splittings need exactly one square root.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InvalidInput
from .rationals import Interval, rat, sign
from .upoly import (
    UPoly,
    count_real_roots,
    is_squarefree,
    isolate_roots_intervals,
    poly_gcd,
    squarefree_part,
)
from .bipoly import BiPoly, resultant_bivariate

_QUICK_REFINE_ROUNDS = 2


class AlgebraicNumber:
    """A real algebraic number: square-free defining polynomial + isolating interval.

    The represented number never changes after construction; the interval
    (and occasionally the defining polynomial, via square-free factor
    splits) only narrows toward it.
    """

    __slots__ = ("defining", "lo", "hi")

    def __init__(self, defining: UPoly, lo, hi, _checked: bool = False):
        lo, hi = rat(lo), rat(hi)
        self.defining = defining
        self.lo = lo
        self.hi = hi
        if not _checked:
            if defining.is_zero or defining.degree < 1:
                raise InvalidInput("defining polynomial must be nonconstant")
            if not is_squarefree(defining):
                raise InvalidInput("defining polynomial must be square-free")
            if lo == hi:
                if defining(lo) != 0:
                    raise InvalidInput("point interval must be a root")
            else:
                if defining(lo) == 0 or defining(hi) == 0:
                    raise InvalidInput("isolating interval endpoints must not be roots")
                if count_real_roots(defining, lo, hi) != 1:
                    raise InvalidInput("interval does not isolate exactly one root")

    # -- constructors ----------------------------------------------------

    @staticmethod
    def from_rational(value) -> "AlgebraicNumber":
        value = rat(value)
        return AlgebraicNumber(UPoly((-value, 1)), value, value, _checked=True)

    # -- basic queries -----------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def exact_value(self) -> Fraction:
        if not self.is_exact:
            raise InvalidInput("number has not collapsed to a rational")
        return self.lo

    def interval(self) -> Interval:
        return Interval(self.lo, self.hi)

    def __float__(self) -> float:
        return float((self.lo + self.hi) / 2)

    def __repr__(self) -> str:
        if self.is_exact:
            return f"AlgebraicNumber({self.lo})"
        return f"AlgebraicNumber(deg {self.defining.degree} in [{self.lo}, {self.hi}])"

    # -- refinement --------------------------------------------------------

    def refine(self) -> None:
        """One bisection step; collapses to an exact rational if the midpoint is the root."""
        if self.is_exact:
            return
        mid = (self.lo + self.hi) / 2
        v = self.defining(mid)
        if v == 0:
            self.lo = self.hi = mid
            return
        if sign(self.defining(self.lo)) != sign(v):
            self.hi = mid
        else:
            self.lo = mid

    def refine_below(self, width) -> None:
        width = rat(width)
        while not self.is_exact and self.hi - self.lo > width:
            self.refine()

    def try_exact_collapse(self, rounds: int = 3) -> bool:
        """Probe for a rational value via the simplest fraction in the interval."""
        from .rationals import simplest_in_interval

        for _ in range(rounds):
            if self.is_exact:
                return True
            candidate = simplest_in_interval(self.lo, self.hi)
            if self.lo < candidate < self.hi and self.defining(candidate) == 0:
                self.lo = self.hi = candidate
                return True
            self.refine()
            self.refine()
        return self.is_exact

    # -- certified sign machinery -------------------------------------------

    def reduce(self, p: UPoly) -> UPoly:
        return p % self.defining

    def sign_of_poly(self, p: UPoly) -> int:
        """Exact sign of p at this number."""
        if self.is_exact:
            return sign(p(self.lo))
        p = p % self.defining
        if p.is_zero:
            return 0
        for _ in range(_QUICK_REFINE_ROUNDS):
            s = p.eval_interval(self.interval()).definite_sign()
            if s:
                return s
            self.refine()
            if self.is_exact:
                return sign(p(self.lo))
        if self._vanishes_here(p):
            return 0
        while True:
            s = p.eval_interval(self.interval()).definite_sign()
            if s:
                return s
            self.refine()
            if self.is_exact:
                return sign(p(self.lo))

    def is_root_of(self, p: UPoly) -> bool:
        if self.is_exact:
            return p(self.lo) == 0
        p = p % self.defining
        if p.is_zero:
            return True
        return self._vanishes_here(p)

    def _vanishes_here(self, p: UPoly) -> bool:
        # p already reduced and nonzero; p vanishes at the root iff the root
        # also belongs to gcd(p, defining)
        g = poly_gcd(p, self.defining)
        if g.degree < 1:
            return False
        return count_real_roots(g, self.lo, self.hi) == 1

    def split_defining_coprime_to(self, u: UPoly) -> None:
        """Shrink the defining polynomial so it is coprime to u.

        Requires u nonzero at this number (caller certifies via sign_of_poly).
        """
        g = poly_gcd(u, self.defining)
        if g.degree >= 1:
            self.defining = self.defining.exact_div(g).primitive()

    # -- structural helpers -------------------------------------------------

    def separate_from(self, other: "AlgebraicNumber", max_rounds: int = 64) -> bool:
        """Refine both numbers until their intervals are disjoint; False on budget."""
        for _ in range(max_rounds):
            if self.interval().disjoint(other.interval()):
                return True
            self.refine()
            other.refine()
        return self.interval().disjoint(other.interval())

    def equals(self, other: "AlgebraicNumber") -> bool:
        """Exact equality decision."""
        if self.is_exact and other.is_exact:
            return self.lo == other.lo
        if self.is_exact:
            return other.is_root_of(UPoly((-self.lo, 1)))
        if other.is_exact:
            return self.is_root_of(UPoly((-other.lo, 1)))
        g = poly_gcd(self.defining, other.defining)
        if g.degree < 1:
            return False
        if not (self.is_root_of(g) and other.is_root_of(g)):
            return False
        # both are roots of g; equal iff they are the same root
        boxes, _ = isolate_roots_intervals(g)
        mine = _locate_in_isolation(self, g, boxes)
        theirs = _locate_in_isolation(other, g, boxes)
        return mine == theirs


def _locate_in_isolation(num: AlgebraicNumber, g: UPoly, boxes) -> int:
    """Index of the isolating box of g containing `num` (num must be a root of g)."""
    while True:
        candidates = [
            k
            for k, (lo, hi, exact) in enumerate(boxes)
            if not Interval(lo, hi).disjoint(num.interval())
        ]
        if len(candidates) == 1:
            return candidates[0]
        if not candidates:
            raise InvalidInput("number is not a root of the isolation target")
        num.refine()


def isolate_real_roots(p: UPoly) -> list[AlgebraicNumber]:
    """All real roots of a square-free p, ascending, as AlgebraicNumbers."""
    out = []
    triples, residual = isolate_roots_intervals(p)
    for lo, hi, exact in triples:
        if exact:
            out.append(AlgebraicNumber.from_rational(lo))
        else:
            num = AlgebraicNumber(residual, lo, hi, _checked=True)
            num.try_exact_collapse()
            out.append(num)
    return out


def algebraic_value(base: AlgebraicNumber, num: UPoly, den: UPoly) -> AlgebraicNumber:
    """The number num(base)/den(base) as a standalone AlgebraicNumber.

    den must be nonzero at base. The defining polynomial is obtained by
    eliminating the base variable from {defining(f) = 0, num(f) - y*den(f) = 0}.
    """
    if base.sign_of_poly(den) == 0:
        raise InvalidInput("denominator vanishes at the base number")
    if base.is_exact:
        return AlgebraicNumber.from_rational(num(base.lo) / den(base.lo))
    f_def = BiPoly.from_upoly(base.defining, 0)
    y = BiPoly.var(1)
    target = BiPoly.from_upoly(num, 0) - y * BiPoly.from_upoly(den, 0)
    h = resultant_bivariate(f_def, target, 0)
    if h.is_zero:
        raise InvalidInput("degenerate elimination while forming an algebraic value")
    h = squarefree_part(h)
    boxes, residual = isolate_roots_intervals(h)

    def value_interval() -> Interval:
        iv_num = num.eval_interval(base.interval())
        iv_den = den.eval_interval(base.interval())
        if iv_den.contains_zero():
            return None
        candidates = [
            iv_num.lo / iv_den.lo,
            iv_num.lo / iv_den.hi,
            iv_num.hi / iv_den.lo,
            iv_num.hi / iv_den.hi,
        ]
        return Interval(min(candidates), max(candidates))

    while True:
        iv = value_interval()
        if iv is not None:
            hits = [
                (lo, hi, exact)
                for (lo, hi, exact) in boxes
                if not Interval(lo, hi).disjoint(iv)
            ]
            if len(hits) == 1:
                lo, hi, exact = hits[0]
                if exact:
                    return AlgebraicNumber.from_rational(lo)
                value = AlgebraicNumber(residual, lo, hi, _checked=True)
                value.try_exact_collapse()
                return value
        base.refine()


# -- quadratic extension ----------------------------------------------------


class SqrtExtension:
    """Arithmetic context for values a(f) + sqrt(delta(f)) * b(f).

    f is a fixed root of `base.defining` and the square root is the positive
    one; delta must be strictly positive at f (checked at construction).
    """

    def __init__(self, base: AlgebraicNumber, delta: UPoly):
        self.base = base
        self.delta = base.reduce(delta) if not base.is_exact else delta
        if base.sign_of_poly(self.delta) <= 0:
            raise InvalidInput("radicand must be positive at the base number")

    def element(self, a: UPoly, b: UPoly) -> "SqrtElem":
        if not self.base.is_exact:
            a, b = self.base.reduce(a), self.base.reduce(b)
        return SqrtElem(self, a, b)

    def from_rational(self, c) -> "SqrtElem":
        return SqrtElem(self, UPoly.const(rat(c)), UPoly.zero())

    def sqrt_term(self) -> "SqrtElem":
        return SqrtElem(self, UPoly.zero(), UPoly.const(1))

    def gamma_interval(self, prec: int = 0) -> Interval:
        iv = self.delta.eval_interval(self.base.interval())
        return iv.sqrt(prec)


class SqrtElem:
    """Element a + g*b of a SqrtExtension, g the positive square root."""

    __slots__ = ("ext", "a", "b")

    def __init__(self, ext: SqrtExtension, a: UPoly, b: UPoly):
        self.ext = ext
        self.a = a
        self.b = b

    def _wrap(self, a: UPoly, b: UPoly) -> "SqrtElem":
        base = self.ext.base
        if not base.is_exact:
            a, b = base.reduce(a), base.reduce(b)
        return SqrtElem(self.ext, a, b)

    def __add__(self, other) -> "SqrtElem":
        other = self._coerce(other)
        return self._wrap(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other) -> "SqrtElem":
        other = self._coerce(other)
        return self._wrap(self.a - other.a, self.b - other.b)

    def __rsub__(self, other) -> "SqrtElem":
        return self._coerce(other) - self

    def __neg__(self) -> "SqrtElem":
        return SqrtElem(self.ext, -self.a, -self.b)

    def __mul__(self, other) -> "SqrtElem":
        if isinstance(other, (int, Fraction)):
            return SqrtElem(self.ext, self.a * other, self.b * other)
        other = self._coerce(other)
        a = self.a * other.a + self.ext.delta * (self.b * other.b)
        b = self.a * other.b + self.b * other.a
        return self._wrap(a, b)

    __rmul__ = __mul__

    def _coerce(self, other) -> "SqrtElem":
        if isinstance(other, SqrtElem):
            if other.ext is not self.ext:
                raise InvalidInput("mixing elements of different extensions")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ext.from_rational(other)
        if isinstance(other, UPoly):
            return self.ext.element(other, UPoly.zero())
        raise InvalidInput(f"cannot coerce {other!r} into the extension")

    def conjugate(self) -> "SqrtElem":
        return SqrtElem(self.ext, self.a, -self.b)

    def sign(self) -> int:
        """Exact sign of a + g*b; zero decided symbolically first."""
        base = self.ext.base
        sb = base.sign_of_poly(self.b)
        if sb == 0:
            return base.sign_of_poly(self.a)
        sa = base.sign_of_poly(self.a)
        if sa == 0:
            return sb
        norm = self.a * self.a - self.ext.delta * (self.b * self.b)
        if base.is_root_of(norm):
            # |a| equals g*|b| exactly: the sum is zero iff the signs oppose
            return 0 if sa != sb else sa
        prec = 0
        while True:
            iv = (
                self.a.eval_interval(base.interval())
                + self.ext.gamma_interval(prec) * self.b.eval_interval(base.interval())
            )
            s = iv.definite_sign()
            if s:
                return s
            base.refine()
            prec += 2

    def is_zero(self) -> bool:
        return self.sign() == 0


class ComplexSqrtElem:
    """Complex value with SqrtElem real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: SqrtElem, im: SqrtElem):
        self.re = re
        self.im = im

    def __add__(self, other) -> "ComplexSqrtElem":
        other = self._coerce(other)
        return ComplexSqrtElem(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "ComplexSqrtElem":
        other = self._coerce(other)
        return ComplexSqrtElem(self.re - other.re, self.im - other.im)

    def __mul__(self, other) -> "ComplexSqrtElem":
        if isinstance(other, (int, Fraction)):
            return ComplexSqrtElem(self.re * other, self.im * other)
        other = self._coerce(other)
        return ComplexSqrtElem(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self) -> "ComplexSqrtElem":
        return ComplexSqrtElem(-self.re, -self.im)

    def _coerce(self, other) -> "ComplexSqrtElem":
        if isinstance(other, ComplexSqrtElem):
            return other
        if isinstance(other, SqrtElem):
            zero = other.ext.from_rational(0)
            return ComplexSqrtElem(other, zero)
        raise InvalidInput(f"cannot coerce {other!r} into complex extension")

    def conjugate(self) -> "ComplexSqrtElem":
        return ComplexSqrtElem(self.re, -self.im)

    def times_i(self) -> "ComplexSqrtElem":
        return ComplexSqrtElem(-self.im, self.re)


# -- determinants over the extension ring ------------------------------------


def det_ring(rows: list[list]) -> object:
    """Determinant by cofactor expansion; entries form a commutative ring."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise InvalidInput("determinant of a non-square matrix")
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = None
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        term = rows[0][j] * det_ring(minor)
        if j % 2 == 1:
            term = -term
        total = term if total is None else total + term
    return total


# -- the public certified sign ----------------------------------------------


def certified_sign(expr, point) -> int:
    """Exact sign of a polynomial at a point with exact-rational or algebraic coords.

    expr is a UPoly (one coordinate) or BiPoly (two coordinates); point is a
    sequence of Fractions/ints or AlgebraicNumbers. Two genuinely independent
    algebraic coordinates are not supported; the double-point pipeline always
    presents its points triangularly (see SqrtExtension).
    """
    coords = list(point)
    if isinstance(expr, UPoly):
        if len(coords) != 1:
            raise InvalidInput("univariate expression needs exactly one coordinate")
        c = coords[0]
        if isinstance(c, AlgebraicNumber):
            return c.sign_of_poly(expr)
        return sign(expr(rat(c)))
    if isinstance(expr, BiPoly):
        if len(coords) != 2:
            raise InvalidInput("bivariate expression needs exactly two coordinates")
        algebraic = [isinstance(c, AlgebraicNumber) for c in coords]
        if not any(algebraic):
            return sign(expr.eval(rat(coords[0]), rat(coords[1])))
        if all(algebraic):
            raise InvalidInput(
                "two independent algebraic coordinates are not supported; "
                "present the point through a triangular extension"
            )
        if algebraic[0]:
            reduced = expr.substitute_upoly(1, UPoly.const(rat(coords[1])))
            return coords[0].sign_of_poly(reduced)
        reduced = expr.substitute_upoly(0, UPoly.const(rat(coords[0])))
        return coords[1].sign_of_poly(reduced)
    raise InvalidInput("expression must be a UPoly or BiPoly")
