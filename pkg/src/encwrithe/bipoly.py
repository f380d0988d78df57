"""Sparse bivariate polynomials over the rationals.

Used for the double-point systems: minors in the two preimage parameters
(s, t), their symmetric rewrite in (e, f) = (s + t, s*t), and resultant
elimination down to univariate polynomials. Exponent pairs map to Fraction
coefficients; variable 0 is the first parameter, variable 1 the second.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import InvalidInput
from .rationals import rat
from .upoly import UPoly, det_bareiss, sylvester_matrix


class BiPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], Fraction] | Iterable = ()):
        d: dict[tuple[int, int], Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (i, j), c in items:
            c = rat(c)
            if c:
                d[(i, j)] = d.get((i, j), Fraction(0)) + c
        self.terms = {k: v for k, v in d.items() if v}

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "BiPoly":
        return BiPoly()

    @staticmethod
    def const(c) -> "BiPoly":
        c = rat(c)
        return BiPoly({(0, 0): c}) if c else BiPoly()

    @staticmethod
    def var(index: int) -> "BiPoly":
        if index == 0:
            return BiPoly({(1, 0): Fraction(1)})
        if index == 1:
            return BiPoly({(0, 1): Fraction(1)})
        raise InvalidInput("variable index must be 0 or 1")

    @staticmethod
    def from_upoly(p: UPoly, index: int) -> "BiPoly":
        if index == 0:
            return BiPoly({(k, 0): c for k, c in enumerate(p.coeffs)})
        return BiPoly({(0, k): c for k, c in enumerate(p.coeffs)})

    # -- structure ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degree_in(self, index: int) -> int:
        if not self.terms:
            return -1
        return max(k[index] for k in self.terms)

    @property
    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self.terms)

    def constant_value(self) -> Fraction:
        return self.terms.get((0, 0), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "BiPoly(0)"
        parts = [
            f"{c}*s^{i}t^{j}"
            for (i, j), c in sorted(self.terms.items())
        ]
        return "BiPoly(" + " + ".join(parts) + ")"

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other) -> "BiPoly":
        other = _as_bipoly(other)
        d = dict(self.terms)
        for k, c in other.terms.items():
            d[k] = d.get(k, Fraction(0)) + c
        return BiPoly(d)

    __radd__ = __add__

    def __sub__(self, other) -> "BiPoly":
        return self + (-_as_bipoly(other))

    def __rsub__(self, other) -> "BiPoly":
        return _as_bipoly(other) - self

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __mul__(self, other) -> "BiPoly":
        if isinstance(other, (int, Fraction)):
            other = rat(other)
            return BiPoly({k: c * other for k, c in self.terms.items()})
        other = _as_bipoly(other)
        d: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                d[k] = d.get(k, Fraction(0)) + c1 * c2
        return BiPoly(d)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        result = BiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- views and conversions -----------------------------------------

    def as_univar_in(self, index: int) -> list[UPoly]:
        """Coefficient list (low degree first in `index`) of UPolys in the other variable."""
        d = self.degree_in(index)
        if d < 0:
            return []
        buckets: list[dict[int, Fraction]] = [dict() for _ in range(d + 1)]
        for (i, j), c in self.terms.items():
            k, other = (i, j) if index == 0 else (j, i)
            buckets[k][other] = c
        out = []
        for bucket in buckets:
            n = max(bucket) + 1 if bucket else 0
            out.append(UPoly([bucket.get(m, Fraction(0)) for m in range(n)]))
        return out

    def to_upoly(self, index: int) -> UPoly:
        """Convert to univariate in `index`; the other variable must not occur."""
        other = 1 - index
        if self.degree_in(other) > 0:
            raise InvalidInput("polynomial genuinely depends on both variables")
        d = self.degree_in(index)
        coeffs = [Fraction(0)] * (d + 1)
        for (i, j), c in self.terms.items():
            coeffs[(i, j)[index]] = c
        return UPoly(coeffs)

    def eval(self, x, y):
        """Evaluate at exact scalars (Fraction or QI)."""
        from .rationals import QI

        total = None
        for (i, j), c in self.terms.items():
            term = c
            for _ in range(i):
                term = term * x
            for _ in range(j):
                term = term * y
            total = term if total is None else total + term
        if total is None:
            return QI.of(0) if isinstance(x, QI) or isinstance(y, QI) else Fraction(0)
        return total

    def substitute_upoly(self, index: int, value: UPoly, mod: UPoly | None = None) -> UPoly:
        """Substitute `value(other)` for variable `index`; result univariate in the other.

        With `mod` given, intermediate products are reduced modulo it.
        """
        coeffs = self.as_univar_in(index)
        acc = UPoly.zero()
        for c in reversed(coeffs):
            acc = acc * value + c
            if mod is not None:
                acc = acc % mod
        return acc

    def swap_vars(self) -> "BiPoly":
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()})

    def derivative(self, index: int) -> "BiPoly":
        d: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in self.terms.items():
            k = (i, j)[index]
            if k:
                nk = (i - 1, j) if index == 0 else (i, j - 1)
                d[nk] = d.get(nk, Fraction(0)) + c * k
        return BiPoly(d)

    # -- the operations the double-point pipeline needs -----------------

    def exact_div_s_minus_t(self) -> "BiPoly":
        """Exact quotient by (s - t); the input must vanish on the diagonal."""
        coeffs = self.as_univar_in(0)  # in s, coefficients UPoly in t
        if not coeffs:
            return BiPoly.zero()
        t = UPoly.x()
        n = len(coeffs) - 1
        q: list[UPoly] = [UPoly.zero()] * max(n, 0)
        carry = UPoly.zero()
        for k in range(n, 0, -1):
            qk = coeffs[k] + t * carry if k < n else coeffs[k]
            q[k - 1] = qk
            carry = qk
        remainder = coeffs[0] + t * carry if n >= 0 else coeffs[0]
        if not remainder.is_zero:
            raise InvalidInput("polynomial is not divisible by (s - t)")
        out = BiPoly.zero()
        for k, poly in enumerate(q):
            out = out + BiPoly.from_upoly(poly, 1) * BiPoly({(k, 0): Fraction(1)})
        return out

    def is_symmetric(self) -> bool:
        return all(self.terms.get((j, i), Fraction(0)) == c for (i, j), c in self.terms.items())

    def symmetric_in_ef(self) -> "BiPoly":
        """Rewrite a symmetric polynomial in (s, t) as a polynomial in (e, f).

        Uses power sums p_k = s^k + t^k with p_0 = 2, p_1 = e and
        p_k = e*p_{k-1} - f*p_{k-2}; variable 0 of the result is e,
        variable 1 is f.
        """
        if not self.is_symmetric():
            raise InvalidInput("not symmetric in (s, t)")
        max_gap = 0
        for (i, j) in self.terms:
            max_gap = max(max_gap, abs(i - j))
        e = BiPoly.var(0)
        f = BiPoly.var(1)
        power_sums = [BiPoly.const(2), e]
        while len(power_sums) <= max_gap:
            power_sums.append(e * power_sums[-1] - f * power_sums[-2])
        out = BiPoly.zero()
        for (i, j), c in self.terms.items():
            if i < j:
                continue
            if i == j:
                out = out + BiPoly({(0, i): c})
            else:
                out = out + BiPoly({(0, j): c}) * power_sums[i - j]
        return out

    def resultant_with(self, other: "BiPoly", index: int) -> UPoly:
        """Resultant of self and other eliminating variable `index`.

        The exact Sylvester determinant, computed fraction-free; result is
        univariate in the remaining variable.
        """
        return resultant_bivariate(self, other, index)


def _as_bipoly(value) -> BiPoly:
    if isinstance(value, BiPoly):
        return value
    if isinstance(value, UPoly):
        raise InvalidInput("ambiguous UPoly to BiPoly conversion; use from_upoly")
    return BiPoly.const(rat(value))


def _resultant_upoly_lists(p: list[UPoly], q: list[UPoly]) -> UPoly:
    while p and p[-1].is_zero:
        p.pop()
    while q and q[-1].is_zero:
        q.pop()
    if not p or not q:
        raise InvalidInput("resultant of a zero polynomial")
    if len(p) == 1:
        return p[0] ** (len(q) - 1)
    if len(q) == 1:
        return q[0] ** (len(p) - 1)
    rows = sylvester_matrix(p, q, UPoly.zero())
    return det_bareiss(
        rows,
        UPoly.zero(),
        lambda v: v.is_zero,
        lambda a, b: a.exact_div(b),
    )


def resultant_bivariate(a: BiPoly, b: BiPoly, index: int) -> UPoly:
    """Resultant of a and b eliminating variable `index` (univariate in the other)."""
    p = a.as_univar_in(index)
    q = b.as_univar_in(index)
    return _resultant_upoly_lists(p, q)
