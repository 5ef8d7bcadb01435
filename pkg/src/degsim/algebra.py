"""Exact scalars, polynomial towers, and exact linear algebra.

Scalars are arbitrary-precision rationals (``fractions.Fraction``, which is
already canonical: reduced, positive denominator, zero = 0/1).  On top of the
scalars sit four immutable polynomial types:

  UniPoly    dense polynomial over Q; reads as Q[mu] or Q[t] by context
  BiPoly     polynomial in t whose coefficients are UniPoly in mu (Q[mu][t])
  RatFn      reduced fraction of two UniPoly, the field Q(mu)
  RatFnPoly  polynomial in t over RatFn, the Euclidean domain Q(mu)[t]

The determinant engine is Bareiss fraction-free elimination.  Its inner loop
runs over integer coefficient arrays (denominators are cleared row by row and
the scale divided back out at the end), because every intermediate value in
Bareiss is a minor of the scaled matrix and therefore stays integral.

No floating point is used anywhere in this module.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DimensionMismatchError, InexactDivisionError, SingularMatrixError

Rational = Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


# ---------------------------------------------------------------------------
# UniPoly: dense univariate polynomials over Q
# ---------------------------------------------------------------------------

class UniPoly:
    """Dense univariate polynomial over Q.

    ``coeffs[i]`` is the coefficient of x^i; the tuple carries no trailing
    zeros and the empty tuple is the zero polynomial.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls()

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, power: int, coeff=1) -> "UniPoly":
        return cls((0,) * power + (coeff,))

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return UniPoly()
            out = [Fraction(0)] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        out[i + j] += ai * bj
            return UniPoly(out)
        if isinstance(other, (int, Fraction)):
            return UniPoly(c * other for c in self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        out = UniPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, other: "UniPoly"):
        """Polynomial division over the field Q."""
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.leading
        q = [Fraction(0)] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db:
            if rem[-1] == 0:
                rem.pop()
                continue
            shift = len(rem) - 1 - db
            factor = rem[-1] / lead
            q[shift] = factor
            for i, bc in enumerate(other.coeffs):
                rem[shift + i] -= factor * bc
            rem.pop()
        return UniPoly(q), UniPoly(rem)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero:
            raise InexactDivisionError("inexact polynomial division")
        return q

    def monic(self) -> "UniPoly":
        if self.is_zero:
            return self
        lead = self.leading
        if lead == 1:
            return self
        return UniPoly(c / lead for c in self.coeffs)

    def eval(self, point) -> Fraction:
        """Horner evaluation at a rational point."""
        point = _as_fraction(point)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def reflect(self) -> "UniPoly":
        """Return p(-x)."""
        return UniPoly(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def shift(self, k: int) -> "UniPoly":
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return UniPoly((Fraction(0),) * k + self.coeffs)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "UniPoly":
        return cls(Fraction(s) for s in data)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"


def _z_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd of integer polynomials (primitive PRS)."""
    fa = _z_primitive(list(a))
    fb = _z_primitive(list(b))
    if not fa:
        return fb
    if not fb:
        return fa
    if len(fb) > len(fa):
        fa, fb = fb, fa
    while fb:
        r = _z_prem(fa, fb)
        fa, fb = fb, _z_primitive(r)
    return fa


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor in Q[x]; gcd(0, 0) = 0.

    Runs a primitive pseudo-remainder sequence over cleared-denominator
    integer coefficients, which avoids the coefficient blowup of naive
    fraction Euclid.
    """
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    return UniPoly(_z_gcd(_z_from_fractions(a.coeffs),
                          _z_from_fractions(b.coeffs))).monic()


def lagrange_interpolate(xs: Sequence, ys: Sequence) -> UniPoly:
    """Exact Lagrange interpolation through (xs[i], ys[i])."""
    if len(xs) != len(ys):
        raise ValueError("point count mismatch")
    xs = [_as_fraction(x) for x in xs]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    total = UniPoly()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        term = UniPoly((yi,))
        for j, xj in enumerate(xs):
            if j == i:
                continue
            term = term * UniPoly((-xj / (xi - xj), Fraction(1) / (xi - xj)))
        total = total + term
    return total


# ---------------------------------------------------------------------------
# BiPoly: Q[mu][t]
# ---------------------------------------------------------------------------

def _as_unipoly(x) -> UniPoly:
    if isinstance(x, UniPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return UniPoly((x,))
    return UniPoly(x)


class BiPoly:
    """Polynomial in t whose coefficients are UniPoly values in mu.

    ``coeffs[i]`` is the UniPoly coefficient of t^i; trailing zero
    coefficients are stripped and the empty tuple is zero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_unipoly(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        self.coeffs: tuple[UniPoly, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def one(cls) -> "BiPoly":
        return cls((UniPoly.one(),))

    @classmethod
    def t(cls) -> "BiPoly":
        return cls((UniPoly.zero(), UniPoly.one()))

    @classmethod
    def mu(cls) -> "BiPoly":
        return cls((UniPoly.x(),))

    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls((UniPoly((c,)),))

    @classmethod
    def from_unipoly_in_t(cls, p: UniPoly) -> "BiPoly":
        return cls(UniPoly((c,)) for c in p.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree_t(self) -> int:
        return len(self.coeffs) - 1

    @property
    def degree_mu(self) -> int:
        if not self.coeffs:
            return -1
        return max(c.degree for c in self.coeffs)

    def t_coefficient(self, i: int) -> UniPoly:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return UniPoly()

    @property
    def leading(self) -> UniPoly:
        if not self.coeffs:
            return UniPoly()
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("BiPoly", self.coeffs))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __neg__(self) -> "BiPoly":
        return BiPoly(-c for c in self.coeffs)

    def __add__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return BiPoly(out)

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BiPoly):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return BiPoly()
            out = [UniPoly()] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if ai.is_zero:
                    continue
                for j, bj in enumerate(b):
                    if not bj.is_zero:
                        out[i + j] = out[i + j] + ai * bj
            return BiPoly(out)
        if isinstance(other, (int, Fraction)):
            return BiPoly(c * other for c in self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        out = BiPoly.one()
        for _ in range(n):
            out = out * self
        return out

    def exact_div(self, other: "BiPoly") -> "BiPoly":
        """Exact division in Q[mu][t].

        Long division in t; each leading-coefficient division happens in
        Q[mu] and must itself be exact, which holds whenever the overall
        division is exact (the quotient's leading coefficient is the exact
        quotient of leading coefficients, then recurse on the difference).
        """
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        db = other.degree_t
        lead = other.leading
        q = [UniPoly()] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db:
            if rem[-1].is_zero:
                rem.pop()
                continue
            shift = len(rem) - 1 - db
            factor = rem[-1].exact_div(lead)
            q[shift] = factor
            for i, bc in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - factor * bc
            rem.pop()
        while rem and rem[-1].is_zero:
            rem.pop()
        if rem:
            raise InexactDivisionError("inexact division in Q[mu][t]")
        return BiPoly(q)

    def eval_mu(self, mu0) -> UniPoly:
        """Substitute mu := mu0 coefficient-wise; the result is in Q[t]."""
        mu0 = _as_fraction(mu0)
        return UniPoly(c.eval(mu0) for c in self.coeffs)

    def to_unipoly_in_t(self) -> UniPoly:
        """Convert a mu-free BiPoly to a plain polynomial in t."""
        for c in self.coeffs:
            if c.degree > 0:
                raise ValueError("polynomial depends on mu")
        return UniPoly(c[0] for c in self.coeffs)

    def to_json(self) -> list[list[str]]:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[str]]) -> "BiPoly":
        return cls(UniPoly.from_json(row) for row in data)

    def __repr__(self):
        return f"BiPoly({[c.to_json() for c in self.coeffs]})"


def eval_mu(p: BiPoly, mu0) -> UniPoly:
    """Substitute mu := mu0 in a BiPoly, returning a polynomial in t."""
    return p.eval_mu(mu0)


# ---------------------------------------------------------------------------
# Integer kernels for the Bareiss engine.
#
# A univariate integer polynomial is a list[int] with no trailing zeros; a
# bivariate one is a list (t-power) of such lists (mu-power), again with no
# trailing zero coefficients at the t level.
# ---------------------------------------------------------------------------

def _z_strip(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _z_from_fractions(coeffs: Sequence[Fraction]) -> list[int]:
    den = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return _z_strip([int(c * den) for c in coeffs])


def _z_primitive(a: list[int]) -> list[int]:
    if not a:
        return a
    g = 0
    for c in a:
        g = math.gcd(g, c)
    if g > 1:
        a = [c // g for c in a]
    if a[-1] < 0:
        a = [-c for c in a]
    return a


def _z_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b over Z (b nonzero)."""
    r = list(a)
    db = len(b) - 1
    lead = b[-1]
    while r and len(r) - 1 >= db:
        if r[-1] == 0:
            r.pop()
            continue
        shift = len(r) - 1 - db
        top = r[-1]
        r = [lead * c for c in r]
        for i, bc in enumerate(b):
            r[shift + i] -= top * bc
        r.pop()
    return _z_strip(r)


def _z_add(a: list[int], b: list[int]) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _z_strip(out)


def _z_sub(a: list[int], b: list[int]) -> list[int]:
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _z_strip(out)


def _z_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _z_exact_div(a: list[int], b: list[int]) -> list[int]:
    """Exact division in Z[x]; raises if the division leaves a remainder."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return []
    rem = list(a)
    db = len(b) - 1
    lead = b[-1]
    q = [0] * (len(a) - db)
    while rem and len(rem) - 1 >= db:
        if rem[-1] == 0:
            rem.pop()
            continue
        top, r = divmod(rem[-1], lead)
        if r:
            raise InexactDivisionError("inexact division in Z[x]")
        shift = len(rem) - 1 - db
        q[shift] = top
        for i, bc in enumerate(b):
            rem[shift + i] -= top * bc
        rem.pop()
    if _z_strip(rem):
        raise InexactDivisionError("inexact division in Z[x]")
    return q


def _zz_is_zero(a) -> bool:
    return not a


def _zz_neg(a):
    return [[-c for c in row] for row in a]


def _zz_strip(a):
    while a and not a[-1]:
        a.pop()
    return a


def _zz_sub(a, b):
    out = [list(row) for row in a] + [[] for _ in range(len(b) - len(a))]
    for i, row in enumerate(b):
        out[i] = _z_sub(out[i], row)
    return _zz_strip(out)


def _zz_mul(a, b):
    if not a or not b:
        return []
    out = [[] for _ in range(len(a) + len(b) - 1)]
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = _z_add(out[i + j], _z_mul(ai, bj))
    return _zz_strip(out)


def _zz_exact_div(a, b):
    """Exact division in Z[mu][t] via long division in t."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    if not a:
        return []
    rem = [list(row) for row in a]
    db = len(b) - 1
    lead = b[-1]
    q = [[] for _ in range(len(a) - db)]
    while rem and len(rem) - 1 >= db:
        if not rem[-1]:
            rem.pop()
            continue
        factor = _z_exact_div(rem[-1], lead)
        shift = len(rem) - 1 - db
        q[shift] = factor
        for i, bc in enumerate(b):
            if bc:
                rem[shift + i] = _z_sub(rem[shift + i], _z_mul(factor, bc))
        rem.pop()
    if _zz_strip(rem):
        raise InexactDivisionError("inexact division in Z[mu][t]")
    return q


def _zz_bareiss(m: list[list[list[list[int]]]]) -> list[list[int]]:
    """Bareiss fraction-free determinant over Z[mu][t].

    Every division is by the previous pivot and is exact (the quotient is a
    minor of the original matrix, by Sylvester's identity).
    """
    n = len(m)
    sign = 1
    prev = None  # None stands for the constant 1 before the first step
    for k in range(n - 1):
        if _zz_is_zero(m[k][k]):
            for i in range(k + 1, n):
                if not _zz_is_zero(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return []
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            mik = row_i[k]
            for j in range(k + 1, n):
                left = _zz_mul(pivot, row_i[j])
                right = _zz_mul(mik, row_k[j]) if mik else []
                num = _zz_sub(left, right) if right else left
                row_i[j] = num if prev is None else _zz_exact_div(num, prev)
            row_i[k] = []
        prev = pivot
    det = m[n - 1][n - 1]
    return _zz_neg(det) if sign < 0 else det


def bareiss_det(rows: Sequence[Sequence[BiPoly]]) -> BiPoly:
    """Exact determinant of a square BiPoly matrix (0x0 -> 1 by convention).

    Denominators are cleared per row before elimination so the heavy inner
    loops run over plain integers; the accumulated scale divides the result
    back at the end.
    """
    n = len(rows)
    if n == 0:
        return BiPoly.one()
    for row in rows:
        if len(row) != n:
            raise DimensionMismatchError(f"expected {n} columns, got {len(row)}")
    scale = 1
    m = []
    for row in rows:
        den = 1
        for entry in row:
            for up in entry.coeffs:
                for c in up.coeffs:
                    den = math.lcm(den, c.denominator)
        scale *= den
        m.append([
            _zz_strip([
                _z_strip([int(c * den) for c in up.coeffs]) for up in entry.coeffs
            ])
            for entry in row
        ])
    det = _zz_bareiss(m)
    result = BiPoly(UniPoly(row) for row in det)
    if scale != 1:
        result = result * Fraction(1, scale)
    return result


def unipoly_matrix_det(rows: Sequence[Sequence[UniPoly]]) -> UniPoly:
    """Exact determinant of a square matrix of polynomials in one variable."""
    wrapped = [[BiPoly.from_unipoly_in_t(e) for e in row] for row in rows]
    return bareiss_det(wrapped).to_unipoly_in_t()


# ---------------------------------------------------------------------------
# Rational matrices
# ---------------------------------------------------------------------------

def mat_identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    """Matrix product; entries need + and * (Fractions, ints, polynomials)."""
    if not a or not b:
        return []
    rows, inner, cols = len(a), len(b), len(b[0])
    out = []
    for i in range(rows):
        ai = a[i]
        row = []
        for j in range(cols):
            acc = ai[0] * b[0][j]
            for k in range(1, inner):
                acc = acc + ai[k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def mat_kron(a, b):
    """Kronecker product of rational matrices."""
    if not a or not b:
        return []
    p, q = len(b), len(b[0])
    out = []
    for i in range(len(a)):
        for bi in range(p):
            row = []
            for j in range(len(a[0])):
                aij = a[i][j]
                row.extend(aij * b[bi][bj] for bj in range(q))
            out.append(row)
    return out


def mat_inverse_rational(m: Sequence[Sequence]) -> list[list[Fraction]]:
    """Exact inverse of a square rational matrix (Gauss-Jordan).

    Raises SingularMatrixError when the determinant is zero.
    """
    n = len(m)
    for row in m:
        if len(row) != n:
            raise DimensionMismatchError(f"expected {n} columns, got {len(row)}")
    aug = [[_as_fraction(c) for c in row] + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        if pivot != 1:
            aug[col] = [c / pivot for c in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [c - f * p for c, p in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


# ---------------------------------------------------------------------------
# RatFn: the field Q(mu), kept in canonical reduced form
# ---------------------------------------------------------------------------

class RatFn:
    """Reduced fraction num/den of UniPoly values.

    Canonical form: gcd(num, den) = 1, den monic, sign carried by the
    numerator.  Structural equality is therefore a correct equality test.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_unipoly(num)
        den = UniPoly.one() if den is None else _as_unipoly(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            self.num = UniPoly()
            self.den = UniPoly.one()
            return
        if den.degree > 0 and num.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        lead = den.leading
        if lead != 1:
            num = num * (Fraction(1) / lead)
            den = den * (Fraction(1) / lead)
        self.num = num
        self.den = den

    @classmethod
    def zero(cls) -> "RatFn":
        return cls(UniPoly())

    @classmethod
    def one(cls) -> "RatFn":
        return cls(UniPoly.one())

    @classmethod
    def from_scalar(cls, c) -> "RatFn":
        return cls(UniPoly((c,)))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFn):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash(("RatFn", self.num.coeffs, self.den.coeffs))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __neg__(self) -> "RatFn":
        out = RatFn.__new__(RatFn)
        out.num = -self.num
        out.den = self.den
        return out

    def __add__(self, other: "RatFn") -> "RatFn":
        if not isinstance(other, RatFn):
            return NotImplemented
        if self.den == other.den:
            return RatFn(self.num + other.num, self.den)
        return RatFn(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RatFn") -> "RatFn":
        if not isinstance(other, RatFn):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: "RatFn") -> "RatFn":
        if not isinstance(other, RatFn):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RatFn.zero()
        return RatFn(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatFn") -> "RatFn":
        if not isinstance(other, RatFn):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RatFn(self.num * other.den, self.den * other.num)

    def inverse(self) -> "RatFn":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        return RatFn(self.den, self.num)

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "RatFn":
        return cls(UniPoly.from_json(data["num"]), UniPoly.from_json(data["den"]))

    def __repr__(self):
        return f"RatFn({self.num.to_json()}, {self.den.to_json()})"


# ---------------------------------------------------------------------------
# RatFnPoly: Q(mu)[t]
# ---------------------------------------------------------------------------

def _as_ratfn(x) -> RatFn:
    if isinstance(x, RatFn):
        return x
    if isinstance(x, UniPoly):
        return RatFn(x)
    return RatFn.from_scalar(x)


class RatFnPoly:
    """Polynomial in t over the field Q(mu) (a principal ideal domain)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_ratfn(c) for c in coeffs]
        while cs and cs[-1].is_zero:
            cs.pop()
        self.coeffs: tuple[RatFn, ...] = tuple(cs)

    @classmethod
    def zero(cls) -> "RatFnPoly":
        return cls()

    @classmethod
    def one(cls) -> "RatFnPoly":
        return cls((RatFn.one(),))

    @classmethod
    def from_bipoly(cls, p: BiPoly) -> "RatFnPoly":
        return cls(RatFn(c) for c in p.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> RatFn:
        if not self.coeffs:
            return RatFn.zero()
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        if isinstance(other, RatFnPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("RatFnPoly", tuple((c.num.coeffs, c.den.coeffs) for c in self.coeffs)))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __neg__(self) -> "RatFnPoly":
        return RatFnPoly(-c for c in self.coeffs)

    def __add__(self, other: "RatFnPoly") -> "RatFnPoly":
        if not isinstance(other, RatFnPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return RatFnPoly(out)

    def __sub__(self, other: "RatFnPoly") -> "RatFnPoly":
        if not isinstance(other, RatFnPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RatFnPoly):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return RatFnPoly()
            out = [RatFn.zero()] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if ai.is_zero:
                    continue
                for j, bj in enumerate(b):
                    if not bj.is_zero:
                        out[i + j] = out[i + j] + ai * bj
            return RatFnPoly(out)
        if isinstance(other, RatFn):
            return RatFnPoly(c * other for c in self.coeffs)
        return NotImplemented

    def scale(self, f: RatFn) -> "RatFnPoly":
        return RatFnPoly(c * f for c in self.coeffs)

    def __divmod__(self, other: "RatFnPoly"):
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead_inv = other.leading.inverse()
        q = [RatFn.zero()] * max(len(rem) - db, 0)
        while len(rem) - 1 >= db:
            if rem[-1].is_zero:
                rem.pop()
                continue
            shift = len(rem) - 1 - db
            factor = rem[-1] * lead_inv
            q[shift] = factor
            for i, bc in enumerate(other.coeffs):
                if not bc.is_zero:
                    rem[shift + i] = rem[shift + i] - factor * bc
            rem.pop()
        return RatFnPoly(q), RatFnPoly(rem)

    def __floordiv__(self, other: "RatFnPoly") -> "RatFnPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "RatFnPoly") -> "RatFnPoly":
        return divmod(self, other)[1]

    def divides(self, other: "RatFnPoly") -> bool:
        """True when self divides other exactly in Q(mu)[t]."""
        if self.is_zero:
            return other.is_zero
        return (other % self).is_zero

    def monic(self) -> "RatFnPoly":
        if self.is_zero:
            return self
        lead = self.leading
        if lead == RatFn.one():
            return self
        inv = lead.inverse()
        return RatFnPoly(c * inv for c in self.coeffs)

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[dict]) -> "RatFnPoly":
        return cls(RatFn.from_json(d) for d in data)

    def __repr__(self):
        return f"RatFnPoly({self.to_json()})"


def ratfnpoly_gcd(a: RatFnPoly, b: RatFnPoly) -> RatFnPoly:
    """Monic gcd in Q(mu)[t] by the Euclidean algorithm."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def _poly_lcm(a: UniPoly, b: UniPoly) -> UniPoly:
    g = poly_gcd(a, b)
    return (a * b.exact_div(g)).monic()


def unit_normalize_ratfnpolys(entries: Sequence[RatFnPoly]) -> list[RatFnPoly]:
    """Scale a vector of Q(mu)[t] polynomials by one unit of Q(mu) so that
    every coefficient becomes a polynomial and the coefficients are jointly
    primitive (polynomial content 1, integer content 1).

    Unit scalings leave Smith-form equivalence untouched; applying this after
    each elimination step is what keeps SNF intermediates from the classical
    coefficient explosion of polynomial remainder sequences.
    """
    coeffs = [c for e in entries for c in e.coeffs if not c.is_zero]
    if not coeffs:
        return list(entries)
    lcm_den = UniPoly.one()
    for c in coeffs:
        if c.den.degree > 0:
            lcm_den = _poly_lcm(lcm_den, c.den)
    nums: list[list[UniPoly]] = []
    for e in entries:
        row = []
        for c in e.coeffs:
            if c.is_zero:
                row.append(UniPoly())
            elif c.den.degree > 0 or c.den.leading != 1:
                row.append(c.num * lcm_den.exact_div(c.den))
            elif lcm_den.degree > 0:
                row.append(c.num * lcm_den)
            else:
                row.append(c.num)
        nums.append(row)
    content = UniPoly()
    for row in nums:
        for p in row:
            if not p.is_zero:
                content = poly_gcd(content, p)
        if content.degree == 0 and not content.is_zero:
            break
    if content.degree > 0:
        nums = [[p.exact_div(content) if not p.is_zero else p for p in row]
                for row in nums]
    int_gcd = 0
    int_lcm = 1
    for row in nums:
        for p in row:
            for f in p.coeffs:
                int_gcd = math.gcd(int_gcd, f.numerator)
                int_lcm = math.lcm(int_lcm, f.denominator)
    scalar = Fraction(int_lcm, int_gcd or 1)
    out = []
    for row in nums:
        fresh = []
        for p in row:
            num = p * scalar if scalar != 1 else p
            r = RatFn.__new__(RatFn)
            r.num = num
            r.den = UniPoly.one()
            fresh.append(r)
        out.append(RatFnPoly(fresh))
    return out
