"""Exact arithmetic in Q(sqrt2, i) and dense exact linear algebra.

Every scalar in this package is an element a + b*sqrt2 + i*(c + d*sqrt2)
with rational components.  The field is closed under all arithmetic used
here, so equality and zero tests are exact; nothing in this module (or
anything built on it) ever compares against a tolerance.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def _render_frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class ExactScalar:
    """One element of Q(sqrt2, i), stored as four rationals (a, b, c, d).

    The value is a + b*sqrt2 + i*(c + d*sqrt2).  Instances are immutable;
    arithmetic returns new objects.  Zero means all four components are
    zero, which makes ``is_zero`` exact.
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        object.__setattr__(self, "a", _frac(a))
        object.__setattr__(self, "b", _frac(b))
        object.__setattr__(self, "c", _frac(c))
        object.__setattr__(self, "d", _frac(d))

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return not (self.a or self.b or self.c or self.d)

    def is_real(self) -> bool:
        return not (self.c or self.d)

    def is_rational(self) -> bool:
        return not (self.b or self.c or self.d)

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.a

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (int, Fraction, ExactScalar)):
            return NotImplemented
        other = coerce(other)
        # adding zero returns the other operand unchanged (both immutable)
        if not (other.a or other.b or other.c or other.d):
            return self
        if not (self.a or self.b or self.c or self.d):
            return other
        return ExactScalar(self.a + other.a, self.b + other.b,
                           self.c + other.c, self.d + other.d)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        if not isinstance(other, (int, Fraction, ExactScalar)):
            return NotImplemented
        return self + (-coerce(other))

    def __rsub__(self, other):
        return coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, (int, Fraction, ExactScalar)):
            return NotImplemented
        other = coerce(other)
        # (u1 + i v1)(u2 + i v2) with u, v in Q(sqrt2):
        # real part u1 u2 - v1 v2, imaginary part u1 v2 + v1 u2,
        # and (p + q sqrt2)(r + s sqrt2) = pr + 2qs + (ps + qr) sqrt2.
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        if not (b1 or c1 or d1):                     # left factor rational
            if not a1:
                return ZERO
            if not (b2 or c2 or d2):
                return ExactScalar(a1 * a2)
            return ExactScalar(a1 * a2, a1 * b2, a1 * c2, a1 * d2)
        if not (a2 or b2 or c2 or d2):               # right factor zero
            return ZERO
        ra = a1 * a2 + 2 * b1 * b2 - c1 * c2 - 2 * d1 * d2
        rb = a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2
        ia = a1 * c2 + 2 * b1 * d2 + c1 * a2 + 2 * d1 * b2
        ib = a1 * d2 + b1 * c2 + c1 * b2 + d1 * a2
        return ExactScalar(ra, rb, ia, ib)

    __rmul__ = __mul__

    def conjugate(self) -> "ExactScalar":
        """Complex conjugation: i -> -i."""
        return ExactScalar(self.a, self.b, -self.c, -self.d)

    def sqrt2_conjugate(self) -> "ExactScalar":
        """Galois conjugation sqrt2 -> -sqrt2."""
        return ExactScalar(self.a, -self.b, self.c, -self.d)

    def inverse(self) -> "ExactScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(sqrt2, i)")
        # 1/(u + iv) = (u - iv)/(u^2 + v^2), with the denominator a nonzero
        # element p + q sqrt2 of Q(sqrt2), inverted by its Galois conjugate:
        # 1/(p + q sqrt2) = (p - q sqrt2)/(p^2 - 2 q^2).
        conj = self.conjugate()
        n = self * conj                       # real: n = p + q sqrt2
        p, q = n.a, n.b
        den = p * p - 2 * q * q               # nonzero: sqrt2 is irrational
        inv_n = ExactScalar(p / den, -q / den)
        return conj * inv_n

    def __truediv__(self, other):
        return self * coerce(other).inverse()

    def __rtruediv__(self, other):
        return coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- order structure (real elements only) ----------------------------

    def real_sign(self) -> int:
        """Sign (-1, 0, +1) of a real element a + b*sqrt2."""
        if not self.is_real():
            raise ValueError(f"{self} is not real, sign undefined")
        p, q = self.a, self.b
        if not p and not q:
            return 0
        if p >= 0 and q >= 0:
            return 1
        if p <= 0 and q <= 0:
            return -1
        # mixed signs: compare p^2 with 2 q^2
        big_p = p * p > 2 * q * q
        return (1 if big_p else -1) if p > 0 else (-1 if big_p else 1)

    def __lt__(self, other):
        return (self - coerce(other)).real_sign() < 0

    def __le__(self, other):
        return (self - coerce(other)).real_sign() <= 0

    def __gt__(self, other):
        return (self - coerce(other)).real_sign() > 0

    def __ge__(self, other):
        return (self - coerce(other)).real_sign() >= 0

    # -- equality and rendering ------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = coerce(other)
        if not isinstance(other, ExactScalar):
            return NotImplemented
        return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def canonical(self) -> str:
        """Full canonical rendering ``a + b*r2 + i*(c + d*r2)``."""
        return (f"{_render_frac(self.a)} + {_render_frac(self.b)}*r2"
                f" + i*({_render_frac(self.c)} + {_render_frac(self.d)}*r2)")

    def __str__(self):
        real_terms = []
        if self.a:
            real_terms.append(_render_frac(self.a))
        if self.b:
            real_terms.append(f"{_render_frac(self.b)}*r2")
        imag_terms = []
        if self.c:
            imag_terms.append(_render_frac(self.c))
        if self.d:
            imag_terms.append(f"{_render_frac(self.d)}*r2")
        parts = []
        if real_terms:
            parts.append(" + ".join(real_terms))
        if imag_terms:
            body = " + ".join(imag_terms)
            parts.append(f"i*({body})" if (len(imag_terms) > 1 or self.d) else f"i*{body}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"ExactScalar({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"


def coerce(x) -> ExactScalar:
    """Coerce an int, Fraction or ExactScalar into the field."""
    if isinstance(x, ExactScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return ExactScalar(x)
    raise TypeError(f"cannot coerce {x!r} into Q(sqrt2, i)")


_CANONICAL_RE = re.compile(
    r"^(?P<a>[+-]?\d+(?:/\d+)?)\+(?P<b>[+-]?\d+(?:/\d+)?)\*r2"
    r"\+i\*\((?P<c>[+-]?\d+(?:/\d+)?)\+(?P<d>[+-]?\d+(?:/\d+)?)\*r2\)$")
_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_scalar(text: str) -> ExactScalar:
    """Parse the canonical rendering (or a bare rational) back into the field."""
    flat = text.replace(" ", "")
    if _RATIONAL_RE.match(flat):
        return ExactScalar(Fraction(flat))
    m = _CANONICAL_RE.match(flat)
    if not m:
        raise ValueError(f"not a canonical scalar literal: {text!r}")
    return ExactScalar(*(Fraction(m.group(k)) for k in "abcd"))


def _rational_sqrt(q: Fraction):
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def real_sqrt(x: ExactScalar):
    """The nonnegative square root of a real element, or None if it leaves the field.

    Solves (alpha + beta*sqrt2)^2 = p + q*sqrt2 exactly over the rationals.
    """
    x = coerce(x)
    if not x.is_real():
        raise ValueError(f"{x} is not real")
    if x.real_sign() < 0:
        return None
    p, q = x.a, x.b
    if not q:
        r = _rational_sqrt(p)
        if r is not None:
            return ExactScalar(r)
        r = _rational_sqrt(p / 2)
        return ExactScalar(0, r) if r is not None else None
    # beta = q / (2 alpha) and 2 alpha^4 - 2 p alpha^2 + q^2 = 0:
    disc = _rational_sqrt(p * p - 2 * q * q)
    if disc is None:
        return None
    for alpha_sq in ((p + disc) / 2, (p - disc) / 2):
        alpha = _rational_sqrt(alpha_sq)
        if alpha is None or alpha == 0:
            continue
        for sign in (1, -1):
            a = sign * alpha
            root = ExactScalar(a, q / (2 * a))
            if root.real_sign() >= 0 and root * root == x:
                return root
    return None


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
I = ExactScalar(0, 0, 1)
SQRT2 = ExactScalar(0, 1)
INV_SQRT2 = ExactScalar(0, Fraction(1, 2))
HALF = ExactScalar(Fraction(1, 2))


class ExactMatrix:
    """A dense matrix over Q(sqrt2, i).  Immutable; all reductions are exact.

    Row reduction uses Gauss-Jordan elimination with the leftmost nonzero
    pivot in each column; since field arithmetic is exact there is no
    pivoting strategy beyond "first nonzero entry".
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(coerce(x) for x in r) for r in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "ExactMatrix":
        return cls([[ZERO] * ncols for _ in range(nrows)])

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def column(cls, entries) -> "ExactMatrix":
        return cls([[coerce(x)] for x in entries])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return ExactMatrix([[x + y for x, y in zip(r, s)]
                            for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return ExactMatrix([[-x for x in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ExactScalar)):
            s = coerce(other)
            return ExactMatrix([[x * s for x in r] for r in self.rows])
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        # row-major accumulation, skipping zero entries on both sides
        ncols = other.ncols
        out = []
        for r in self.rows:
            acc = [ZERO] * ncols
            for k, x in enumerate(r):
                if x.is_zero():
                    continue
                for j, y in enumerate(other.rows[k]):
                    if not y.is_zero():
                        acc[j] = acc[j] + x * y
            out.append(acc)
        return ExactMatrix(out)

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(list(zip(*self.rows))) if self.rows else self

    def kron(self, other: "ExactMatrix") -> "ExactMatrix":
        out = []
        for r in self.rows:
            for s in other.rows:
                out.append([x * y for x in r for y in s])
        return ExactMatrix(out)

    def trace(self) -> ExactScalar:
        if self.nrows != self.ncols:
            raise ValueError("trace of a non-square matrix")
        return sum((self.rows[i][i] for i in range(self.nrows)), ZERO)

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.rows for x in r)

    def is_scalar(self, lam) -> bool:
        """True when this matrix equals lam * identity exactly."""
        lam = coerce(lam)
        if self.nrows != self.ncols:
            return False
        return all((self.rows[i][j] == lam if i == j else self.rows[i][j].is_zero())
                   for i in range(self.nrows) for j in range(self.ncols))

    def col(self, j: int):
        return tuple(r[j] for r in self.rows)

    def _rref(self):
        """Reduced row echelon form; returns (rows as lists, pivot column list)."""
        rows = [list(r) for r in self.rows]
        pivots = []
        lead = 0
        for j in range(self.ncols):
            pivot_row = None
            for i in range(lead, len(rows)):
                if not rows[i][j].is_zero():
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            rows[lead], rows[pivot_row] = rows[pivot_row], rows[lead]
            inv = rows[lead][j].inverse()
            rows[lead] = [x * inv for x in rows[lead]]
            for i in range(len(rows)):
                if i != lead and not rows[i][j].is_zero():
                    f = rows[i][j]
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[lead])]
            pivots.append(j)
            lead += 1
            if lead == len(rows):
                break
        return rows, pivots

    def rank(self) -> int:
        return len(self._rref()[1])

    def nullspace(self):
        """Exact kernel basis, one column vector per free column of the rref."""
        rows, pivots = self._rref()
        pivot_set = set(pivots)
        free = [j for j in range(self.ncols) if j not in pivot_set]
        basis = []
        for f in free:
            v = [ZERO] * self.ncols
            v[f] = ONE
            for r, pj in zip(rows, pivots):
                v[pj] = -r[f]
            basis.append(ExactMatrix.column(v))
        return basis

    def inverse(self) -> "ExactMatrix":
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        aug = ExactMatrix([list(r) + list(e) for r, e in
                           zip(self.rows, ExactMatrix.identity(n).rows)])
        rows, pivots = aug._rref()
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return ExactMatrix([r[n:] for r in rows])

    def solve(self, rhs: "ExactMatrix") -> "ExactMatrix":
        """Solve self @ x = rhs for a square invertible self."""
        return self.inverse() @ rhs

    def char_poly(self):
        """Characteristic polynomial det(tI - M) by the Faddeev-LeVerrier scheme.

        Returns coefficients [c_0, ..., c_n] with c_n = 1, ordered by degree.
        """
        n = self.nrows
        if n != self.ncols:
            raise ValueError("characteristic polynomial of a non-square matrix")
        coeffs = [ONE]                      # leading coefficient of t^n
        m = ExactMatrix.zeros(n, n)
        c = ONE
        for k in range(1, n + 1):
            m = self @ m + c * ExactMatrix.identity(n)
            c = (self @ m).trace() * ExactScalar(Fraction(-1, k))
            coeffs.append(c)
        coeffs.reverse()                    # now [c_0, ..., c_n]
        return coeffs

    def __str__(self):
        return "[" + "; ".join(", ".join(str(x) for x in r) for r in self.rows) + "]"

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols})"


def solve_scalar_action(m: ExactMatrix, lam) -> bool:
    """Decide whether m acts as the scalar lam, i.e. m == lam * identity."""
    return m.is_scalar(lam)
