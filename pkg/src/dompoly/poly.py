"""Dense univariate polynomials with exact integer coefficients.

``Polynomial`` stores ``coeffs[i]`` as the coefficient of ``x**i``. The zero
polynomial has an empty coefficient tuple. Floats only enter when a
polynomial is evaluated at a complex point.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

import mpmath

# Working precision (bits) for evaluate_complex; 113 bits is quad precision,
# comfortably above double-double.
EVAL_PREC = 113


class NonDivisible(ArithmeticError):
    """Exact division left a nonzero remainder."""

    def __init__(self, dividend: Polynomial, divisor: Polynomial, remainder):
        super().__init__(f"{dividend} is not divisible by {divisor}")
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: int) -> Polynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> Polynomial:
        return cls([0] * degree + [c])

    @classmethod
    def x(cls) -> Polynomial:
        return cls((0, 1))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of the zero polynomial is undefined")
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self[i] - other[i] for i in range(n))

    def __rsub__(self, other) -> Polynomial:
        return _coerce(other) - self

    def __mul__(self, other) -> Polynomial:
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, k: int) -> Polynomial:
        """Multiply by x**k."""
        if not self.coeffs:
            return self
        return Polynomial((0,) * k + self.coeffs)

    def content(self) -> int:
        return reduce(math.gcd, self.coeffs, 0)

    def primitive(self) -> Polynomial:
        """Divide out the content and make the leading coefficient positive."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.coeffs[-1] < 0:
            c = -c
        return Polynomial(a // c for a in self.coeffs)

    def derivative(self) -> Polynomial:
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, z):
        """Plain Horner evaluation in whatever number type ``z`` has."""
        acc = 0 * z
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)})"


def _coerce(value) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int):
        return Polynomial.constant(value)
    return NotImplemented


X = Polynomial.x()
ONE = Polynomial.constant(1)
ZERO = Polynomial()


def add(a: Polynomial, b: Polynomial) -> Polynomial:
    return a + b


def sub(a: Polynomial, b: Polynomial) -> Polynomial:
    return a - b


def mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def pow(a: Polynomial, k: int) -> Polynomial:  # noqa: A001
    return a ** k


def _divmod_rational(a: Sequence, b: Sequence) -> tuple[list[Fraction], list[Fraction]]:
    """Long division over the rationals; inputs are low-to-high coefficient lists."""
    rem = [Fraction(c) for c in a]
    lead = Fraction(b[-1])
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], rem
    quot = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        q = rem[k + db] / lead
        quot[k] = q
        if q:
            for j, bj in enumerate(b):
                rem[k + j] -= q * bj
    del rem[db:]
    while rem and rem[-1] == 0:
        rem.pop()
    return quot, rem


def divide_exact(a: Polynomial, b: Polynomial) -> Polynomial:
    """Return ``q`` with ``a == q * b``; raise NonDivisible otherwise."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return Polynomial()
    quot, rem = _divmod_rational(a.coeffs, b.coeffs)
    if rem:
        raise NonDivisible(a, b, rem)
    if any(q.denominator != 1 for q in quot):
        # divisible over Q but not over Z
        raise NonDivisible(a, b, [])
    return Polynomial(int(q) for q in quot)


def gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Primitive GCD over Z[x] (positive leading coefficient, content ignored)."""
    if a.is_zero():
        return b.primitive()
    if b.is_zero():
        return a.primitive()
    ra: list[Fraction] = [Fraction(c) for c in a.coeffs]
    rb: list[Fraction] = [Fraction(c) for c in b.coeffs]
    while rb:
        _, r = _divmod_rational(ra, rb)
        ra, rb = rb, r
    den = reduce(lambda acc, f: acc * f.denominator // math.gcd(acc, f.denominator), ra, 1)
    return Polynomial(int(f * den) for f in ra).primitive()


def lowest_degree(a: Polynomial) -> int:
    if a.is_zero():
        raise ValueError("lowest degree of the zero polynomial is undefined")
    return next(i for i, c in enumerate(a.coeffs) if c)


def evaluate_complex(a: Polynomial, z: complex, prec: int = EVAL_PREC) -> complex:
    """Horner evaluation at ``z`` carried in ``prec``-bit arithmetic, rounded once.

    The exact integer coefficients enter the accumulation unrounded, so the
    error before the final rounding is bounded by roughly
    ``degree * 2**-prec * sum(|a_i| |z|**i)``; the returned double adds one
    rounding of relative size 2**-53.
    """
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite evaluation point {z!r}")
    with mpmath.workprec(prec):
        w = mpmath.mpc(z)
        acc = mpmath.mpc(0)
        for c in reversed(a.coeffs):
            acc = acc * w + c
        out = complex(acc)
    if not (math.isfinite(out.real) and math.isfinite(out.imag)):
        raise OverflowError(f"value of {a} at {z} exceeds double range")
    return out


def evaluate_mp(a: Polynomial, z) -> mpmath.mpc:
    """Horner in the caller's current mpmath context."""
    acc = mpmath.mpc(0)
    for c in reversed(a.coeffs):
        acc = acc * z + c
    return acc


def evaluate_gaussian_rational(a: Polynomial, re: Fraction, im: Fraction) -> tuple[Fraction, Fraction]:
    """Exact value at ``re + i*im``, returned as (real, imaginary) fractions."""
    ar, ai = Fraction(0), Fraction(0)
    for c in reversed(a.coeffs):
        ar, ai = ar * re - ai * im + c, ar * im + ai * re
    return ar, ai


def render(a: Polynomial) -> str:
    """Canonical text, lowest degree first: ``6x^2 + 4x^3 + x^4``."""
    if a.is_zero():
        return "0"
    parts: list[str] = []
    for i, c in enumerate(a.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            var = "x" if i == 1 else f"x^{i}"
            body = var if mag == 1 else f"{mag}{var}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def to_json_list(a: Polynomial) -> list[str]:
    return [str(c) for c in a.coeffs]


def from_json_list(items: Sequence) -> Polynomial:
    return Polynomial(int(s) for s in items)


def dumps(a: Polynomial) -> str:
    return json.dumps(to_json_list(a))


def loads(text: str) -> Polynomial:
    return from_json_list(json.loads(text))


class RationalFunction:
    """Quotient of integer polynomials, kept reduced.

    Numerator and denominator share no nonconstant factor and no common
    integer content; the denominator has a positive leading coefficient.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial | int, den: Polynomial | int = 1):
        num = _coerce(num)
        den = _coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = Polynomial(), ONE
            return
        g = gcd(num, den)
        if g.degree > 0:
            num = divide_exact(num, g)
            den = divide_exact(den, g)
        c = math.gcd(num.content(), den.content())
        if den.leading < 0:
            c = -c
        if c != 1:
            num = Polynomial(x // c for x in num.coeffs)
            den = Polynomial(x // c for x in den.coeffs)
        self.num, self.den = num, den

    @classmethod
    def of(cls, value) -> RationalFunction:
        if isinstance(value, RationalFunction):
            return value
        return cls(value)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0 and self.den.leading == 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, (RationalFunction, Polynomial, int)):
            return NotImplemented
        other = RationalFunction.of(other)
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __add__(self, other) -> RationalFunction:
        o = RationalFunction.of(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other) -> RationalFunction:
        return self + (-RationalFunction.of(other))

    def __rsub__(self, other) -> RationalFunction:
        return RationalFunction.of(other) - self

    def __mul__(self, other) -> RationalFunction:
        o = RationalFunction.of(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> RationalFunction:
        o = RationalFunction.of(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> RationalFunction:
        return RationalFunction.of(other) / self

    def to_polynomial(self) -> Polynomial:
        """Clear the denominator exactly or raise NonDivisible."""
        return divide_exact(self.num, self.den)

    def __call__(self, z):
        return self.num(z) / self.den(z)

    def __str__(self) -> str:
        if self.den == ONE:
            return render(self.num)
        return f"({render(self.num)}) / ({render(self.den)})"

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"
