"""Exact dense polynomial arithmetic over the integers.

A polynomial is a tuple of arbitrary-precision coefficients, lowest
degree first, with no trailing zeros; the zero polynomial is the empty
tuple.  On top of the ring operations this module provides exact
division with a divisibility-failure error distinct from division by
zero, cyclotomic polynomials by memoized recursive division, extraction
of cyclotomic multiplicities and the full cyclotomic part of a
polynomial, and integer resultants by the subresultant pseudo-remainder
sequence (used for conjugate products over roots of unity).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator

from .numtheory import divisors, euler_phi, mobius, totient_range


class DivisibilityError(ArithmeticError):
    """Raised when an exact division has a nonzero remainder."""


class Poly:
    """Integer polynomial, dense, lowest degree first.

    Immutable; arithmetic returns new instances in canonical form
    (trailing zeros trimmed, zero polynomial == empty tuple).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "Poly":
        if degree < 0:
            raise ValueError("negative exponent")
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        """Leading coefficient; 0 for the zero polynomial."""
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def content(self) -> int:
        """gcd of |coefficients|; 0 for the zero polynomial."""
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def norm1(self) -> int:
        """Sum of absolute values of the coefficients."""
        return sum(abs(c) for c in self.coeffs)

    def __call__(self, z: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * z + c
        return out

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Poly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        out = Poly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k (k >= 0)."""
        if k < 0:
            raise ValueError("negative shift")
        if self.is_zero:
            return self
        return Poly((0,) * k + self.coeffs)

    def derivative(self, order: int = 1) -> "Poly":
        """Exact formal derivative of the given order (order >= 0)."""
        if order < 0:
            raise ValueError("negative derivative order")
        cs = self.coeffs
        for _ in range(order):
            cs = tuple(i * c for i, c in enumerate(cs))[1:]
            if not cs:
                break
        return Poly(cs)

    def scale_div(self, c: int) -> "Poly":
        """Divide every coefficient exactly by the integer c."""
        if c == 0:
            raise ZeroDivisionError("scalar division by zero")
        if any(x % c for x in self.coeffs):
            raise DivisibilityError(f"content not divisible by {c}")
        return Poly(x // c for x in self.coeffs)

    def primitive(self) -> "Poly":
        """Primitive part with positive leading coefficient."""
        if self.is_zero:
            return self
        c = self.content
        if self.leading < 0:
            c = -c
        return self.scale_div(c)


def _coerce(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, int):
        return Poly((value,))
    raise TypeError(f"cannot coerce {type(value).__name__} to Poly")


def exact_div(f: Poly, g: Poly) -> Poly:
    """Exact quotient f/g in Z[x].

    Raises ZeroDivisionError for g = 0 and DivisibilityError when g does
    not divide f with an integer-coefficient quotient.
    """
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if f.is_zero:
        return Poly()
    df, dg = f.degree, g.degree
    if df < dg:
        raise DivisibilityError("degree of divisor exceeds degree of dividend")
    if g.leading == 1:
        # synthetic division stays in the integers for monic divisors
        rem = list(f.coeffs)
        q = [0] * (df - dg + 1)
        for i in range(df - dg, -1, -1):
            c = rem[i + dg]
            if c:
                q[i] = c
                for j, gc in enumerate(g.coeffs):
                    rem[i + j] -= c * gc
        if any(rem):
            raise DivisibilityError("nonzero remainder")
        return Poly(q)
    glead = Fraction(g.leading)
    rem = [Fraction(c) for c in f.coeffs]
    q = [Fraction(0)] * (df - dg + 1)
    for i in range(df - dg, -1, -1):
        c = rem[i + dg] / glead
        if c:
            q[i] = c
            for j, gc in enumerate(g.coeffs):
                rem[i + j] -= c * gc
    if any(rem):
        raise DivisibilityError("nonzero remainder")
    if any(c.denominator != 1 for c in q):
        raise DivisibilityError("quotient has non-integer coefficients")
    return Poly(int(c) for c in q)


def pseudo_divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Fraction-free division: lc(g)^(deg f - deg g + 1) * f = q*g + r."""
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    df, dg = f.degree, g.degree
    if df < dg:
        return Poly(), f
    lb = g.leading
    q = Poly()
    r = f
    e = df - dg + 1
    while not r.is_zero and r.degree >= dg:
        s = Poly.monomial(r.degree - dg, r.leading)
        q = q * lb + s
        r = r * lb - s * g
        e -= 1
    scale = lb**e
    return q * scale, r * scale


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """gcd in Z[x] (contents included), positive leading coefficient."""
    if f.is_zero:
        return _abs_poly(g)
    if g.is_zero:
        return _abs_poly(f)
    c = math.gcd(f.content, g.content)
    a, b = f.primitive(), g.primitive()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        _, r = pseudo_divmod(a, b)
        a, b = b, r.primitive()
    return a * c


def _abs_poly(f: Poly) -> Poly:
    return -f if f.leading < 0 else f


def resultant(f: Poly, g: Poly) -> int:
    """Resultant of two integer polynomials.

    Subresultant pseudo-remainder sequence (Cohen, Alg. 3.3.7): exact,
    all intermediate divisions stay in the integers.
    """
    if f.is_zero or g.is_zero:
        return 0
    s = 1
    a, b = f, g
    if a.degree < b.degree:
        if (a.degree * b.degree) % 2 == 1:
            s = -1
        a, b = b, a
    if b.degree == 0:
        return s * b.coeffs[0] ** a.degree
    ca, cb = a.content, b.content
    a = a.scale_div(ca)
    b = b.scale_div(cb)
    t = ca**b.degree * cb**a.degree
    gg = 1
    hh = 1
    while True:
        da, db = a.degree, b.degree
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            s = -s
        _, r = pseudo_divmod(a, b)
        a = b
        b = r.scale_div(gg * hh**delta)
        gg = a.leading
        if delta > 0:
            hh = gg**delta // hh ** (delta - 1)
        if b.is_zero:
            return 0
        if b.degree == 0:
            da = a.degree
            final = b.coeffs[0] ** da
            if da > 1:
                final //= hh ** (da - 1)
            return s * t * final


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> Poly:
    """The n-th cyclotomic polynomial, degree phi(n), monic.

    Computed by dividing x^n - 1 by the cyclotomic polynomials of the
    proper divisors of n; the cache is idempotent and safe to share.
    """
    if n < 1:
        raise ValueError(f"positive index required, got {n}")
    f = Poly((-1,) + (0,) * (n - 1) + (1,))
    for d in divisors(n):
        if d < n:
            f = exact_div(f, cyclotomic(d))
    return f


def cyclotomic_value(n: int, z: int) -> int:
    """Phi_n(z) for an integer z, via the Moebius product over z^d - 1.

    Falls back to direct evaluation when a factor vanishes (|z| <= 1).
    """
    if n < 1:
        raise ValueError(f"positive index required, got {n}")
    if n == 1:
        return z - 1
    num = 1
    den = 1
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 0:
            continue
        term = z**d - 1
        if term == 0:
            return cyclotomic(n)(z)
        if mu == 1:
            num *= term
        else:
            den *= term
    q, r = divmod(num, den)
    if r:
        return cyclotomic(n)(z)
    return q


def cyclotomic_multiplicity(f: Poly, d: int) -> int:
    """Largest V with Phi_d^V dividing f, by repeated exact division."""
    if f.is_zero:
        raise ValueError("zero polynomial has infinite multiplicity")
    phi_d = cyclotomic(d)
    v = 0
    while True:
        try:
            f = exact_div(f, phi_d)
        except DivisibilityError:
            return v
        v += 1


def conjugate_product(f: Poly, d1: int) -> int:
    """Product of f over all primitive d1-th roots of unity.

    Equals resultant(Phi_d1, f) since Phi_d1 is monic; an exact rational
    integer by Galois invariance.
    """
    if f.is_zero:
        raise ValueError("zero polynomial")
    return resultant(cyclotomic(d1), f)


@dataclass(frozen=True)
class CyclotomicFactorization:
    """f = content * prod_d Phi_d^multiplicities[d] * cofactor, exactly.

    The cofactor is primitive with positive leading coefficient and has
    no cyclotomic factor of index within the search bound.
    """

    content: int
    multiplicities: dict[int, int]
    cofactor: Poly

    def reassemble(self) -> Poly:
        out = Poly((self.content,))
        for d, v in sorted(self.multiplicities.items()):
            out = out * cyclotomic(d) ** v
        return out * self.cofactor

    def indices(self) -> frozenset[int]:
        return frozenset(self.multiplicities)


def cyclotomic_part(f: Poly, max_index: int | None = None) -> CyclotomicFactorization:
    """Extract every cyclotomic factor of f with its multiplicity.

    Candidate indices are all d with phi(d) <= deg f (any Phi_d dividing
    f must satisfy that), optionally capped at max_index.  A cheap
    integer-point filter (Phi_d(z) must divide f(z)) rejects most
    non-divisors before any polynomial division is attempted.
    """
    if f.is_zero:
        raise ValueError("zero polynomial")
    c = f.content
    if f.leading < 0:
        c = -c
    g = f.scale_div(c)
    mult: dict[int, int] = {}
    if g.degree >= 1:
        candidates = totient_range(g.degree)
        if max_index is not None:
            candidates = [d for d in candidates if d <= max_index]
        z = 2
        while g(z) == 0:
            z += 1
        gz = g(z)
        for d in candidates:
            if euler_phi(d) > g.degree:
                continue
            if gz % cyclotomic_value(d, z):
                continue
            phi_d = cyclotomic(d)
            while True:
                try:
                    g = exact_div(g, phi_d)
                except DivisibilityError:
                    break
                mult[d] = mult.get(d, 0) + 1
                gz = g(z)
            if g.degree == 0:
                break
    return CyclotomicFactorization(content=c, multiplicities=mult, cofactor=g)


def poly_to_strings(f: Poly) -> list[str]:
    """Wire form: coefficient list, low to high, as decimal strings."""
    return [str(c) for c in f.coeffs]


def poly_from_strings(items: Iterable[str | int]) -> Poly:
    """Parse the wire form; accepts plain ints for convenience."""
    return Poly(int(c) for c in items)
