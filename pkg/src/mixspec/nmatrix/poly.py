"""Integer characteristic polynomials and small exact polynomial helpers.

Coefficient lists are in descending order of degree, the way the
characteristic polynomial is written: ``[1, c1, ..., cn]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence


@dataclass(frozen=True)
class CharPoly:
    """x^n + c1 x^(n-1) + ... + cn with integer coefficients, stored descending."""

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        for c in coeffs:
            if isinstance(c, Fraction):
                if c.denominator != 1:
                    raise ValueError(f"non-integral coefficient {c}")
            elif not isinstance(c, int):
                raise TypeError(f"coefficient {c!r} is not an integer")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        """c_k, the coefficient of x^(n-k)."""
        return self.coeffs[k]

    def __call__(self, x):
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def __mul__(self, other: CharPoly) -> CharPoly:
        return CharPoly(poly_mul(self.coeffs, other.coeffs))

    def __sub__(self, other: CharPoly) -> CharPoly:
        return CharPoly(poly_sub(self.coeffs, other.coeffs))

    def __add__(self, other: CharPoly) -> CharPoly:
        return CharPoly(poly_add(self.coeffs, other.coeffs))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def zero_multiplicity(self) -> int:
        """Multiplicity of the root 0, i.e. the nullity of a Hermitian matrix."""
        k = 0
        for c in reversed(self.coeffs):
            if c != 0:
                break
            k += 1
        return k

    def reflect(self) -> CharPoly:
        """(-1)^n P(-x)."""
        return CharPoly(tuple(c * (-1) ** k for k, c in enumerate(self.coeffs)))

    def machine_line(self) -> str:
        return "charpoly: " + " ".join(str(c) for c in self.coeffs)

    def __str__(self) -> str:
        return render_poly(self.coeffs)


def render_poly(coeffs: Sequence[int]) -> str:
    n = len(coeffs) - 1
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        p = n - k
        mag = abs(c)
        if p == 0:
            body = str(mag)
        else:
            mono = "x" if p == 1 else f"x^{p}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not terms:
            terms.append(body if c > 0 else "-" + body)
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"


def _trim(p: list) -> list:
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return list(p[i:])


def poly_add(p: Sequence, q: Sequence) -> list:
    n = max(len(p), len(q))
    p = [0] * (n - len(p)) + list(p)
    q = [0] * (n - len(q)) + list(q)
    return [a + b for a, b in zip(p, q)]


def poly_sub(p: Sequence, q: Sequence) -> list:
    return poly_add(p, [-c for c in q])


def poly_mul(p: Sequence, q: Sequence) -> list:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def poly_scale(p: Sequence, s) -> list:
    return [c * s for c in p]


def poly_shift(p: Sequence, k: int) -> list:
    """Multiply by x^k."""
    return list(p) + [0] * k


def poly_derivative(p: Sequence) -> list:
    n = len(p) - 1
    if n == 0:
        return [0]
    return [c * (n - k) for k, c in enumerate(p[:-1])]


def poly_divmod(p: Sequence, q: Sequence) -> tuple[list, list]:
    """Division over Q; returns (quotient, remainder) with Fraction coefficients."""
    q = _trim([Fraction(c) for c in q])
    if q == [0]:
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in _trim(list(p))]
    if len(r) < len(q):
        return [Fraction(0)], r
    quot = [Fraction(0)] * (len(r) - len(q) + 1)
    lead = q[0]
    for i in range(len(quot)):
        f = r[i] / lead
        quot[i] = f
        if f:
            for j, c in enumerate(q):
                r[i + j] -= f * c
    rem = _trim(r[len(quot):]) if len(q) > 1 else [Fraction(0)]
    return quot, rem


def primitive(p: Sequence) -> list[int]:
    """Scale a rational polynomial by a positive constant to a primitive integer one."""
    p = _trim([Fraction(c) for c in p])
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if g == 0:
        return [0]
    return [c // g for c in ints]


def poly_gcd(p: Sequence, q: Sequence) -> list[int]:
    a, b = primitive(p), primitive(q)
    while b != [0]:
        _, r = poly_divmod(a, b)
        a, b = b, primitive(r)
    if a[0] < 0:
        a = [-c for c in a]
    return a


def poly_exact_div(p: Sequence, q: Sequence) -> list[Fraction]:
    """Exact quotient over Q; raises when q does not divide p."""
    quot, rem = poly_divmod(p, q)
    if any(rem):
        raise ArithmeticError("polynomial division is not exact")
    return quot


def squarefree_decomposition(p: Sequence) -> list[tuple[list[int], int]]:
    """Yun's algorithm: p ~ prod f_i^i with f_i square-free and pairwise coprime.

    Returns the nonconstant factors (primitive, positive leading coefficient)
    with their multiplicities; constant factors are dropped.
    """
    p = primitive(p)
    if len(p) <= 1:
        return []
    out = []
    dp = poly_derivative(p)
    a = poly_gcd(p, dp)
    b = poly_exact_div(p, a)
    c = poly_exact_div(dp, a)
    d = _trim(poly_sub(c, poly_derivative(b)))
    i = 1
    while len(b) > 1:
        y = primitive(b) if d == [0] else poly_gcd(b, d)
        if len(y) > 1:
            out.append((y, i))
        b = poly_exact_div(b, y)
        c = poly_exact_div(d, y) if d != [0] else [Fraction(0)]
        d = _trim(poly_sub(c, poly_derivative(b)))
        i += 1
    return out
