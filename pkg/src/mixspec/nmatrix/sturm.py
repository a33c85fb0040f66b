"""Exact real-root counting with Sturm chains and endpoints in Q(sqrt d)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from ..core import MixedGraph
from .charpoly import charpoly
from .poly import CharPoly, poly_derivative, poly_divmod, poly_exact_div, poly_gcd, primitive, squarefree_decomposition


def _sign(x) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class QuadraticSurd:
    """p + q*sqrt(d) with rational p, q and square-free d >= 0."""

    p: Fraction = Fraction(0)
    q: Fraction = Fraction(0)
    d: int = 0

    def __post_init__(self):
        if self.d < 0:
            raise ValueError("d must be nonnegative")
        object.__setattr__(self, "p", Fraction(self.p))
        object.__setattr__(self, "q", Fraction(self.q))
        d = self.d
        for f in range(2, int(d**0.5) + 2):
            while d and d % (f * f) == 0:
                d //= f * f
                object.__setattr__(self, "q", self.q * f)
        if d in (0, 1):
            object.__setattr__(self, "p", self.p + (self.q if d == 1 else 0))
            object.__setattr__(self, "q", Fraction(0))
            d = 0
        object.__setattr__(self, "d", d)

    @classmethod
    def sqrt(cls, k: int) -> QuadraticSurd:
        return cls(0, 1, k)

    @classmethod
    def of(cls, x) -> QuadraticSurd:
        return x if isinstance(x, QuadraticSurd) else cls(Fraction(x), 0, 0)

    def __neg__(self) -> QuadraticSurd:
        return QuadraticSurd(-self.p, -self.q, self.d)

    def __sub__(self, other) -> QuadraticSurd:
        other = QuadraticSurd.of(other)
        d = _common_d(self, other)
        return QuadraticSurd(self.p - other.p, self.q - other.q, d)

    def sign(self) -> int:
        return surd_sign(self.p, self.q, self.d)

    def __float__(self) -> float:
        return float(self.p) + float(self.q) * self.d**0.5

    def __str__(self) -> str:
        if self.q == 0:
            return str(self.p)
        return f"{self.p} + {self.q}*sqrt({self.d})" if self.p else f"{self.q}*sqrt({self.d})"


def _common_d(x: QuadraticSurd, y: QuadraticSurd) -> int:
    if x.q and y.q and x.d != y.d:
        raise ValueError("surds with different radicands are not supported")
    return x.d if x.q else y.d


def surd_sign(a, b, d: int) -> int:
    """Sign of a + b*sqrt(d), decided without floating point."""
    sa, sb = _sign(a), _sign(b) if d else 0
    if sb == 0:
        return sa
    if sa >= 0 and sb >= 0:
        return 1
    if sa <= 0 and sb <= 0:
        return -1
    # opposite signs: compare a^2 with b^2 d
    return sa * _sign(a * a - b * b * d)


def eval_at_surd(coeffs: Sequence, x: QuadraticSurd) -> tuple[Fraction, Fraction]:
    """P(p + q sqrt d) as (A, B) meaning A + B sqrt d."""
    A, B = Fraction(0), Fraction(0)
    p, q, d = x.p, x.q, x.d
    for c in coeffs:
        A, B = A * p + B * q * d + c, A * q + B * p
    return A, B


def sign_at(coeffs: Sequence, x) -> int:
    x = QuadraticSurd.of(x)
    A, B = eval_at_surd(coeffs, x)
    return surd_sign(A, B, x.d)


def _coeffs(P) -> list:
    return list(P.coeffs) if isinstance(P, CharPoly) else list(P)


def squarefree_part(P) -> list[int]:
    p = primitive(_coeffs(P))
    if len(p) <= 1:
        return p
    g = poly_gcd(p, poly_derivative(p))
    return primitive(poly_exact_div(p, g))


def sturm_chain(p: Sequence) -> list[list[int]]:
    chain = [primitive(p)]
    if len(chain[0]) <= 1:
        return chain
    chain.append(primitive(poly_derivative(chain[0])))
    while len(chain[-1]) > 1:
        _, r = poly_divmod(chain[-2], chain[-1])
        if not any(r):
            break
        # primitive() rescales by a positive constant, so signs survive
        chain.append(primitive([-c for c in r]))
    return chain


def sign_variations(chain: list[list[int]], x) -> int:
    signs = [s for s in (sign_at(p, x) for p in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


Endpoint = Union[int, Fraction, QuadraticSurd]


def count_roots_in(P, lo: Endpoint, hi: Endpoint) -> int:
    """Number of distinct real roots of P in the half-open interval (lo, hi]."""
    lo, hi = QuadraticSurd.of(lo), QuadraticSurd.of(hi)
    if (hi - lo).sign() <= 0:
        raise ValueError(f"empty interval ({lo}, {hi}]")
    sq = squarefree_part(P)
    if len(sq) <= 1:
        return 0
    chain = sturm_chain(sq)
    return sign_variations(chain, lo) - sign_variations(chain, hi)


def count_roots_with_multiplicity(P, lo: Endpoint, hi: Endpoint) -> int:
    """Roots of P in (lo, hi] counted with multiplicity (square-free decomposition)."""
    return sum(i * count_roots_in(f, lo, hi) for f, i in squarefree_decomposition(_coeffs(P)))


def multiplicity_at(P, t: Endpoint) -> int:
    """Multiplicity of t as a root: the number of leading vanishing derivatives."""
    p = _coeffs(P)
    k = 0
    while len(p) > 1 or p[0] != 0:
        if sign_at(p, t) != 0:
            return k
        p = poly_derivative(p)
        k += 1
    return k


def _sqrt_endpoint(alpha2: int) -> QuadraticSurd:
    return QuadraticSurd.sqrt(alpha2)


def radius_strictly_below(M: MixedGraph | CharPoly, alpha2: int) -> bool:
    """Exactly decide whether every eigenvalue lies in (-sqrt(alpha2), sqrt(alpha2))."""
    if alpha2 not in (2, 3, 4):
        raise ValueError(f"alpha2 must be 2, 3 or 4, got {alpha2}")
    P = M if isinstance(M, CharPoly) else charpoly(M)
    t = _sqrt_endpoint(alpha2)
    if sign_at(P.coeffs, t) == 0 or sign_at(P.coeffs, -t) == 0:
        return False
    return count_roots_with_multiplicity(P, -t, t) == P.degree


def radius_at_most(P: CharPoly, bound: Endpoint) -> bool:
    """Every root lies in [-bound, bound]."""
    t = QuadraticSurd.of(bound)
    if t.sign() <= 0:
        return P.degree == P.zero_multiplicity() and t.sign() == 0
    inside = count_roots_with_multiplicity(P, -t, t) + multiplicity_at(P, -t)
    return inside == P.degree


def radius_equals(P: CharPoly, bound: Endpoint) -> bool:
    """rho = bound exactly (bound > 0), i.e. rho <= bound with +-bound a root."""
    t = QuadraticSurd.of(bound)
    return radius_at_most(P, t) and (sign_at(P.coeffs, t) == 0 or sign_at(P.coeffs, -t) == 0)
