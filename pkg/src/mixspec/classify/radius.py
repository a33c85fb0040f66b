"""Classification of mixed graphs with spectral radius below sqrt(2), sqrt(3) or 2."""

from __future__ import annotations

from dataclasses import dataclass

from ..core import MixedGraph
from ..nmatrix import CharPoly, charpoly, radius_strictly_below
from ..nmatrix.poly import poly_mul
from ..switching import switching_equivalent, switching_isomorphic
from .catalog import catalog_members

_THRESHOLD = {2: "2", 3: "3", 4: "4"}


@dataclass(frozen=True)
class RadiusClass:
    threshold: int  # alpha^2
    below: bool
    catalog_tag: str | None = None

    def render(self) -> str:
        bound = {2: "sqrt2", 3: "sqrt3", 4: "2"}[self.threshold]
        line = f"radius<{bound}: {'yes' if self.below else 'no'}"
        if self.below:
            line += f" tag={self.catalog_tag if self.catalog_tag else 'none'}"
        return line


def _degree_signature(M: MixedGraph) -> tuple:
    return tuple(sorted(M.underlying().degrees()))


def catalog_tag(M: MixedGraph, alpha2: int, P: CharPoly | None = None) -> str | None:
    """Tag of the catalog member switching isomorphic to the connected graph M, if any."""
    if P is None:
        P = charpoly(M)
    sig = _degree_signature(M)
    for tag, C in catalog_members(alpha2, M.n):
        if C.m != M.m or _degree_signature(C) != sig or charpoly(C) != P:
            continue
        if switching_isomorphic(C, M) is not None:
            return tag
    return None


def small_radius_classify(M: MixedGraph, alpha2: int, strict: bool = False) -> RadiusClass:
    """Exact verdict on rho < sqrt(alpha2) and, when below, the catalog tag.

    Disconnected graphs get the component tags joined by '+'.  With
    ``strict`` a graph that is below the threshold but matches no catalog
    member raises AssertionError.
    """
    P = charpoly(M)
    below = radius_strictly_below(P, alpha2)
    if not below:
        return RadiusClass(alpha2, False)
    tags = []
    for comp in M.components():
        sub = M.induced(comp)
        tag = catalog_tag(sub, alpha2)
        if tag is None:
            if strict:
                raise AssertionError(f"graph below sqrt({alpha2}) matches no catalog member")
            return RadiusClass(alpha2, True, None)
        tags.append(tag)
    return RadiusClass(alpha2, True, "+".join(sorted(tags)))


def pm_one_spectrum_recognize(M: MixedGraph) -> bool:
    """CharPoly equals (x^2 - 1)^(n/2); asserted equivalent to being a switched perfect matching."""
    P = charpoly(M)
    target = [1]
    if M.n % 2 == 0:
        for _ in range(M.n // 2):
            target = poly_mul(target, [1, 0, -1])
    spectral = M.n % 2 == 0 and list(P.coeffs) == target
    structural = perfect_matching_class(M)
    if spectral != structural:
        raise AssertionError("+-1 spectrum and perfect-matching structure disagree")
    return spectral


def perfect_matching_class(M: MixedGraph) -> bool:
    """Whether M is switching equivalent to an undirected perfect matching."""
    if any(len(c) != 2 for c in M.components()):
        return False
    return bool(switching_equivalent(M, MixedGraph.undirected(M.underlying())))
