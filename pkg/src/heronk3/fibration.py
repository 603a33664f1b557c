"""Singular fibers of the family over Q(s).

The discriminant 2^12 (s-1)^6 s^4 (s+1)^4 (s^4+2s^3-26s^2+54s-27) and the
degree bookkeeping sum v(Delta) deg(place) = 24 (K3) pin the fiber
inventory: I6 at s = 1 and s = infinity, IV at s = 0 and s = -1, and I1 at
each root of the irreducible quartic.
"""

from __future__ import annotations

from functools import lru_cache

from .places import Place, valuation
from .poly import Polynomial, RationalFunction, squarefree_factor
from .surface import family_curve, generic_parameter
from .weierstrass import FiberClass, classify_fiber


@lru_cache(maxsize=None)
def family_discriminant() -> Polynomial:
    curve = family_curve(generic_parameter())
    disc = curve.invariants().disc
    if not disc.is_polynomial:
        raise AssertionError("family discriminant should be polynomial")
    return disc.num


@lru_cache(maxsize=None)
def bad_places() -> tuple[Place, ...]:
    """Places of Q(s) where the fiber degenerates, infinity included."""
    _, factors = squarefree_factor(family_discriminant())
    places = [Place.finite(f) for f, _ in factors]
    places.append(Place.at_infinity())
    return tuple(places)


@lru_cache(maxsize=None)
def fiber_classification() -> tuple[FiberClass, ...]:
    curve = family_curve(generic_parameter())
    return tuple(classify_fiber(curve, place) for place in bad_places())


def delta_degree_sum() -> int:
    """sum over places of v(Delta) * deg(place), on minimal models; 24 for a K3."""
    return sum(f.v_delta * f.place.degree for f in fiber_classification())


@lru_cache(maxsize=None)
def j_map_degree() -> int:
    """Degree of the j-invariant of the family as a map P^1 -> P^1."""
    j = family_curve(generic_parameter()).invariants().j
    return max(j.num.degree, j.den.degree)


def fiber_multiset() -> dict[str, int]:
    out: dict[str, int] = {}
    for f in fiber_classification():
        key = f.label
        count = f.place.degree if f.kodaira == "I" and f.index == 1 else 1
        out[key] = out.get(key, 0) + count
    return out


def trivial_lattice_rank_sum() -> int:
    """sum (m_v - 1), weighted by place degree for the I1 quartic place."""
    total = 0
    for f in fiber_classification():
        total += (f.components - 1) * (f.place.degree if f.components > 1 else 1)
    return total


def simple_component_product() -> int:
    """prod m_v^(1) over the singular fibers (degree-weighted for I1)."""
    out = 1
    for f in fiber_classification():
        out *= f.simple_components ** (f.place.degree if f.simple_components > 1 else 1)
    return out
