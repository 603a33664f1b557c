"""Places of a rational function field and Newton polygons.

A finite place is a monic irreducible polynomial; the infinite place carries
the degree valuation v(f) = deg(den) - deg(num).  The same machinery runs
over Q and over Q(i) (the 2-divisibility argument needs the place s+i).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .poly import Polynomial, RationalFunction, format_poly, is_irreducible_small, poly_valuation

INFINITE_VALUATION = math.inf


@dataclass(frozen=True)
class Place:
    """Finite place (monic irreducible modulus) or the place at infinity."""

    modulus: Polynomial | None  # None marks the infinite place

    @staticmethod
    def finite(modulus: Polynomial, certify: bool = True) -> "Place":
        if modulus.degree < 1:
            raise ValueError("finite place needs a nonconstant modulus")
        modulus = modulus.monic()
        if certify:
            over_q = all(isinstance(c, (int, Fraction)) for c in modulus.coeffs)
            if over_q and not is_irreducible_small(modulus):
                raise ValueError(f"modulus {format_poly(modulus)} is not irreducible")
        return Place(modulus)

    @staticmethod
    def at_infinity() -> "Place":
        return Place(None)

    @staticmethod
    def linear(root) -> "Place":
        """The place s = root (no certification needed for linear moduli)."""
        return Place(Polynomial([-root, type(root)(1) if not isinstance(root, int) else 1]))

    @property
    def is_infinite(self) -> bool:
        return self.modulus is None

    @property
    def degree(self) -> int:
        return 1 if self.modulus is None else self.modulus.degree

    def __repr__(self):
        if self.modulus is None:
            return "Place(infinity)"
        return f"Place({format_poly(self.modulus)})"


def valuation(f, place: Place):
    """Discrete valuation of a polynomial or rational function at a place.

    Zero maps to the INFINITE_VALUATION sentinel.
    """
    if isinstance(f, Polynomial):
        f = RationalFunction(f, reduce=False)
    if not isinstance(f, RationalFunction):
        raise TypeError("valuation expects a polynomial or rational function")
    if f.is_zero:
        return INFINITE_VALUATION
    if place.is_infinite:
        return f.den.degree - f.num.degree
    return poly_valuation(f.num, place.modulus) - poly_valuation(f.den, place.modulus)


@dataclass(frozen=True)
class NewtonSegment:
    slope: Fraction
    length: int


@dataclass(frozen=True)
class NewtonPolygon:
    """Lower convex hull of (i, v(coeff_i)); root valuations are -slope.

    ``zero_root_multiplicity`` counts roots u = 0 (valuation +infinity); the
    segment lengths sum to degree - zero_root_multiplicity.
    """

    segments: tuple[NewtonSegment, ...]
    zero_root_multiplicity: int

    def root_valuations(self) -> list[Fraction]:
        """Valuations of the nonzero roots, with multiplicity."""
        out = []
        for seg in self.segments:
            out.extend([-seg.slope] * seg.length)
        return out

    def integer_root_valuations(self) -> list[int]:
        """The subset of root valuations that are integers (deduplicated, sorted)."""
        vals = {v for v in self.root_valuations() if v.denominator == 1}
        return sorted(int(v) for v in vals)


def newton_polygon(poly_in_u: Polynomial, place: Place) -> NewtonPolygon:
    """Newton polygon of a polynomial in an auxiliary variable u.

    The coefficients live in the function field (RationalFunction or
    Polynomial values).
    """
    if poly_in_u.is_zero:
        raise ValueError("Newton polygon of the zero polynomial")
    pts = []
    lowest = None
    for k in range(poly_in_u.degree + 1):
        c = poly_in_u[k]
        if isinstance(c, int) and c == 0:
            continue
        if isinstance(c, (Polynomial, RationalFunction)) and c.is_zero:
            continue
        v = valuation(c if isinstance(c, (Polynomial, RationalFunction)) else Polynomial([c]), place)
        if lowest is None:
            lowest = k
        pts.append((k, Fraction(v)))
    zero_mult = lowest
    if len(pts) == 1:
        return NewtonPolygon((), zero_mult)
    # lower convex hull, left to right
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] if it lies on or above the segment hull[-2] -> pt
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    segments = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        segments.append(NewtonSegment(Fraction(y2 - y1, x2 - x1), x2 - x1))
    return NewtonPolygon(tuple(segments), zero_mult)
