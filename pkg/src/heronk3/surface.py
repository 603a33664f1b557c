"""The cubic surface r^2(x+y+z) = xyz and its triangle dictionary.

A triangle with sides (a, b, c), inradius r and semiperimeter p/2 gives the
surface point [r : p/2-a : p/2-b : p/2-c]; conversely positive-ratio points
give triangles.  Cutting the surface with planes r = t(x+y+z) fibers it by
plane cubics; pulled back along t = (s-1)/(s(s+1)) the family becomes the
Weierstrass model

    q^2 = (p - 4(s-1)^2)^3 + s^2(s+1)^2 p^2

and the sections O, P (3-torsion), R, and Q (Gaussian) drive everything:
odd multiples of R give the pairwise-nonsimilar triangle families.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .poly import Polynomial, RationalFunction, poly_gcd, poly_lcm
from .rationals import GaussianRational, is_square_fraction, sqrt_fraction
from .weierstrass import CurvePoint, WeierstrassCurve


class GeometryError(ValueError):
    pass


# -- the family ----------------------------------------------------------------


def family_coefficients(sv):
    """Weierstrass coefficients (a2, a4, a6) at parameter value sv.

    Generic in sv: rational functions give the generic fiber, Fractions a
    rational specialization, finite field elements the reduction used for
    counting.
    """
    sm1 = sv - 1
    sp1 = sv + 1
    a2 = sv * sv * sp1 * sp1 - 12 * sm1 * sm1
    a4 = 48 * sm1 ** 4
    a6 = -64 * sm1 ** 6
    return a2, a4, a6


def family_curve(sv) -> WeierstrassCurve:
    return WeierstrassCurve(*family_coefficients(sv))


def generic_parameter() -> RationalFunction:
    """The coordinate s of the base curve, as an element of Q(s)."""
    return RationalFunction(Polynomial([Fraction(0), Fraction(1)]))


def generic_parameter_gaussian() -> RationalFunction:
    return RationalFunction(Polynomial([GaussianRational(0), GaussianRational(1)]))


def base_parameter_t(sv):
    """t = (s-1)/(s(s+1)), the double cover to the plane-cubic pencil."""
    return (sv - 1) / (sv * (sv + 1))


def family_sections(gaussian: bool = False) -> dict[str, CurvePoint]:
    """The sections O, P, R (and Q when gaussian=True) of the family."""
    s = generic_parameter_gaussian() if gaussian else generic_parameter()
    sm1 = s - 1
    sections = {
        "O": CurvePoint.infinity(),
        "P": CurvePoint(4 * sm1 * sm1, 4 * s * (s + 1) * sm1 * sm1),
        "R": CurvePoint(8 - 8 * s, 8 * s * s - 8),
    }
    if gaussian:
        i = GaussianRational(0, 1)
        sections["Q"] = CurvePoint(RationalFunction(Polynomial([GaussianRational(0)])),
                                   8 * i * sm1 ** 3)
    curve = family_curve(s)
    for name, pt in sections.items():
        if not curve.contains(pt):
            raise AssertionError(f"section {name} is off the family curve")
    return sections


# -- surface points ---------------------------------------------------------


class SurfacePoint:
    """Point [r : x : y : z] on r^2(x+y+z) = xyz, canonically scaled."""

    __slots__ = ("coords",)

    def __init__(self, r, x, y, z, check: bool = True):
        coords = _canonical_coords((r, x, y, z))
        self.coords = coords
        if check and not self.on_surface:
            raise GeometryError("point is not on the surface")

    @property
    def r(self):
        return self.coords[0]

    @property
    def x(self):
        return self.coords[1]

    @property
    def y(self):
        return self.coords[2]

    @property
    def z(self):
        return self.coords[3]

    @property
    def on_surface(self) -> bool:
        r, x, y, z = self.coords
        return r * r * (x + y + z) == x * y * z

    def cycle_xyz(self) -> "SurfacePoint":
        """The coordinate 3-cycle; translation by P on smooth fibers."""
        r, x, y, z = self.coords
        return SurfacePoint(r, z, x, y, check=False)

    def swap_xy(self) -> "SurfacePoint":
        """The transposition (x y); multiplication by -1 on smooth fibers."""
        r, x, y, z = self.coords
        return SurfacePoint(r, y, x, z, check=False)

    def __eq__(self, other):
        if not isinstance(other, SurfacePoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "[" + " : ".join(repr(c) for c in self.coords) + "]"


def _canonical_coords(coords):
    if all(_is_zeroish(c) for c in coords):
        raise GeometryError("all homogeneous coordinates are zero")
    if any(isinstance(c, RationalFunction) for c in coords):
        return _canonical_rf(coords)
    coords = tuple(Fraction(c) if not isinstance(c, GaussianRational) else c for c in coords)
    if any(isinstance(c, GaussianRational) for c in coords):
        coords = tuple(c if isinstance(c, GaussianRational) else GaussianRational(c) for c in coords)
        first = next(c for c in coords if c != 0)
        return tuple(c / first for c in coords)
    # rational point: clear denominators, divide by content, fix sign
    den = 1
    for c in coords:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in coords]
    g = 0
    for c in ints:
        g = math.gcd(g, abs(c))
    first = next(c for c in ints if c != 0)
    if first < 0:
        g = -g
    return tuple(Fraction(c // g) for c in ints)


def _canonical_rf(coords):
    coords = tuple(c if isinstance(c, RationalFunction) else RationalFunction(Polynomial([c])) for c in coords)
    den = Polynomial([1])
    for c in coords:
        if not c.is_zero:
            den = poly_lcm(den, c.den)
    nums = [(c * RationalFunction(den, reduce=False)).num for c in coords]
    g = Polynomial()
    for n in nums:
        if not n.is_zero:
            g = poly_gcd(g, n)
    if g.degree > 0:
        nums = [n // g if not n.is_zero else n for n in nums]
    allc = [c for n in nums for c in n.coeffs]
    if all(isinstance(c, Fraction) for c in allc):
        # primitive integer coefficients, first nonzero entry led positive
        dens = 1
        for c in allc:
            dens = dens * c.denominator // math.gcd(dens, c.denominator)
        g0 = 0
        for c in allc:
            g0 = math.gcd(g0, abs(int(c * dens)))
        lead = next(n for n in nums if not n.is_zero).leading
        scale = Fraction(dens, g0)
        if lead * scale < 0:
            scale = -scale
        nums = [n.map_coeffs(lambda c: c * scale) for n in nums]
    else:
        lead = next(n for n in nums if not n.is_zero).leading
        nums = [n.map_coeffs(lambda c: c / lead) for n in nums]
    return tuple(RationalFunction(n, reduce=False) for n in nums)


def _is_zeroish(c) -> bool:
    if isinstance(c, (Polynomial, RationalFunction)):
        return c.is_zero
    return c == 0


# -- Eq.-style parametrization ----------------------------------------------


def param_surface(u, v, w) -> SurfacePoint:
    """[u : v : w] -> [vw(u-v) : v(uv+w^2) : w^2(u-v) : uv(u-v)]."""
    r = v * w * (u - v)
    x = v * (u * v + w * w)
    y = w * w * (u - v)
    z = u * v * (u - v)
    if all(_is_zeroish(c) for c in (r, x, y, z)):
        raise GeometryError("parametrization degenerates at this input")
    return SurfacePoint(r, x, y, z)


def inverse_param(point: SurfacePoint):
    """SurfacePoint -> [u : v : w] = [yz : r^2 : yr]."""
    r, x, y, z = point.coords
    u, v, w = y * z, r * r, y * r
    if all(_is_zeroish(c) for c in (u, v, w)):
        raise GeometryError("inverse parametrization degenerates at this point")
    return (u, v, w)


# -- triangles ------------------------------------------------------------


@dataclass(frozen=True)
class Triangle:
    """Triangle with positive rational sides satisfying the strict inequality."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for side in (self.a, self.b, self.c):
            if side <= 0:
                raise GeometryError("triangle sides must be positive")
        p = self.perimeter
        if not (2 * self.a < p and 2 * self.b < p and 2 * self.c < p):
            raise GeometryError("sides violate the strict triangle inequality")

    @staticmethod
    def of(a, b, c) -> "Triangle":
        return Triangle(Fraction(a), Fraction(b), Fraction(c))

    @property
    def perimeter(self) -> Fraction:
        return self.a + self.b + self.c

    @property
    def area_squared_16(self) -> Fraction:
        """16 A^2 = p(p-2a)(p-2b)(p-2c), always an exact rational."""
        p = self.perimeter
        return p * (p - 2 * self.a) * (p - 2 * self.b) * (p - 2 * self.c)

    @property
    def has_rational_area(self) -> bool:
        return is_square_fraction(self.area_squared_16)

    @property
    def area(self) -> Fraction:
        if not self.has_rational_area:
            raise GeometryError("triangle area is irrational")
        return sqrt_fraction(self.area_squared_16) / 4

    @property
    def inradius(self) -> Fraction:
        return 2 * self.area / self.perimeter

    def sorted_sides(self) -> tuple[Fraction, Fraction, Fraction]:
        return tuple(sorted((self.a, self.b, self.c)))

    def similarity_class(self) -> tuple[Fraction, Fraction, Fraction]:
        p = self.perimeter
        return tuple(side / p for side in self.sorted_sides())

    def is_similar_to(self, other: "Triangle") -> bool:
        return self.similarity_class() == other.similarity_class()

    def scaled(self, factor: Fraction) -> "Triangle":
        return Triangle(self.a * factor, self.b * factor, self.c * factor)

    def csv_line(self) -> str:
        return f"{self.a},{self.b},{self.c}"

    def json_record(self) -> dict:
        return {
            "a": str(self.a),
            "b": str(self.b),
            "c": str(self.c),
            "perimeter": str(self.perimeter),
            "area": str(self.area) if self.has_rational_area else None,
        }


def triangle_to_point(t: Triangle) -> SurfacePoint:
    """x = p/2 - a, y = p/2 - b, z = p/2 - c, r = 2A/p (needs rational area)."""
    half = t.perimeter / 2
    return SurfacePoint(t.inradius, half - t.a, half - t.b, half - t.c)


def point_to_triangle(point: SurfacePoint) -> Triangle:
    """Normalize inradius 1 and return (y+z, x+z, x+y); needs positive ratios."""
    r, x, y, z = point.coords
    if _is_zeroish(r):
        raise GeometryError("point with r = 0 corresponds to no triangle")
    x, y, z = x / r, y / r, z / r
    if not (x > 0 and y > 0 and z > 0):
        raise GeometryError("point has non-positive ratios; no triangle")
    return Triangle(y + z, x + z, x + y)


# -- Weierstrass transform ---------------------------------------------------


def to_weierstrass(sv, xyz) -> CurvePoint:
    """[x : y : z] on the fiber cubic -> (p, q); [1 : -1 : 0] -> O.

    sv is the base parameter value; z must be nonzero for affine points.
    """
    x, y, z = xyz
    if _is_zeroish(z):
        if _is_zeroish(x + y):
            return CurvePoint.infinity()
        raise GeometryError("point with z = 0 and x + y != 0 is not on the fiber")
    sm1 = sv - 1
    p = -4 * sm1 * sm1 * (x + y) / z
    q = 4 * sm1 * sm1 * sv * (sv + 1) * (x - y) / z
    return CurvePoint(p, q)


def from_weierstrass(sv, point: CurvePoint):
    """(p, q) -> [x : y : z]; O -> [1 : -1 : 0]."""
    if point.is_infinity:
        one = sv / sv
        return (one, -one, 0 * sv)
    p, q = point.x, point.y
    sm1 = sv - 1
    x = -sv * (sv + 1) * p + q
    y = -sv * (sv + 1) * p - q
    z = 8 * sm1 * sm1 * sv * (sv + 1)
    return (x, y, z)


def section_surface_point(sv, point: CurvePoint) -> SurfacePoint:
    """Full [r : x : y : z] coordinates of a fiber point, r = t(x+y+z)."""
    x, y, z = from_weierstrass(sv, point)
    r = base_parameter_t(sv) * (x + y + z)
    return SurfacePoint(r, x, y, z)


# -- the triangle families -------------------------------------------------


@dataclass(frozen=True)
class TripleFamily:
    """(a_n, b_n, c_n) in Q(s) for the section (2n-1)R."""

    n: int
    a: RationalFunction
    b: RationalFunction
    c: RationalFunction

    def evaluate(self, s0: Fraction) -> tuple[Fraction, Fraction, Fraction]:
        return (self.a.evaluate(s0), self.b.evaluate(s0), self.c.evaluate(s0))


@lru_cache(maxsize=None)
def _odd_multiple_of_r(n: int) -> CurvePoint:
    """(2n-1) R over Q(s)."""
    s = generic_parameter()
    curve = family_curve(s)
    sections = family_sections()
    return curve.scalar_mul(2 * n - 1, sections["R"])


@lru_cache(maxsize=None)
def generate_triple(n: int) -> TripleFamily:
    """The degree-n triple family from the section (2n-1)R.

    Both defining identities are checked exactly: the perimeter is
    2s(s+1) and the Heron area is s(s^2-1), as rational functions.
    """
    if n < 1:
        raise GeometryError("triple family index must be >= 1")
    s = generic_parameter()
    point = _odd_multiple_of_r(n)
    x, y, z = from_weierstrass(s, point)
    total = x + y + z
    a = s * (s + 1) * (y + z) / total
    b = s * (s + 1) * (x + z) / total
    c = s * (s + 1) * (x + y) / total
    fam = TripleFamily(n, a, b, c)
    perim = a + b + c
    if perim != 2 * s * (s + 1):
        raise AssertionError("triple family perimeter identity failed")
    area16 = perim * (perim - 2 * a) * (perim - 2 * b) * (perim - 2 * c)
    target = s * (s * s - 1)
    if area16 != 16 * target * target:
        raise AssertionError("triple family Heron-area identity failed")
    return fam


def specialize_triangle(n: int, s0: Fraction) -> Triangle:
    """The triangle Delta_n(s0): perimeter 2 s0 (s0+1), inradius s0 - 1.

    Only rational s0 > 1 is allowed; the group law is run on the specialized
    curve over Q, which agrees with specializing the symbolic section.
    """
    s0 = Fraction(s0)
    if s0 <= 1:
        raise GeometryError("specialization requires s0 > 1")
    curve = family_curve(s0)
    base = curve.checked_point(8 - 8 * s0, 8 * s0 * s0 - 8)
    point = curve.scalar_mul(2 * n - 1, base)
    if point.is_infinity or point.x >= 0:
        raise AssertionError("odd multiple of R left the negative-p component")
    x, y, z = from_weierstrass(s0, point)
    total = x + y + z
    a = s0 * (s0 + 1) * (y + z) / total
    b = s0 * (s0 + 1) * (x + z) / total
    c = s0 * (s0 + 1) * (x + y) / total
    tri = Triangle(a, b, c)
    if tri.perimeter != 2 * s0 * (s0 + 1) or tri.area != s0 * (s0 * s0 - 1):
        raise AssertionError("specialized triangle metrics are off")
    return tri


# -- heronization -----------------------------------------------------------


def heronize(triangles: list[Triangle]) -> tuple[list[Triangle], int]:
    """Scale rational triangles with common perimeter and area to Heron ones.

    Returns (scaled triangles, lambda), lambda minimal positive with all
    sides and the common area integral.
    """
    if not triangles:
        raise GeometryError("nothing to heronize")
    p0 = triangles[0].perimeter
    a0 = triangles[0].area
    for t in triangles[1:]:
        if t.perimeter != p0 or t.area != a0:
            raise GeometryError("triangles do not share perimeter and area")
    lam = 1
    for t in triangles:
        for side in (t.a, t.b, t.c):
            lam = lam * side.denominator // math.gcd(lam, side.denominator)
    # clear the area denominator's square deficiency
    d = (lam * lam * a0).denominator
    extra = 1
    k = 2
    while d > 1:
        e = 0
        while d % k == 0:
            d //= k
            e += 1
        if e:
            extra *= k ** ((e + 1) // 2)
        k += 1
    lam *= extra
    scaled = [t.scaled(Fraction(lam)) for t in triangles]
    for t in scaled:
        if any(side.denominator != 1 for side in (t.a, t.b, t.c)) or t.area.denominator != 1:
            raise AssertionError("heronization failed to clear denominators")
    return scaled, lam


@dataclass(frozen=True)
class TriangleCheck:
    is_triangle: bool
    perimeter: Fraction | None
    area_squared_16: Fraction | None
    area: Fraction | None       # None when irrational
    is_heron: bool


def verify_heron(a, b, c) -> TriangleCheck:
    """Exact triangle + Heron verdict for a side triple."""
    try:
        t = Triangle.of(a, b, c)
    except (GeometryError, ZeroDivisionError):
        return TriangleCheck(False, None, None, None, False)
    sq16 = t.area_squared_16
    if not t.has_rational_area:
        return TriangleCheck(True, t.perimeter, sq16, None, False)
    area = t.area
    integral = all(Fraction(v).denominator == 1 for v in (t.a, t.b, t.c))
    heron = integral and area.denominator == 1 and area > 0
    return TriangleCheck(True, t.perimeter, sq16, area, heron)
