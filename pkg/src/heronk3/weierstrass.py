"""Field-generic Weierstrass curves y^2 = x^3 + a2 x^2 + a4 x + a6.

The one group-law engine runs over Q(s), Q, Q(i)(s) and finite fields; only
the curve shape with a1 = a3 = 0 is supported (characteristic 2 and 3 are
excluded throughout).  A restricted Kodaira classifier covers exactly the
fiber types this family exhibits: I_n, II, III, IV.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .places import Place, valuation
from .poly import Polynomial, RationalFunction, poly_valuation


class CurveError(ValueError):
    pass


class WeierstrassCurve:
    __slots__ = ("a2", "a4", "a6")

    def __init__(self, a2, a4, a6):
        self.a2 = a2
        self.a4 = a4
        self.a6 = a6

    def rhs(self, x):
        """x^3 + a2 x^2 + a4 x + a6."""
        return ((x + self.a2) * x + self.a4) * x + self.a6

    def contains(self, point: "CurvePoint") -> bool:
        if point.is_infinity:
            return True
        return point.y * point.y == self.rhs(point.x)

    def invariants(self) -> "CurveInvariants":
        b2 = 4 * self.a2
        b4 = 2 * self.a4
        b6 = 4 * self.a6
        c4 = b2 * b2 - 24 * b4
        c6 = -(b2 * b2 * b2) + 36 * b2 * b4 - 216 * b6
        disc = (c4 * c4 * c4 - c6 * c6) / 1728
        j = None
        if not _is_zero(disc):
            j = (c4 * c4 * c4) / disc
        return CurveInvariants(b2, b4, b6, c4, c6, disc, j)

    @property
    def discriminant(self):
        return self.invariants().disc

    # -- group law --------------------------------------------------------

    def add(self, p1: "CurvePoint", p2: "CurvePoint") -> "CurvePoint":
        if p1.is_infinity:
            return p2
        if p2.is_infinity:
            return p1
        x1, y1, x2, y2 = p1.x, p1.y, p2.x, p2.y
        if x1 == x2:
            if y1 == -y2:
                return CurvePoint.infinity()
            # tangent line; 2y1 != 0 here since y1 = -y2 failed and y1 = y2
            lam = (3 * x1 * x1 + 2 * self.a2 * x1 + self.a4) / (2 * y1)
        else:
            lam = (y2 - y1) / (x2 - x1)
        x3 = lam * lam - self.a2 - x1 - x2
        y3 = lam * (x1 - x3) - y1
        return CurvePoint(x3, y3)

    def neg(self, p: "CurvePoint") -> "CurvePoint":
        if p.is_infinity:
            return p
        return CurvePoint(p.x, -p.y)

    def scalar_mul(self, k: int, p: "CurvePoint") -> "CurvePoint":
        if k < 0:
            return self.neg(self.scalar_mul(-k, p))
        out = CurvePoint.infinity()
        base = p
        while k:
            if k & 1:
                out = self.add(out, base)
            k >>= 1
            if k:
                base = self.add(base, base)
        return out

    def checked_point(self, x, y) -> "CurvePoint":
        pt = CurvePoint(x, y)
        if not self.contains(pt):
            raise CurveError("point is not on the curve")
        return pt

    def __repr__(self):
        return f"WeierstrassCurve(a2={self.a2!r}, a4={self.a4!r}, a6={self.a6!r})"


def _is_zero(v) -> bool:
    if isinstance(v, (Polynomial, RationalFunction)):
        return v.is_zero
    return v == 0


class CurvePoint:
    """Affine point or the origin at infinity."""

    __slots__ = ("x", "y", "_inf")

    def __init__(self, x=None, y=None, _inf=False):
        self._inf = _inf
        self.x = x
        self.y = y

    @staticmethod
    def infinity() -> "CurvePoint":
        return CurvePoint(_inf=True)

    @property
    def is_infinity(self) -> bool:
        return self._inf

    def __eq__(self, other):
        if not isinstance(other, CurvePoint):
            return NotImplemented
        if self._inf or other._inf:
            return self._inf and other._inf
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        return hash("O") if self._inf else hash((self.x, self.y))

    def __repr__(self):
        return "O" if self._inf else f"({self.x!r}, {self.y!r})"


@dataclass
class CurveInvariants:
    b2: object
    b4: object
    b6: object
    c4: object
    c6: object
    disc: object
    j: object  # None when disc == 0


# -- fibers of a curve over Q(s) ------------------------------------------


KODAIRA_I = "I"
KODAIRA_II = "II"
KODAIRA_III = "III"
KODAIRA_IV = "IV"


@dataclass(frozen=True)
class FiberClass:
    place: Place
    kodaira: str           # "I" with index n, or "II"/"III"/"IV"
    index: int             # n for I_n, 0 otherwise
    v_delta: int
    components: int        # m_v
    simple_components: int  # m_v^(1)

    @property
    def label(self) -> str:
        return f"I{self.index}" if self.kodaira == KODAIRA_I else self.kodaira

    @property
    def is_singular(self) -> bool:
        return self.v_delta > 0


def minimalize_at_place(curve: WeierstrassCurve, place: Place):
    """Rescale (x, y) -> (u^2 x, u^3 y) with u = pi^k to a v-minimal model.

    Coefficients must be rational functions of s.  Returns (curve, k); the
    result has nonnegative coefficient valuations and is not simultaneously
    v(c4) >= 4 and v(Delta) >= 12.
    """
    a2, a4, a6 = (_as_rf(curve.a2), _as_rf(curve.a4), _as_rf(curve.a6))
    vals = []
    for a, w in ((a2, 2), (a4, 4), (a6, 6)):
        if not a.is_zero:
            v = valuation(a, place)
            vals.append(Fraction(int(v), w))
    k = min((_floor(v) for v in vals), default=0)
    # twist down: coefficients a_i scale by pi^{-i k}
    def twist(c: WeierstrassCurve, k: int) -> WeierstrassCurve:
        if k == 0:
            return c
        pi = _uniformizer(place)
        return WeierstrassCurve(
            _as_rf(c.a2) * pi ** (-2 * k),
            _as_rf(c.a4) * pi ** (-4 * k),
            _as_rf(c.a6) * pi ** (-6 * k),
        )

    cur = twist(curve, k)
    while True:
        inv = cur.invariants()
        vc4 = valuation(_as_rf(inv.c4), place)
        vdel = valuation(_as_rf(inv.disc), place)
        if vc4 >= 4 and vdel >= 12:
            k += 1
            cur = twist(curve, k)
        else:
            break
    return cur, k


def _as_rf(v) -> RationalFunction:
    if isinstance(v, RationalFunction):
        return v
    if isinstance(v, Polynomial):
        return RationalFunction(v, reduce=False)
    return RationalFunction(Polynomial([v]), reduce=False)


def _floor(fr: Fraction) -> int:
    return fr.numerator // fr.denominator


def _uniformizer(place: Place) -> RationalFunction:
    if place.is_infinite:
        return RationalFunction(Polynomial([1]), Polynomial([0, 1]))  # 1/s
    return RationalFunction(place.modulus, reduce=False)


def classify_fiber(curve: WeierstrassCurve, place: Place) -> FiberClass:
    """Kodaira type at a place, for the types this surface exhibits.

    The model is first made minimal at the place.  v(c4) = 0 gives I_{v(D)};
    additive patterns are decided by (v(c4) >= 1, v(Delta) in {2,3,4}) for
    II/III/IV.  Anything else raises: the family never produces it, so
    hitting that path flags an implementation bug.
    """
    minimal, _ = minimalize_at_place(curve, place)
    inv = minimal.invariants()
    vdel = valuation(_as_rf(inv.disc), place)
    if vdel == float("inf"):
        raise CurveError("singular family: discriminant vanishes identically")
    vdel = int(vdel)
    if vdel == 0:
        return FiberClass(place, KODAIRA_I, 0, 0, 1, 1)
    vc4 = valuation(_as_rf(inv.c4), place)
    if vc4 == 0:
        n = vdel
        return FiberClass(place, KODAIRA_I, n, vdel, max(n, 1), max(n, 1))
    if vdel == 2:
        return FiberClass(place, KODAIRA_II, 0, 2, 1, 1)
    if vdel == 3:
        return FiberClass(place, KODAIRA_III, 0, 3, 2, 2)
    if vdel == 4:
        return FiberClass(place, KODAIRA_IV, 0, 4, 3, 3)
    raise CurveError(
        f"unsupported Kodaira pattern at {place}: v(c4)={vc4}, v(Delta)={vdel}"
    )
