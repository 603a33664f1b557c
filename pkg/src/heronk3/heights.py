"""Mordell-Weil bookkeeping: heights, torsion certificate, NS discriminant.

The Shioda pairing is computed from intersection data:

    <S,T> = chi + (S.O) + (T.O) - (S.T) - sum_v contr_v(S,T),  chi = 2,

with (S.O) read off x-coordinate pole orders on place-minimal models and
(S.T) from coordinate-difference valuations.  Fiber components are
identified on the explicit plane geometry: the I6 hexagons over s = 1 and
s = infinity consist of the coordinate lines r = x_i = 0 and the blow-ups
of the three double points, the IV fibers over s = 0, -1 of three
concurrent lines; each component carries a natural position chart whose
difference valuation is the local intersection number of two sections
landing on it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .fibration import simple_component_product, trivial_lattice_rank_sum
from .poly import Polynomial, RationalFunction, poly_gcd, rational_roots, squarefree_factor
from .rationals import GaussianRational
from .surface import family_curve, family_sections, generic_parameter, generic_parameter_gaussian
from .weierstrass import CurvePoint

CHI = 2  # Euler characteristic chi(O_Y) of the K3 surface


class HeightError(ValueError):
    pass


@dataclass(frozen=True)
class Section:
    name: str
    point: CurvePoint


@lru_cache(maxsize=None)
def mw_sections() -> dict[str, Section]:
    pts = family_sections(gaussian=True)
    return {name: Section(name, pt) for name, pt in pts.items()}


@lru_cache(maxsize=None)
def section_combination(mq: int, nr: int) -> Section:
    """The section mq*Q + nr*R over Q(i)(s)."""
    curve = family_curve(generic_parameter_gaussian())
    secs = mw_sections()
    pt = curve.add(
        curve.scalar_mul(mq, secs["Q"].point),
        curve.scalar_mul(nr, secs["R"].point),
    )
    return Section(f"{mq}Q+{nr}R", pt)


# -- places of the Gaussian function field used by the pairing ---------------

_G0 = GaussianRational(0)
_G1 = GaussianRational(1)


def _gpoly(coeffs) -> Polynomial:
    return Polynomial([GaussianRational(c) if not isinstance(c, GaussianRational) else c for c in coeffs])


_PLACE_VALUES = {"s1": _G1, "s0": _G0, "sm1": GaussianRational(-1)}
_PLACE_KINDS = {"s1": "I6", "inf": "I6", "s0": "IV", "sm1": "IV"}
_QUARTIC = _gpoly([-27, 54, -26, 2, 1])


def _val_linear(f: RationalFunction, a: GaussianRational) -> int | float:
    """Valuation of f at s = a (f != 0), linear places only."""
    if f.is_zero:
        return float("inf")
    lin = _gpoly([-a, 1])
    v = 0
    num = f.num
    while True:
        q, r = divmod(num, lin)
        if not r.is_zero:
            break
        num = q
        v += 1
    den = f.den
    while True:
        q, r = divmod(den, lin)
        if not r.is_zero:
            break
        den = q
        v -= 1
    return v


def _val_inf(f: RationalFunction) -> int | float:
    if f.is_zero:
        return float("inf")
    return f.den.degree - f.num.degree


def _val_at(f: RationalFunction, place: str) -> int | float:
    if place == "inf":
        return _val_inf(f)
    return _val_linear(f, _PLACE_VALUES[place])


# -- projective coordinates of a section ------------------------------------


def section_vector(point: CurvePoint) -> tuple[Polynomial, Polynomial, Polynomial, Polynomial]:
    """Primitive polynomial vector [r : x : y : z] of a section in P^3."""
    s = generic_parameter_gaussian()
    if point.is_infinity:
        return (_gpoly([0]), _gpoly([1]), _gpoly([-1]), _gpoly([0]))
    p, q = point.x, point.y
    sm1 = s - 1
    r = sm1 * (8 * sm1 * sm1 - 2 * p)
    x = -s * (s + 1) * p + q
    y = -s * (s + 1) * p - q
    z = 8 * sm1 * sm1 * s * (s + 1)
    from .poly import poly_lcm

    den = Polynomial([_G1])
    for c in (r, x, y, z):
        if not c.is_zero:
            den = poly_lcm(den, c.den)
    nums = [(c * RationalFunction(den, reduce=False)).num for c in (r, x, y, z)]
    g = Polynomial()
    for n in nums:
        if not n.is_zero:
            g = poly_gcd(g, n)
    if g.degree > 0:
        nums = [n // g if not n.is_zero else n for n in nums]
    return tuple(nums)


def _reduce_vector(vec, place: str):
    if place == "inf":
        d = max(v.degree for v in vec if not v.is_zero)
        return [v[d] if not v.is_zero else _G0 for v in vec]
    a = _PLACE_VALUES[place]
    return [v.evaluate(a) if not v.is_zero else _G0 for v in vec]


@dataclass(frozen=True)
class _Landing:
    component: object          # int component id, or "O" for the zero section
    chart: RationalFunction | None


def _classify(vec, place: str) -> _Landing:
    """Component of the fiber at the place that the section lands on."""
    W = _reduce_vector(vec, place)
    r0, x0, y0, z0 = W
    vr, vx, vy, vz = (RationalFunction(v, reduce=False) for v in vec)
    zx, zy, zz = (x0 == 0), (y0 == 0), (z0 == 0)
    kind = _PLACE_KINDS[place]
    if kind == "I6":
        if r0 != 0:
            raise HeightError("section misses the plane of the I6 fiber")
        nzeros = int(zx) + int(zy) + int(zz)
        if nzeros == 2:
            # a blown-up double point N_i; chart = blow-up ratio coordinate
            if not zx:
                return _Landing(1, vy / vr)      # N1 = [0:1:0:0]
            if not zy:
                return _Landing(5, vx / vr)      # N2 = [0:0:1:0]
            return _Landing(3, vx / vr)          # N3 = [0:0:0:1]
        if nzeros != 1:
            raise HeightError("section lands on a hexagon node")
        if zx:
            return _Landing(4, vy / vz)          # line r = x = 0
        if zy:
            return _Landing(2, vx / vz)          # line r = y = 0
        return _Landing(0, vx / vy)              # line r = z = 0 (identity)
    # IV fiber: three concurrent lines in the plane x + y + z = 0
    if x0 + y0 + z0 != 0:
        raise HeightError("section misses the plane of the IV fiber")
    if int(zx) + int(zy) + int(zz) != 1:
        raise HeightError("section lands on the triple point of the IV fiber")
    if zz:
        return _Landing(0, vr / vx)              # identity component
    if zx:
        return _Landing(1, vr / vy)
    return _Landing(2, vr / vx)


def _landings(sec: Section) -> dict[str, _Landing]:
    if sec.point.is_infinity:
        return {pl: _Landing("O", None) for pl in _PLACE_KINDS}
    vec = section_vector(sec.point)
    out = {}
    px = sec.point.x
    for place in _PLACE_KINDS:
        vmin = _val_at(px, place) + (4 if place == "inf" else 0)
        if vmin < 0:
            out[place] = _Landing("O", None)
        else:
            out[place] = _classify(vec, place)
    return out


def _contr(kind: str, i, j) -> Fraction:
    """Local height contribution of two component indices (possibly equal)."""
    if i == "O" or j == "O":
        return Fraction(0)
    if kind == "I6":
        a, b = i % 6, j % 6
        if a > b:
            a, b = b, a
        return Fraction(a * (6 - b), 6)
    if i == 0 or j == 0:
        return Fraction(0)
    return Fraction(2, 3) if i == j else Fraction(1, 3)


def _section_dot_zero(sec: Section) -> Fraction:
    """(S.O): half the pole degree of x_S on place-minimal models."""
    if sec.point.is_infinity:
        raise HeightError("(O.O) is not used by the pairing")
    px = sec.point.x
    dden = px.den.degree
    vinf_min = _val_inf(px) + 4
    pole_inf = max(0, -(vinf_min if vinf_min != float("inf") else 0))
    if dden % 2 or pole_inf % 2:
        raise HeightError("odd x-pole order on a minimal model")
    # finite pole orders must be even place by place
    if dden:
        _, factors = squarefree_factor(px.den)
        if any(m % 2 for _, m in factors):
            raise HeightError("odd x-pole order at a finite place")
    return Fraction(dden + int(pole_inf), 2)


def _strip_factor(g: Polynomial, lin: Polynomial) -> Polynomial:
    while g.degree > 0:
        q, r = divmod(g, lin)
        if r.is_zero:
            g = q
        else:
            break
    return g


def _saturate_away(g: Polynomial, other: Polynomial) -> Polynomial:
    gg = poly_gcd(g, other)
    while gg.degree > 0:
        g = g // gg
        gg = poly_gcd(g, other)
    return g


def _section_dot_section(s1: Section, s2: Section, land1, land2) -> Fraction:
    """(S.T) for distinct sections, as a sum of local intersection numbers."""
    p1, q1 = s1.point.x, s1.point.y
    p2, q2 = s2.point.x, s2.point.y
    dp = p1 - p2
    dq = q1 - q2
    total = 0
    # bulk over good finite places
    if dp.is_zero:
        g = dq.num
    elif dq.is_zero:
        g = dp.num
    else:
        g = poly_gcd(dp.num, dq.num)
    for a in (_G0, _G1, GaussianRational(-1)):
        g = _strip_factor(g, _gpoly([-a, 1]))
    g_o = poly_gcd(p1.den, p2.den)
    if g_o.degree > 0:
        g = _saturate_away(g, g_o)
    gq = poly_gcd(g, _QUARTIC)
    if gq.degree > 0:
        # common reduction on a nodal I1 fiber: only smooth points supported
        if poly_gcd(q1.num, gq).degree > 0:
            raise HeightError("sections meet at the node of an I1 fiber")
    total += max(0, g.degree)
    # bulk of common x-poles (both sections reduce to O) at good places
    if g_o.degree > 0:
        g_o_good = g_o
        for a in (_G0, _G1, GaussianRational(-1)):
            g_o_good = _strip_factor(g_o_good, _gpoly([-a, 1]))
        if g_o_good.degree > 0:
            dz = p1 / q1 - p2 / q2
            dw = 1 / q1 - 1 / q2
            cap = g_o_good ** (2 + dz.num.degree + dw.num.degree)
            gg = poly_gcd(poly_gcd(dz.num, dw.num), cap)
            total += max(0, gg.degree)
    # bad places, on the explicit fiber geometry
    for place, kind in _PLACE_KINDS.items():
        l1, l2 = land1[place], land2[place]
        if l1.component == "O" and l2.component == "O":
            dz = p1 / q1 - p2 / q2
            dw = 1 / q1 - 1 / q2
            shift_z = 2 if place == "inf" else 0
            shift_w = 6 if place == "inf" else 0
            m = min(_val_at(dz, place) - shift_z, _val_at(dw, place) - shift_w)
            if m <= 0:
                raise HeightError("inconsistent common reduction at the zero section")
            total += m
            continue
        if l1.component == "O" or l2.component == "O" or l1.component != l2.component:
            continue
        dphi = l1.chart - l2.chart
        m = _val_at(dphi, place)
        if m == float("inf"):
            raise HeightError("sections share a component chart identically")
        total += max(0, m)
    return Fraction(total)


def height_pairing(s1: Section, s2: Section) -> Fraction:
    """The Shioda pairing <S, T> on the Mordell-Weil group."""
    if s1.point.is_infinity or s2.point.is_infinity:
        return Fraction(0)
    land1 = _landings(s1)
    if s1.point == s2.point:
        contr = sum(_contr(_PLACE_KINDS[pl], land1[pl].component, land1[pl].component) for pl in _PLACE_KINDS)
        return 2 * CHI + 2 * _section_dot_zero(s1) - contr
    land2 = _landings(s2)
    contr = sum(_contr(_PLACE_KINDS[pl], land1[pl].component, land2[pl].component) for pl in _PLACE_KINDS)
    return (
        CHI
        + _section_dot_zero(s1)
        + _section_dot_zero(s2)
        - _section_dot_section(s1, s2, land1, land2)
        - contr
    )


@dataclass(frozen=True)
class HeightGram:
    names: tuple[str, ...]
    matrix: tuple[tuple[Fraction, ...], ...]

    @property
    def determinant(self) -> Fraction:
        m = [list(row) for row in self.matrix]
        n = len(m)
        det = Fraction(1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                m[col], m[pivot] = m[pivot], m[col]
                det = -det
            det *= m[col][col]
            for r in range(col + 1, n):
                f = m[r][col] / m[col][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
        return det

    def as_json_dict(self) -> dict:
        return {
            "basis": list(self.names),
            "matrix": [[str(v) for v in row] for row in self.matrix],
            "determinant": str(self.determinant),
        }


def height_gram(sections: list[Section]) -> HeightGram:
    n = len(sections)
    rows = []
    for a in range(n):
        row = []
        for b in range(n):
            if b < a:
                row.append(rows[b][a])
            else:
                row.append(height_pairing(sections[a], sections[b]))
        rows.append(row)
    return HeightGram(tuple(s.name for s in sections), tuple(tuple(r) for r in rows))


# -- torsion and group structure ----------------------------------------------


@dataclass(frozen=True)
class TorsionCertificate:
    torsion_order: int
    kernel_valuation: int                 # v_{s-1} of x(2R+P)
    checked_multiples: tuple[int, ...]
    # rational poles of x(mR) at singular-fiber parameters (allowed; such s0
    # are never specialized), keyed by m; empty lists mean none at all
    singular_parameter_poles: dict[int, tuple[Fraction, ...]]

    def as_json_dict(self) -> dict:
        return {
            "torsion_order": self.torsion_order,
            "x_2R_plus_P_valuation_at_s_minus_1": self.kernel_valuation,
            "checked_multiples": list(self.checked_multiples),
            "singular_parameter_poles": {
                str(m): [str(r) for r in roots]
                for m, roots in self.singular_parameter_poles.items()
            },
        }


@lru_cache(maxsize=None)
def _rational_multiple_of_r(m: int) -> CurvePoint:
    curve = family_curve(generic_parameter())
    return curve.scalar_mul(m, family_sections()["R"])


_SINGULAR_PARAMETERS = (Fraction(0), Fraction(1), Fraction(-1))


@lru_cache(maxsize=None)
def torsion_certificate() -> TorsionCertificate:
    """Certifies E(L)_tors = <P> of order 3 and that R is non-torsion.

    The section 2R + P lies in the kernel of reduction at s = 1 (its
    x-coordinate has a pole of order 2 there), which rules out torsion in
    characteristic zero; rational specializations at smooth fibers cannot
    acquire torsion of order m = 8, 10, 12 because x(mR) has no rational
    poles away from the singular-fiber parameters s = 0, +-1.  (x(12R)
    necessarily has a pole at s = 1: 12R = 6(2R + P) lies in the kernel of
    reduction there.)
    """
    s = generic_parameter()
    curve = family_curve(s)
    secs = family_sections()
    P, R = secs["P"], secs["R"]
    if P.is_infinity or not curve.scalar_mul(3, P).is_infinity:
        raise HeightError("P is not 3-torsion")
    two_r_plus_p = curve.add(curve.scalar_mul(2, R), P)
    expected = (4 * (s ** 4 - 6 * s ** 3 + 10 * s ** 2 - 2 * s + 1)) / ((s - 1) ** 2)
    if two_r_plus_p.x != expected:
        raise HeightError("x(2R + P) does not match the kernel-of-reduction form")
    num_poles = sum(1 for root in rational_roots(two_r_plus_p.x.den) if root == 1)
    kernel_val = -num_poles
    checked = []
    singular_poles: dict[int, tuple[Fraction, ...]] = {}
    for m in (8, 10, 12):
        pt = _rational_multiple_of_r(m)
        if pt.is_infinity:
            raise HeightError(f"{m}R vanished; R would be torsion")
        roots = rational_roots(pt.x.den)
        bad = [r for r in roots if r not in _SINGULAR_PARAMETERS]
        if bad:
            raise HeightError(f"x({m}R) has a rational pole at a smooth fiber: {bad}")
        singular_poles[m] = tuple(roots)
        checked.append(m)
    return TorsionCertificate(3, kernel_val, tuple(checked), singular_poles)


@dataclass(frozen=True)
class MWReport:
    rank: int
    torsion_order: int
    group: str
    gram: HeightGram
    fiber_rank_sum: int
    picard_rank: int
    ns_discriminant: int

    def as_json_dict(self) -> dict:
        return {
            "group": self.group,
            "rank": self.rank,
            "torsion_order": self.torsion_order,
            "gram": self.gram.as_json_dict(),
            "trivial_lattice_rank_sum": self.fiber_rank_sum,
            "picard_rank": self.picard_rank,
            "ns_discriminant": str(self.ns_discriminant),
        }


def ns_discriminant() -> int:
    """disc NS = -(disc MW * prod m_v^(1)) / |tors|^2 = -36."""
    secs = mw_sections()
    gram = height_gram([secs["Q"], secs["R"]])
    disc_mw = gram.determinant
    tors = torsion_certificate().torsion_order
    value = Fraction(disc_mw) * simple_component_product() / tors ** 2
    if value.denominator != 1:
        raise HeightError("NS discriminant came out non-integral")
    return -int(value)


def mw_report() -> MWReport:
    """Rank, torsion, Gram matrix and the rho = r + 2 + sum(m_v - 1) ledger."""
    secs = mw_sections()
    gram = height_gram([secs["Q"], secs["R"]])
    if gram.determinant == 0:
        raise HeightError("Q and R are not independent")
    tors = torsion_certificate().torsion_order
    fiber_sum = trivial_lattice_rank_sum()
    rank = 2
    rho = rank + 2 + fiber_sum
    return MWReport(
        rank=rank,
        torsion_order=tors,
        group="Z^2 x Z/3Z",
        gram=gram,
        fiber_rank_sum=fiber_sum,
        picard_rank=rho,
        ns_discriminant=ns_discriminant(),
    )
