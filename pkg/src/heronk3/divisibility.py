"""The 2-divisibility obstruction: Q + R is not twice a section.

If Q + R = 2S, then p_{2S} = p_{Q+R}; written in u with
p_S = 4(s-1)^2 + 2(s-1)u this becomes a monic quartic over Q(i)[s] whose
roots would be polynomials dividing the constant term
8(s+i) s^2 (s-1)^2 (s+1)^3.  Newton polygons at the places s, s+1, s-1,
s+i cut the candidates down to u = c (s+1)(s-1)^m (s+i)^n with
m, n in {0, 1}; for each case the coefficients of the resulting identity in
s are polynomials in c with constant gcd, so no candidate exists.
"""

from __future__ import annotations

from dataclasses import dataclass

from .places import Place, newton_polygon
from .poly import Polynomial, RationalFunction, format_poly, poly_gcd
from .rationals import GaussianRational
from .surface import family_curve, generic_parameter_gaussian
from .heights import mw_sections

_G = GaussianRational
_I = _G(0, 1)


class DivisibilityError(ValueError):
    pass


def _gpoly(coeffs) -> Polynomial:
    return Polynomial([c if isinstance(c, _G) else _G(c) for c in coeffs])


@dataclass(frozen=True)
class DivisibilityCase:
    m: int
    n: int
    gcd_in_c: str
    coefficient_degrees: tuple[int, ...]


@dataclass(frozen=True)
class NoSolutionCertificate:
    quartic_constant_term: str
    exponent_constraints: dict[str, list[int]]
    cases: tuple[DivisibilityCase, ...]

    def as_json_dict(self) -> dict:
        return {
            "statement": "Q+R is not divisible by 2 in the Mordell-Weil group",
            "constant_term": self.quartic_constant_term,
            "exponents": self.exponent_constraints,
            "cases": [
                {
                    "m": c.m,
                    "n": c.n,
                    "gcd_in_c": c.gcd_in_c,
                    "coefficient_degrees_in_c": list(c.coefficient_degrees),
                }
                for c in self.cases
            ],
        }


def halving_quartic() -> Polynomial:
    """The monic quartic in u over Q(i)[s] expressing p_{2S} = p_{Q+R}.

    Derived from the duplication formula and the group-law value of
    p_{Q+R}, not transcribed; coefficients are returned as a Polynomial in
    u with Polynomial (in s) coefficients.
    """
    s = generic_parameter_gaussian()
    curve = family_curve(s)
    secs = mw_sections()
    qr = curve.add(secs["Q"].point, secs["R"].point)
    p_qr = qr.x
    a2, a4, a6 = curve.a2, curve.a4, curve.a6
    # x(2S) = (x^4 - 2 a4 x^2 - 8 a6 x + a4^2 - 4 a2 a6) / (4 (x^3 + a2 x^2 + a4 x + a6))
    # as polynomials in x = p_S over Q(i)(s):
    num = [a4 * a4 - 4 * a2 * a6, -8 * a6, -2 * a4, RationalFunction.const(_G(0)), RationalFunction.const(_G(1))]
    den = [4 * a6, 4 * a4, 4 * a2, RationalFunction.const(_G(4))]
    # p_{2S} = p_{Q+R}  <=>  num(x) - p_qr * den(x) = 0
    eq = [num[k] - p_qr * (den[k] if k < len(den) else 0) for k in range(5)]
    # substitute x = 4(s-1)^2 + 2(s-1) u and collect in u
    shift = 4 * (s - 1) * (s - 1)
    scale = 2 * (s - 1)
    out = [RationalFunction.const(_G(0)) for _ in range(5)]
    for k in range(4, -1, -1):
        # multiply the accumulated polynomial in u by (shift + scale*u), add eq coefficient
        nxt = [RationalFunction.const(_G(0)) for _ in range(5)]
        for j in range(5):
            if out[j].is_zero:
                continue
            nxt[j] = nxt[j] + out[j] * shift
            if j + 1 < 5:
                nxt[j + 1] = nxt[j + 1] + out[j] * scale
        nxt[0] = nxt[0] + eq[k]
        out = nxt
    lead = out[4]
    coeffs_u = [c / lead for c in out]
    polys = []
    for c in coeffs_u:
        if not c.is_polynomial:
            raise DivisibilityError("halving quartic has non-polynomial coefficients")
        polys.append(c.num)
    return Polynomial(polys)


_PLACES = {
    "s": _gpoly([0, 1]),
    "s+1": _gpoly([1, 1]),
    "s-1": _gpoly([-1, 1]),
    "s+i": _gpoly([_I, _G(1)]),
}


def exponent_constraints(quartic_in_u: Polynomial) -> dict[str, list[int]]:
    """Allowed integer exponents of each linear factor in a polynomial root."""
    out = {}
    for name, modulus in _PLACES.items():
        place = Place.finite(modulus, certify=False)
        polygon = newton_polygon(quartic_in_u, place)
        vals = [v for v in polygon.integer_root_valuations() if v >= 0]
        out[name] = vals
    return out


def two_divisibility() -> NoSolutionCertificate:
    """Certify that no section S with 2S = Q + R exists."""
    quartic = halving_quartic()
    const = quartic[0]
    expected_const = (
        _gpoly([8]) * _gpoly([_I, _G(1)]) * _gpoly([0, 1]) ** 2
        * _gpoly([-1, 1]) ** 2 * _gpoly([1, 1]) ** 3
    )
    if quartic[4] != Polynomial([_G(1)]) or const != expected_const:
        raise DivisibilityError("halving quartic does not match its expected form")
    constraints = exponent_constraints(quartic)
    if constraints["s"] != [0] or constraints["s+1"] != [1]:
        raise DivisibilityError("Newton polygons did not pin k = 0, l = 1")
    if not set(constraints["s-1"]) <= {0, 1} or not set(constraints["s+i"]) <= {0, 1}:
        raise DivisibilityError("Newton polygons allow unexpected exponents")
    cases = []
    for m in constraints["s-1"]:
        for n in constraints["s+i"]:
            cases.append(_check_case(quartic, m, n))
    return NoSolutionCertificate(
        quartic_constant_term=format_poly(const),
        exponent_constraints=constraints,
        cases=tuple(cases),
    )


def _check_case(quartic_in_u: Polynomial, m: int, n: int) -> DivisibilityCase:
    """Substitute u = c (s+1)(s-1)^m (s+i)^n; certify no constant c works.

    The substituted equation is a polynomial identity in s whose
    coefficients are polynomials in c; their gcd over Q(i)[c] must be
    constant, otherwise some c in Qbar would satisfy every coefficient.
    """
    base = _gpoly([1, 1]) * _gpoly([-1, 1]) ** m * _gpoly([_I, _G(1)]) ** n
    # collect sum_j coeff_j(s) * c^j * base(s)^j as s-coefficients of c-polynomials
    terms = []
    for j in range(5):
        cj = quartic_in_u[j]
        if isinstance(cj, int):
            cj = _gpoly([cj])
        terms.append(cj * base ** j)
    max_deg = max(t.degree for t in terms if not t.is_zero)
    c_polys = []
    for k in range(max_deg + 1):
        c_polys.append(Polynomial([t[k] for t in terms]))
    g = Polynomial()
    for cp in c_polys:
        if not cp.is_zero:
            g = poly_gcd(g, cp)
        if g.degree == 0:
            break
    if g.degree != 0:
        raise DivisibilityError(
            f"case (m, n) = ({m}, {n}): candidate constants exist, gcd {format_poly(g, 'c')}"
        )
    degrees = tuple(cp.degree for cp in c_polys)
    return DivisibilityCase(m, n, format_poly(g, "c"), degrees)
