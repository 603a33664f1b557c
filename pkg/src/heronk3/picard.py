"""From point counts to the Picard bound.

Lefschetz turns #Y(F_{p^n}) into traces of Frobenius on H^2 (the K3 betti
vector 1, 0, 22, 0, 1 pins the other cohomology): t_n = N_n - 1 - p^{2n}.
An 18-dimensional block is spanned by known divisor classes and contributes
17 p^n + (-1)^n p^n; Newton's identities recover the residual block's
characteristic polynomial, whose constant term is fixed to +-p^4 by the
Riemann hypothesis for surfaces.  Counting residual eigenvalues alpha with
alpha/p a root of unity bounds the Picard number.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .counting import CountReport, count_surface
from .poly import Polynomial, format_poly
from .rationals import is_square_fraction

BETTI_NUMBERS = (1, 0, 22, 0, 1)
KNOWN_BLOCK_DIM = 18
H2_DIM = 22


class PicardError(ValueError):
    pass


@dataclass(frozen=True)
class TraceRow:
    n: int
    surface_count: int
    trace_h2: int       # t_n = N - 1 - p^{2n}
    known_trace: int    # 17 p^n + (-1)^n p^n
    residual_trace: int


@dataclass(frozen=True)
class PicardReport:
    p: int
    rows: tuple[TraceRow, ...]
    char_poly: Polynomial          # residual block, degree 4
    roots_of_unity_count: int      # residual eigenvalues alpha with alpha/p a root of unity
    bound: int

    def as_json_dict(self) -> dict:
        return {
            "p": self.p,
            "betti": list(BETTI_NUMBERS),
            "rows": [
                {
                    "n": r.n,
                    "count": str(r.surface_count),
                    "trace_h2": str(r.trace_h2),
                    "known_trace": str(r.known_trace),
                    "residual_trace": str(r.residual_trace),
                }
                for r in self.rows
            ],
            "residual_char_poly": format_poly(self.char_poly, "X"),
            "residual_roots_of_unity": self.roots_of_unity_count,
            "picard_bound": self.bound,
        }


def traces_report(counts: dict[int, int], p: int) -> tuple[TraceRow, ...]:
    """Trace bookkeeping for the counted n; needs n = 1..3 for the pipeline."""
    rows = []
    for n in sorted(counts):
        count = counts[n]
        t = count - 1 - p ** (2 * n)
        known = 17 * p ** n + (-1) ** n * p ** n
        rows.append(TraceRow(n, count, t, known, t - known))
    return tuple(rows)


def newton_char_poly(residual_traces: tuple[int, int, int], p: int, dim: int = 4) -> Polynomial:
    """Characteristic polynomial of the 4-dimensional residual block.

    c1..c3 come from Newton's identities; c4 = +-p^4 with the sign resolved
    by requiring every root to have absolute value p (via the quadratic in
    Z = X^2, exactly).
    """
    if dim != 4:
        raise PicardError("only the 4-dimensional residual block is supported")
    r1, r2, r3 = (Fraction(r) for r in residual_traces)
    c1 = -r1
    c2 = (r1 * r1 - r2) / 2
    c3 = -(r1 ** 3 + 2 * r3 - 3 * r1 * r2) / 6
    if any(c.denominator != 1 for c in (c1, c2, c3)):
        raise PicardError("Newton identities produced non-integral coefficients")
    if c1 != 0 or c3 != 0:
        raise PicardError(
            "residual odd-power traces do not vanish; the even-only shortcut "
            "for the constant term does not apply"
        )
    for c4 in (Fraction(p) ** 4, -Fraction(p) ** 4):
        if _roots_have_absolute_value_p(c2, c4, p):
            return Polynomial([c4, Fraction(0), c2, Fraction(0), Fraction(1)])
    raise PicardError("neither sign of p^4 gives roots of absolute value p")


def _roots_have_absolute_value_p(c2: Fraction, c4: Fraction, p: int) -> bool:
    """All roots of X^4 + c2 X^2 + c4 on |X| = p, decided exactly.

    In Z = X^2 the roots must satisfy |Z| = p^2: a complex-conjugate pair
    needs product p^4; real roots must be exactly +-p^2.
    """
    disc = c2 * c2 - 4 * c4
    if disc < 0:
        return c4 == Fraction(p) ** 4
    # real roots of Z^2 + c2 Z + c4: all must lie in {p^2, -p^2}
    p2 = Fraction(p * p)
    candidates = [z for z in (p2, -p2) if z * z + c2 * z + c4 == 0]
    if not candidates:
        return False
    # the root multiset must consist of the candidates: check the factorization
    if len(candidates) == 2:
        return c2 == 0 and c4 == -p2 * p2
    z = candidates[0]
    return c2 == -2 * z and c4 == z * z


def _square_root_of_quartic(g: Polynomial) -> Polynomial | None:
    """Monic quadratic whose square is the given monic quartic, if one exists."""
    u = Fraction(g[3]) / 2
    v = (Fraction(g[2]) - u * u) / 2
    cand = Polynomial([v, u, Fraction(1)])
    return cand if cand * cand == g else None


def picard_bound(h: Polynomial, p: int) -> int:
    """22 minus the number of residual eigenvalues whose ratio to p is not
    a root of unity.

    The squares alpha^2 of the roots of h are the roots of the quadratic
    square root of the Graeffe transform h(X) h(-X) = G(X^2); so
    beta = (alpha/p)^2 satisfies a primitive integer quadratic, and beta is
    a root of unity iff that quadratic is monic and cyclotomic (Z -+ 1,
    Z^2 + 1, Z^2 +- Z + 1) or beta itself is +-1.
    """
    if h.degree != 4:
        raise PicardError("expected a quartic residual polynomial")
    h = h.monic()
    hminus = Polynomial([c if k % 2 == 0 else -c for k, c in enumerate(h.coeffs)])
    prod = h * hminus
    if any(prod[k] != 0 for k in range(1, 9, 2)):
        raise PicardError("Graeffe transform is not even")
    G = Polynomial([prod[2 * k] for k in range(5)])
    G = G if G.leading == 1 else G.monic()
    g = _square_root_of_quartic(G if G[4] == 1 else G.monic())
    if g is None:
        raise PicardError("residual eigenvalue squares do not pair into a quadratic")
    # beta = Z / p^2 satisfies g(p^2 beta) = 0; primitivize over Z
    import math

    p2 = p * p
    a = p2 * p2
    b = int(Fraction(g[1]) * p2)
    c = int(Fraction(g[0]))
    if Fraction(g[1]) * p2 != b or Fraction(g[0]) != c:
        raise PicardError("non-integral eigenvalue-square polynomial")
    gg = math.gcd(math.gcd(abs(a), abs(b)), abs(c))
    a, b, c = a // gg, b // gg, c // gg
    disc = Fraction(b * b - 4 * a * c)
    unity_roots = 0
    if is_square_fraction(disc):
        from .rationals import sqrt_fraction

        rt = sqrt_fraction(disc)
        for beta in (Fraction(-b + rt, 2 * a), Fraction(-b - rt, 2 * a)):
            if beta in (1, -1):
                unity_roots += 2
    else:
        # conjugate pair of betas: root of unity iff monic cyclotomic
        if a == 1 and (b, c) in [(0, 1), (1, 1), (-1, 1)]:
            unity_roots += 4
    return H2_DIM - (4 - unity_roots)


def full_picard_report(p: int = 11, counts: dict[int, int] | None = None) -> PicardReport:
    """Count (or accept counts for) n = 1..3 and run the whole pipeline."""
    if counts is None:
        counts = {n: count_surface(p, n).count for n in (1, 2, 3)}
    rows = traces_report(counts, p)
    residuals = tuple(r.residual_trace for r in rows[:3])
    h = newton_char_poly(residuals, p)
    bound = picard_bound(h, p)
    unity = bound - KNOWN_BLOCK_DIM
    return PicardReport(p, rows, h, unity, bound)


@dataclass(frozen=True)
class EulerCheck:
    chi_rational: int   # chi of the rational elliptic surface
    mu: int             # degree of its j-map
    chi_k3: int
    mu_prime: int       # degree of the K3's j-map
    nu_iv_rational: int
    nu_iv_k3: int


def euler_degree_check() -> EulerCheck:
    """The Euler-characteristic/j-degree identity 12 chi = mu + 4 nu(IV).

    Verified for the K3 from its own fiber classification and j-map degree,
    then halved along the degree-2 base change for the rational surface.
    """
    from .fibration import fiber_classification, j_map_degree

    fibers = fiber_classification()
    nu_iv = sum(1 for f in fibers if f.label == "IV")
    if nu_iv % 2 != 0:
        raise PicardError("IV fibers should come in base-change pairs")
    mu_prime = j_map_degree()
    chi_k3 = 2
    if 12 * chi_k3 != mu_prime + 4 * nu_iv:
        raise PicardError("Euler/j-degree identity failed for the K3 surface")
    mu = mu_prime // 2
    chi_rational = 1
    if 12 * chi_rational != mu + 4 * (nu_iv // 2):
        raise PicardError("Euler/j-degree identity failed for the rational surface")
    return EulerCheck(chi_rational, mu, chi_k3, mu_prime, nu_iv // 2, nu_iv)
