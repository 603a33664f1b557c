"""Dense univariate polynomials and rational functions over an exact field.

The same ``Polynomial`` class serves Q (Fraction coefficients), Q(i)
(GaussianRational) and finite fields (FFElement): coefficients only need the
field operations and comparison with integer 0/1.  Coefficient lists are
stored lowest degree first with the leading coefficient nonzero; the zero
polynomial is the empty list.

GCDs over Q go through integer polynomials: a cheap modular degree probe,
then a heuristic evaluation/reconstruction gcd, with a subresultant PRS as
the safety net.  Over other fields the plain monic Euclidean algorithm is
used (degrees stay small there).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .rationals import GaussianRational


class Polynomial:
    """Dense univariate polynomial; immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors ----------------------------------------------------

    @staticmethod
    def x(power: int = 1, coeff=1) -> "Polynomial":
        return Polynomial([0] * power + [coeff])

    @staticmethod
    def const(c) -> "Polynomial":
        return Polynomial([c])

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self == Polynomial([other])
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        if all(isinstance(c, Fraction) for c in a) and all(isinstance(c, Fraction) for c in b):
            return _mul_fraction(a, b)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Polynomial([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __divmod__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial(), self
        lead = other.leading
        if isinstance(lead, int):
            lead = Fraction(lead)
        inv_lead = 1 / lead if lead != 1 else None
        quo = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree]
            if c == 0:
                continue
            q = c * inv_lead if inv_lead is not None else c
            quo[k] = q
            for j, oc in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - q * oc
        return Polynomial(quo), Polynomial(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    # -- field-flavoured helpers ----------------------------------------------

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        lead = self.leading
        if lead == 1:
            return self
        if isinstance(lead, int):
            lead = Fraction(lead)
        return Polynomial([c / lead for c in self.coeffs])

    def derivative(self) -> "Polynomial":
        return Polynomial([k * c for k, c in enumerate(self.coeffs)][1:])

    def evaluate(self, point):
        """Horner evaluation; works for any value with compatible arithmetic."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * point + c
        return 0 if acc is None else acc

    def shift(self, k: int) -> "Polynomial":
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return Polynomial([0] * k + list(self.coeffs))

    def reverse(self) -> "Polynomial":
        """Reciprocal polynomial x^deg * p(1/x)."""
        return Polynomial(list(reversed(self.coeffs)))

    def map_coeffs(self, fn) -> "Polynomial":
        return Polynomial([fn(c) for c in self.coeffs])

    # -- Q-specific helpers ----------------------------------------------------

    def content_and_primitive(self):
        """For Fraction coefficients: (content, primitive integer-coefficient part).

        content * primitive == self, primitive has coprime integer coefficients
        with positive leading coefficient.
        """
        if self.is_zero:
            return Fraction(0), Polynomial()
        den = 1
        for c in self.coeffs:
            den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
        ints = [int(Fraction(c) * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = math.gcd(g, abs(c))
        if ints[-1] < 0:
            g = -g
        prim = Polynomial([Fraction(c // g) if g != 0 else Fraction(0) for c in ints])
        return Fraction(g, den), prim

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"


def _as_poly(other):
    if isinstance(other, Polynomial):
        return other
    if isinstance(other, int):
        return Polynomial([Fraction(other)])
    if isinstance(other, (Fraction, GaussianRational)):
        return Polynomial([other])
    return NotImplemented


# -- integer-polynomial kernel (lists of python ints, low degree first) -------


def _fraction_to_int_poly(coeffs: Sequence[Fraction]):
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return [int(c * den) for c in coeffs], den


def _mul_fraction(a, b) -> Polynomial:
    ia, da = _fraction_to_int_poly(a)
    ib, db = _fraction_to_int_poly(b)
    out = [0] * (len(ia) + len(ib) - 1)
    for i, ai in enumerate(ia):
        if ai:
            for j, bj in enumerate(ib):
                out[i + j] += ai * bj
    d = da * db
    return Polynomial([Fraction(c, d) for c in out])


def _int_content(a) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, abs(c))
    return g


def _int_primitive(a):
    g = _int_content(a)
    if g == 0:
        return []
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def _int_divmod_exact(a, b):
    """Exact division of integer polynomials; returns quotient or None."""
    if not b:
        raise ZeroDivisionError
    rem = list(a)
    dq = len(rem) - len(b)
    if dq < 0:
        return None if any(rem) else []
    quo = [0] * (dq + 1)
    for k in range(dq, -1, -1):
        c = rem[k + len(b) - 1]
        if c == 0:
            continue
        q, r = divmod(c, b[-1])
        if r != 0:
            return None
        quo[k] = q
        for j, bc in enumerate(b):
            rem[k + j] -= q * bc
    if any(rem):
        return None
    return quo


def _int_eval(a, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _gcd_degree_mod_p(a, b, p: int):
    """Degree of gcd(a, b) mod p, or None if p divides a leading coefficient."""
    if a[-1] % p == 0 or b[-1] % p == 0:
        return None
    am = [c % p for c in a]
    bm = [c % p for c in b]

    def trim(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    am, bm = trim(am), trim(bm)
    while bm:
        inv = pow(bm[-1], p - 2, p)
        deg_diff = len(am) - len(bm)
        while deg_diff >= 0 and am:
            c = am[-1] * inv % p
            for j in range(len(bm)):
                am[j + deg_diff] = (am[j + deg_diff] - c * bm[j]) % p
            trim(am)
            deg_diff = len(am) - len(bm)
        am, bm = bm, am
    return len(am) - 1


_PROBE_PRIMES = (1000003, 2000003, 9999991)


def _int_gcd_heuristic(a, b):
    """GCDHEU: evaluate at a large point, take integer gcd, reconstruct.

    Returns the primitive gcd or None when all attempts fail.
    """
    bound = max(max(abs(c) for c in a), max(abs(c) for c in b))
    xi = 2 * bound + 4
    for _ in range(8):
        ga = _int_eval(a, xi)
        gb = _int_eval(b, xi)
        g = math.gcd(ga, gb)
        digits = []
        while g:
            r = g % xi
            if r > xi // 2:
                r -= xi
            digits.append(r)
            g = (g - r) // xi
        cand = _int_primitive(digits)
        if cand and _int_divmod_exact(a, cand) is not None and _int_divmod_exact(b, cand) is not None:
            return cand
        xi = xi * 73794 // 27011 + 1
    return None


def _int_pseudo_rem(a, b):
    """Pseudo-remainder of integer polynomials (up to a power of lead(b))."""
    rem = list(a)
    lb = b[-1]
    while len(rem) >= len(b) and any(rem):
        c = rem[-1]
        if c == 0:
            rem.pop()
            continue
        k = len(rem) - len(b)
        rem = [x * lb for x in rem]
        for j, bc in enumerate(b):
            rem[k + j] -= c * bc
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def _int_gcd_prs(a, b):
    """Primitive PRS gcd (primitive remainder at each step keeps sizes sane)."""
    a = _int_primitive(a)
    b = _int_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_pseudo_rem(a, b)
        a, b = b, _int_primitive(r)
    return _int_primitive(a)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor; gcd(a, 0) = monic(a)."""
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    if a.degree == 0 or b.degree == 0:
        c = a.coeffs[0] if a.degree == 0 else b.coeffs[0]
        one = Fraction(1) if isinstance(c, int) else c / c
        return Polynomial([one])
    if all(isinstance(c, Fraction) for c in a.coeffs) and all(
        isinstance(c, Fraction) for c in b.coeffs
    ):
        ia = _int_primitive(_fraction_to_int_poly(a.coeffs)[0])
        ib = _int_primitive(_fraction_to_int_poly(b.coeffs)[0])
        # cheap modular probe: coprime almost always detected here
        deg = None
        for p in _PROBE_PRIMES:
            d = _gcd_degree_mod_p(ia, ib, p)
            if d is not None:
                deg = d if deg is None else min(deg, d)
                if deg == 0:
                    return Polynomial([Fraction(1)])
        g = _int_gcd_heuristic(ia, ib)
        if g is None:
            g = _int_gcd_prs(ia, ib)
        lead = g[-1]
        return Polynomial([Fraction(c, lead) for c in g])
    # generic monic Euclid
    x, y = a, b
    while not y.is_zero:
        x, y = y, (x % y.monic())
    return x.monic()


def poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    if a.is_zero or b.is_zero:
        return Polynomial()
    g = poly_gcd(a, b)
    return ((a * b) // g).monic()


def poly_valuation(a: Polynomial, pi: Polynomial) -> int:
    """Multiplicity of the (nonconstant) factor pi in a; a != 0."""
    if a.is_zero:
        raise ValueError("valuation of the zero polynomial")
    v = 0
    while True:
        q, r = divmod(a, pi)
        if not r.is_zero:
            return v
        a = q
        v += 1


# -- squarefree factorization, roots, irreducibility ---------------------------


def squarefree_factor(a: Polynomial):
    """Squarefree decomposition with rational linear factors split off.

    Returns (content, [(monic squarefree factor, multiplicity), ...]) with
    pairwise coprime factors whose product times content reassembles the
    input.  Yun's algorithm gives the multiplicity grouping; each group is
    further split by its rational roots so that e.g. s and s+1 appear as
    separate factors even at equal multiplicity.
    """
    if a.is_zero:
        raise ValueError("squarefree factorization of the zero polynomial")
    lead = a.leading
    content = lead
    a = a.monic()
    factors: list[tuple[Polynomial, int]] = []
    # Yun over a field of characteristic zero
    da = a.derivative()
    g = poly_gcd(a, da)
    c = a // g
    d = da // g - c.derivative()
    k = 1
    while c.degree > 0:
        f = poly_gcd(c, d)
        if f.degree > 0:
            factors.append((f, k))
        c = c // f
        d = d // f - c.derivative()
        k += 1
    over_q = all(isinstance(c, (int, Fraction)) for f, _ in factors for c in f.coeffs)
    refined: list[tuple[Polynomial, int]] = []
    for f, mult in factors:
        if over_q:
            for root in rational_roots(f):
                lin = Polynomial([-root, Fraction(1)])
                f = f // lin
                refined.append((lin, mult))
        if f.degree > 0:
            refined.append((f, mult))
    refined.sort(key=lambda fm: (fm[0].degree, str(format_poly(fm[0]))))
    return content, refined


def _divisors(n: int):
    n = abs(n)
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k != n // k:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def rational_roots(a: Polynomial) -> list[Fraction]:
    """All rational roots with multiplicity, by divisor enumeration."""
    if a.is_zero:
        raise ValueError("roots of the zero polynomial")
    coeffs = [Fraction(c) for c in a.coeffs]
    ints, _ = _fraction_to_int_poly(coeffs)
    roots: list[Fraction] = []
    # strip zero roots
    nzero = 0
    while ints and ints[0] == 0:
        ints = ints[1:]
        nzero += 1
    roots.extend([Fraction(0)] * nzero)
    if len(ints) <= 1:
        return roots
    lead, trail = ints[-1], ints[0]
    candidates = set()
    for p in _divisors(trail):
        for q in _divisors(lead):
            candidates.add(Fraction(p, q))
            candidates.add(Fraction(-p, q))
    poly = Polynomial([Fraction(c) for c in ints])
    found = []
    for cand in sorted(candidates):
        while poly.evaluate(cand) == 0:
            found.append(cand)
            poly = poly // Polynomial([-cand, Fraction(1)])
    return roots + sorted(found)


def _factor_degrees_mod_p(ints, p: int):
    """Multiset of irreducible factor degrees of a squarefree poly mod p.

    Returns None if p is unusable (divides the leading coefficient or the
    reduction is not squarefree).
    """
    if ints[-1] % p == 0:
        return None
    a = [c % p for c in ints]

    def trim(v):
        while v and v[-1] == 0:
            v.pop()
        return v

    def mul(u, v):
        out = [0] * (len(u) + len(v) - 1)
        for i, ui in enumerate(u):
            if ui:
                for j, vj in enumerate(v):
                    out[i + j] = (out[i + j] + ui * vj) % p
        return trim(out)

    def mod(u, m):
        u = list(u)
        while len(u) >= len(m):
            c = u[-1]
            if c:
                inv = pow(m[-1], p - 2, p)
                q = c * inv % p
                k = len(u) - len(m)
                for j, mc in enumerate(m):
                    u[k + j] = (u[k + j] - q * mc) % p
            trim(u)
            if not u:
                break
        return u

    def gcd(u, v):
        u, v = list(u), list(v)
        while v:
            u, v = v, mod(u, v)
        if u:
            inv = pow(u[-1], p - 2, p)
            u = [c * inv % p for c in u]
        return u

    def powmod_x(e, m):
        # x^e mod m
        result = [1]
        base = mod([0, 1], m)
        while e:
            if e & 1:
                result = mod(mul(result, base), m)
            base = mod(mul(base, base), m)
            e >>= 1
        return result

    f = [c % p for c in ints]
    df = trim([(k * c) % p for k, c in enumerate(f)][1:])
    if not df or len(gcd(f, df)) != 1:
        return None  # not squarefree mod p
    degrees = []
    work = list(f)
    d = 1
    while len(work) - 1 >= 2 * d:
        h = powmod_x(p ** d, work)
        h = list(h)
        # h - x
        while len(h) < 2:
            h.append(0)
        h[1] = (h[1] - 1) % p
        h = trim(h)
        g = gcd(work, h) if h else list(work)
        if len(g) > 1:
            deg = len(g) - 1
            degrees.extend([d] * (deg // d))
            work = trim([c for c in _poly_div_exact_mod(work, g, p)])
        d += 1
    if len(work) > 1:
        degrees.append(len(work) - 1)
    return sorted(degrees)


def _poly_div_exact_mod(u, v, p):
    out = [0] * (len(u) - len(v) + 1)
    u = list(u)
    inv = pow(v[-1], p - 2, p)
    for k in range(len(out) - 1, -1, -1):
        c = u[k + len(v) - 1] * inv % p
        out[k] = c
        for j, vc in enumerate(v):
            u[k + j] = (u[k + j] - c * vc) % p
    return out


def _quartic_splits_into_quadratics(a: Polynomial) -> bool:
    """True iff the monic rational quartic a factors into two rational quadratics."""
    a = a.monic()
    # depress: x -> x - e/4 removes the cubic term
    shiftv = -Fraction(a[3]) / 4
    base = Polynomial([shiftv, Fraction(1)])
    total = Polynomial([Fraction(0)])
    for k, c in enumerate(a.coeffs):
        total = total + Polynomial([Fraction(c)]) * base ** k
    p, q, r = total[2], total[1], total[0]
    if q == 0:
        # biquadratic: x^4+px^2+r = (x^2+b)(x^2+c) or (x^2+ax+b)(x^2-ax+b)
        from .rationals import is_square_fraction
        if is_square_fraction(p * p - 4 * r):
            return True
        # (x^2+ax+b)(x^2-ax+b): b^2=r, 2b-a^2=p
        if is_square_fraction(r):
            from .rationals import sqrt_fraction
            for b in (sqrt_fraction(r), -sqrt_fraction(r)):
                if is_square_fraction(2 * b - p):
                    return True
        return False
    resolvent = Polynomial([-q * q, p * p - 4 * r, 2 * p, Fraction(1)])
    from .rationals import is_square_fraction
    for root in rational_roots(resolvent):
        if root > 0 and is_square_fraction(root):
            return True
    return False


def is_irreducible_small(a: Polynomial) -> bool:
    """Exact irreducibility over Q for squarefree polynomials of degree <= 8.

    Rational-root extraction settles degrees up to 3 and catches all linear
    factors; degree 4 is settled by the resolvent-cubic quadratic-split test;
    degrees 5..8 use factor degree patterns modulo several primes, falling
    back to a full factorization only when the patterns stay inconclusive.
    """
    deg = a.degree
    if deg > 8:
        raise ValueError("irreducibility certification supports degree <= 8 only")
    if deg <= 0:
        return False
    if deg == 1:
        return True
    if rational_roots(a):
        return False
    if deg <= 3:
        return True
    if deg == 4:
        return not _quartic_splits_into_quadratics(a)
    ints = _int_primitive(_fraction_to_int_poly([Fraction(c) for c in a.coeffs])[0])
    compatible = None
    primes = [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43]
    for p in primes:
        pattern = _factor_degrees_mod_p(ints, p)
        if pattern is None:
            continue
        if len(pattern) == 1:
            return True  # irreducible mod p
        sums = set()
        n = len(pattern)
        for mask in range(1, 1 << n):
            ssum = sum(pattern[i] for i in range(n) if mask >> i & 1)
            if 0 < ssum < deg:
                sums.add(ssum)
        compatible = sums if compatible is None else compatible & sums
        if compatible is not None and not compatible:
            return True
    # patterns inconclusive (e.g. x^4+1-style polynomials); use sympy's exact
    # factorization as the arbiter
    import sympy

    xsym = sympy.Symbol("x")
    expr = sum(sympy.Rational(str(Fraction(c))) * xsym ** k for k, c in enumerate(a.coeffs))
    factors = sympy.factor_list(expr)[1]
    nontrivial = [f for f, m in factors if sympy.degree(f, xsym) > 0 for _ in range(m)]
    return len(nontrivial) == 1 and sympy.degree(nontrivial[0], xsym) == deg


# -- textual form ----------------------------------------------------------


def format_scalar(c) -> str:
    if isinstance(c, GaussianRational):
        return f"({c})"
    return str(c)


def format_poly(a: Polynomial, var: str = "s") -> str:
    """Render as "c_k*s^k + ... + c_0"."""
    if a.is_zero:
        return "0"
    parts = []
    for k in range(a.degree, -1, -1):
        c = a[k]
        if c == 0:
            continue
        if k == 0:
            term = format_scalar(c)
        else:
            xpow = var if k == 1 else f"{var}^{k}"
            if c == 1:
                term = xpow
            elif c == -1:
                term = f"-{xpow}"
            else:
                term = f"{format_scalar(c)}*{xpow}"
        if not parts:
            parts.append(term)
        elif term.startswith("-"):
            parts.append(f"- {term[1:]}")
        else:
            parts.append(f"+ {term}")
    return " ".join(parts)


def parse_poly(text: str, var: str = "s") -> Polynomial:
    """Parse the textual polynomial form with Fraction coefficients.

    Accepts e.g. "s^4 + 2*s^3 - 26*s^2 + 54*s - 27" and "-1/2*s + 3";
    whitespace-insensitive.
    """
    import re

    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial text")
    token = re.compile(
        r"(?P<sign>[+-])?"
        r"(?:(?P<num>\d+(?:/\d+)?)(?:\*?(?P<var1>%s)(?:\^(?P<exp1>\d+))?)?"
        r"|(?P<var2>%s)(?:\^(?P<exp2>\d+))?)" % (re.escape(var), re.escape(var))
    )
    pos = 0
    coeffs: dict[int, Fraction] = {}
    while pos < len(s):
        m = token.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at ...{s[pos:pos + 12]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("num") is not None:
            coeff = Fraction(m.group("num"))
            if m.group("var1"):
                exp = int(m.group("exp1")) if m.group("exp1") else 1
            else:
                exp = 0
        else:
            coeff = Fraction(1)
            exp = int(m.group("exp2")) if m.group("exp2") else 1
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + sign * coeff
        pos = m.end()
    out = [Fraction(0)] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return Polynomial(out)


# -- rational functions ---------------------------------------------------


class RationalFunction:
    """Reduced fraction of polynomials with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None, reduce: bool = True):
        if den is None:
            den = Polynomial([1])
        if not isinstance(num, Polynomial):
            num = _as_poly(num)
        if not isinstance(den, Polynomial):
            den = _as_poly(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            self.num = Polynomial()
            self.den = Polynomial([1])
            return
        if reduce:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
        lead = den.leading
        if lead != 1:
            num = num.map_coeffs(lambda c: c / lead)
            den = den.monic()
        self.num = num
        self.den = den

    # -- constructors ----------------------------------------------------

    @staticmethod
    def x(coeff=1) -> "RationalFunction":
        return RationalFunction(Polynomial([0, coeff]))

    @staticmethod
    def const(c) -> "RationalFunction":
        return RationalFunction(Polynomial([c]))

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other, reduce=False)
        if isinstance(other, int):
            return RationalFunction(Polynomial([Fraction(other)]), reduce=False)
        if isinstance(other, (Fraction, GaussianRational)):
            return RationalFunction(Polynomial([other]), reduce=False)
        return None

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # cross-reduce first: keeps intermediate degrees low
        g1 = poly_gcd(self.num, o.den)
        g2 = poly_gcd(o.num, self.den)
        n1 = self.num // g1 if g1.degree > 0 else self.num
        d2 = o.den // g1 if g1.degree > 0 else o.den
        n2 = o.num // g2 if g2.degree > 0 else o.num
        d1 = self.den // g2 if g2.degree > 0 else self.den
        return RationalFunction(n1 * n2, d1 * d2, reduce=False)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return self * RationalFunction(o.den, o.num, reduce=False)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            if self.is_zero:
                raise ZeroDivisionError
            return RationalFunction(self.den ** (-k), self.num ** (-k))
        return RationalFunction(self.num ** k, self.den ** k, reduce=False)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero

    def evaluate(self, point):
        dv = self.den.evaluate(point)
        if dv == 0:
            raise ZeroDivisionError("evaluation at a pole")
        return self.num.evaluate(point) / dv

    def map_coeffs(self, fn) -> "RationalFunction":
        return RationalFunction(self.num.map_coeffs(fn), self.den.map_coeffs(fn))

    def __repr__(self):
        if self.is_polynomial:
            return f"RationalFunction({format_poly(self.num)!r})"
        return f"RationalFunction({format_poly(self.num)!r} / {format_poly(self.den)!r})"

    def format(self, var: str = "s") -> str:
        if self.is_polynomial:
            return format_poly(self.num, var)
        return f"({format_poly(self.num, var)}) / ({format_poly(self.den, var)})"
