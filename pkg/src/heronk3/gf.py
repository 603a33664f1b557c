"""Arithmetic in F_p and F_{p^n} as polynomial quotient rings.

Elements carry a coefficient tuple of length n over F_p, reduced modulo a
deterministic irreducible modulus, so every run of every operation is
byte-reproducible.  The quadratic character is a one-time square table
lookup, sized for full-field enumeration up to q = 11^3 and beyond.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def _trim(v):
    while v and v[-1] == 0:
        v.pop()
    return v


def _poly_mod(u, m, p):
    u = list(u)
    inv = pow(m[-1], p - 2, p)
    while len(u) >= len(m):
        c = u[-1]
        if c:
            q = c * inv % p
            k = len(u) - len(m)
            for j, mc in enumerate(m):
                u[k + j] = (u[k + j] - q * mc) % p
        _trim(u)
        if not u:
            break
    return u


def _poly_mulmod(a, b, m, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_mod(_trim(out), m, p)


def _poly_gcd_modp(a, b, p):
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        inv = pow(b[-1], p - 2, p)
        while len(a) >= len(b) and a:
            c = a[-1] * inv % p
            k = len(a) - len(b)
            for j, bc in enumerate(b):
                a[k + j] = (a[k + j] - c * bc) % p
            _trim(a)
        a, b = b, a
    return a


def _powmod_x(e, m, p):
    """x^e mod m over F_p."""
    result = [1]
    base = _poly_mod([0, 1], m, p)
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, m, p)
        base = _poly_mulmod(base, base, m, p)
        e >>= 1
    return result


def _is_irreducible_modp(f, p):
    """f monic of degree n >= 2 over F_p: no roots, no factors of degree <= n/2."""
    n = len(f) - 1
    for k in range(1, n // 2 + 1):
        h = list(_powmod_x(p ** k, f, p))
        while len(h) < 2:
            h.append(0)
        h[1] = (h[1] - 1) % p
        g = _poly_gcd_modp(f, _trim(h), p)
        if len(g) - 1 > 0:
            return False
    return True


@lru_cache(maxsize=None)
def find_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree n over F_p.

    Coefficient tuples (c0, c1, ..., c_{n-1}, 1) are scanned in lexicographic
    order of (c0, ..., c_{n-1}), i.e. constant term first.
    """
    if n < 2:
        raise ValueError("find_irreducible needs n >= 2")
    for tail in itertools.product(range(p), repeat=n):
        f = list(tail) + [1]
        if f[0] == 0:
            continue  # divisible by x
        if any(sum(c * pow(a, k, p) for k, c in enumerate(f)) % p == 0 for a in range(p)):
            continue  # has a root
        if _is_irreducible_modp(f, p):
            return tuple(f)
    raise AssertionError("an irreducible polynomial of every degree exists")


class FiniteField:
    """F_{p^n}; n = 1 needs no modulus."""

    def __init__(self, p: int, n: int = 1):
        if p < 2 or any(p % k == 0 for k in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        if n < 1:
            raise ValueError("degree must be >= 1")
        self.p = p
        self.n = n
        self.q = p ** n
        self.modulus = find_irreducible(p, n) if n > 1 else None
        self._square_table: bytearray | None = None

    # -- elements -----------------------------------------------------------

    def element(self, coeffs) -> "FFElement":
        if isinstance(coeffs, int):
            coeffs = (coeffs % self.p,) + (0,) * (self.n - 1)
        else:
            coeffs = tuple(c % self.p for c in coeffs)
            if len(coeffs) != self.n:
                raise ValueError("coefficient vector has wrong length")
        return FFElement(self, coeffs)

    def zero(self) -> "FFElement":
        return self.element(0)

    def one(self) -> "FFElement":
        return self.element(1)

    def from_index(self, index: int) -> "FFElement":
        if not 0 <= index < self.q:
            raise ValueError("index out of range")
        digits = []
        for _ in range(self.n):
            digits.append(index % self.p)
            index //= self.p
        return FFElement(self, tuple(digits))

    def enumerate(self):
        """Every element exactly once, in coefficient-vector order.

        Element with coefficients (c0, ..., c_{n-1}) has index
        c0 + c1*p + ... + c_{n-1}*p^{n-1}; enumeration is by increasing index.
        """
        for index in range(self.q):
            yield self.from_index(index)

    # -- internal arithmetic on coefficient tuples ---------------------------

    def _mul(self, a, b):
        p = self.p
        if self.n == 1:
            return (a[0] * b[0] % p,)
        out = [0] * (2 * self.n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        m = self.modulus
        for k in range(2 * self.n - 2, self.n - 1, -1):
            c = out[k] % p
            if c:
                for j in range(self.n):
                    out[k - self.n + j] -= c * m[j]
            out[k] = 0
        return tuple(c % p for c in out[: self.n])

    def _inv(self, a):
        if not any(a):
            raise ZeroDivisionError("inverse of zero field element")
        p = self.p
        if self.n == 1:
            return (pow(a[0], p - 2, p),)
        out = (1,) + (0,) * (self.n - 1)
        base = a
        k = self.q - 2
        while k:
            if k & 1:
                out = self._mul(out, base)
            base = self._mul(base, base)
            k >>= 1
        return out

    # -- quadratic character ----------------------------------------------------

    def square_table(self) -> bytearray:
        """Bitmap over element indices marking the nonzero squares."""
        if self._square_table is None:
            table = bytearray(self.q)
            for e in self.enumerate():
                sq = self._mul(e.coeffs, e.coeffs)
                table[_index(self, sq)] = 1
            table[0] = 0
            self._square_table = table
        return self._square_table

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.n) == (other.p, other.n)

    def __hash__(self):
        return hash((self.p, self.n))

    def __repr__(self):
        return f"FiniteField({self.p}^{self.n})" if self.n > 1 else f"FiniteField({self.p})"


def _index(field: FiniteField, coeffs) -> int:
    idx = 0
    for c in reversed(coeffs):
        idx = idx * field.p + c
    return idx


class FFElement:
    """Element of a FiniteField; immutable coefficient tuple."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    @property
    def index(self) -> int:
        return _index(self.field, self.coeffs)

    def _coerce(self, other):
        if isinstance(other, FFElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, int):
            return self.field.element(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.field.p
        return FFElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return FFElement(self.field, tuple(-a % p for a in self.coeffs))

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
        return FFElement(self.field, self.field._mul(self.coeffs, o.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * FFElement(self.field, self.field._inv(o.coeffs))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            return (1 / self) ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def frobenius(self) -> "FFElement":
        return self ** self.field.p

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.field.p, self.field.n, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        if self.field.n == 1:
            return str(self.coeffs[0])
        return f"FF({list(self.coeffs)})"


def quadratic_character(a: FFElement) -> int:
    """0 for zero, +1 for nonzero squares, -1 for nonsquares (table lookup)."""
    if a.field.p == 2:
        raise ValueError("quadratic character needs odd characteristic")
    if not a:
        return 0
    return 1 if a.field.square_table()[a.index] else -1


def projective_line(field: FiniteField):
    """P^1(F_q) as the q affine values followed by the infinity marker None."""
    yield from field.enumerate()
    yield None
