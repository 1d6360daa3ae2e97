"""Exact scalar arithmetic for every coefficient domain the library uses.

Four kinds of field are available: the rationals Q, prime fields F_p,
rational function fields F_p(t), and quadratic extensions F[sqrt(D)] for a
non-square D of the base field F.  Elements are immutable and always kept
in canonical form (reduced fractions, least residues, coprime numerator
and monic denominator, coordinate pairs over the base), so structural
equality coincides with mathematical equality and elements are hashable.

Square roots are decided constructively: integer square roots for Q,
residue enumeration for F_p, squarefree decomposition for F_p(t), and a
norm argument (characteristic not 2) or Frobenius-part decomposition
(characteristic 2) for quadratic extensions.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Optional


class DomainError(ValueError):
    """The requested value does not exist in the given field."""


class ParseError(ValueError):
    """A scalar or field literal is malformed."""


class DivisionByZero(ZeroDivisionError):
    """Division or inversion of zero."""


class DescriptorMismatch(ValueError):
    """Operands belong to different fields."""


def _is_prime(p: int) -> bool:
    # Trial division; moduli stay tiny at the scales this library targets.
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# Polynomials over F_p (dense coefficient tuples, ascending degree).
# ---------------------------------------------------------------------------


class Poly:
    """Polynomial over F_p with coefficients in [0, p); no trailing zeros.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs, normalize: bool = True):
        if normalize:
            coeffs = [c % p for c in coeffs]
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()
            coeffs = tuple(coeffs)
        self.p = p
        self.coeffs = coeffs

    @classmethod
    def const(cls, p: int, c: int) -> Poly:
        return cls(p, (c % p,) if c % p else ())

    @classmethod
    def x(cls, p: int) -> Poly:
        return cls(p, (0, 1), normalize=False)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    @property
    def leading(self) -> int:
        if not self.coeffs:
            return 0
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __add__(self, other: Poly) -> Poly:
        p = self.p
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
        return Poly(p, out)

    def __neg__(self) -> Poly:
        p = self.p
        return Poly(p, tuple((-c) % p for c in self.coeffs), normalize=False)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        p = self.p
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(p, ())
        if len(a) == 1:
            s = a[0]
            return Poly(p, tuple(s * c % p for c in b), normalize=False)
        if len(b) == 1:
            s = b[0]
            return Poly(p, tuple(s * c % p for c in a), normalize=False)
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] = (out[i + j] + ca * cb) % p
        return Poly(p, out)

    def scale(self, s: int) -> Poly:
        p = self.p
        s %= p
        if s == 0:
            return Poly(p, ())
        return Poly(p, tuple(s * c % p for c in self.coeffs), normalize=False)

    def __divmod__(self, other: Poly):
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(p, ()), self
        quot = [0] * (dq + 1)
        inv_lead = pow(other.leading, -1, p)
        oc = other.coeffs
        for k in range(dq, -1, -1):
            c = rem[k + len(oc) - 1] * inv_lead % p
            if c:
                quot[k] = c
                for i, co in enumerate(oc):
                    rem[k + i] = (rem[k + i] - c * co) % p
        return Poly(p, quot), Poly(p, rem)

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if self.is_zero() or self.leading == 1:
            return self
        return self.scale(pow(self.leading, -1, self.p))

    def derivative(self) -> Poly:
        p = self.p
        return Poly(p, [i * c % p for i, c in enumerate(self.coeffs)][1:])

    def pow(self, n: int) -> Poly:
        result = Poly.const(self.p, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def evaluate(self, x: "FieldElement") -> "FieldElement":
        """Horner evaluation at an element of an arbitrary field."""
        field = x.field
        acc = field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + field.from_int(c)
        return acc

    def __repr__(self) -> str:
        return f"Poly(p={self.p}, coeffs={self.coeffs})"


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor by the Euclidean algorithm."""
    if f.is_zero() and g.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def _poly_pth_root(f: Poly) -> Optional[Poly]:
    """Exact p-th root of f in F_p[t], or None.

    In characteristic p a polynomial is a p-th power exactly when every
    exponent is a multiple of p; coefficients are fixed by Frobenius.
    """
    p = f.p
    if f.is_zero():
        return f
    root = [0] * (f.degree // p + 1)
    for i, c in enumerate(f.coeffs):
        if i % p:
            if c:
                return None
        else:
            root[i // p] = c
    return Poly(p, root)


def poly_squarefree(f: Poly) -> list[tuple[Poly, int]]:
    """Squarefree decomposition f = c * prod g_i^i over F_p.

    Factors are monic, squarefree and pairwise coprime; the unit c is the
    leading coefficient of f.  The f' = 0 branch extracts an exact p-th
    root and recurses with multiplicities scaled by p.
    """
    if f.is_zero():
        raise DomainError("squarefree decomposition of zero")
    f = f.monic()
    if f.degree < 1:
        return []
    out: dict[int, Poly] = {}

    def merge(g: Poly, m: int) -> None:
        if g.degree >= 1:
            out[m] = out[m] * g if m in out else g

    d = f.derivative()
    if d.is_zero():
        root = _poly_pth_root(f)
        for g, m in poly_squarefree(root):
            merge(g, m * f.p)
    else:
        c = poly_gcd(f, d)
        w = f // c
        i = 1
        while not w.is_one():
            y = poly_gcd(w, c)
            merge(w // y, i)
            w = y
            c = c // y
            i += 1
        if not c.is_one():
            root = _poly_pth_root(c)
            if root is None:
                raise AssertionError("residual gcd factor must be a p-th power")
            for g, m in poly_squarefree(root):
                merge(g, m * f.p)
    return [(g, m) for m, g in sorted(out.items())]


# ---------------------------------------------------------------------------
# Field descriptors.
# ---------------------------------------------------------------------------

KIND_RATIONALS = "rationals"
KIND_PRIME = "prime"
KIND_FUNFIELD = "function"
KIND_QUADEXT = "quadratic"

_RATIONALS_CACHE: Optional[FieldDescriptor] = None
_PRIME_CACHE: dict[int, "FieldDescriptor"] = {}
_FUNFIELD_CACHE: dict[tuple[int, str], "FieldDescriptor"] = {}


class FieldDescriptor:
    """Tag describing one of the supported exact fields.

    Instances of the three base kinds are interned, so identity comparison
    is the common fast path; quadratic extensions compare structurally.
    """

    __slots__ = ("kind", "p", "var", "base", "radicand", "_zero", "_one", "_residues")

    def __init__(self, kind, p=None, var=None, base=None, radicand=None):
        self.kind = kind
        self.p = p
        self.var = var
        self.base = base
        self.radicand = radicand
        self._zero = None
        self._one = None
        self._residues = None

    def characteristic(self) -> int:
        if self.kind == KIND_RATIONALS:
            return 0
        if self.kind == KIND_QUADEXT:
            return self.base.characteristic()
        return self.p

    def zero(self) -> FieldElement:
        if self._zero is None:
            self._zero = self.from_int(0)
        return self._zero

    def one(self) -> FieldElement:
        if self._one is None:
            self._one = self.from_int(1)
        return self._one

    def from_int(self, n: int) -> FieldElement:
        if self.kind == KIND_RATIONALS:
            return FieldElement(self, Fraction(n))
        if self.kind == KIND_PRIME:
            if self._residues is None:
                self._residues = [
                    FieldElement(self, r) for r in range(self.p)
                ]
            return self._residues[n % self.p]
        if self.kind == KIND_FUNFIELD:
            return FieldElement(
                self, (Poly.const(self.p, n), Poly.const(self.p, 1))
            )
        return FieldElement(self, (self.base.from_int(n), self.base.zero()))

    def from_fraction(self, num: int, den: int) -> FieldElement:
        if den == 0:
            raise DomainError("zero denominator")
        if self.kind == KIND_RATIONALS:
            return FieldElement(self, Fraction(num, den))
        d = self.from_int(den)
        if d.is_zero():
            raise DomainError(f"denominator {den} vanishes in {render_field(self)}")
        return self.from_int(num) / d

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, FieldDescriptor):
            return NotImplemented
        if self.kind != other.kind:
            return False
        if self.kind == KIND_QUADEXT:
            return self.base == other.base and self.radicand == other.radicand
        return self.p == other.p and self.var == other.var

    def __hash__(self) -> int:
        if self.kind == KIND_QUADEXT:
            return hash((self.kind, self.base, self.radicand))
        return hash((self.kind, self.p, self.var))

    def __repr__(self) -> str:
        return f"FieldDescriptor({render_field(self)!r})"


def rationals() -> FieldDescriptor:
    global _RATIONALS_CACHE
    if _RATIONALS_CACHE is None:
        _RATIONALS_CACHE = FieldDescriptor(KIND_RATIONALS)
    return _RATIONALS_CACHE


def prime_field(p: int) -> FieldDescriptor:
    if p not in _PRIME_CACHE:
        if not _is_prime(p):
            raise DomainError(f"{p} is not prime")
        _PRIME_CACHE[p] = FieldDescriptor(KIND_PRIME, p=p)
    return _PRIME_CACHE[p]


def function_field(p: int, var: str = "t") -> FieldDescriptor:
    key = (p, var)
    if key not in _FUNFIELD_CACHE:
        if not _is_prime(p):
            raise DomainError(f"{p} is not prime")
        if not var.isidentifier():
            raise DomainError(f"bad variable name {var!r}")
        _FUNFIELD_CACHE[key] = FieldDescriptor(KIND_FUNFIELD, p=p, var=var)
    return _FUNFIELD_CACHE[key]


def quadratic_extension(base: FieldDescriptor, radicand: FieldElement) -> FieldDescriptor:
    """Field obtained by adjoining a square root of a non-square radicand."""
    if radicand.field != base:
        raise DescriptorMismatch("radicand must live in the base field")
    if radicand.is_zero():
        raise DomainError("radicand must be nonzero")
    if is_square(radicand) is not None:
        raise DomainError("radicand is already a square in the base field")
    if base.characteristic() == 2 and base.kind != KIND_FUNFIELD:
        # Characteristic-2 extensions are only reachable over F_2(t): every
        # element of F_2 is a square, and towers are out of scope.
        raise DomainError("characteristic-2 extension supported over F_p(t) only")
    if base.kind == KIND_FUNFIELD and base.var == "r":
        raise DomainError("variable name 'r' collides with the root symbol")
    return FieldDescriptor(KIND_QUADEXT, base=base, radicand=radicand)


# ---------------------------------------------------------------------------
# Field elements.
# ---------------------------------------------------------------------------


class FieldElement:
    """Immutable scalar in one of the supported fields.

    The payload is a Fraction (Q), an int in [0, p) (F_p), a coprime
    (numerator, monic denominator) Poly pair (F_p(t)), or a coordinate
    pair (u, v) over the base meaning u + v*sqrt(D).
    """

    __slots__ = ("field", "payload")

    def __init__(self, field: FieldDescriptor, payload):
        self.field = field
        self.payload = payload

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        kind = self.field.kind
        if kind == KIND_RATIONALS:
            return self.payload == 0
        if kind == KIND_PRIME:
            return self.payload == 0
        if kind == KIND_FUNFIELD:
            return self.payload[0].is_zero()
        return self.payload[0].is_zero() and self.payload[1].is_zero()

    def is_one(self) -> bool:
        return self == self.field.one()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _same(self, other: FieldElement) -> None:
        if not isinstance(other, FieldElement):
            raise DescriptorMismatch(f"expected a field element, got {other!r}")
        if self.field is not other.field and self.field != other.field:
            raise DescriptorMismatch("cannot combine elements of different fields")

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: FieldElement) -> FieldElement:
        self._same(other)
        field = self.field
        kind = field.kind
        if kind == KIND_RATIONALS:
            return FieldElement(field, self.payload + other.payload)
        if kind == KIND_PRIME:
            return FieldElement(field, (self.payload + other.payload) % field.p)
        if kind == KIND_FUNFIELD:
            n1, d1 = self.payload
            n2, d2 = other.payload
            if d1 == d2:
                return _make_ratio(field, n1 + n2, d1)
            return _make_ratio(field, n1 * d2 + n2 * d1, d1 * d2)
        u1, v1 = self.payload
        u2, v2 = other.payload
        return FieldElement(field, (u1 + u2, v1 + v2))

    def __neg__(self) -> FieldElement:
        field = self.field
        kind = field.kind
        if kind == KIND_RATIONALS:
            return FieldElement(field, -self.payload)
        if kind == KIND_PRIME:
            return FieldElement(field, (-self.payload) % field.p)
        if kind == KIND_FUNFIELD:
            n, d = self.payload
            return FieldElement(field, (-n, d))
        u, v = self.payload
        return FieldElement(field, (-u, -v))

    def __sub__(self, other: FieldElement) -> FieldElement:
        return self + (-other)

    def __mul__(self, other: FieldElement) -> FieldElement:
        self._same(other)
        field = self.field
        kind = field.kind
        if kind == KIND_RATIONALS:
            return FieldElement(field, self.payload * other.payload)
        if kind == KIND_PRIME:
            return FieldElement(field, self.payload * other.payload % field.p)
        if kind == KIND_FUNFIELD:
            n1, d1 = self.payload
            n2, d2 = other.payload
            if n1.is_zero() or n2.is_zero():
                return field.zero()
            # Cross-reduce before multiplying to keep degrees small.
            if not d2.is_one() and not n1.is_zero():
                g = poly_gcd(n1, d2)
                if not g.is_one():
                    n1, d2 = n1 // g, d2 // g
            if not d1.is_one() and not n2.is_zero():
                g = poly_gcd(n2, d1)
                if not g.is_one():
                    n2, d1 = n2 // g, d1 // g
            return _make_ratio(field, n1 * n2, d1 * d2, reduced=True)
        u1, v1 = self.payload
        u2, v2 = other.payload
        d = field.radicand
        return FieldElement(field, (u1 * u2 + d * (v1 * v2), u1 * v2 + v1 * u2))

    def __truediv__(self, other: FieldElement) -> FieldElement:
        return self * inv(other)

    def __pow__(self, n: int) -> FieldElement:
        if n < 0:
            return inv(self) ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison ---------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.payload == other.payload

    def __hash__(self) -> int:
        return hash((self.field, self.payload))

    def __repr__(self) -> str:
        return f"<{render_scalar(self)} in {render_field(self.field)}>"

    def __str__(self) -> str:
        return render_scalar(self)


def _make_ratio(field: FieldDescriptor, num: Poly, den: Poly, reduced: bool = False) -> FieldElement:
    """Canonical F_p(t) element: coprime parts, monic denominator."""
    if den.is_zero():
        raise DivisionByZero("zero denominator in function field")
    if num.is_zero():
        return FieldElement(field, (num, Poly.const(field.p, 1)))
    if not reduced and not den.is_one():
        g = poly_gcd(num, den)
        if not g.is_one():
            num, den = num // g, den // g
    lead = den.leading
    if lead != 1:
        s = pow(lead, -1, field.p)
        num, den = num.scale(s), den.scale(s)
    return FieldElement(field, (num, den))


def inv(x: FieldElement) -> FieldElement:
    """Multiplicative inverse; raises DivisionByZero on zero input."""
    if x.is_zero():
        raise DivisionByZero("inverse of zero")
    field = x.field
    kind = field.kind
    if kind == KIND_RATIONALS:
        return FieldElement(field, 1 / x.payload)
    if kind == KIND_PRIME:
        return FieldElement(field, pow(x.payload, -1, field.p))
    if kind == KIND_FUNFIELD:
        n, d = x.payload
        return _make_ratio(field, d, n, reduced=True)
    # Inversion by the norm u^2 - D v^2, nonzero because D is a non-square.
    u, v = x.payload
    d = field.radicand
    norm = u * u - d * (v * v)
    n_inv = inv(norm)
    return FieldElement(field, (u * n_inv, -(v * n_inv)))


# ---------------------------------------------------------------------------
# Square roots.
# ---------------------------------------------------------------------------


def _rational_sqrt(x: Fraction) -> Optional[Fraction]:
    if x < 0:
        return None
    num, den = x.numerator, x.denominator
    rn = math.isqrt(num)
    rd = math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def _prime_sqrt(x: int, p: int) -> Optional[int]:
    # Least-residue root by enumeration; p is small by design.
    for r in range((p // 2) + 1):
        if r * r % p == x:
            return r
    return None


def _funfield_sqrt(x: FieldElement) -> Optional[FieldElement]:
    field = x.field
    p = field.p
    num, den = x.payload
    if num.is_zero():
        return field.zero()
    unit = num.leading
    unit_root = _prime_sqrt(unit, p)
    if unit_root is None:
        return None
    root_num = Poly.const(p, unit_root)
    for g, m in poly_squarefree(num):
        if m % 2:
            return None
        root_num = root_num * g.pow(m // 2)
    root_den = Poly.const(p, 1)
    if not den.is_one():
        for g, m in poly_squarefree(den):
            if m % 2:
                return None
            root_den = root_den * g.pow(m // 2)
    return _make_ratio(field, root_num, root_den, reduced=True)


def _frobenius_split(x: FieldElement) -> tuple[FieldElement, FieldElement]:
    """Write x in F_2(t) as x0^2 + t*x1^2 and return (x0, x1)."""
    field = x.field
    p = field.p
    num, den = x.payload
    prod = num * den
    even = [0] * (prod.degree // 2 + 1) if not prod.is_zero() else []
    odd = [0] * (prod.degree // 2 + 1) if not prod.is_zero() else []
    for i, c in enumerate(prod.coeffs):
        if i % 2 == 0:
            even[i // 2] = c
        else:
            odd[i // 2] = c
    x0 = _make_ratio(field, Poly(p, even), den)
    x1 = _make_ratio(field, Poly(p, odd), den)
    return x0, x1


def _quadext_sqrt(x: FieldElement) -> Optional[FieldElement]:
    field = x.field
    base = field.base
    d = field.radicand
    u, v = x.payload
    two = base.from_int(2)
    if field.characteristic() != 2:
        if v.is_zero():
            su = is_square(u)
            if su is not None:
                return FieldElement(field, (su, base.zero()))
            sw = is_square(u / d)
            if sw is not None:
                return FieldElement(field, (base.zero(), sw))
            return None
        m = is_square(u * u - d * (v * v))
        if m is None:
            return None
        for cand in ((u + m) / two, (u - m) / two):
            s = is_square(cand)
            if s is not None and not s.is_zero():
                w = v / (two * s)
                return FieldElement(field, (s, w))
        return None
    # Characteristic 2: squares are exactly {s^2 + D w^2 : s, w in base},
    # so any component along sqrt(D) rules a square root out.
    if not v.is_zero():
        return None
    su = is_square(u)
    if su is not None:
        return FieldElement(field, (su, base.zero()))
    # base is F_2(t) here (construction guarantees it): split u and D over
    # the subfield of squares and solve coordinatewise.
    u0, u1 = _frobenius_split(u)
    d0, d1 = _frobenius_split(d)
    if d1.is_zero():
        return None
    w = u1 / d1
    s = u0 + d0 * w
    return FieldElement(field, (s, w))


def is_square(x: FieldElement) -> Optional[FieldElement]:
    """A deterministic square root of x in its own field, or None.

    Root choice: nonnegative over Q, least residue in F_p, and over
    F_p(t) the root whose numerator has the least-residue square root of
    the unit part as leading coefficient.
    """
    kind = x.field.kind
    if kind == KIND_RATIONALS:
        r = _rational_sqrt(x.payload)
        return None if r is None else FieldElement(x.field, r)
    if kind == KIND_PRIME:
        r = _prime_sqrt(x.payload, x.field.p)
        return None if r is None else x.field.from_int(r)
    if kind == KIND_FUNFIELD:
        return _funfield_sqrt(x)
    return _quadext_sqrt(x)


def pth_root(x: FieldElement) -> Optional[FieldElement]:
    """Exact p-th root in characteristic p, or None when there is none.

    Frobenius is bijective on F_p and injective on F_p(t); the function
    detects imperfection, e.g. the variable t has no p-th root.
    """
    field = x.field
    kind = field.kind
    if kind == KIND_PRIME:
        return x
    if kind == KIND_FUNFIELD:
        num, den = x.payload
        rn = _poly_pth_root(num)
        rd = _poly_pth_root(den)
        if rn is None or rd is None:
            return None
        return _make_ratio(field, rn, rd)
    raise DomainError("p-th roots are defined for prime and function fields")


def lift_to_extension(x: FieldElement, ext: FieldDescriptor) -> FieldElement:
    """Image of x under the inclusion of its field into a quadratic extension."""
    if ext.kind != KIND_QUADEXT or ext.base != x.field:
        raise DescriptorMismatch("target is not a quadratic extension of the source")
    return FieldElement(ext, (x, x.field.zero()))


def substitute(x: FieldElement, image: FieldElement) -> FieldElement:
    """Image of a rational function under the map sending the variable to
    `image`, an element of any field of the same characteristic."""
    if x.field.kind != KIND_FUNFIELD:
        raise DomainError("substitution applies to rational functions")
    num, den = x.payload
    den_value = den.evaluate(image)
    if den_value.is_zero():
        raise DivisionByZero("denominator vanishes at the substituted value")
    return num.evaluate(image) / den_value


# ---------------------------------------------------------------------------
# Parsing and rendering.
# ---------------------------------------------------------------------------

_INT_RE = re.compile(r"^[+-]?\d+$")
_FRACTION_RE = re.compile(r"^([+-]?\d+)/(\d+)$")


def _split_top_level(text: str, seps: str) -> list[str]:
    """Split on separators at parenthesis depth zero, keeping signs."""
    parts = []
    depth = 0
    current = ""
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {text!r}")
        if depth == 0 and ch in seps and i > 0 and text[i - 1] not in "+-*/^(":
            parts.append(current)
            current = ch
        else:
            current += ch
    if depth != 0:
        raise ParseError(f"unbalanced parentheses in {text!r}")
    parts.append(current)
    return parts


def _strip_outer_parens(text: str) -> str:
    while text.startswith("(") and text.endswith(")"):
        depth = 0
        for i, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0 and i != len(text) - 1:
                    return text
        text = text[1:-1]
    return text


def _parse_poly(text: str, p: int, var: str) -> Poly:
    text = text.replace(" ", "")
    if not text:
        raise ParseError("empty polynomial")
    term_re = re.compile(
        r"^([+-]?)(\d+)?(?:\*?" + re.escape(var) + r"(?:\^(\d+))?)?$"
    )
    coeffs: dict[int, int] = {}
    for part in _split_top_level(text, "+-"):
        if part in ("+", "-") or not part:
            raise ParseError(f"malformed polynomial term in {text!r}")
        m = term_re.match(part)
        if not m or (m.group(2) is None and var not in part):
            raise ParseError(f"cannot parse polynomial term {part!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = int(m.group(2)) if m.group(2) is not None else 1
        if var in part:
            exp = int(m.group(3)) if m.group(3) is not None else 1
        else:
            exp = 0
        coeffs[exp] = coeffs.get(exp, 0) + sign * coef
    out = [0] * (max(coeffs) + 1)
    for e, c in coeffs.items():
        out[e] = c % p
    return Poly(p, out)


def _parse_funfield(text: str, field: FieldDescriptor) -> FieldElement:
    text = text.replace(" ", "")
    parts = _split_top_level(text, "/")
    if len(parts) == 1:
        num = _parse_poly(_strip_outer_parens(parts[0]), field.p, field.var)
        return _make_ratio(field, num, Poly.const(field.p, 1))
    if len(parts) == 2:
        num_text, den_text = parts[0], parts[1].lstrip("/")
        num = _parse_poly(_strip_outer_parens(num_text), field.p, field.var)
        den = _parse_poly(_strip_outer_parens(den_text), field.p, field.var)
        if den.is_zero():
            raise DomainError(f"zero denominator in {text!r}")
        return _make_ratio(field, num, den)
    raise ParseError(f"too many '/' in {text!r}")


def _parse_quadext(text: str, field: FieldDescriptor) -> FieldElement:
    base = field.base
    u = base.zero()
    v = base.zero()
    for part in _split_top_level(text.replace(" ", ""), "+-"):
        if not part:
            continue
        sign = 1
        if part[0] == "+":
            part = part[1:]
        elif part[0] == "-":
            sign = -1
            part = part[1:]
        if part == "r":
            term_v = base.one()
            is_v = True
        elif part.endswith("*r"):
            term_v = parse_scalar(_strip_outer_parens(part[:-2]), base)
            is_v = True
        else:
            term_v = parse_scalar(_strip_outer_parens(part), base)
            is_v = False
        if sign < 0:
            term_v = -term_v
        if is_v:
            v = v + term_v
        else:
            u = u + term_v
    return FieldElement(field, (u, v))


def parse_scalar(literal: str, field: FieldDescriptor) -> FieldElement:
    """Parse a scalar literal into a canonical element of the field.

    Grammar: integers or fractions for Q and F_p, polynomial ratios in the
    field variable for F_p(t) (e.g. "(t^2+1)/(t+3)"), and "u+v*r" with r
    standing for the adjoined square root over quadratic extensions.
    """
    literal = literal.strip()
    if not literal:
        raise ParseError("empty scalar literal")
    kind = field.kind
    if kind in (KIND_RATIONALS, KIND_PRIME):
        if _INT_RE.match(literal):
            return field.from_int(int(literal))
        m = _FRACTION_RE.match(literal)
        if m:
            return field.from_fraction(int(m.group(1)), int(m.group(2)))
        raise ParseError(f"cannot parse {literal!r} over {render_field(field)}")
    if kind == KIND_FUNFIELD:
        try:
            return _parse_funfield(literal, field)
        except ParseError:
            raise
        except DomainError:
            raise
        except Exception as exc:  # malformed input of any shape
            raise ParseError(f"cannot parse {literal!r}: {exc}") from exc
    return _parse_quadext(literal, field)


def _poly_str(poly: Poly, var: str) -> str:
    if poly.is_zero():
        return "0"
    terms = []
    for e in range(poly.degree, -1, -1):
        c = poly.coeffs[e]
        if not c:
            continue
        if e == 0:
            terms.append(str(c))
        elif e == 1:
            terms.append(f"{c}*{var}" if c != 1 else var)
        else:
            terms.append(f"{c}*{var}^{e}" if c != 1 else f"{var}^{e}")
    return "+".join(terms)


def render_scalar(x: FieldElement) -> str:
    """Canonical literal for x; parse_scalar(render_scalar(x)) == x."""
    field = x.field
    kind = field.kind
    if kind == KIND_RATIONALS:
        return str(x.payload)
    if kind == KIND_PRIME:
        return str(x.payload)
    if kind == KIND_FUNFIELD:
        num, den = x.payload
        if den.is_one():
            return _poly_str(num, field.var)
        return f"({_poly_str(num, field.var)})/({_poly_str(den, field.var)})"
    u, v = x.payload
    nested = field.base.kind == KIND_QUADEXT

    def wrap(text: str) -> str:
        if nested or any(ch in text[1:] for ch in "+-"):
            return f"({text})"
        return text

    if v.is_zero():
        return wrap(render_scalar(u)) if nested else render_scalar(u)
    v_text = render_scalar(v)
    if v_text.startswith("-") and not nested:
        v_term = f"-{wrap(v_text[1:])}*r"
    else:
        v_term = f"+{wrap(v_text)}*r"
    if u.is_zero():
        return v_term[1:] if v_term.startswith("+") else v_term
    return wrap(render_scalar(u)) + v_term


_FIELD_PRIME_RE = re.compile(r"^F(\d+)$")
_FIELD_FUN_RE = re.compile(r"^F(\d+)\((\w+)\)$")


def parse_field(literal: str) -> FieldDescriptor:
    """Parse a field literal: "Q", "F3", "F2(t)" or "<base>[sqrt <D>]"."""
    literal = literal.strip()
    if literal.endswith("]"):
        start = literal.rfind("[sqrt ")
        if start < 0:
            raise ParseError(f"cannot parse field literal {literal!r}")
        base = parse_field(literal[:start])
        rad = parse_scalar(literal[start + len("[sqrt "):-1], base)
        return quadratic_extension(base, rad)
    if literal == "Q":
        return rationals()
    m = _FIELD_PRIME_RE.match(literal)
    if m:
        try:
            return prime_field(int(m.group(1)))
        except DomainError as exc:
            raise ParseError(str(exc)) from exc
    m = _FIELD_FUN_RE.match(literal)
    if m:
        try:
            return function_field(int(m.group(1)), m.group(2))
        except DomainError as exc:
            raise ParseError(str(exc)) from exc
    raise ParseError(f"cannot parse field literal {literal!r}")


def render_field(field: FieldDescriptor) -> str:
    kind = field.kind
    if kind == KIND_RATIONALS:
        return "Q"
    if kind == KIND_PRIME:
        return f"F{field.p}"
    if kind == KIND_FUNFIELD:
        return f"F{field.p}({field.var})"
    return f"{render_field(field.base)}[sqrt {render_scalar(field.radicand)}]"


# ---------------------------------------------------------------------------
# Seeded random elements (used by randomized verification and tests).
# ---------------------------------------------------------------------------


def random_element(field: FieldDescriptor, rng, nonzero: bool = False) -> FieldElement:
    """Small random element; entries stay low-degree to keep runs fast."""
    while True:
        kind = field.kind
        if kind == KIND_RATIONALS:
            x = FieldElement(field, Fraction(rng.randint(-6, 6), rng.randint(1, 4)))
        elif kind == KIND_PRIME:
            x = field.from_int(rng.randrange(field.p))
        elif kind == KIND_FUNFIELD:
            p = field.p
            num = Poly(p, [rng.randrange(p) for _ in range(rng.randint(1, 3))])
            den = Poly(p, [rng.randrange(p) for _ in range(rng.randint(1, 2))])
            if den.is_zero():
                den = Poly.const(p, 1)
            x = _make_ratio(field, num, den)
        else:
            u = random_element(field.base, rng)
            v = random_element(field.base, rng)
            x = FieldElement(field, (u, v))
        if not nonzero or not x.is_zero():
            return x
