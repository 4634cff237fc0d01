"""Exact arithmetic over the two supported coefficient domains.

Everything in this package computes over an effective principal ideal
domain, chosen per document: arbitrary-precision integers ("Z") or
univariate polynomials over a prime field ("GF(p)[x]").  Elements are
immutable wrappers around a raw payload (a Python int, or a tuple of
coefficients in ascending degree with no trailing zeros), and mixing
payloads from different ring instances is a hard error, never a coercion.

Association classes are pinned to canonical representatives throughout:
non-negative integers and monic polynomials.  ``normalize``, ``gcd_bezout``
and ``factorize`` always return canonical values, which is what makes the
classification layers deterministic.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import Iterator

from .errors import ParseError, PreconditionError, ValidationError

__all__ = [
    "Ring",
    "IntegerRing",
    "GFPolynomialRing",
    "ZZ",
    "gf_polynomial_ring",
    "ring_from_text",
    "RingElement",
    "CanonicalAssociate",
    "BezoutCertificate",
    "PrimeFactorization",
    "normalize",
    "gcd_bezout",
    "gcd",
    "gcd_all",
    "lcm",
    "exact_div",
    "divides",
    "factorize",
    "is_prime",
    "kaplansky_solve",
    "same_ring",
]


class Ring:
    """A supported coefficient domain.

    Subclasses implement arithmetic on raw payloads; user code works with
    :class:`RingElement` values obtained from ``element``, ``from_int`` or
    ``parse``.
    """

    name = "?"

    # -- payload primitives, provided by subclasses --------------------------

    def _add(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _divmod(self, a, b):
        raise NotImplementedError

    def _is_unit(self, a) -> bool:
        raise NotImplementedError

    def _unit_inv(self, a):
        raise NotImplementedError

    def _canonical_unit(self, a):
        """Unit u such that u*a is the canonical associate of a (u=1 for 0)."""
        raise NotImplementedError

    def _sort_key(self, a):
        """Key for the canonical total order used for pivoting and sorting."""
        raise NotImplementedError

    def _from_int(self, k: int):
        raise NotImplementedError

    def _format(self, a) -> str:
        raise NotImplementedError

    def _parse_payload(self, text: str):
        raise NotImplementedError

    def _payloads_by_size(self) -> Iterator:
        """All payloads, 0 first, in weakly increasing canonical order."""
        raise NotImplementedError

    def _trial_divisors(self) -> Iterator:
        """Candidate prime payloads in increasing canonical order."""
        raise NotImplementedError

    def _trial_exceeds(self, d, rest) -> bool:
        """True when no prime divisor of size >= d can remain in rest.

        Must compare sizes only (magnitude, degree), never the lexicographic
        tie break, or trial division would stop too early.
        """
        raise NotImplementedError

    # -- shared machinery -----------------------------------------------------

    @property
    def zero(self) -> "RingElement":
        return RingElement(self, self._from_int(0))

    @property
    def one(self) -> "RingElement":
        return RingElement(self, self._from_int(1))

    def element(self, payload) -> "RingElement":
        return RingElement(self, payload)

    def from_int(self, k: int) -> "RingElement":
        return RingElement(self, self._from_int(k))

    def parse(self, text: str) -> "RingElement":
        return RingElement(self, self._parse_payload(text))

    def _sub(self, a, b):
        return self._add(a, self._neg(b))

    def _is_zero(self, a) -> bool:
        return a == self._from_int(0)

    def _xgcd(self, a, b):
        """Extended Euclid on payloads: returns (g, x, y) with x*a + y*b = g,
        g canonical.

        When a divides b the certificate is the trivial one (u, 0): callers
        build elimination blocks from (x, y), and a mixing coefficient y != 0
        in the divisible case would turn a plain row/column elimination into
        a combination that re-fills already-cleared entries and can cycle.
        """
        zero, one = self._from_int(0), self._from_int(1)
        if a != zero and self._divmod(b, a)[1] == zero:
            u = self._canonical_unit(a)
            return self._mul(u, a), u, zero
        r0, r1 = a, b
        x0, x1 = one, zero
        y0, y1 = zero, one
        while r1 != zero:
            q, r = self._divmod(r0, r1)
            r0, r1 = r1, r
            x0, x1 = x1, self._sub(x0, self._mul(q, x1))
            y0, y1 = y1, self._sub(y0, self._mul(q, y1))
        u = self._canonical_unit(r0)
        return self._mul(u, r0), self._mul(u, x0), self._mul(u, y0)

    def _gcd(self, a, b):
        zero = self._from_int(0)
        while b != zero:
            a, b = b, self._divmod(a, b)[1]
        return self._mul(self._canonical_unit(a), a)

    def __repr__(self):
        return self.name


class IntegerRing(Ring):
    """Arbitrary-precision integers; canonical associates are non-negative."""

    name = "Z"

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _divmod(self, a, b):
        return divmod(a, b)

    def _is_unit(self, a):
        return a in (1, -1)

    def _unit_inv(self, a):
        return a  # +-1 are self-inverse

    def _canonical_unit(self, a):
        return -1 if a < 0 else 1

    def _sort_key(self, a):
        return (abs(a), 0 if a >= 0 else 1)

    def _from_int(self, k):
        return k

    def _format(self, a):
        return str(a)

    def _parse_payload(self, text):
        try:
            return int(text.strip())
        except (ValueError, TypeError) as exc:
            raise ParseError(f"not an integer literal: {text!r}") from exc

    def _payloads_by_size(self):
        yield 0
        n = 1
        while True:
            yield n
            yield -n
            n += 1

    def _trial_divisors(self):
        yield 2
        d = 3
        while True:
            yield d
            d += 2

    def _trial_exceeds(self, d, rest):
        return d * d > abs(rest)

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("Z")


class GFPolynomialRing(Ring):
    """Univariate polynomials over GF(p), p a small prime.

    Payloads are tuples of coefficients in ascending degree, reduced mod p,
    with no trailing zeros; the zero polynomial is the empty tuple.
    Canonical associates are monic.
    """

    def __init__(self, p: int):
        if p < 2 or not _int_is_prime(p):
            raise ValidationError(f"modulus must be prime, got {p}")
        self.p = p
        self.name = f"GF({p})[x]"

    @staticmethod
    def _strip(coeffs) -> tuple:
        i = len(coeffs)
        while i > 0 and coeffs[i - 1] == 0:
            i -= 1
        return tuple(coeffs[:i])

    def _add(self, a, b):
        p = self.p
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
        return self._strip(out)

    def _neg(self, a):
        p = self.p
        return tuple((-c) % p for c in a)

    def _mul(self, a, b):
        if not a or not b:
            return ()
        p = self.p
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] = (out[i + j] + ca * cb) % p
        return self._strip(out)

    def _divmod(self, a, b):
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        if len(a) < len(b):
            return (), a
        rem = list(a)
        quo = [0] * (len(a) - len(b) + 1)
        inv_lead = pow(b[-1], -1, p)
        for shift in range(len(a) - len(b), -1, -1):
            c = (rem[shift + len(b) - 1] * inv_lead) % p
            if c:
                quo[shift] = c
                for k, bc in enumerate(b):
                    rem[shift + k] = (rem[shift + k] - c * bc) % p
        return self._strip(quo), self._strip(rem)

    def _is_unit(self, a):
        return len(a) == 1

    def _unit_inv(self, a):
        return (pow(a[0], -1, self.p),)

    def _canonical_unit(self, a):
        if not a or a[-1] == 1:
            return (1,)
        return (pow(a[-1], -1, self.p),)

    def _sort_key(self, a):
        return (len(a), a)

    def _from_int(self, k):
        return self._strip([k % self.p])

    def _format(self, a):
        if not a:
            return "0"
        terms = []
        for e in range(len(a) - 1, -1, -1):
            c = a[e]
            if not c:
                continue
            if e == 0:
                terms.append(str(c))
            elif e == 1:
                terms.append("x" if c == 1 else f"{c}*x")
            else:
                terms.append(f"x^{e}" if c == 1 else f"{c}*x^{e}")
        return "+".join(terms)

    _TERM = re.compile(
        r"^([+-]?)(\d+)?(?:(\*)?x(?:\^(\d+))?)?$"
    )

    def _parse_payload(self, text):
        s = text.replace(" ", "")
        if not s:
            raise ParseError("empty polynomial literal")
        # split into signed terms; keep the sign attached to each term
        chunks = re.findall(r"[+-]?[^+-]+", s)
        if "".join(chunks) != s:
            raise ParseError(f"bad polynomial literal: {text!r}")
        coeffs: dict[int, int] = {}
        for chunk in chunks:
            m = self._TERM.match(chunk)
            if not m or (m.group(2) is None and "x" not in chunk):
                raise ParseError(f"bad polynomial term: {chunk!r}")
            sign = -1 if m.group(1) == "-" else 1
            coef = int(m.group(2)) if m.group(2) is not None else 1
            if "x" in chunk:
                exp = int(m.group(4)) if m.group(4) is not None else 1
            else:
                exp = 0
            coeffs[exp] = coeffs.get(exp, 0) + sign * coef
        out = [0] * (max(coeffs) + 1 if coeffs else 0)
        for e, c in coeffs.items():
            out[e] = c % self.p
        return self._strip(out)

    def _payloads_by_size(self):
        from itertools import product

        yield ()
        deg = 0
        while True:
            for low in product(range(self.p), repeat=deg):
                for lead in range(1, self.p):
                    yield low + (lead,)
            deg += 1

    def _trial_divisors(self):
        # monic polynomials in increasing (degree, lex) order; trial division
        # in this order only ever succeeds on irreducibles
        from itertools import product

        deg = 1
        while True:
            for low in product(range(self.p), repeat=deg):
                yield low + (1,)
            deg += 1

    def _trial_exceeds(self, d, rest):
        return 2 * (len(d) - 1) > len(rest) - 1

    def __eq__(self, other):
        return isinstance(other, GFPolynomialRing) and other.p == self.p

    def __hash__(self):
        return hash(("GF[x]", self.p))


ZZ = IntegerRing()


@functools.lru_cache(maxsize=None)
def gf_polynomial_ring(p: int) -> GFPolynomialRing:
    return GFPolynomialRing(p)


_RING_TEXT = re.compile(r"^GF\((\d+)\)\[x\]$")


def ring_from_text(text: str) -> Ring:
    """Parse a ring declaration: "Z" or "GF(p)[x]"."""
    s = text.strip()
    if s == "Z":
        return ZZ
    m = _RING_TEXT.match(s)
    if m:
        try:
            return gf_polynomial_ring(int(m.group(1)))
        except ValidationError as exc:
            raise ParseError(str(exc)) from exc
    raise ParseError(f"unknown ring declaration: {text!r}")


def _int_is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class RingElement:
    """An immutable element of one specific ring instance.

    Arithmetic operators accept another element of the same ring or a plain
    int (coerced through the ring); anything else is a validation error.
    """

    __slots__ = ("ring", "payload")

    def __init__(self, ring: Ring, payload):
        self.ring = ring
        self.payload = payload

    def _coerce(self, other) -> "RingElement":
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise ValidationError(
                    f"mixed ring instances: {self.ring.name} vs {other.ring.name}"
                )
            return other
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring._add(self.payload, o.payload))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring._sub(self.payload, o.payload))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring._sub(o.payload, self.payload))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring._mul(self.payload, o.payload))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, self.ring._neg(self.payload))

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise PreconditionError("exponent must be a non-negative integer")
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.ring == other.ring and self.payload == other.payload
        if isinstance(other, int):
            return self.payload == self.ring._from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.payload))

    def __bool__(self):
        return not self.ring._is_zero(self.payload)

    def __lt__(self, other):
        o = self._coerce(other)
        return self.sort_key() < o.sort_key()

    def sort_key(self):
        return self.ring._sort_key(self.payload)

    @property
    def is_zero(self) -> bool:
        return self.ring._is_zero(self.payload)

    @property
    def is_unit(self) -> bool:
        return self.ring._is_unit(self.payload)

    def text(self) -> str:
        return self.ring._format(self.payload)

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"<{self.ring.name}: {self.text()}>"


def same_ring(*elems: RingElement) -> Ring:
    """Return the common ring of the given elements, or raise."""
    if not elems:
        raise PreconditionError("no elements given")
    ring = elems[0].ring
    for e in elems[1:]:
        if e.ring != ring:
            raise ValidationError(
                f"mixed ring instances: {ring.name} vs {e.ring.name}"
            )
    return ring


@dataclass(frozen=True)
class CanonicalAssociate:
    """canonical = unit * input; unit is invertible, canonical is pinned."""

    canonical: RingElement
    unit: RingElement


@dataclass(frozen=True)
class BezoutCertificate:
    """g = x*a + y*b with g the canonical gcd."""

    g: RingElement
    x: RingElement
    y: RingElement

    def holds_for(self, a: RingElement, b: RingElement) -> bool:
        return self.x * a + self.y * b == self.g


@dataclass(frozen=True)
class PrimeFactorization:
    """unit * prod(p**e) = value; primes canonical, strictly increasing."""

    unit: RingElement
    factors: tuple[tuple[RingElement, int], ...]

    def value(self) -> RingElement:
        acc = self.unit
        for p, e in self.factors:
            acc = acc * p**e
        return acc


def normalize(a: RingElement) -> CanonicalAssociate:
    """Canonical associate with its certifying unit; normalize(0) = (0, 1)."""
    u = a.ring._canonical_unit(a.payload)
    return CanonicalAssociate(RingElement(a.ring, a.ring._mul(u, a.payload)),
                              RingElement(a.ring, u))


def gcd_bezout(a: RingElement, b: RingElement) -> BezoutCertificate:
    """Extended Euclid; g is canonical, gcd(0, 0) = 0."""
    ring = same_ring(a, b)
    g, x, y = ring._xgcd(a.payload, b.payload)
    return BezoutCertificate(RingElement(ring, g),
                             RingElement(ring, x),
                             RingElement(ring, y))


def gcd(a: RingElement, b: RingElement) -> RingElement:
    """Canonical gcd without the certificate (faster inner loops)."""
    ring = same_ring(a, b)
    return RingElement(ring, ring._gcd(a.payload, b.payload))


def gcd_all(elems, ring: Ring | None = None) -> RingElement:
    """Canonical gcd of an iterable; gcd of nothing is 0 (needs ring)."""
    elems = list(elems)
    if not elems:
        if ring is None:
            raise PreconditionError("gcd of an empty sequence needs a ring")
        return ring.zero
    ring = same_ring(*elems)
    acc = elems[0].payload
    for e in elems[1:]:
        acc = ring._gcd(acc, e.payload)
    acc = ring._mul(ring._canonical_unit(acc), acc)
    return RingElement(ring, acc)


def lcm(a: RingElement, b: RingElement) -> RingElement:
    """Canonical lcm; lcm with 0 is 0."""
    ring = same_ring(a, b)
    if a.is_zero or b.is_zero:
        return ring.zero
    g = gcd(a, b)
    return normalize(exact_div(a * b, g)).canonical


def divides(b: RingElement, a: RingElement) -> bool:
    """True when b | a; 0 divides only 0."""
    ring = same_ring(a, b)
    if b.is_zero:
        return a.is_zero
    return ring._is_zero(ring._divmod(a.payload, b.payload)[1])


def exact_div(a: RingElement, b: RingElement) -> RingElement:
    """a / b when b | a; raises otherwise."""
    ring = same_ring(a, b)
    if b.is_zero:
        raise PreconditionError("exact division by zero")
    q, r = ring._divmod(a.payload, b.payload)
    if not ring._is_zero(r):
        raise PreconditionError(
            f"{b.text()} does not divide {a.text()} in {ring.name}"
        )
    return RingElement(ring, q)


def factorize(a: RingElement) -> PrimeFactorization:
    """Unit times prime powers, primes canonical and strictly increasing.

    Deterministic trial division: divisor candidates are enumerated in the
    canonical total order, so every divisor found is automatically prime and
    the factor list comes out sorted.
    """
    if a.is_zero:
        raise PreconditionError("cannot factor 0")
    ring = a.ring
    coa = normalize(a)
    rest = coa.canonical.payload
    unit = RingElement(ring, ring._unit_inv(coa.unit.payload))
    factors: list[tuple[RingElement, int]] = []
    if not ring._is_unit(rest):
        for d in ring._trial_divisors():
            if ring._trial_exceeds(d, rest):
                break
            e = 0
            while True:
                q, r = ring._divmod(rest, d)
                if not ring._is_zero(r):
                    break
                rest = q
                e += 1
            if e:
                factors.append((RingElement(ring, d), e))
            if ring._is_unit(rest):
                break
        if not ring._is_unit(rest):
            # leftover cofactor is prime (no divisor up to its square root)
            factors.append((RingElement(ring, rest), 1))
        else:
            unit = unit * RingElement(ring, rest)
    return PrimeFactorization(unit=unit, factors=tuple(factors))


def is_prime(a: RingElement) -> bool:
    """Prime (irreducible) in its ring instance."""
    if a.is_zero or a.is_unit:
        return False
    f = factorize(a)
    return len(f.factors) == 1 and f.factors[0][1] == 1


def kaplansky_solve(a: RingElement, b: RingElement,
                    c: RingElement) -> tuple[RingElement, RingElement]:
    """Find (p, q) with gcd(p*a, p*b + q*c) a unit, given gcd(a, b, c) a unit.

    Tries q = 0 first; otherwise enumerates (p, q) over a growing box of
    small elements.  Termination is guaranteed in the supported domains.
    """
    ring = same_ring(a, b, c)
    g3 = gcd(gcd(a, b), c)
    if not g3.is_unit:
        raise PreconditionError(
            f"gcd({a.text()}, {b.text()}, {c.text()}) = {g3.text()} is not a unit"
        )
    if gcd(a, b).is_unit:
        return ring.one, ring.zero
    elems: list[RingElement] = []
    gen = ring._payloads_by_size()

    def elem(i: int) -> RingElement:
        while len(elems) <= i:
            elems.append(RingElement(ring, next(gen)))
        return elems[i]

    s = 0
    while True:
        for i in range(s + 1):
            p, q = elem(i), elem(s - i)
            if gcd(p * a, p * b + q * c).is_unit:
                return p, q
        s += 1
