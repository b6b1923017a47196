"""Exact commutative-ring arithmetic.

Three rings are supported: arbitrary-precision integers, prime fields Z/p,
and sparse multivariate polynomials over Z.  A :class:`Ring` instance is a
descriptor exposing arithmetic on *raw* values (Python ints, or
:class:`Polynomial`); :class:`RingElement` wraps a raw value together with
its ring and provides operator syntax with ring-mismatch checking.  All
values are immutable; all operations are pure.
"""
from __future__ import annotations

import re
from typing import Iterable, Sequence

from .errors import (
    BadRingError,
    ExponentOverflowError,
    InexactDivisionError,
    ParseError,
    RingMismatchError,
)

# ---------------------------------------------------------------------------
# sparse multivariate polynomials

_EXP_BITS = 16
_EXP_LIMIT = 1 << _EXP_BITS


def _encode(nvars: int, exps: Sequence[int]) -> int:
    """Pack an exponent vector into a single integer key.

    Layout, most significant first: total degree, then one 16-bit field per
    variable in variable order.  Keys of monomial products are sums of keys,
    and masking off the degree field leaves plain lexicographic order.
    """
    if len(exps) != nvars:
        raise ValueError("exponent vector has wrong arity")
    key = 0
    total = 0
    for e in exps:
        if e < 0:
            raise ValueError("negative exponent")
        if e >= _EXP_LIMIT:
            raise ExponentOverflowError(f"exponent {e} exceeds {_EXP_LIMIT - 1}")
        key = (key << _EXP_BITS) | e
        total += e
    if total >= _EXP_LIMIT:
        raise ExponentOverflowError(f"total degree {total} exceeds {_EXP_LIMIT - 1}")
    return key | (total << (_EXP_BITS * nvars))


def _decode(nvars: int, key: int) -> tuple:
    exps = []
    for i in range(nvars):
        shift = _EXP_BITS * (nvars - 1 - i)
        exps.append((key >> shift) & (_EXP_LIMIT - 1))
    return tuple(exps)


class Polynomial:
    """Sparse multivariate polynomial with integer coefficients.

    Terms are a map from packed exponent key to nonzero coefficient; the
    canonical form stores no zero coefficients, so structural equality is
    polynomial equality.  Variable *names* live on the owning
    :class:`PolynomialRing`; the polynomial itself only knows its arity.
    """

    __slots__ = ("nvars", "terms", "_maxdeg")

    def __init__(self, nvars: int, terms: dict):
        # terms is trusted: packed keys, no zero coefficients
        self.nvars = nvars
        self.terms = terms
        shift = _EXP_BITS * nvars
        self._maxdeg = max((k >> shift for k in terms), default=0)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: int) -> "Polynomial":
        return cls(nvars, {0: c} if c else {})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Polynomial":
        if not 0 <= index < nvars:
            raise ValueError("variable index out of range")
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {_encode(nvars, exps): 1})

    @classmethod
    def from_terms(cls, nvars: int, items: Iterable[tuple]) -> "Polynomial":
        """Build from (exponent-tuple, coefficient) pairs, collecting duplicates."""
        terms: dict = {}
        for exps, c in items:
            if not c:
                continue
            k = _encode(nvars, exps)
            v = terms.get(k, 0) + c
            if v:
                terms[k] = v
            else:
                del terms[k]
        return cls(nvars, terms)

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Total degree; 0 for the zero polynomial."""
        return self._maxdeg

    def items_exponents(self):
        """Iterate (exponent-tuple, coefficient) in descending lex order."""
        lexmask = (1 << (_EXP_BITS * self.nvars)) - 1
        for k in sorted(self.terms, key=lambda k: k & lexmask, reverse=True):
            yield _decode(self.nvars, k), self.terms[k]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"Polynomial(nvars={self.nvars}, nterms={len(self.terms)})"

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.nvars != other.nvars:
            raise RingMismatchError("polynomials over different variable sets")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return Polynomial(self.nvars, out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) - c
            if v:
                out[k] = v
            else:
                del out[k]
        return Polynomial(self.nvars, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.nvars, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        if self._maxdeg + other._maxdeg >= _EXP_LIMIT:
            raise ExponentOverflowError("product degree exceeds packed limit")
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for k2, c2 in b.items():
            for k1, c1 in a.items():
                k = k1 + k2
                v = get(k)
                if v is None:
                    out[k] = c1 * c2
                else:
                    v += c1 * c2
                    if v:
                        out[k] = v
                    else:
                        del out[k]
        return Polynomial(self.nvars, out)

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative power")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c: int) -> "Polynomial":
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial(self.nvars, {k: c * v for k, v in self.terms.items()})

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        """Exact quotient self / divisor; raises if a remainder is left.

        Repeated lexicographic leading-term division: over an integral
        domain this terminates with zero remainder exactly when the
        division is exact.
        """
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        nvars = self.nvars
        lexmask = (1 << (_EXP_BITS * nvars)) - 1
        kq = max(divisor.terms, key=lambda k: k & lexmask)
        cq = divisor.terms[kq]
        eq = _decode(nvars, kq)
        rem = dict(self.terms)
        quot: dict = {}
        while rem:
            kr = max(rem, key=lambda k: k & lexmask)
            cr = rem[kr]
            er = _decode(nvars, kr)
            if cr % cq or any(a < b for a, b in zip(er, eq)):
                raise InexactDivisionError("multivariate division leaves a remainder")
            c = cr // cq
            dk = kr - kq
            quot[dk] = c
            for k2, c2 in divisor.terms.items():
                k = dk + k2
                v = rem.get(k, 0) - c * c2
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return Polynomial(nvars, quot)


# ---------------------------------------------------------------------------
# primality (for prime-field moduli)

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Miller-Rabin with the fixed witness set {2,...,37}.

    Deterministic for all n < 3.3e24, which covers every modulus this
    package is meant to handle.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# ring descriptors

DEFAULT_PRIME = 1_000_003

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


class Ring:
    """Base descriptor.  Subclasses implement arithmetic on raw values."""

    name = "?"
    has_exact_div = False

    def element(self, v) -> "RingElement":
        return RingElement(self, self.coerce(v))

    @property
    def zero_elem(self) -> "RingElement":
        return RingElement(self, self.zero)

    @property
    def one_elem(self) -> "RingElement":
        return RingElement(self, self.one)

    # subclasses: zero, one, add, sub, mul, neg, exact_div, is_zero,
    # from_int, coerce, parse, format, random_entry, describe, to_doc


class IntegerRing(Ring):
    """Arbitrary-precision integers."""

    name = "int"
    has_exact_div = True
    zero = 0
    one = 1

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def exact_div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("integer division by zero")
        q, r = divmod(a, b)
        if r:
            raise InexactDivisionError(f"{b} does not divide {a}")
        return q

    def is_zero(self, a) -> bool:
        return a == 0

    def from_int(self, k: int):
        return int(k)

    def coerce(self, v):
        if isinstance(v, RingElement):
            if v.ring != self:
                raise RingMismatchError("element of another ring")
            return v.value
        if isinstance(v, int):
            return v
        raise BadRingError(f"cannot coerce {type(v).__name__} into Z")

    def parse(self, text: str):
        try:
            return int(text)
        except ValueError:
            raise ParseError(f"not an integer: {text!r}") from None

    def format(self, a) -> str:
        return str(a)

    def random_entry(self, rng):
        # sampling convention for randomized suites
        return rng.randint(-9, 9)

    def describe(self) -> str:
        return "int"

    def to_doc(self) -> dict:
        return {"ring": "int"}

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("int")

    def __repr__(self):
        return "IntegerRing()"


class PrimeField(Ring):
    """Z/p for a prime p; raw values are ints in [0, p)."""

    name = "mod_p"
    has_exact_div = True

    def __init__(self, p: int = DEFAULT_PRIME):
        if p < 2 or not is_prime(p):
            raise BadRingError(f"modulus {p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def exact_div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError("division by zero in Z/p")
        return a * pow(b, self.p - 2, self.p) % self.p

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def from_int(self, k: int):
        return k % self.p

    def coerce(self, v):
        if isinstance(v, RingElement):
            if v.ring != self:
                raise RingMismatchError("element of another ring")
            return v.value
        if isinstance(v, int):
            return v % self.p
        raise BadRingError(f"cannot coerce {type(v).__name__} into Z/{self.p}")

    def parse(self, text: str):
        try:
            return int(text) % self.p
        except ValueError:
            raise ParseError(f"not an integer: {text!r}") from None

    def format(self, a) -> str:
        return str(a % self.p)

    def random_entry(self, rng):
        return rng.randrange(self.p)

    def describe(self) -> str:
        return f"mod_p({self.p})"

    def to_doc(self) -> dict:
        return {"ring": "mod_p", "modulus": str(self.p)}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("mod_p", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class PolynomialRing(Ring):
    """Z[variables]; raw values are :class:`Polynomial`."""

    name = "poly"
    has_exact_div = True

    def __init__(self, variables: Sequence[str]):
        names = tuple(variables)
        if not names:
            raise BadRingError("polynomial ring needs at least one variable")
        seen = set()
        for v in names:
            if not _NAME_RE.match(v):
                raise BadRingError(f"bad variable name: {v!r}")
            if v in seen:
                raise BadRingError(f"duplicate variable name: {v!r}")
            seen.add(v)
        self.variables = names
        self.nvars = len(names)
        self._index = {v: i for i, v in enumerate(names)}
        self.zero = Polynomial.zero(self.nvars)
        self.one = Polynomial.constant(self.nvars, 1)

    def var(self, name_or_index) -> "RingElement":
        if isinstance(name_or_index, str):
            if name_or_index not in self._index:
                raise ParseError(f"unknown variable: {name_or_index!r}")
            name_or_index = self._index[name_or_index]
        return RingElement(self, Polynomial.variable(self.nvars, name_or_index))

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def exact_div(self, a, b):
        return a.exact_div(b)

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def from_int(self, k: int):
        return Polynomial.constant(self.nvars, k)

    def coerce(self, v):
        if isinstance(v, RingElement):
            if v.ring != self:
                raise RingMismatchError("element of another ring")
            return v.value
        if isinstance(v, int):
            return self.from_int(v)
        if isinstance(v, Polynomial):
            if v.nvars != self.nvars:
                raise RingMismatchError("polynomial has wrong arity for this ring")
            return v
        if isinstance(v, str):
            return self.parse(v)
        raise BadRingError(f"cannot coerce {type(v).__name__} into {self.describe()}")

    def random_entry(self, rng):
        # degree <= 1 with small coefficients; matches the randomized suites
        items = [((0,) * self.nvars, rng.randint(-9, 9))]
        for i in range(self.nvars):
            exps = [0] * self.nvars
            exps[i] = 1
            items.append((tuple(exps), rng.randint(-9, 9)))
        return Polynomial.from_terms(self.nvars, items)

    def describe(self) -> str:
        return "poly(" + ",".join(self.variables) + ")"

    def to_doc(self) -> dict:
        return {"ring": "poly", "variables": list(self.variables)}

    def __eq__(self, other):
        return isinstance(other, PolynomialRing) and self.variables == other.variables

    def __hash__(self):
        return hash(("poly", self.variables))

    def __repr__(self):
        return f"PolynomialRing({list(self.variables)!r})"

    # -- canonical text -----------------------------------------------------

    def format(self, p: Polynomial) -> str:
        """Canonical text: terms in descending lex order, e.g. "x0^2 - 2*x0*x1"."""
        if p.is_zero():
            return "0"
        chunks = []
        for exps, c in p.items_exponents():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.variables, exps)
                if e
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            chunks.append(("-" if c < 0 else "+", body))
        sign, body = chunks[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in chunks[1:]:
            out += f" {sign} {body}"
        return out

    _TOKEN_RE = re.compile(r"(\d+)|([A-Za-z][A-Za-z0-9_]*)|([-+*^])|(\S)")

    def parse(self, text: str) -> Polynomial:
        """Parse the canonical grammar; inverse of :meth:`format`."""
        tokens = []
        for m in self._TOKEN_RE.finditer(text):
            if m.group(4):
                raise ParseError(f"unexpected character {m.group(4)!r}")
            tokens.append(m.group(0))
        if not tokens:
            raise ParseError("empty polynomial text")
        pos = 0

        def peek():
            return tokens[pos] if pos < len(tokens) else None

        def take():
            nonlocal pos
            t = peek()
            pos += 1
            return t

        def parse_factor():
            t = take()
            if t is None:
                raise ParseError("unexpected end of polynomial text")
            if t.isdigit():
                return int(t), {}
            if _NAME_RE.match(t):
                if t not in self._index:
                    raise ParseError(f"unknown variable: {t!r}")
                e = 1
                if peek() == "^":
                    take()
                    exp = take()
                    if exp is None or not exp.isdigit():
                        raise ParseError("expected integer exponent after '^'")
                    e = int(exp)
                return 1, {self._index[t]: e}
            raise ParseError(f"unexpected token {t!r}")

        def parse_term():
            coeff, powers = parse_factor()
            while peek() == "*":
                take()
                c2, p2 = parse_factor()
                coeff *= c2
                for i, e in p2.items():
                    powers[i] = powers.get(i, 0) + e
            return coeff, powers

        items = []
        sign = 1
        if peek() in ("+", "-"):
            sign = -1 if take() == "-" else 1
        while True:
            coeff, powers = parse_term()
            exps = [0] * self.nvars
            for i, e in powers.items():
                exps[i] = e
            items.append((tuple(exps), sign * coeff))
            t = peek()
            if t is None:
                break
            if t not in ("+", "-"):
                raise ParseError(f"unexpected token {t!r}")
            sign = -1 if take() == "-" else 1
        return Polynomial.from_terms(self.nvars, items)


ZZ = IntegerRing()


def ring_from_doc(doc: dict) -> Ring:
    """Rebuild a ring from the shared file-format fields."""
    kind = doc.get("ring")
    if kind == "int":
        return ZZ
    if kind == "mod_p":
        if "modulus" not in doc:
            raise ParseError("mod_p ring requires a modulus")
        try:
            p = int(doc["modulus"])
        except (TypeError, ValueError):
            raise ParseError(f"bad modulus: {doc.get('modulus')!r}") from None
        return PrimeField(p)
    if kind == "poly":
        variables = doc.get("variables")
        if not variables:
            raise ParseError("poly ring requires a variable list")
        return PolynomialRing(variables)
    raise ParseError(f"unknown ring kind: {kind!r}")


# ---------------------------------------------------------------------------
# wrapped elements


class RingElement:
    """A raw value paired with its ring; immutable, operator-friendly.

    Mixing elements of different rings raises :class:`RingMismatchError`;
    plain ints are coerced for convenience.
    """

    __slots__ = ("ring", "value")

    def __init__(self, ring: Ring, value):
        self.ring = ring
        self.value = value

    def _raw(self, other):
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"cannot mix {self.ring.describe()} and {other.ring.describe()}"
                )
            return other.value
        if isinstance(other, int):
            return self.ring.from_int(other)
        return NotImplemented

    def __add__(self, other):
        v = self._raw(other)
        if v is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring.add(self.value, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._raw(other)
        if v is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring.sub(self.value, v))

    def __rsub__(self, other):
        v = self._raw(other)
        if v is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring.sub(v, self.value))

    def __mul__(self, other):
        v = self._raw(other)
        if v is NotImplemented:
            return NotImplemented
        return RingElement(self.ring, self.ring.mul(self.value, v))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, self.ring.neg(self.value))

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative integer")
        ring = self.ring
        result = ring.one
        base = self.value
        while e:
            if e & 1:
                result = ring.mul(result, base)
            e >>= 1
            if e:
                base = ring.mul(base, base)
        return RingElement(ring, result)

    def exact_div(self, other) -> "RingElement":
        v = self._raw(other)
        if v is NotImplemented:
            raise RingMismatchError("cannot divide by a value outside the ring")
        return RingElement(self.ring, self.ring.exact_div(self.value, v))

    def is_zero(self) -> bool:
        return self.ring.is_zero(self.value)

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, int):
            return self.value == self.ring.from_int(other)
        return NotImplemented

    __hash__ = None

    def __str__(self):
        return self.ring.format(self.value)

    def __repr__(self):
        return f"<{self.ring.describe()}: {self}>"


def poly_eval(p: RingElement, point: Sequence[RingElement]) -> RingElement:
    """Evaluate a polynomial element at a point over any supported ring.

    The point entries must all share one ring; the result lives there.
    """
    if not isinstance(p.ring, PolynomialRing):
        raise BadRingError("poly_eval expects a polynomial element")
    if len(point) != p.ring.nvars:
        raise RingMismatchError(
            f"point has {len(point)} coordinates, expected {p.ring.nvars}"
        )
    if not point:
        raise RingMismatchError("empty point")
    target = point[0].ring
    for x in point[1:]:
        if x.ring != target:
            raise RingMismatchError("point coordinates from different rings")
    acc = target.zero
    for exps, c in p.value.items_exponents():
        term = target.from_int(c)
        for x, e in zip(point, exps):
            if e:
                term = target.mul(term, (x ** e).value)
        acc = target.add(acc, term)
    return RingElement(target, acc)
