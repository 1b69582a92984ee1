"""Exact coefficient fields: Q, Q(i), F_p and F_{p^k}.

Every element knows its field (``field_of``); rationals are plain
:class:`fractions.Fraction` values, the other fields have their own element
classes.  Python ints are accepted as operands everywhere since integer
literals live in every field.  Mixing elements of two different fields is an
error, never a silent coercion.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from math import gcd as _igcd
from typing import Iterator, Sequence

import gmpy2


class FieldMismatchError(TypeError):
    """Operands (or a value and a target field) belong to different fields."""


def is_prime(n: int) -> bool:
    return n >= 2 and bool(gmpy2.is_prime(n))


class Field:
    """Field descriptor.  Subclasses coerce values with ``field(value)``."""

    name: str = "?"
    characteristic: int = 0
    order: int | None = None  # None for infinite fields

    def __call__(self, value):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def conj(self, x):
        """Field conjugation; the identity except on Q(i)."""
        return self(x)

    def has_conjugation(self) -> bool:
        return False

    def format(self, x) -> str:
        return str(x)

    def random(self, rng: random.Random, size: int = 9):
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<field {self.name}>"


# ----------------------------------------------------------------------------
# Q


class RationalField(Field):
    name = "q"
    characteristic = 0

    def __call__(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, GaussianRational):
            if value.im:
                raise FieldMismatchError(f"{value} is not rational")
            return value.re
        raise FieldMismatchError(f"cannot coerce {value!r} into Q")

    def format(self, x: Fraction) -> str:
        return str(x)

    def random(self, rng, size=9):
        return Fraction(rng.randint(-size, size), rng.randint(1, 4))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("q")


QQ = RationalField()


# ----------------------------------------------------------------------------
# Q(i)


class GaussianRational:
    """``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @property
    def field(self) -> "GaussianField":
        return QQI

    def _other(self, other) -> "GaussianRational":
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, int):
            return GaussianRational(other, 0)
        raise FieldMismatchError(f"cannot combine Q(i) element with {other!r}")

    def __add__(self, other):
        o = self._other(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return self._other(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        o = self._other(other)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * self._other(other).inverse()

    def __rtruediv__(self, other):
        return self._other(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = GaussianRational(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash(self.re) if not self.im else hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        return QQI.format(self)


def _fmt_imag(im: Fraction) -> str:
    if im == 1:
        return "i"
    if im == -1:
        return "-i"
    return f"{im}*i"


class GaussianField(Field):
    name = "qi"
    characteristic = 0

    def __call__(self, value) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value, 0)
        raise FieldMismatchError(f"cannot coerce {value!r} into Q(i)")

    @property
    def i(self) -> GaussianRational:
        return GaussianRational(0, 1)

    def conj(self, x):
        return self(x).conjugate()

    def has_conjugation(self):
        return True

    def format(self, x: GaussianRational) -> str:
        if not x.im:
            return str(x.re)
        if not x.re:
            return _fmt_imag(x.im)
        im = _fmt_imag(abs(x.im))
        return f"({x.re}{'-' if x.im < 0 else '+'}{im})"

    def random(self, rng, size=9):
        return GaussianRational(QQ.random(rng, size), QQ.random(rng, size))

    def __eq__(self, other):
        return isinstance(other, GaussianField)

    def __hash__(self):
        return hash("qi")


QQI = GaussianField()


# ----------------------------------------------------------------------------
# F_p


class PrimeFieldElement:
    __slots__ = ("value", "field")

    def __init__(self, value: int, field: "PrimeField"):
        object.__setattr__(self, "value", value % field.p)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("PrimeFieldElement is immutable")

    @property
    def p(self) -> int:
        return self.field.p

    def _v(self, other) -> int:
        if isinstance(other, PrimeFieldElement):
            if other.field.p != self.field.p:
                raise FieldMismatchError(f"F_{self.field.p} vs F_{other.field.p}")
            return other.value
        if isinstance(other, int):
            return other
        raise FieldMismatchError(f"cannot combine F_{self.field.p} element with {other!r}")

    def __add__(self, other):
        return PrimeFieldElement(self.value + self._v(other), self.field)

    __radd__ = __add__

    def __sub__(self, other):
        return PrimeFieldElement(self.value - self._v(other), self.field)

    def __rsub__(self, other):
        return PrimeFieldElement(self._v(other) - self.value, self.field)

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.field)

    def __mul__(self, other):
        return PrimeFieldElement(self.value * self._v(other), self.field)

    __rmul__ = __mul__

    def inverse(self) -> "PrimeFieldElement":
        if not self.value:
            raise ZeroDivisionError(f"inverse of zero in F_{self.field.p}")
        return PrimeFieldElement(pow(self.value, -1, self.field.p), self.field)

    def __truediv__(self, other):
        return self * PrimeFieldElement(self._v(other), self.field).inverse()

    def __rtruediv__(self, other):
        return PrimeFieldElement(self._v(other), self.field) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return PrimeFieldElement(pow(self.value, e, self.field.p), self.field)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.value == other.value and self.field.p == other.field.p
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __repr__(self):
        return f"PrimeFieldElement({self.value}, p={self.field.p})"

    def __str__(self):
        return str(self.value)


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p >= 2**63:
            raise ValueError("prime moduli must be below 2^63")
        self.p = p
        self.characteristic = p
        self.order = p
        self.name = f"fp:{p}"

    def __call__(self, value) -> PrimeFieldElement:
        if isinstance(value, PrimeFieldElement):
            if value.field.p != self.p:
                raise FieldMismatchError(f"F_{value.field.p} element into F_{self.p}")
            return value
        if isinstance(value, int):
            return PrimeFieldElement(value, self)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in F_{self.p}")
            return PrimeFieldElement(value.numerator * pow(value.denominator, -1, self.p), self)
        raise FieldMismatchError(f"cannot coerce {value!r} into F_{self.p}")

    def elements(self) -> Iterator[PrimeFieldElement]:
        return (PrimeFieldElement(v, self) for v in range(self.p))

    def random(self, rng, size=None):
        return PrimeFieldElement(rng.randrange(self.p), self)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))


@lru_cache(maxsize=None)
def prime_field(p: int) -> PrimeField:
    return PrimeField(p)


# ----------------------------------------------------------------------------
# dense univariate polynomials over F_p, coefficient lists low -> high


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _pdivmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    r = _trim([c % p for c in a])
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(r) - len(b) + 1, 0)
    while len(r) >= len(b):
        c = r[-1] * inv % p
        shift = len(r) - len(b)
        q[shift] = c
        for j, y in enumerate(b):
            r[shift + j] = (r[shift + j] - c * y) % p
        _trim(r)
    return q, r


def _pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _ppowmod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pdivmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _pdivmod(_pmul(result, base, p), mod, p)[1]
        base = _pdivmod(_pmul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _is_irreducible(h: Sequence[int], p: int) -> bool:
    # Ben-Or: h of degree k is irreducible iff gcd(h, t^(p^i) - t) = 1 for i <= k/2
    k = len(h) - 1
    t_pow = [0, 1]
    for _ in range(k // 2):
        t_pow = _ppowmod(t_pow, p, h, p)
        diff = list(t_pow) + [0] * max(0, 2 - len(t_pow))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(h, _trim(diff), p)) > 1:
            return False
    return True


def find_irreducible(p: int, k: int) -> tuple[int, ...]:
    """First monic irreducible of degree ``k`` over F_p.

    Candidates ``t^k + c_{k-1} t^{k-1} + ... + c_0`` are scanned in increasing
    order of ``sum(c_i * p^i)``.  Returns the coefficient tuple low -> high
    (length ``k + 1``, last entry 1).
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("degree must be >= 1")
    for index in range(p**k):
        coeffs = []
        for _ in range(k):
            index, c = divmod(index, p)
            coeffs.append(c)
        h = tuple(coeffs) + (1,)
        if _is_irreducible(h, p):
            return h
    raise AssertionError("unreachable: irreducible polynomials exist in every degree")


# ----------------------------------------------------------------------------
# F_{p^k} = F_p[t]/(modulus)


class ExtFieldElement:
    """Residue class ``sum(coeffs[j] * t^j)`` modulo the field's modulus."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: Sequence[int], field: "ExtField"):
        k, p = field.k, field.p
        c = [x % p for x in coeffs]
        if len(c) > k:
            c = _pdivmod(c, field.modulus, p)[1]
        c = tuple(c) + (0,) * (k - len(c))
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("ExtFieldElement is immutable")

    def _o(self, other) -> "ExtFieldElement":
        if isinstance(other, ExtFieldElement):
            if other.field != self.field:
                raise FieldMismatchError(f"{self.field.name} vs {other.field.name}")
            return other
        if isinstance(other, (int, PrimeFieldElement)):
            return self.field(other)
        raise FieldMismatchError(f"cannot combine {self.field.name} element with {other!r}")

    def __add__(self, other):
        o = self._o(other)
        return ExtFieldElement([a + b for a, b in zip(self.coeffs, o.coeffs)], self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._o(other)
        return ExtFieldElement([a - b for a, b in zip(self.coeffs, o.coeffs)], self.field)

    def __rsub__(self, other):
        return self._o(other) - self

    def __neg__(self):
        return ExtFieldElement([-a for a in self.coeffs], self.field)

    def __mul__(self, other):
        o = self._o(other)
        f = self.field
        return ExtFieldElement(f._reduce(_raw_mul(self.coeffs, o.coeffs)), f)

    __rmul__ = __mul__

    def inverse(self) -> "ExtFieldElement":
        if not any(self.coeffs):
            raise ZeroDivisionError(f"inverse of zero in {self.field.name}")
        p = self.field.p
        # extended Euclid on (modulus, self)
        r0, r1 = list(self.field.modulus), _trim(list(self.coeffs))
        s0, s1 = [], [1]
        while r1:
            q, r = _pdivmod(r0, r1, p)
            r0, r1 = r1, r
            qs = _pmul(q, s1, p)
            s0, s1 = s1, _trim([(a - b) % p for a, b in _zip_pad(s0, qs)])
        inv = pow(r0[0], -1, p)  # r0 is a nonzero constant since the modulus is irreducible
        return ExtFieldElement([c * inv for c in s0], self.field)

    def __truediv__(self, other):
        return self * self._o(other).inverse()

    def __rtruediv__(self, other):
        return self._o(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: int) -> "ExtFieldElement":
        """Multiply by an integer (an element of the prime field)."""
        return ExtFieldElement([c * x for x in self.coeffs], self.field)

    def frobenius(self) -> "ExtFieldElement":
        return self ** self.field.p

    def index(self) -> int:
        """Position in the fixed element order: ``sum(c_j * p^j)``."""
        p, n = self.field.p, 0
        for c in reversed(self.coeffs):
            n = n * p + c
        return n

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, ExtFieldElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, PrimeFieldElement)):
            try:
                return self == self.field(other)
            except FieldMismatchError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.field.p, self.field.k))

    def __repr__(self):
        return f"ExtFieldElement({list(self.coeffs)}, {self.field.name})"

    def __str__(self):
        return self.field.format(self)


def _zip_pad(a, b):
    n = max(len(a), len(b))
    return zip(list(a) + [0] * (n - len(a)), list(b) + [0] * (n - len(b)))


def _raw_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


class ExtField(Field):
    """F_{p^k} realised as F_p[t] modulo a monic irreducible of degree k."""

    def __init__(self, p: int, k: int, modulus: Sequence[int] | None = None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        if modulus is None:
            modulus = find_irreducible(p, k)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not _is_irreducible(modulus, p):
            raise ValueError("modulus is reducible")
        self.p, self.k, self.modulus = p, k, modulus
        self.characteristic = p
        self.order = p**k
        self.name = f"fq:{p}^{k}"
        # t^j mod modulus for k <= j <= 2k-2, used by multiplication
        self._high = []
        for j in range(k, 2 * k - 1):
            mono = [0] * j + [1]
            self._high.append(_pdivmod(mono, modulus, p)[1])

    def _reduce(self, raw: list[int]) -> list[int]:
        k, p = self.k, self.p
        out = raw[:k] + [0] * max(0, k - len(raw))
        for j in range(k, len(raw)):
            c = raw[j]
            if c:
                for i, r in enumerate(self._high[j - k]):
                    out[i] += c * r
        return [c % p for c in out]

    def __call__(self, value) -> ExtFieldElement:
        if isinstance(value, ExtFieldElement):
            if value.field != self:
                raise FieldMismatchError(f"{value.field.name} element into {self.name}")
            return value
        if isinstance(value, PrimeFieldElement):
            if value.field.p != self.p:
                raise FieldMismatchError(f"F_{value.field.p} element into {self.name}")
            return ExtFieldElement([value.value], self)
        if isinstance(value, (int, Fraction)):
            return ExtFieldElement([prime_field(self.p)(value).value], self)
        if isinstance(value, (tuple, list)):
            return ExtFieldElement(value, self)
        raise FieldMismatchError(f"cannot coerce {value!r} into {self.name}")

    @property
    def generator(self) -> ExtFieldElement:
        """The class of ``t`` (a root of the modulus)."""
        return ExtFieldElement([0, 1], self)

    def from_index(self, n: int) -> ExtFieldElement:
        coeffs = []
        for _ in range(self.k):
            n, c = divmod(n, self.p)
            coeffs.append(c)
        return ExtFieldElement(coeffs, self)

    def elements(self) -> Iterator[ExtFieldElement]:
        return (self.from_index(n) for n in range(self.order))

    def random(self, rng, size=None):
        return ExtFieldElement([rng.randrange(self.p) for _ in range(self.k)], self)

    def format(self, x: ExtFieldElement) -> str:
        terms = []
        for j in range(self.k - 1, -1, -1):
            c = x.coeffs[j]
            if not c:
                continue
            if j == 0:
                terms.append(str(c))
            else:
                mono = "t" if j == 1 else f"t^{j}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        if not terms:
            return "0"
        if len(terms) == 1:
            return terms[0]
        return "(" + "+".join(terms) + ")"

    def __eq__(self, other):
        return isinstance(other, ExtField) and (other.p, other.k, other.modulus) == (
            self.p,
            self.k,
            self.modulus,
        )

    def __hash__(self):
        return hash(("fq", self.p, self.k, self.modulus))


@lru_cache(maxsize=None)
def ext_field(p: int, k: int) -> ExtField:
    """F_{p^k} with the deterministic (lexicographically first) modulus."""
    return ExtField(p, k)


# ----------------------------------------------------------------------------
# helpers


def field_of(x) -> Field:
    if isinstance(x, Fraction):
        return QQ
    if isinstance(x, (GaussianRational, PrimeFieldElement, ExtFieldElement)):
        return x.field
    raise FieldMismatchError(f"{x!r} is not a field element")


def parse_field(descriptor: str) -> Field:
    """``q``, ``qi``, ``fp:<p>`` or ``fq:<p>^<k>``."""
    d = descriptor.strip().lower()
    if d == "q":
        return QQ
    if d == "qi":
        return QQI
    try:
        if d.startswith("fp:"):
            return prime_field(int(d[3:]))
        if d.startswith("fq:"):
            p, k = d[3:].split("^")
            return ext_field(int(p), int(k))
    except ValueError as exc:
        raise ValueError(f"bad field descriptor {descriptor!r}: {exc}") from None
    raise ValueError(f"bad field descriptor {descriptor!r} (expected q, qi, fp:<p> or fq:<p>^<k>)")


def _factor_small(n: int) -> list[int]:
    primes, d = [], 2
    while d * d <= n:
        if n % d == 0:
            primes.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        primes.append(n)
    return primes


@lru_cache(maxsize=None)
def primitive_element(field: ExtField) -> ExtFieldElement:
    """First generator of the multiplicative group in element order."""
    n = field.order - 1
    cofactors = [n // q for q in _factor_small(n)]
    for idx in range(1, field.order):
        g = field.from_index(idx)
        if all(g**c != 1 for c in cofactors):
            return g
    raise AssertionError("unreachable: multiplicative group is cyclic")


@lru_cache(maxsize=None)
def _embedding_root(source: ExtField, target: ExtField) -> ExtFieldElement:
    # all roots of the source modulus lie in the unique degree-d subfield,
    # which is {0} together with the powers of gamma
    d, k = source.k, target.k
    gamma = primitive_element(target) ** ((target.order - 1) // (source.order - 1))
    roots = []
    x = target.one
    for _ in range(source.order - 1):
        if _eval_coeffs(source.modulus, x, target) == 0:
            roots.append(x)
        x = x * gamma
    if not roots:
        raise AssertionError("irreducible modulus has no root in the extension")
    return min(roots, key=ExtFieldElement.index)


def _eval_coeffs(coeffs: Sequence[int], x, field: ExtField) -> ExtFieldElement:
    acc = field.zero
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def embed_subfield(x, target: ExtField) -> ExtFieldElement:
    """Map ``x`` in F_{p^d} into F_{p^k} (d | k).

    The embedding sends the generator ``t`` of the source to the smallest root
    (in element order) of the source modulus inside ``target``; it is a ring
    homomorphism fixing F_p.
    """
    if isinstance(x, (int, Fraction)):
        return target(x)
    if isinstance(x, PrimeFieldElement):
        if x.field.p != target.p:
            raise FieldMismatchError(f"F_{x.field.p} element into {target.name}")
        return target(x)
    if not isinstance(x, ExtFieldElement):
        raise FieldMismatchError(f"{x!r} is not a finite-field element")
    source = x.field
    if source.p != target.p:
        raise FieldMismatchError(f"{source.name} and {target.name} have different characteristic")
    if target.k % source.k:
        raise ValueError(f"F_{source.p}^{source.k} does not embed in {target.name}: {source.k} does not divide {target.k}")
    if source == target:
        return x
    if source.k == 1:
        return target(x.coeffs[0])
    theta = _embedding_root(source, target)
    return _eval_coeffs(x.coeffs, theta, target)


def subfield_elements(d: int, target: ExtField) -> list[ExtFieldElement]:
    """The p^d elements of the degree-d subfield of ``target``, in element order."""
    if target.k % d:
        raise ValueError(f"{d} does not divide {target.k}")
    source = ext_field(target.p, d)
    images = [embed_subfield(e, target) for e in source.elements()]
    return sorted(images, key=ExtFieldElement.index)


def rational_content(values: Sequence[Fraction]) -> tuple[int, int]:
    """(lcm of denominators, gcd of the cleared numerators)."""
    den = 1
    for v in values:
        den = den * v.denominator // _igcd(den, v.denominator)
    g = 0
    for v in values:
        g = _igcd(g, int(v * den))
    return den, g
