"""Sparse bivariate polynomials and the operators the toolkit is built on.

A :class:`BiPoly` maps exponent pairs ``(n, m)`` to nonzero coefficients of
one field.  The pair refers to the variable family of the polynomial: either
``(z, w)`` (``w`` standing for the conjugate variable) or the real
coordinates ``(x, y)``.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Iterable, Mapping

from .exactla import ExactMatrix, rank as _rank
from .scalar import QQ, QQI, Field, FieldMismatchError

ZW = ("z", "w")
XY = ("x", "y")

Exp = tuple[int, int]


class NotDivisibleError(ArithmeticError):
    """Exact division failed; ``remainder`` witnesses the failure."""

    def __init__(self, dividend: "BiPoly", divisor: "BiPoly", remainder: "BiPoly"):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        super().__init__(f"{divisor} does not divide {dividend}: remainder {remainder}")


class NotRealError(ValueError):
    """A z,w polynomial without conjugate-symmetric coefficients."""


def _mono_str(n: int, m: int, names: tuple[str, str]) -> str:
    parts = []
    for e, v in ((n, names[0]), (m, names[1])):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def _coeff_sign_body(c, field: Field) -> tuple[bool, str]:
    """Split a coefficient into (is_negative, magnitude text) for printing."""
    if field == QQ:
        return (c < 0, str(abs(c)))
    if field == QQI:
        if not c.im:
            return (c.re < 0, str(abs(c.re)))
        if not c.re:
            neg = c.im < 0
            im = abs(c.im)
            return (neg, "i" if im == 1 else f"{im}*i")
        return (False, field.format(c))
    return (False, field.format(c))


def canonical_order(e: Exp) -> tuple[int, int]:
    """Sort key of the printed form: total degree ascending, z-exponent descending."""
    return (e[0] + e[1], -e[0])


class BiPoly:
    __slots__ = ("field", "vars", "_t")

    def __init__(self, terms: Mapping[Exp, Any] | Iterable[tuple[Exp, Any]] = (), field: Field = QQ, vars=ZW):
        if isinstance(terms, Mapping):
            terms = terms.items()
        t: dict[Exp, Any] = {}
        for (n, m), c in terms:
            if n < 0 or m < 0:
                raise ValueError(f"negative exponent in {(n, m)}")
            c = field(c)
            if (n, m) in t:
                c = t[(n, m)] + c
            t[(n, m)] = c
        self._t = {e: c for e, c in t.items() if c}
        self.field = field
        self.vars = tuple(vars)

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, field: Field = QQ, vars=ZW) -> "BiPoly":
        return cls({}, field, vars)

    @classmethod
    def const(cls, c, field: Field = QQ, vars=ZW) -> "BiPoly":
        return cls({(0, 0): c}, field, vars)

    @classmethod
    def monomial(cls, n: int, m: int, c=1, field: Field = QQ, vars=ZW) -> "BiPoly":
        return cls({(n, m): c}, field, vars)

    def _new(self, terms) -> "BiPoly":
        return BiPoly(terms, self.field, self.vars)

    def like(self, terms) -> "BiPoly":
        """A polynomial in the same field and variables."""
        return self._new(terms)

    # -- inspection -----------------------------------------------------------

    @property
    def terms(self) -> dict[Exp, Any]:
        return dict(self._t)

    def items(self):
        return self._t.items()

    @property
    def support(self) -> frozenset[Exp]:
        return frozenset(self._t)

    def coeff(self, n: int, m: int):
        return self._t.get((n, m), self.field.zero)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self):
        return bool(self._t)

    def __len__(self):
        return len(self._t)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((n + m for n, m in self._t), default=-1)

    @property
    def deg_z(self) -> int:
        return max((n for n, _ in self._t), default=-1)

    @property
    def deg_w(self) -> int:
        return max((m for _, m in self._t), default=-1)

    def is_constant(self) -> bool:
        return all(e == (0, 0) for e in self._t)

    def constant_term(self):
        return self.coeff(0, 0)

    def leading(self) -> tuple[Exp, Any]:
        """Lexicographically greatest term (z-exponent first)."""
        e = max(self._t)
        return e, self._t[e]

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other: "BiPoly") -> None:
        if other.field != self.field:
            raise FieldMismatchError(f"polynomials over {self.field.name} and {other.field.name}")
        if other.vars != self.vars:
            raise ValueError(f"variable families {self.vars} and {other.vars} do not mix")

    def _lift(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            self._check(other)
            return other
        return self._new({(0, 0): self.field(other)})

    def __add__(self, other):
        o = self._lift(other)
        t = dict(self._t)
        for e, c in o._t.items():
            t[e] = t[e] + c if e in t else c
        return self._new(t)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, BiPoly):
            c = self.field(other)
            return self._new({e: v * c for e, v in self._t.items()})
        self._check(other)
        t: dict[Exp, Any] = {}
        for (a, b), c in self._t.items():
            for (n, m), d in other._t.items():
                e = (a + n, b + m)
                t[e] = t[e] + c * d if e in t else c * d
        return self._new(t)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, BiPoly):
            return self.exact_divide(other)
        inv = self.field.one / self.field(other)
        return self * inv

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = self._new({(0, 0): 1})
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self.field == other.field and self.vars == other.vars and self._t == other._t
        if isinstance(other, (int, Fraction)):
            try:
                return self._t == self._lift(other)._t
            except FieldMismatchError:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.vars, frozenset(self._t.items())))

    def divmod_lex(self, divisor: "BiPoly") -> tuple["BiPoly", "BiPoly"]:
        """Division by one polynomial in lex order (z before w).

        A single polynomial is a Groebner basis of its ideal, so the remainder
        vanishes exactly when ``divisor`` divides ``self``.
        """
        self._check(divisor)
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        (n0, m0), c0 = divisor.leading()
        inv = self.field.one / c0
        r = dict(self._t)
        quot: dict[Exp, Any] = {}
        rem: dict[Exp, Any] = {}
        while r:
            (n, m) = max(r)
            c = r[(n, m)]
            if n >= n0 and m >= m0:
                q = c * inv
                sh = (n - n0, m - m0)
                quot[sh] = q
                for (a, b), d in divisor._t.items():
                    e = (a + sh[0], b + sh[1])
                    v = r.get(e, self.field.zero) - q * d
                    if v:
                        r[e] = v
                    else:
                        r.pop(e, None)
            else:
                rem[(n, m)] = c
                del r[(n, m)]
        return self._new(quot), self._new(rem)

    def exact_divide(self, divisor: "BiPoly") -> "BiPoly":
        q, r = self.divmod_lex(divisor)
        if r:
            raise NotDivisibleError(self, divisor, r)
        return q

    def divides(self, other: "BiPoly") -> bool:
        return not other.divmod_lex(self)[1]

    # -- evaluation and substitution -----------------------------------------

    def evaluate(self, a, b):
        """Value at (a, b); a and b may live in any ring containing the coefficients."""
        if not self._t:
            return self.field.zero
        dn, dm = self.deg_z, self.deg_w
        pa = [a**0 if not isinstance(a, int) else 1]
        for _ in range(dn):
            pa.append(pa[-1] * a)
        pb = [b**0 if not isinstance(b, int) else 1]
        for _ in range(dm):
            pb.append(pb[-1] * b)
        acc = None
        for (n, m), c in self._t.items():
            term = (pa[n] * pb[m]) * c
            acc = term if acc is None else acc + term
        return acc

    def subs(self, z=None, w=None) -> "BiPoly":
        """Substitute field scalars for one or both variables."""
        t: dict[Exp, Any] = {}
        zv = None if z is None else self.field(z)
        wv = None if w is None else self.field(w)
        for (n, m), c in self._t.items():
            if zv is not None:
                c = c * zv**n
                n = 0
            if wv is not None:
                c = c * wv**m
                m = 0
            t[(n, m)] = t[(n, m)] + c if (n, m) in t else c
        return self._new(t)

    def compose(self, first: "BiPoly", second: "BiPoly") -> "BiPoly":
        """Substitute polynomials for both variables; the result lives with ``first``."""
        first._check(second)
        out = BiPoly.zero(first.field, first.vars)
        powers_a = [first ** 0]
        powers_b = [first ** 0]
        for _ in range(self.deg_z):
            powers_a.append(powers_a[-1] * first)
        for _ in range(self.deg_w):
            powers_b.append(powers_b[-1] * second)
        for (n, m), c in self._t.items():
            out = out + powers_a[n] * powers_b[m] * first.field(c)
        return out

    def map_coeffs(self, fn: Callable[[Any], Any], field: Field | None = None, vars=None) -> "BiPoly":
        return BiPoly(
            {e: fn(c) for e, c in self._t.items()},
            self.field if field is None else field,
            self.vars if vars is None else vars,
        )

    def with_vars(self, vars) -> "BiPoly":
        return BiPoly(self._t, self.field, vars)

    def diff(self, index: int) -> "BiPoly":
        """Formal partial derivative in the first (0) or second (1) variable."""
        t = {}
        for (n, m), c in self._t.items():
            if index == 0 and n:
                t[(n - 1, m)] = c * n
            elif index == 1 and m:
                t[(n, m - 1)] = c * m
        return self._new(t)

    # -- text -----------------------------------------------------------------

    def __str__(self):
        if not self._t:
            return "0"
        out = []
        for e in sorted(self._t, key=canonical_order):
            neg, body = _coeff_sign_body(self._t[e], self.field)
            mono = _mono_str(e[0], e[1], self.vars)
            if mono:
                term = mono if body == "1" else f"{body}*{mono}"
            else:
                term = body
            if not out:
                out.append(f"-{term}" if neg else term)
            else:
                out.append(f" - {term}" if neg else f" + {term}")
        return "".join(out)

    def __repr__(self):
        return f"BiPoly({str(self)!r}, {self.field.name})"


def z(field: Field = QQ) -> BiPoly:
    return BiPoly.monomial(1, 0, 1, field)


def w(field: Field = QQ) -> BiPoly:
    return BiPoly.monomial(0, 1, 1, field)


# ----------------------------------------------------------------------------
# harmonic structure


def fischer_D(p: BiPoly) -> BiPoly:
    """Exponent shift z^n w^m -> z^(n-1) w^(m-1); monomials missing a variable go to 0.

    This is not the mixed partial derivative: no n*m factors appear.
    """
    return p.like({(n - 1, m - 1): c for (n, m), c in p.items() if n and m})


def mixed_part(p: BiPoly) -> BiPoly:
    return p.like({(n, m): c for (n, m), c in p.items() if n and m})


def is_harmonic(p: BiPoly) -> bool:
    """True iff p lies in F[z] + F[w]."""
    return all(not (n and m) for n, m in p.support)


def harmonic_split(p: BiPoly) -> tuple[BiPoly, BiPoly]:
    """Split a harmonic polynomial into (h1(z), h2(w)) with the constant in h1."""
    if not is_harmonic(p):
        raise ValueError(f"{p} is not harmonic")
    h1 = p.like({e: c for e, c in p.items() if e[1] == 0})
    h2 = p.like({e: c for e, c in p.items() if e[1] != 0})
    return h1, h2


def hermitian_reflect(p: BiPoly) -> BiPoly:
    """Swap the variables and conjugate the coefficients.

    Writing p = sum p_i(z) w^i, the result is sum conj(p_i)(w) z^i.
    """
    if p.field != QQ and not p.field.has_conjugation():
        raise ValueError(f"no conjugation on {p.field.name}")
    f = p.field
    return p.like({(m, n): f.conj(c) for (n, m), c in p.items()})


# ----------------------------------------------------------------------------
# univariate helpers over a field (coefficient lists low -> high)


def _utrim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _umul(a: list, b: list, field: Field) -> list:
    if not a or not b:
        return []
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
    return _utrim(out)


def _usub(a: list, b: list, field: Field) -> list:
    n = max(len(a), len(b))
    zero = field.zero
    out = [(a[i] if i < len(a) else zero) - (b[i] if i < len(b) else zero) for i in range(n)]
    return _utrim(out)


def _udivmod(a: list, b: list, field: Field) -> tuple[list, list]:
    r = _utrim(list(a))
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    inv = field.one / b[-1]
    q = [field.zero] * max(len(r) - len(b) + 1, 0)
    while len(r) >= len(b) and r:
        c = r[-1] * inv
        s = len(r) - len(b)
        q[s] = c
        for j, y in enumerate(b):
            r[s + j] = r[s + j] - c * y
        r.pop()
        _utrim(r)
    return _utrim(q), r


def _umonic(a: list, field: Field) -> list:
    if not a:
        return a
    inv = field.one / a[-1]
    return [x * inv for x in a]


def _ugcd(a: list, b: list, field: Field) -> list:
    a, b = _utrim(list(a)), _utrim(list(b))
    while b:
        a, b = b, _udivmod(a, b, field)[1]
    return _umonic(a, field)


# ----------------------------------------------------------------------------
# bivariate gcd, viewing polynomials as univariate in w over F[z]


def _to_w_of_z(p: BiPoly) -> list[list]:
    f = p.field
    out = [[f.zero] * (p.deg_z + 1) for _ in range(p.deg_w + 1)]
    for (n, m), c in p.items():
        out[m][n] = c
    return [_utrim(row) for row in out]


def _from_w_of_z(rows: list[list], like: BiPoly) -> BiPoly:
    return like.like({(n, m): c for m, row in enumerate(rows) for n, c in enumerate(row) if c})


def _content(rows: list[list], field: Field) -> list:
    g: list = []
    for row in rows:
        if row:
            g = _ugcd(g, row, field)
            if len(g) == 1:
                break
    return g


def _primitive(rows: list[list], field: Field) -> tuple[list, list[list]]:
    c = _content(rows, field)
    if not c:
        return c, rows
    return c, [_udivmod(row, c, field)[0] if row else [] for row in rows]


def _wdeg(rows: list[list]) -> int:
    for m in range(len(rows) - 1, -1, -1):
        if rows[m]:
            return m
    return -1


def _prem(a: list[list], b: list[list], field: Field) -> list[list]:
    db = _wdeg(b)
    lcb = b[db]
    r = [list(row) for row in a]
    while _wdeg(r) >= db:
        dr = _wdeg(r)
        lcr = r[dr]
        shift = dr - db
        r = [_umul(row, lcb, field) for row in r]
        for j in range(db + 1):
            if b[j]:
                r[j + shift] = _usub(r[j + shift], _umul(lcr, b[j], field), field)
        r = r[: _wdeg(r) + 1]
    return r


def normalize_unit(p: BiPoly) -> BiPoly:
    """Scale so the lexicographically greatest monomial has coefficient 1."""
    if not p:
        return p
    _, c = p.leading()
    return p * (p.field.one / c)


def gcd(p: BiPoly, q: BiPoly) -> BiPoly:
    """Greatest common divisor, unit-normalized by :func:`normalize_unit`."""
    p._check(q)
    if not p and not q:
        raise ValueError("gcd(0, 0) is undefined")
    if not q:
        return normalize_unit(p)
    if not p:
        return normalize_unit(q)
    f = p.field
    ca, a = _primitive(_to_w_of_z(p), f)
    cb, b = _primitive(_to_w_of_z(q), f)
    c = _ugcd(ca, cb, f)
    if _wdeg(a) < _wdeg(b):
        a, b = b, a
    while _wdeg(b) >= 0:
        r = _prem(a, b, f)
        a = b
        b = _primitive(r, f)[1] if _wdeg(r) >= 0 else []
    g = [_umul(row, c, f) if row else [] for row in a]
    return normalize_unit(_from_w_of_z(g, p))


# ----------------------------------------------------------------------------
# separable rank


def coefficient_matrix(p: BiPoly) -> ExactMatrix:
    """Rows indexed by the z-exponent, columns by the w-exponent."""
    f = p.field
    rows = [[p.coeff(n, m) for m in range(p.deg_w + 1)] for n in range(p.deg_z + 1)]
    return ExactMatrix(rows, f, cols=max(p.deg_w + 1, 0))


def separable_rank(p: BiPoly) -> int:
    """Least r with p = sum_{i<r} a_i(z) b_i(w)."""
    if not p:
        return 0
    return _rank(coefficient_matrix(p))


# ----------------------------------------------------------------------------
# real coordinates


def _as_complex(p: BiPoly) -> BiPoly:
    if p.field == QQI:
        return p
    if p.field == QQ:
        return p.map_coeffs(QQI, QQI)
    raise ValueError(f"real/complex coordinate change needs Q or Q(i), not {p.field.name}")


def xy_to_zw(p: BiPoly) -> BiPoly:
    """Rewrite p(x, y) with x = (z + w)/2, y = (z - w)/(2i); result over Q(i)."""
    if p.vars != XY:
        raise ValueError("expected a polynomial in x, y")
    p = _as_complex(p)
    half = Fraction(1, 2)
    x_ = BiPoly({(1, 0): half, (0, 1): half}, QQI)
    i_half = QQI(half) * QQI.i
    # 1/(2i) = -i/2
    y_ = BiPoly({(1, 0): -i_half, (0, 1): i_half}, QQI)
    return p.compose(x_, y_)


def is_conjugate_symmetric(p: BiPoly) -> bool:
    """coefficient(n, m) == conj(coefficient(m, n)) for every monomial."""
    f = p.field
    return all(p.coeff(m, n) == f.conj(c) for (n, m), c in p.items())


def zw_to_xy(p: BiPoly) -> BiPoly:
    """Rewrite a real-valued p(z, w) with z = x + iy, w = x - iy; result over Q."""
    if p.vars != ZW:
        raise ValueError("expected a polynomial in z, w")
    if p.field not in (QQ, QQI):
        raise ValueError(f"real coordinates need Q or Q(i), not {p.field.name}")
    bad = sorted(e for e, c in p.items() if p.coeff(e[1], e[0]) != p.field.conj(c))
    if bad:
        raise NotRealError(f"{p} is not real-valued on w = conj(z); asymmetric at {bad}")
    q = _as_complex(p)
    i = QQI.i
    z_ = BiPoly({(1, 0): 1, (0, 1): i}, QQI, XY)
    w_ = BiPoly({(1, 0): 1, (0, 1): -i}, QQI, XY)
    out = q.with_vars(XY).compose(z_, w_)
    return out.map_coeffs(QQ, QQ)


to_real_xy = xy_to_zw
from_zw_real = zw_to_xy


def laplacian_xy(p: BiPoly) -> BiPoly:
    if p.vars != XY:
        raise ValueError("expected a polynomial in x, y")
    return p.diff(0).diff(0) + p.diff(1).diff(1)


# ----------------------------------------------------------------------------
# conics


class ConicClass(str, Enum):
    ELLIPSE = "ellipse"
    CIRCLE = "circle"
    PARABOLA = "parabola"
    HYPERBOLA = "hyperbola"
    LINE = "line"
    LINE_PAIR = "line-pair/degenerate"
    POINT_OR_EMPTY = "point/empty"
    NOT_A_CONIC = "not-a-conic"

    def __str__(self):
        return self.value


def _det3(m) -> Fraction:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def classify_conic(p: BiPoly) -> ConicClass:
    """Real conic type of A x^2 + B xy + C y^2 + D x + E y + F = 0.

    Accepts the z,w form of a real polynomial as well (converted first).
    """
    if p.field.characteristic != 0:
        raise ValueError("conic classification is only defined in characteristic 0")
    if p.vars == ZW:
        p = zw_to_xy(p)
    elif p.field == QQI:
        p = p.map_coeffs(QQ, QQ)
    if not p:
        raise ValueError("the zero polynomial does not define a curve")
    d = p.degree
    if d > 2:
        return ConicClass.NOT_A_CONIC
    if d == 0:
        return ConicClass.POINT_OR_EMPTY
    if d == 1:
        return ConicClass.LINE
    A, B, C = p.coeff(2, 0), p.coeff(1, 1), p.coeff(0, 2)
    D, E, F = p.coeff(1, 0), p.coeff(0, 1), p.coeff(0, 0)
    disc = B * B - 4 * A * C
    h = Fraction(1, 2)
    delta = _det3([[A, B * h, D * h], [B * h, C, E * h], [D * h, E * h, F]])
    if disc < 0:
        if delta == 0:
            return ConicClass.POINT_OR_EMPTY
        if (A + C) * delta < 0:
            return ConicClass.CIRCLE if A == C and B == 0 else ConicClass.ELLIPSE
        return ConicClass.POINT_OR_EMPTY
    if disc == 0:
        if delta != 0:
            return ConicClass.PARABOLA
        k = (A * F - D * D / 4) + (C * F - E * E / 4)
        return ConicClass.POINT_OR_EMPTY if k > 0 else ConicClass.LINE_PAIR
    return ConicClass.HYPERBOLA if delta != 0 else ConicClass.LINE_PAIR
