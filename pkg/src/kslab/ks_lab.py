"""KS-polynomial laboratory.

``f`` is a KS-polynomial when every polynomial is congruent to a harmonic one
modulo ``f``.  By linearity it is enough to reduce the mixed monomials
``z^n w^m``; :func:`ks_scan` does that up to a degree bound and a cofactor
bound, and the structural criteria below turn theorems into checkable
verdicts with witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .bipoly import BiPoly, separable_rank
from .exactla import ExactMatrix, echelon, monomial_basis
from .fischer import BoundedFailure, FischerDecomposition, FischerSystem, fischer_solve
from .scalar import QQ, QQI, _factor_small, is_prime, prime_field, rational_content
from .verdict import (
    CONJECTURE_HOLDS,
    DEGREE_DIVISIBILITY,
    KS,
    LINEAR_IN_Z,
    NOT_KS,
    PRODUCT_FORM,
    StructuralVerdict,
)

CONSISTENT = "consistent-with-KS"
REFUTED_AT_BOUND = "refuted-at-bound"
REFUTED_STRUCTURALLY = "refuted-structurally"


def reduce_monomial(f: BiPoly, n: int, m: int, K: int) -> FischerDecomposition | BoundedFailure:
    if n < 1 or m < 1:
        raise ValueError("only mixed monomials (n, m >= 1) need reducing")
    if K < 0:
        raise ValueError("K must be >= 0")
    return fischer_solve(f, f.like({(n, m): 1}), K)


@dataclass
class KsReport:
    f: BiPoly
    N: int
    K: int
    outcomes: dict[tuple[int, int], FischerDecomposition | BoundedFailure]
    structural: list[StructuralVerdict] = field(default_factory=list)

    @property
    def failures(self) -> list[tuple[int, int]]:
        return [e for e, o in self.outcomes.items() if isinstance(o, BoundedFailure)]

    @property
    def verdict(self) -> str:
        if any(v.refutes for v in self.structural):
            return REFUTED_STRUCTURALLY
        if self.failures:
            return REFUTED_AT_BOUND
        return CONSISTENT

    def to_json(self) -> dict:
        outcomes = []
        for (n, m), o in self.outcomes.items():
            outcomes.append({"n": n, "m": m, **o.to_json()})
        return {
            "f": str(self.f),
            "field": self.f.field.name,
            "N": self.N,
            "K": self.K,
            "outcomes": outcomes,
            "structural": [v.to_json() for v in self.structural],
            "verdict": self.verdict,
        }


def ks_scan(f: BiPoly, N: int, K: int, structural: bool = True) -> KsReport:
    """Reduce every mixed monomial of total degree <= N with cofactors of degree <= K."""
    if N < 2:
        raise ValueError("N must be >= 2")
    if K < 0:
        raise ValueError("K must be >= 0")
    if f.degree < 1:
        raise ValueError("f must be nonconstant")
    system = FischerSystem(f, K, N)
    outcomes = {}
    for n, m in monomial_basis(N, mixed_only=True):
        res = system.solve(f.like({(n, m): 1}))
        if not res.verify():
            raise AssertionError(f"reduction of z^{n}w^{m} failed its own check")
        outcomes[(n, m)] = res
    verdicts = []
    if structural:
        v = classify_linear_in_z(f)
        if v is not None:
            verdicts.append(v)
    return KsReport(f, N, K, outcomes, verdicts)


# ----------------------------------------------------------------------------
# structural criteria


def _linear_side(f: BiPoly, var: int) -> StructuralVerdict | None:
    other = 1 - var
    if (f.deg_z, f.deg_w)[var] != 1:
        return None
    # f = c * v - g with c, g polynomials in the other variable only
    c_terms, g_terms = {}, {}
    for e, coef in f.items():
        key = [0, 0]
        key[other] = e[other]
        if e[var] == 1:
            c_terms[tuple(key)] = coef
        else:
            g_terms[tuple(key)] = -coef
    c, g = f.like(c_terms), f.like(g_terms)
    name = f.vars[var]
    witness = {"variable": name, "c": c, "g": g}
    if c.degree <= 1:
        return StructuralVerdict(LINEAR_IN_Z, KS, witness, note=f"f = ({c})*{name} - ({g}) with deg c <= 1")
    return StructuralVerdict(
        LINEAR_IN_Z,
        NOT_KS,
        witness,
        note=f"f = ({c})*{name} - ({g}); c has degree {c.degree} > 1 so no reduction of the mixed monomial of degree (1, 1) exists",
    )


def classify_linear_in_z(f: BiPoly) -> StructuralVerdict | None:
    """Verdict for f of degree one in z (or in w); None when neither applies.

    Such f is KS iff f = c*z - g with c of degree <= 1, nonzero constants
    included.
    """
    sides = [v for v in (_linear_side(f, 0), _linear_side(f, 1)) if v is not None]
    if not sides:
        return None
    for v in sides:
        if v.conclusion == KS:
            return v
    return sides[0]


def separable_decomposition(p: BiPoly) -> list[tuple[BiPoly, BiPoly]]:
    """Pairs (a_i(z), b_i(w)) with p = sum a_i * b_i, as many as the separable rank."""
    if not p:
        return []
    rows = [[p.coeff(n, m) for m in range(p.deg_w + 1)] for n in range(p.deg_z + 1)]
    ech = echelon(ExactMatrix(rows, p.field))
    out = []
    for i, pc in enumerate(ech.pivots):
        a = p.like({(n, 0): rows[n][pc] for n in range(len(rows)) if rows[n][pc]})
        b = p.like({(0, m): c for m, c in enumerate(ech.reduced[i]) if c})
        out.append((a, b))
    return out


def check_product_form(f: BiPoly, g: BiPoly, irreducibility_assumed: bool) -> StructuralVerdict | None:
    """not-KS when f*g = a(z)b(w) + a1(z)b1(w), f is nonlinear in both variables
    and the caller vouches for irreducibility of f.  None means inconclusive."""
    f._check(g)
    if not g:
        raise ValueError("g must be nonzero")
    product = f * g
    r = separable_rank(product)
    if r > 2 or f.deg_z < 2 or f.deg_w < 2 or not irreducibility_assumed:
        return None
    return StructuralVerdict(
        PRODUCT_FORM,
        NOT_KS,
        {"f": f, "g": g, "product": product, "separable_rank": r, "terms": [f"({a})*({b})" for a, b in separable_decomposition(product)]},
        note="irreducibility of f over its field is assumed by the caller, not proved",
    )


def degree_divisibility_criterion(deg_h1: int, deg_h2: int, irreducibility_assumed: bool = True) -> StructuralVerdict | None:
    """For irreducible h1, h2: if deg h1 does not divide deg h2, no polynomial
    h1(z)*phi + h2(w)*psi of total degree > 2 that is nonlinear in both
    variables is KS.  Equal or dividing degrees give None (inconclusive)."""
    for d in (deg_h1, deg_h2):
        if not isinstance(d, int) or d < 1:
            raise ValueError(f"degrees must be integers >= 1, got {deg_h1}, {deg_h2}")
    d1, d2 = sorted((deg_h1, deg_h2))
    if d2 % d1 == 0 or not irreducibility_assumed:
        return None
    return StructuralVerdict(
        DEGREE_DIVISIBILITY,
        CONJECTURE_HOLDS,
        {"deg_h1": d1, "deg_h2": d2},
        note=f"{d1} does not divide {d2}; premised on h1, h2 irreducible",
    )


# ----------------------------------------------------------------------------
# reduction mod p


class TransferRejected(ValueError):
    def __init__(self, message: str, dying: Sequence[tuple[int, int]] = ()):
        super().__init__(message)
        self.dying = list(dying)


def sqrt_minus_one(p: int) -> int:
    """The smaller square root of -1 mod p, for p = 1 (mod 4)."""
    if p % 4 != 1:
        raise ValueError(f"-1 is not a square mod {p}")
    for c in range(2, p):
        if pow(c, (p - 1) // 2, p) == p - 1:
            r = pow(c, (p - 1) // 4, p)
            return min(r, p - r)
    raise AssertionError("unreachable")


def integer_representative(f: BiPoly) -> BiPoly:
    """Primitive integer-coefficient multiple of f over Q or Q(i)."""
    if f.field == QQ:
        parts = list(f.terms.values())
    elif f.field == QQI:
        parts = [x for c in f.terms.values() for x in (c.re, c.im)]
    else:
        raise ValueError(f"integer representatives need Q or Q(i), not {f.field.name}")
    den, g = rational_content(parts)
    return f * Fraction(den, g) if g else f


def _residue_map(field, p: int, nonreal: bool):
    """Coefficient map Q or Q(i) -> F_p; None on a denominator divisible by p."""
    root = sqrt_minus_one(p) if nonreal else 0

    def red(x: Fraction):
        if x.denominator % p == 0:
            return None
        return x.numerator * pow(x.denominator, -1, p) % p

    if field == QQI:

        def coerce(c):
            re, im = red(c.re), red(c.im)
            if re is None or im is None:
                return None
            return (re + root * im) % p

        return coerce
    return red


def _needs_i(f: BiPoly) -> bool:
    return f.field == QQI and any(c.im for _, c in f.items())


def modp_transfer(f: BiPoly, p: int) -> BiPoly:
    """Image of f in F_p[z, w] with the support preserved exactly."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    rep = integer_representative(f)
    nonreal = _needs_i(rep)
    if nonreal and p % 4 != 1:
        raise TransferRejected(f"i has no image in F_{p} (need p = 1 mod 4)")
    coerce = _residue_map(rep.field, p, nonreal)
    image = {e: coerce(c) for e, c in rep.items()}
    dying = sorted(e for e, c in image.items() if c == 0)
    if dying:
        raise TransferRejected(f"p = {p} kills the coefficients of {dying} in {rep}", dying)
    return BiPoly(image, prime_field(p), f.vars)


def reduce_decomposition(dec: FischerDecomposition, p: int) -> FischerDecomposition | None:
    """Reduce a characteristic-0 identity phi = f*g + h1 + h2 modulo p.

    The divisor becomes ``modp_transfer(f, p)`` (a scalar multiple of f), so
    the cofactor is rescaled to match.  Returns None when some coefficient has
    p in its denominator; then the identity says nothing about F_p.
    """
    fp = modp_transfer(dec.f, p)
    rep = integer_representative(dec.f)
    scale = rep.leading()[1] / dec.f.leading()[1]
    g = dec.g * (1 / scale)
    nonreal = any(_needs_i(x) for x in (dec.f, dec.phi, g, dec.h1, dec.h2))
    coerce = _residue_map(dec.f.field, p, nonreal)
    Fp = prime_field(p)
    out = []
    for poly in (dec.phi, g, dec.h1, dec.h2):
        terms = {}
        for e, c in poly.items():
            r = coerce(c)
            if r is None:
                return None
            terms[e] = r
        out.append(BiPoly(terms, Fp, dec.f.vars))
    phi, g, h1, h2 = out
    return FischerDecomposition(fp, phi, g, h1, h2)


# ----------------------------------------------------------------------------
# helpers for the cyclotomic degree count


def eisenstein_check(h, p: int) -> bool:
    """Eisenstein's criterion at p for an integer univariate polynomial.

    ``h`` is a coefficient sequence (constant term first) or a univariate
    :class:`BiPoly` with integer coefficients.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if isinstance(h, BiPoly):
        if h.deg_z > 0 and h.deg_w > 0:
            raise ValueError("expected a univariate polynomial")
        idx = 0 if h.deg_w <= 0 else 1
        coeffs = [0] * (max(h.degree, 0) + 1)
        for e, c in h.items():
            if Fraction(c).denominator != 1:
                raise ValueError("coefficients must be integers")
            coeffs[e[idx]] = int(c)
    else:
        coeffs = [int(c) for c in h]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
    if len(coeffs) < 2:
        raise ValueError("Eisenstein's criterion needs a nonconstant polynomial")
    lead, const = coeffs[-1], coeffs[0]
    return lead % p != 0 and all(c % p == 0 for c in coeffs[:-1]) and const % (p * p) != 0


def totient(m: int) -> int:
    if m < 1:
        raise ValueError("totient is defined for m >= 1")
    out = m
    for q in _factor_small(m):
        out -= out // q
    return out
