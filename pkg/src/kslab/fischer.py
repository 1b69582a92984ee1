"""Fischer decompositions phi = f*g + h1(z) + h2(w).

Everything reduces to one linear map on cofactors, ``g -> mixed_part(f*g)``,
restricted to cofactors of total degree <= K.  A decomposition exists within
that bound iff ``mixed_part(phi)`` lies in the image; a nonzero kernel vector
is a harmonic multiple of ``f``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .bipoly import (
    XY,
    BiPoly,
    ConicClass,
    canonical_order,
    classify_conic,
    harmonic_split,
    is_harmonic,
    laplacian_xy,
    mixed_part,
    normalize_unit,
    xy_to_zw,
    zw_to_xy,
)
from .exactla import Echelon, ExactMatrix, echelon, monomial_basis

Exp = tuple[int, int]


@dataclass(frozen=True)
class FischerDecomposition:
    f: BiPoly
    phi: BiPoly
    g: BiPoly
    h1: BiPoly
    h2: BiPoly

    def verify(self) -> bool:
        return (
            self.phi == self.f * self.g + self.h1 + self.h2
            and is_harmonic(self.h1 + self.h2)
            and self.h1.deg_w <= 0
            and self.h2.deg_z <= 0
            and not self.h2.constant_term()
        )

    def identity(self) -> str:
        return f"{self.phi} = ({self.f})*({self.g}) + ({self.h1}) + ({self.h2})"

    def to_json(self) -> dict:
        return {"status": "success", "cofactor": str(self.g), "h1": str(self.h1), "h2": str(self.h2)}


@dataclass(frozen=True)
class BoundedFailure:
    """No cofactor of degree <= K works.  Evidence only, never a refutation."""

    f: BiPoly
    phi: BiPoly
    K: int
    rank: int
    augmented_rank: int
    nullity: int
    unsatisfied: tuple[Exp, ...]

    @property
    def certified(self) -> bool:
        return self.augmented_rank > self.rank

    def verify(self) -> bool:
        # independent recomputation with the right-hand side appended
        system = FischerSystem(self.f, self.K, max(self.phi.degree, 0))
        rhs = system.rhs(self.phi)
        cols = [system.column(j) for j in range(len(system.unknowns))]
        aug = ExactMatrix.from_columns(cols + [rhs], self.f.field, len(system.rows))
        plain = ExactMatrix.from_columns(cols, self.f.field, len(system.rows))
        return echelon(aug).rank == self.augmented_rank > echelon(plain).rank == self.rank

    def identity(self) -> str:
        return (
            f"no g with deg(g) <= {self.K} makes {self.phi} - ({self.f})*g harmonic: "
            f"rank {self.rank} < augmented rank {self.augmented_rank}"
        )

    def to_json(self) -> dict:
        return {
            "status": "bounded-failure",
            "rank_data": {
                "K": self.K,
                "rank": self.rank,
                "augmented_rank": self.augmented_rank,
                "nullity": self.nullity,
                "unsatisfied": [list(e) for e in self.unsatisfied],
            },
        }


@dataclass(frozen=True)
class HarmonicMultipleWitness:
    f: BiPoly
    g: BiPoly
    product: BiPoly

    def verify(self) -> bool:
        return bool(self.g) and self.f * self.g == self.product and is_harmonic(self.product)

    def to_json(self) -> dict:
        return {"f": str(self.f), "cofactor": str(self.g), "product": str(self.product)}


class FischerSystem:
    """The map g -> mixed_part(f*g) on cofactors of total degree <= K.

    Rows are the mixed monomials up to ``max(K + deg f, data_degree)``; the
    reduced form is computed once and reused for every right-hand side.
    """

    def __init__(self, f: BiPoly, K: int, data_degree: int = 0, unknowns: list[Exp] | None = None):
        if K < 0:
            raise ValueError("cofactor degree bound must be >= 0")
        self.f = f
        self.K = K
        self.unknowns = monomial_basis(K) if unknowns is None else unknowns
        self.row_degree = max(K + f.degree, data_degree)
        self.rows = monomial_basis(self.row_degree, mixed_only=True)
        self._row_index = {e: i for i, e in enumerate(self.rows)}
        self._columns = [self._image(e) for e in self.unknowns]
        self.matrix = ExactMatrix.from_columns(self._columns, f.field, len(self.rows))
        self._ech: Echelon | None = None

    def _image(self, e: Exp) -> list:
        prod = mixed_part(self.f * BiPoly.monomial(*e, 1, self.f.field, self.f.vars))
        col = [self.f.field.zero] * len(self.rows)
        for mono, c in prod.items():
            col[self._row_index[mono]] = c
        return col

    def column(self, j: int) -> list:
        return list(self._columns[j])

    @property
    def echelon(self) -> Echelon:
        if self._ech is None:
            self._ech = echelon(self.matrix, with_transform=True)
        return self._ech

    def rhs(self, phi: BiPoly) -> list:
        if phi.degree > self.row_degree:
            raise ValueError(f"data of degree {phi.degree} exceeds the system's row degree {self.row_degree}")
        b = [self.f.field.zero] * len(self.rows)
        for mono, c in mixed_part(phi).items():
            b[self._row_index[mono]] = c
        return b

    def cofactor(self, vec) -> BiPoly:
        return self.f.like({e: c for e, c in zip(self.unknowns, vec) if c})

    def solve(self, phi: BiPoly) -> FischerDecomposition | BoundedFailure:
        b = self.rhs(phi)
        ech = self.echelon
        x = ech.solve(b)
        if x is None:
            bad = tuple(self.rows[i] for i in ech.inconsistent_rows(b))
            return BoundedFailure(self.f, phi, self.K, ech.rank, ech.rank + 1, ech.nullity, bad)
        g = self.cofactor(x)
        h1, h2 = harmonic_split(phi - self.f * g)
        return FischerDecomposition(self.f, phi, g, h1, h2)


def auto_cofactor_degree(f: BiPoly, phi: BiPoly) -> int:
    return max(phi.degree - f.degree, 0)


def fischer_solve(f: BiPoly, phi: BiPoly, max_cofactor_deg: int | None = None) -> FischerDecomposition | BoundedFailure:
    """Find g of degree <= K with phi - f*g harmonic.

    With ``max_cofactor_deg=None`` the bound is ``max(deg phi - deg f, 0)``,
    which always suffices for a quadratic f without harmonic multiples.
    """
    f._check(phi)
    if f.degree < 1:
        raise ValueError("the divisor must be nonconstant")
    K = auto_cofactor_degree(f, phi) if max_cofactor_deg is None else max_cofactor_deg
    return FischerSystem(f, K, max(phi.degree, 0)).solve(phi)


def harmonic_multiple_search(f: BiPoly, max_cofactor_deg: int) -> HarmonicMultipleWitness | None:
    """A nonzero g of degree <= K with f*g harmonic, or None if there is none.

    The witness is a nonconstant g of least degree when one exists; g = 1 is
    returned only for harmonic f with no nonconstant witness up to K.  The
    unknowns are ordered highest monomial first and g is scaled to a monic
    leading coefficient.
    """
    if not f:
        raise ValueError("f must be nonzero")
    if max_cofactor_deg < 0:
        raise ValueError("max_cofactor_deg must be >= 0")
    constant = None
    for K in range(max_cofactor_deg + 1):
        unknowns = sorted(monomial_basis(K), key=canonical_order, reverse=True)
        system = FischerSystem(f, K, unknowns=unknowns)
        for vec in echelon(system.matrix).nullspace():
            g = system.cofactor(vec)
            if g.degree == K and K > 0:
                g = normalize_unit(g)
                return HarmonicMultipleWitness(f, g, f * g)
            if constant is None and g.degree == 0:
                constant = normalize_unit(g)
    if constant is not None:
        return HarmonicMultipleWitness(f, constant, f * constant)
    return None


# ----------------------------------------------------------------------------
# Dirichlet problem on ellipses


@dataclass(frozen=True)
class DirichletSolution:
    """``data - u == boundary * multiplier`` with ``u`` harmonic."""

    boundary: BiPoly
    data: BiPoly
    u: BiPoly
    multiplier: BiPoly
    decomposition: FischerDecomposition

    def verify(self) -> bool:
        residual = self.data - self.u
        try:
            q = residual.exact_divide(self.boundary)
        except ArithmeticError:
            return False
        return q == self.multiplier and not laplacian_xy(self.u)


def dirichlet_ellipse(boundary: BiPoly, data: BiPoly) -> DirichletSolution:
    """Harmonic u with u = data on the ellipse ``boundary = 0``, exactly."""
    if boundary.vars != XY or data.vars != XY:
        raise ValueError("boundary and data must be polynomials in x, y")
    kind = classify_conic(boundary)
    if kind not in (ConicClass.ELLIPSE, ConicClass.CIRCLE):
        raise ValueError(f"boundary is a {kind}, not an ellipse")
    f = xy_to_zw(boundary)
    phi = xy_to_zw(data)
    dec = fischer_solve(f, phi)
    if not isinstance(dec, FischerDecomposition):
        raise AssertionError("an ellipse divides no harmonic polynomial; the solve cannot fail")
    u = zw_to_xy(dec.h1 + dec.h2)
    multiplier = zw_to_xy(dec.g)
    return DirichletSolution(boundary, data, u, multiplier, dec)


# ----------------------------------------------------------------------------
# the quartic in r


def _qmul(a: dict, b: dict, F: BiPoly, G: BiPoly) -> dict:
    # ring F[z,w][r, s, t] / (s^2 - F, t^2 - G); keys (deg_r, deg_s, deg_t)
    out: dict = {}
    for (r1, s1, t1), c1 in a.items():
        for (r2, s2, t2), c2 in b.items():
            c = c1 * c2
            s, t = s1 + s2, t1 + t2
            if s >= 2:
                c, s = c * F, s - 2
            if t >= 2:
                c, t = c * G, t - 2
            key = (r1 + r2, s, t)
            out[key] = out[key] + c if key in out else c
    return {k: v for k, v in out.items() if v}


@dataclass(frozen=True)
class QuarticExpansion:
    F: BiPoly
    G: BiPoly
    derived: dict[int, BiPoly]  # power of r -> coefficient
    printed: dict[int, BiPoly]

    @property
    def difference(self) -> dict[int, BiPoly]:
        keys = sorted(set(self.derived) | set(self.printed), reverse=True)
        zero = self.F.like({})
        out = {k: self.derived.get(k, zero) - self.printed.get(k, zero) for k in keys}
        return {k: v for k, v in out.items() if v}

    @property
    def agrees(self) -> bool:
        return not self.difference

    def is_even(self) -> bool:
        return all(k % 2 == 0 for k in self.derived)


def format_in_r(coeffs: dict[int, BiPoly]) -> str:
    """Polynomial in r, highest power first."""
    if not coeffs:
        return "0"
    out = []
    for k in sorted(coeffs, reverse=True):
        c = coeffs[k]
        mono = "" if k == 0 else ("r" if k == 1 else f"r^{k}")
        if c.is_constant():
            text = str(c)
            neg = text.startswith("-")
            mag = text[1:] if neg else text
            if mono:
                term = mono if mag == "1" else f"{mag}*{mono}"
            else:
                term = mag
        else:
            neg = False
            term = f"({c})*{mono}" if mono else f"({c})"
        if not out:
            out.append(f"-{term}" if neg else term)
        else:
            out.append(f" - {term}" if neg else f" + {term}")
    return "".join(out)


def quartic_expand(F: BiPoly, G: BiPoly) -> QuarticExpansion:
    """Expand (r+s+t)(r+s-t)(r-s+t)(r-s-t) with s^2 = F, t^2 = G.

    The s and t cancel completely, leaving r^4 - 2(F+G) r^2 + (F-G)^2.  The
    ``printed`` member holds r^4 - 4(F+G) r^2 + (F-G)^2 for comparison.
    """
    F._check(G)
    one = F.like({(0, 0): 1})

    def factor(ss: int, st: int) -> dict:
        return {(1, 0, 0): one, (0, 1, 0): one * ss, (0, 0, 1): one * st}

    prod = {(0, 0, 0): one}
    for ss, st in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        prod = _qmul(prod, factor(ss, st), F, G)
    residual = [k for k in prod if k[1] or k[2]]
    if residual:
        raise AssertionError(f"square roots survived the expansion: {residual}")
    derived = {k[0]: c for k, c in prod.items()}
    printed = {4: one, 2: (F + G) * -4, 0: (F - G) ** 2}
    printed = {k: v for k, v in printed.items() if v}
    return QuarticExpansion(F, G, derived, printed)
