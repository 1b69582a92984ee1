"""Finite-field experiments: Frobenius degrees, zero pairs, and the
two-subfield dimension count.

Over F_p the subfield generated by x is F_{p^d} with d the Frobenius degree
of x, so "a lies in F_p[b]" is just "deg a divides deg b".  That turns the
zero-pair refutation into enumeration over two embedded subfields.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from math import lcm

from .bipoly import BiPoly
from .exactla import ExactMatrix, rank
from .scalar import (
    ExtField,
    ExtFieldElement,
    FieldMismatchError,
    PrimeField,
    PrimeFieldElement,
    embed_subfield,
    ext_field,
    prime_field,
    subfield_elements,
)
from .verdict import NOT_KS, ZERO_PAIR, StructuralVerdict

DEFAULT_ENUM_CAP = 2**24
DEFAULT_SEED = 20150101

SPLITTING_NOTE = (
    "Every finite extension of F_p is normal, so two conjugate roots always generate "
    "the same subfield; equal-degree profiles can never give incomparable subfields and "
    "only profiles (d1, d2) with d1 not dividing d2 and d2 not dividing d1 are swept."
)


class BudgetExceeded(RuntimeError):
    def __init__(self, cap: int, needed: int, profile: tuple[int, int]):
        self.cap, self.needed, self.profile = cap, needed, profile
        super().__init__(f"profile {profile} needs {needed} pairs, above the enumeration cap {cap} (KSLAB_ENUM_CAP)")


def enumeration_cap() -> int:
    raw = os.environ.get("KSLAB_ENUM_CAP")
    return int(raw) if raw else DEFAULT_ENUM_CAP


def frobenius_degree(x) -> int:
    """Least d >= 1 with x^(p^d) = x."""
    if isinstance(x, (PrimeFieldElement, int)):
        return 1
    if not isinstance(x, ExtFieldElement):
        raise FieldMismatchError(f"{x!r} is not a finite-field element")
    y = x
    for d in range(1, x.field.k + 1):
        y = y.frobenius()
        if y == x:
            return d
    raise AssertionError("Frobenius has order k on F_{p^k}")


def subfield_contains(x, y) -> bool:
    """Whether x lies in F_p[y]."""
    fx = x.field if isinstance(x, ExtFieldElement) else None
    fy = y.field if isinstance(y, ExtFieldElement) else None
    if fx is not None and fy is not None and fx != fy:
        raise FieldMismatchError(f"{fx.name} and {fy.name} are different towers")
    return frobenius_degree(y) % frobenius_degree(x) == 0


def containment(deg_a: int, deg_b: int) -> str:
    a_in_b = deg_b % deg_a == 0
    b_in_a = deg_a % deg_b == 0
    if a_in_b and b_in_a:
        return "both"
    if a_in_b:
        return "a-in-F[b]"
    if b_in_a:
        return "b-in-F[a]"
    return "neither"


@dataclass(frozen=True)
class ZeroPairWitness:
    f: BiPoly
    a: ExtFieldElement
    b: ExtFieldElement
    deg_a: int
    deg_b: int
    containment: str

    @property
    def p(self) -> int:
        return self.a.field.p

    @property
    def k(self) -> int:
        return self.a.field.k

    def verify(self) -> bool:
        da, db = frobenius_degree(self.a), frobenius_degree(self.b)
        return (
            self.f.evaluate(self.a, self.b) == 0
            and (da, db) == (self.deg_a, self.deg_b)
            and containment(da, db) == self.containment
        )

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "modulus": list(self.a.field.modulus),
            "a": list(self.a.coeffs),
            "b": list(self.b.coeffs),
            "deg_a": self.deg_a,
            "deg_b": self.deg_b,
            "containment": self.containment,
            "f": str(self.f),
        }


def _exact_degree_elements(d: int, tower: ExtField) -> list[ExtFieldElement]:
    return [x for x in subfield_elements(d, tower) if frobenius_degree(x) == d]


def zero_pair_search(f: BiPoly, profile: tuple[int, int], cap: int | None = None) -> ZeroPairWitness | None:
    """First zero (a, b) of f with Frobenius degrees exactly ``profile``.

    a runs over the degree-d1 subfield of F_{p^k}, k = lcm(d1, d2), b over
    the degree-d2 subfield, both in element order, a outermost.
    """
    if not isinstance(f.field, PrimeField):
        raise ValueError(f"zero-pair search needs a polynomial over F_p, not {f.field.name}")
    d1, d2 = profile
    if d1 < 1 or d2 < 1:
        raise ValueError("profile degrees must be >= 1")
    p = f.field.p
    cap = enumeration_cap() if cap is None else cap
    needed = p**d1 * p**d2
    if needed > cap:
        raise BudgetExceeded(cap, needed, profile)
    tower = ext_field(p, lcm(d1, d2))
    A = _exact_degree_elements(d1, tower)
    B = _exact_degree_elements(d2, tower)
    if not A or not B or not f:
        return None
    by_w: dict[int, dict[int, int]] = {}
    for (n, m), c in f.items():
        by_w.setdefault(m, {})[n] = c.value
    dz = max(f.deg_z, 0)
    b_powers = []
    for b in B:
        pw = [tower.one]
        for _ in range(f.deg_w):
            pw.append(pw[-1] * b)
        b_powers.append(pw)
    for a in A:
        a_pow = [tower.one]
        for _ in range(dz):
            a_pow.append(a_pow[-1] * a)
        # f(a, w) = sum_m C_m w^m
        coeffs = []
        for m, row in sorted(by_w.items()):
            acc = tower.zero
            for n, c in row.items():
                acc = acc + a_pow[n].scale(c)
            if acc:
                coeffs.append((m, acc, acc.coeffs[1:] == (0,) * (tower.k - 1)))
        for b, pw in zip(B, b_powers):
            total = tower.zero
            for m, cm, is_const in coeffs:
                total = total + (pw[m].scale(cm.coeffs[0]) if is_const else pw[m] * cm)
            if not total:
                return ZeroPairWitness(f, a, b, d1, d2, containment(d1, d2))
    return None


def incomparable_profiles(max_ext: int) -> list[tuple[int, int]]:
    """Profiles (d1, d2) with neither dividing the other and lcm <= max_ext."""
    out = [
        (d1, d2)
        for d1 in range(1, max_ext + 1)
        for d2 in range(1, max_ext + 1)
        if d2 % d1 and d1 % d2 and lcm(d1, d2) <= max_ext
    ]
    return sorted(out, key=lambda pr: (lcm(*pr), pr))


def ks_refute_by_zeros(f: BiPoly, max_ext: int, cap: int | None = None) -> StructuralVerdict | None:
    """not-KS verdict from a zero whose coordinates generate incomparable subfields."""
    if max_ext < 1:
        raise ValueError("max_ext must be >= 1")
    for profile in incomparable_profiles(max_ext):
        wit = zero_pair_search(f, profile, cap)
        if wit is not None:
            return StructuralVerdict(ZERO_PAIR, NOT_KS, {"zero_pair": wit}, note=SPLITTING_NOTE)
    return None


# ----------------------------------------------------------------------------
# dimension counts for two subfields of one finite algebra


@dataclass
class PropKeyReport:
    p: int
    k: int
    trials: int
    seed: int
    hypothesis_met: int = 0
    violations: int = 0
    degree_mismatches: int = 0
    profiles: dict[tuple[int, int], list[int]] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "trials": self.trials,
            "seed": self.seed,
            "hypothesis_met": self.hypothesis_met,
            "violations": self.violations,
            "degree_mismatches": self.degree_mismatches,
            "profiles": [
                {"deg_a": da, "deg_b": db, "samples": v[0], "hypothesis_met": v[1]}
                for (da, db), v in sorted(self.profiles.items())
            ],
        }


def _span_dim(vectors: list[ExtFieldElement], Fp: PrimeField) -> int:
    return rank(ExactMatrix([list(v.coeffs) for v in vectors], Fp))


def _divisors(k: int) -> list[int]:
    return [d for d in range(1, k + 1) if k % d == 0]


def proposition_key_experiment(p: int, k: int, trials: int, seed: int = DEFAULT_SEED) -> PropKeyReport:
    """Sample (a, b) in F_{p^k}; when dim(F[a] + F[b]) equals dim F[a, b],
    one of F[a], F[b] must contain the other.

    Each trial first draws the subfield degrees of a and b uniformly from the
    divisors of k, then a uniform element of that subfield, so every degree
    profile is exercised rather than almost always (k, k).
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    tower = ext_field(p, k)
    Fp = prime_field(p)
    rng = random.Random(seed)
    divs = _divisors(k)
    report = PropKeyReport(p, k, trials, seed)
    for _ in range(trials):
        da, db = rng.choice(divs), rng.choice(divs)
        a = embed_subfield(ext_field(p, da).random(rng), tower)
        b = embed_subfield(ext_field(p, db).random(rng), tower)
        pa = [tower.one]
        pb = [tower.one]
        for _ in range(k - 1):
            pa.append(pa[-1] * a)
            pb.append(pb[-1] * b)
        dim_a = _span_dim(pa, Fp)
        dim_b = _span_dim(pb, Fp)
        dim_sum = _span_dim(pa + pb, Fp)
        dim_alg = _span_dim([x * y for x in pa for y in pb], Fp)
        deg_a, deg_b = frobenius_degree(a), frobenius_degree(b)
        if (dim_a, dim_b) != (deg_a, deg_b):
            report.degree_mismatches += 1
        slot = report.profiles.setdefault((deg_a, deg_b), [0, 0])
        slot[0] += 1
        if dim_sum == dim_alg:
            report.hypothesis_met += 1
            slot[1] += 1
            if not (subfield_contains(a, b) or subfield_contains(b, a)):
                report.violations += 1
    return report
