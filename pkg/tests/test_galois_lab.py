import time

import pytest
import sympy
from hypothesis import given, strategies as st

from kslab.bipoly import BiPoly
from kslab.galois_lab import (
    DEFAULT_SEED,
    BudgetExceeded,
    containment,
    frobenius_degree,
    incomparable_profiles,
    ks_refute_by_zeros,
    proposition_key_experiment,
    subfield_contains,
    zero_pair_search,
)
from kslab.ks_lab import degree_divisibility_criterion
from kslab.parser import parse_poly
from kslab.scalar import FieldMismatchError, embed_subfield, ext_field, find_irreducible, prime_field
from kslab.verdict import CONJECTURE_HOLDS, NOT_KS

F7 = prime_field(7)
F7_6 = ext_field(7, 6)


def test_frobenius_degree_examples():
    assert frobenius_degree(F7(3)) == 1
    assert frobenius_degree(F7_6.zero) == 1
    assert frobenius_degree(embed_subfield(ext_field(7, 2).generator, F7_6)) == 2
    assert frobenius_degree(F7_6.generator) == 6


@given(st.integers(0, 3**6 - 1))
def test_frobenius_degree_divides_k(n):
    x = ext_field(3, 6).from_index(n)
    d = frobenius_degree(x)
    assert 6 % d == 0
    assert x ** (3**d) == x
    assert all(x ** (3**e) != x for e in range(1, d))


def test_subfield_contains_examples():
    x2 = embed_subfield(ext_field(7, 2).generator, F7_6)
    y3 = embed_subfield(ext_field(7, 3).generator, F7_6)
    assert subfield_contains(F7_6(3), y3)
    assert not subfield_contains(x2, y3)
    assert subfield_contains(x2, F7_6.generator)
    with pytest.raises(FieldMismatchError):
        subfield_contains(x2, ext_field(7, 2).generator)


@given(st.integers(0, 2**6 - 1), st.integers(0, 2**6 - 1), st.integers(0, 2**6 - 1))
def test_subfield_contains_is_preorder(i, j, k):
    F = ext_field(2, 6)
    a, b, c = F.from_index(i), F.from_index(j), F.from_index(k)
    assert subfield_contains(a, a)
    if subfield_contains(a, b) and subfield_contains(b, c):
        assert subfield_contains(a, c)


def test_z2_w3_witness():
    f = parse_poly("z^2 + w^3 - 5", F7)
    t0 = time.perf_counter()
    wit = zero_pair_search(f, (2, 3))
    assert time.perf_counter() - t0 < 5
    assert wit.containment == "neither" and (wit.deg_a, wit.deg_b) == (2, 3)
    assert wit.verify()
    # frozen: first pair in element order, with modulus t^6 + 2
    assert wit.a.field.modulus == (2, 0, 0, 0, 0, 0, 1)
    assert (wit.a.coeffs, wit.b.coeffs) == ((0, 0, 0, 3, 0, 0), (0, 0, 3, 0, 0, 0))


def test_z2_w3_witness_independent_check():
    # a = 3t^3, b = 3t^2 in F_7[t]/(t^6 + 2)
    t = sympy.Symbol("t")
    mod = sympy.Poly(t**6 + 2, t, modulus=7)
    a = sympy.Poly(3 * t**3, t, modulus=7)
    b = sympy.Poly(3 * t**2, t, modulus=7)
    val = (a**2 + b**3 - 5).rem(mod)
    assert val.is_zero
    assert (a**2).rem(mod) == sympy.Poly(3, t, modulus=7)
    assert (b**3).rem(mod) == sympy.Poly(2, t, modulus=7)
    # 3 is a non-square and 2 a non-cube mod 7
    assert 3 not in {x * x % 7 for x in range(7)}
    assert 2 not in {x**3 % 7 for x in range(7)}


@pytest.mark.parametrize("profile", [(1, 2), (2, 3), (2, 1)])
def test_unit_circle_has_no_split_zero(profile):
    assert zero_pair_search(parse_poly("zw - 1", F7), profile) is None


def test_diagonal_zero():
    wit = zero_pair_search(parse_poly("z - w", prime_field(5)), (1, 1))
    assert wit.a == 0 and wit.b == 0 and wit.containment == "both"


def test_refuter_examples():
    v = ks_refute_by_zeros(parse_poly("z^2 + w^3 - 5", F7), 6)
    assert v.conclusion == NOT_KS and v.refutes
    wit = v.witness["zero_pair"]
    assert (wit.deg_a, wit.deg_b) == (2, 3) and wit.verify()
    assert "normal" in v.note
    assert ks_refute_by_zeros(parse_poly("zw - 1", F7), 6) is None
    assert ks_refute_by_zeros(parse_poly("z + w", prime_field(5)), 6) is None


def test_budget_is_enforced(monkeypatch):
    monkeypatch.setenv("KSLAB_ENUM_CAP", "100")
    with pytest.raises(BudgetExceeded) as info:
        zero_pair_search(parse_poly("z^2 + w^3 - 5", F7), (2, 3))
    assert info.value.cap == 100 and info.value.needed == 7**5


def test_profiles_and_containment():
    assert incomparable_profiles(6)[:2] == [(2, 3), (3, 2)]
    assert all(a % b and b % a for a, b in incomparable_profiles(12))
    assert containment(2, 3) == "neither"
    assert containment(2, 6) == "a-in-F[b]"
    assert containment(3, 1) == "b-in-F[a]"
    assert containment(2, 2) == "both"


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("d1,d2", [(2, 3), (3, 2)])
def test_degree_criterion_agrees_with_zero_refuter(p, d1, d2):
    h1 = find_irreducible(p, d1)
    h2 = find_irreducible(p, d2)
    Fp = prime_field(p)
    f = BiPoly({(n, 0): c for n, c in enumerate(h1) if c}, Fp) + BiPoly({(0, m): c for m, c in enumerate(h2) if c}, Fp)
    crit = degree_divisibility_criterion(d1, d2)
    v = ks_refute_by_zeros(f, 6)
    assert crit.conclusion == CONJECTURE_HOLDS
    assert v is not None and v.conclusion == NOT_KS
    assert v.witness["zero_pair"].verify()


def test_proposition_key_examples():
    rep = proposition_key_experiment(7, 6, 1000)
    assert rep.seed == DEFAULT_SEED
    assert rep.violations == 0 and rep.degree_mismatches == 0
    profiles = rep.to_json()["profiles"]
    row = next(r for r in profiles if (r["deg_a"], r["deg_b"]) == (2, 3))
    assert row["samples"] > 0 and row["hypothesis_met"] == 0
    row = next(r for r in profiles if (r["deg_a"], r["deg_b"]) == (1, 1))
    assert row["hypothesis_met"] == row["samples"]


def test_proposition_key_is_deterministic():
    a = proposition_key_experiment(3, 4, 50, seed=11).to_json()
    b = proposition_key_experiment(3, 4, 50, seed=11).to_json()
    assert a == b
