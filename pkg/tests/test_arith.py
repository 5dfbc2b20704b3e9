import pytest
from hypothesis import given, strategies as st

from oracles import is_prime_trial
from primefree.arith import (decimal_digits_bound, divisors, floor_pow_div, int_kth_root,
                             is_probable_prime, legendre, mod_pow, primes_up_to,
                             smallest_prime_factor)
from primefree.errors import DomainError


@pytest.mark.parametrize("args, expected", [
    ((3, 8, 48), 33),
    ((7, 10, 11), 1),
    ((5, 0, 2), 1),
    ((123456, 0, 97), 1),
])
def test_mod_pow_examples(args, expected):
    assert mod_pow(*args) == expected


def test_mod_pow_rejects_zero_modulus():
    with pytest.raises(DomainError):
        mod_pow(3, 2, 0)


def test_mod_pow_exhaustive_small():
    for n in range(0, 201, 7):
        for t in range(0, 201, 3):
            for d in range(1, 201, 11):
                assert mod_pow(n, t, d) == n ** t % d


@pytest.mark.parametrize("s, k, expected", [
    (33, 2, (5, False)),
    (0, 2, (0, True)),
    (0, 7, (0, True)),
    (9, 2, (3, True)),
    (1, 5, (1, True)),
    (900, 2, (30, True)),
    (512, 3, (8, True)),
    (10 ** 60 - 1, 3, (10 ** 20 - 1, False)),
])
def test_int_kth_root_examples(s, k, expected):
    assert int_kth_root(s, k) == expected


@given(st.integers(min_value=0, max_value=10 ** 80), st.integers(min_value=1, max_value=12))
def test_int_kth_root_brackets(s, k):
    root, exact = int_kth_root(s, k)
    if exact:
        assert root ** k == s
    else:
        assert root ** k < s < (root + 1) ** k


@given(st.integers(min_value=0, max_value=10 ** 30), st.integers(min_value=2, max_value=9))
def test_int_kth_root_exact_on_powers(b, k):
    assert int_kth_root(b ** k, k) == (b, True)


@pytest.mark.parametrize("x, expected", [(7, True), (1, False), (136, False), (0, False),
                                         (2, True), (97, True), (2 ** 61 - 1, True),
                                         (2 ** 89 - 1, True), (2 ** 64 + 1, False)])
def test_is_probable_prime_examples(x, expected):
    assert is_probable_prime(x) is expected


def test_is_probable_prime_matches_trial_division_to_a_million():
    sieve = set(primes_up_to(10 ** 6))
    assert all(is_probable_prime(x) == (x in sieve) for x in range(10 ** 6 + 1))
    # the sieve itself is checked against trial division on a sample
    assert all((x in sieve) == is_prime_trial(x) for x in range(0, 10 ** 6 + 1, 997))


def test_is_probable_prime_strong_pseudoprimes():
    # Strong pseudoprimes to several small bases; all composite.
    for x in (2047, 3215031751, 3825123056546413051, 318665857834031151167461):
        assert not is_probable_prime(x)


def test_is_probable_prime_large_products():
    p, q = 2 ** 127 - 1, 2 ** 107 - 1
    assert is_probable_prime(p) and is_probable_prime(q)
    assert not is_probable_prime(p * q)


def test_legendre_examples():
    assert legendre(4, 5) == 1
    assert legendre(2, 5) == -1
    assert legendre(0, 7) == 0


@pytest.mark.parametrize("p", [2, 1, 9, 15])
def test_legendre_domain(p):
    with pytest.raises(DomainError):
        legendre(1, p)


def test_legendre_nonresidue_has_no_root():
    for p in primes_up_to(101)[1:]:
        squares = {x * x % p for x in range(p)}
        for a in range(p):
            sym = legendre(a, p)
            assert sym == (0 if a == 0 else 1 if a in squares else -1)


@pytest.mark.parametrize("t, expected", [(8, [1, 2, 4, 8]), (1, [1]),
                                         (30, [1, 2, 3, 5, 6, 10, 15, 30]),
                                         (36, [1, 2, 3, 4, 6, 9, 12, 18, 36])])
def test_divisors(t, expected):
    assert divisors(t) == expected


def test_divisors_brute():
    for t in range(1, 500):
        assert divisors(t) == [k for k in range(1, t + 1) if t % k == 0]


@pytest.mark.parametrize("args, expected", [((4, 2, 5), 3), ((0, 5, 7), 0), ((2, 10, 40), 25),
                                            ((3, 8, 48), 136), ((5, 8, 80), 4882),
                                            ((3, 8, 112), 58)])
def test_floor_pow_div(args, expected):
    assert floor_pow_div(*args) == expected


@given(st.integers(0, 10 ** 7), st.integers(2, 60), st.integers(2, 10 ** 7))
def test_floor_pow_div_brackets(n, t, d):
    v = floor_pow_div(n, t, d)
    assert d * v <= n ** t < d * (v + 1)


def test_smallest_prime_factor():
    assert [smallest_prime_factor(m) for m in (2, 9, 15, 49, 97, 221)] == [2, 3, 3, 7, 97, 13]


@given(st.integers(1, 10 ** 6), st.integers(1, 50))
def test_digit_bound_is_upper_bound(n, t):
    assert len(str(n ** t)) <= decimal_digits_bound(n, t)
