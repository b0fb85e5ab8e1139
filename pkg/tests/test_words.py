import pytest
from hypothesis import given, strategies as st

from framedbraids.words import (
    BraidWord,
    Letter,
    Permutation,
    concat,
    exponent_sum,
    invert,
    permutation_of,
    sigma,
    tau,
)


def letters_strategy(n: int, max_len: int = 8):
    sigma_letters = st.builds(
        sigma,
        st.integers(1, max(n - 1, 1)),
        st.integers(-3, 3).filter(lambda e: e != 0),
    ) if n >= 2 else st.nothing()
    tau_letters = st.builds(
        tau, st.integers(1, n), st.integers(-3, 3).filter(lambda e: e != 0)
    )
    pool = st.one_of(sigma_letters, tau_letters) if n >= 2 else tau_letters
    return st.lists(pool, max_size=max_len).map(lambda ls: BraidWord(n, tuple(ls)))


words3 = letters_strategy(3)


def test_letter_validation():
    with pytest.raises(ValueError):
        Letter("sigma", 1, 0)
    with pytest.raises(ValueError):
        Letter("sigma", 0, 1)
    with pytest.raises(ValueError):
        Letter("rho", 1, 1)


def test_index_bounds_against_n():
    with pytest.raises(ValueError):
        BraidWord(3, (sigma(3),))
    with pytest.raises(ValueError):
        BraidWord(3, (tau(4),))
    BraidWord(3, (sigma(2), tau(3)))


def test_free_reduction_on_construction():
    w = BraidWord(2, (sigma(1), sigma(1, -1)))
    assert w.letters == ()
    w = BraidWord(3, (sigma(1), sigma(2), sigma(2)))
    assert w.letters == (sigma(1), sigma(2, 2))
    w = BraidWord(2, (tau(1), tau(1, 2)))
    assert w.letters == (tau(1, 3),)


def test_cascading_reduction():
    w = BraidWord(3, (sigma(1), sigma(2), sigma(2, -1), sigma(1, -1)))
    assert w.is_empty()


def test_concat_examples():
    assert concat(BraidWord(2, (sigma(1),)), BraidWord(2, (sigma(1, -1),))).is_empty()
    assert concat(
        BraidWord(3, (sigma(1), sigma(2))), BraidWord(3, (sigma(2),))
    ).letters == (sigma(1), sigma(2, 2))
    assert concat(BraidWord(2, (tau(1),)), BraidWord(2, (tau(1, 2),))).letters == (
        tau(1, 3),
    )


def test_concat_strand_mismatch():
    with pytest.raises(ValueError):
        concat(BraidWord(2), BraidWord(3))


def test_invert_examples():
    w = BraidWord(3, (sigma(1), sigma(2)))
    assert invert(w).letters == (sigma(2, -1), sigma(1, -1))
    assert invert(BraidWord(3)).is_empty()
    w = BraidWord(2, (tau(1), sigma(1, 2)))
    assert invert(w).letters == (sigma(1, -2), tau(1, -1))


def test_permutation_examples():
    assert permutation_of(BraidWord(2, (sigma(1),))).images == (2, 1)
    # odd exponent behaves like a single crossing; cross-check by expansion
    run = BraidWord(2, (sigma(1, -3),))
    expanded = BraidWord(2, (sigma(1, -1), sigma(1, -1), sigma(1, -1)))
    assert permutation_of(run) == permutation_of(expanded) == Permutation((2, 1))
    assert permutation_of(BraidWord(3, (tau(1, 5),))).is_identity()


def test_exponent_sum_examples():
    assert exponent_sum(BraidWord(2, (tau(1, -1), sigma(1, -3)))) == -4
    assert exponent_sum(BraidWord(1)) == 0
    assert exponent_sum(BraidWord(3, (sigma(1), sigma(2, -1), tau(2, 2)))) == 2


@given(words3, words3, words3)
def test_concat_associative(a, b, c):
    assert concat(concat(a, b), c) == concat(a, concat(b, c))


@given(words3)
def test_identity_and_inverse(a):
    e = BraidWord(3)
    assert concat(a, e) == a == concat(e, a)
    assert concat(a, invert(a)).is_empty()
    assert invert(invert(a)) == a


@given(words3, words3)
def test_permutation_homomorphism(a, b):
    lhs = permutation_of(concat(a, b))
    rhs = permutation_of(b).compose(permutation_of(a))
    assert lhs == rhs


@given(words3, words3)
def test_exponent_sum_additive(a, b):
    assert exponent_sum(concat(a, b)) == exponent_sum(a) + exponent_sum(b)
    assert exponent_sum(invert(a)) == -exponent_sum(a)


def test_permutation_cycles():
    p = Permutation((2, 1, 3))
    assert p.cycles() == ((1, 2), (3,))
    assert p.inverse() == p
    q = Permutation((2, 3, 1))
    assert q.cycles() == ((1, 2, 3),)
    assert q.compose(q.inverse()).is_identity()


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 3))
