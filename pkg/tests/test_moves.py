import random

import pytest

from framedbraids.closure import INTEGER, closure_signature, signatures_match, with_adjusted_framing
from framedbraids.framed import FramedBraid, framed_equal, inverse, multiply, normalize, spell
from framedbraids.garside import are_equal
from framedbraids.moves import (
    MoveDescriptor,
    apply_L_move,
    apply_M_move,
    apply_RL_move,
    apply_RM_move,
    apply_integer_RL_move,
    apply_move,
    conjugate,
    include_natural,
    over_inclusion,
    solve_framing_transfer,
    tau_conjugation_as_RL_sequence,
    under_inclusion,
)
from framedbraids.parser import parse
from framedbraids.words import (
    BraidWord,
    Permutation,
    concat,
    exponent_sum,
    permutation_of,
    sigma,
)

from oracles import brute_transfer
from test_framed import random_framed


def random_perm(rng: random.Random, m: int) -> Permutation:
    images = list(range(1, m + 1))
    rng.shuffle(images)
    return Permutation(tuple(images))


def test_descriptor_validation():
    with pytest.raises(ValueError):
        MoveDescriptor("bogus")
    with pytest.raises(ValueError):
        MoveDescriptor("RL_over", sign=2)
    with pytest.raises(ValueError):
        MoveDescriptor("IntRL_over", k=3)


def test_include_natural():
    a = parse("s1", 2)
    assert include_natural(a, 1) == BraidWord(3, (sigma(1),))
    assert include_natural(BraidWord(2), 3).n == 5
    with pytest.raises(ValueError):
        include_natural(a, -1)


def test_inclusion_edge_cases():
    a = parse("s1 s2^-1", 3)
    assert over_inclusion(a, 4) == include_natural(a, 1)
    assert under_inclusion(a, 4) == include_natural(a, 1)
    assert are_equal(over_inclusion(a, 1), under_inclusion(a, 1))
    assert over_inclusion(BraidWord(3), 2).is_empty()


def _crossing_positions(word: BraidWord, n_plus: int, new_top: int):
    """Yield (letter sign, over_entrant, under_entrant) for unit crossings."""
    pos2strand = list(range(n_plus + 1))
    for unit in word.unit_letters():
        if unit.kind != "sigma":
            continue
        i = unit.index
        lower, upper = pos2strand[i], pos2strand[i + 1]
        over = upper if unit.exponent > 0 else lower
        under = lower if unit.exponent > 0 else upper
        yield over, under
        pos2strand[i], pos2strand[i + 1] = pos2strand[i + 1], pos2strand[i]


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_inclusion_postconditions(i):
    rng = random.Random(40 + i)
    for _ in range(20):
        n = 3
        word = BraidWord(
            n, tuple(sigma(rng.randint(1, n - 1), rng.choice([-1, 1])) for _ in range(6))
        )
        for builder, wants_over in ((over_inclusion, True), (under_inclusion, False)):
            wide = builder(word, i)
            perm = permutation_of(wide)
            assert perm.apply(i) == i
            base = permutation_of(word)
            for j in range(1, n + 2):
                if j == i:
                    continue
                old = j if j < i else j - 1
                image = base.apply(old)
                assert perm.apply(j) == (image if image < i else image + 1)
            for over, under in _crossing_positions(wide, n + 1, i):
                if i in (over, under):
                    assert (over == i) == wants_over


def test_L_move_matches_inclusion_form():
    rng = random.Random(41)
    for _ in range(60):
        n = rng.randint(1, 5)
        word = BraidWord(
            n,
            tuple(
                sigma(rng.randint(1, n - 1), rng.choice([-2, -1, 1, 2]))
                for _ in range(rng.randint(0, 7) if n >= 2 else 0)
            ),
        )
        split = rng.randint(0, len(word.letters))
        i = rng.randint(1, n)
        sign = rng.choice([-1, 1])
        a1 = BraidWord(n, word.letters[:split])
        a2 = BraidWord(n, word.letters[split:])
        crossing = BraidWord(n + 1, (sigma(i, sign),))
        for kind, inc in (("L_over", over_inclusion), ("L_under", under_inclusion)):
            moved = apply_L_move(word, MoveDescriptor(kind, split=split, index=i, sign=sign))
            assert are_equal(moved, concat(concat(inc(a1, i + 1), crossing), inc(a2, i + 1)))


def test_L_move_trivial_instance():
    moved = apply_L_move(BraidWord(1), MoveDescriptor("L_over", split=0, index=1, sign=1))
    assert moved == BraidWord(2, (sigma(1),))
    sig = closure_signature(normalize(moved))
    assert sig.component_count == 1 and sig.components[0].framing == 1


def test_L_move_unframed_closure_and_writhe():
    rng = random.Random(42)
    for _ in range(40):
        n = rng.randint(2, 5)
        word = BraidWord(
            n, tuple(sigma(rng.randint(1, n - 1), rng.choice([-1, 1])) for _ in range(8))
        )
        split = rng.randint(0, len(word.letters))
        i = rng.randint(1, n)
        sign = rng.choice([-1, 1])
        kind = rng.choice(["L_over", "L_under"])
        moved = apply_L_move(word, MoveDescriptor(kind, split=split, index=i, sign=sign))
        assert exponent_sum(moved) == exponent_sum(word) + sign
        before = closure_signature(normalize(word))
        after = closure_signature(normalize(moved))
        assert after.component_count == before.component_count
        adjusted = with_adjusted_framing(after, i + 1, -sign)
        assert signatures_match(before, adjusted)


def test_RL_move_examples():
    moved = apply_RL_move(
        FramedBraid.identity(1), MoveDescriptor("RL_over", split=0, index=1, sign=1)
    )
    assert framed_equal(moved, normalize(parse("t1^-1 s1", 2)))
    sig = closure_signature(moved)
    assert sig.component_count == 1 and sig.components[0].framing == 0


def test_RL_move_signature_and_exponent_sum():
    rng = random.Random(43)
    for _ in range(120):
        n = rng.randint(1, 5)
        braid = random_framed(rng, n, rng.randint(0, 10))
        word_len = len(spell(braid).letters)
        d = MoveDescriptor(
            rng.choice(["RL_over", "RL_under"]),
            split=rng.randint(0, word_len),
            index=rng.randint(1, n),
            sign=rng.choice([-1, 1]),
        )
        moved = apply_RL_move(braid, d)
        assert signatures_match(closure_signature(braid), closure_signature(moved))
        assert exponent_sum(spell(moved)) == exponent_sum(spell(braid))


def test_integer_RL_move():
    rng = random.Random(44)
    # k = 0 reduces to the classical L-move word
    braid = normalize(parse("t1 s1^2", 2))
    d0 = MoveDescriptor("IntRL_over", split=1, index=1, sign=1, k=0)
    dl = MoveDescriptor("L_over", split=1, index=1, sign=1)
    assert framed_equal(
        apply_integer_RL_move(braid, d0), normalize(apply_L_move(spell(braid), dl))
    )
    for _ in range(120):
        n = rng.randint(1, 5)
        braid = random_framed(rng, n, rng.randint(0, 10))
        word_len = len(spell(braid).letters)
        d = MoveDescriptor(
            rng.choice(["IntRL_over", "IntRL_under"]),
            split=rng.randint(0, word_len),
            index=rng.randint(1, n),
            sign=rng.choice([-1, 1]),
            k=rng.choice([-1, 0, 1]),
        )
        moved = apply_integer_RL_move(braid, d)
        assert signatures_match(
            closure_signature(braid, INTEGER), closure_signature(moved, INTEGER)
        )
    # applying the move word then its inverse word is the identity
    moved = apply_integer_RL_move(braid, d)
    assert framed_equal(multiply(moved, inverse(moved)), FramedBraid.identity(moved.n))


def test_RM_move():
    moved = apply_RM_move(FramedBraid.identity(1), 1)
    assert framed_equal(moved, normalize(parse("t1^-1 s1", 2)))
    rng = random.Random(45)
    for _ in range(60):
        n = rng.randint(1, 5)
        braid = random_framed(rng, n, rng.randint(0, 10))
        sign = rng.choice([-1, 1])
        assert signatures_match(
            closure_signature(braid), closure_signature(apply_RM_move(braid, sign))
        )
        # negative control: the plain M-move shifts the new strand's component
        plain = apply_M_move(braid, sign)
        after = closure_signature(plain)
        assert not signatures_match(closure_signature(braid), after)
        assert signatures_match(
            closure_signature(braid), with_adjusted_framing(after, n + 1, -sign)
        )


def test_conjugation():
    rng = random.Random(46)
    a = normalize(parse("t1 s1", 2))
    assert framed_equal(conjugate(a, FramedBraid.identity(2)), a)
    assert framed_equal(conjugate(a, normalize(parse("s1", 2))), normalize(parse("t2 s1", 2)))
    for _ in range(60):
        n = rng.randint(1, 4)
        braid = random_framed(rng, n, rng.randint(0, 8))
        g = random_framed(rng, n, rng.randint(0, 8))
        assert signatures_match(
            closure_signature(braid), closure_signature(conjugate(braid, g))
        )


def test_tau_conjugation_sequence():
    rng = random.Random(47)
    steps = tau_conjugation_as_RL_sequence(FramedBraid.identity(2), 1, 1)
    assert framed_equal(steps[-1][1], FramedBraid.identity(2))

    a = normalize(parse("t1 s1", 2))
    twist = FramedBraid(2, (1, 0), BraidWord(2))
    steps = tau_conjugation_as_RL_sequence(a, 1, 1)
    assert framed_equal(steps[-1][1], conjugate(a, twist))

    for _ in range(60):
        n = rng.randint(1, 4)
        braid = random_framed(rng, n, rng.randint(0, 8))
        i = rng.randint(1, n)
        exp = rng.choice([-1, 1])
        before = closure_signature(braid)
        steps = tau_conjugation_as_RL_sequence(braid, i, exp)
        for _, element in steps:
            assert signatures_match(before, closure_signature(element))
        twist = FramedBraid(n, tuple(exp if j == i - 1 else 0 for j in range(n)), BraidWord(n))
        assert framed_equal(steps[-1][1], conjugate(braid, twist))
        # the middle isotopy step rewrites the same group element
        assert framed_equal(steps[0][1], steps[1][1])


def test_solve_framing_transfer_examples():
    p = Permutation.identity(3)
    assert solve_framing_transfer(p, (1, 2, 3), (1, 2, 3)) == (0, 0, 0)

    swap = Permutation((2, 1))
    r = solve_framing_transfer(swap, (2, 0), (1, 1))
    assert r is not None
    assert all(2 - r[0] == 1 - r[swap.apply(1) - 1] for _ in (0,))
    brute = brute_transfer((2, 1), (2, 0), (1, 1))
    assert brute is not None
    assert r == (0, -1)

    assert solve_framing_transfer(swap, (2, 0), (0, 0)) is None
    assert brute_transfer((2, 1), (2, 0), (0, 0)) is None


def test_solve_framing_transfer_against_brute_force():
    rng = random.Random(48)
    for _ in range(150):
        m = rng.randint(1, 3)
        p = random_perm(rng, m)
        delta = tuple(rng.randint(-1, 1) for _ in range(m))
        kappa = tuple(rng.randint(-1, 1) for _ in range(m))
        r = solve_framing_transfer(p, delta, kappa)
        brute = brute_transfer(p.images, delta, kappa)
        assert (r is None) == (brute is None)
        if r is not None:
            assert all(
                delta[i] - r[i] == kappa[i] - r[p.apply(i + 1) - 1] for i in range(m)
            )
            assert all(r[cycle[0] - 1] == 0 for cycle in p.cycles())


def test_solve_framing_transfer_length_mismatch():
    with pytest.raises(ValueError):
        solve_framing_transfer(Permutation.identity(2), (1,), (1, 2))


def test_apply_move_dispatch():
    braid = normalize(parse("t1 s1", 2))
    with pytest.raises(ValueError):
        apply_move(braid, MoveDescriptor("Conjugation"))
    result = apply_move(braid, MoveDescriptor("Conjugation", conjugator=normalize(parse("s1", 2))))
    assert framed_equal(result, normalize(parse("t2 s1", 2)))
    final = apply_move(braid, MoveDescriptor("TauConjugation", index=1, sign=1))
    assert framed_equal(final, conjugate(braid, FramedBraid(2, (1, 0), BraidWord(2))))
