import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from brunnian.free_lie import (
    Alphabet,
    AssocPoly,
    LieElement,
    bracket,
    element_text,
    from_associative,
    homogeneous_component,
    is_lyndon,
    lyndon_words,
    lyndon_words_int,
    monomial_degree,
    monomial_from_json,
    monomial_letters,
    monomial_text,
    monomial_to_element,
    monomial_to_json,
    parse_monomial,
    standard_bracketing,
    substitute,
    to_associative,
)
from brunnian.ranks import witt_rank

AB = Alphabet(("a", "b"))
ABC = Alphabet(("a", "b", "c"))


def el(alphabet, text):
    return monomial_to_element(parse_monomial(text), alphabet)


def gen(alphabet, s):
    return LieElement.generator(alphabet, s)


def brute_lyndon(letters, deg_max):
    out = []
    for q in range(1, deg_max + 1):
        for w in itertools.product(letters, repeat=q):
            if all(w < w[i:] + w[:i] for i in range(1, q)):
                out.append(w)
    return out


def elements(alphabet, deg_max):
    words = lyndon_words_int(len(alphabet), deg_max)
    return st.dictionaries(st.sampled_from(words), st.integers(-4, 4), max_size=4).map(
        lambda d: LieElement._wrap(alphabet, {w: c for w, c in d.items() if c}))


# enumeration

def test_lyndon_words_examples():
    assert lyndon_words(AB, 3) == [("a",), ("b",), ("a", "b"), ("a", "a", "b"), ("a", "b", "b")]
    assert lyndon_words(Alphabet(("a",)), 5) == [("a",)]
    counts = [sum(1 for w in lyndon_words(AB, 5) if len(w) == q) for q in range(1, 6)]
    assert counts == [2, 1, 2, 3, 6]


def test_lyndon_words_empty_alphabet():
    with pytest.raises(ValueError, match="empty alphabet"):
        lyndon_words(Alphabet(()), 3)


def test_lyndon_words_match_brute_force():
    for k in (1, 2, 3):
        letters = "abc"[:k]
        expected = sorted(brute_lyndon(letters, 6), key=lambda w: (len(w), w))
        assert lyndon_words(Alphabet(tuple(letters)), 6) == expected


def test_lyndon_counts_equal_witt():
    for k in range(1, 5):
        for q in range(1, 9):
            n_words = sum(1 for w in lyndon_words_int(k, 8) if len(w) == q)
            assert n_words == witt_rank(q, k)


def test_alphabet_symbols_distinct():
    with pytest.raises(ValueError):
        Alphabet(("a", "a"))


def test_standard_bracketing_examples():
    assert monomial_text(standard_bracketing(("a", "b"), AB)) == "[a,b]"
    assert monomial_text(standard_bracketing(("a", "a", "b"), AB)) == "[a,[a,b]]"
    assert monomial_text(standard_bracketing(("a", "b", "b"), AB)) == "[[a,b],b]"
    with pytest.raises(ValueError, match="not a Lyndon word"):
        standard_bracketing(("b", "a"), AB)


def test_standard_bracketing_evaluates_to_its_word():
    for w in lyndon_words(ABC, 6):
        x = monomial_to_element(standard_bracketing(w, ABC), ABC)
        assert x.terms == {ABC.encode(w): 1}


def test_is_lyndon():
    assert is_lyndon("aab") and is_lyndon("abb") and not is_lyndon("aba") and not is_lyndon("aa")


# arithmetic

def test_bracket_examples():
    a, b = gen(AB, "a"), gen(AB, "b")
    assert bracket(a, a).is_zero()
    assert bracket(a, b).terms == {(0, 1): 1}
    ab = bracket(a, b)
    assert bracket(ab, a).terms == {(0, 0, 1): -1}
    assert to_associative(bracket(ab, a)) == to_associative(ab) * to_associative(a) - to_associative(a) * to_associative(ab)


def test_bracket_alphabet_mismatch():
    with pytest.raises(ValueError):
        bracket(gen(AB, "a"), gen(ABC, "a"))


def test_monomial_to_element_examples():
    assert gen(AB, "a") == el(AB, "a")
    assert el(AB, "[[a,b],b]").terms == {(0, 1, 1): 1}
    assert el(AB, "[b,a]").terms == {(0, 1): -1}
    with pytest.raises(ValueError):
        el(AB, "[a,c]")


def test_substitute_examples():
    ab = el(AB, "[a,b]")
    zero = LieElement.zero(AB)
    assert substitute(ab, {"a": gen(AB, "a"), "b": zero}).is_zero()
    assert substitute(ab, {"a": gen(AB, "b"), "b": gen(AB, "a")}).terms == {(0, 1): -1}
    a = gen(AB, "a")
    assert substitute(a, {"a": a, "b": gen(AB, "b")}) == a
    with pytest.raises(ValueError):
        substitute(ab, {"a": a})


def test_to_associative_examples():
    assert str(to_associative(gen(AB, "a"))) == "a"
    assert str(to_associative(el(AB, "[a,b]"))) == "ab - ba"
    assert str(to_associative(el(AB, "[a,[a,b]]"))) == "aab - 2·aba + baa"


def test_homogeneous_component_examples():
    x = gen(AB, "a") + el(AB, "[a,b]")
    assert homogeneous_component(x, 2) == el(AB, "[a,b]")
    assert homogeneous_component(LieElement.zero(AB), 3).is_zero()
    assert homogeneous_component(3 * el(AB, "[a,[a,b]]"), 2).is_zero()


def test_element_text_and_json():
    x = el(AB, "[a,b]") - 2 * el(AB, "[[a,b],b]") + gen(AB, "b")
    assert element_text(x) == "1·(b) + 1·(ab) - 2·(abb)"
    assert x.to_json() == [["b", "1"], [["a", "b"], "1"], [[["a", "b"], "b"], "-2"]]


def test_element_drops_zeros_and_rejects_bad_words():
    assert LieElement(AB, {(0, 1): 0, (0,): 2}).terms == {(0,): 2}
    with pytest.raises(ValueError):
        LieElement(AB, {(1, 0): 1})


def test_monomial_helpers():
    m = parse_monomial("[[A[2,3],A[1,3]],A[1,3]]")
    assert monomial_degree(m) == 3
    assert dict(monomial_letters(m)) == {"A[1,3]": 2, "A[2,3]": 1}
    assert monomial_text(m) == "[[A[2,3],A[1,3]],A[1,3]]"
    assert monomial_from_json(monomial_to_json(m)) == m


def test_big_coefficients_stay_exact():
    big = 10 ** 40
    x = big * el(ABC, "[a,[b,c]]")
    y = big * el(ABC, "[[a,b],c]")
    z = bracket(x, y)
    assert all(abs(c) % big ** 2 == 0 for c in z.terms.values())


# properties

@settings(max_examples=200, deadline=None)
@given(elements(ABC, 6))
def test_antisymmetry(x):
    assert bracket(x, x).is_zero()


@settings(max_examples=200, deadline=None)
@given(elements(ABC, 3), elements(ABC, 3), elements(ABC, 2))
def test_jacobi(x, y, z):
    jac = bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y)
    assert jac.is_zero()


@settings(max_examples=200, deadline=None)
@given(elements(ABC, 3), elements(ABC, 3))
def test_oracle_commutator(x, y):
    px, py = to_associative(x), to_associative(y)
    assert to_associative(bracket(x, y)) == px * py - py * px


@settings(max_examples=200, deadline=None)
@given(elements(ABC, 6))
def test_oracle_round_trip(x):
    assert from_associative(to_associative(x)) == x


@settings(max_examples=100, deadline=None)
@given(elements(ABC, 6))
def test_homogeneous_components_sum_to_element(x):
    total = LieElement.zero(ABC)
    for q in range(1, 7):
        total = total + homogeneous_component(x, q)
    assert total == x


def test_assoc_poly_drops_zeros():
    p = AssocPoly(AB, {(0,): 1, (1, 0): 0})
    assert p.terms == {(0,): 1}
    assert (p - p) == AssocPoly(AB, {})
