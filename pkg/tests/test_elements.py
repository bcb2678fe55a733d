import pytest
from hypothesis import given
from hypothesis import strategies as st

from lamplighter.elements import (
    GenLetter,
    LnElement,
    LnParams,
    WordSyntaxError,
    apply_gen,
    eval_word,
    format_word,
    identity,
    inverse_word,
    invert,
    mirror,
    parse_word,
)
from lamplighter.phenomena import dead_end_family_d_m

from conftest import LETTERS, ln_elements, moduli, words

a, A, t, T = LETTERS
L2, L3 = LnParams(2), LnParams(3)


def test_params():
    assert LnParams(5).h == 2
    assert LnParams(4).h == 2
    with pytest.raises(ValueError):
        LnParams(1)


@pytest.mark.parametrize("text, expected", [
    ("", ()),
    ("a t^3", (a, t, t, t)),
    ("T^-2 A", (t, t, A)),
    ("t^-1 a^2", (T, a, a)),
])
def test_parse_word(text, expected):
    assert parse_word(text) == expected


def test_parse_inverse_spellings_agree():
    assert eval_word(L3, parse_word("T^-2 A")) == eval_word(L3, parse_word("t t a^-1"))


@pytest.mark.parametrize("text", ["b", "a^0", "a^x", "t^", "aT", "a^1.5", "Ab"])
def test_parse_errors(text):
    with pytest.raises(WordSyntaxError):
        parse_word(text)


def test_parse_custom_alphabet():
    assert parse_word("x Y t", ["x", "y", "t"]) == (GenLetter("x"), GenLetter("y", -1), t)
    with pytest.raises(WordSyntaxError):
        parse_word("a", ["x", "t"])


def test_format_round_trip():
    w = parse_word("t a T T a t")
    assert format_word(w) == "t a T T a t"
    assert parse_word(format_word(w)) == w


def test_apply_gen_examples():
    e = identity(L2)
    assert apply_gen(e, t) == LnElement(L2, (), 1)
    assert apply_gen(e, a) == LnElement(L2, ((0, 1),), 0)
    x = identity(L3)
    x = apply_gen(apply_gen(x, a), a)
    assert x.lamp_map == {0: 2}
    assert apply_gen(x, a) == identity(L3)


def test_eval_word_examples():
    assert eval_word(L2, parse_word("a t a T")) == LnElement.from_lamps(L2, {0: 1, 1: 1})
    assert eval_word(L2, parse_word("t^5")) == LnElement(L2, (), 5)
    d1 = eval_word(L2, parse_word("a t a T T a t"))
    assert d1 == LnElement.from_lamps(L2, {-1: 1, 0: 1, 1: 1}, 0)


def test_display_format():
    e = LnElement.from_lamps(L3, {2: 1, -1: 2}, -4)
    assert str(e) == "lamps={-1:2,2:1} cursor=-4"
    assert str(identity(L2)) == "lamps={} cursor=0"


def test_invalid_elements():
    with pytest.raises(ValueError):
        LnElement(L2, ((0, 2),))
    with pytest.raises(ValueError):
        LnElement(L3, ((1, 1), (0, 1)))
    assert LnElement.from_lamps(L3, {0: 3, 1: 4}).lamps == ((1, 1),)


def test_invert_examples():
    assert invert(identity(L2)) == identity(L2)
    e = LnElement.from_lamps(L2, {1: 1})
    assert invert(e) == e
    x = eval_word(L3, parse_word("a t t"))
    assert x == LnElement.from_lamps(L3, {0: 1}, 2)
    # oracle: evaluate the reversed, inverted word
    assert eval_word(L3, inverse_word(parse_word("a t t"))) == LnElement.from_lamps(L3, {-2: 2}, -2)
    assert invert(x) == LnElement.from_lamps(L3, {-2: 2}, -2)


def test_mirror_examples():
    assert mirror(identity(L2)) == identity(L2)
    assert mirror(LnElement.from_lamps(L2, {2: 1}, 1)) == LnElement.from_lamps(L2, {-2: 1}, -1)
    for m in range(1, 4):
        d = dead_end_family_d_m(L3, m)
        assert mirror(d) == d


@given(moduli, words)
def test_word_times_inverse_is_identity(n, w):
    params = LnParams(n)
    assert eval_word(params, w + inverse_word(w)) == identity(params)


@given(moduli, words)
def test_invert_matches_inverse_word(n, w):
    params = LnParams(n)
    assert invert(eval_word(params, w)) == eval_word(params, inverse_word(w))


@given(ln_elements(), st.sampled_from(LETTERS))
def test_apply_then_inverse(e, g):
    assert apply_gen(apply_gen(e, g), g.inverse()) == e


@given(moduli, words)
def test_cursor_is_t_exponent_sum(n, w):
    assert eval_word(LnParams(n), w).cursor == sum(g.sign for g in w if g.name == "t")


@given(moduli, words)
def test_eval_matches_apply_fold(n, w):
    params = LnParams(n)
    e = identity(params)
    for g in w:
        e = apply_gen(e, g)
    assert e == eval_word(params, w)


@given(ln_elements())
def test_involutions(e):
    assert mirror(mirror(e)) == e
    assert invert(invert(e)) == e


@given(ln_elements(n=2))
def test_a_is_an_involution_in_L2(e):
    assert apply_gen(e, a) == apply_gen(e, A)
