import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lamplighter.elements import LnElement, LnParams, apply_gen, eval_word, parse_word
from lamplighter.finite_group import cyclic_group, is_dead_end_in_group
from lamplighter.metric import emit_geodesic, word_length_D
from lamplighter.oracle import enumerate_ball, graph_distance, lamplighter_model, wreath_model
from lamplighter.phenomena import dead_end_family_d_m
from lamplighter.wreath import (
    WreathElement,
    eval_wreath_word,
    lift_dead_end_family,
    ln_to_wreath,
    wreath_apply,
    wreath_emit_geodesic,
    wreath_enumerate_geodesics,
    wreath_identity,
    wreath_length_D,
    wreath_to_ln,
)

from conftest import DATA, LETTERS, ln_elements

Z2 = cyclic_group(2)
Z5 = cyclic_group(5)
Z6 = cyclic_group(6)


def _word(G, text):
    return parse_word(text, G.gen_names() + ("t",))


def test_apply_examples():
    e = wreath_apply(wreath_identity(Z2), LETTERS[2])
    assert e.slots == () and e.cursor == 1
    e = eval_wreath_word(Z2, _word(Z2, "a t a"))
    assert e.slots == ((0, 1), (1, 1)) and e.cursor == 1
    assert wreath_to_ln(e) == eval_word(LnParams(2), parse_word("a t a"))
    assert eval_wreath_word(Z6, _word(Z6, "a a a")).slots == ((0, 3),)


def test_apply_unknown_generator():
    with pytest.raises(ValueError):
        wreath_apply(wreath_identity(Z6), parse_word("b", ["b"])[0])


def test_display():
    e = WreathElement.from_slots(Z6, {2: 3, -1: 5}, 4)
    assert str(e) == "slots={-1:5,2:3} cursor=4"


def test_invalid():
    with pytest.raises(ValueError):
        WreathElement(Z6, ((0, 0),))
    with pytest.raises(ValueError):
        WreathElement(Z6, ((0, 6),))


def test_length_examples():
    assert wreath_length_D(wreath_identity(Z6)) == 0
    assert wreath_length_D(WreathElement.from_slots(Z2, {1: 1, -1: 1})) == 6
    e = WreathElement.from_slots(Z6, {2: 3})
    assert wreath_length_D(e) == 7
    model = wreath_model(Z6)
    assert enumerate_ball(model, 7).distances[e] == 7


def test_emit_examples():
    assert wreath_emit_geodesic(wreath_identity(Z6)) == ()
    e = WreathElement.from_slots(Z6, {1: 3})
    w = wreath_emit_geodesic(e)
    assert w == _word(Z6, "t a a a T")
    model = wreath_model(Z6)
    assert graph_distance(model, model.identity, e, 10) == 5


@settings(max_examples=100)
@given(ln_elements(n=2, span=4))
def test_emit_matches_lamplighter_over_z2(e):
    assert wreath_emit_geodesic(ln_to_wreath(e, Z2)) == emit_geodesic(e)


def test_lift_examples():
    d1 = lift_dead_end_family(Z2, 1, 1)
    assert wreath_to_ln(d1) == dead_end_family_d_m(LnParams(2), 1)
    e = lift_dead_end_family(Z6, 3, 1)
    assert e.slots == ((-1, 3), (0, 3), (1, 3)) and e.cursor == 0
    assert wreath_length_D(e) == 13
    e = lift_dead_end_family(Z5, 2, 2)
    assert e.slots == tuple((p, 2) for p in range(-2, 3))
    assert wreath_length_D(e) == 18


@pytest.mark.parametrize("G, a, m, expected", [(Z6, 3, 1, 13), (Z5, 2, 2, 18), (Z5, 2, 1, 10)])
def test_lift_lengths_by_bfs(G, a, m, expected):
    model = wreath_model(G)
    assert graph_distance(model, model.identity, lift_dead_end_family(G, a, m), 30) == expected


def test_lift_rejects():
    with pytest.raises(ValueError):
        lift_dead_end_family(Z6, 2, 1)
    with pytest.raises(ValueError):
        lift_dead_end_family(Z6, 3, 0)
    with pytest.raises(ValueError):
        lift_dead_end_family(Z6, 0, 1)


@pytest.mark.parametrize("n", [2, 3])
def test_bijection_commutes_on_ball(n):
    params = LnParams(n)
    G = cyclic_group(n)
    ball = enumerate_ball(lamplighter_model(params), 8)
    for e in ball.distances:
        w = ln_to_wreath(e, G)
        assert wreath_to_ln(w) == e
        assert wreath_length_D(w) == word_length_D(e)
        for g in LETTERS:
            assert wreath_to_ln(wreath_apply(w, g)) == apply_gen(e, g)


def test_bijection_rejects_non_cyclic(klein4):
    with pytest.raises(ValueError):
        ln_to_wreath(LnElement(LnParams(4)), klein4)


@pytest.mark.parametrize("G, a", [(Z5, 2), (Z6, 3), (Z2, 1)])
@pytest.mark.parametrize("m", [1, 2, 3])
def test_lifted_family_is_dead_end(G, a, m):
    assert is_dead_end_in_group(G, a)
    e = lift_dead_end_family(G, a, m)
    model = wreath_model(G)
    D = wreath_length_D(e)
    for g in model.letters:
        assert wreath_length_D(wreath_apply(e, g)) <= D


def test_klein_lift(klein4):
    e = lift_dead_end_family(klein4, 3, 2)
    assert wreath_length_D(e) == 5 * 2 + 8
    for g in wreath_model(klein4).letters:
        assert wreath_length_D(wreath_apply(e, g)) < wreath_length_D(e)


@st.composite
def wreath_elements(draw, G):
    slots = draw(st.dictionaries(st.integers(-4, 4), st.integers(1, G.order - 1), max_size=5))
    return WreathElement.from_slots(G, slots, draw(st.integers(-6, 6)))


@pytest.mark.parametrize("spec", ["z2", "z6", "klein"])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_emit_round_trip(spec, klein4, data):
    G = {"z2": Z2, "z6": Z6, "klein": klein4}[spec]
    e = data.draw(wreath_elements(G))
    w = wreath_emit_geodesic(e)
    assert eval_wreath_word(G, w) == e
    assert len(w) == wreath_length_D(e)


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_split_enumeration(data):
    G = Z6
    e = data.draw(wreath_elements(G).filter(lambda x: len(x.slots) <= 3))
    variants = wreath_enumerate_geodesics(e)
    assert wreath_emit_geodesic(e) in variants
    for w in variants:
        assert eval_wreath_word(G, w) == e and len(w) == wreath_length_D(e)


def test_split_enumeration_limit():
    e = WreathElement.from_slots(Z6, {p: 1 for p in range(5)})
    with pytest.raises(ValueError):
        wreath_enumerate_geodesics(e)


def test_load_group_file_wreath():
    from lamplighter.finite_group import load_group_file
    G = load_group_file(DATA / "cyclic6.tbl")
    assert wreath_length_D(WreathElement.from_slots(G, {2: 3})) == 7
