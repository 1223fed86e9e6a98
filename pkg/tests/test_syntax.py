import pytest
from hypothesis import given, settings

from lpc.syntax import (
    Bang, Bot, BotC, FBang, Kind, Mode, ModeError, One, OneP, Par, Prop, Sequent, SyntaxErr, Tensor, TensorP,
    Top, Why, Zero, count_props, ctx, ctx_sub, dual, enumerate_props, mode_of, neg, parse, parse_prop,
    parse_sequent, show,
)
from strategies import props, sequents

# counts of propositions by height (constants have height 1), L/P/C
HEIGHT_COUNTS = {
    1: (4, 1, 1),
    2: (70, 6, 6),
    3: (19616, 107, 107),
    4: (1539150042, 31066, 31066),
}


@pytest.mark.parametrize("depth", [1, 2, 3, 4])
def test_count_regression(depth):
    c = count_props(depth)
    assert (c[Mode.L], c[Mode.P], c[Mode.C]) == HEIGHT_COUNTS[depth]


@pytest.mark.parametrize("depth", [1, 2, 3])
def test_enumeration_matches_counts(depth):
    e = enumerate_props(depth)
    c = count_props(depth)
    for m in Mode:
        assert len(e[m]) == c[m] == len(set(e[m]))
        assert all(x.mode is m and x.depth <= depth for x in e[m])


def test_print_parse_round_trip_exhaustive_to_depth_3():
    for m, xs in enumerate_props(3).items():
        for x in xs:
            assert parse_prop(show(x)) == x


@given(props(depth=4))
@settings(max_examples=400)
def test_print_parse_round_trip_depth_4(x):
    text = show(x)
    assert parse(text) == x
    assert show(parse(text)) == text


@given(sequents())
@settings(max_examples=200)
def test_sequent_round_trip(s):
    assert parse_sequent(show(s)) == s


def test_canonical_text_is_whitespace_insensitive():
    assert parse("( tensor\n 1\t(par B  1) )") == Tensor(One, Par(Bot, One))
    assert show(Tensor(One, Par(Bot, One))) == "(tensor 1 (par B 1))"


def test_overloaded_heads_resolve_by_mode():
    assert parse("(tensor 1p 1p)") == TensorP(OneP, OneP)
    assert parse("(tensor 1 1)").tag == "tensor"
    assert parse("(par Bc Bc)").tag == "par_c"


@pytest.mark.parametrize("text", ["(tensor 1p 1)", "(! 1p)", "(F! 1)", "(? Bc)", "(& 1p 1p)"])
def test_mode_errors(text):
    with pytest.raises(ModeError):
        parse(text)


@pytest.mark.parametrize("text,line,col", [
    ("(tensor 1", 1, 1),
    ("1)", 1, 2),
    ("(frob 1 1)", 1, 2),
    ("\n  (tensor 1 1 1)", 2, 3),
])
def test_syntax_errors_carry_position(text, line, col):
    with pytest.raises((SyntaxErr, ModeError)) as e:
        parse(text)
    if isinstance(e.value, SyntaxErr):
        assert (e.value.line, e.value.col) == (line, col)


def test_persistent_sequent_rejects_linear():
    with pytest.raises(ModeError):
        Sequent(Kind.PERS, [One], [])
    with pytest.raises(ModeError):
        parse_sequent("(||- (1) ())")


def test_contexts_are_multisets():
    a = ctx(One, Bot, One)
    assert a == ctx(Bot, One, One)
    assert ctx_sub(a, [One]) == ctx(Bot, One)
    assert ctx_sub(a, [Top]) is None
    assert Sequent(Kind.LIN, [One, Bot], []) == Sequent(Kind.LIN, [Bot, One], [])


def test_dual_examples():
    assert dual(One) == Bot and dual(Top) == Zero
    assert dual(Bang(One)) == Why(Bot)
    assert dual(FBang(OneP)) == Prop("fwhy", BotC)
    assert mode_of(dual(TensorP(OneP, OneP))) is Mode.C


def test_involution_exhaustive_to_depth_3():
    flip = {Mode.L: Mode.L, Mode.P: Mode.C, Mode.C: Mode.P}
    for m, xs in enumerate_props(3).items():
        for x in xs:
            assert dual(dual(x)) == x
            assert dual(x).mode is flip[m]


@given(props(depth=5))
def test_involution_deeper(x):
    assert dual(dual(x)) == x


def test_negation_is_linear_only():
    assert neg(One).mode is Mode.L
    assert neg(One) == Par(Bot, Zero)
    with pytest.raises(ModeError):
        neg(OneP)


def test_props_are_immutable_and_hash_consistently():
    x = Tensor(One, Bot)
    with pytest.raises(AttributeError):
        x.tag = "par"
    assert hash(x) == hash(parse("(tensor 1 B)"))
    assert x.size == 3 and x.depth == 2
