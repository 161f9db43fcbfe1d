from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zinbiel.errors import DegreeError, ParseError, UnboundGeneratorError
from zinbiel.free import expand, format_expr, is_tortkara_element, p_map, parse_expr
from zinbiel.free.expr import Bar, Gen, LeftNest, SAnti, Scale, SCom, Shuffle, Sum, Zin, generators_of
from zinbiel.free.products import super_shuffle, zinbiel_product
from zinbiel.graded import Alphabet, sign

X = Alphabet.parse("x:odd,y:even,z:odd")
x, y, z = Gen("x"), Gen("y"), Gen("z")


@pytest.mark.parametrize("src,tree", [
    ("[x,y]", SCom(x, y)),
    ("bar(x*y*z)", Bar(LeftNest((x, y, z)))),
    ("(x sh y) o z", Zin(Shuffle(x, y), z)),
    ("{x, y}", SAnti(x, y)),
    ("x o y o z", Zin(Zin(x, y), z)),
    ("x sh y o z", Shuffle(x, Zin(y, z))),
    ("2*x - 1/3*y", Sum((Scale(Fraction(2), x), Scale(Fraction(-1, 3), y)))),
    ("-x", Scale(Fraction(-1), x)),
    ("x ∘ y ⧢ z", Shuffle(Zin(x, y), z)),
])
def test_parse_examples(src, tree):
    assert parse_expr(src) == tree


@pytest.mark.parametrize("src,line,col", [
    ("[x,y", 1, 5),
    ("x $ y", 1, 3),
    ("x +\n  )", 2, 3),
    ("(x o y", 1, 7),
    ("x y", 1, 3),
    ("o x", 1, 1),
    ("", 1, 1),
    ("2 x", 1, 1),
    ("1/0*x", 1, 3),
])
def test_parse_errors_carry_positions(src, line, col):
    with pytest.raises(ParseError) as info:
        parse_expr(src)
    assert (info.value.line, info.value.column) == (line, col)


def test_unbalanced_message_names_the_opener():
    with pytest.raises(ParseError, match=r"unbalanced '\[' opened at 1:1"):
        parse_expr("[x, y")


@pytest.mark.parametrize("src,expected", [
    ("[x,y]", "xy - yx"),
    ("[x,x]", "2 xx"),
    ("[y,y]", "0"),
    ("x o y", "xy"),
    ("x*y*z", "xyz"),
    ("x o (y o z)", "xyz + yxz"),
    ("x o (z o y)", "xzy - zxy"),
    ("x sh y", "xy + yx"),
    ("bar(x o y)", "xy - yx"),
    ("1/2*{x,z}", "1/2 xz - 1/2 zx"),
])
def test_expand_examples(src, expected):
    assert expand(src, X).format() == expected


def test_zinbiel_product_with_two_letter_right_factor():
    for a in X:
        for b in X:
            for c in X:
                lhs = expand(f"{a.name} o ({b.name} o {c.name})", X)
                rhs = X.element(a.name + b.name + c.name) + X.element(b.name + a.name + c.name) * sign(a.parity * b.parity)
                assert lhs == rhs


def test_left_nest_is_composed_product():
    assert expand("x*y*z", X) == zinbiel_product(zinbiel_product(X.element("x"), X.element("y")), X.element("z"))
    assert expand("x sh y", X) == super_shuffle(X.element("x"), X.element("y"))


def test_expand_errors():
    with pytest.raises(UnboundGeneratorError):
        expand("[x, q]", X)
    with pytest.raises(DegreeError):
        expand("bar(x)", X)
    with pytest.raises(ParseError):
        expand("[x,", X)


def test_generators_of():
    assert generators_of(parse_expr("bar([x,y] o z) + 2*y")) == {"x", "y", "z"}


def test_left_nest_needs_two_factors():
    with pytest.raises(ValueError):
        LeftNest((x,))


names = st.sampled_from(["x", "y", "z"])


def exprs():
    leaf = names.map(Gen)

    def grow(children):
        pair = st.tuples(children, children)
        scale = st.fractions(min_value=-3, max_value=3, max_denominator=3).filter(bool)
        return st.one_of(
            pair.map(lambda p: SCom(*p)), pair.map(lambda p: SAnti(*p)),
            pair.map(lambda p: Zin(*p)), pair.map(lambda p: Shuffle(*p)),
            st.lists(children, min_size=2, max_size=3).map(lambda xs: LeftNest(tuple(xs))),
            st.tuples(scale, children).map(lambda p: Scale(*p)),
            st.lists(children, min_size=2, max_size=3).map(lambda xs: Sum(tuple(xs))),
        )
    return st.recursive(leaf, grow, max_leaves=6)


@given(exprs())
def test_printer_round_trips(e):
    text = format_expr(e)
    again = parse_expr(text)
    assert format_expr(again) == text
    assert expand(again, X) == expand(e, X)


def brackets(depth):
    if depth == 0:
        return names.map(Gen)
    sub = brackets(depth - 1)
    return st.one_of(names.map(Gen), st.tuples(sub, sub).map(lambda p: SCom(*p)))


def degree(e):
    return 1 if isinstance(e, Gen) else degree(e.left) + degree(e.right)


@settings(max_examples=200)
@given(brackets(4).filter(lambda e: isinstance(e, SCom) and degree(e) <= 6))
def test_bracket_expressions_satisfy_criterion(e):
    f = expand(e, X)
    assert p_map(f) == -f
    assert is_tortkara_element(f)
