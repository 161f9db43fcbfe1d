import pytest
import sympy

from zinbiel.errors import DegreeBoundError, DegreeError, NotTortkaraError
from zinbiel.free import bar, expand, kernel_basis, super_commutator, zinbiel_product
from zinbiel.free.components import Multidegree
from zinbiel.graded import Alphabet, FreeElement
from zinbiel.linalg import ComponentSpan
from zinbiel.speciality import (
    IdealSpec,
    cohn_speciality_check,
    exceptional_example,
    intersect_with_st,
    st_component,
    tortkara_ideal_component,
    zinbiel_ideal_component,
)

XY = Alphabet.parse("x:odd,y:even")
D22 = Multidegree(x=2, y=2)


@pytest.fixture(scope="module")
def example():
    X, f1, f2, omega = exceptional_example()
    return X, f1, f2, omega, IdealSpec.of([f1, f2], X, 4)


def test_omega_closed_form(example):
    X, f1, f2, omega, _ = example
    assert omega == -bar(X.element("xyxy")) - X.element("yyxx")
    assert omega == expand("x o bar(y*y*x) - y o (y*x*x)", X)


def test_generators(example):
    X, f1, f2, *_ = example
    assert f1 == X.element("yyx") - X.element("yxy")
    assert f2 == X.element("yxx")


def test_ideal_component_is_the_two_brackets(example):
    X, f1, f2, omega, I = example
    J = tortkara_ideal_component(I, D22)
    x, y = X.element("x"), X.element("y")
    expected = ComponentSpan.from_elements(D22, [super_commutator(f1, x), super_commutator(f2, y)])
    assert J.dimension == 2 and J.same_span(expected)
    assert omega not in J
    assert J.rank_with(omega) == 3


def test_omega_lies_in_both(example):
    X, f1, f2, omega, I = example
    Z = zinbiel_ideal_component(I, D22)
    assert omega in Z
    assert omega in st_component(X, D22)
    assert omega in intersect_with_st(Z)


def test_verdict(example):
    X, *_, I = example
    v = cohn_speciality_check(I, D22)
    assert not v.special and v.verdict == "exceptional"
    assert v.dimensions == {"ideal": 2, "zinbiel_ideal": 4, "intersection": 3, "quotient": 1}
    assert v.witness == X.element("yyxx")
    assert str(v) == "exceptional-witness: yyxx"


def test_zinbiel_component_by_one_step(example):
    # one letter times a cubic generator reaches degree 4, in both orders
    X, f1, f2, _, I = example
    letters = [X.element(n) for n in ("x", "y")]
    products = []
    for g in (f1, f2):
        for a in letters:
            for f in (zinbiel_product(a, g), zinbiel_product(g, a)):
                if f and all(w.count(X["x"]) == 2 for w in f.terms):
                    products.append(f)
    assert ComponentSpan.from_elements(D22, products).same_span(zinbiel_ideal_component(I, D22))


def _dim(vectors, words):
    if not vectors:
        return 0
    return sympy.Matrix([[v.coefficient(w) for w in words] for v in vectors]).rank()


@pytest.mark.parametrize("gens,d", [
    (["[x,y]"], "x:1,y:2"),
    (["[x,y]"], "x:2,y:2"),
    (["[x,x]"], "x:3,y:1"),
    (["bar(y o y o x)"], "x:2,y:2"),
    (["bar(y o x o x)", "[[x,y],y]"], "x:2,y:2"),
])
def test_intersection_dimension_against_sympy(gens, d):
    gens = [expand(g, XY) for g in gens]
    I = IdealSpec.of(gens, XY, Multidegree.parse(d).total)
    Z = zinbiel_ideal_component(I, d)
    W = intersect_with_st(Z)
    words = Multidegree.parse(d).words(XY)
    st = kernel_basis(d, XY)
    expected = _dim(list(Z.basis), words) + _dim(st, words) - _dim(list(Z.basis) + st, words)
    assert W.dimension == expected
    assert tortkara_ideal_component(I, d) <= W


def test_empty_ideal_is_special():
    v = cohn_speciality_check(IdealSpec.of([], XY, 4), D22)
    assert v.special and v.dimensions["intersection"] == 0
    assert str(v).startswith("special-at-d")


def test_st_component_crosscheck():
    assert st_component(XY, D22, crosscheck=True).dimension == len(kernel_basis(D22, XY))
    with pytest.raises(DegreeError):
        st_component(XY, "x:1")


def test_ideal_spec_errors():
    with pytest.raises(NotTortkaraError):
        IdealSpec.of([XY.element("xy")], XY)
    with pytest.raises(DegreeError):
        IdealSpec.of([XY.element("xy") + XY.element("xxy")], XY)
    with pytest.raises(DegreeBoundError):
        IdealSpec.of([expand("[x,y]", XY)], XY, 1)
    I = IdealSpec.of([expand("[x,y]", XY)], XY)
    with pytest.raises(DegreeBoundError):
        tortkara_ideal_component(I, D22)
    with pytest.raises(DegreeError):
        cohn_speciality_check(I, "x:1")


def test_zero_generators_are_dropped():
    I = IdealSpec.of([FreeElement.zero(), expand("[x,y]", XY)], XY)
    assert len(I.generators) == 1
