from fractions import Fraction
from itertools import product

import pytest
import sympy

from zinbiel.errors import MalformedAlgebraError, ParameterDomainError, ParseError, TruncationError
from zinbiel.fd import (
    SAMPLES,
    IdentityKind,
    SuperAlgebra,
    are_isomorphic,
    build,
    catalog,
    disjoint_tuples,
    evaluate_on_elements,
    expected_isomorphic,
    export_catalog,
    family_isomorphism_check,
    from_products,
    grassmann_envelope,
    load_algebra,
    lookup,
    read_algebra,
    residual,
    verify_catalog,
    verify_envelope,
    verify_identity,
    with_flags,
    zero_algebra,
)
from zinbiel.fd.catalog import file_stem, parse_name
from zinbiel.fd.grassmann import GrassmannTruncation, envelope_holds
from zinbiel.fd.isomorphism import find_rational_isomorphism, is_homomorphism, t3_invariant

# --- file format -----------------------------------------------------------


def test_round_trip():
    A = build("T3_21")
    assert load_algebra(A.dumps()) == A
    text = "dims 1 2  # header\n\n1 2 2 1\n1 2 3 1\n2 1 2 -1\n2 1 3 -1\n"
    B = load_algebra(text)
    assert B.product(0, 1) == {1: 1, 2: 1}
    assert load_algebra(B.dumps()) == B


def test_odd_product_and_custom_parities_round_trip():
    A = SuperAlgebra(1, 1, {(0, 0, 1): 1}, product_parity=1)
    assert "product odd" in A.dumps()
    assert load_algebra(A.dumps()) == A
    B = SuperAlgebra(1, 1, {(1, 1, 1): 2}, parities=(1, 0))
    assert "parities odd even" in B.dumps()
    assert load_algebra(B.dumps()) == B


@pytest.mark.parametrize("text,line", [
    ("1 1 1 1\n", 1),
    ("dims 1\n", 1),
    ("dims 1 1\ndims 1 1\n", 2),
    ("dims 1 1\n1 1 1\n", 2),
    ("dims 1 1\n1 1 3 1\n", 2),
    ("dims 1 1\n1 1 1 x\n", 2),
    ("dims 1 1\n1 1 1 1/0\n", 2),
    ("dims 1 1\n1 1 1 1\n1 1 1 2\n", 3),
    ("dims 1 1\nproduct maybe\n", 2),
    ("", 1),
])
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as info:
        load_algebra(text)
    assert info.value.line == line


def test_grading_violations(fixtures):
    with pytest.raises(MalformedAlgebraError):
        read_algebra(fixtures / "bad_grading.alg")
    with pytest.raises(MalformedAlgebraError):
        SuperAlgebra(1, 1, {(0, 1, 0): 1})
    with pytest.raises(MalformedAlgebraError):
        SuperAlgebra(1, 1, {(0, 0, 5): 1})
    with pytest.raises(MalformedAlgebraError):
        SuperAlgebra(1, 1, parities=(0, 0))


def test_from_products_fills_partners():
    A = from_products(1, 2, {(3, 3): {1: 1}, (1, 2): {2: 1}})
    assert A.product(2, 2) == {0: 1}
    assert A.product(1, 0) == {1: -1}
    with pytest.raises(MalformedAlgebraError):
        from_products(2, 0, {(1, 2): {1: 1}, (2, 1): {1: 1}})


def test_mul_is_bilinear():
    A = build("T3_21")
    u, v = {0: 2, 1: Fraction(1, 3)}, {1: 1, 0: -1}
    expected = {}
    for i, a in u.items():
        for j, b in v.items():
            for k, c in A.product(i, j).items():
                expected[k] = expected.get(k, 0) + a * b * c
    assert A.mul(u, v) == {k: c for k, c in expected.items() if c}


# --- identities ------------------------------------------------------------


@pytest.mark.parametrize("text,kind", [
    ("tortkara", IdentityKind.SuperTortkara), ("Lie", IdentityKind.SuperJacobi),
    ("super-zinbiel", IdentityKind.SuperZinbiel), ("identity5", IdentityKind.OddZinbiel),
    ("SuperCommutativeAssociative", IdentityKind.SuperCommutativeAssociative),
])
def test_identity_kind_parse(text, kind):
    assert IdentityKind.parse(text) is kind


def test_identity_kind_parse_unknown():
    with pytest.raises(ValueError):
        IdentityKind.parse("jordan")


def test_t8_lie_witness():
    v = verify_identity(build("T8_21"), "SuperJacobi")
    assert not v.holds and v.verdict == "fails"
    assert v.witness == (0, 1, 2) and v.residual == {2: 1}
    assert v.witness_text() == "(e1, e2, e3) -> e3"


def test_t2_12_jacobian_of_odd_cube():
    A = build("T2_12")
    assert residual(A, "SuperJacobi", 2, 2, 2) == {1: 3}
    assert verify_identity(A, "SuperTortkara") and verify_identity(A, "Malcev")


def test_zero_algebra_satisfies_everything():
    Z = zero_algebra(2, 1)
    for kind in IdentityKind:
        assert verify_identity(Z, kind).holds


def test_commutative_associative_example():
    # the Grassmann algebra on one generator: 1, xi with xi xi = 0
    G = SuperAlgebra(1, 1, {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1})
    assert verify_identity(G, "SuperCommutativeAssociative")
    assert not verify_identity(G, "SuperAntiCommutative")


@pytest.mark.parametrize("name", ["T3_21", "T8_21", "T2_12", "T4_12(2)"])
@pytest.mark.parametrize("kind", ["SuperTortkara", "Malcev", "SuperJacobi"])
def test_basis_check_matches_homogeneous_elements(name, kind):
    # an identity holds on all homogeneous elements iff it holds on basis tuples
    A = build(name)
    verdict = verify_identity(A, kind)
    law_arity = IdentityKind.parse(kind).arity
    coeffs = [1, -2, Fraction(1, 3)]
    blocks = [[i for i in range(A.dim) if A.parities[i] == p] for p in (0, 1)]
    found_nonzero = False
    for parities in product((0, 1), repeat=law_arity):
        if not all(blocks[p] for p in parities):
            continue
        elements = [{i: coeffs[(n + i) % 3] for i in blocks[p]} for n, p in enumerate(parities)]
        if evaluate_on_elements(A, kind, *elements):
            found_nonzero = True
    if verdict.holds:
        assert not found_nonzero


# --- Grassmann envelopes ---------------------------------------------------


def test_grassmann_signs():
    G = GrassmannTruncation(3)
    assert G.multiply(0b001, 0b010) == (1, 0b011)
    assert G.multiply(0b010, 0b001) == (-1, 0b011)
    assert G.multiply(0b011, 0b011) == (0, 0)
    assert G.multiply(0b101, 0b010) == (-1, 0b111)
    assert len(G.monomials(1)) == 4 and len(G.monomials()) == 8
    assert GrassmannTruncation.format(0b101) == "ξ1ξ3"


def test_envelope_shape():
    A = build("T3_21")
    env = grassmann_envelope(A, 2)
    assert env.algebra.dim == 2 * 2 + 1 * 2
    assert env.label(0) == "1⊗e1"
    with pytest.raises(TruncationError):
        grassmann_envelope(A, 0)
    with pytest.raises(TruncationError):
        grassmann_envelope(A, -1)
    with pytest.raises(TruncationError):
        grassmann_envelope(SuperAlgebra(1, 1, {}, product_parity=1), 2)


@pytest.mark.parametrize("name", ["T3_21", "T8_21", "T2_12", "T3_12(2)"])
def test_pruned_envelope_matches_full_sweep(name):
    A = build(name)
    assert [v.holds for v in verify_envelope(A, 2, prune=True)] == [v.holds for v in verify_envelope(A, 2, prune=False)]


def test_disjoint_tuples_skip_overlaps():
    env = grassmann_envelope(build("T3_21"), 2)
    for t in disjoint_tuples(env, 3):
        masks = [env.labels[k][0] for k in t]
        assert sum(bin(m).count("1") for m in masks) == bin(masks[0] | masks[1] | masks[2]).count("1")


def test_envelope_negative_control(fixtures):
    bad = read_algebra(fixtures / "t8_corrupted.alg")
    assert not verify_identity(bad, "SuperTortkara")
    assert not envelope_holds(verify_envelope(bad, 4))
    assert envelope_holds(verify_envelope(build("T8_21"), 4))


# --- catalog ---------------------------------------------------------------


def test_catalog_shape():
    entries = catalog()
    assert len(entries) == 17
    assert sum(e.parameterized for e in entries) == 3
    assert [e.label for e in entries if (e.even_dim, e.odd_dim) == (2, 1)] == [1, 2, 3, 7, 8, 9]
    assert {e.name for e in entries if not e.is_lie} == {"T^3_{2|1}", "T^8_{2|1}"}


@pytest.mark.parametrize("name,key,param", [
    ("T^3_{1|2}(2)", "T3_12", "2"), ("T3_12", "T3_12", None), ("T³_{1|2}", "T3_12", None),
    ("T^9_{2|1}(-1/2)", "T9_21", "-1/2"),
])
def test_parse_name(name, key, param):
    assert parse_name(name) == (key, param)


def test_lookup_and_build_errors():
    with pytest.raises(KeyError):
        lookup("T5_21")
    with pytest.raises(KeyError):
        lookup("nonsense")
    with pytest.raises(ParameterDomainError):
        build("T3_12")
    with pytest.raises(ParameterDomainError):
        build("T8_21", 2)
    with pytest.raises(ParameterDomainError):
        build("T3_12", 0.5)
    with pytest.raises(ParameterDomainError):
        build("T3_12(2)", 3)
    assert build("T3_12(1/2)") == build("T3_12", Fraction(1, 2))


def test_file_stem():
    assert file_stem("T^3_{1|2}(1/2)") == "T3_12_1over2"
    assert file_stem("T^9_{2|1}(-1)") == "T9_21_m1"


@pytest.fixture(scope="module")
def report():
    return verify_catalog()


def test_catalog_super_tortkara_and_envelopes(report):
    assert len(report.results) == 14 + 3 * len(SAMPLES)
    assert all(r.anticommutative and r.tortkara and r.envelope for r in report.results)


def test_catalog_malcev_flags_match(report):
    assert all(r.malcev == r.expected_malcev for r in report.results)


def test_catalog_lie_flags(report):
    # the odd cube e3(e3e3) of T^2_{1|2} is nonzero, so it is not Lie despite its flag
    found = {r.name for r in report.results if not r.lie}
    assert found == {"T^3_{2|1}", "T^8_{2|1}", "T^2_{1|2}"}
    assert report.mismatches == [("T^2_{1|2}", "Lie: expected True, found False")]
    assert "mismatches: 1" in str(report)


def test_catalog_negative_control():
    entry = with_flags(lookup("T7_21"), is_malcev=False)
    rep = verify_catalog([entry], envelope_n=None)
    assert rep.mismatches == [("T^7_{2|1}", "Malcev: expected False, found True")]
    assert not rep.ok


def test_golden_files_match_export(fixtures):
    exported = export_catalog()
    assert len(exported) == 29
    for name, text in exported.items():
        path = fixtures / "catalog" / f"{file_stem(name)}.alg"
        assert path.read_text() == text
        assert read_algebra(path) == load_algebra(text)


# --- isomorphism -----------------------------------------------------------


def test_t3_family_examples():
    assert family_isomorphism_check("T3_12", 2, 5)
    assert not family_isomorphism_check("T3_12", 2, 3)
    assert expected_isomorphic("T3_12", 2, 5) and not expected_isomorphic("T3_12", 2, 3)
    assert t3_invariant(2) == t3_invariant(5)
    assert t3_invariant(2) != t3_invariant(3)


def test_explicit_isomorphism_for_t3():
    # e1 -> e1/2 matches trace and determinant of ad e1 on the odd part
    A, B = build("T3_12(2)"), build("T3_12(5)")
    g = sympy.Matrix([[sympy.Rational(1, 2), 0, 0], [0, 2, -1], [0, 0, 1]])
    assert is_homomorphism(A, B, g) and g.det() != 0
    assert not is_homomorphism(A, B, sympy.eye(3))
    Z = zero_algebra(1, 2)
    found = find_rational_isomorphism(Z, Z, tries=50)
    assert found is not None and is_homomorphism(Z, Z, found)
    assert find_rational_isomorphism(Z, zero_algebra(2, 1)) is None


GRID = [-1, 0, Fraction(1, 2), 1, 2]


@pytest.mark.parametrize("gamma", GRID)
def test_t9_grid(gamma):
    for delta in GRID:
        assert bool(family_isomorphism_check("T9_21", gamma, delta)) == (gamma == delta)


@pytest.mark.parametrize("alpha", [0, -1, 2, 3, Fraction(1, 2)])
def test_t3_condition_agrees_with_groebner(alpha):
    for beta in [0, -1, 2, 3, 5, Fraction(1, 2), -7]:
        assert bool(family_isomorphism_check("T3_12", alpha, beta)) == expected_isomorphic("T3_12", alpha, beta)


def test_isomorphism_edge_cases():
    assert are_isomorphic(build("T2_21"), build("T2_12")).verdict == "distinct"
    assert are_isomorphic(build("T2_21"), build("T2_21")).verdict == "isomorphic"
    assert not are_isomorphic(build("T1_21"), build("T2_21"))
    with pytest.raises(ParameterDomainError):
        family_isomorphism_check("T8_21", 1, 2)
    with pytest.raises(ParameterDomainError):
        expected_isomorphic("T4_12", 1, 2)
    with pytest.raises(ParameterDomainError):
        t3_invariant(1)


@pytest.mark.parametrize("alpha", [-1, 2, 3, Fraction(1, 2)])
def test_t4_family_has_two_classes(alpha):
    # the odd part carries the form [[alpha, 1], [1, 1]]; only its rank matters over the closure
    assert family_isomorphism_check("T4_12", alpha, 0)
    assert family_isomorphism_check("T4_12", 1, alpha).verdict == "distinct"


def test_degenerate_t4_is_not_t3():
    # T^4 multiplies odd by odd only, T^3 lets e1 act on the odd part
    assert are_isomorphic(build("T4_12(1)"), build("T3_12(1)")).verdict == "distinct"
    degenerate = from_products(1, 2, {(3, 3): {1: 1}})
    assert are_isomorphic(build("T4_12(1)"), degenerate)
