"""Ideal components in Zin(X) and ST(X), and Cohn's speciality criterion.

A quotient ST(X)/I is special iff I' ∩ ST(X) ⊆ I, where I' is the Zinbiel
ideal generated by I.  Everything is computed one multidegree component at a
time by saturating breadth-first in total degree.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DegreeBoundError, DegreeError, NotTortkaraError
from .free.components import Multidegree, as_multidegree, bracket_span, component_of, skew_rcom_basis
from .free.products import is_tortkara_element, p_map, super_commutator, zinbiel_product
from .graded import Alphabet, FreeElement
from .linalg import ComponentSpan, Echelon, nullspace


@dataclass(frozen=True)
class IdealSpec:
    """Generators of an ideal of ST(X), with the degree bound for saturation."""

    generators: tuple
    alphabet: Alphabet
    degree_bound: int

    def __post_init__(self):
        gens = tuple(g for g in self.generators if g)
        object.__setattr__(self, "generators", gens)
        top = 0
        for g in gens:
            component_of(g, self.alphabet)  # DegreeError unless multihomogeneous
            if not is_tortkara_element(g):
                raise NotTortkaraError(f"{g} does not satisfy p(f) = -f")
            top = max(top, next(iter(g.degrees)))
        if self.degree_bound < top:
            raise DegreeBoundError(
                f"degree bound {self.degree_bound} is below generator degree {top}")

    @classmethod
    def of(cls, generators, alphabet: Alphabet, degree_bound=None) -> "IdealSpec":
        gens = tuple(generators)
        if degree_bound is None:
            degree_bound = max((max(g.degrees) for g in gens if g), default=0)
        return cls(gens, alphabet, degree_bound)

    def by_multidegree(self) -> dict:
        out = {}
        for g in self.generators:
            out.setdefault(component_of(g, self.alphabet), []).append(g)
        return out


def _check_bound(I: IdealSpec, d: Multidegree):
    d.check(I.alphabet)
    if d.total > I.degree_bound:
        raise DegreeBoundError(f"total degree {d.total} exceeds the bound {I.degree_bound}")


def _st_spanning(alphabet: Alphabet, e: Multidegree) -> tuple:
    """A basis of ST(X) in multidegree e, including single letters."""
    if e.total == 1:
        (name,) = e
        return (FreeElement.from_word((alphabet[name],)),)
    return bracket_span(e, alphabet).basis


def _saturate(I: IdealSpec, d: Multidegree, grow) -> ComponentSpan:
    gens = I.by_multidegree()
    spans: dict = {}
    for e in d.submultidegrees(I.alphabet):
        ech = Echelon()
        for g in gens.get(e, ()):
            ech.add(dict(g.terms))
        for e_small, small in spans.items():
            if not small.rank or not (e_small <= e) or e_small == e:
                continue
            rest = e - e_small
            for f in grow(small.rows(), rest):
                if f:
                    ech.add(dict(f.terms))
        spans[e] = ech
    return ComponentSpan(d, tuple(FreeElement._wrap(r) for r in spans[d].rows()))


def tortkara_ideal_component(I: IdealSpec, d) -> ComponentSpan:
    """Component d of the ST(X)-ideal generated by I.generators.

    For an anticommutative product the ideal generated by a set is spanned
    by iterated right multiplications [..[g, s1], ..., sk], so one-sided
    closure by a basis of each ST(X) component suffices.
    """
    d = as_multidegree(d)
    _check_bound(I, d)
    X = I.alphabet

    def grow(rows, rest):
        for s in _st_spanning(X, rest):
            for r in rows:
                yield super_commutator(FreeElement._wrap(dict(r)), s)

    return _saturate(I, d, grow)


def zinbiel_ideal_component(I: IdealSpec, d) -> ComponentSpan:
    """Component d of the two-sided Zinbiel ideal of Zin(X) generated by I.generators."""
    d = as_multidegree(d)
    _check_bound(I, d)
    X = I.alphabet

    def grow(rows, rest):
        for w in rest.words(X):
            word = FreeElement.from_word(w)
            for r in rows:
                f = FreeElement._wrap(dict(r))
                yield zinbiel_product(word, f)
                yield zinbiel_product(f, word)

    return _saturate(I, d, grow)


def st_component(alphabet: Alphabet, d, crosscheck: bool = False) -> ComponentSpan:
    """ST(X) in multidegree d, as the span of the skew-rcom elements.

    With ``crosscheck`` the result is compared against the span of bracket
    monomials and a RuntimeError is raised if they differ.
    """
    d = as_multidegree(d)
    if d.total < 2:
        raise DegreeError("ST components are computed for total degree >= 2")
    span = ComponentSpan.from_elements(d, skew_rcom_basis(d, alphabet))
    if crosscheck and not span.same_span(bracket_span(d, alphabet)):
        raise RuntimeError(f"skew-rcom span and bracket span differ at {d}")
    return span


def intersect_with_st(span: ComponentSpan) -> ComponentSpan:
    """span ∩ ST(X), as the kernel of p + id restricted to the span."""
    basis = span.basis
    columns = [dict((f + p_map(f)).terms) for f in basis]
    out = []
    for rel in nullspace(columns):
        f = FreeElement.zero()
        for c, b in zip(rel, basis):
            if c:
                f = f + b * c
        out.append(f)
    return ComponentSpan.from_elements(span.multidegree, out)


@dataclass
class SpecialityVerdict:
    special: bool
    multidegree: Multidegree
    witness: FreeElement | None = None
    dimensions: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "special" if self.special else "exceptional"

    def __str__(self):
        if self.special:
            return f"special-at-d ({self.multidegree})"
        return f"exceptional-witness: {self.witness}"


def cohn_speciality_check(I: IdealSpec, d) -> SpecialityVerdict:
    """Compare W = I'_d ∩ ST_d with the ST-ideal component I_d.

    The witness, if any, is the element of least pivot in the reduced echelon
    form of W modulo I_d.
    """
    d = as_multidegree(d)
    if d.total < 2:
        raise DegreeError("the criterion is applied in total degree >= 2")
    J = tortkara_ideal_component(I, d)
    Z = zinbiel_ideal_component(I, d)
    W = intersect_with_st(Z)
    ech = J.echelon()
    rest = Echelon()
    for w in W.basis:
        r = ech.reduce(dict(w.terms))
        if r:
            rest.add(r)
    dims = {"ideal": J.dimension, "zinbiel_ideal": Z.dimension, "intersection": W.dimension,
            "quotient": rest.rank}
    if not rest.rank:
        return SpecialityVerdict(True, d, None, dims)
    witness = FreeElement._wrap(rest.rows()[0])
    return SpecialityVerdict(False, d, witness, dims)


def exceptional_example(alphabet: Alphabet | None = None):
    """The two-generator exceptional quotient: x odd, y even, f1 = bar(yyx), f2 = yxx.

    Returns ``(alphabet, f1, f2, omega)`` with omega = x o f1 - y o f2.
    """
    from .free.products import bar

    X = alphabet or Alphabet.parse("x:odd,y:even")
    x, y = (FreeElement.from_word((X[n],)) for n in ("x", "y"))
    f1 = bar(FreeElement.from_word(X.word("y", "y", "x")))
    f2 = FreeElement.from_word(X.word("y", "x", "x"))
    omega = zinbiel_product(x, f1) - zinbiel_product(y, f2)
    return X, f1, f2, omega
