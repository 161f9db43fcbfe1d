"""Multilinear identity checks on structure-constant superalgebras.

Each law is a residual function of basis indices.  Since every law is
multilinear, vanishing on all basis tuples is equivalent to vanishing on the
whole algebra.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product

from ..graded import sign
from .algebra import SuperAlgebra, vadd, vec, vfmt


def _jac_s(A: SuperAlgebra, x, y, z, py, pz) -> dict:
    m = A.mul
    return vadd((1, m(m(x, y), z)), (-1, m(x, m(y, z))), (-sign(py & pz), m(m(x, z), y)))


def _anticommutative(A, a, b):
    p = A.parities
    return vadd((1, A.product(a, b)), (sign(p[a] & p[b]), A.product(b, a)))


def _supercommutative(A, a, b):
    p = A.parities
    return vadd((1, A.product(a, b)), (-sign(p[a] & p[b]), A.product(b, a)))


def _associative(A, a, b, c):
    m = A.mul
    return vadd((1, m(m(vec(a), vec(b)), vec(c))), (-1, m(vec(a), m(vec(b), vec(c)))))


def _zinbiel(A, a, b, c):
    p, m = A.parities, A.mul
    ea, eb, ec = vec(a), vec(b), vec(c)
    return vadd((1, m(ea, m(eb, ec))), (-1, m(m(ea, eb), ec)), (-sign(p[a] & p[b]), m(m(eb, ea), ec)))


def _odd_zinbiel(A, a, b, c):
    # a(bc) = (-1)^{|a|+1}(ab)c + (-1)^{|a|(|b|+1)}(ba)c
    p, m = A.parities, A.mul
    ea, eb, ec = vec(a), vec(b), vec(c)
    return vadd((1, m(ea, m(eb, ec))),
                (-sign(p[a] + 1), m(m(ea, eb), ec)),
                (-sign(p[a] * (p[b] + 1)), m(m(eb, ea), ec)))


def _jacobi(A, a, b, c):
    p = A.parities
    return _jac_s(A, vec(a), vec(b), vec(c), p[b], p[c])


def _tortkara(A, a, b, c, d):
    p, m = A.parities, A.mul
    ea, eb, ec, ed = vec(a), vec(b), vec(c), vec(d)
    lhs = vadd((1, m(m(ea, eb), m(ec, ed))), (-sign(p[d] & (p[b] ^ p[c])), m(m(ea, ed), m(eb, ec))))
    rhs = vadd((1, m(_jac_s(A, ea, eb, ec, p[b], p[c]), ed)),
               (sign(p[a] & p[b]), m(eb, _jac_s(A, ea, ec, ed, p[c], p[d]))))
    return vadd((1, lhs), (-1, rhs))


def _malcev(A, a, b, c, d):
    p, m = A.parities, A.mul
    ea, eb, ec, ed = vec(a), vec(b), vec(c), vec(d)
    lhs = m(m(m(ea, eb), ec), ed)
    rhs = vadd(
        (-sign(p[a] & (p[b] ^ p[c] ^ p[d])), m(m(m(eb, ec), ed), ea)),
        (-sign((p[a] ^ p[b]) & (p[c] ^ p[d])), m(m(m(ec, ed), ea), eb)),
        (-sign(p[d] & (p[a] ^ p[b] ^ p[c])), m(m(m(ed, ea), eb), ec)),
        (sign(p[b] & p[c]), m(m(ea, ec), m(eb, ed))),
    )
    return vadd((1, lhs), (-1, rhs))


def _classical_anticommutative(A, a, b):
    return vadd((1, A.product(a, b)), (1, A.product(b, a)))


def _cyclic_jacobian(A, x, y, z):
    m = A.mul
    return vadd((1, m(m(x, y), z)), (1, m(m(y, z), x)), (1, m(m(z, x), y)))


def _classical_tortkara(A, a, b, c, d):
    # (ab)(cd) + (ad)(cb) = J(a,b,c)d + J(a,d,c)b
    m = A.mul
    ea, eb, ec, ed = vec(a), vec(b), vec(c), vec(d)
    lhs = vadd((1, m(m(ea, eb), m(ec, ed))), (1, m(m(ea, ed), m(ec, eb))))
    rhs = vadd((1, m(_cyclic_jacobian(A, ea, eb, ec), ed)), (1, m(_cyclic_jacobian(A, ea, ed, ec), eb)))
    return vadd((1, lhs), (-1, rhs))


@dataclass(frozen=True)
class Law:
    label: str
    arity: int
    residual: object


class IdentityKind(enum.Enum):
    """Identities that can be checked on a SuperAlgebra, each with its arity."""

    SuperAntiCommutative = (Law("ab = -(-1)^{|a||b|} ba", 2, _anticommutative),)
    SuperZinbiel = (Law("a(bc) = (ab)c + (-1)^{|a||b|}(ba)c", 3, _zinbiel),)
    SuperTortkara = (Law("super Tortkara", 4, _tortkara),)
    Malcev = (Law("super Malcev", 4, _malcev),)
    SuperJacobi = (Law("J_s(a,b,c) = 0", 3, _jacobi),)
    SuperCommutativeAssociative = (
        Law("ab = (-1)^{|a||b|} ba", 2, _supercommutative),
        Law("(ab)c = a(bc)", 3, _associative),
    )
    OddZinbiel = (Law("a(bc) = (-1)^{|a|+1}(ab)c + (-1)^{|a|(|b|+1)}(ba)c", 3, _odd_zinbiel),)
    ClassicalAntiCommutative = (Law("ab = -ba", 2, _classical_anticommutative),)
    ClassicalTortkara = (Law("(ab)(cd)+(ad)(cb) = J(a,b,c)d + J(a,d,c)b", 4, _classical_tortkara),)

    @property
    def laws(self) -> tuple:
        return self.value

    @property
    def arity(self) -> int:
        return max(law.arity for law in self.value)

    @classmethod
    def parse(cls, text: str) -> "IdentityKind":
        key = text.replace("-", "").replace("_", "").lower()
        for kind in cls:
            if kind.name.lower() == key:
                return kind
        aliases = {"lie": cls.SuperJacobi, "jacobi": cls.SuperJacobi, "tortkara": cls.SuperTortkara,
                   "zinbiel": cls.SuperZinbiel, "anticommutative": cls.SuperAntiCommutative,
                   "oddzinbiel": cls.OddZinbiel, "identity5": cls.OddZinbiel,
                   "commutativeassociative": cls.SuperCommutativeAssociative,
                   "supercommassoc": cls.SuperCommutativeAssociative}
        if key in aliases:
            return aliases[key]
        raise ValueError(f"unknown identity {text!r}; choose from "
                         + ", ".join(k.name for k in cls))


@dataclass
class IdentityVerdict:
    kind: IdentityKind
    holds: bool
    witness: tuple | None = None  # 0-based basis indices
    residual: dict | None = None
    law: str | None = None
    checked: int = 0

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "fails"

    def witness_text(self) -> str:
        if self.holds:
            return ""
        args = ", ".join(f"e{i + 1}" for i in self.witness)
        return f"({args}) -> {vfmt(self.residual)}"

    def __str__(self):
        if self.holds:
            return f"{self.kind.name}: holds ({self.checked} tuples)"
        return f"{self.kind.name}: fails at {self.witness_text()} [{self.law}]"

    def __bool__(self):
        return self.holds


def verify_identity(A: SuperAlgebra, kind, tuples=None) -> IdentityVerdict:
    """Evaluate every law of ``kind`` on all basis tuples in lexicographic order.

    Grading is validated when the algebra is built, so a malformed algebra
    never reaches this point.  ``tuples`` optionally restricts the sweep
    (for pruned checks); it must be an iterable of index tuples of the
    largest arity, and shorter laws use the leading indices.
    """
    if isinstance(kind, str):
        kind = IdentityKind.parse(kind)
    checked = 0
    for law in kind.laws:
        source = tuples if tuples is not None else product(range(A.dim), repeat=law.arity)
        seen = set() if tuples is not None and law.arity < kind.arity else None
        for t in source:
            t = tuple(t[:law.arity])
            if seen is not None:
                if t in seen:
                    continue
                seen.add(t)
            checked += 1
            res = law.residual(A, *t)
            if res:
                return IdentityVerdict(kind, False, t, res, law.label, checked)
    return IdentityVerdict(kind, True, checked=checked)


def residual(A: SuperAlgebra, kind, *indices) -> dict:
    """The first law's residual of ``kind`` at the given basis indices."""
    if isinstance(kind, str):
        kind = IdentityKind.parse(kind)
    law = next(law for law in kind.laws if law.arity == len(indices))
    return law.residual(A, *indices)


def evaluate_on_elements(A: SuperAlgebra, kind, *elements) -> dict:
    """Residual of a law on arbitrary homogeneous elements, by multilinear expansion.

    Used to spot-check that basis-tuple verification is equivalent to the
    identity on all elements.
    """
    if isinstance(kind, str):
        kind = IdentityKind.parse(kind)
    law = next(law for law in kind.laws if law.arity == len(elements))
    total: dict = {}
    for idx in product(*(sorted(e) for e in elements)):
        coef = 1
        for e, i in zip(elements, idx):
            coef *= e[i]
        total = vadd((1, total), (coef, law.residual(A, *idx)))
    return total
