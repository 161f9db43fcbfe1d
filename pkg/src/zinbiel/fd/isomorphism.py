"""Isomorphism tests between small superalgebras.

An even isomorphism A -> B is a block-diagonal invertible matrix g with
g(e_i) g(e_j) = g(e_i e_j).  Adding t*det(g) - 1 turns invertibility into an
equation, so A and B are isomorphic over the algebraic closure of Q exactly
when the resulting polynomial ideal is proper, i.e. its reduced Groebner
basis is not [1].
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import sympy

from ..errors import ParameterDomainError
from .algebra import SuperAlgebra, vadd
from .catalog import _exact, lookup


@dataclass
class IsomorphismVerdict:
    verdict: str  # 'isomorphic' | 'distinct' | 'undetermined'
    detail: str = ""
    witness: object = None  # sympy Matrix when an explicit map was found

    def __bool__(self):
        return self.verdict == "isomorphic"

    def __str__(self):
        return self.verdict + (f" ({self.detail})" if self.detail else "")


def _blocks(A: SuperAlgebra):
    return [[i for i in range(A.dim) if A.parities[i] == p] for p in (0, 1)]


def isomorphism_system(A: SuperAlgebra, B: SuperAlgebra):
    """Polynomial equations whose common zeros are even isomorphisms A -> B."""
    if A.parities != B.parities or A.product_parity != B.product_parity:
        return None, None, None
    n = A.dim
    g = sympy.zeros(n, n)
    symbols = []
    for block in _blocks(A):
        for a in block:
            for i in block:
                s = sympy.Symbol(f"g{a + 1}_{i + 1}")
                g[a, i] = s
                symbols.append(s)
    eqs = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = 0
                for a in range(n):
                    if g[a, i] == 0:
                        continue
                    for b in range(n):
                        if g[b, j] == 0:
                            continue
                        c = B.product(a, b).get(k)
                        if c:
                            lhs += sympy.Rational(c) * g[a, i] * g[b, j]
                rhs = sum((sympy.Rational(c) * g[k, m] for m, c in A.product(i, j).items()), sympy.Integer(0))
                e = sympy.expand(lhs - rhs)
                if e != 0:
                    eqs.append(e)
    t = sympy.Symbol("t_inv")
    eqs.append(sympy.expand(t * g.det() - 1))
    return eqs, symbols + [t], g


def are_isomorphic(A: SuperAlgebra, B: SuperAlgebra) -> IsomorphismVerdict:
    """Decide even isomorphism over the algebraic closure by a Groebner basis."""
    if A.parities != B.parities:
        return IsomorphismVerdict("distinct", "different dimensions or parities")
    if A.product_parity != B.product_parity:
        return IsomorphismVerdict("distinct", "different product parity")
    eqs, syms, g = isomorphism_system(A, B)
    try:
        basis = sympy.groebner(eqs, *syms, order="grevlex", domain="QQ")
    except Exception as exc:  # sympy raises a variety of internal errors
        return IsomorphismVerdict("undetermined", f"groebner failed: {exc}")
    if list(basis.exprs) == [1]:
        return IsomorphismVerdict("distinct", "change-of-basis system is inconsistent")
    return IsomorphismVerdict("isomorphic", "change-of-basis system has solutions", None)


def find_rational_isomorphism(A: SuperAlgebra, B: SuperAlgebra, bound: int = 2, tries: int = 2000, seed=0):
    """Search a bounded rational ansatz for an explicit isomorphism matrix.

    Entries are drawn from {p/q : |p| <= bound, 1 <= q <= bound}.  Returns a
    sympy Matrix or None; None proves nothing.
    """
    if A.parities != B.parities:
        return None
    rng = random.Random(seed)
    values = sorted({Fraction(p, q) for p in range(-bound, bound + 1) for q in range(1, bound + 1)})
    blocks = _blocks(A)
    n = A.dim
    for _ in range(tries):
        g = sympy.zeros(n, n)
        for block in blocks:
            for a in block:
                for i in block:
                    g[a, i] = sympy.Rational(rng.choice(values))
        if g.det() == 0:
            continue
        if is_homomorphism(A, B, g):
            return g
    return None


def is_homomorphism(A: SuperAlgebra, B: SuperAlgebra, g) -> bool:
    n = A.dim

    def image(i):
        return {a: Fraction(int(g[a, i].p), int(g[a, i].q)) for a in range(n) if g[a, i] != 0}

    imgs = [image(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            left = B.mul(imgs[i], imgs[j])
            right = vadd(*((c, imgs[m]) for m, c in A.product(i, j).items()))
            if vadd((1, left), (-1, right)):
                return False
    return True


FAMILIES = {"T3_12": "α", "T4_12": "α", "T9_21": "γ"}


def _family(name: str):
    entry = lookup(name)
    if not entry.parameterized:
        raise ParameterDomainError(f"{entry.name} is not a parameterized family")
    return entry


def family_isomorphism_check(family: str, alpha, beta, samples: int = 0) -> IsomorphismVerdict:
    """Decide whether two members of a one-parameter family are isomorphic.

    ``samples`` > 0 additionally runs that many tries of the bounded
    rational ansatz and attaches an explicit isomorphism when one is found.
    """
    entry = _family(family)
    alpha, beta = _exact(alpha), _exact(beta)
    verdict = are_isomorphic(entry.build(alpha), entry.build(beta))
    if verdict.verdict == "isomorphic" and samples:
        verdict.witness = find_rational_isomorphism(entry.build(alpha), entry.build(beta), tries=samples)
    return verdict


def expected_isomorphic(family: str, alpha, beta) -> bool:
    """The published closed-form conditions for the parameterized families."""
    key = _family(family).key
    alpha, beta = Fraction(_exact(alpha)), Fraction(_exact(beta))
    if key == "T9_21":
        return alpha == beta
    if key == "T3_12":
        return beta == alpha or (alpha != 1 and beta == (3 + alpha) / (alpha - 1))
    raise ParameterDomainError(f"no closed-form condition recorded for {family}")


def t3_invariant(alpha):
    """tr(M)^2 / det(M) for the matrix of e1 acting on the odd part of T^3_{1|2}(alpha).

    Scaling e1 and changing the odd basis leave it unchanged; it is
    (1 + alpha)^2 / (alpha - 1), undefined at alpha = 1.
    """
    alpha = Fraction(_exact(alpha))
    if alpha == 1:
        raise ParameterDomainError("the invariant is undefined at alpha = 1")
    return (1 + alpha) ** 2 / (alpha - 1)
