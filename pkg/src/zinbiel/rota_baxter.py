"""Rota-Baxter operators of either parity and the Zinbiel structures they induce.

A homogeneous operator R of parity |R| is Rota-Baxter when

    R(x)R(y) = R((-1)^{|R|(|x|+|R|)} R(x)y + xR(y))

for homogeneous x, y.  On a supercommutative associative algebra the product
a o b = R(a)b is Zinbiel for even R and satisfies the odd identity

    a o (b o c) = (-1)^{|a|+1}(a o b) o c + (-1)^{|a|(|b|+1)}(b o a) o c

for odd R.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import MalformedAlgebraError, NotRotaBaxterError, ParseError, TowerError
from .fd.algebra import SuperAlgebra, vadd, vec, vfmt
from .fd.identities import IdentityKind, verify_identity
from .graded import format_scalar, parse_parity, scalar, sign


class GradedOperator:
    """A parity-homogeneous linear map given by its matrix.

    ``matrix`` maps 0-based ``(j, i)`` to the coefficient of e_j in R(e_i).
    """

    def __init__(self, dim: int, matrix=(), parity=0):
        self.dim = dim
        self.parity = parse_parity(parity)
        items = matrix.items() if hasattr(matrix, "items") else matrix
        cols: dict = {}
        for (j, i), c in items:
            if not (0 <= i < dim and 0 <= j < dim):
                raise MalformedAlgebraError(f"operator index ({j}, {i}) out of range")
            c = scalar(c)
            if c:
                cols.setdefault(i, {})[j] = c
        self._cols = cols

    @classmethod
    def identity(cls, dim: int) -> "GradedOperator":
        return cls(dim, {(i, i): 1 for i in range(dim)}, 0)

    @classmethod
    def zero(cls, dim: int, parity=0) -> "GradedOperator":
        return cls(dim, {}, parity)

    @classmethod
    def from_rows(cls, rows, parity=0) -> "GradedOperator":
        """From a dense matrix given as a list of rows."""
        return cls(len(rows), {(j, i): c for j, row in enumerate(rows) for i, c in enumerate(row)}, parity)

    @property
    def matrix(self) -> dict:
        return {(j, i): c for i, col in sorted(self._cols.items()) for j, c in sorted(col.items())}

    def column(self, i: int) -> dict:
        return dict(self._cols.get(i, {}))

    def apply(self, v: dict) -> dict:
        return vadd(*((c, self._cols.get(i, {})) for i, c in v.items()))

    def power(self, n: int) -> "GradedOperator":
        out = GradedOperator.identity(self.dim)
        for _ in range(n):
            out = self.compose(out)
        out.parity = (self.parity * n) & 1
        return out

    def compose(self, other: "GradedOperator") -> "GradedOperator":
        """self after other."""
        m = {}
        for i in range(self.dim):
            for j, c in self.apply(other.column(i)).items():
                m[(j, i)] = c
        return GradedOperator(self.dim, m, self.parity ^ other.parity)

    def check(self, A: SuperAlgebra):
        """Reject dimension mismatches and entries that break parity homogeneity."""
        if self.dim != A.dim:
            raise MalformedAlgebraError(f"operator has dimension {self.dim}, algebra {A.dim}")
        for (j, i), c in self.matrix.items():
            if A.parities[j] != A.parities[i] ^ self.parity:
                raise MalformedAlgebraError(
                    f"R(e{i + 1}) has an e{j + 1} component, not allowed for parity {self.parity}")

    def __eq__(self, other):
        return (isinstance(other, GradedOperator) and self.dim == other.dim
                and self.parity == other.parity and self.matrix == other.matrix)

    def __repr__(self):
        return f"GradedOperator(dim={self.dim}, parity={self.parity}, {len(self.matrix)} entries)"

    def describe(self) -> str:
        return "\n".join(f"R(e{i + 1}) = {vfmt(self.column(i))}" for i in range(self.dim))

    def dumps(self) -> str:
        lines = [f"parity {'odd' if self.parity else 'even'}"]
        for (j, i), c in self.matrix.items():
            lines.append(f"{i + 1} {j + 1} {format_scalar(c)}")
        return "\n".join(lines) + "\n"


def load_operator(text: str, dim: int) -> GradedOperator:
    """Parse ``parity even|odd`` followed by ``i j num[/den]`` lines: R(e_i) has coefficient num on e_j."""
    parity = None
    matrix = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        col = raw.index(toks[0]) + 1
        if toks[0] == "parity":
            if parity is not None or len(toks) != 2 or toks[1] not in ("even", "odd"):
                raise ParseError("expected a single 'parity even|odd' header", lineno, col)
            parity = int(toks[1] == "odd")
            continue
        if parity is None:
            raise ParseError("missing 'parity even|odd' header", lineno, col)
        if len(toks) != 3:
            raise ParseError("expected 'i j value'", lineno, col)
        try:
            i, j = int(toks[0]), int(toks[1])
        except ValueError:
            raise ParseError("indices must be integers", lineno, col) from None
        if not (1 <= i <= dim and 1 <= j <= dim):
            raise ParseError(f"index out of range 1..{dim}", lineno, col)
        try:
            c = scalar(Fraction(toks[2]))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad rational {toks[2]!r}", lineno, raw.index(toks[2]) + 1) from None
        if (j - 1, i - 1) in matrix:
            raise ParseError(f"duplicate entry ({i}, {j})", lineno, col)
        matrix[(j - 1, i - 1)] = c
    if parity is None:
        raise ParseError("missing 'parity even|odd' header", 1, 1)
    return GradedOperator(dim, matrix, parity)


def read_operator(path, dim: int) -> GradedOperator:
    with open(path, encoding="utf-8") as fh:
        return load_operator(fh.read(), dim)


@dataclass
class RBVerdict:
    holds: bool
    witness: tuple | None = None
    residual: dict | None = None

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "fails"

    def __bool__(self):
        return self.holds

    def __str__(self):
        if self.holds:
            return "Rota-Baxter: holds"
        i, j = self.witness
        return f"Rota-Baxter: fails at (e{i + 1}, e{j + 1}) -> {vfmt(self.residual)}"


def rota_baxter_residual(A: SuperAlgebra, R: GradedOperator, i: int, j: int) -> dict:
    x, y = vec(i), vec(j)
    Rx, Ry = R.apply(x), R.apply(y)
    s = sign(R.parity & (A.parities[i] ^ R.parity))
    inner = vadd((s, A.mul(Rx, y)), (1, A.mul(x, Ry)))
    return vadd((1, A.mul(Rx, Ry)), (-1, R.apply(inner)))


def is_rota_baxter(A: SuperAlgebra, R: GradedOperator) -> RBVerdict:
    """Check the defining identity on all basis pairs (sufficient by bilinearity)."""
    R.check(A)
    for i in range(A.dim):
        for j in range(A.dim):
            res = rota_baxter_residual(A, R, i, j)
            if res:
                return RBVerdict(False, (i, j), res)
    return RBVerdict(True)


def _product_from(A: SuperAlgebra, f, product_parity: int, name=None) -> SuperAlgebra:
    constants = {}
    for i in range(A.dim):
        for j in range(A.dim):
            for k, c in f(i, j).items():
                constants[(i, j, k)] = c
    return SuperAlgebra(A.even_dim, A.odd_dim, constants, product_parity, name, A.parities)


def derived_product(A: SuperAlgebra, R: GradedOperator, check: bool = True) -> SuperAlgebra:
    """a o b = R(a) b on a supercommutative associative algebra."""
    if check:
        v = verify_identity(A, IdentityKind.SuperCommutativeAssociative)
        if not v.holds:
            raise MalformedAlgebraError(f"not supercommutative associative: {v}")
        rb = is_rota_baxter(A, R)
        if not rb.holds:
            raise NotRotaBaxterError(str(rb))
    else:
        R.check(A)
    return _product_from(A, lambda i, j: A.mul(R.apply(vec(i)), vec(j)),
                         A.product_parity ^ R.parity, name="derived")


def next_level(Z: SuperAlgebra, R: GradedOperator) -> SuperAlgebra:
    """a o' b = R(a) o b + a o R(b)."""
    return _product_from(
        Z, lambda i, j: vadd((1, Z.mul(R.apply(vec(i)), vec(j))), (1, Z.mul(vec(i), R.apply(vec(j))))),
        Z.product_parity)


def tower_products(Z: SuperAlgebra, R: GradedOperator, n: int) -> list:
    """[o_0, ..., o_n] by the recursion alone, with no certification."""
    levels = [Z]
    for _ in range(n):
        levels.append(next_level(levels[-1], R))
    return levels


def derived_tower(Z: SuperAlgebra, R: GradedOperator, n: int) -> list:
    """Levels o_0 = Z, ..., o_n, certifying Zinbiel and Rota-Baxter at every level."""
    if R.parity:
        raise TowerError("the tower needs an even operator", 0)
    R.check(Z)
    levels = [Z]
    for level in range(n + 1):
        cur = levels[level]
        v = verify_identity(cur, IdentityKind.SuperZinbiel)
        if not v.holds:
            raise TowerError(f"not Zinbiel: {v}", level)
        rb = is_rota_baxter(cur, R)
        if not rb.holds:
            raise TowerError(str(rb), level)
        if level < n:
            nxt = next_level(cur, R)
            nxt.name = f"level {level + 1}"
            levels.append(nxt)
    return levels


def binomial_product(A: SuperAlgebra, R: GradedOperator, n: int, convention: str = "tower") -> SuperAlgebra:
    """Closed forms for level n of the tower over a o_0 b = R(a) b.

    ``convention="paper"``: sum_i C(n,i) R^i(a) R^{n-i+1}(b), the formula as
    usually printed, whose n = 0 term is a R(b).
    ``convention="tower"``: sum_i C(n,i) R^{n-i+1}(a) R^i(b), which is what the
    recursion produces from a o_0 b = R(a) b.
    """
    if convention not in ("paper", "tower"):
        raise ValueError("convention must be 'paper' or 'tower'")
    powers = [R.power(k) for k in range(n + 2)]

    def f(i, j):
        terms = []
        for t in range(n + 1):
            left, right = (t, n - t + 1) if convention == "paper" else (n - t + 1, t)
            terms.append((comb(n, t), A.mul(powers[left].apply(vec(i)), powers[right].apply(vec(j)))))
        return vadd(*terms)

    return _product_from(A, f, A.product_parity ^ R.parity, name=f"binomial {convention} n={n}")


def parity_shift(Z: SuperAlgebra) -> SuperAlgebra:
    """Pi(Z) with a * b = (-1)^{|a|} Pi(Pi(a) o Pi(b)), |a| taken in Pi(Z)."""
    new = tuple(1 - p for p in Z.parities)
    constants = {(i, j, k): sign(new[i]) * c for (i, j, k), c in Z.constants.items()}
    return SuperAlgebra(Z.odd_dim, Z.even_dim, constants, Z.product_parity ^ 1, "shifted", new)


def parity_unshift(A: SuperAlgebra) -> SuperAlgebra:
    """Inverse of :func:`parity_shift`: solve a * b for the original product."""
    new = tuple(1 - p for p in A.parities)
    constants = {(i, j, k): sign(A.parities[i]) * c for (i, j, k), c in A.constants.items()}
    return SuperAlgebra(A.odd_dim, A.even_dim, constants, A.product_parity ^ 1, "unshifted", new)


# Exact solving of the Rota-Baxter system, used to produce test fixtures.

def rota_baxter_system(A: SuperAlgebra, parity: int):
    """Polynomial equations in the entries of a parity-homogeneous operator."""
    import sympy

    n = A.dim
    R = sympy.zeros(n, n)
    syms = []
    for i in range(n):
        for j in range(n):
            if A.parities[j] == A.parities[i] ^ parity:
                s = sympy.Symbol(f"r{j + 1}_{i + 1}")
                R[j, i] = s
                syms.append(s)

    def apply(v):
        return [sum((R[j, i] * v[i] for i in range(n)), sympy.Integer(0)) for j in range(n)]

    def mul(u, v):
        out = [sympy.Integer(0)] * n
        for (i, j, k), c in A.constants.items():
            out[k] += sympy.Rational(c) * u[i] * v[j]
        return out

    eqs = []
    for i in range(n):
        for j in range(n):
            x = [int(t == i) for t in range(n)]
            y = [int(t == j) for t in range(n)]
            Rx, Ry = apply(x), apply(y)
            s = sign(parity & (A.parities[i] ^ parity))
            inner = [s * a + b for a, b in zip(mul(Rx, y), mul(x, Ry))]
            lhs, rhs = mul(Rx, Ry), apply(inner)
            for a, b in zip(lhs, rhs):
                e = sympy.expand(a - b)
                if e != 0:
                    eqs.append(e)
    return eqs, syms, R


def solves_system(A: SuperAlgebra, R: GradedOperator) -> bool:
    """Substitute R's entries into the polynomial Rota-Baxter system.

    This is a second route to :func:`is_rota_baxter`: the system is built
    symbolically, independently of the numeric residual.
    """
    import sympy

    R.check(A)
    eqs, _, M = rota_baxter_system(A, R.parity)
    values = {M[j, i]: sympy.Rational(R.matrix.get((j, i), 0))
              for j in range(A.dim) for i in range(A.dim) if M[j, i] != 0}
    return all(sympy.expand(e.subs(values)) == 0 for e in eqs)


def solve_rota_baxter(A: SuperAlgebra, parity: int) -> list:
    """All solution families of the Rota-Baxter system, as sympy substitution dicts."""
    import sympy

    eqs, syms, _ = rota_baxter_system(A, parity)
    if not eqs:
        return [{}]
    return sympy.solve(eqs, syms, dict=True)


def operator_from_solution(A: SuperAlgebra, parity: int, solution: dict, free_values=None) -> GradedOperator:
    """Instantiate a solution family, setting free symbols from ``free_values`` (default 1)."""
    import sympy

    _, syms, R = rota_baxter_system(A, parity)
    free_values = free_values or {}
    M = R.subs(solution)
    free = sorted(M.free_symbols, key=str)
    M = M.subs({s: free_values.get(str(s), 1) for s in free})
    matrix = {}
    for j in range(A.dim):
        for i in range(A.dim):
            v = sympy.nsimplify(M[j, i])
            if v != 0:
                if not v.is_Rational:
                    raise ValueError(f"entry ({j}, {i}) is not rational: {v}")
                matrix[(j, i)] = Fraction(int(v.p), int(v.q))
    return GradedOperator(A.dim, matrix, parity)


def truncated_free_zinbiel(alphabet, max_length: int) -> tuple:
    """Zin(X) modulo words longer than ``max_length``, as a structure-constant algebra.

    Returns ``(algebra, words)``; basis vector k is ``words[k]``.
    """
    from .free.products import zinbiel_words
    from .graded import word_parity

    words = []
    for n in range(1, max_length + 1):
        words.extend(alphabet.words(n))
    index = {w: k for k, w in enumerate(words)}
    parities = tuple(word_parity(w) for w in words)
    constants = {}
    for i, u in enumerate(words):
        for j, v in enumerate(words):
            if len(u) + len(v) > max_length:
                continue
            for w, c in zinbiel_words(u, v):
                constants[(i, j, index[w])] = c
    A = SuperAlgebra(parities.count(0), parities.count(1), constants, 0,
                     f"Zin/{max_length}", parities)
    return A, words
