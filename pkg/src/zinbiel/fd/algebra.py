"""Finite-dimensional superalgebras given by exact structure constants."""
from __future__ import annotations

from fractions import Fraction
from itertools import product as _product

from ..errors import MalformedAlgebraError, ParseError
from ..graded import format_scalar, scalar, sign

# Vectors are sparse dicts {basis index: scalar}, 0-based.


def vec(i: int) -> dict:
    return {i: 1}


def vadd(*pairs) -> dict:
    """Linear combination of vectors given as (coefficient, vector) pairs."""
    out: dict = {}
    for c, v in pairs:
        if not c:
            continue
        for k, x in v.items():
            y = out.get(k, 0) + c * x
            if y:
                out[k] = y
            else:
                out.pop(k, None)
    return out


def vfmt(v: dict, names=None) -> str:
    """Canonical text of a vector: ``e1 - 1/2 e3``."""
    if not v:
        return "0"
    parts = []
    for k in sorted(v):
        c = scalar(v[k])
        name = names[k] if names else f"e{k + 1}"
        mag = abs(c)
        body = name if mag == 1 else f"{format_scalar(mag)} {name}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(parts)


class SuperAlgebra:
    """A superalgebra with basis e_1..e_{p+q}, the first p even.

    ``constants`` maps 0-based ``(i, j, k)`` to c_{ij}^k, where
    e_i e_j = sum_k c_{ij}^k e_k.  ``product_parity`` is 1 for products that
    shift parity (such as the derived product of an odd operator); the
    grading condition is then |e_k| = |e_i| + |e_j| + product_parity.
    """

    def __init__(self, even_dim: int, odd_dim: int, constants=(), product_parity: int = 0,
                 name: str | None = None, parities=None):
        if even_dim < 0 or odd_dim < 0:
            raise MalformedAlgebraError("dimensions must be natural numbers")
        self.even_dim = even_dim
        self.odd_dim = odd_dim
        self.product_parity = product_parity & 1
        self.name = name
        if parities is None:
            parities = (0,) * even_dim + (1,) * odd_dim
        parities = tuple(int(p) & 1 for p in parities)
        if len(parities) != even_dim + odd_dim or sum(parities) != odd_dim:
            raise MalformedAlgebraError("parities do not match the dimensions")
        self.parities = parities
        items = constants.items() if hasattr(constants, "items") else constants
        table: dict = {}
        n = self.dim
        for key, c in items:
            i, j, k = key
            if not all(isinstance(t, int) and 0 <= t < n for t in (i, j, k)):
                raise MalformedAlgebraError(f"index out of range in {key}")
            c = scalar(c)
            if not c:
                continue
            if parities[k] != parities[i] ^ parities[j] ^ self.product_parity:
                raise MalformedAlgebraError(
                    f"c_{{{i + 1}{j + 1}}}^{k + 1} = {format_scalar(c)} violates the grading")
            row = table.setdefault((i, j), {})
            row[k] = row.get(k, 0) + c
            if not row[k]:
                del row[k]
        self._table = {ij: row for ij, row in table.items() if row}

    @property
    def dim(self) -> int:
        return len(self.parities)

    @property
    def constants(self) -> dict:
        return {(i, j, k): c for (i, j), row in sorted(self._table.items()) for k, c in sorted(row.items())}

    def product(self, i: int, j: int) -> dict:
        return dict(self._table.get((i, j), {}))

    def mul(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                row = self._table.get((i, j))
                if not row:
                    continue
                ab = a * b
                for k, c in row.items():
                    y = out.get(k, 0) + ab * c
                    if y:
                        out[k] = y
                    else:
                        out.pop(k, None)
        return out

    def parity_of(self, v: dict):
        ps = {self.parities[k] for k in v}
        return ps.pop() if len(ps) == 1 else None

    def basis_tuples(self, arity: int):
        return _product(range(self.dim), repeat=arity)

    def is_trivial(self) -> bool:
        return not self._table

    def map_constants(self, f) -> "SuperAlgebra":
        return SuperAlgebra(self.even_dim, self.odd_dim,
                            {key: f(c) for key, c in self.constants.items()},
                            self.product_parity, self.name, self.parities)

    def __eq__(self, other):
        if not isinstance(other, SuperAlgebra):
            return NotImplemented
        return (self.parities == other.parities and self.product_parity == other.product_parity
                and self.constants == other.constants)

    def __hash__(self):
        return hash((self.parities, self.product_parity, frozenset(self.constants.items())))

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<SuperAlgebra{label} ({self.even_dim}|{self.odd_dim}) {len(self.constants)} constants>"

    def describe(self) -> str:
        lines = []
        for (i, j), row in sorted(self._table.items()):
            lines.append(f"e{i + 1}*e{j + 1} = {vfmt(row)}")
        return "\n".join(lines) or "(trivial)"

    # text format

    def dumps(self) -> str:
        lines = [f"dims {self.even_dim} {self.odd_dim}"]
        if self.product_parity:
            lines.append("product odd")
        if self.parities != (0,) * self.even_dim + (1,) * self.odd_dim:
            lines.append("parities " + " ".join("odd" if p else "even" for p in self.parities))
        for (i, j, k), c in self.constants.items():
            lines.append(f"{i + 1} {j + 1} {k + 1} {format_scalar(c)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str, name=None) -> "SuperAlgebra":
        return load_algebra(text, name)


def from_products(even_dim: int, odd_dim: int, products: dict, name=None,
                  anticommutative_fill: bool = True) -> SuperAlgebra:
    """Build an algebra from a 1-based table ``{(i, j): {k: c}}``.

    With ``anticommutative_fill`` every listed product e_i e_j also defines
    e_j e_i = -(-1)^{|e_i||e_j|} e_i e_j; a listed partner that disagrees is
    an error.
    """
    par = (0,) * even_dim + (1,) * odd_dim
    table: dict = {}
    for (i, j), row in products.items():
        row = {k: scalar(c) for k, c in row.items() if scalar(c)}
        table[(i, j)] = row
    if anticommutative_fill:
        for (i, j), row in list(table.items()):
            s = -sign(par[i - 1] & par[j - 1])
            partner = {k: s * c for k, c in row.items()}
            if (j, i) in table and table[(j, i)] != partner:
                raise MalformedAlgebraError(
                    f"e{i}*e{j} and e{j}*e{i} contradict super anti-commutativity")
            table[(j, i)] = partner
    constants = {}
    for (i, j), row in table.items():
        for k, c in row.items():
            constants[(i - 1, j - 1, k - 1)] = c
    return SuperAlgebra(even_dim, odd_dim, constants, name=name)


def _parse_scalar(tok: str, lineno: int, col: int):
    try:
        return scalar(Fraction(tok))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {tok!r}", lineno, col) from None


def load_algebra(text: str, name=None) -> SuperAlgebra:
    """Parse the ``dims p q`` / ``i j k num[/den]`` format (1-based, '#' comments)."""
    dims = None
    product_parity = 0
    parities = None
    constants: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        col = raw.index(toks[0]) + 1
        if toks[0] == "dims":
            if dims is not None:
                raise ParseError("duplicate dims header", lineno, col)
            if len(toks) != 3 or not all(t.isdigit() for t in toks[1:]):
                raise ParseError("expected 'dims p q'", lineno, col)
            dims = (int(toks[1]), int(toks[2]))
            continue
        if dims is None:
            raise ParseError("missing 'dims p q' header", lineno, col)
        if toks[0] == "product":
            if len(toks) != 2 or toks[1] not in ("even", "odd"):
                raise ParseError("expected 'product even|odd'", lineno, col)
            product_parity = int(toks[1] == "odd")
            continue
        if toks[0] == "parities":
            try:
                parities = tuple({"even": 0, "odd": 1}[t] for t in toks[1:])
            except KeyError:
                raise ParseError("parities must be 'even' or 'odd'", lineno, col) from None
            continue
        if len(toks) != 4:
            raise ParseError("expected 'i j k value'", lineno, col)
        try:
            i, j, k = (int(t) for t in toks[:3])
        except ValueError:
            raise ParseError("indices must be integers", lineno, col) from None
        n = dims[0] + dims[1]
        if not all(1 <= t <= n for t in (i, j, k)):
            raise ParseError(f"index out of range 1..{n}", lineno, col)
        c = _parse_scalar(toks[3], lineno, raw.index(toks[3], col - 1) + 1)
        par = parities or (0,) * dims[0] + (1,) * dims[1]
        if c and par[k - 1] != par[i - 1] ^ par[j - 1] ^ product_parity:
            raise MalformedAlgebraError(f"line {lineno}: c_{{{i}{j}}}^{k} violates the grading")
        key = (i - 1, j - 1, k - 1)
        if key in constants:
            raise ParseError(f"duplicate entry for ({i}, {j}, {k})", lineno, col)
        constants[key] = c
    if dims is None:
        raise ParseError("missing 'dims p q' header", 1, 1)
    try:
        return SuperAlgebra(dims[0], dims[1], constants, product_parity, name, parities)
    except MalformedAlgebraError as exc:
        raise MalformedAlgebraError(str(exc)) from None


def read_algebra(path) -> SuperAlgebra:
    with open(path, encoding="utf-8") as fh:
        return load_algebra(fh.read(), name=str(path))


def zero_algebra(even_dim: int, odd_dim: int) -> SuperAlgebra:
    return SuperAlgebra(even_dim, odd_dim, {}, name="zero")
