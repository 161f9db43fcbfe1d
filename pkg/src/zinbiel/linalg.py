"""Exact sparse linear algebra over Q.

Vectors are dicts mapping basis labels to exact scalars.  :class:`Echelon`
keeps its rows in reduced row echelon form with pivots chosen as the smallest
label under a sort key, so the basis it reports is reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graded import FreeElement, scalar, word_key


def _axpy(target: dict, factor, row: dict):
    for k, v in row.items():
        nv = target.get(k, 0) + factor * v
        if nv:
            target[k] = nv
        else:
            target.pop(k, None)


class Echelon:
    """Incrementally maintained reduced row echelon form."""

    def __init__(self, key=word_key):
        self._key = key
        self._rows: dict = {}

    def reduce(self, vec: dict) -> dict:
        """Remainder of ``vec`` modulo the current row space."""
        rem = {k: v for k, v in vec.items() if v}
        for k in [k for k in rem if k in self._rows]:
            c = rem.get(k)
            if c:
                _axpy(rem, -c, self._rows[k])
        return rem

    def add(self, vec: dict) -> bool:
        """Insert a vector; returns True if it enlarged the span."""
        rem = self.reduce(vec)
        if not rem:
            return False
        pivot = min(rem, key=self._key)
        inv = Fraction(1) / Fraction(rem[pivot])
        row = {k: scalar(v * inv) for k, v in rem.items()}
        for other in self._rows.values():
            c = other.get(pivot)
            if c:
                _axpy(other, -c, row)
        self._rows[pivot] = row
        return True

    def extend(self, vecs) -> "Echelon":
        for v in vecs:
            self.add(v)
        return self

    def __contains__(self, vec: dict) -> bool:
        return not self.reduce(vec)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def pivots(self) -> list:
        return sorted(self._rows, key=self._key)

    def rows(self) -> list:
        return [dict(self._rows[p]) for p in self.pivots()]

    def copy(self) -> "Echelon":
        other = Echelon(self._key)
        other._rows = {p: dict(r) for p, r in self._rows.items()}
        return other


def rank(vectors, key=word_key) -> int:
    return Echelon(key).extend(vectors).rank


def nullspace(columns: list, key=word_key) -> list:
    """Basis of the relations ``sum_i c_i * columns[i] == 0``.

    ``columns`` is a list of sparse vectors; the result is a list of
    coefficient lists of length ``len(columns)``.
    """
    n = len(columns)
    # Row-reduce the augmented system [column | e_i] and keep the rows whose
    # column part vanished.
    pivots: dict = {}
    relations = []
    for i, col in enumerate(columns):
        vec = {("v", k): c for k, c in col.items() if c}
        vec[("e", i)] = 1
        for k in [k for k in vec if k in pivots]:
            c = vec.get(k)
            if c:
                _axpy(vec, -c, pivots[k])
        lead = [k for k in vec if k[0] == "v"]
        if not lead:
            relations.append(vec)
            continue
        pivot = min(lead, key=lambda k: key(k[1]))
        inv = Fraction(1) / Fraction(vec[pivot])
        row = {k: scalar(v * inv) for k, v in vec.items()}
        for other in pivots.values():
            c = other.get(pivot)
            if c:
                _axpy(other, -c, row)
        for rel in relations:
            c = rel.get(pivot)
            if c:
                _axpy(rel, -c, row)
        pivots[pivot] = row
    out = Echelon(key=lambda i: i)
    for rel in relations:
        out.add({k[1]: v for k, v in rel.items() if k[0] == "e"})
    return [[r.get(i, 0) for i in range(n)] for r in out.rows()]


@dataclass(frozen=True)
class ComponentSpan:
    """A subspace of one multidegree component, stored in reduced echelon form."""

    multidegree: object
    basis: tuple = field(default=())

    @classmethod
    def from_elements(cls, multidegree, elements) -> "ComponentSpan":
        ech = Echelon()
        for f in elements:
            ech.add(dict(f.terms))
        return cls(multidegree, tuple(FreeElement._wrap(r) for r in ech.rows()))

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def echelon(self) -> Echelon:
        ech = Echelon()
        for f in self.basis:
            ech.add(dict(f.terms))
        return ech

    def __contains__(self, f: FreeElement) -> bool:
        return not self.echelon().reduce(dict(f.terms))

    def reduce(self, f: FreeElement) -> FreeElement:
        return FreeElement._wrap(self.echelon().reduce(dict(f.terms)))

    def rank_with(self, *extra) -> int:
        ech = self.echelon()
        for f in extra:
            ech.add(dict(f.terms))
        return ech.rank

    def leading_words(self) -> list:
        return [min(f.terms, key=word_key) for f in self.basis]

    def __le__(self, other: "ComponentSpan") -> bool:
        ech = other.echelon()
        return all(not ech.reduce(dict(f.terms)) for f in self.basis)

    def same_span(self, other: "ComponentSpan") -> bool:
        return self.dimension == other.dimension and self <= other

    def __str__(self):
        body = "; ".join(str(f) for f in self.basis) or "0"
        return f"span[{self.dimension}]{{{body}}}"
