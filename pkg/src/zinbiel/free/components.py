"""Multidegree components of Zin(X) and of the free special Tortkara part ST(X).

ST(X) components are available three ways, each usable as an oracle for the
others:

* ``skew_rcom_basis``: bars of all words of the component, reduced;
* ``kernel_basis``: the kernel of ``p + id`` on the component;
* ``bracket_span``: iterated super commutators of generators, built degree by
  degree from bases of smaller components.
"""
from __future__ import annotations

from collections.abc import Mapping
from functools import lru_cache
from itertools import permutations, product

from ..errors import DegreeError, ParseError
from ..graded import Alphabet, FreeElement, multidegree_of, word_key
from ..linalg import ComponentSpan, Echelon, nullspace
from .products import bar, p_word, super_commutator


class Multidegree(Mapping):
    """Generator-occurrence counts, keyed by generator name."""

    __slots__ = ("_counts",)

    def __init__(self, counts=(), **kw):
        items = dict(counts.items() if isinstance(counts, Mapping) else counts)
        items.update(kw)
        clean = {}
        for name, n in items.items():
            name = getattr(name, "name", name)
            if not isinstance(n, int) or n < 0:
                raise ValueError(f"count for {name!r} must be a natural number")
            if n:
                clean[name] = n
        self._counts = clean

    @classmethod
    def parse(cls, text: str) -> "Multidegree":
        counts = {}
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            name, colon, n = part.partition(":")
            try:
                counts[name.strip()] = int(n) if colon else 1
            except ValueError:
                raise ParseError(f"bad count in {part!r}") from None
        return cls(counts)

    @classmethod
    def of_word(cls, w) -> "Multidegree":
        counts = {}
        for g in w:
            counts[g.name] = counts.get(g.name, 0) + 1
        return cls(counts)

    def __getitem__(self, name):
        return self._counts.get(getattr(name, "name", name), 0)

    def __iter__(self):
        return iter(self._counts)

    def __len__(self):
        return len(self._counts)

    def __hash__(self):
        return hash(frozenset(self._counts.items()))

    def __eq__(self, other):
        if isinstance(other, Mapping):
            return self._counts == {k: v for k, v in other.items() if v}
        return NotImplemented

    @property
    def total(self) -> int:
        return sum(self._counts.values())

    def __add__(self, other):
        out = dict(self._counts)
        for k, v in other.items():
            out[k] = out.get(k, 0) + v
        return Multidegree(out)

    def __sub__(self, other):
        out = dict(self._counts)
        for k, v in other.items():
            out[k] = out.get(k, 0) - v
        if any(v < 0 for v in out.values()):
            raise ValueError("multidegree difference is negative")
        return Multidegree(out)

    def __le__(self, other):
        return all(other[k] >= v for k, v in self._counts.items())

    def key(self, alphabet: Alphabet) -> tuple:
        """Same signature as :func:`zinbiel.graded.multidegree_of`."""
        self.check(alphabet)
        return tuple(sorted((alphabet[n].ordinal, c) for n, c in self._counts.items()))

    def check(self, alphabet: Alphabet):
        for name in self._counts:
            alphabet[name]  # raises UnboundGeneratorError

    def submultidegrees(self, alphabet: Alphabet, proper=False):
        """All nonzero multidegrees below this one, ordered by total degree then canonically."""
        names = [g.name for g in alphabet if self[g.name]]
        ranges = [range(self[n] + 1) for n in names]
        out = []
        for counts in product(*ranges):
            m = Multidegree(dict(zip(names, counts)))
            if m.total == 0 or (proper and m == self):
                continue
            out.append(m)
        out.sort(key=lambda m: (m.total, tuple(-m[g.name] for g in alphabet)))
        return out

    def words(self, alphabet: Alphabet) -> list:
        """All words with these letter counts, in canonical order."""
        self.check(alphabet)
        letters = []
        for g in alphabet:
            letters.extend([g] * self[g.name])
        return sorted(set(permutations(letters)), key=word_key)

    def __repr__(self):
        return f"Multidegree({self._counts!r})"

    def __str__(self):
        return ",".join(f"{k}:{v}" for k, v in self._counts.items())


def as_multidegree(d) -> Multidegree:
    if isinstance(d, Multidegree):
        return d
    if isinstance(d, str):
        return Multidegree.parse(d)
    return Multidegree(d)


def component_of(f: FreeElement, alphabet: Alphabet):
    """The multidegree of a nonzero multihomogeneous element."""
    degs = f.multidegrees()
    if len(degs) != 1:
        raise DegreeError(f"{f} is not multihomogeneous")
    w = next(iter(f.terms))
    return Multidegree.of_word(w)


def skew_rcom_basis(d, alphabet: Alphabet) -> list:
    """Independent bars of component words, kept in canonical word order.

    Returns the subset of ``bar(w)`` (``w`` running through the component's
    words in canonical order) that enlarges the running span.
    """
    d = as_multidegree(d)
    if d.total < 2:
        raise DegreeError("skew-rcom elements need total degree >= 2")
    ech = Echelon()
    out = []
    for w in d.words(alphabet):
        b = bar(FreeElement.from_word(w))
        if b and ech.add(dict(b.terms)):
            out.append(b)
    return out


def kernel_basis(d, alphabet: Alphabet) -> list:
    """Basis of ker(p + id) on the component, found by exact elimination."""
    d = as_multidegree(d)
    if d.total < 2:
        raise DegreeError("the criterion applies only in degree >= 2")
    words = d.words(alphabet)
    columns = []
    for w in words:
        v, s = p_word(w)
        col = {w: 1}
        col[v] = col.get(v, 0) + s
        columns.append({k: c for k, c in col.items() if c})
    out = []
    for rel in nullspace(columns):
        out.append(FreeElement({w: c for w, c in zip(words, rel) if c}))
    return out


@lru_cache(maxsize=4096)
def _bracket_component(alphabet: Alphabet, key: tuple) -> tuple:
    # key: sorted (ordinal, count) pairs
    total = sum(c for _, c in key)
    if total == 1:
        (ordinal, _), = key
        return (FreeElement.from_word((alphabet[ordinal],)),)
    target = Multidegree({alphabet[o].name: c for o, c in key})
    ech = Echelon()
    out = []
    for left in target.submultidegrees(alphabet, proper=True):
        right = target - left
        for a in _bracket_component(alphabet, left.key(alphabet)):
            for b in _bracket_component(alphabet, right.key(alphabet)):
                f = super_commutator(a, b)
                if f and ech.add(dict(f.terms)):
                    out.append(f)
    return tuple(FreeElement._wrap(r) for r in ech.rows())


def bracket_span(d, alphabet: Alphabet) -> ComponentSpan:
    """Span of all super-commutator monomials in the generators of multidegree ``d``."""
    d = as_multidegree(d)
    if d.total < 1:
        raise DegreeError("empty multidegree")
    return ComponentSpan(d, _bracket_component(alphabet, d.key(alphabet)))


def bracket_monomials(d, alphabet: Alphabet) -> list:
    """Every fully bracketed super-commutator monomial of multidegree ``d``.

    Exponential; meant for small degrees and for cross-checking
    :func:`bracket_span`.
    """
    d = as_multidegree(d)
    out = []

    def trees(letters):
        if len(letters) == 1:
            yield FreeElement.from_word(letters)
            return
        for cut in range(1, len(letters)):
            for a in trees(letters[:cut]):
                for b in trees(letters[cut:]):
                    yield super_commutator(a, b)

    for w in d.words(alphabet):
        out.extend(trees(w))
    return out


__all__ = [
    "Multidegree",
    "as_multidegree",
    "component_of",
    "skew_rcom_basis",
    "kernel_basis",
    "bracket_span",
    "bracket_monomials",
    "multidegree_of",
]
