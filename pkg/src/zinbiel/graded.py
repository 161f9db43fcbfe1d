"""Parities, generators, graded words and exact linear combinations of words.

Words are plain tuples of :class:`Generator` objects.  Generators compare and
hash by identity, so a word is only meaningful relative to the alphabet that
created its letters.  Coefficients are ``int`` or ``fractions.Fraction``;
floats are rejected everywhere.
"""
from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InhomogeneousError, MalformedPermutationError, ParseError, UnboundGeneratorError

EVEN = 0
ODD = 1

_PARITY_NAMES = {"even": EVEN, "0": EVEN, "odd": ODD, "1": ODD}


def parse_parity(text) -> int:
    if isinstance(text, int) and text in (0, 1):
        return text
    try:
        return _PARITY_NAMES[str(text).strip().lower()]
    except KeyError:
        raise ValueError(f"not a parity: {text!r}") from None


def sign(exponent: int) -> int:
    """(-1)**exponent."""
    return -1 if exponent & 1 else 1


def scalar(value):
    """Coerce to an exact scalar; integral fractions collapse to int."""
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        return scalar(Fraction(value))
    raise TypeError(f"coefficients must be exact rationals, got {type(value).__name__}")


def format_scalar(value) -> str:
    value = scalar(value)
    if isinstance(value, int):
        return str(value)
    return f"{value.numerator}/{value.denominator}"


class Generator:
    __slots__ = ("name", "parity", "ordinal")

    def __init__(self, name: str, parity: int, ordinal: int):
        self.name = name
        self.parity = parse_parity(parity)
        self.ordinal = ordinal

    def __repr__(self):
        return f"Generator({self.name!r}, {'odd' if self.parity else 'even'}, {self.ordinal})"

    def __str__(self):
        return self.name

    def __reduce__(self):
        return (Generator, (self.name, self.parity, self.ordinal))


Word = tuple  # tuple[Generator, ...]


class Alphabet(Sequence):
    """Ordered set of graded generators; listing order is the canonical order."""

    def __init__(self, generators: Iterable):
        gens = []
        by_name = {}
        for i, item in enumerate(generators):
            if isinstance(item, Generator):
                name, parity = item.name, item.parity
            else:
                name, parity = item
            if not isinstance(name, str) or not name:
                raise ValueError(f"bad generator name {name!r}")
            if name in by_name:
                raise ValueError(f"duplicate generator name {name!r}")
            g = Generator(name, parity, i)
            gens.append(g)
            by_name[name] = g
        if not gens:
            raise ValueError("an alphabet needs at least one generator")
        self._gens = tuple(gens)
        self._by_name = by_name

    @classmethod
    def parse(cls, text: str) -> "Alphabet":
        """Read ``x:odd,y:even`` or one ``name : parity`` declaration per line."""
        items = []
        for lineno, line in enumerate(text.replace(",", "\n").splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            name, colon, parity = line.partition(":")
            if not colon:
                raise ParseError(f"expected 'name : even|odd', got {line!r}", lineno, 1)
            try:
                items.append((name.strip(), parse_parity(parity)))
            except ValueError as exc:
                raise ParseError(str(exc), lineno, len(name) + 2) from None
        try:
            return cls(items)
        except ValueError as exc:
            raise ParseError(str(exc)) from None

    def __getitem__(self, key):
        if isinstance(key, str):
            try:
                return self._by_name[key]
            except KeyError:
                raise UnboundGeneratorError(f"unbound generator {key!r}") from None
        return self._gens[key]

    def __len__(self):
        return len(self._gens)

    def __iter__(self):
        return iter(self._gens)

    def __contains__(self, item):
        if isinstance(item, str):
            return item in self._by_name
        return any(item is g for g in self._gens)

    def __repr__(self):
        body = ",".join(f"{g.name}:{'odd' if g.parity else 'even'}" for g in self._gens)
        return f"Alphabet.parse({body!r})"

    def __str__(self):
        return ",".join(f"{g.name}:{'odd' if g.parity else 'even'}" for g in self._gens)

    @property
    def names(self):
        return tuple(g.name for g in self._gens)

    def word(self, *names) -> Word:
        """``A.word("x", "y")`` or ``A.word("x y")`` or, for one-letter names, ``A.word("xy")``."""
        if len(names) == 1 and isinstance(names[0], str):
            text = names[0]
            if " " in text or "*" in text:
                names = tuple(t for t in text.replace("*", " ").split() if t)
            elif text not in self._by_name and all(len(n) == 1 for n in self._by_name):
                names = tuple(text)
        return tuple(self[n] for n in names)

    def element(self, *names, coef=1) -> "FreeElement":
        return FreeElement.from_word(self.word(*names), coef)

    def words(self, length: int) -> Iterator[Word]:
        """All words of the given length in canonical order."""
        from itertools import product
        return iter(product(self._gens, repeat=length))


def word_parity(w: Word) -> int:
    if not w:
        raise ValueError("the empty word has no parity in Zin(X)")
    p = 0
    for g in w:
        p ^= g.parity
    return p


def word_key(w: Word):
    """Sort key realising the canonical order: shorter first, then lexicographic by ordinal."""
    return (len(w), tuple(g.ordinal for g in w))


def canonical_compare(a: Word, b: Word) -> int:
    ka, kb = word_key(a), word_key(b)
    return (ka > kb) - (ka < kb)


def koszul_sign(sigma: Sequence[int], w: Word) -> int:
    """Sign of rearranging ``w`` into ``w[sigma[0]] w[sigma[1]] ...``.

    ``sigma`` lists 0-based source positions.  Every inverted pair of letters
    contributes the product of their parities to the exponent.
    """
    n = len(w)
    if len(sigma) != n or sorted(sigma) != list(range(n)):
        raise MalformedPermutationError(f"{list(sigma)!r} is not a permutation of 0..{n - 1}")
    exponent = 0
    for i in range(n):
        si = sigma[i]
        if not w[si].parity:
            continue
        for j in range(i + 1, n):
            sj = sigma[j]
            if si > sj and w[sj].parity:
                exponent += 1
    return sign(exponent)


def format_word(w: Word, sep: str | None = None) -> str:
    if sep is None:
        sep = "" if all(len(g.name) == 1 for g in w) else "*"
    return sep.join(g.name for g in w)


class FreeElement:
    """Finite linear combination of nonempty graded words with exact coefficients.

    Values are immutable.  Equality is equality of the term maps.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean = {}
        for w, c in items:
            w = tuple(w)
            if not w:
                raise ValueError("the empty word is not an element of Zin(X)")
            c = scalar(c)
            if c:
                c = clean.get(w, 0) + c
                if c:
                    clean[w] = c
                else:
                    del clean[w]
        self._terms = clean
        self._hash = None

    @classmethod
    def _wrap(cls, terms: dict) -> "FreeElement":
        """Adopt a dict without copying; zero coefficients are dropped."""
        obj = cls.__new__(cls)
        obj._terms = {w: (c if type(c) is int else scalar(c)) for w, c in terms.items() if c}
        obj._hash = None
        return obj

    @classmethod
    def zero(cls) -> "FreeElement":
        return cls._wrap({})

    @classmethod
    def from_word(cls, w: Word, coef=1) -> "FreeElement":
        return cls({tuple(w): coef})

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def coefficient(self, w: Word):
        return self._terms.get(tuple(w), 0)

    def words(self) -> list:
        return sorted(self._terms, key=word_key)

    def items(self) -> list:
        return [(w, self._terms[w]) for w in self.words()]

    def __iter__(self):
        return iter(self.words())

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    @property
    def parity(self):
        """Common parity of all words, or None for zero or mixed elements."""
        parities = {word_parity(w) for w in self._terms}
        return parities.pop() if len(parities) == 1 else None

    def require_parity(self) -> int:
        p = self.parity
        if p is None and self._terms:
            raise InhomogeneousError(f"element {self} mixes even and odd words")
        return p or 0

    def by_parity(self) -> dict:
        parts = {}
        for w, c in self._terms.items():
            parts.setdefault(word_parity(w), {})[w] = c
        return {p: FreeElement._wrap(t) for p, t in sorted(parts.items())}

    @property
    def degrees(self) -> set:
        return {len(w) for w in self._terms}

    def multidegrees(self) -> set:
        return {multidegree_of(w) for w in self._terms}

    def _combine(self, other, factor):
        out = dict(self._terms)
        for w, c in other._terms.items():
            v = out.get(w, 0) + factor * c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return FreeElement._wrap(out)

    def __add__(self, other):
        if not isinstance(other, FreeElement):
            if other == 0:
                return self
            return NotImplemented
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, FreeElement):
            if other == 0:
                return self
            return NotImplemented
        return self._combine(other, -1)

    def __rsub__(self, other):
        if other == 0:
            return -self
        return NotImplemented

    def __neg__(self):
        return FreeElement._wrap({w: -c for w, c in self._terms.items()})

    def __mul__(self, k):
        if isinstance(k, FreeElement):
            return NotImplemented
        k = scalar(k)
        return FreeElement._wrap({w: k * c for w, c in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, k):
        return self * (1 / Fraction(scalar(k)))

    def __eq__(self, other):
        if isinstance(other, FreeElement):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def map_letters(self, mapping) -> "FreeElement":
        """Apply a letter substitution ``mapping[g] -> Generator`` to every word."""
        out = {}
        for w, c in self._terms.items():
            v = tuple(mapping[g] for g in w)
            out[v] = out.get(v, 0) + c
        return FreeElement._wrap(out)

    def format(self, sep: str | None = None) -> str:
        if not self._terms:
            return "0"
        if sep is None:
            names = {g.name for w in self._terms for g in w}
            sep = "" if all(len(n) == 1 for n in names) else "*"
        parts = []
        for i, (w, c) in enumerate(self.items()):
            neg = c < 0
            mag = -c if neg else c
            body = format_word(w, sep)
            if mag != 1:
                body = f"{format_scalar(mag)}{'*' if sep == '*' else ' '}{body}"
            if i == 0:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f" - {body}" if neg else f" + {body}")
        return "".join(parts)

    def to_expr(self) -> str:
        """Text that the expression parser reads back to this element."""
        return self.format(sep="*")

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"FreeElement({self.format(sep='*')!r})"


def multidegree_of(w: Word) -> tuple:
    """Letter-count signature of a word as sorted ``(ordinal, count)`` pairs."""
    counts = {}
    for g in w:
        counts[g.ordinal] = counts.get(g.ordinal, 0) + 1
    return tuple(sorted(counts.items()))


def linear_combination(pairs: Iterable) -> FreeElement:
    """Sum ``c * f`` over ``(c, f)`` pairs of scalars and FreeElements."""
    out = {}
    for c, f in pairs:
        c = scalar(c)
        if not c:
            continue
        for w, v in f._terms.items():
            out[w] = out.get(w, 0) + c * v
    return FreeElement._wrap(out)
