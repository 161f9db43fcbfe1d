"""Products in the free Zinbiel superalgebra Zin(X).

Word-level kernels return tuples of ``(word, int)`` pairs and are memoised;
element-level functions extend them bilinearly.  The shuffle used everywhere
is the right-end recursion; :func:`shuffle_enumerated` is the independent
definition by signed interleavings and is kept as a test oracle.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from ..errors import DegreeError
from ..graded import FreeElement, koszul_sign, sign, word_parity

_CACHE_SIZE = 1 << 17


def _acc(out: dict, items, factor=1, suffix=()):
    for w, c in items:
        key = w + suffix if suffix else w
        v = out.get(key, 0) + factor * c
        if v:
            out[key] = v
        else:
            del out[key]


def _parity(w) -> int:
    p = 0
    for g in w:
        p ^= g.parity
    return p


@lru_cache(maxsize=_CACHE_SIZE)
def shuffle_words(u: tuple, v: tuple) -> tuple:
    """Super shuffle of two words by recursion on their last letters.

    Either word may be empty; the empty word acts as a unit.
    """
    if not u:
        return ((v, 1),) if v else ()
    if not v:
        return ((u, 1),)
    out: dict = {}
    p, q = len(u), len(v)
    if p == 1 and q == 1:
        _acc(out, (((u[0], v[0]), 1), ((v[0], u[0]), sign(u[0].parity & v[0].parity))))
    elif p == 1:
        # (x sh v') v_q + (-1)^{|x||v|} v x
        _acc(out, shuffle_words(u, v[:-1]), 1, v[-1:])
        _acc(out, (((v + u), sign(u[0].parity & _parity(v))),))
    else:
        # (-1)^{|u_p||v|} (u' sh v) u_p + (u sh v') v_q
        _acc(out, shuffle_words(u[:-1], v), sign(u[-1].parity & _parity(v)), u[-1:])
        _acc(out, shuffle_words(u, v[:-1]), 1, v[-1:])
    return tuple(out.items())


def shuffle_enumerated(u: tuple, v: tuple) -> tuple:
    """Super shuffle as the signed sum over all interleavings (no recursion)."""
    if not u:
        return ((v, 1),) if v else ()
    if not v:
        return ((u, 1),)
    w = u + v
    n, p = len(w), len(u)
    out: dict = {}
    for slots in combinations(range(n), p):
        sigma = [0] * n
        rest = iter(range(p, n))
        taken = iter(range(p))
        chosen = set(slots)
        for pos in range(n):
            sigma[pos] = next(taken) if pos in chosen else next(rest)
        word = tuple(w[i] for i in sigma)
        _acc(out, ((word, koszul_sign(sigma, w)),))
    return tuple(out.items())


@lru_cache(maxsize=_CACHE_SIZE)
def zinbiel_words(u: tuple, v: tuple) -> tuple:
    """u o v = (u sh v[:-1]) v[-1]; for a one-letter v this is concatenation."""
    if len(v) == 1:
        return ((u + v, 1),)
    last = v[-1:]
    return tuple((w + last, c) for w, c in shuffle_words(u, v[:-1]))


def _symmetrised(u: tuple, v: tuple, s: int) -> tuple:
    """u o v + s (v o u)."""
    if u[-1] is not v[-1]:
        # the two halves end in different letters, so no term can cancel
        return zinbiel_words(u, v) + tuple((w, s * c) for w, c in zinbiel_words(v, u))
    out: dict = {}
    _acc(out, zinbiel_words(u, v))
    _acc(out, zinbiel_words(v, u), s)
    return tuple(out.items())


@lru_cache(maxsize=_CACHE_SIZE)
def commutator_words(u: tuple, v: tuple) -> tuple:
    return _symmetrised(u, v, -sign(_parity(u) & _parity(v)))


@lru_cache(maxsize=_CACHE_SIZE)
def anticommutator_words(u: tuple, v: tuple) -> tuple:
    return _symmetrised(u, v, sign(_parity(u) & _parity(v)))


def bilinear(kernel, a: FreeElement, b: FreeElement) -> FreeElement:
    """Extend a word-level kernel bilinearly to elements."""
    out: dict = {}
    get = out.get
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            f = cu * cv
            for w, c in kernel(u, v):
                out[w] = get(w, 0) + f * c
    return FreeElement._wrap(out)


def _coerce(x) -> FreeElement:
    if isinstance(x, FreeElement):
        return x
    if isinstance(x, tuple):
        return FreeElement.from_word(x)
    raise TypeError(f"expected FreeElement or word, got {type(x).__name__}")


def super_shuffle(a, b) -> FreeElement:
    return bilinear(shuffle_words, _coerce(a), _coerce(b))


def zinbiel_product(a, b) -> FreeElement:
    return bilinear(zinbiel_words, _coerce(a), _coerce(b))


def _graded_pair(kernel, a, b, strict):
    a, b = _coerce(a), _coerce(b)
    if strict:
        a.require_parity()
        b.require_parity()
    # Word parities are used term by term, which is the decomposition of
    # mixed operands into their homogeneous parts.
    return bilinear(kernel, a, b)


def super_commutator(a, b, strict: bool = False) -> FreeElement:
    """[a, b] = a o b - (-1)^{|a||b|} b o a.

    With ``strict=True`` mixed-parity operands raise InhomogeneousError
    instead of being split into homogeneous parts.
    """
    return _graded_pair(commutator_words, a, b, strict)


def super_anticommutator(a, b, strict: bool = False) -> FreeElement:
    """{a, b} = a o b + (-1)^{|a||b|} b o a."""
    return _graded_pair(anticommutator_words, a, b, strict)


def left_nested(*factors) -> FreeElement:
    """(...((a1 o a2) o a3) ...) o an."""
    if not factors:
        raise ValueError("need at least one factor")
    acc = _coerce(factors[0])
    for f in factors[1:]:
        acc = zinbiel_product(acc, f)
    return acc


def p_word(w: tuple) -> tuple:
    """p on a basis word as a ``(word, sign)`` pair."""
    if len(w) == 1:
        return w, -1
    y, z = w[-2], w[-1]
    return w[:-2] + (z, y), sign(y.parity & z.parity)


def p_map(a) -> FreeElement:
    a = _coerce(a)
    out: dict = {}
    for w, c in a.terms.items():
        v, s = p_word(w)
        _acc(out, ((v, s * c),))
    return FreeElement._wrap(out)


def bar(a) -> FreeElement:
    """a - p(a), defined when every word has length at least 2."""
    a = _coerce(a)
    if any(len(w) < 2 for w in a.terms):
        raise DegreeError("bar needs every word to have degree >= 2")
    return a - p_map(a)


def is_tortkara_element(a) -> bool:
    """Membership in the free special Tortkara superalgebra, via p(f) = -f."""
    a = _coerce(a)
    if any(len(w) < 2 for w in a.terms):
        raise DegreeError("the criterion applies only to components of degree >= 2")
    return p_map(a) == -a


def append_letters(a, letters: tuple) -> FreeElement:
    """Right-multiply by letters one at a time, i.e. append them to every word."""
    a = _coerce(a)
    return FreeElement._wrap({w + letters: c for w, c in a.terms.items()})


def element_parity(a) -> int:
    return _coerce(a).require_parity()


def clear_caches():
    for f in (shuffle_words, zinbiel_words, commutator_words, anticommutator_words):
        f.cache_clear()


__all__ = [
    "shuffle_words",
    "shuffle_enumerated",
    "zinbiel_words",
    "super_shuffle",
    "zinbiel_product",
    "super_commutator",
    "super_anticommutator",
    "left_nested",
    "p_map",
    "p_word",
    "bar",
    "is_tortkara_element",
    "append_letters",
    "bilinear",
    "word_parity",
]
