"""Exhaustive identity sweeps over basis-word tuples of Zin(X).

Every identity here is built from products that commute with letter
substitutions preserving parity (such a substitution extends to a
homomorphism of free Zinbiel superalgebras).  A residual computed on words of
pairwise distinct fresh letters therefore vanishes iff it vanishes on every
tuple of concrete words with the same lengths and the same parity sequence.
``lifted`` sweeps use this to cover all concrete tuples with one computation
per (length composition, parity sequence) class; ``direct`` sweeps evaluate
concrete tuples literally and serve as a cross-check.
"""
from __future__ import annotations

import gc
import random
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from itertools import product

from ..graded import Alphabet, FreeElement, sign
from .products import (
    shuffle_enumerated,
    shuffle_words,
    super_anticommutator,
    super_commutator,
    super_shuffle,
    zinbiel_product,
)


def _par(x: FreeElement) -> int:
    return x.require_parity()


def _w(x):
    return x if isinstance(x, FreeElement) else FreeElement.from_word(x)


# Residuals.  Each takes basis words (or homogeneous elements) and returns
# the difference of the two sides of the identity.

def zinbiel_residual(a, b, c) -> FreeElement:
    """a(bc) - (ab)c - (-1)^{|a||b|}(ba)c."""
    a, b, c = _w(a), _w(b), _w(c)
    s = sign(_par(a) & _par(b))
    return (zinbiel_product(a, zinbiel_product(b, c))
            - zinbiel_product(zinbiel_product(a, b), c)
            - zinbiel_product(zinbiel_product(b, a), c) * s)


def shuffle_commutativity_residual(a, b) -> FreeElement:
    a, b = _w(a), _w(b)
    return super_shuffle(a, b) - super_shuffle(b, a) * sign(_par(a) & _par(b))


def shuffle_associativity_residual(a, b, c) -> FreeElement:
    a, b, c = _w(a), _w(b), _w(c)
    return super_shuffle(super_shuffle(a, b), c) - super_shuffle(a, super_shuffle(b, c))


def shuffle_oracle_residual(u, v) -> FreeElement:
    """Recursive shuffle minus the signed sum over interleavings."""
    return FreeElement(shuffle_words(tuple(u), tuple(v))) - FreeElement(shuffle_enumerated(tuple(u), tuple(v)))


def zinbiel_oracle_residual(u, v) -> FreeElement:
    """u o v against its definition (u sh v') v_q, with sh by enumeration."""
    u, v = tuple(u), tuple(v)
    if len(v) == 1:
        expected = FreeElement.from_word(u + v)
    else:
        expected = FreeElement({w + v[-1:]: c for w, c in shuffle_enumerated(u, v[:-1])})
    return zinbiel_product(u, v) - expected


def shuffle_is_anticommutator_residual(a, b) -> FreeElement:
    """a sh b = a o b + (-1)^{|a||b|} b o a."""
    a, b = _w(a), _w(b)
    return super_shuffle(a, b) - super_anticommutator(a, b)


def anticommutator_commutativity_residual(a, b) -> FreeElement:
    a, b = _w(a), _w(b)
    return super_anticommutator(a, b) - super_anticommutator(b, a) * sign(_par(a) & _par(b))


def anticommutator_associativity_residual(a, b, c) -> FreeElement:
    a, b, c = _w(a), _w(b), _w(c)
    return (super_anticommutator(super_anticommutator(a, b), c)
            - super_anticommutator(a, super_anticommutator(b, c)))


def bracket_anticommutativity_residual(a, b) -> FreeElement:
    """[a,b] + (-1)^{|a||b|}[b,a]."""
    a, b = _w(a), _w(b)
    return super_commutator(a, b) + super_commutator(b, a) * sign(_par(a) & _par(b))


def super_jacobian(mul, x, y, z) -> FreeElement:
    """J_s(x,y,z) = (xy)z - x(yz) - (-1)^{|y||z|}(xz)y for a product ``mul``."""
    s = sign(_par(y) & _par(z))
    return mul(mul(x, y), z) - mul(x, mul(y, z)) - mul(mul(x, z), y) * s


def tortkara_residual_for(mul, a, b, c, d) -> FreeElement:
    """(ab)(cd) - (-1)^{|d|(|b|+|c|)}(ad)(bc) - J_s(a,b,c)d - (-1)^{|a||b|} b J_s(a,c,d)."""
    pa, pb, pc, pd = _par(a), _par(b), _par(c), _par(d)
    lhs = mul(mul(a, b), mul(c, d)) - mul(mul(a, d), mul(b, c)) * sign(pd & (pb ^ pc))
    rhs = mul(super_jacobian(mul, a, b, c), d) + mul(b, super_jacobian(mul, a, c, d)) * sign(pa & pb)
    return lhs - rhs


def tortkara_residual(a, b, c, d) -> FreeElement:
    return tortkara_residual_for(super_commutator, _w(a), _w(b), _w(c), _w(d))


@dataclass(frozen=True)
class Identity:
    name: str
    arity: int
    residual: object
    min_degree: int = 0  # lowest total degree to sweep (defaults to arity)


IDENTITIES = {
    i.name: i
    for i in (
        Identity("zinbiel", 3, zinbiel_residual),
        Identity("shuffle-commutative", 2, shuffle_commutativity_residual),
        Identity("shuffle-associative", 3, shuffle_associativity_residual),
        Identity("shuffle-recursion", 2, shuffle_oracle_residual),
        Identity("zinbiel-recursion", 2, zinbiel_oracle_residual),
        Identity("shuffle-anticommutator", 2, shuffle_is_anticommutator_residual),
        Identity("anticommutator-commutative", 2, anticommutator_commutativity_residual),
        Identity("anticommutator-associative", 3, anticommutator_associativity_residual),
        Identity("bracket-anticommutative", 2, bracket_anticommutativity_residual),
        Identity("bracket-tortkara", 4, tortkara_residual),
    )
}


@dataclass
class SweepReport:
    identity: str
    mode: str
    max_degree: int
    classes: int = 0
    tuples: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def holds(self) -> bool:
        return not self.failures

    def __str__(self):
        status = "holds" if self.holds else f"fails ({len(self.failures)})"
        return (f"{self.identity}: {status}; mode={self.mode} degree<={self.max_degree} "
                f"classes={self.classes} tuples={self.tuples} {self.seconds:.2f}s")


def compositions(n: int, k: int):
    """Ordered k-tuples of positive integers summing to n."""
    if k == 1:
        if n >= 1:
            yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def _split(word: tuple, lengths) -> list:
    out, i = [], 0
    for n in lengths:
        out.append(word[i:i + n])
        i += n
    return out


@contextmanager
def _gc_paused():
    # The sweeps allocate millions of short-lived tuples that create no
    # cycles; automatic collection would keep rescanning the word caches.
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if was_enabled:
            gc.enable()


def _resolve(identity) -> Identity:
    return IDENTITIES[identity] if isinstance(identity, str) else identity


def _sweep_lifted(identity, alphabet: Alphabet, max_degree: int, stop_at_first=False) -> SweepReport:
    ident = _resolve(identity)
    start = time.perf_counter()
    report = SweepReport(ident.name, "lifted", max_degree)
    counts = [sum(1 for g in alphabet if g.parity == p) for p in (0, 1)]
    available = {p for p in (0, 1) if counts[p]}
    fresh_cache = {}
    lo = max(ident.arity, ident.min_degree)
    for n in range(lo, max_degree + 1):
        for pattern in product(sorted(available), repeat=n):
            fresh = fresh_cache.get(pattern)
            if fresh is None:
                fresh = Alphabet((f"t{i + 1}", p) for i, p in enumerate(pattern))
                fresh_cache[pattern] = fresh
            generic = tuple(fresh)
            multiplicity = 1
            for p in pattern:
                multiplicity *= counts[p]
            for comp in compositions(n, ident.arity):
                args = _split(generic, comp)
                res = ident.residual(*args)
                report.classes += 1
                report.tuples += multiplicity
                if res:
                    report.failures.append((tuple(args), res))
                    if stop_at_first:
                        report.seconds = time.perf_counter() - start
                        return report
    report.seconds = time.perf_counter() - start
    return report


def word_tuples(alphabet: Alphabet, arity: int, max_degree: int, min_degree: int = 0):
    """All tuples of basis words with total length in [max(arity, min_degree), max_degree]."""
    for n in range(max(arity, min_degree), max_degree + 1):
        for comp in compositions(n, arity):
            for letters in product(tuple(alphabet), repeat=n):
                yield tuple(_split(letters, comp))


def _sweep_direct(identity, alphabet: Alphabet, max_degree: int, stop_at_first=False) -> SweepReport:
    ident = _resolve(identity)
    start = time.perf_counter()
    report = SweepReport(ident.name, "direct", max_degree)
    for args in word_tuples(alphabet, ident.arity, max_degree, ident.min_degree):
        res = ident.residual(*args)
        report.classes += 1
        report.tuples += 1
        if res:
            report.failures.append((args, res))
            if stop_at_first:
                break
    report.seconds = time.perf_counter() - start
    return report


def _sweep_sampled(identity, alphabet: Alphabet, degree: int, samples: int, seed=0) -> SweepReport:
    ident = _resolve(identity)
    rng = random.Random(seed)
    start = time.perf_counter()
    report = SweepReport(ident.name, "sampled", degree)
    comps = list(compositions(degree, ident.arity))
    letters = tuple(alphabet)
    for _ in range(samples):
        comp = rng.choice(comps)
        word = tuple(rng.choice(letters) for _ in range(degree))
        args = tuple(_split(word, comp))
        res = ident.residual(*args)
        report.classes += 1
        report.tuples += 1
        if res:
            report.failures.append((args, res))
    report.seconds = time.perf_counter() - start
    return report


def standard_alphabet() -> Alphabet:
    """Two even and two odd generators."""
    return Alphabet.parse("a:even,b:even,x:odd,y:odd")


def sweep_lifted(identity, alphabet: Alphabet, max_degree: int, stop_at_first=False) -> SweepReport:
    """Cover every concrete tuple over ``alphabet`` via fresh-letter classes."""
    with _gc_paused():
        return _sweep_lifted(identity, alphabet, max_degree, stop_at_first)


def sweep_direct(identity, alphabet: Alphabet, max_degree: int, stop_at_first=False) -> SweepReport:
    """Evaluate the residual literally on every concrete tuple."""
    with _gc_paused():
        return _sweep_direct(identity, alphabet, max_degree, stop_at_first)


def sweep_sampled(identity, alphabet: Alphabet, degree: int, samples: int, seed=0) -> SweepReport:
    """Literal residuals on random concrete tuples of exactly the given total degree."""
    with _gc_paused():
        return _sweep_sampled(identity, alphabet, degree, samples, seed)
