"""Truncated Grassmann algebras and Grassmann envelopes of superalgebras."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import TruncationError
from .algebra import SuperAlgebra
from .identities import IdentityKind, IdentityVerdict, verify_identity


@dataclass(frozen=True)
class GrassmannTruncation:
    """Grassmann algebra on xi_1..xi_n; monomials are bitmasks of generator sets."""

    n_generators: int

    def monomials(self, parity=None) -> list:
        out = [m for m in range(1 << self.n_generators)]
        out.sort(key=lambda m: (bin(m).count("1"), m))
        if parity is not None:
            out = [m for m in out if bin(m).count("1") % 2 == parity]
        return out

    @staticmethod
    def multiply(s: int, t: int):
        """xi_S xi_T as (sign, mask), or (0, 0) when S and T overlap."""
        if s & t:
            return 0, 0
        # sign = (-1)^{#{(i, j): i in S, j in T, i > j}}
        swaps = 0
        tt = t
        while tt:
            low = tt & -tt
            swaps += bin(s & ~(low | (low - 1))).count("1")
            tt ^= low
        return (-1 if swaps & 1 else 1), s | t

    @staticmethod
    def format(m: int) -> str:
        if not m:
            return "1"
        return "".join(f"ξ{i + 1}" for i in range(m.bit_length()) if m >> i & 1)


@dataclass
class Envelope:
    """G(A) truncated at n generators, as an ordinary algebra."""

    algebra: SuperAlgebra
    source: SuperAlgebra
    truncation: GrassmannTruncation
    labels: list  # (monomial mask, basis index of the source)

    def index(self, mask: int, i: int) -> int:
        return self.labels.index((mask, i))

    def label(self, k: int) -> str:
        m, i = self.labels[k]
        return f"{GrassmannTruncation.format(m)}⊗e{i + 1}"


def grassmann_envelope(A: SuperAlgebra, n: int) -> Envelope:
    """G_0(n) ⊗ A_0 + G_1(n) ⊗ A_1 with (g ⊗ a)(h ⊗ b) = gh ⊗ ab."""
    if n < 0:
        raise TruncationError("the number of Grassmann generators must be natural")
    if n == 0 and any(A.parities):
        raise TruncationError("an odd part needs at least one Grassmann generator")
    if A.product_parity:
        raise TruncationError("envelopes are defined for even products only")
    G = GrassmannTruncation(n)
    labels = [(m, i) for i in range(A.dim) for m in G.monomials(A.parities[i])]
    where = {lab: k for k, lab in enumerate(labels)}
    constants = {}
    for a, (s, i) in enumerate(labels):
        for b, (t, j) in enumerate(labels):
            row = A.product(i, j)
            if not row:
                continue
            sg, u = G.multiply(s, t)
            if not sg:
                continue
            for k, c in row.items():
                constants[(a, b, where[(u, k)])] = sg * c
    algebra = SuperAlgebra(len(labels), 0, constants, name=f"G({A.name or 'A'})_{n}")
    return Envelope(algebra, A, G, labels)


def disjoint_tuples(env: Envelope, arity: int):
    """Basis tuples of the envelope whose Grassmann parts are pairwise disjoint.

    Every term of a multilinear identity of this arity carries the product of
    all the arguments' Grassmann parts, which vanishes as soon as two parts
    share a generator; only these tuples can give a nonzero residual.
    """
    by_mask: dict = {}
    for k, (m, i) in enumerate(env.labels):
        by_mask.setdefault(m, []).append(k)
    masks = sorted(by_mask)

    def rec(used, depth):
        if depth == arity:
            yield ()
            return
        for m in masks:
            if m & used:
                continue
            for k in by_mask[m]:
                for rest in rec(used | m, depth + 1):
                    yield (k,) + rest

    return rec(0, 0)


def verify_envelope(A: SuperAlgebra, n: int = 4, prune: bool = True) -> list:
    """Classical anti-commutativity and Tortkara identity on G(A) truncated at n.

    Returns the two verdicts.  With ``prune`` only tuples with disjoint
    Grassmann parts are evaluated; the pruned tuples have zero residual.
    """
    env = grassmann_envelope(A, n)
    out = []
    for kind in (IdentityKind.ClassicalAntiCommutative, IdentityKind.ClassicalTortkara):
        tuples = disjoint_tuples(env, kind.arity) if prune else None
        out.append(verify_identity(env.algebra, kind, tuples))
    return out


def envelope_holds(verdicts) -> bool:
    return all(isinstance(v, IdentityVerdict) and v.holds for v in verdicts)


__all__ = [
    "GrassmannTruncation",
    "Envelope",
    "grassmann_envelope",
    "disjoint_tuples",
    "verify_envelope",
    "envelope_holds",
]
