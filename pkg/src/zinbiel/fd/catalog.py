"""Tortkara superalgebras of dimension 2 and 3, with their Malcev and Lie flags.

Labels follow the published tables verbatim, including their gaps (the
(2|1) list uses T^1, T^2, T^3, T^7, T^8, T^9).  Products not listed are zero
and each listed product determines its partner by super anti-commutativity.
"""
from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field, replace
from fractions import Fraction

from ..errors import ParameterDomainError
from ..graded import format_scalar, scalar
from .algebra import SuperAlgebra, from_products
from .grassmann import envelope_holds, verify_envelope
from .identities import IdentityKind, verify_identity

SAMPLES = (0, 1, -1, 2, Fraction(1, 2))
# Identity residuals are polynomials of degree <= 4 in a family parameter
# (at most three products occur in any term), so vanishing at 5 distinct
# samples proves vanishing for every parameter value.
PARAMETER_DEGREE_BOUND = 4


@dataclass(frozen=True)
class CatalogEntry:
    label: int
    even_dim: int
    odd_dim: int
    products: object  # callable(param) -> 1-based product table
    is_malcev: bool
    is_lie: bool
    parameter: str | None = None
    note: str = ""

    @property
    def name(self) -> str:
        base = f"T^{self.label}_{{{self.even_dim}|{self.odd_dim}}}"
        return f"{base}({self.parameter})" if self.parameter else base

    @property
    def key(self) -> str:
        return f"T{self.label}_{self.even_dim}{self.odd_dim}"

    @property
    def parameterized(self) -> bool:
        return self.parameter is not None

    def build(self, value=None) -> SuperAlgebra:
        if self.parameterized:
            if value is None:
                raise ParameterDomainError(f"{self.name} needs a parameter value")
            value = _exact(value)
            table = self.products(value)
            name = f"T^{self.label}_{{{self.even_dim}|{self.odd_dim}}}({format_scalar(value)})"
        else:
            if value is not None:
                raise ParameterDomainError(f"{self.name} takes no parameter")
            table = self.products(None)
            name = self.name
        return from_products(self.even_dim, self.odd_dim, table, name=name)

    def instances(self, samples=SAMPLES) -> list:
        if self.parameterized:
            return [self.build(s) for s in samples]
        return [self.build()]


def _exact(value):
    if isinstance(value, float):
        raise ParameterDomainError("parameters must be exact rationals, not floats")
    try:
        return scalar(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ParameterDomainError(f"not an exact rational: {value!r}") from None


def _fixed(table):
    return lambda _: table


_ENTRIES = [
    CatalogEntry(1, 1, 1, _fixed({}), True, True, note="trivial"),
    CatalogEntry(2, 1, 1, _fixed({(1, 2): {2: 1}}), True, True),
    CatalogEntry(3, 1, 1, _fixed({(2, 2): {1: 1}}), True, True),
    CatalogEntry(1, 2, 0, _fixed({}), True, True, note="trivial"),
    CatalogEntry(2, 2, 0, _fixed({(1, 2): {2: 1}}), True, True),
    CatalogEntry(1, 2, 1, _fixed({}), True, True, note="trivial"),
    CatalogEntry(2, 2, 1, _fixed({(3, 3): {1: 1}}), True, True),
    CatalogEntry(3, 2, 1, _fixed({(1, 2): {1: -1}, (2, 3): {3: 1}, (3, 3): {1: 1}}), False, False),
    CatalogEntry(7, 2, 1, _fixed({(1, 2): {1: 1}}), True, True),
    CatalogEntry(8, 2, 1, _fixed({(1, 2): {1: 1}, (1, 3): {3: 1}}), False, False),
    CatalogEntry(9, 2, 1, lambda g: {(1, 2): {2: g}, (1, 3): {3: 1}}, True, True, parameter="γ"),
    CatalogEntry(1, 1, 2, _fixed({}), True, True, note="trivial"),
    CatalogEntry(2, 1, 2, _fixed({(1, 3): {2: 1}, (3, 3): {1: 1}}), True, True),
    CatalogEntry(3, 1, 2, lambda a: {(1, 2): {2: 1, 3: 1}, (1, 3): {2: 1, 3: a}}, True, True,
                 parameter="α"),
    CatalogEntry(4, 1, 2, lambda a: {(2, 3): {1: 1}, (3, 3): {1: 1}, (2, 2): {1: a}}, True, True,
                 parameter="α"),
    CatalogEntry(5, 1, 2, _fixed({(1, 3): {2: 1}}), True, True),
    CatalogEntry(6, 1, 2, _fixed({(1, 2): {2: 1}}), True, True),
]


def catalog() -> list:
    """All 17 entries, in table order."""
    return list(_ENTRIES)


_SUPER = str.maketrans("⁰¹²³⁴⁵⁶⁷⁸⁹₀₁₂₃₄₅₆₇₈₉", "01234567890123456789")


def parse_name(name: str):
    """``'T^3_{1|2}(2)'``, ``'T3_12'``, ``'T³_{1|2}'`` ... -> (key, parameter text or None)."""
    text = unicodedata.normalize("NFKC", name.translate(_SUPER)).replace(" ", "")
    text = text.replace("T^", "T").replace("{", "").replace("}", "")
    m = re.match(r"^T(\d)_?(\d)\|?(\d)(?:\((.+)\))?$", text)
    if not m:
        raise KeyError(f"not a catalog name: {name!r}")
    label, p, q, param = m.groups()
    return f"T{label}_{p}{q}", param


def lookup(name: str) -> CatalogEntry:
    key, _ = parse_name(name)
    for e in _ENTRIES:
        if e.key == key:
            return e
    raise KeyError(f"no catalog entry {name!r}")


def build(name: str, value=None) -> SuperAlgebra:
    """Build an entry by name; a parameter may be given inline, as in 'T3_12(1/2)'."""
    entry = lookup(name)
    _, inline = parse_name(name)
    if inline is not None:
        if value is not None:
            raise ParameterDomainError("parameter given twice")
        try:
            value = Fraction(inline)
        except ValueError:
            raise ParameterDomainError(f"bad parameter {inline!r}") from None
    return entry.build(value)


@dataclass
class EntryResult:
    name: str
    anticommutative: bool
    tortkara: bool
    malcev: bool
    lie: bool
    envelope: bool | None
    expected_malcev: bool
    expected_lie: bool
    failures: dict = field(default_factory=dict)  # check -> witness text

    @property
    def mismatches(self) -> list:
        out = []
        if not self.anticommutative:
            out.append("super anti-commutativity fails")
        if not self.tortkara:
            out.append("super Tortkara identity fails")
        if self.malcev != self.expected_malcev:
            out.append(f"Malcev: expected {self.expected_malcev}, found {self.malcev}")
        if self.lie != self.expected_lie:
            out.append(f"Lie: expected {self.expected_lie}, found {self.lie}")
        if self.envelope is False:
            out.append("Grassmann envelope check fails")
        return out


@dataclass
class CatalogReport:
    results: list
    samples: tuple
    envelope_generators: int | None

    @property
    def mismatches(self) -> list:
        return [(r.name, m) for r in self.results for m in r.mismatches]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def lines(self) -> list:
        sample_text = ", ".join(format_scalar(s) for s in self.samples)
        out = [
            f"entries: {len(self.results)} rows from {len({r.name.split('(')[0] for r in self.results})} classes",
            f"families sampled at {{{sample_text}}}; identity residuals have degree <= "
            f"{PARAMETER_DEGREE_BOUND} in the parameter, so {len(self.samples)} samples certify all values",
        ]
        for r in self.results:
            flags = (f"tortkara={_yn(r.tortkara)} malcev={_yn(r.malcev)} lie={_yn(r.lie)}"
                     + ("" if r.envelope is None else f" envelope={_yn(r.envelope)}"))
            out.append(f"{r.name}: {flags}")
            for check, w in r.failures.items():
                out.append(f"    {check} witness {w}")
        out.append(f"mismatches: {len(self.mismatches)}")
        for name, m in self.mismatches:
            out.append(f"  {name}: {m}")
        return out

    def __str__(self):
        return "\n".join(self.lines())


def _yn(b):
    return "yes" if b else "no"


def check_entry(entry: CatalogEntry, A: SuperAlgebra, envelope_n: int | None = 4) -> EntryResult:
    verdicts = {k: verify_identity(A, k) for k in (
        IdentityKind.SuperAntiCommutative, IdentityKind.SuperTortkara,
        IdentityKind.Malcev, IdentityKind.SuperJacobi)}
    env = None
    failures = {k.name: v.witness_text() for k, v in verdicts.items() if not v.holds}
    if envelope_n is not None:
        env_verdicts = verify_envelope(A, envelope_n)
        env = envelope_holds(env_verdicts)
        for v in env_verdicts:
            if not v.holds:
                failures[f"envelope {v.kind.name}"] = str(v.witness)
    return EntryResult(
        name=A.name,
        anticommutative=verdicts[IdentityKind.SuperAntiCommutative].holds,
        tortkara=verdicts[IdentityKind.SuperTortkara].holds,
        malcev=verdicts[IdentityKind.Malcev].holds,
        lie=verdicts[IdentityKind.SuperJacobi].holds,
        envelope=env,
        expected_malcev=entry.is_malcev,
        expected_lie=entry.is_lie,
        failures=failures,
    )


def verify_catalog(entries=None, samples=SAMPLES, envelope_n: int | None = 4) -> CatalogReport:
    """Check every entry (every sample of each family) against its expected flags."""
    entries = catalog() if entries is None else list(entries)
    results = []
    for entry in entries:
        for A in entry.instances(samples):
            results.append(check_entry(entry, A, envelope_n))
    return CatalogReport(results, tuple(samples), envelope_n)


def with_flags(entry: CatalogEntry, **flags) -> CatalogEntry:
    """A copy of an entry with some expected flags replaced (for negative controls)."""
    return replace(entry, **flags)


def file_stem(name: str) -> str:
    """Filesystem-safe stem of an entry name, e.g. T^3_{1|2}(1/2) -> T3_12_1over2."""
    s = name.replace("^", "").replace("{", "").replace("}", "").replace("|", "")
    return s.replace("(", "_").replace(")", "").replace("/", "over").replace("-", "m")


def export_catalog(samples=SAMPLES) -> dict:
    """File-format text for every entry (families at each sample), keyed by name."""
    out = {}
    for entry in catalog():
        for A in entry.instances(samples):
            out[A.name] = A.dumps()
    return out
