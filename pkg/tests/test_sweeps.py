from math import comb

import pytest

from zinbiel.free.products import shuffle_words, super_commutator, zinbiel_product
from zinbiel.free.sweeps import (
    IDENTITIES,
    Identity,
    compositions,
    standard_alphabet,
    sweep_direct,
    sweep_lifted,
    sweep_sampled,
    tortkara_residual_for,
    word_tuples,
)
from zinbiel.graded import Alphabet, FreeElement

XY = Alphabet.parse("x:odd,y:even")
LOW = {2: 5, 3: 5, 4: 5}  # arity -> degree bound for the cheap cross-check


@pytest.mark.parametrize("n,k", [(3, 1), (4, 2), (5, 3), (6, 4), (2, 3)])
def test_compositions(n, k):
    comps = list(compositions(n, k))
    assert len(comps) == (comb(n - 1, k - 1) if n >= k else 0)
    assert all(sum(c) == n and min(c) >= 1 for c in comps)


def test_word_tuples_count():
    # ordered pairs of nonempty words with total length 3 over two letters
    assert len(list(word_tuples(XY, 2, 3, 3))) == 2 * 2 ** 3


@pytest.mark.parametrize("name", sorted(IDENTITIES))
def test_lifted_and_direct_agree(name):
    ident = IDENTITIES[name]
    bound = LOW[ident.arity]
    lifted = sweep_lifted(ident, XY, bound)
    direct = sweep_direct(ident, XY, bound)
    assert lifted.holds and direct.holds, (str(lifted), str(direct))
    assert lifted.tuples == direct.tuples
    assert lifted.classes <= direct.classes


@pytest.mark.parametrize("name", ["zinbiel", "shuffle-associative", "bracket-anticommutative"])
def test_lifted_sweep_to_degree_seven(name):
    assert sweep_lifted(name, standard_alphabet(), 7).holds


def test_tortkara_lifted_to_degree_six():
    assert sweep_lifted("bracket-tortkara", standard_alphabet(), 6).holds


@pytest.mark.slow
def test_tortkara_lifted_to_degree_eight():
    assert sweep_lifted("bracket-tortkara", standard_alphabet(), 8).holds


def _unsigned_commutator(u, v):
    # the ungraded commutator; wrong as soon as both arguments are odd
    return zinbiel_product(u, v) - zinbiel_product(v, u)


def _wrong_tortkara(a, b, c, d):
    w = lambda t: FreeElement.from_word(t)  # noqa: E731
    return tortkara_residual_for(_unsigned_commutator, w(a), w(b), w(c), w(d))


def _unsigned_shuffle_commutativity(a, b):
    return FreeElement(dict(shuffle_words(a, b))) - FreeElement(dict(shuffle_words(b, a)))


@pytest.mark.parametrize("ident", [
    Identity("unsigned-shuffle-commutative", 2, _unsigned_shuffle_commutativity),
    Identity("unsigned-bracket-tortkara", 4, _wrong_tortkara),
])
def test_sweeps_catch_a_dropped_sign(ident):
    bound = 5 if ident.arity == 2 else 4
    lifted = sweep_lifted(ident, XY, bound)
    direct = sweep_direct(ident, XY, bound)
    assert not lifted.holds and not direct.holds
    # every failing concrete tuple contains two odd arguments
    for args, _ in direct.failures:
        odd = [FreeElement.from_word(a).parity for a in args]
        assert sum(odd) >= 2


def test_unsigned_bracket_agrees_on_even_letters():
    ident = Identity("unsigned-bracket-tortkara", 4, _wrong_tortkara)
    assert sweep_lifted(ident, Alphabet.parse("a:even,b:even"), 5).holds
    x = XY.element("x")
    assert super_commutator(x, x) == XY.element("xx") * 2 and not _unsigned_commutator(x, x)


@pytest.mark.parametrize("name,degree", [("zinbiel", 9), ("shuffle-associative", 9), ("bracket-tortkara", 9)])
def test_sampled_beyond_exhaustive_range(name, degree):
    report = sweep_sampled(name, standard_alphabet(), degree, samples=15, seed=7)
    assert report.holds and report.tuples == 15


def test_stop_at_first():
    ident = Identity("unsigned-shuffle-commutative", 2, _unsigned_shuffle_commutativity)
    assert len(sweep_lifted(ident, XY, 5, stop_at_first=True).failures) == 1
    assert len(sweep_direct(ident, XY, 5, stop_at_first=True).failures) == 1


def test_report_text():
    text = str(sweep_lifted("zinbiel", XY, 3))
    assert text.startswith("zinbiel: holds; mode=lifted degree<=3")
