"""Closed forms for products of super skew-rcom elements.

A skew-rcom element is bar(x_1 ... x_n) for letters x_k, n >= 2.  The
functions here take the letter sequences I = (i_1..i_m) and J = (j_1..j_n)
and return the product or supercommutator of bar(I) and bar(J) written as a
combination of shuffles followed by two fixed letters.  They are exact
shortcuts for the direct computation and are tested against it.

Sign exponents use |a| for the parity of a letter and S(...) for the parity
of a letter sequence.
"""
from __future__ import annotations

from ..graded import FreeElement, linear_combination, sign
from .products import append_letters, bar, shuffle_words


def _p(letters) -> int:
    return sum(g.parity for g in letters) & 1


def sh_then(u, v, *tail) -> FreeElement:
    """(u sh v) followed by the letters ``tail``; u and v may be empty words."""
    u, v, tail = tuple(u), tuple(v), tuple(tail)
    if not u and not v:
        return FreeElement.from_word(tail)
    return FreeElement({w + tail: c for w, c in shuffle_words(u, v)})


def word(*letters) -> FreeElement:
    return FreeElement.from_word(tuple(letters))


def _check(I, J, min_m, min_n):
    if len(I) < min_m or len(J) < min_n:
        raise ValueError(f"need len(I) >= {min_m} and len(J) >= {min_n}")


def rcom_product(I, J) -> FreeElement:
    """bar(I) o bar(J) for len(I) >= 2 and len(J) >= 2."""
    I, J = tuple(I), tuple(J)
    _check(I, J, 2, 2)
    head, a, b = I[:-2], I[-2], I[-1]  # a = i_{m-1}, b = i_m
    pa, pb = a.parity, b.parity
    swapped = head + (b, a)
    if len(J) == 2:
        j1, j2 = J
        p1, p2 = j1.parity, j2.parity
        return linear_combination([
            (1, bar(word(*I, j1, j2))),
            (-sign(pa * pb), bar(word(*swapped, j1, j2))),
            (sign(pb * p1), sh_then(I[:-1], (j1,), b, j2)),
            (-sign(pa * (p1 + pb)), sh_then(head + (b,), (j1,), a, j2)),
            (-sign(p2 * (p1 + pb)), sh_then(I[:-1], (j2,), b, j1)),
            (sign(p2 * (p1 + pa) + pa * pb), sh_then(head + (b,), (j2,), a, j1)),
        ])
    c, d = J[-2], J[-1]  # c = j_{n-1}, d = j_n
    pc, pd = c.parity, d.parity
    s1, s2 = _p(J[:-1]), _p(J[:-2])
    return linear_combination([
        (1, bar(sh_then(I, J[:-2], c, d))),
        (-sign(pa * pb), bar(sh_then(swapped, J[:-2], c, d))),
        (sign(pb * s1), sh_then(I[:-1], J[:-1], b, d)),
        (-sign(pa * (pb + s1)), sh_then(head + (b,), J[:-1], a, d)),
        (-sign(pb * (s2 + pd) + pd * pc), sh_then(I[:-1], J[:-2] + (d,), b, c)),
        (sign(pa * (pb + s2 + pd) + pd * pc), sh_then(head + (b,), J[:-2] + (d,), a, c)),
    ])


def rcom_commutator(I, J) -> FreeElement:
    """[bar(I), bar(J)] for len(I) >= 2, len(J) >= 2, as bar-elements."""
    I, J = tuple(I), tuple(J)
    _check(I, J, 2, 2)
    if len(I) == 2 and len(J) == 2:
        (i1, i2), (j1, j2) = I, J
        q1, q2, p1, p2 = i1.parity, i2.parity, j1.parity, j2.parity
        return linear_combination([
            (1, bar(append_letters(bar(word(i1, i2)), (j1, j2)))),
            (-sign((q1 + q2) * (p1 + p2)), bar(append_letters(bar(word(j1, j2)), (i1, i2)))),
            (sign(q2 * p1), bar(sh_then((i1,), (j1,), i2, j2))),
            (-sign((q2 + p1) * p2), bar(sh_then((i1,), (j2,), i2, j1))),
            (sign(q1 * (q2 + p2) + p1 * p2), bar(sh_then((i2,), (j2,), i1, j1))),
            (-sign(q1 * (q2 + p1)), bar(sh_then((i2,), (j1,), i1, j2))),
        ])
    head, a, b = I[:-2], I[-2], I[-1]
    pa, pb = a.parity, b.parity
    c, d = J[-2], J[-1]
    pc, pd = c.parity, d.parity
    sj, s1, s2 = _p(J), _p(J[:-1]), _p(J[:-2])
    return linear_combination([
        (1, bar(sh_then(I, J[:-2], c, d))),
        (-sign(pa * pb), bar(sh_then(head + (b, a), J[:-2], c, d))),
        (-sign((pa + pb) * sj), bar(sh_then(head, J, a, b))),
        (sign((pa + pb) * sj + pc * pd), bar(sh_then(head, J[:-2] + (d, c), a, b))),
        (sign(pb * s1), bar(sh_then(I[:-1], J[:-1], b, d))),
        (-sign(pa * s1 + pa * pb), bar(sh_then(head + (b,), J[:-1], a, d))),
        (-sign(pb * s2 + (pb + pc) * pd), bar(sh_then(I[:-1], J[:-2] + (d,), b, c))),
        (sign(pa * (pb + s2 + pd) + pc * pd), bar(sh_then(head + (b,), J[:-2] + (d,), a, c))),
    ])


def rcom_letter_commutator(I, x) -> FreeElement:
    """[bar(I), x] for a letter x and len(I) >= 2."""
    I = tuple(I)
    if len(I) < 2:
        raise ValueError("need len(I) >= 2")
    head, a, b = I[:-2], I[-2], I[-1]
    pa, pb, px = a.parity, b.parity, x.parity
    if not head:
        return linear_combination([
            (1, bar(word(a, b, x))),
            (-sign(pa * pb), bar(word(b, a, x))),
            (-sign((pa + pb) * px), bar(word(x, a, b))),
        ])
    return linear_combination([
        (1, bar(word(*I, x))),
        (-sign(pa * pb), bar(word(*head, b, a, x))),
        (-sign(px * _p(I)), bar(sh_then((x,), head, a, b))),
    ])


def _l(*letters) -> FreeElement:
    return bar(word(*letters))


def commutator_of_commutators(a, b, c, d) -> FreeElement:
    """[[a, b], [c, d]] for letters a, b, c, d, as twelve bar-elements."""
    A, B, C, D = a.parity, b.parity, c.parity, d.parity
    return linear_combination([
        (1, _l(a, b, c, d)),
        (sign(B * C), _l(a, c, b, d)),
        (-sign((B + C) * D), _l(a, d, b, c)),
        (-sign(A * B), _l(b, a, c, d)),
        (-sign(A * (B + C)), _l(b, c, a, d)),
        (sign(A * B + (A + C) * D), _l(b, d, a, c)),
        (sign((A + B) * C), _l(c, a, b, d)),
        (-sign(A * B + (A + B) * C), _l(c, b, a, d)),
        (-sign((A + B) * (C + D)), _l(c, d, a, b)),
        (-sign((A + B + C) * D), _l(d, a, b, c)),
        (sign(A * B + (A + B + C) * D), _l(d, b, a, c)),
        (sign((A + B) * C + (A + B + C) * D), _l(d, c, a, b)),
    ])


def left_nested_commutator(a, b, c, d) -> FreeElement:
    """[[[a, b], c], d] for letters a, b, c, d, as twelve bar-elements."""
    A, B, C, D = a.parity, b.parity, c.parity, d.parity
    return linear_combination([
        (1, _l(a, b, c, d)),
        (-sign(B * C), _l(a, c, b, d)),
        (-sign((B + C) * D), _l(a, d, b, c)),
        (-sign(A * B), _l(b, a, c, d)),
        (sign(A * (B + C)), _l(b, c, a, d)),
        (sign(A * B + (A + C) * D), _l(b, d, a, c)),
        (-sign((A + B) * C), _l(c, a, b, d)),
        (sign(A * B + (A + B) * C), _l(c, b, a, d)),
        (sign((A + B) * C + (A + B) * D), _l(c, d, a, b)),
        (-sign((A + B + C) * D), _l(d, a, b, c)),
        (sign(A * B + (A + B + C) * D), _l(d, b, a, c)),
        (sign((A + B) * C + (A + B + C) * D), _l(d, c, a, b)),
    ])
