"""Reduced Burau representation and Alexander polynomials of braid closures.

Matrix convention, stated once and tested through the homomorphism
property: matrices act on row vectors, and a word maps to the product of
its letter matrices in left-to-right order. Generator sigma_i acts on
coordinates (i-1, i, i+1) by the block

    [ 1   t   0 ]
    [ 0  -t   0 ]
    [ 0   1   1 ]

truncated at the boundary for i = 1 and i = n-1; inverse letters use the
exact inverse block over Z[t, t^-1].

The Alexander polynomial of the closure of a word b on n strands is
recovered from det(burau(b) - I) = unit * Delta(t) * (1 + t + ... + t^{n-1});
the unit +-t^k ambiguity is resolved entirely in ``normalize``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import Sequence

from .braid import BraidWord, InvalidTorusParameters, TwistedTorusKnot, closure_components, dean_braid
from .laurent import LaurentPoly


class NotAKnot(ValueError):
    """The braid closure has more than one component."""


class NotAlexanderLike(ArithmeticError):
    """A polynomial handed to ``normalize`` cannot be an Alexander polynomial."""


@dataclass(frozen=True)
class BurauMatrix:
    """Square matrix of Laurent polynomials, dimension strands - 1."""

    n_minus_1: int
    entries: tuple[tuple[LaurentPoly, ...], ...]


_ZERO = LaurentPoly.zero()
_ONE = LaurentPoly.one()


def _identity_rows(n: int) -> list[list[LaurentPoly]]:
    return [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]


@lru_cache(maxsize=None)
def _generator_rows(strands: int, letter: int) -> tuple[tuple[LaurentPoly, ...], ...]:
    """Matrix of a single signed generator. Cached per (strands, letter);
    entries are immutable so the cache is safe to share across threads."""
    n = strands - 1
    i = abs(letter) - 1  # 0-based position of the -t diagonal entry
    rows = _identity_rows(n)
    if letter > 0:
        t = LaurentPoly.t()
        rows[i][i] = -t
        if i - 1 >= 0:
            rows[i - 1][i] = t
        if i + 1 < n:
            rows[i + 1][i] = _ONE
    else:
        tinv = LaurentPoly.monomial(-1)
        rows[i][i] = -tinv
        if i - 1 >= 0:
            rows[i - 1][i] = _ONE
        if i + 1 < n:
            rows[i + 1][i] = tinv
    return tuple(tuple(row) for row in rows)


def _mat_mul(a: Sequence[Sequence[LaurentPoly]], b: Sequence[Sequence[LaurentPoly]]):
    n = len(a)
    out = [[_ZERO] * n for _ in range(n)]
    for k in range(n):
        b_row = b[k]
        cols = [j for j in range(n) if b_row[j]]
        for i in range(n):
            a_ik = a[i][k]
            if not a_ik:
                continue
            row = out[i]
            for j in cols:
                row[j] = row[j] + a_ik * b_row[j]
    return out


def reduced_burau(b: BraidWord) -> BurauMatrix:
    """Product of the generator matrices in word order; identity for the
    empty word."""
    rows = _identity_rows(b.strands - 1)
    for letter in b.letters:
        rows = _mat_mul(rows, _generator_rows(b.strands, letter))
    return BurauMatrix(b.strands - 1, tuple(tuple(row) for row in rows))


def bareiss_determinant(rows: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free determinant over the Laurent ring.

    Every division is by a previous pivot and is exact by Sylvester's
    identity; NotDivisible escaping from here indicates corrupted input,
    not a numerical issue.
    """
    n = len(rows)
    if n == 0:
        return _ONE
    m = [list(row) for row in rows]
    sign = 1
    prev = _ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return _ZERO
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = pivot * m[i][j] - m[i][k] * m[k][j]
                m[i][j] = num if k == 0 else num.exact_div(prev)
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign == 1 else -det


@dataclass(frozen=True)
class AlexanderPolynomial:
    """An Alexander polynomial in its two canonical printed forms.

    ``paper_form`` has minimum exponent 0 and positive constant term;
    ``symmetric_form`` is the same polynomial shifted down by half its
    breadth, fixed under t -> t^-1. ``genus_breadth`` is the (even) common
    breadth of both forms.
    """

    symmetric_form: LaurentPoly
    paper_form: LaurentPoly
    genus_breadth: int

    def paper_to_symmetric_exponent(self, exp: int) -> int:
        """The single place exponent bookkeeping between the two forms lives;
        an off-by-half-breadth here would corrupt every coefficient lookup."""
        return exp - self.genus_breadth // 2

    def symmetric_to_paper_exponent(self, exp: int) -> int:
        return exp + self.genus_breadth // 2


def normalize(raw: LaurentPoly) -> AlexanderPolynomial:
    """Scale by the unit +-t^k that puts the polynomial in paper form.

    Accepts anything a sound determinant pipeline can emit: nonzero,
    evaluating to +-1 at t = 1, and palindromic up to a unit. Anything
    else raises NotAlexanderLike, flagging an upstream computation error.
    """
    if raw.is_zero():
        raise NotAlexanderLike("zero polynomial")
    if raw.evaluate_at_one() not in (1, -1):
        raise NotAlexanderLike(f"value at t = 1 is {raw.evaluate_at_one()}, expected +-1")
    paper = LaurentPoly.monomial(-raw.min_exp) * raw
    if paper.coefficient(0) < 0:
        paper = -paper
    breadth = paper.breadth
    # Palindromic check against the reflected polynomial re-shifted to
    # exponent range [0, breadth].
    reflected = LaurentPoly.monomial(breadth) * paper.substitute_inverse()
    if reflected != paper:
        raise NotAlexanderLike(f"{paper} is not palindromic")
    # Palindromicity plus value +-1 at t = 1 forces even breadth: an odd
    # breadth pairs every exponent with a distinct partner, making the
    # coefficient sum even.
    assert breadth % 2 == 0, f"odd breadth {breadth} slipped past the palindrome check"
    symmetric = LaurentPoly.monomial(-breadth // 2) * paper
    return AlexanderPolynomial(symmetric_form=symmetric, paper_form=paper, genus_breadth=breadth)


def alexander_from_braid(b: BraidWord) -> AlexanderPolynomial:
    """Alexander polynomial of the closure of ``b``.

    Raises NotAKnot unless the closure has exactly one component.
    """
    components = closure_components(b)
    if components != 1:
        raise NotAKnot(f"closure has {components} components, need exactly 1")
    burau = reduced_burau(b)
    m = [list(row) for row in burau.entries]
    for i in range(burau.n_minus_1):
        m[i][i] = m[i][i] - _ONE
    det = bareiss_determinant(m)
    strand_sum = LaurentPoly({e: 1 for e in range(b.strands)})
    return normalize(det.exact_div(strand_sum))


def alexander_torus_closed_form(p: int, q: int) -> AlexanderPolynomial:
    """Torus-knot Alexander polynomial from the product formula
    (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)).

    Computed independently of the Burau pipeline, so the two routes
    cross-validate each other at r = 0.
    """
    if p < 2 or q < 2 or gcd(p, q) != 1:
        raise InvalidTorusParameters(f"({p}, {q}) is not a nontrivial torus knot")
    t = LaurentPoly.t()
    one = LaurentPoly.one()
    numerator = (LaurentPoly.monomial(p * q) - one) * (t - one)
    quotient = numerator.exact_div(LaurentPoly.monomial(p) - one)
    quotient = quotient.exact_div(LaurentPoly.monomial(q) - one)
    return normalize(quotient)


def alexander_of_knot(k: TwistedTorusKnot) -> AlexanderPolynomial:
    """Alexander polynomial of a twisted torus knot via its braid."""
    return alexander_from_braid(dean_braid(k))
