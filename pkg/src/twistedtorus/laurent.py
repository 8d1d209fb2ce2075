"""Exact sparse Laurent polynomials in one variable t over Python's big integers.

Values are immutable once constructed; every operation returns a new
polynomial in canonical form (no zero coefficients, exponents sorted
increasing). The zero polynomial stores no terms at all.
"""

from __future__ import annotations

import re
from bisect import insort
from typing import Iterable, Iterator, Mapping


class NotDivisible(ArithmeticError):
    """Exact division was requested but the remainder is nonzero."""


class EmptyPolynomial(ValueError):
    """An operation that needs a nonzero polynomial got the zero polynomial."""


class LaurentPoly:
    """A Laurent polynomial with integer coefficients, stored sparsely.

    >>> p = LaurentPoly({2: 1, 0: -1})
    >>> str(p)
    't^2 - 1'
    >>> str(p * LaurentPoly({-2: 3}))
    '3 - 3t^-2'
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        if isinstance(terms, Mapping):
            terms = terms.items()
        acc: dict[int, int] = {}
        for exp, coeff in terms:
            acc[exp] = acc.get(exp, 0) + coeff
        # Dicts preserve insertion order, so building from sorted exponents
        # makes iteration order canonical.
        self._terms = {e: acc[e] for e in sorted(acc) if acc[e] != 0}

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> LaurentPoly:
        return cls()

    @classmethod
    def one(cls) -> LaurentPoly:
        return cls({0: 1})

    @classmethod
    def t(cls) -> LaurentPoly:
        return cls({1: 1})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls({exp: coeff})

    # -- inspection --------------------------------------------------------

    def items(self) -> Iterator[tuple[int, int]]:
        """Iterate (exponent, coefficient) pairs in increasing exponent order."""
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise EmptyPolynomial("zero polynomial has no minimum exponent")
        return next(iter(self._terms))

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise EmptyPolynomial("zero polynomial has no maximum exponent")
        return next(reversed(self._terms))

    @property
    def breadth(self) -> int:
        """Maximum exponent minus minimum exponent.

        >>> LaurentPoly({3: 1, -2: 5}).breadth
        5
        """
        if not self._terms:
            raise EmptyPolynomial("breadth of the zero polynomial is undefined")
        return self.max_exp - self.min_exp

    def coefficient(self, exp: int) -> int:
        """Coefficient at the given exponent, 0 if absent."""
        return self._terms.get(exp, 0)

    def evaluate_at_one(self) -> int:
        """Value at t = 1, i.e. the sum of all coefficients."""
        return sum(self._terms.values())

    def is_unit(self) -> bool:
        """True for +-t^k, the units of the Laurent ring."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _coerce(other: LaurentPoly | int) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in o._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        p = LaurentPoly()
        p._terms = {e: -c for e, c in self._terms.items()}
        return p

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: LaurentPoly | int) -> LaurentPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self._terms or not o._terms:
            return LaurentPoly()
        # Monomial factors dominate the Burau matrix products; shift-and-scale
        # instead of convolving.
        if len(o._terms) == 1:
            (e, c), = o._terms.items()
            return LaurentPoly({e0 + e: c0 * c for e0, c0 in self._terms.items()})
        if len(self._terms) == 1:
            (e, c), = self._terms.items()
            return LaurentPoly({e0 + e: c0 * c for e0, c0 in o._terms.items()})
        acc: dict[int, int] = {}
        for e0, c0 in self._terms.items():
            for e1, c1 in o._terms.items():
                e = e0 + e1
                acc[e] = acc.get(e, 0) + c0 * c1
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> LaurentPoly:
        if n < 0:
            if not self.is_unit():
                raise NotDivisible("only units +-t^k can be raised to negative powers")
            (e, c), = self._terms.items()
            return LaurentPoly({e * n: 1 if n % 2 == 0 else c})
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute_inverse(self) -> LaurentPoly:
        """Replace t by t^-1, i.e. negate every exponent."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    def exact_div(self, divisor: LaurentPoly) -> LaurentPoly:
        """Divide exactly in the Laurent ring, raising NotDivisible on any remainder.

        Long division by the lowest-exponent term of the divisor. Failing
        loudly here is deliberate: a nonzero remainder in the determinant
        pipeline means a bug upstream, never something to truncate.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly()
        rem = dict(self._terms)
        rem_exps = sorted(rem)
        div_items = list(divisor._terms.items())
        low_exp, low_coeff = div_items[0]
        # Quotient exponents are bounded by the degree difference; exceeding
        # the bound proves the remainder can never cancel.
        top = self.max_exp - divisor.max_exp
        quot: dict[int, int] = {}
        idx = 0
        while idx < len(rem_exps):
            e = rem_exps[idx]
            c = rem.get(e, 0)
            if c == 0:
                idx += 1
                continue
            q_exp = e - low_exp
            q_coeff, r = divmod(c, low_coeff)
            if r != 0 or q_exp > top:
                raise NotDivisible(f"{self} is not divisible by {divisor}")
            quot[q_exp] = q_coeff
            for de, dc in div_items:
                k = q_exp + de
                nv = rem.get(k, 0) - q_coeff * dc
                if nv:
                    if k not in rem:
                        # Keep the scan order sorted as new exponents appear.
                        insort(rem_exps, k)
                    rem[k] = nv
                else:
                    rem[k] = 0
            idx += 1
        return LaurentPoly(quot)

    # -- equality / hashing / display ---------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __repr__(self) -> str:
        return f"LaurentPoly('{format_poly(self)}')"

    def __str__(self) -> str:
        return format_poly(self)


def format_poly(p: LaurentPoly) -> str:
    """Render in the canonical text form: descending exponents, explicit signs,
    unit coefficients omitted, exponent 1 as plain ``t``, exponent 0 as a bare
    integer.

    >>> format_poly(LaurentPoly({2: 1, 1: -1, 0: 1}))
    't^2 - t + 1'
    >>> format_poly(LaurentPoly())
    '0'
    """
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for exp, coeff in sorted(p.items(), reverse=True):
        mag = abs(coeff)
        if exp == 0:
            body = str(mag)
        else:
            var = "t" if exp == 1 else f"t^{exp}"
            body = var if mag == 1 else f"{mag}{var}"
        if not parts:
            parts.append(body if coeff > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if coeff > 0 else f" - {body}")
    return "".join(parts)


_TERM_RE = re.compile(r"([+-]?)(\d*)(t(\^(-?\d+))?)?", re.IGNORECASE)


def parse_poly(text: str) -> LaurentPoly:
    """Parse the canonical text form back into a polynomial.

    Whitespace is ignored everywhere and the variable letter is accepted
    case-insensitively, so transcriptions that print ``T`` parse unchanged.
    """
    compact = "".join(text.split())
    if not compact:
        raise ValueError("empty polynomial text")
    if compact == "0":
        return LaurentPoly()
    terms: list[tuple[int, int]] = []
    pos = 0
    while pos < len(compact):
        m = _TERM_RE.match(compact, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {compact[pos:pos + 12]!r}")
        sign_s, digits, var, _, exp_s = m.groups()
        if not digits and not var:
            raise ValueError(f"cannot parse polynomial near {compact[pos:pos + 12]!r}")
        coeff = int(digits) if digits else 1
        if sign_s == "-":
            coeff = -coeff
        if var:
            exp = int(exp_s) if exp_s is not None else 1
        else:
            exp = 0
        terms.append((exp, coeff))
        pos = m.end()
    return LaurentPoly(terms)
