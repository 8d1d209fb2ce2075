"""Braid words, twisted torus knot presentations, and closure bookkeeping.

A braid word on n strands is a sequence of signed generator indices:
``+i`` for sigma_i, ``-i`` for its inverse, 1 <= i <= n-1. Words are kept
verbatim (no free reduction or Markov moves), so lengths stay predictable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

Permutation = tuple[int, ...]


class InvalidTorusParameters(ValueError):
    """Parameters fail the (p, q) torus-knot or twist-region constraints."""


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid group on ``strands`` strands.

    ``letters`` holds signed 1-based generator indices. This class is
    deliberately permissive: any word is allowed, including ones whose
    closure is a link rather than a knot.
    """

    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 2:
            raise InvalidTorusParameters(f"need at least 2 strands, got {self.strands}")
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            if letter == 0 or abs(letter) > self.strands - 1:
                raise InvalidTorusParameters(
                    f"letter {letter} out of range for {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if self.strands != other.strands:
            raise InvalidTorusParameters("cannot concatenate words on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))


def braid_to_text(b: BraidWord) -> str:
    """Whitespace-separated signed indices; strand count is carried separately."""
    return " ".join(str(x) for x in b.letters)


def braid_from_text(text: str, strands: int) -> BraidWord:
    return BraidWord(strands, tuple(int(tok) for tok in text.split()))


def permutation(b: BraidWord) -> Permutation:
    """Image of the word in the symmetric group, as a 0-indexed position map.

    Convention: entry j is the position where the strand starting at
    position j ends after reading the word left to right. Each letter
    (either sign) acts as the transposition (i-1, i). Under this
    convention permutation(u * v) == compose(permutation(v), permutation(u)).
    """
    perm = list(range(b.strands))
    for letter in b.letters:
        i = abs(letter) - 1
        for j in range(b.strands):
            if perm[j] == i:
                perm[j] = i + 1
            elif perm[j] == i + 1:
                perm[j] = i
    return tuple(perm)


def compose(f: Permutation, g: Permutation) -> Permutation:
    """Function composition f after g: x -> f(g(x))."""
    return tuple(f[g[x]] for x in range(len(f)))


def cycle_count(perm: Permutation) -> int:
    seen = [False] * len(perm)
    count = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        count += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
    return count


def closure_components(b: BraidWord) -> int:
    """Number of components of the braid closure (cycles of the permutation)."""
    return cycle_count(permutation(b))


@dataclass(frozen=True)
class TwistedTorusKnot:
    """A (p, q) torus knot with r/2 extra full twists on two adjacent strands.

    Validated at construction: p, q >= 2 and coprime, r even, and the
    standard braid presentation closes to a single component. Odd twist
    counts (which close to links) are only reachable through raw
    BraidWord values, never through this type.
    """

    p: int
    q: int
    r: int

    def __post_init__(self):
        if self.p < 2 or self.q < 2:
            raise InvalidTorusParameters(f"need p, q >= 2, got ({self.p}, {self.q})")
        if gcd(self.p, self.q) != 1:
            raise InvalidTorusParameters(
                f"({self.p}, {self.q}) is not a knot: gcd = {gcd(self.p, self.q)}"
            )
        if self.r % 2 != 0:
            raise InvalidTorusParameters(f"twist parameter r must be even, got {self.r}")
        if closure_components(dean_braid(self)) != 1:
            raise InvalidTorusParameters(
                f"braid for ({self.p}, {self.q}, {self.r}) does not close to a knot"
            )

    @property
    def full_twists(self) -> int:
        """Number of full twists on the two-strand region (r = 2s gives s)."""
        return self.r // 2


def dean_braid(k: TwistedTorusKnot) -> BraidWord:
    """Standard presentation: (sigma_1 ... sigma_{p-1})^q sigma_1^r on p strands.

    Negative r contributes |r| inverse letters. The word has length
    q(p-1) + |r|; r = 0 gives the torus-knot braid.
    """
    torus_run = tuple(range(1, k.p)) * k.q
    twist_sign = 1 if k.r >= 0 else -1
    twists = (twist_sign,) * abs(k.r)
    return BraidWord(k.p, torus_run + twists)


def family_km(m: int) -> TwistedTorusKnot:
    """The m-th member of the (7, 17) family with r = 10m - 4 twists.

    The twist region then carries 5m - 2 full twists (``full_twists``).
    Downstream Morton coefficient checks are only meaningful for m != 0.
    """
    return TwistedTorusKnot(7, 17, 10 * m - 4)


def is_msy_family(k: TwistedTorusKnot) -> bool:
    """True for the (7, 17, 10m - 4) knots, whose non-mu-primitivity is
    a known input from Morimoto, Sakuma and Yokota."""
    return k.p == 7 and k.q == 17 and (k.r + 4) % 10 == 0
