"""Primitivity of the middle Heegaard splitting of a torus knot.

The splitting of the (p, q) torus-knot exterior is primitive for some
boundary curve exactly when integers r, s with |ps - rq| = 1 exist with
r = 1 or s = 1, i.e. when p = +-1 mod q or q = +-1 mod p. The decision
is pure modular arithmetic; exhaustive search over (r, s) exists only as
a test oracle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Optional

from .braid import InvalidTorusParameters


@dataclass(frozen=True)
class PrimitivityResult:
    p: int
    q: int
    primitive: bool
    witness: Optional[tuple[int, int]]  # (r, s) with |ps - rq| = 1, r = 1 or s = 1

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "primitive": self.primitive,
            "witness": list(self.witness) if self.witness else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def verdict_line(self) -> str:
        if not self.primitive:
            return "not primitive"
        r, s = self.witness
        if s == 1:
            return f"primitive (s=1, r={r})"
        return f"primitive (r=1, s={s})"


def middle_splitting_primitive(p: int, q: int) -> PrimitivityResult:
    """Decide primitivity and produce a deterministic witness.

    Branch order is fixed for reproducible output: the s = 1 case first
    (r from p = +-1 mod q, preferring rq = p + 1), then the r = 1 case
    (s from q = +-1 mod p, preferring ps = q + 1).
    """
    if p < 2 or q < 2 or gcd(p, q) != 1:
        raise InvalidTorusParameters(f"({p}, {q}) is not a nontrivial torus knot")
    for numerator in (p + 1, p - 1):
        if numerator % q == 0:
            return PrimitivityResult(p, q, True, (numerator // q, 1))
    for numerator in (q + 1, q - 1):
        if numerator % p == 0:
            return PrimitivityResult(p, q, True, (1, numerator // p))
    return PrimitivityResult(p, q, False, None)
