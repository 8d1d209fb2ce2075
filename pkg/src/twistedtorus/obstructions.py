"""Coefficient obstructions to lens-space surgeries and gamma-primitivity.

Two classical results drive everything here. The Ozsvath-Szabo theorem
constrains the Alexander polynomial of any knot admitting a lens-space
surgery: in symmetric form all nonzero coefficients are +-1 and strictly
alternate in sign. Morton's theorem pins a coefficient of the twisted
torus knot T(p, q, 2n) at exponent ps + 2 (s the inverse of p mod q,
subject to 0 < s < q/3): at most -2 for n >= 2, and for negative twists a
+-2 among the three neighbouring exponents.

A knot whose exterior is gamma-primitive for some non-meridian curve
would admit a lens-space surgery (surgery on S^3 along a non-meridian
cannot return S^3, and a reducible genus-two splitting forces Heegaard
genus <= 1). So a failed lens form, combined with non-mu-primitivity
imported from Morimoto-Sakuma-Yokota, rules out gamma-primitivity for
every curve. The meridian half is an input here, never re-proved.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd
from typing import Optional

from .alexander import AlexanderPolynomial, alexander_of_knot
from .braid import TwistedTorusKnot, is_msy_family


class NoInverse(ValueError):
    """No modular inverse exists (arguments not coprime)."""


class HypothesisNotMet(ValueError):
    """Morton's hypotheses fail; the coefficient check is skipped, not failed."""


def morton_inverse_s(p: int, q: int) -> tuple[int, bool]:
    """The unique s in (0, q) with p*s = 1 mod q, and whether 0 < s < q/3.

    The second component is Morton's hypothesis; his coefficient bounds
    only apply when it holds.
    """
    if gcd(p, q) != 1:
        raise NoInverse(f"{p} has no inverse mod {q}")
    s = pow(p, -1, q)
    return s, 0 < 3 * s < q


@dataclass(frozen=True)
class MortonReport:
    """Outcome of Morton's coefficient check for one knot.

    ``part`` is 1 for positive twist counts (coefficient at ps + 2 must be
    <= -2) and 2 for negative ones (some coefficient among ps + 1, ps + 2,
    ps + 3 must be +-2). Exponents index the paper form; the symmetric-form
    exponent differs by half the breadth. Which unit normalization part 2's
    statement assumes is not pinned down, so when no examined coefficient
    is +-2 the report flags ``form_uncertain`` instead of hard-failing.
    """

    part: int
    s: int
    target_exponents: tuple[int, ...]
    coefficients: tuple[int, ...]
    prediction_holds: bool
    form_uncertain: bool = False


def morton_check(p: int, q: int, n: int, d: AlexanderPolynomial) -> MortonReport:
    """Apply Morton's theorem to the Alexander polynomial of T(p, q, 2n).

    Raises HypothesisNotMet when s >= q/3 or |n| < 2. The caller supplies
    ``d`` for the matching twist sign: part 1 reads T(p, q, 2n) with
    n >= 2, part 2 reads T(p, q, 2n) with n <= -2.
    """
    s, hypothesis_ok = morton_inverse_s(p, q)
    if not hypothesis_ok:
        raise HypothesisNotMet(f"s = {s} is not below {q}/3")
    if abs(n) < 2:
        raise HypothesisNotMet(f"|n| = {abs(n)} < 2")
    target = p * s + 2
    if n >= 2:
        coeff = d.paper_form.coefficient(target)
        sym_coeff = d.symmetric_form.coefficient(d.paper_to_symmetric_exponent(target))
        assert coeff == sym_coeff, "paper/symmetric coefficient bookkeeping out of sync"
        return MortonReport(
            part=1,
            s=s,
            target_exponents=(target,),
            coefficients=(coeff,),
            prediction_holds=coeff <= -2,
        )
    exponents = (target - 1, target, target + 1)
    coeffs = tuple(d.paper_form.coefficient(e) for e in exponents)
    holds = any(abs(c) == 2 for c in coeffs)
    return MortonReport(
        part=2,
        s=s,
        target_exponents=exponents,
        coefficients=coeffs,
        prediction_holds=holds,
        form_uncertain=not holds,
    )


def os_lens_form_check(d: AlexanderPolynomial) -> tuple[bool, Optional[tuple[int, int]]]:
    """Test the lens-space surgery form of the Alexander polynomial.

    Passes iff every nonzero coefficient of the symmetric form is +-1 and
    the nonzero coefficients strictly alternate in sign in increasing
    exponent order (symmetry itself is guaranteed by normalization). On
    failure returns the first violating (exponent, coefficient), with the
    exponent translated to paper-form indexing.
    """
    prev_sign = 0
    for exp, coeff in d.symmetric_form.items():
        sign = 1 if coeff > 0 else -1
        if abs(coeff) != 1 or sign == prev_sign:
            return False, (d.symmetric_to_paper_exponent(exp), coeff)
        prev_sign = sign
    return True, None


@dataclass(frozen=True)
class ObstructionReport:
    """Per-knot verdicts from the lens-form and Morton checks.

    The Morton fields are None whenever the hypothesis gate skipped the
    check. ``gamma_primitive_excluded`` is the conjunction of the failed
    lens form with the imported mu-primitivity exclusion; it can never be
    set when either ingredient is missing.
    """

    knot: TwistedTorusKnot
    lens_form_ok: bool
    lens_witness: Optional[tuple[int, int]]
    morton_target_exponent: Optional[int]
    morton_coefficient: Optional[int]
    morton_prediction_holds: Optional[bool]
    gamma_primitive_excluded: bool
    mu_primitive_excluded_by_msy: bool

    def to_json_dict(self) -> dict:
        return {
            "knot": {"p": self.knot.p, "q": self.knot.q, "r": self.knot.r},
            "lens_form_ok": self.lens_form_ok,
            "lens_witness": list(self.lens_witness) if self.lens_witness else None,
            "morton_target_exponent": self.morton_target_exponent,
            "morton_coefficient": self.morton_coefficient,
            "morton_prediction_holds": self.morton_prediction_holds,
            "gamma_primitive_excluded": self.gamma_primitive_excluded,
            "mu_primitive_excluded_by_msy": self.mu_primitive_excluded_by_msy,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


def gamma_primitivity_verdict(
    k: TwistedTorusKnot, mu_excluded: Optional[bool] = None
) -> ObstructionReport:
    """Run the full obstruction pipeline on one knot.

    ``mu_excluded`` defaults to True exactly for the (7, 17, 10m - 4)
    family (the Morimoto-Sakuma-Yokota result) and False otherwise; pass
    it explicitly to override. The verdict only certifies the lens-space
    half itself; the meridian half stays an imported fact.
    """
    if mu_excluded is None:
        mu_excluded = is_msy_family(k)
    d = alexander_of_knot(k)
    lens_ok, witness = os_lens_form_check(d)
    target = coeff = holds = None
    try:
        report = morton_check(k.p, k.q, k.full_twists, d)
    except HypothesisNotMet:
        pass
    else:
        idx = report.target_exponents.index(k.p * report.s + 2)
        target = report.target_exponents[idx]
        coeff = report.coefficients[idx]
        holds = report.prediction_holds
    return ObstructionReport(
        knot=k,
        lens_form_ok=lens_ok,
        lens_witness=witness,
        morton_target_exponent=target,
        morton_coefficient=coeff,
        morton_prediction_holds=holds,
        gamma_primitive_excluded=(not lens_ok) and mu_excluded,
        mu_primitive_excluded_by_msy=mu_excluded,
    )
