"""Morse-Bott polynomial audits and the associated spectral-page ledger.

Given an ambient space and its critical submanifolds in filtration
order, the counting polynomial is

    MB(t) = sum over criticals of  t^index * P(critical)

where P is the Poincare polynomial of the critical submanifold, taken
with plain Z coefficients in ``untwisted`` mode and with coefficients
twisted by the recorded negative-bundle orientation character in
``local`` mode.  The audit asks whether MB - P(ambient) is (1 + t)
times a polynomial with nonnegative coefficients, and reports exactly
how that fails when it does.

The quotient is computed twice, by synthetic division and by the
alternating partial sums q_k = sum_{i<=k} (-1)^(k-i) (mb_i - p_i); the
two routes must agree and the check is kept even in production.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Iterable

from .bundles import BundleDescriptor, thom_pair_homology
from .homology import (
    Explicit,
    HomologyProfile,
    OrientationCharacter,
    Space,
    catalog_complex,
    homology,
    require_admissible,
    space_dim,
    space_tag,
)
from .polyalg import IntPoly, NotDivisibleError, divide_by_one_plus_t

MODES = ("untwisted", "local")


@dataclass(frozen=True)
class CriticalSubmanifold:
    """A connected catalog space sitting at a given index, together with
    the orientation character of its negative normal bundle."""

    space: Space
    index: int
    negative_character: OrientationCharacter = OrientationCharacter.TRIVIAL

    def __post_init__(self) -> None:
        if isinstance(self.space, Explicit):
            raise ValueError("critical submanifolds must be connected catalog spaces")
        if self.index < 0:
            raise ValueError("critical index must be nonnegative")
        require_admissible(self.space, self.negative_character)


@dataclass(frozen=True, init=False)
class MorseBottData:
    """Ambient space plus critical submanifolds in filtration order."""

    ambient: Space
    criticals: tuple[CriticalSubmanifold, ...]

    def __init__(self, ambient: Space, criticals: Iterable[CriticalSubmanifold]) -> None:
        crits = tuple(criticals)
        ambient_dim = space_dim(ambient)
        if ambient_dim is not None:
            for c in crits:
                cdim = space_dim(c.space)
                if c.index + cdim > ambient_dim:
                    raise ValueError(
                        f"critical {space_tag(c.space)} at index {c.index} does not fit in "
                        f"a {ambient_dim}-dimensional ambient space"
                    )
            has_min = any(c.index == 0 for c in crits)
            has_max = any(c.index + space_dim(c.space) == ambient_dim for c in crits)
            if not (has_min and has_max):
                raise ValueError(
                    "a closed ambient space needs a critical submanifold of index 0 "
                    "and one realizing the top dimension"
                )
        elif not crits:
            warnings.warn("no critical submanifolds given", stacklevel=2)
        else:
            if not any(c.index == 0 for c in crits):
                warnings.warn(
                    "no index-0 critical submanifold; minimum missing?", stacklevel=2
                )
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "criticals", crits)

    def ambient_homology(self) -> HomologyProfile:
        return homology(catalog_complex(self.ambient))

    def ambient_poincare(self) -> IntPoly:
        return self.ambient_homology().poincare_polynomial()


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def mb_polynomial(data: MorseBottData, mode: str = "untwisted") -> IntPoly:
    """The counting polynomial of the critical submanifolds."""
    _check_mode(mode)
    total = IntPoly()
    for crit in data.criticals:
        character = (
            crit.negative_character if mode == "local" else OrientationCharacter.TRIVIAL
        )
        p = homology(catalog_complex(crit.space, character)).poincare_polynomial()
        total = total + p.shift(crit.index)
    return total


class InequalityVerdict:
    """Base for the three audit outcomes."""

    holds = False


@dataclass(frozen=True)
class Holds(InequalityVerdict):
    quotient: IntPoly

    holds = True


@dataclass(frozen=True)
class FailsNotDivisible(InequalityVerdict):
    """mb - p is not divisible by 1 + t; chi_gap is its value at -1,
    the Euler-characteristic mismatch."""

    chi_gap: int


@dataclass(frozen=True)
class FailsNegativeCoefficient(InequalityVerdict):
    """The quotient exists but dips negative; degree is the lowest
    offending power of t."""

    degree: int
    quotient: IntPoly


def _alternating_quotient(diff: IntPoly) -> IntPoly:
    """The quotient by 1 + t computed as alternating partial sums."""
    n = len(diff.coeffs)
    qs = []
    for k in range(max(n - 1, 0)):
        qs.append(sum((-1) ** (k - i) * diff.coeffs[i] for i in range(k + 1)))
    return IntPoly(qs)


def check_inequalities(mb: IntPoly, p: IntPoly) -> InequalityVerdict:
    """Audit mb against p: is mb - p = (1 + t) * Q with Q >= 0?"""
    diff = mb - p
    gap = diff.evaluate(-1)
    if gap != 0:
        return FailsNotDivisible(gap)
    quotient = divide_by_one_plus_t(diff)
    alt = _alternating_quotient(diff)
    if quotient != alt:
        raise AssertionError(
            f"division routes disagree: {quotient.coeffs} vs {alt.coeffs}"
        )
    for k, c in enumerate(quotient.coeffs):
        if c < 0:
            return FailsNegativeCoefficient(k, quotient)
    return Holds(quotient)


def e2_page(data: MorseBottData, naive: bool = False) -> tuple[HomologyProfile, ...]:
    """Pair homology of each negative bundle, in filtration order.

    With ``naive=True`` every orientation character is forced trivial,
    which reproduces the bookkeeping error the local characters fix.
    """
    page = []
    for crit in data.criticals:
        character = OrientationCharacter.TRIVIAL if naive else crit.negative_character
        page.append(
            thom_pair_homology(BundleDescriptor(crit.space, crit.index, character))
        )
    return tuple(page)


@dataclass(frozen=True)
class E2Report:
    total_free_rank: int
    ambient_rank: int
    rank_bound_ok: bool
    euler_sum: int
    ambient_euler: int
    euler_ok: bool


def e2_consistency(data: MorseBottData, naive: bool = False) -> E2Report:
    """Rank and Euler bookkeeping for the page against the ambient space."""
    page = e2_page(data, naive=naive)
    total_free = sum(profile.total_free_rank() for profile in page)
    euler_sum = sum(profile.euler_characteristic() for profile in page)
    ambient = data.ambient_homology()
    ambient_rank = ambient.total_free_rank()
    ambient_euler = catalog_complex(data.ambient).euler_characteristic()
    return E2Report(
        total_free_rank=total_free,
        ambient_rank=ambient_rank,
        rank_bound_ok=total_free >= ambient_rank,
        euler_sum=euler_sum,
        ambient_euler=ambient_euler,
        euler_ok=euler_sum == ambient_euler,
    )
