"""Disc/sphere-bundle pair homology for bundles over catalog spaces.

For a rank-r bundle E over B, the homology of the pair (disc bundle,
sphere bundle) is the homology of B shifted up r degrees, computed with
coefficients twisted by the bundle's orientation character.  For an
orientable bundle this is the familiar shift isomorphism; for a
nonorientable one the twist is what makes the answer come out right
(rank-1 sanity checks: the Moebius pair over the circle matches reduced
RP^2, the tautological pair over RP^3 matches reduced RP^4).
"""

from __future__ import annotations

from dataclasses import dataclass

from .homology import (
    HomologyProfile,
    InadmissibleCharacterError,
    OrientationCharacter,
    Space,
    catalog_complex,
    homology,
    require_admissible,
)


@dataclass(frozen=True)
class BundleDescriptor:
    base: Space
    rank: int
    character: OrientationCharacter = OrientationCharacter.TRIVIAL

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise ValueError("bundle rank must be nonnegative")
        require_admissible(self.base, self.character)
        if self.rank == 0 and self.character is OrientationCharacter.NONTRIVIAL:
            raise InadmissibleCharacterError(
                "a rank-0 bundle has no orientation to twist"
            )


def thom_pair_homology(bundle: BundleDescriptor) -> HomologyProfile:
    """H_*(disc bundle, sphere bundle; Z)."""
    base = homology(catalog_complex(bundle.base, bundle.character))
    return base.shifted(bundle.rank)


@dataclass(frozen=True)
class ThomIsoReport:
    """Whether the pair homology equals the plain (untwisted) shift."""

    holds: bool
    pair: HomologyProfile
    shifted_base: HomologyProfile


def thom_iso_check(bundle: BundleDescriptor) -> ThomIsoReport:
    pair = thom_pair_homology(bundle)
    plain = homology(
        catalog_complex(bundle.base, OrientationCharacter.TRIVIAL)
    ).shifted(bundle.rank)
    return ThomIsoReport(pair == plain, pair, plain)
