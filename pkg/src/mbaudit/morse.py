"""Finite Morse-type complexes with labeled generators, and stabilization.

A :class:`MorseData` is a free complex presented the way gradient
counting produces it: a list of (label, index) generators and one
integer matrix per consecutive index pair, each entry the signed count
of trajectories from a single column generator down to a single row
generator.  Index gaps are allowed; absent matrices are zero.

Stabilization models crossing with a rank-r disc fibre: every index goes
up by r and every matrix entry picks up a sign recording whether the
fibre orientation is preserved along that trajectory.  The sign
bookkeeping is the :class:`SignTwist`; an inconsistent assignment is
detectable, because the twisted differential stops squaring to zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .homology import (
    ChainComplexError,
    HomologyProfile,
    IntegerChainComplex,
    IntegerMatrix,
    homology,
)


class InconsistentTwistError(Exception):
    """A sign twist broke d∘d = 0."""


def _complex_from_counts(
    counts: list[int], differentials: Mapping[int, IntegerMatrix]
) -> IntegerChainComplex:
    top = len(counts) - 1
    bounds = []
    for k in range(1, top + 1):
        d = differentials.get(k)
        bounds.append(d if d is not None else IntegerMatrix.zeros(counts[k - 1], counts[k]))
    return IntegerChainComplex(tuple(counts), tuple(bounds))


@dataclass(frozen=True, init=False)
class MorseData:
    """Labeled generators plus differentials keyed by source index.

    The matrix at key k maps index-k generators to index-(k-1)
    generators; its columns follow the order in which index-k generators
    appear in ``generators``, rows likewise for index k-1.
    """

    generators: tuple[tuple[str, int], ...]
    differentials: tuple[tuple[int, IntegerMatrix], ...]

    def __init__(
        self,
        generators: Iterable[tuple[str, int]],
        differentials: Mapping[int, IntegerMatrix] | None = None,
    ) -> None:
        gens = tuple((str(label), index) for label, index in generators)
        if not gens:
            raise ValueError("at least one generator is required")
        labels = [label for label, _ in gens]
        if len(set(labels)) != len(labels):
            raise ValueError("generator labels must be unique")
        if any(not isinstance(i, int) or isinstance(i, bool) or i < 0 for _, i in gens):
            raise ValueError("generator indices must be nonnegative integers")
        diffs = dict(differentials or {})
        counts = self._counts(gens)
        top = len(counts) - 1
        for k, d in diffs.items():
            if not isinstance(k, int) or k < 1 or k > top:
                raise ValueError(f"differential key {k} out of range 1..{top}")
            if (d.rows, d.cols) != (counts[k - 1], counts[k]):
                raise ValueError(
                    f"differential {k} must be {counts[k - 1]}x{counts[k]}, got {d.rows}x{d.cols}"
                )
        object.__setattr__(self, "generators", gens)
        object.__setattr__(
            self, "differentials", tuple(sorted(diffs.items()))
        )
        # validates d∘d = 0 (raises ChainComplexError if not)
        _complex_from_counts(counts, diffs)

    @staticmethod
    def _counts(gens: tuple[tuple[str, int], ...]) -> list[int]:
        top = max(i for _, i in gens)
        counts = [0] * (top + 1)
        for _, i in gens:
            counts[i] += 1
        return counts

    @property
    def max_index(self) -> int:
        return max(i for _, i in self.generators)

    def differential_map(self) -> dict[int, IntegerMatrix]:
        return dict(self.differentials)

    def to_chain_complex(self) -> IntegerChainComplex:
        return _complex_from_counts(self._counts(self.generators), self.differential_map())


@dataclass(frozen=True, init=False)
class SignTwist:
    """One ±1 matrix per differential, applied entrywise."""

    signs: tuple[tuple[int, IntegerMatrix], ...]

    def __init__(self, signs: Mapping[int, IntegerMatrix]) -> None:
        ss = dict(signs)
        for k, s in ss.items():
            if any(e not in (1, -1) for e in s.entries):
                raise ValueError(f"twist {k} has entries other than +1/-1")
        object.__setattr__(self, "signs", tuple(sorted(ss.items())))

    @staticmethod
    def all_plus(data: MorseData) -> SignTwist:
        return SignTwist(
            {k: IntegerMatrix(d.rows, d.cols, (1,) * (d.rows * d.cols)) for k, d in data.differentials}
        )

    def sign_map(self) -> dict[int, IntegerMatrix]:
        return dict(self.signs)


def morse_homology(data: MorseData) -> HomologyProfile:
    return homology(data.to_chain_complex())


def stabilize(data: MorseData, rank: int, twist: SignTwist | None = None) -> MorseData:
    """Shift all indices up by ``rank`` and twist the differentials.

    The twist must carry exactly one sign matrix per differential of
    ``data``, keyed by the (unshifted) source index, with matching
    shape.  If the twisted differentials violate d∘d = 0 the sign
    assignment was inconsistent and :class:`InconsistentTwistError` is
    raised.
    """
    if rank < 0:
        raise ValueError("stabilization rank must be nonnegative")
    if twist is None:
        twist = SignTwist.all_plus(data)
    diffs = data.differential_map()
    signs = twist.sign_map()
    if set(signs) != set(diffs):
        raise ValueError(
            f"twist keys {sorted(signs)} do not match differential keys {sorted(diffs)}"
        )
    twisted = {}
    for k, d in diffs.items():
        s = signs[k]
        if (s.rows, s.cols) != (d.rows, d.cols):
            raise ValueError(
                f"twist {k} must be {d.rows}x{d.cols}, got {s.rows}x{s.cols}"
            )
        twisted[k + rank] = d.entrywise_product(s)
    generators = tuple((label, index + rank) for label, index in data.generators)
    try:
        return MorseData(generators, twisted)
    except ChainComplexError as exc:
        raise InconsistentTwistError(f"twisted differential does not square to zero: {exc}") from exc
