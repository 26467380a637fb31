"""Integer chain complexes, Smith normal form, and a small space catalog.

Conventions
-----------
A chain complex stores one rank per degree 0..top and boundary matrices
d_k : C_k -> C_{k-1} for k = 1..top; rows of d_k index degree k-1
generators, columns index degree k.  Homology in degree k is
ker d_k / im d_{k+1}.  Its free rank is

    ranks[k] - rank(d_k) - rank(d_{k+1})

and its torsion is the list of invariant factors of d_{k+1} that exceed
one, both read off Smith normal forms.  Everything is exact: matrices
hold Python ints and the reduction uses only invertible integer row and
column operations.

The catalog fixes one minimal cellular model per space: a point (one
cell), spheres (two cells), the 2-torus (four cells), and real
projective spaces (one cell per degree, boundary degree 1 + (-1)^k).
Each non-simply-connected catalog space also carries one canonical sign
local system, the "twisted" coefficients: it swaps the projective-space
boundary pattern to 1 - (-1)^k, turns the circle's boundary into
multiplication by 2, and doubles one loop of the torus (boundaries
[2 0] and [0 2]^T).  Twisting never changes the alternating sum of
ranks, so Euler characteristics are preserved.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence, Union


class ChainComplexError(ValueError):
    """A boundary matrix has the wrong shape or d∘d != 0."""


class InadmissibleCharacterError(ValueError):
    """A nontrivial orientation character on a space that has none."""


# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True, init=False)
class IntegerMatrix:
    """A rows x cols integer matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __init__(self, rows: int, cols: int, entries: Iterable[int]) -> None:
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        es = tuple(entries)
        for e in es:
            if not isinstance(e, int) or isinstance(e, bool):
                raise TypeError(f"integer entry expected, got {e!r}")
        if len(es) != rows * cols:
            raise ValueError(
                f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(es)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", es)

    @staticmethod
    def zeros(rows: int, cols: int) -> IntegerMatrix:
        return IntegerMatrix(rows, cols, (0,) * (rows * cols))

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]]) -> IntegerMatrix:
        """Build from a non-empty list of equal-length rows."""
        if not rows:
            raise ValueError("from_rows needs at least one row; use zeros() for empty shapes")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return IntegerMatrix(len(rows), ncols, [e for r in rows for e in r])

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> IntegerMatrix:
        return IntegerMatrix(
            self.cols,
            self.rows,
            [self.entry(i, j) for j in range(self.cols) for i in range(self.rows)],
        )

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                out.append(
                    sum(self.entry(i, k) * other.entry(k, j) for k in range(self.cols))
                )
        return IntegerMatrix(self.rows, other.cols, out)

    def entrywise_product(self, other: IntegerMatrix) -> IntegerMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("entrywise product needs equal shapes")
        return IntegerMatrix(
            self.rows, self.cols, [a * b for a, b in zip(self.entries, other.entries)]
        )


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithNormalForm:
    """Invariant factors (positive, each dividing the next) and the rank."""

    factors: tuple[int, ...]
    rank: int

    def __post_init__(self) -> None:
        for a, b in zip(self.factors, self.factors[1:]):
            if b % a != 0:
                raise ValueError(f"invariant factors {self.factors} are not a divisor chain")
        if any(f <= 0 for f in self.factors):
            raise ValueError("invariant factors must be positive")
        if self.rank != len(self.factors):
            raise ValueError("rank must equal the number of invariant factors")


def _smallest_nonzero(a: list[list[int]], t: int, nrows: int, ncols: int):
    best = None
    for i in range(t, nrows):
        for j in range(t, ncols):
            v = a[i][j]
            if v != 0 and (best is None or abs(v) < abs(a[best[0]][best[1]])):
                best = (i, j)
    return best


def smith_normal_form(m: IntegerMatrix) -> SmithNormalForm:
    """Diagonalize over Z by invertible row/column operations.

    Pivots are chosen by minimal absolute value; after each pivot is
    isolated it is forced to divide every remaining entry before moving
    on, so the diagonal comes out as a divisor chain.
    """
    a = m.to_rows()
    nrows, ncols = m.rows, m.cols
    factors: list[int] = []
    t = 0
    while t < min(nrows, ncols):
        pivot = _smallest_nonzero(a, t, nrows, ncols)
        if pivot is None:
            break
        pi, pj = pivot
        a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for row in a:
                row[t], row[pj] = row[pj], row[t]
        while True:
            if a[t][t] < 0:
                a[t] = [-x for x in a[t]]
            # clear the column below the pivot; a surviving remainder is
            # strictly smaller than the pivot, promote it and start over
            restart = False
            for i in range(t + 1, nrows):
                if a[i][t] == 0:
                    continue
                q = a[i][t] // a[t][t]
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    a[t], a[i] = a[i], a[t]
                    restart = True
                    break
            if restart:
                continue
            for j in range(t + 1, ncols):
                if a[t][j] == 0:
                    continue
                q = a[t][j] // a[t][t]
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                    restart = True
                    break
            if restart:
                continue
            # cross is clear; force divisibility of the remaining block
            offender = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if a[i][j] % a[t][t] != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[offender])]
        factors.append(abs(a[t][t]))
        t += 1
    return SmithNormalForm(tuple(factors), len(factors))


# ---------------------------------------------------------------------------
# chain complexes and homology


@dataclass(frozen=True, init=False)
class IntegerChainComplex:
    """Ranks per degree plus boundaries d_1..d_top, validated on build."""

    ranks: tuple[int, ...]
    boundaries: tuple[IntegerMatrix, ...]

    def __init__(
        self, ranks: Iterable[int], boundaries: Iterable[IntegerMatrix] = ()
    ) -> None:
        rs = tuple(ranks)
        bs = tuple(boundaries)
        if not rs:
            raise ValueError("a chain complex needs at least degree 0")
        if any(not isinstance(r, int) or isinstance(r, bool) or r < 0 for r in rs):
            raise ValueError("ranks must be nonnegative integers")
        if len(bs) != len(rs) - 1:
            raise ChainComplexError(
                f"expected {len(rs) - 1} boundary matrices for top degree {len(rs) - 1}, got {len(bs)}"
            )
        for k, d in enumerate(bs, start=1):
            if (d.rows, d.cols) != (rs[k - 1], rs[k]):
                raise ChainComplexError(
                    f"d_{k} must be {rs[k - 1]}x{rs[k]}, got {d.rows}x{d.cols}"
                )
        for k in range(1, len(bs)):
            if not (bs[k - 1] @ bs[k]).is_zero():
                raise ChainComplexError(f"d_{k} ∘ d_{k + 1} != 0")
        object.__setattr__(self, "ranks", rs)
        object.__setattr__(self, "boundaries", bs)

    @property
    def top_degree(self) -> int:
        return len(self.ranks) - 1

    def rank(self, k: int) -> int:
        return self.ranks[k] if 0 <= k <= self.top_degree else 0

    def boundary_map(self, k: int) -> IntegerMatrix:
        """d_k, a zero matrix of the right shape outside 1..top."""
        if 1 <= k <= self.top_degree:
            return self.boundaries[k - 1]
        return IntegerMatrix.zeros(self.rank(k - 1), self.rank(k))

    def euler_characteristic(self) -> int:
        return sum(r if k % 2 == 0 else -r for k, r in enumerate(self.ranks))


@dataclass(frozen=True, init=False)
class AbelianGroup:
    """Z^free_rank plus cyclic torsion in invariant-factor form."""

    free_rank: int
    torsion: tuple[int, ...]

    def __init__(self, free_rank: int = 0, torsion: Iterable[int] = ()) -> None:
        ts = tuple(torsion)
        if free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        if any(t <= 1 for t in ts):
            raise ValueError("torsion orders must exceed 1")
        for a, b in zip(ts, ts[1:]):
            if b % a != 0:
                raise ValueError(f"torsion {ts} is not a divisor chain")
        object.__setattr__(self, "free_rank", free_rank)
        object.__setattr__(self, "torsion", ts)

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts: list[str] = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " x ".join(parts) if parts else "0"


TRIVIAL_GROUP = AbelianGroup()


@dataclass(frozen=True, init=False)
class HomologyProfile:
    """Homology groups per degree, trimmed so the top group is nontrivial.

    Trimming makes equality degree-by-degree equality: two profiles that
    agree in every degree compare equal no matter how many trailing
    trivial degrees either computation happened to produce.
    """

    groups: tuple[AbelianGroup, ...]

    def __init__(self, groups: Iterable[AbelianGroup] = ()) -> None:
        gs = list(groups)
        while gs and gs[-1].is_trivial():
            gs.pop()
        object.__setattr__(self, "groups", tuple(gs))

    @property
    def top_degree(self) -> int:
        return len(self.groups) - 1

    def group(self, k: int) -> AbelianGroup:
        if 0 <= k < len(self.groups):
            return self.groups[k]
        return TRIVIAL_GROUP

    def free_rank(self, k: int) -> int:
        return self.group(k).free_rank

    def torsion(self, k: int) -> tuple[int, ...]:
        return self.group(k).torsion

    def shifted(self, r: int) -> HomologyProfile:
        """The same groups moved up r degrees."""
        if r < 0:
            raise ValueError("shift must be nonnegative")
        return HomologyProfile((TRIVIAL_GROUP,) * r + self.groups)

    def total_free_rank(self) -> int:
        return sum(g.free_rank for g in self.groups)

    def poincare_polynomial(self):
        from .polyalg import IntPoly

        return IntPoly([g.free_rank for g in self.groups])

    def euler_characteristic(self) -> int:
        return sum(
            g.free_rank if k % 2 == 0 else -g.free_rank
            for k, g in enumerate(self.groups)
        )


def homology(complex: IntegerChainComplex) -> HomologyProfile:
    """Integral homology of a valid complex, degree by degree."""
    top = complex.top_degree
    snf = [smith_normal_form(complex.boundaries[k]) for k in range(top)]

    def rank_d(k: int) -> int:
        return snf[k - 1].rank if 1 <= k <= top else 0

    groups = []
    for k in range(top + 1):
        free = complex.ranks[k] - rank_d(k) - rank_d(k + 1)
        torsion = ()
        if k + 1 <= top:
            torsion = tuple(f for f in snf[k].factors if f > 1)
        groups.append(AbelianGroup(free, torsion))
    return HomologyProfile(groups)


# ---------------------------------------------------------------------------
# space catalog


@dataclass(frozen=True)
class Point:
    pass


@dataclass(frozen=True)
class Sphere:
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("sphere dimension must be >= 1")


@dataclass(frozen=True)
class RealProjective:
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("projective-space dimension must be >= 1")


@dataclass(frozen=True)
class Torus2:
    pass


@dataclass(frozen=True)
class Explicit:
    """A user-supplied complex standing in for a space."""

    complex: IntegerChainComplex


Space = Union[Point, Sphere, RealProjective, Torus2, Explicit]


def space_tag(space: Space) -> str:
    """Short display/parse tag for a space."""
    match space:
        case Point():
            return "point"
        case Sphere(n):
            return f"sphere:{n}"
        case RealProjective(n):
            return f"rp:{n}"
        case Torus2():
            return "torus2"
        case Explicit():
            return "explicit"
    raise TypeError(f"not a space: {space!r}")


def space_dim(space: Space) -> int | None:
    """Dimension of a catalog space, None for Explicit."""
    match space:
        case Point():
            return 0
        case Sphere(n):
            return n
        case RealProjective(n):
            return n
        case Torus2():
            return 2
        case Explicit():
            return None
    raise TypeError(f"not a space: {space!r}")


class OrientationCharacter(Enum):
    """Coefficient system: plain Z, or Z twisted by the canonical sign
    character of the fundamental group."""

    TRIVIAL = "orientable"
    NONTRIVIAL = "twisted"


def admits_nontrivial_character(space: Space) -> bool:
    match space:
        case Sphere(n):
            return n == 1
        case RealProjective():
            return True
        case Torus2():
            return True
    return False


def require_admissible(space: Space, character: OrientationCharacter) -> None:
    if character is OrientationCharacter.NONTRIVIAL and not admits_nontrivial_character(space):
        raise InadmissibleCharacterError(
            f"{space_tag(space)} admits no nontrivial orientation character"
        )


def catalog_complex(
    space: Space,
    character: OrientationCharacter = OrientationCharacter.TRIVIAL,
) -> IntegerChainComplex:
    """The fixed cellular model of a catalog space, possibly twisted."""
    require_admissible(space, character)
    twisted = character is OrientationCharacter.NONTRIVIAL
    match space:
        case Point():
            return IntegerChainComplex((1,), ())
        case Sphere(n):
            if n == 1:
                d1 = IntegerMatrix(1, 1, (2,)) if twisted else IntegerMatrix.zeros(1, 1)
                return IntegerChainComplex((1, 1), (d1,))
            ranks = (1,) + (0,) * (n - 1) + (1,)
            bounds = tuple(
                IntegerMatrix.zeros(ranks[k - 1], ranks[k]) for k in range(1, n + 1)
            )
            return IntegerChainComplex(ranks, bounds)
        case RealProjective(n):
            ranks = (1,) * (n + 1)
            bounds = tuple(
                IntegerMatrix(1, 1, (1 - (-1) ** k if twisted else 1 + (-1) ** k,))
                for k in range(1, n + 1)
            )
            return IntegerChainComplex(ranks, bounds)
        case Torus2():
            if twisted:
                bounds = (
                    IntegerMatrix.from_rows([[2, 0]]),
                    IntegerMatrix.from_rows([[0], [2]]),
                )
            else:
                bounds = (IntegerMatrix.zeros(1, 2), IntegerMatrix.zeros(2, 1))
            return IntegerChainComplex((1, 2, 1), bounds)
        case Explicit(cx):
            return cx
    raise TypeError(f"not a space: {space!r}")
