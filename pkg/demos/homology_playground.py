"""Tour the exact integer homology machinery on small examples.

Shows Smith normal form on a concrete matrix, integer homology of the
catalog spaces under both coefficient systems, and a hand-built chain
complex fed through the same pipeline.
"""

from mbaudit import (
    IntegerChainComplex,
    IntegerMatrix,
    OrientationCharacter,
    RealProjective,
    Sphere,
    Torus2,
    catalog_complex,
    homology,
    smith_normal_form,
    space_tag,
)


def show_space(space, character=OrientationCharacter.TRIVIAL) -> None:
    cx = catalog_complex(space, character)
    profile = homology(cx)
    label = space_tag(space)
    if character is OrientationCharacter.NONTRIVIAL:
        label += " (twisted)"
    groups = ", ".join(str(profile.group(k)) for k in range(cx.top_degree + 1))
    print(f"  {label:18} {groups}")


def main() -> None:
    m = IntegerMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
    snf = smith_normal_form(m)
    print(f"invariant factors of a 3x3 sample: {snf.factors} (rank {snf.rank})")

    print("\ncatalog homology, degrees 0..top:")
    show_space(Sphere(2))
    show_space(Torus2())
    show_space(Torus2(), OrientationCharacter.NONTRIVIAL)
    for n in range(1, 5):
        show_space(RealProjective(n))

    print("\na hand-built complex: one 0-cell, two 1-cells, one 2-cell")
    cx = IntegerChainComplex(
        (1, 2, 1),
        (IntegerMatrix(1, 2, [0, 0]), IntegerMatrix(2, 1, [2, 0])),
    )
    profile = homology(cx)
    for k in range(cx.top_degree + 1):
        print(f"  H_{k} = {profile.group(k)}")
    print(f"  Euler characteristic: {cx.euler_characteristic()}")


if __name__ == "__main__":
    main()
