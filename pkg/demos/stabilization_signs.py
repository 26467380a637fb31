"""Stabilize a Morse complex on the circle under both line bundles.

The fixture models a wavy height function on the circle with two minima
and two maxima.  Pulling the function back to a line bundle and adding
the fiberwise quadratic shifts every index up by the bundle rank and
multiplies each differential entry by a sign recording how the chosen
fiber orientations glue.  With the all-plus signs the homology is the
circle's, shifted.  With the Moebius signs one cancellation flips and
the answer becomes the pair homology of the band: a single Z/2.
"""

from pathlib import Path

from mbaudit import load_document, morse_homology, stabilize, thom_pair_homology

FIXTURE = Path(__file__).resolve().parents[1] / "fixtures" / "s1-moebius.json"


def table(profile, top: int) -> None:
    for k in range(top + 1):
        print(f"  H_{k} = {profile.group(k)}")


def main() -> None:
    doc = load_document(FIXTURE)
    data = doc.morse

    print("critical points of the wavy circle function:")
    for label, index in data.generators:
        print(f"  {label}: index {index}")
    print("\nMorse homology before stabilizing:")
    table(morse_homology(data), data.max_index)

    plain = stabilize(data, 1)
    print("\nstabilized by the trivial line (all signs +1):")
    table(morse_homology(plain), plain.max_index)

    twisted = stabilize(data, 1, doc.twists["moebius"])
    print("\nstabilized by the Moebius line (one sign flipped):")
    table(morse_homology(twisted), twisted.max_index)

    pair = thom_pair_homology(doc.bundle)
    agree = morse_homology(twisted) == pair
    print(f"\nmatches the band's disc/sphere pair homology: {'yes' if agree else 'no'}")


if __name__ == "__main__":
    main()
