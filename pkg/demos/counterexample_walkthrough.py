"""Walk through the audit of the projective five-space fixture.

The fixture describes a function on RP^5 with three critical pieces: a
minimum point, a copy of RP^3 sitting at index 1 with a twisted
negative normal bundle, and a maximum point.  Counting the pieces with
ordinary integer homology produces a counting polynomial whose quotient
against the ambient Poincare polynomial goes negative, so the audit
fails.  Counting the twisted piece with its sign local system instead
makes the failure disappear.
"""

from pathlib import Path

from mbaudit import (
    check_inequalities,
    e2_consistency,
    load_document,
    mb_polynomial,
    space_tag,
)

FIXTURE = Path(__file__).resolve().parents[1] / "fixtures" / "rp5-counterexample.json"


def describe(verdict) -> str:
    if verdict.holds:
        return f"holds with Q = {verdict.quotient}"
    if hasattr(verdict, "degree"):
        return (
            f"FAILS: Q = {verdict.quotient} has a negative coefficient "
            f"in degree {verdict.degree}"
        )
    return f"FAILS: difference not divisible by 1 + t (gap {verdict.chi_gap})"


def main() -> None:
    data = load_document(FIXTURE).morse_bott()
    p = data.ambient_poincare()

    print(f"ambient: {space_tag(data.ambient)} with P_t = {p}")
    print("critical pieces:")
    for crit in data.criticals:
        print(
            f"  {space_tag(crit.space)} at index {crit.index}, "
            f"negative bundle {crit.negative_character.value}"
        )

    for mode in ("untwisted", "local"):
        mb = mb_polynomial(data, mode)
        verdict = check_inequalities(mb, p)
        print(f"\n{mode} count: MB_t = {mb}")
        print(f"  inequality {describe(verdict)}")

    report = e2_consistency(data)
    naive = e2_consistency(data, naive=True)
    print(
        f"\npage ranks: local total {report.total_free_rank} vs "
        f"ambient {report.ambient_rank}; forcing every piece untwisted "
        f"inflates the total to {naive.total_free_rank}"
    )


if __name__ == "__main__":
    main()
