"""An exact identity measure on the infinite compact group T x| Z2.

The circle acted on by inversion has central measures that no finite group
exhibits: four weighted atoms at the two central points (cross weight -2)
plus arc length on the diagonal and anti-diagonal circles pair with every
tensor square of normalized characters to give exactly the Kronecker
delta.  Everything here runs in exact rational arithmetic; there is no
tolerance to tune.
"""

from fractions import Fraction

from zamen.tz2 import (
    Character,
    atom_pairing,
    measure_coefficient,
    torus_pairing,
    verify_identity_measure,
)


def main():
    one = Character.trivial()
    sgn = Character.sign()
    ind2 = Character.induced(2)

    print("pairings against the two pieces of the measure:")
    for left, right in ((one, one), (one, sgn), (sgn, sgn), (ind2, ind2)):
        atoms = atom_pairing(left, right)
        torus = torus_pairing(left, right)
        total = measure_coefficient(left, right)
        print(
            f"  ({left.label}, {right.label}): atoms {str(atoms):>3s} "
            f"+ circles {str(torus):>2s} = {total}"
        )
    print()

    report = verify_identity_measure(max_mode=20)
    print(f"all {report.pairs_checked} pairs up to mode 20: "
          f"{'exact Kronecker delta' if report.passed else 'FAILED'}")
    print()

    mutated = verify_identity_measure(max_mode=20, cross_weight=Fraction(-1))
    print(f"with cross weight -1 instead of -2: {len(mutated.failures)} pairs fail:")
    for left, right, got, want in mutated.failures:
        print(f"  ({left}, {right}): got {got}, expected {want}")


if __name__ == "__main__":
    main()
