"""The centre of a group algebra as a commutative Banach algebra.

Class functions under normalized convolution form a commutative algebra
whose Gelfand transform is evaluation of normalized characters.  The
algebra has a unique diagonal (a two-variable expansion of the identity);
its coefficient matrix drives everything: the amenability constant is the
weighted absolute sum of that matrix.
"""

import numpy as np

from zamen import (
    ClassFunction,
    amenability_constant,
    character_table,
    convolve,
    convolve_direct,
    diagonal,
    gelfand_transform,
    inverse_gelfand,
    verify_diagonal,
)
from zamen.groups import conjugacy_structure, symmetric


def main():
    group = symmetric(4)
    cs = conjugacy_structure(group)
    table = character_table(group, cs)
    rng = np.random.default_rng(7)

    f = ClassFunction(cs.group_hash, rng.standard_normal(cs.num_classes))
    g = ClassFunction(cs.group_hash, rng.standard_normal(cs.num_classes))

    spectral = convolve(f, g, table)
    direct = convolve_direct(f, g, group, cs)
    print("S4 convolution, spectral vs elementwise sum over the group:")
    print(f"  max difference: {np.abs(spectral.coeffs - direct.coeffs).max():.2e}")

    back = inverse_gelfand(gelfand_transform(f, table), table)
    print(f"  transform roundtrip error: {np.abs(back.coeffs - f.coeffs).max():.2e}")

    dc = diagonal(table)
    report = verify_diagonal(table, dc)
    print(f"  diagonal is a module map + unit: residual {report.max_residual:.2e}")

    am = amenability_constant(table, dc)
    print(f"  AM(ZL1(S4)) = {am.value:.10f}" + (f" = {am.rational}" if am.rational else ""))


if __name__ == "__main__":
    main()
