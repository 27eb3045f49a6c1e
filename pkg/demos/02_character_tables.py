"""Character tables from multiplication alone, and a pair of lookalikes.

The table is computed by simultaneously diagonalizing the class-sum
matrices that the Cayley table determines, so nothing about the group
beyond its multiplication is used.  The dihedral group of order 8 and the
quaternion group are non-isomorphic but share a character table: after
putting rows and columns into a canonical order the two value matrices
agree entry for entry.
"""

import numpy as np

from zamen import canonical_form, character_table, verify_orthogonality
from zamen.groups import dihedral, quaternion_group, symmetric


def show_table(label, table):
    print(f"{label}: degrees {table.degrees.tolist()}, class sizes {table.class_sizes.tolist()}")
    for d, row in zip(table.degrees, table.values):
        cells = " ".join(
            f"{v.real:6.2f}" if abs(v.imag) < 1e-12 else f"{v:.2f}" for v in row
        )
        print(f"  d={int(d)}:  {cells}")
    residual = verify_orthogonality(table).max_residual
    print(f"  orthogonality residual: {residual:.2e}")
    print()


def main():
    show_table("S3", character_table(symmetric(3)))

    d4 = character_table(dihedral(4))
    q8 = character_table(quaternion_group())
    show_table("D4 (dihedral of order 8)", d4)
    show_table("Q8 (quaternions)", q8)

    d4_values, d4_degrees, _ = canonical_form(d4)
    q8_values, q8_degrees, _ = canonical_form(q8)
    same = np.array_equal(d4_degrees, q8_degrees) and np.allclose(
        d4_values, q8_values, atol=1e-9
    )
    print(f"canonical D4 table == canonical Q8 table: {same}")
    print("The groups are not isomorphic (D4 has 2 elements of order 4, Q8 has 6),")
    print("yet no character-table invariant can tell them apart.")


if __name__ == "__main__":
    main()
