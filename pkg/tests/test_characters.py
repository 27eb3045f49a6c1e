"""Character tables: structure constants, eigenvector recovery, certification.

Frozen expectations come from hand derivations (S3, D4, Q8) and from the
closed-form discrete Fourier characters of cyclic groups.
"""

from __future__ import annotations

import numpy as np
import pytest

from zamen.characters import (
    CertificationError,
    DegeneracyError,
    canonical_form,
    character_table,
    class_constants,
    tensor_table,
    verify_orthogonality,
)
from zamen.groups import (
    alternating,
    conjugacy_structure,
    cyclic,
    dihedral,
    direct_product,
    quaternion_group,
    symmetric,
)

S3_TABLE = np.array(
    [
        [1.0, 1.0, 1.0],  # trivial, on classes (e, transpositions, 3-cycles)
        [1.0, -1.0, 1.0],  # sign
        [2.0, 0.0, -1.0],  # standard 2-dimensional
    ]
)


def sort_rows(values, degrees):
    """The same canonical row key the package uses, reimplemented for tests."""
    def key(p):
        return (int(degrees[p]),) + tuple(
            (-round(float(v.real), 9), -round(float(v.imag), 9)) for v in values[p]
        )

    idx = sorted(range(values.shape[0]), key=key)
    return np.asarray(values)[idx]


def brute_class_constants(group, cs):
    k = cs.num_classes
    a = np.zeros((k, k, k), dtype=np.int64)
    for kk, z in enumerate(cs.reps):
        for i in range(k):
            for j in range(k):
                a[i, j, kk] = sum(
                    1
                    for x in cs.classes[i]
                    for y in cs.classes[j]
                    if group.mul(int(x), int(y)) == int(z)
                )
    return a


def test_class_constants_s3_frozen():
    g = symmetric(3)
    cs = conjugacy_structure(g)
    a = class_constants(g, cs)
    # Transposition * transposition hitting the identity: 3 pairs.
    assert a[1, 1, 0] == 3
    # Transposition * transposition hitting a fixed 3-cycle: 3 pairs.
    assert a[1, 1, 2] == 3
    assert a[1, 1, 1] == 0
    assert np.array_equal(a, brute_class_constants(g, cs))


@pytest.mark.parametrize("builder", [lambda: dihedral(4), lambda: quaternion_group(), lambda: alternating(4)])
def test_class_constants_brute_force(builder):
    g = builder()
    cs = conjugacy_structure(g)
    assert np.array_equal(class_constants(g, cs), brute_class_constants(g, cs))


def test_class_constants_row_sums():
    # Summing a[i, j, k] over k weighted by |C_k| counts all of C_i x C_j.
    g = symmetric(4)
    cs = conjugacy_structure(g)
    a = class_constants(g, cs)
    total = (a * cs.sizes[None, None, :]).sum(axis=2)
    assert np.array_equal(total, np.outer(cs.sizes, cs.sizes))


def test_s3_character_table_frozen():
    t = character_table(symmetric(3))
    assert t.degrees.tolist() == [1, 1, 2]
    assert t.class_sizes.tolist() == [1, 3, 2]
    assert np.abs(t.values - S3_TABLE).max() < 1e-12
    assert np.abs(t.values.imag).max() < 1e-12


def test_cyclic_tables_match_fourier():
    for n in (2, 3, 5, 6, 12):
        t = character_table(cyclic(n))
        s = np.arange(n)
        dft = np.exp(2j * np.pi * np.outer(s, s) / n)
        expected = sort_rows(dft, np.ones(n, dtype=int))
        assert np.abs(t.values - expected).max() < 1e-9
        assert t.degrees.tolist() == [1] * n


def test_d4_table_frozen():
    t = character_table(dihedral(4))
    assert t.degrees.tolist() == [1, 1, 1, 1, 2]
    # Classes in least-element order: e, {r, r^3}, reflections, {r^2}, diagonal
    # reflections; sizes 1, 2, 2, 1, 2.
    assert t.class_sizes.tolist() == [1, 2, 2, 1, 2]
    two_dim = t.values[4].real
    assert two_dim.tolist() == pytest.approx([2, 0, 0, -2, 0], abs=1e-10)
    assert np.abs(t.values.imag).max() < 1e-10


def test_d4_q8_same_canonical_matrix():
    td = character_table(dihedral(4))
    tq = character_table(quaternion_group())
    vd, degd, sized = canonical_form(td)
    vq, degq, sizeq = canonical_form(tq)
    assert degd.tolist() == degq.tolist() == [1, 1, 1, 1, 2]
    assert sized.tolist() == sizeq.tolist() == [1, 1, 2, 2, 2]
    assert np.abs(vd - vq).max() < 1e-10
    expected = np.array(
        [
            [1, 1, 1, 1, 1],
            [1, 1, 1, -1, -1],
            [1, 1, -1, 1, -1],
            [1, 1, -1, -1, 1],
            [2, -2, 0, 0, 0],
        ],
        dtype=float,
    )
    assert np.abs(vd - expected).max() < 1e-10


@pytest.mark.parametrize(
    "builder",
    [
        lambda: symmetric(3),
        lambda: symmetric(4),
        lambda: alternating(4),
        lambda: dihedral(5),
        lambda: dihedral(6),
        lambda: quaternion_group(),
        lambda: cyclic(12),
        lambda: direct_product(symmetric(3), symmetric(3)),
    ],
)
def test_orthogonality_certification(builder):
    g = builder()
    t = character_table(g)
    report = verify_orthogonality(t)
    assert report.max_residual <= 1e-9
    assert (t.degrees**2).sum() == g.order
    assert not np.any(g.order % t.degrees)
    # Conjugate class symmetry chi(C^{-1}) = conj(chi(C)).
    assert np.abs(t.values[:, t.inverse_class] - np.conj(t.values)).max() <= 1e-9


def test_seed_independence():
    g = direct_product(cyclic(3), symmetric(3))
    t0 = character_table(g, seed=0)
    t1 = character_table(g, seed=12345)
    assert np.abs(t0.values - t1.values).max() <= 1e-9
    assert t0.degrees.tolist() == t1.degrees.tolist()


def test_degeneracy_retry_paths():
    g = symmetric(3)
    # An absurd collision tolerance forces every attempt to be rejected.
    with pytest.raises(DegeneracyError):
        character_table(g, collision_tol=10.0)
    # A zero certification tolerance can never be met.
    with pytest.raises(CertificationError):
        character_table(g, certification_tol=0.0)


def test_tensor_table_matches_product_group():
    a, b = symmetric(3), cyclic(4)
    ta, tb = character_table(a), character_table(b)
    tt = tensor_table(ta, tb)
    tp = character_table(direct_product(a, b))
    assert tt.order == tp.order == 24
    vt, degt, sizet = canonical_form(tt)
    vp, degp, sizep = canonical_form(tp)
    assert degt.tolist() == degp.tolist()
    assert sizet.tolist() == sizep.tolist()
    assert np.abs(vt - vp).max() < 1e-9


def test_unitary_matrix_is_unitary():
    t = character_table(symmetric(4))
    u = t.unitary_matrix
    eye = np.eye(t.num_classes)
    assert np.abs(u @ u.conj().T - eye).max() <= 1e-9
    assert np.abs(u.conj().T @ u - eye).max() <= 1e-9


def test_trivial_group():
    t = character_table(cyclic(1))
    assert t.values.tolist() == [[1.0 + 0.0j]]
    assert t.degrees.tolist() == [1]
