"""Character tables of finite groups from class-sum structure constants.

Nothing here uses explicit irreducible representations.  The table comes out
of the classical class-algebra method: the class sums span the centre of the
group algebra, their structure constants give k commuting k x k integer
matrices, and the simultaneous eigenvectors of that family are (up to the
normalizations applied below) the columns sqrt(|C|/|G|) * chi_pi(C) of the
character table.

A diagonal similarity by sqrt(class sizes) turns each structure-constant
matrix M_i into a matrix whose transpose is the matrix of the inverse class,
so a random linear combination with conjugation-paired coefficients is
Hermitian and can be diagonalized with orthonormal eigenvectors (numpy eigh).
That keeps the recovery well conditioned without changing the spectrum.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .groups import ConjugacyStructure, FiniteGroup, conjugacy_structure

__all__ = [
    "DegeneracyError",
    "CertificationError",
    "CharacterTable",
    "OrthogonalityReport",
    "class_constants",
    "character_table",
    "verify_orthogonality",
    "tensor_table",
    "canonical_form",
]

DEFAULT_COLLISION_TOL = 1e-6
DEFAULT_CERT_TOL = 1e-9
MAX_RETRIES = 5


class DegeneracyError(RuntimeError):
    """Eigenvalues of the random class-algebra combination kept colliding."""


class CertificationError(RuntimeError):
    """A computed table failed its orthogonality certification."""


@dataclass(frozen=True)
class CharacterTable:
    """Irreducible characters evaluated on conjugacy classes.

    ``values[p, j]`` is chi_p on class j.  Rows are sorted by degree and then
    by descending lexicographic order of the (real, imag) value pairs, so the
    trivial character is always row 0 and recomputation with any seed yields
    the same table.  ``inverse_class`` is the class involution C -> C^{-1},
    carried here so consumers can pair a class with its conjugate column
    without access to the group.
    """

    group_hash: str
    order: int
    values: np.ndarray
    degrees: np.ndarray
    class_sizes: np.ndarray
    class_reps: np.ndarray
    inverse_class: np.ndarray
    residual: float

    @property
    def num_classes(self) -> int:
        return int(self.class_sizes.size)

    @property
    def normalized_values(self) -> np.ndarray:
        """chi_p(C) / d_p, the characters of the underlying hypergroup."""
        return self.values / self.degrees[:, None]

    @property
    def unitary_matrix(self) -> np.ndarray:
        """U[p, j] = sqrt(|C_j|/|G|) chi_p(C_j); unitary when the table is valid."""
        return self.values * np.sqrt(self.class_sizes / self.order)[None, :]


@dataclass(frozen=True)
class OrthogonalityReport:
    row_residual: float
    column_residual: float

    @property
    def max_residual(self) -> float:
        return max(self.row_residual, self.column_residual)

    def passed(self, tol: float = DEFAULT_CERT_TOL) -> bool:
        return self.max_residual <= tol


def class_constants(group: FiniteGroup, cs: ConjugacyStructure | None = None) -> np.ndarray:
    """Structure constants a[i, j, k] = #{(x, y) in C_i x C_j : x*y = z_k}.

    z_k is the stored representative of class k; the count is independent of
    that choice.  Cost is O(num_classes * |G|).
    """
    cs = cs or conjugacy_structure(group)
    k = cs.num_classes
    a = np.zeros((k, k, k), dtype=np.int64)
    invs = group.inverses
    if group.table is not None:
        for kk, z in enumerate(cs.reps):
            ys = group.table[invs, int(z)]
            np.add.at(a[:, :, kk], (cs.class_of, cs.class_of[ys]), 1)
    else:
        for kk, z in enumerate(cs.reps):
            for x in range(group.order):
                y = group.mul(group.inv(x), int(z))
                a[cs.class_of[x], cs.class_of[y], kk] += 1
    return a


def _paired_coefficients(rng: np.random.Generator, inverse_class: np.ndarray) -> np.ndarray:
    """Random coefficients with c[ibar] = conj(c[i]), making the combination Hermitian."""
    k = inverse_class.size
    c = np.zeros(k, dtype=np.complex128)
    for i in range(k):
        j = int(inverse_class[i])
        if i == j:
            c[i] = rng.standard_normal()
        elif i < j:
            z = rng.standard_normal() + 1j * rng.standard_normal()
            c[i] = z
            c[j] = np.conj(z)
    return c


def _measure_orthogonality(values: np.ndarray, sizes: np.ndarray, order: int) -> OrthogonalityReport:
    u = values * np.sqrt(sizes / order)[None, :]
    eye = np.eye(u.shape[0])
    row = float(np.abs(u @ u.conj().T - eye).max())
    col = float(np.abs(u.conj().T @ u - eye).max())
    return OrthogonalityReport(row_residual=row, column_residual=col)


def verify_orthogonality(table: CharacterTable) -> OrthogonalityReport:
    """Recompute the row and column orthogonality residuals of a table."""
    return _measure_orthogonality(table.values, table.class_sizes, table.order)


def _canonical_row_order(values: np.ndarray, degrees: np.ndarray) -> np.ndarray:
    def key(p: int):
        row = values[p]
        return (int(degrees[p]),) + tuple(
            (-round(float(v.real), 9), -round(float(v.imag), 9)) for v in row
        )

    return np.array(sorted(range(values.shape[0]), key=key), dtype=np.int64)


def character_table(
    group: FiniteGroup,
    cs: ConjugacyStructure | None = None,
    *,
    seed: int = 0,
    collision_tol: float = DEFAULT_COLLISION_TOL,
    certification_tol: float = DEFAULT_CERT_TOL,
    max_retries: int = MAX_RETRIES,
) -> CharacterTable:
    """Compute the full character table of ``group``.

    Retries with fresh random coefficients when eigenvalues of the sampled
    combination collide (within ``collision_tol``, scaled by the spectral
    diameter) or when certification misses ``certification_tol``; after
    ``max_retries`` failures raises DegeneracyError / CertificationError.
    """
    cs = cs or conjugacy_structure(group)
    n = group.order
    k = cs.num_classes
    a = class_constants(group, cs)
    sizes = cs.sizes.astype(np.float64)

    # mt[i] = D^{-1/2} M_i D^{1/2} with (M_i)[j, k] = a[i, j, k], D = diag(sizes).
    scale = np.sqrt(sizes[None, None, :] / sizes[None, :, None])
    mt = a.astype(np.float64) * scale

    e_class = int(cs.class_of[group.identity])
    last_error: Exception | None = None
    for attempt in range(max_retries):
        rng = np.random.default_rng([seed, attempt])
        c = _paired_coefficients(rng, cs.inverse_class)
        h = np.einsum("i,ijk->jk", c, mt)
        h = (h + h.conj().T) / 2.0  # symmetrize away fp asymmetry

        eigvals, eigvecs = np.linalg.eigh(h)
        if k > 1:
            diameter = float(eigvals[-1] - eigvals[0])
            gap = float(np.diff(eigvals).min())
            if gap < collision_tol * max(1.0, diameter):
                last_error = DegeneracyError(
                    f"eigenvalue gap {gap:.3e} below tolerance on attempt {attempt + 1}"
                )
                continue

        # Columns of eigvecs are (up to phase) sqrt(|C|/|G|) chi(C).
        rows = np.empty((k, k), dtype=np.complex128)
        degrees = np.empty(k, dtype=np.int64)
        ok = True
        for p in range(k):
            v = eigvecs[:, p]
            pivot = v[e_class]
            v = v * (np.conj(pivot) / abs(pivot))
            d = float(np.sqrt(n) * v[e_class].real)
            degrees[p] = int(round(d))
            if degrees[p] < 1 or abs(d - degrees[p]) > 1e-6 or n % degrees[p]:
                ok = False
                break
            rows[p] = np.sqrt(n / sizes) * v
        if not ok or int((degrees**2).sum()) != n:
            last_error = CertificationError(
                f"degree recovery failed on attempt {attempt + 1}"
            )
            continue

        order_idx = _canonical_row_order(rows, degrees)
        rows = rows[order_idx]
        degrees = degrees[order_idx]

        report = _measure_orthogonality(rows, sizes, n)
        conj_residual = float(np.abs(rows[:, cs.inverse_class] - np.conj(rows)).max())
        if report.max_residual > certification_tol or conj_residual > certification_tol:
            last_error = CertificationError(
                f"certification residual {max(report.max_residual, conj_residual):.3e} "
                f"above {certification_tol:.1e} on attempt {attempt + 1}"
            )
            continue

        return CharacterTable(
            group_hash=group.content_hash,
            order=n,
            values=rows,
            degrees=degrees,
            class_sizes=cs.sizes.copy(),
            class_reps=cs.reps.copy(),
            inverse_class=cs.inverse_class.copy(),
            residual=max(report.max_residual, conj_residual),
        )

    assert last_error is not None
    raise last_error


def canonical_form(table: CharacterTable) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Group-independent canonical view: (values, degrees, class_sizes).

    The in-memory table keeps classes in the group's least-element order,
    which is the order class functions use.  For comparing tables across
    groups (or exporting), rows and columns are re-sorted jointly: rows by
    (degree, descending value tuple), columns by (class size, descending
    value tuple), alternating until the pair of orders is stable.  Groups
    with equal character tables, such as the two nonabelian groups of
    order 8, canonicalize to the same value matrix.
    """
    values = table.values.copy()
    degrees = table.degrees.copy()
    sizes = table.class_sizes.copy()
    k = table.num_classes

    def row_key(values_now: np.ndarray):
        def key(p: int):
            return (int(degrees_now[p]),) + tuple(
                (-round(float(v.real), 9), -round(float(v.imag), 9)) for v in values_now[p]
            )

        return key

    degrees_now = degrees
    sizes_now = sizes
    for _ in range(20):
        rows = sorted(range(k), key=row_key(values))
        values = values[rows]
        degrees_now = degrees_now[rows]

        def col_key(j: int):
            return (int(sizes_now[j]),) + tuple(
                (-round(float(v.real), 9), -round(float(v.imag), 9)) for v in values[:, j]
            )

        cols = sorted(range(k), key=col_key)
        values = values[:, cols]
        sizes_now = sizes_now[cols]
        if rows == list(range(k)) and cols == list(range(k)):
            break
    return values, degrees_now, sizes_now


def tensor_table(t1: CharacterTable, t2: CharacterTable) -> CharacterTable:
    """Character table of the direct product, as the tensor of two tables.

    Classes and irreducibles of G x H are pairs, so values, degrees and class
    sizes are all Kronecker products.  Class representatives are not
    meaningful for a synthetic table and are set to -1.
    """
    values = np.kron(t1.values, t2.values)
    degrees = np.kron(t1.degrees, t2.degrees)
    sizes = np.kron(t1.class_sizes, t2.class_sizes)
    k2 = t2.num_classes
    inverse_class = (t1.inverse_class[:, None] * k2 + t2.inverse_class[None, :]).reshape(-1)
    order_idx = _canonical_row_order(values, degrees)
    values = values[order_idx]
    degrees = degrees[order_idx]
    digest = hashlib.sha256(f"tensor:{t1.group_hash}:{t2.group_hash}".encode()).hexdigest()
    return CharacterTable(
        group_hash=digest,
        order=t1.order * t2.order,
        values=values,
        degrees=degrees,
        class_sizes=sizes,
        class_reps=np.full(values.shape[1], -1, dtype=np.int64),
        inverse_class=inverse_class,
        residual=max(t1.residual, t2.residual),
    )
