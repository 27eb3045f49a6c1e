"""Finite groups on integer indices, with the structure needed downstream.

Elements of a group of order n are the indices 0..n-1.  Multiplication is
realized either as a dense Cayley table (always built for order <= 4096) or,
for larger closures, by composing the stored permutation representatives.
Everything downstream (conjugacy data, characters, class functions) works in
terms of these indices, so construction order fixes all later orderings.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

__all__ = [
    "ValidationError",
    "SizeLimitError",
    "FiniteGroup",
    "ConjugacyStructure",
    "Quotient",
    "parse_permutation",
    "from_permutation_generators",
    "from_cayley_table",
    "cyclic",
    "dihedral",
    "symmetric",
    "alternating",
    "quaternion_group",
    "direct_product",
    "semidirect_product",
    "conjugacy_structure",
    "center",
    "quotient_group",
]

# Dense tables above this order would dominate memory; fall back to
# permutation composition there.
TABLE_ORDER_CAP = 4096

# Exhaustive associativity checking is cubic; above this order sample triples.
EXHAUSTIVE_ASSOC_CAP = 512
ASSOC_SAMPLE_TRIPLES = 10_000

DEFAULT_CLOSURE_CAP = 20_000


class ValidationError(ValueError):
    """Raised when input data fails a structural group axiom."""


class SizeLimitError(RuntimeError):
    """Raised when a construction exceeds its configured element cap."""


def parse_permutation(spec: Sequence[int] | str, degree: int | None = None) -> np.ndarray:
    """Parse a permutation given in one-line or cycle notation.

    One-line notation is a sequence of images on points 0..d-1.  Cycle
    notation is a string such as ``"(1 2)(3 4 5)"`` on points 1..d (the usual
    textbook convention); points not mentioned are fixed and ``degree`` sets
    the total number of points when it exceeds the largest mentioned one.
    """
    if isinstance(spec, str):
        text = spec.replace(",", " ")
        if text.count("(") != text.count(")"):
            raise ValidationError(f"unbalanced parentheses in cycle notation: {spec!r}")
        cycles: list[list[int]] = []
        for chunk in text.split("(")[1:]:
            body = chunk.split(")")[0].strip()
            if not body:
                continue
            try:
                points = [int(tok) - 1 for tok in body.split()]
            except ValueError:
                raise ValidationError(f"non-integer point in cycle notation: {spec!r}") from None
            if any(p < 0 for p in points):
                raise ValidationError(f"cycle points must be >= 1: {spec!r}")
            cycles.append(points)
        top = max((p for cyc in cycles for p in cyc), default=-1) + 1
        d = max(top, degree or 0)
        perm = np.arange(d, dtype=np.int64)
        for cyc in cycles:
            if len(set(cyc)) != len(cyc):
                raise ValidationError(f"repeated point inside a cycle: {spec!r}")
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                perm[a] = b
        return perm

    perm = np.asarray(list(spec), dtype=np.int64)
    if degree is not None and perm.size != degree:
        raise ValidationError(f"one-line permutation has {perm.size} entries, expected {degree}")
    if perm.size == 0 or sorted(perm.tolist()) != list(range(perm.size)):
        raise ValidationError(f"not a permutation of 0..{perm.size - 1}: {spec!r}")
    return perm


def _hash_table(order: int, table: np.ndarray) -> str:
    digest = hashlib.sha256()
    digest.update(b"group-v1")
    digest.update(int(order).to_bytes(8, "little"))
    digest.update(np.ascontiguousarray(table, dtype=np.int64).tobytes())
    return digest.hexdigest()


@dataclass
class FiniteGroup:
    """A finite group on indices 0..order-1.

    ``table`` is the Cayley table (``table[a, b] = a*b``) when the order is
    small enough to store one; otherwise ``perms`` holds one permutation per
    element and products are composed on demand.
    """

    order: int
    identity: int
    label: str
    table: np.ndarray | None = None
    perms: np.ndarray | None = None
    _index: dict[bytes, int] | None = field(default=None, repr=False)
    _inv: np.ndarray | None = field(default=None, repr=False)
    _hash: str | None = field(default=None, repr=False)

    def mul(self, a: int, b: int) -> int:
        if self.table is not None:
            return int(self.table[a, b])
        assert self.perms is not None and self._index is not None
        return self._index[self.perms[a][self.perms[b]].tobytes()]

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    @property
    def inverses(self) -> np.ndarray:
        if self._inv is None:
            if self.table is not None:
                self._inv = np.argmax(self.table == self.identity, axis=1).astype(np.int64)
            else:
                assert self.perms is not None and self._index is not None
                inv = np.empty(self.order, dtype=np.int64)
                for a in range(self.order):
                    inv[a] = self._index[np.argsort(self.perms[a]).tobytes()]
                self._inv = inv
        return self._inv

    @property
    def is_abelian(self) -> bool:
        if self.table is not None:
            return bool(np.array_equal(self.table, self.table.T))
        return all(
            self.mul(a, b) == self.mul(b, a)
            for a in range(self.order)
            for b in range(a + 1, self.order)
        )

    @property
    def content_hash(self) -> str:
        """sha256 of the multiplication structure; labels do not enter."""
        if self._hash is None:
            if self.table is not None:
                self._hash = _hash_table(self.order, self.table)
            else:
                assert self.perms is not None
                self._hash = _hash_table(self.order, self.perms)
        return self._hash

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return f"FiniteGroup({self.label!r}, order={self.order})"


def _validate_table(table: np.ndarray, rng: np.random.Generator) -> int:
    """Check the group axioms for a candidate Cayley table; return identity."""
    n = table.shape[0]
    if table.shape != (n, n):
        raise ValidationError(f"Cayley table must be square, got shape {table.shape}")
    if table.min() < 0 or table.max() >= n:
        raise ValidationError("Cayley table entries must be indices into 0..n-1")

    # Latin square: every row and column is a permutation.
    expect = np.arange(n)
    for axis, word in ((1, "row"), (0, "column")):
        sorted_lines = np.sort(table, axis=axis)
        bad = np.nonzero((sorted_lines != (expect[None, :] if axis == 1 else expect[:, None])).any(axis=axis))[0]
        if bad.size:
            raise ValidationError(f"{word} {bad[0]} of the Cayley table is not a permutation")

    two_sided = np.nonzero(
        (table == expect[None, :]).all(axis=1) & (table.T == expect[None, :]).all(axis=1)
    )[0]
    if two_sided.size != 1:
        raise ValidationError(f"expected exactly one two-sided identity, found {two_sided.size}")
    identity = int(two_sided[0])

    if n <= EXHAUSTIVE_ASSOC_CAP:
        # (a*b)*c == a*(b*c) for all triples, row chunked to bound memory.
        for a in range(n):
            left = table[table[a], :]
            right = table[a][table]
            if not np.array_equal(left, right):
                b, c = np.argwhere(left != right)[0]
                raise ValidationError(
                    f"associativity fails at triple ({a}, {int(b)}, {int(c)}): "
                    f"({a}*{int(b)})*{int(c)} = {int(left[b, c])} but "
                    f"{a}*({int(b)}*{int(c)}) = {int(right[b, c])}"
                )
    else:
        abc = rng.integers(0, n, size=(ASSOC_SAMPLE_TRIPLES, 3))
        left = table[table[abc[:, 0], abc[:, 1]], abc[:, 2]]
        right = table[abc[:, 0], table[abc[:, 1], abc[:, 2]]]
        bad = np.nonzero(left != right)[0]
        if bad.size:
            a, b, c = (int(x) for x in abc[bad[0]])
            raise ValidationError(f"associativity fails at sampled triple ({a}, {b}, {c})")
    return identity


def from_cayley_table(table: Iterable[Iterable[int]], label: str = "G", *, seed: int = 0) -> FiniteGroup:
    """Build a group from an explicit Cayley table, validating the axioms.

    Validation is exhaustive for order <= 512 and falls back to 10^4 sampled
    triples above that (rows/columns and the identity are always checked in
    full).
    """
    arr = np.asarray([list(row) for row in table], dtype=np.int64)
    identity = _validate_table(arr, np.random.default_rng(seed))
    return FiniteGroup(order=arr.shape[0], identity=identity, label=label, table=arr)


def _table_from_perms(perms: np.ndarray, index: dict[bytes, int]) -> np.ndarray:
    n = perms.shape[0]
    table = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        composed = perms[a][perms[:, :]]  # (n, d): row b is perms[a] o perms[b]
        for b in range(n):
            table[a, b] = index[composed[b].tobytes()]
    return table


def from_permutation_generators(
    generators: Sequence[Sequence[int] | str],
    label: str = "G",
    *,
    max_order: int = DEFAULT_CLOSURE_CAP,
) -> FiniteGroup:
    """Close a set of permutations under composition, breadth first.

    The element order is the BFS discovery order (identity first, then
    products ``word * generator`` in word-then-generator order), which makes
    every downstream ordering reproducible.  Raises SizeLimitError when the
    closure exceeds ``max_order``.
    """
    if not generators:
        raise ValidationError("at least one generator is required")
    parsed = [parse_permutation(g) for g in generators]
    degree = max(p.size for p in parsed)
    gens = [np.concatenate([p, np.arange(p.size, degree)]) if p.size < degree else p for p in parsed]

    ident = np.arange(degree, dtype=np.int64)
    elements: list[np.ndarray] = [ident]
    index: dict[bytes, int] = {ident.tobytes(): 0}
    frontier = [0]
    while frontier:
        next_frontier: list[int] = []
        for w in frontier:
            for g in gens:
                p = elements[w][g]
                key = p.tobytes()
                if key not in index:
                    if len(elements) >= max_order:
                        raise SizeLimitError(
                            f"closure of {label!r} exceeded the cap of {max_order} elements"
                        )
                    index[key] = len(elements)
                    elements.append(p)
                    next_frontier.append(index[key])
        frontier = next_frontier

    perms = np.array(elements, dtype=np.int64)
    n = perms.shape[0]
    if n <= TABLE_ORDER_CAP:
        table = _table_from_perms(perms, index)
        return FiniteGroup(order=n, identity=0, label=label, table=table, perms=perms, _index=index)
    return FiniteGroup(order=n, identity=0, label=label, perms=perms, _index=index)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValidationError(f"cyclic group order must be >= 1, got {n}")
    table = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    return FiniteGroup(order=n, identity=0, label=f"Z{n}", table=table.astype(np.int64))


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of the n-gon, order 2n."""
    if n < 3:
        raise ValidationError(f"dihedral index must be >= 3, got {n}")
    rot = np.roll(np.arange(n), -1)
    refl = (-np.arange(n)) % n
    return from_permutation_generators([rot, refl], label=f"D{n}")


def symmetric(n: int) -> FiniteGroup:
    if n < 1:
        raise ValidationError(f"symmetric group degree must be >= 1, got {n}")
    if n == 1:
        return from_cayley_table([[0]], label="S1")
    swap = np.arange(n)
    swap[[0, 1]] = [1, 0]
    cyc = np.roll(np.arange(n), -1)
    return from_permutation_generators([swap, cyc], label=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if n < 3:
        raise ValidationError(f"alternating group degree must be >= 3, got {n}")
    three = np.arange(n)
    three[[0, 1, 2]] = [1, 2, 0]
    if n % 2:
        second = np.roll(np.arange(n), -1)  # odd n: the n-cycle is even
    else:
        second = np.concatenate([[0], np.roll(np.arange(1, n), -1)])
    return from_permutation_generators([three, second], label=f"A{n}")


def quaternion_group() -> FiniteGroup:
    """The quaternion group Q8 = {1, -1, i, -i, j, -j, k, -k}."""
    # Encode q = (sign, axis) with axis 0..3 for 1, i, j, k.
    axis_mul = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }
    idx = {(1, 0): 0, (-1, 0): 1, (1, 1): 2, (-1, 1): 3, (1, 2): 4, (-1, 2): 5, (1, 3): 6, (-1, 3): 7}
    elems = list(idx)
    table = np.empty((8, 8), dtype=np.int64)
    for a, (sa, xa) in enumerate(elems):
        for b, (sb, xb) in enumerate(elems):
            sign, axis = axis_mul[(xa, xb)]
            table[a, b] = idx[(sa * sb * sign, axis)]
    return from_cayley_table(table, label="Q8")


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Direct product with index packing (a, b) -> a*|H| + b."""
    if g.table is None or h.table is None:
        raise ValidationError("direct products require table-backed factors")
    m = h.order
    table = (g.table[:, None, :, None] * m + h.table[None, :, None, :]).reshape(
        g.order * m, g.order * m
    )
    return FiniteGroup(
        order=g.order * m,
        identity=g.identity * m + h.identity,
        label=f"{g.label}x{h.label}",
        table=table.astype(np.int64),
    )


def semidirect_product(
    normal: FiniteGroup,
    acting: FiniteGroup,
    action: Sequence[Sequence[int]] | Callable[[int], Sequence[int]],
    label: str | None = None,
) -> FiniteGroup:
    """Semidirect product N x| H for a right action (n, h)(n', h') = (n*h(n'), hh').

    ``action`` gives, for each element h of ``acting``, the permutation of
    N's indices implementing the automorphism n -> h(n).  Both the
    automorphism property of each map and the homomorphism property of the
    assignment are verified.
    """
    if normal.table is None or acting.table is None:
        raise ValidationError("semidirect products require table-backed factors")
    if callable(action):
        maps = [np.asarray(action(h), dtype=np.int64) for h in range(acting.order)]
    else:
        maps = [np.asarray(a, dtype=np.int64) for a in action]
    if len(maps) != acting.order:
        raise ValidationError(f"action must supply {acting.order} maps, got {len(maps)}")

    tn = normal.table
    for h, phi in enumerate(maps):
        if sorted(phi.tolist()) != list(range(normal.order)):
            raise ValidationError(f"action of element {h} is not a permutation of the normal factor")
        if not np.array_equal(phi[tn], tn[np.ix_(phi, phi)]):
            raise ValidationError(f"action of element {h} is not an automorphism")
    if not np.array_equal(maps[acting.identity], np.arange(normal.order)):
        raise ValidationError("action of the identity must be the identity map")
    for h1 in range(acting.order):
        for h2 in range(acting.order):
            if not np.array_equal(maps[acting.table[h1, h2]], maps[h1][maps[h2]]):
                raise ValidationError(
                    f"action is not a homomorphism: maps[{h1}*{h2}] != maps[{h1}] o maps[{h2}]"
                )

    m = acting.order
    n = normal.order
    table = np.empty((n * m, n * m), dtype=np.int64)
    # Index packing (a, h) -> a*m + h; product rule (a, h)(b, k) = (a*phi_h(b), hk).
    for a in range(n):
        for h in range(m):
            row = tn[a, maps[h]][:, None] * m + acting.table[h][None, :]
            table[a * m + h, :] = row.reshape(-1)
    lab = label or f"{normal.label}:{acting.label}"
    return from_cayley_table(table, label=lab)


def conjugacy_structure(group: FiniteGroup) -> ConjugacyStructure:
    """Partition the group into conjugacy classes, ordered by least element."""
    n = group.order
    class_of = np.full(n, -1, dtype=np.int64)
    classes: list[np.ndarray] = []
    if group.table is not None:
        table = group.table
        invs = group.inverses
        for s in range(n):
            if class_of[s] >= 0:
                continue
            orbit = np.unique(table[table[:, s], invs])
            class_of[orbit] = len(classes)
            classes.append(orbit)
    else:
        for s in range(n):
            if class_of[s] >= 0:
                continue
            orbit = sorted({group.mul(group.mul(t, s), group.inv(t)) for t in range(n)})
            arr = np.asarray(orbit, dtype=np.int64)
            class_of[arr] = len(classes)
            classes.append(arr)

    sizes = np.array([c.size for c in classes], dtype=np.int64)
    reps = np.array([int(c[0]) for c in classes], dtype=np.int64)
    if sizes.sum() != n:
        raise ValidationError("conjugacy classes do not partition the group")
    if np.any(n % sizes):
        raise ValidationError("a conjugacy class size fails to divide the group order")

    inverse_class = np.array([class_of[group.inv(int(r))] for r in reps], dtype=np.int64)
    if not np.array_equal(inverse_class[inverse_class], np.arange(len(classes))):
        raise ValidationError("inverse-class map is not an involution")
    return ConjugacyStructure(
        group_hash=group.content_hash,
        class_of=class_of,
        classes=tuple(classes),
        sizes=sizes,
        reps=reps,
        inverse_class=inverse_class,
    )


@dataclass(frozen=True)
class ConjugacyStructure:
    """Conjugacy classes of a group, in least-element order."""

    group_hash: str
    class_of: np.ndarray
    classes: tuple[np.ndarray, ...]
    sizes: np.ndarray
    reps: np.ndarray
    inverse_class: np.ndarray

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @property
    def order(self) -> int:
        return int(self.sizes.sum())


def center(group: FiniteGroup) -> np.ndarray:
    """Indices of the central elements, ascending."""
    if group.table is not None:
        return np.nonzero((group.table == group.table.T).all(axis=1))[0].astype(np.int64)
    out = [
        z
        for z in range(group.order)
        if all(group.mul(z, x) == group.mul(x, z) for x in range(group.order))
    ]
    return np.asarray(out, dtype=np.int64)


@dataclass(frozen=True)
class Quotient:
    """A quotient group together with the projection G -> G/N."""

    group: FiniteGroup
    projection: np.ndarray
    subgroup: np.ndarray


def quotient_group(group: FiniteGroup, subgroup: Iterable[int]) -> Quotient:
    """Form G/N for a normal subgroup N given by element indices.

    Raises ValidationError if the indices are not a subgroup, or name the
    violating conjugation when the subgroup is not normal.
    """
    if group.table is None:
        raise ValidationError("quotients require a table-backed group")
    nset = np.unique(np.asarray(list(subgroup), dtype=np.int64))
    if nset.size == 0 or group.identity not in nset:
        raise ValidationError("subgroup must contain the identity")
    inside = np.zeros(group.order, dtype=bool)
    inside[nset] = True
    prods = group.table[np.ix_(nset, nset)]
    if not inside[prods].all():
        a, b = np.argwhere(~inside[prods])[0]
        raise ValidationError(
            f"not a subgroup: {int(nset[a])}*{int(nset[b])} = {int(prods[a, b])} falls outside"
        )
    invs = group.inverses
    for g in range(group.order):
        conj = group.table[group.table[g, nset], invs[g]]
        if not inside[conj].all():
            bad = int(nset[int(np.nonzero(~inside[conj])[0][0])])
            raise ValidationError(
                f"not normal: conjugating {bad} by {g} gives {int(group.table[group.table[g, bad], invs[g]])}, "
                f"which is outside the subgroup"
            )

    coset_of = np.full(group.order, -1, dtype=np.int64)
    reps: list[int] = []
    for s in range(group.order):
        if coset_of[s] >= 0:
            continue
        coset = group.table[s, nset]
        coset_of[coset] = len(reps)
        reps.append(s)

    k = len(reps)
    table = np.empty((k, k), dtype=np.int64)
    for i, r in enumerate(reps):
        table[i, :] = coset_of[group.table[r, reps]]
    quo = from_cayley_table(table, label=f"{group.label}/N{nset.size}")
    return Quotient(group=quo, projection=coset_of, subgroup=nset)
