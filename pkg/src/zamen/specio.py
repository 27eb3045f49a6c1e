"""Versioned JSON formats: group specs, character tables, experiment specs.

Three document kinds, all carrying a ``format`` name and integer ``version``:

- group specs (``zamen-group``) describe a finite group by permutation
  generators, an explicit Cayley table, a direct product of specs, or a
  semidirect product of specs;
- character-table documents (``zamen-chartable``) serialize a computed
  table twice: once aligned to the group's class order for lossless
  reloading, and once in joint canonical row/column order so tables of
  isocharacteristic groups compare byte for byte;
- experiment specs (``zamen-experiment``) name a hypergroup model, a
  coefficient scheme, the truncation levels, and quadrature settings.

Values are rounded to 12 decimal places on export with negative zero
normalized, so re-serializing a loaded document is byte-stable.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

import numpy as np

from .characters import CharacterTable, canonical_form
from .groups import (
    ConjugacyStructure,
    FiniteGroup,
    direct_product,
    from_cayley_table,
    from_permutation_generators,
    parse_permutation,
    semidirect_product,
)

__all__ = [
    "SpecError",
    "GROUP_FORMAT",
    "CHARTABLE_FORMAT",
    "EXPERIMENT_FORMAT",
    "FORMAT_VERSION",
    "stable_json",
    "sha256_hex",
    "load_group_spec",
    "group_from_json",
    "character_table_payload",
    "load_character_table",
    "load_experiment_spec",
]

GROUP_FORMAT = "zamen-group"
CHARTABLE_FORMAT = "zamen-chartable"
EXPERIMENT_FORMAT = "zamen-experiment"
FORMAT_VERSION = 1


class SpecError(ValueError):
    """A JSON document does not satisfy its declared format."""


def stable_json(obj: Any) -> str:
    """Deterministic JSON text: sorted keys, no whitespace variance."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def sha256_hex(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()


def _check_header(payload: dict, expected_format: str) -> None:
    if not isinstance(payload, dict):
        raise SpecError(f"expected a JSON object, got {type(payload).__name__}")
    fmt = payload.get("format")
    if fmt != expected_format:
        raise SpecError(f"expected format {expected_format!r}, got {fmt!r}")
    version = payload.get("version")
    if version != FORMAT_VERSION:
        raise SpecError(f"unsupported {expected_format} version {version!r}")


def _build_group(spec: dict, depth: int = 0) -> FiniteGroup:
    if depth > 8:
        raise SpecError("group spec nesting exceeds depth 8")
    if not isinstance(spec, dict):
        raise SpecError("group spec entries must be JSON objects")
    kind = spec.get("kind")
    label = spec.get("label")
    if kind == "perm":
        degree = spec.get("degree")
        generators = spec.get("generators")
        if not isinstance(degree, int) or degree < 1:
            raise SpecError("perm specs need an integer degree >= 1")
        if not isinstance(generators, list) or not generators:
            raise SpecError("perm specs need a nonempty generators list")
        parsed = [parse_permutation(g, degree).tolist() for g in generators]
        return from_permutation_generators(parsed, label=label or "G")
    if kind == "cayley":
        table = spec.get("table")
        if not isinstance(table, list) or not table:
            raise SpecError("cayley specs need a nonempty table")
        return from_cayley_table(table, label=label or "G")
    if kind == "product":
        factors = spec.get("factors")
        if not isinstance(factors, list) or len(factors) < 2:
            raise SpecError("product specs need at least two factors")
        group = _build_group(factors[0], depth + 1)
        for factor in factors[1:]:
            group = direct_product(group, _build_group(factor, depth + 1))
        return group
    if kind == "semidirect":
        normal = spec.get("normal")
        acting = spec.get("acting")
        action = spec.get("action")
        if normal is None or acting is None or action is None:
            raise SpecError("semidirect specs need normal, acting, and action")
        return semidirect_product(
            _build_group(normal, depth + 1),
            _build_group(acting, depth + 1),
            action,
            label=label,
        )
    raise SpecError(f"unknown group spec kind {kind!r}")


def load_group_spec(payload: dict) -> FiniteGroup:
    """Build a group from a parsed ``zamen-group`` document."""
    _check_header(payload, GROUP_FORMAT)
    return _build_group({k: v for k, v in payload.items() if k not in ("format", "version")})


def group_from_json(text: str) -> FiniteGroup:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON: {exc}") from exc
    return load_group_spec(payload)


def _round_value(x: float) -> float:
    r = round(float(x), 12)
    return 0.0 if r == 0 else r


def _complex_rows(values: np.ndarray) -> list[list[list[float]]]:
    return [
        [[_round_value(v.real), _round_value(v.imag)] for v in row]
        for row in np.asarray(values)
    ]


def character_table_payload(table: CharacterTable) -> dict:
    """Serialize a character table to a ``zamen-chartable`` document.

    ``classes``/``rows`` follow the group's class order and reload exactly;
    ``canonical`` holds the joint row/column canonical form, which is equal
    byte for byte across groups sharing a character table.
    """
    canon_values, canon_degrees, canon_sizes = canonical_form(table)
    return {
        "format": CHARTABLE_FORMAT,
        "version": FORMAT_VERSION,
        "group_hash": table.group_hash,
        "order": table.order,
        "classes": [
            {"rep": int(r), "size": int(s)}
            for r, s in zip(table.class_reps, table.class_sizes)
        ],
        "inverse_class": [int(j) for j in table.inverse_class],
        "rows": [
            {"degree": int(d), "values": row}
            for d, row in zip(table.degrees, _complex_rows(table.values))
        ],
        "canonical": {
            "class_sizes": [int(s) for s in canon_sizes],
            "rows": [
                {"degree": int(d), "values": row}
                for d, row in zip(canon_degrees, _complex_rows(canon_values))
            ],
        },
        "residual": {"orthogonality": table.residual},
    }


def load_character_table(payload: dict, cs: ConjugacyStructure) -> CharacterTable:
    """Rebuild a character table from a document, bound to ``cs``'s group.

    The document must match the group hash and class layout; the canonical
    block is redundant on load and ignored.
    """
    _check_header(payload, CHARTABLE_FORMAT)
    if payload.get("group_hash") != cs.group_hash:
        raise SpecError("character table document belongs to a different group")
    classes = payload.get("classes")
    rows = payload.get("rows")
    if not isinstance(classes, list) or not isinstance(rows, list):
        raise SpecError("character table document is missing classes or rows")
    if len(classes) != cs.sizes.size or len(rows) != len(classes):
        raise SpecError("character table document has the wrong class count")
    reps = np.array([c["rep"] for c in classes])
    sizes = np.array([c["size"] for c in classes])
    if not np.array_equal(reps, cs.reps) or not np.array_equal(sizes, cs.sizes):
        raise SpecError("character table document classes do not match the group")
    values = np.array(
        [[complex(re, im) for re, im in row["values"]] for row in rows]
    )
    degrees = np.array([row["degree"] for row in rows])
    return CharacterTable(
        group_hash=cs.group_hash,
        order=int(payload["order"]),
        values=values,
        degrees=degrees,
        class_sizes=sizes,
        class_reps=reps,
        inverse_class=np.array(payload["inverse_class"]),
        residual=float(payload["residual"]["orthogonality"]),
    )


_SCHEME_NAMES = ("dirichlet", "fejer-smoothed", "fejer", "fejer-signed")


def load_experiment_spec(payload: dict) -> dict:
    """Validate a ``zamen-experiment`` document and fill quadrature defaults."""
    _check_header(payload, EXPERIMENT_FORMAT)
    model = payload.get("model")
    if model not in ("su2", "chebyshev"):
        raise SpecError(f"unknown hypergroup model {model!r}")
    scheme = payload.get("scheme")
    if scheme not in _SCHEME_NAMES:
        raise SpecError(f"unknown coefficient scheme {scheme!r}")
    levels = payload.get("n")
    if not isinstance(levels, list) or not levels:
        raise SpecError("experiment specs need a nonempty list of levels n")
    if any((not isinstance(n, int)) or n < 0 for n in levels):
        raise SpecError("levels must be nonnegative integers")
    quadrature = payload.get("quadrature", {})
    if not isinstance(quadrature, dict):
        raise SpecError("quadrature settings must be an object")
    return {
        "model": model,
        "scheme": scheme,
        "n": levels,
        "quadrature": quadrature,
    }
