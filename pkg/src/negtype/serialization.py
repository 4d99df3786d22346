"""File formats.

Point families and simplices travel as JSON with every scalar written as a
rational string ("a/b", or "a" for integers).  Distance matrices travel as
CSV of floats (header row of labels, then the symmetric matrix of already
powered values) next to a small sidecar JSON recording the exponent that
was applied.  Writers emit canonical bytes: sorted keys, two-space indent,
trailing newline.
"""

from __future__ import annotations

import csv
import json
from fractions import Fraction
from pathlib import Path

from .errors import FormatError
from .simplexes import Simplex
from .spaces import AtomicMeasure, DistanceMatrix, FunctionSet

SIDECAR_SUFFIX = ".meta.json"


def format_rational(value) -> str:
    return str(Fraction(value))


def parse_rational(text) -> Fraction:
    if isinstance(text, bool) or isinstance(text, float):
        raise FormatError(f"rationals must be strings or integers, got {text!r}")
    try:
        return Fraction(text)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise FormatError(f"not a rational number: {text!r}") from exc


def dumps_canonical(document) -> str:
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def _load_json(path: Path) -> object:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON at line {exc.lineno} "
                          f"column {exc.colno}: {exc.msg}") from exc


def function_set_to_dict(family: FunctionSet) -> dict:
    document: dict = {
        "points": [
            {"id": label, "values": [format_rational(x) for x in row]}
            for label, row in zip(family.labels, family.values)
        ],
    }
    if any(w != 1 for w in family.measure.weights):
        document["weights"] = [format_rational(w) for w in family.measure.weights]
    return document


def function_set_from_dict(document) -> FunctionSet:
    if not isinstance(document, dict):
        raise FormatError(f"point-set document must be an object, got {type(document).__name__}")
    points = document.get("points")
    if not isinstance(points, list) or not points:
        raise FormatError("point-set document needs a non-empty 'points' array")
    labels = []
    rows = []
    for k, point in enumerate(points):
        if not isinstance(point, dict) or "id" not in point or "values" not in point:
            raise FormatError(f"point {k} must be an object with 'id' and 'values'")
        values = point["values"]
        if not isinstance(values, list) or not values:
            raise FormatError(f"point {point['id']!r} needs a non-empty 'values' array")
        labels.append(str(point["id"]))
        rows.append(tuple(parse_rational(x) for x in values))
    if "weights" in document:
        weights = document["weights"]
        if not isinstance(weights, list) or not weights:
            raise FormatError("'weights', when present, must be a non-empty array")
        measure = AtomicMeasure(tuple(parse_rational(w) for w in weights))
    else:
        measure = AtomicMeasure.counting(len(rows[0]))
    return FunctionSet(measure, tuple(labels), tuple(rows))


def save_function_set(family: FunctionSet, path) -> None:
    Path(path).write_text(dumps_canonical(function_set_to_dict(family)),
                          encoding="utf-8")


def load_function_set(path) -> FunctionSet:
    return function_set_from_dict(_load_json(Path(path)))


def simplex_to_dict(simplex: Simplex, point_set_ref: str | None = None) -> dict:
    """Simplex document; the point family is embedded inline unless a path
    reference is supplied instead."""
    family = simplex.point_set
    document = {
        "point_set": point_set_ref if point_set_ref is not None
        else function_set_to_dict(family),
        "left": [{"point": family.labels[i], "weight": format_rational(w)}
                 for i, w in simplex.left],
        "right": [{"point": family.labels[i], "weight": format_rational(w)}
                  for i, w in simplex.right],
    }
    return document


def _side_from_list(family: FunctionSet, side, name: str):
    if not isinstance(side, list) or not side:
        raise FormatError(f"simplex needs a non-empty {name!r} array")
    out = []
    for k, item in enumerate(side):
        if not isinstance(item, dict) or "point" not in item or "weight" not in item:
            raise FormatError(f"{name}[{k}] must be an object with 'point' and 'weight'")
        out.append((family.index_of(str(item["point"])), parse_rational(item["weight"])))
    return tuple(out)


def simplex_from_dict(document, base_dir=None) -> Simplex:
    if not isinstance(document, dict):
        raise FormatError(f"simplex document must be an object, got {type(document).__name__}")
    ref = document.get("point_set")
    if isinstance(ref, str):
        path = Path(ref)
        if base_dir is not None and not path.is_absolute():
            path = Path(base_dir) / path
        family = load_function_set(path)
    elif isinstance(ref, dict):
        family = function_set_from_dict(ref)
    else:
        raise FormatError("'point_set' must be an inline object or a path string")
    left = _side_from_list(family, document.get("left"), "left")
    right = _side_from_list(family, document.get("right"), "right")
    # Simplex construction enforces the equal-sum invariant and reports
    # both totals in its message.
    return Simplex(family, left, right)


def save_simplex(simplex: Simplex, path, point_set_ref: str | None = None) -> None:
    Path(path).write_text(dumps_canonical(simplex_to_dict(simplex, point_set_ref)),
                          encoding="utf-8")


def load_simplex(path) -> Simplex:
    path = Path(path)
    return simplex_from_dict(_load_json(path), base_dir=path.parent)


def save_distance_matrix_csv(matrix: DistanceMatrix, path) -> None:
    """Matrix CSV plus a '<path>.meta.json' sidecar carrying the exponent
    already applied to the entries."""
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(matrix.labels)
        for row in matrix.entries:
            writer.writerow([repr(float(x)) for x in row])
    sidecar = {
        "p": matrix.p,
        "powered": True,
        "p_independent": matrix.p_independent,
    }
    Path(str(path) + SIDECAR_SUFFIX).write_text(dumps_canonical(sidecar),
                                                encoding="utf-8")


def load_distance_matrix_csv(path) -> DistanceMatrix:
    path = Path(path)
    sidecar_path = Path(str(path) + SIDECAR_SUFFIX)
    if not sidecar_path.exists():
        raise FormatError(
            f"missing sidecar {sidecar_path.name}: the exponent already applied "
            f"to the matrix must be recorded")
    sidecar = _load_json(sidecar_path)
    if not isinstance(sidecar, dict) or "p" not in sidecar:
        raise FormatError(f"{sidecar_path}: sidecar must be an object with 'p'")
    try:
        p = float(sidecar["p"])
    except (TypeError, ValueError) as exc:
        raise FormatError(f"{sidecar_path}: 'p' must be a number") from exc
    try:
        with path.open("r", encoding="utf-8", newline="") as handle:
            reader = csv.reader(handle)
            table = [row for row in reader if row]
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    if len(table) < 2:
        raise FormatError(f"{path}: need a header row of labels plus matrix rows")
    labels = tuple(cell.strip() for cell in table[0])
    body = table[1:]
    if len(body) != len(labels):
        raise FormatError(
            f"{path}: {len(body)} matrix rows for {len(labels)} labels")
    entries = []
    for i, row in enumerate(body):
        if len(row) != len(labels):
            raise FormatError(f"{path}: row {i + 2} has {len(row)} cells, "
                              f"expected {len(labels)}")
        try:
            entries.append(tuple(float(cell) for cell in row))
        except ValueError as exc:
            raise FormatError(f"{path}: row {i + 2}: {exc}") from exc
    return DistanceMatrix(
        p=p,
        entries=tuple(entries),
        labels=labels,
        exact=False,
        p_independent=bool(sidecar.get("p_independent", False)),
    )
