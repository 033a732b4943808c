"""
InstanceFile codec: UTF-8 JSON describing ground set, objective, matroid and ``alpha``.

Explicit tables list ``2^n`` values in binary-counter order (bit i set ⇔ element i
present) and must pass the normalization, monotonicity and submodularity checks on load.
"""

from __future__ import annotations

import json
from typing import Any, Dict, List, Mapping, Optional

from ..errors import InstanceParseError, ResilMaxError
from ..io.file_reader import LocalFileSource, write_text_atomic
from ..model.ground import GroundSet
from ..model.instance import Instance
from ..model.matroid import Matroid, Partition, Uniform
from ..model.objective import (
    ExplicitTable,
    FacilityLocation,
    Modular,
    Objective,
    WeightedCoverage,
    check_monotone,
    check_normalized,
    check_submodular,
)

OBJECTIVE_TYPES = ("weighted_coverage", "facility_location", "modular", "explicit")
MATROID_TYPES = ("uniform", "partition")


def _int(value: Any, where: str, *, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise InstanceParseError(f"{where} must be an integer >= {minimum}, got {value!r}")
    return value


def _number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InstanceParseError(f"{where} must be a number, got {value!r}")
    return float(value)


def _list(value: Any, where: str, length: Optional[int] = None) -> List[Any]:
    if not isinstance(value, list):
        raise InstanceParseError(f"{where} must be an array")
    if length is not None and len(value) != length:
        raise InstanceParseError(f"{where} must have {length} entries, got {len(value)}")
    return value


def _numbers(value: Any, where: str, length: Optional[int] = None) -> List[float]:
    return [_number(v, f"{where}[{i}]") for i, v in enumerate(_list(value, where, length))]


def _ints(value: Any, where: str) -> List[int]:
    return [_int(v, f"{where}[{i}]") for i, v in enumerate(_list(value, where))]


def _field(obj: Mapping[str, Any], key: str, where: str) -> Any:
    if key not in obj:
        raise InstanceParseError(f"{where}: missing field {key!r}")
    return obj[key]


def _parse_objective(obj: Any, n: int) -> Objective:
    if not isinstance(obj, dict):
        raise InstanceParseError("objective must be an object")
    kind = _field(obj, "type", "objective")
    if kind == "weighted_coverage":
        weights = _numbers(_field(obj, "weights", "objective"), "objective.weights")
        covers_raw = _list(_field(obj, "covers", "objective"), "objective.covers", n)
        covers = [_ints(c, f"objective.covers[{i}]") for i, c in enumerate(covers_raw)]
        return WeightedCoverage(weights, covers)
    if kind == "facility_location":
        rows = _list(_field(obj, "values", "objective"), "objective.values", n)
        values = [_numbers(r, f"objective.values[{i}]") for i, r in enumerate(rows)]
        if not n:
            raise InstanceParseError("facility_location needs n >= 1")
        if not values[0] or any(len(r) != len(values[0]) for r in values):
            raise InstanceParseError("objective.values rows must share one nonzero length")
        return FacilityLocation(values)
    if kind == "modular":
        return Modular(_numbers(_field(obj, "weights", "objective"), "objective.weights", n))
    if kind == "explicit":
        table = _numbers(_field(obj, "values", "objective"), "objective.values", 1 << n)
        f = ExplicitTable(table)
        for name, check in (
            ("normalized", check_normalized),
            ("monotone", check_monotone),
            ("submodular", check_submodular),
        ):
            if not check(f):
                raise InstanceParseError(f"explicit objective is not {name}")
        return f
    raise InstanceParseError(
        f"objective.type must be one of {', '.join(OBJECTIVE_TYPES)}, got {kind!r}"
    )


def _parse_matroid(obj: Any, n: int) -> Matroid:
    if not isinstance(obj, dict):
        raise InstanceParseError("matroid must be an object")
    kind = _field(obj, "type", "matroid")
    if kind == "uniform":
        return Uniform(n, _int(_field(obj, "rank", "matroid"), "matroid.rank"))
    if kind == "partition":
        blocks_raw = _list(_field(obj, "blocks", "matroid"), "matroid.blocks")
        blocks = [_ints(b, f"matroid.blocks[{i}]") for i, b in enumerate(blocks_raw)]
        caps = _ints(_field(obj, "capacities", "matroid"), "matroid.capacities")
        return Partition(n, blocks, caps)
    raise InstanceParseError(
        f"matroid.type must be one of {', '.join(MATROID_TYPES)}, got {kind!r}"
    )


def parse_instance(buf: bytes | memoryview | str) -> Instance:
    """Parse and validate an InstanceFile.

    Raises:
        InstanceParseError: malformed JSON, missing fields, or an invalid instance.
    """
    try:
        text = buf if isinstance(buf, str) else bytes(buf).decode("utf-8")
        doc = json.loads(text)
    except (UnicodeDecodeError, json.JSONDecodeError) as e:
        raise InstanceParseError(f"invalid JSON: {e}") from e
    if not isinstance(doc, dict):
        raise InstanceParseError("instance must be a JSON object")
    n = _int(_field(doc, "n", "instance"), "n")
    try:
        labels = None
        if "labels" in doc:
            raw = _list(doc["labels"], "labels", n)
            if not all(isinstance(x, str) for x in raw):
                raise InstanceParseError("labels must be strings")
            labels = tuple(raw)
        return Instance(
            ground=GroundSet(n, labels),
            objective=_parse_objective(_field(doc, "objective", "instance"), n),
            matroid=_parse_matroid(_field(doc, "matroid", "instance"), n),
            alpha=_int(_field(doc, "alpha", "instance"), "alpha"),
        )
    except InstanceParseError:
        raise
    except ResilMaxError as e:
        raise InstanceParseError(str(e)) from e


def objective_to_json(f: Objective) -> Dict[str, Any]:
    if isinstance(f, WeightedCoverage):
        return {
            "type": "weighted_coverage",
            "weights": list(f.weights),
            "covers": [list(c) for c in f.covers],
        }
    if isinstance(f, FacilityLocation):
        return {"type": "facility_location", "values": f.values.tolist()}
    if isinstance(f, Modular):
        return {"type": "modular", "weights": list(f.weights)}
    if isinstance(f, ExplicitTable):
        return {"type": "explicit", "values": f.table.tolist()}
    raise InstanceParseError(f"cannot serialize objective {f!r}")


def matroid_to_json(m: Matroid) -> Dict[str, Any]:
    if isinstance(m, Uniform):
        return {"type": "uniform", "rank": m.rank}
    if isinstance(m, Partition):
        return {
            "type": "partition",
            "blocks": [list(b) for b in m.blocks],
            "capacities": list(m.capacities),
        }
    raise InstanceParseError(f"cannot serialize matroid {m!r}")


def instance_to_json(inst: Instance) -> Dict[str, Any]:
    doc: Dict[str, Any] = {"n": inst.n}
    if inst.ground.labels is not None:
        doc["labels"] = list(inst.ground.labels)
    doc["objective"] = objective_to_json(inst.objective)
    doc["matroid"] = matroid_to_json(inst.matroid)
    doc["alpha"] = inst.alpha
    return doc


def emit_instance(inst: Instance) -> str:
    """Serialize ``inst`` deterministically (two-space indent, trailing newline)."""
    return json.dumps(instance_to_json(inst), indent=2) + "\n"


def load_instance(path: str) -> Instance:
    """Read and parse the InstanceFile at ``path``."""
    with LocalFileSource(path).open() as mf:
        return parse_instance(mf.view)


def save_instance(path: str, inst: Instance) -> None:
    """Write ``inst`` to ``path`` as an InstanceFile."""
    write_text_atomic(path, emit_instance(inst))
