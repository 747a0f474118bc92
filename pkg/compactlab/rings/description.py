"""
Ring Description Files

Parses the textual ring format:

    {"product": [{"p": 2, "k": 1}, {"p": 3, "k": 2}], "labels": ["a", "b"]}
    {"table": {"n": 4, "add": [[...]], "mul": [[...]], "zero": 0, "one": 1}}

Parse failures raise ParseError naming the offending field and, for JSON syntax errors, the
line.
"""

import json
import logging
from pathlib import Path
from typing import Any

from compactlab.errors import ParseError
from compactlab.rings.atoms import LocalAtom
from compactlab.rings.base import FiniteRing
from compactlab.rings.product import product
from compactlab.rings.table import TableRing

logger = logging.getLogger(__name__)


def parse_ring(text: str) -> FiniteRing:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Invalid JSON: {e.msg}", line=e.lineno) from e
    return ring_from_description(data)


def load_ring(path: str | Path) -> FiniteRing:
    logger.debug(f"Loading ring description from {path}")
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ParseError(f"Cannot read ring file {path}: {e.strerror}") from e
    return parse_ring(text)


def ring_from_description(data: Any) -> FiniteRing:
    """
    Build a ring from a parsed description.

    Args:
        data: Parsed JSON object

    Returns:
        ProductRing of atoms or TableRing

    Raises:
        ParseError: Missing or malformed fields
    """
    if not isinstance(data, dict):
        raise ParseError("Ring description must be an object")
    if "product" in data:
        return _product_from(data)
    if "table" in data:
        return _table_from(data["table"])
    raise ParseError("Expected a 'product' or 'table' key", field="product")


def _require_int(container: dict[str, Any], key: str, where: str) -> int:
    value = container.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise ParseError(f"Expected an integer, got {value!r}", field=f"{where}.{key}")
    return value


def _product_from(data: dict[str, Any]) -> FiniteRing:
    factors = data["product"]
    if not isinstance(factors, list) or not factors:
        raise ParseError("Expected a non-empty list of atoms", field="product")
    atoms = []
    for i, entry in enumerate(factors):
        if not isinstance(entry, dict):
            raise ParseError("Each atom must be an object", field=f"product[{i}]")
        p = _require_int(entry, "p", f"product[{i}]")
        k = entry.get("k", 1)
        if not isinstance(k, int) or isinstance(k, bool):
            raise ParseError(f"Expected an integer, got {k!r}", field=f"product[{i}].k")
        try:
            atoms.append(LocalAtom(p, k))
        except ValueError as e:
            raise ParseError(str(e), field=f"product[{i}]") from e

    labels = data.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != len(atoms):
            raise ParseError(f"Expected {len(atoms)} labels", field="labels")
        labels = [str(label) for label in labels]
        if len(set(labels)) != len(labels):
            raise ParseError("Labels must be distinct", field="labels")
    return product(atoms, labels)


def _table_from(table: Any) -> FiniteRing:
    if not isinstance(table, dict):
        raise ParseError("Expected an object", field="table")
    n = _require_int(table, "n", "table")
    for key in ("add", "mul"):
        rows = table.get(key)
        if (
            not isinstance(rows, list)
            or len(rows) != n
            or any(not isinstance(row, list) or len(row) != n for row in rows)
        ):
            raise ParseError(f"Expected an {n}x{n} table", field=f"table.{key}")
    zero = _require_int(table, "zero", "table")
    one = _require_int(table, "one", "table")
    try:
        return TableRing(table["add"], table["mul"], zero, one)
    except ValueError as e:
        raise ParseError(str(e), field="table") from e


def dump_ring(ring: FiniteRing) -> str:
    return json.dumps(ring.describe(), sort_keys=True)
