"""
Output Formats

Every verb produces a payload dictionary; this module renders it as JSON (sorted keys), as a
DOT graph (payloads carrying a "graph" entry), or as a fixed-column table.
"""

import json
from typing import Any

FORMATS = ("json", "dot", "table")

SUITE_WIDTH = 24
CHECK_WIDTH = 40
INSTANCE_WIDTH = 32
TABLE_NESTING_DEPTH = 2  # dict levels spread into dotted rows before JSON


def emit(fmt: str, payload: dict[str, Any]) -> str:
    """
    Render ``payload`` in one of FORMATS.

    Raises:
        ValueError: Unknown format, or DOT requested for a payload without a graph
    """
    match fmt:
        case "json":
            return json.dumps(payload, sort_keys=True, indent=2)
        case "dot":
            if "graph" not in payload:
                raise ValueError("This output has no graph; use --format json or table")
            return render_dot(payload["graph"])
        case "table":
            if "suites" in payload:
                return render_report_table(payload)
            return render_table(payload)
    raise ValueError(f"Unknown format: {fmt}. Must be one of {list(FORMATS)}")


def _quote(text: object) -> str:
    escaped = str(text).replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def render_dot(graph: dict[str, Any]) -> str:
    """
    Args:
        graph: {"name", "directed", "nodes": [{"id", "label", "infinity"?}], "edges": [[u, v]]}
    """
    directed = graph.get("directed", True)
    arrow = "->" if directed else "--"
    lines = [f"{'digraph' if directed else 'graph'} {_quote(graph.get('name', 'G'))} {{"]
    for node in sorted(graph["nodes"], key=lambda n: str(n["id"])):
        attributes = [f"label={_quote(node.get('label', node['id']))}"]
        if node.get("infinity"):
            attributes.append("shape=doublecircle")
        lines.append(f"  {_quote(node['id'])} [{', '.join(attributes)}];")
    for u, v in sorted((str(u), str(v)) for u, v in graph["edges"]):
        lines.append(f"  {_quote(u)} {arrow} {_quote(v)};")
    lines.append("}")
    return "\n".join(lines)


def _flatten(prefix: str, value: Any, rows: list[tuple[str, str]]) -> None:
    if isinstance(value, dict) and value and prefix.count(".") < TABLE_NESTING_DEPTH:
        for key in sorted(value):
            _flatten(f"{prefix}.{key}" if prefix else str(key), value[key], rows)
        return
    if isinstance(value, list | dict):
        rows.append((prefix, json.dumps(value, sort_keys=True, separators=(",", ":"))))
        return
    rows.append((prefix, str(value)))


def render_table(payload: dict[str, Any]) -> str:
    rows: list[tuple[str, str]] = []
    _flatten("", {k: v for k, v in payload.items() if k != "graph"}, rows)
    width = max((len(key) for key, _ in rows), default=0)
    return "\n".join(f"{key.ljust(width)}  {value}" for key, value in rows)


def _cell(text: object, width: int) -> str:
    text = str(text)
    if len(text) > width:
        text = text[: width - 1] + "~"
    return text.ljust(width)


def render_report_table(payload: dict[str, Any]) -> str:
    """One row per suite, then one row per failing record."""
    timed = any("seconds" in suite for suite in payload["suites"])
    header = _cell("SUITE", SUITE_WIDTH) + _cell("CHECKS", 8) + _cell("FAILED", 8) + "STATUS"
    if timed:
        header += "  SECONDS"
    lines = [header]
    for suite in payload["suites"]:
        row = (
            _cell(suite["suite"], SUITE_WIDTH)
            + _cell(suite["checks"], 8)
            + _cell(suite["failures"], 8)
            + ("PASS  " if suite["passed"] else "FAIL  ")
        )
        if timed:
            row += f"  {suite.get('seconds', '')}"
        lines.append(row.rstrip())

    failing = [
        (suite["suite"], record)
        for suite in payload["suites"]
        for record in suite["records"]
        if not record["passed"]
    ]
    if failing:
        lines.append("")
        lines.append(
            _cell("SUITE", SUITE_WIDTH)
            + _cell("CHECK", CHECK_WIDTH)
            + _cell("INSTANCE", INSTANCE_WIDTH)
            + "WITNESS"
        )
        for suite_id, record in failing:
            witness = json.dumps(record["witness"], sort_keys=True, separators=(",", ":"))
            lines.append(
                _cell(suite_id, SUITE_WIDTH)
                + _cell(record["check"], CHECK_WIDTH)
                + _cell(record["instance"], INSTANCE_WIDTH)
                + witness
            )

    summary = payload["summary"]
    lines.append("")
    lines.append(
        f"{summary['suites']} suites, {summary['checks']} checks, {summary['failures']} failed"
    )
    return "\n".join(lines)
