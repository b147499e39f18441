"""JSON reduction-type files and DOT export of dual graphs.

File format::

    {"N": [2, 2, 3, 4, 6], "G": [0, 0, 0, 0, 0],
     "C": [[-3, 0, 0, 0, 1], ...], "name": "example1", "x_params": {"x": 0}}

``name`` and ``x_params`` are optional.  Every number is a decimal integer.
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .core import IntegerRangeError, ReductionType, check_int


class FormatError(ValueError):
    """A reduction-type document is malformed; the message names the field."""


def _int_list(value: Any, field: str) -> list[int]:
    if not isinstance(value, list):
        raise FormatError(f"{field}: expected an array of integers")
    out = []
    for k, v in enumerate(value):
        try:
            out.append(check_int(v, f"{field}[{k}]"))
        except TypeError as exc:
            raise FormatError(str(exc)) from None
        except IntegerRangeError as exc:
            raise FormatError(str(exc)) from exc
    return out


def from_dict(obj: Any) -> ReductionType:
    if not isinstance(obj, dict):
        raise FormatError("document: expected an object")
    for key in ("N", "G", "C"):
        if key not in obj:
            raise FormatError(f"{key}: missing")
    unknown = set(obj) - {"N", "G", "C", "name", "x_params"}
    if unknown:
        raise FormatError(f"{sorted(unknown)[0]}: unknown field")
    N = _int_list(obj["N"], "N")
    G = _int_list(obj["G"], "G")
    if not isinstance(obj["C"], list):
        raise FormatError("C: expected an array of arrays")
    C = [_int_list(row, f"C[{i}]") for i, row in enumerate(obj["C"])]
    if any(len(row) != len(C) for row in C):
        raise FormatError("C: must be square")
    name = obj.get("name")
    if name is not None and not isinstance(name, str):
        raise FormatError("name: expected a string")
    params = obj.get("x_params", {})
    if not isinstance(params, dict):
        raise FormatError("x_params: expected an object")
    for k, v in params.items():
        if isinstance(v, bool) or not isinstance(v, int):
            raise FormatError(f"x_params.{k}: symbolic parameters are not supported, expected an integer")
    return ReductionType(tuple(N), tuple(G), tuple(map(tuple, C)), name=name, params=tuple(params.items()))


def to_dict(rt: ReductionType) -> dict:
    out: dict[str, Any] = {"N": list(rt.N), "G": list(rt.G), "C": [list(row) for row in rt.C]}
    if rt.name is not None:
        out["name"] = rt.name
    if rt.params:
        out["x_params"] = dict(rt.params)
    return out


def loads(text: str) -> ReductionType:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"document: invalid JSON ({exc})") from None
    return from_dict(obj)


def dumps(rt: ReductionType) -> str:
    return json.dumps(to_dict(rt))


def rational_json(q: Fraction) -> int | str:
    return int(q) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def export_dot(rt: ReductionType) -> str:
    """Undirected DOT graph with one node per component labeled ``(N_i,G_i)``.

    An intersection number ``c_ij`` becomes ``c_ij`` parallel edges.  Self
    intersections are not drawn; they go into the node tooltip.
    """
    rt.require_well_formed()
    title = json.dumps(rt.name or "dual_graph")
    lines = [f"graph {title} {{", "  node [shape=ellipse];"]
    for i, (n, g) in enumerate(zip(rt.N, rt.G), start=1):
        lines.append(f'  n{i} [label="({n},{g})", tooltip="c_{i}{i}={rt.C[i - 1][i - 1]}"];')
    for i, j, c in rt.edges():
        lines.extend(f"  n{i + 1} -- n{j + 1};" for _ in range(c))
    lines.append("}")
    return "\n".join(lines) + "\n"
