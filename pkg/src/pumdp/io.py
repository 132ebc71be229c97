"""Flat-file formats: code specs, message/codeword block files, reports.

All files are JSON written with a fixed layout (one matrix row or one block
per line) so that ``write(read(text)) == text`` for anything this module
wrote.  Field elements are digit vectors over F_p, lowest order first:

* a base element of F_q = F_p[x]/(g) has m digits;
* an element of F_{q^d} has d*m digits, coefficient i of y occupying
  digits i*m .. i*m + m - 1.

Code-spec schema (``"format": "pumdp-code/1"``)::

    {
      "format": "pumdp-code/1",
      "n": 3, "k": 2, "delta": 1,
      "field": {"p": 5, "m": 1, "g": null, "d": 1, "f": null},
      "alpha": [2],
      "G0": [
        [[3], [2], [4]],
        ...
      ],
      "G1": [ ... ]
    }

``g`` lists F_p digits of the monic modulus of F_q (null when m = 1); ``f``
lists the coefficients of the monic modulus of F_{q^d} as m-digit vectors
(null when d = 1).  G0 entries may have m or d*m digits; G1 entries have d*m.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Sequence

from .codes import ConvCode
from .encoder import CodewordStream, MessageStream
from .errors import FormatError, PumdpError
from .gf import Fe, FieldTower, Level
from .matrix import FieldMatrix

CODE_FORMAT = "pumdp-code/1"
BLOCKS_FORMAT = "pumdp-blocks/1"


def _digits(code: int, p: int, length: int) -> list[int]:
    out = []
    for _ in range(length):
        code, r = divmod(code, p)
        out.append(r)
    return out


def element_digits(e: Fe) -> list[int]:
    t = e.tower
    length = t.m if e.level is Level.BASE else t.m * t.d
    return _digits(e.value, t.p, length)


def element_from_digits(tower: FieldTower, digits: Sequence[int]) -> Fe:
    """Level is BASE for m digits, EXT for d*m digits (BASE wins when d == 1)."""
    p, m = tower.p, tower.m
    if not isinstance(digits, list) or any(type(x) is not int or not 0 <= x < p for x in digits):
        raise FormatError(f"field element must be a list of digits in [0, {p}), got {digits!r}")
    if len(digits) == m:
        level = Level.BASE
    elif len(digits) == m * tower.d:
        level = Level.EXT
    else:
        raise FormatError(f"field element needs {m} or {m * tower.d} digits, got {len(digits)}")
    return Fe(tower, sum(x * p**i for i, x in enumerate(digits)), level)


def _dump(obj: Any) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _matrix_lines(M: FieldMatrix) -> str:
    rows = [_dump([element_digits(e) for e in M.row(i)]) for i in range(M.rows)]
    return "[\n    " + ",\n    ".join(rows) + "\n  ]"


def dumps_code(code: ConvCode) -> str:
    t = code.tower
    field = {
        "p": t.p,
        "m": t.m,
        "g": list(t.g) if t.g is not None else None,
        "d": t.d,
        "f": [t.base_digits(c) for c in t.f] if t.f is not None else None,
    }
    alpha = element_digits(code.alpha) if code.alpha is not None else None
    return (
        "{\n"
        f'  "format": "{CODE_FORMAT}",\n'
        f'  "n": {code.n}, "k": {code.k}, "delta": {code.delta},\n'
        f'  "field": {_dump(field)},\n'
        f'  "alpha": {_dump(alpha)},\n'
        f'  "G0": {_matrix_lines(code.G0)},\n'
        f'  "G1": {_matrix_lines(code.G1)}\n'
        "}\n"
    )


def _load_json(text: str, what: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{what}: not valid JSON ({exc.msg} at line {exc.lineno}, column {exc.colno})") from None
    if not isinstance(obj, dict):
        raise FormatError(f"{what}: top level must be an object")
    return obj


def _need(obj: dict, key: str, kind, what: str):
    if key not in obj:
        raise FormatError(f"{what}: missing field {key!r}")
    val = obj[key]
    if kind is int and (type(val) is not int):
        raise FormatError(f"{what}: field {key!r} must be an integer")
    if kind is list and not isinstance(val, list):
        raise FormatError(f"{what}: field {key!r} must be a list")
    return val


def _read_matrix(tower: FieldTower, rows, name: str) -> FieldMatrix:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise FormatError(f"code spec: {name} must be a non-empty list of rows")
    entries = [[element_from_digits(tower, e) for e in r] for r in rows]
    if len({len(r) for r in entries}) != 1:
        raise FormatError(f"code spec: {name} rows have different lengths")
    level = Level.EXT if any(e.level is Level.EXT for r in entries for e in r) else Level.BASE
    if level is Level.EXT:
        entries = [[e.embed() for e in r] for r in entries]
    return FieldMatrix.from_rows(tower, entries)


def loads_code(text: str) -> ConvCode:
    obj = _load_json(text, "code spec")
    if obj.get("format") != CODE_FORMAT:
        raise FormatError(f"code spec: expected format {CODE_FORMAT!r}, got {obj.get('format')!r}")
    n, k, delta = (_need(obj, key, int, "code spec") for key in ("n", "k", "delta"))
    field = _need(obj, "field", dict, "code spec")
    if not isinstance(field, dict):
        raise FormatError("code spec: 'field' must be an object")
    p, m, d = (_need(field, key, int, "code spec field") for key in ("p", "m", "d"))
    try:
        g = field.get("g")
        g = tuple(int(x) for x in g) if g is not None else None
        f = field.get("f")
        if f is not None:
            base = FieldTower(p, m, g)
            f = tuple(element_from_digits(base, c).value for c in f)
        tower = FieldTower(p, m, g, d, f)
        G0 = _read_matrix(tower, obj.get("G0"), "G0")
        G1 = _read_matrix(tower, obj.get("G1"), "G1")
        if G1.level is Level.BASE:
            G1 = G1.embed()
        alpha = obj.get("alpha")
        alpha = element_from_digits(tower, alpha).embed() if alpha is not None else None
        return ConvCode(tower, n, k, delta, G0, G1, alpha)
    except FormatError:
        raise
    except (PumdpError, TypeError) as exc:
        raise FormatError(f"code spec: {exc}") from None


def write_code(code: ConvCode, path: str | Path) -> None:
    Path(path).write_text(dumps_code(code))


def read_code(path: str | Path) -> ConvCode:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    return loads_code(text)


# ---------------------------------------------------------------------------
# block files


def dumps_blocks(stream: MessageStream | CodewordStream) -> str:
    kind = "message" if isinstance(stream, MessageStream) else "codeword"
    lines = [_dump([element_digits(e) for e in b]) for b in stream.blocks]
    body = "[\n    " + ",\n    ".join(lines) + "\n  ]" if lines else "[]"
    return "{\n" f'  "format": "{BLOCKS_FORMAT}", "kind": "{kind}",\n' f'  "blocks": {body}\n' "}\n"


def loads_blocks(text: str, code: ConvCode) -> MessageStream | CodewordStream:
    obj = _load_json(text, "block file")
    if obj.get("format") != BLOCKS_FORMAT:
        raise FormatError(f"block file: expected format {BLOCKS_FORMAT!r}, got {obj.get('format')!r}")
    kind = obj.get("kind")
    if kind not in ("message", "codeword"):
        raise FormatError("block file: 'kind' must be 'message' or 'codeword'")
    width = code.k if kind == "message" else code.n
    blocks = []
    for i, b in enumerate(_need(obj, "blocks", list, "block file")):
        if not isinstance(b, list) or len(b) != width:
            raise FormatError(f"block file: block {i} must hold {width} elements")
        blocks.append(tuple(element_from_digits(code.tower, e).embed() for e in b))
    cls = MessageStream if kind == "message" else CodewordStream
    return cls(tuple(blocks))


# ---------------------------------------------------------------------------
# reports


def dumps_report(obj: dict) -> str:
    return json.dumps(obj, indent=2) + "\n"


def text_report(obj: dict, indent: str = "") -> str:
    lines = []
    for key, val in obj.items():
        if isinstance(val, dict):
            lines.append(f"{indent}{key}:")
            lines.append(text_report(val, indent + "  "))
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{indent}{key}:")
            for item in val:
                lines.append(f"{indent}  - " + ", ".join(f"{a}={b}" for a, b in item.items()))
        else:
            lines.append(f"{indent}{key}: {val}")
    return "\n".join(lines)
