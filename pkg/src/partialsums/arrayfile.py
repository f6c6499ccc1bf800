"""Line-oriented array files.

::

    M 3
    5
    1
    2

The first line declares the count, then one signed 64-bit integer per line.
Files hold the logical values only; the tree is rebuilt on every load.
"""
from __future__ import annotations

from pathlib import Path
from typing import List, Union

INT64_MIN = -(1 << 63)
INT64_MAX = (1 << 63) - 1


class ArrayFileError(Exception):
    """Malformed array file."""


def parse_array(text: str) -> List[int]:
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ArrayFileError("empty file: missing 'M <count>' header")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "M":
        raise ArrayFileError(f"bad header {lines[0]!r}, expected 'M <count>'")
    try:
        m = int(head[1])
    except ValueError:
        raise ArrayFileError(f"bad count {head[1]!r}") from None
    if m < 0:
        raise ArrayFileError(f"negative count {m}")
    body = lines[1:]
    if len(body) != m:
        raise ArrayFileError(f"header declares {m} values, found {len(body)}")
    values = []
    for lineno, line in enumerate(body, start=2):
        try:
            v = int(line.strip())
        except ValueError:
            raise ArrayFileError(f"line {lineno}: not an integer: {line!r}") from None
        if not INT64_MIN <= v <= INT64_MAX:
            raise ArrayFileError(f"line {lineno}: {v} does not fit in int64")
        values.append(v)
    return values


def format_array(values) -> str:
    return "".join([f"M {len(values)}\n"] + [f"{v}\n" for v in values])


def read_array(path: Union[str, Path]) -> List[int]:
    try:
        text = Path(path).read_text()
    except (OSError, UnicodeDecodeError) as exc:
        raise ArrayFileError(f"cannot read {path}: {exc}") from None
    return parse_array(text)


def write_array(path: Union[str, Path], values) -> None:
    Path(path).write_text(format_array(values))
