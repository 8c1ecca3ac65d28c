"""Witness files: one vertex per line as an n-character 0/1 string.

    # qn-domset v1 n=3
    000
    111

The leftmost character is coordinate 1, so the line ``0110`` in Q_4 is the
vertex (2,3).  Lines starting with ``#`` after the header are comments.
"""
from __future__ import annotations

import re
from pathlib import Path
from typing import Iterable, TextIO

HEADER_RE = re.compile(r"^#\s*qn-domset\s+v1\s+n=(\d+)\s*$")


class WitnessFormatError(ValueError):
    pass


def vertex_to_bits(mask: int, n: int) -> str:
    return "".join("1" if (mask >> i) & 1 else "0" for i in range(n))


def bits_to_vertex(s: str) -> int:
    return sum(1 << i for i, ch in enumerate(s) if ch == "1")


def format_witness(n: int, masks: Iterable[int], comments: Iterable[str] = ()) -> str:
    lines = [f"# qn-domset v1 n={n}"]
    lines += [f"# {c}" for c in comments]
    lines += [vertex_to_bits(int(m), n) for m in sorted(int(m) for m in masks)]
    return "\n".join(lines) + "\n"


def write_witness(path: str | Path | TextIO, n: int, masks: Iterable[int],
                  comments: Iterable[str] = ()) -> None:
    text = format_witness(n, masks, comments)
    if hasattr(path, "write"):
        path.write(text)
    else:
        Path(path).write_text(text)


def parse_witness(text: str) -> tuple[int, list[int]]:
    lines = text.splitlines()
    body = iter(enumerate(lines, 1))
    n = None
    for lineno, line in body:
        if not line.strip():
            continue
        m = HEADER_RE.match(line.strip())
        if not m:
            raise WitnessFormatError(f"line {lineno}: expected header '# qn-domset v1 n=<dim>'")
        n = int(m.group(1))
        break
    if n is None:
        raise WitnessFormatError("empty witness file")
    if not 1 <= n <= 30:
        raise WitnessFormatError(f"dimension {n} out of range 1..30")
    seen: set[int] = set()
    masks = []
    for lineno, line in body:
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        if len(s) != n or set(s) - {"0", "1"}:
            raise WitnessFormatError(f"line {lineno}: expected {n} characters over {{0,1}}, got {s!r}")
        v = bits_to_vertex(s)
        if v in seen:
            raise WitnessFormatError(f"line {lineno}: duplicate vertex {s}")
        seen.add(v)
        masks.append(v)
    return n, masks


def read_witness(path: str | Path | TextIO) -> tuple[int, list[int]]:
    if hasattr(path, "read"):
        return parse_witness(path.read())
    return parse_witness(Path(path).read_text())
