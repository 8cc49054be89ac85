"""Plain-text ``.hgr`` instance files.

Layout::

    # optional comment lines
    k m n
    v v v      (one line per edge, k vertex ids, 0-based)

The file must end with a newline.  The writer emits the normal form, so
``format_hgr(parse_hgr(format_hgr(G))) == format_hgr(G)``.
"""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

from .core import Hypergraph
from .errors import HgrParseError


def format_hgr(G: Hypergraph) -> str:
    lines = [f"{G.k} {G.m} {G.n}"]
    lines.extend(" ".join(str(v) for v in e) for e in G.edges)
    return "\n".join(lines) + "\n"


def parse_hgr(text: str) -> Hypergraph:
    if not text.endswith("\n"):
        raise HgrParseError("file must end with a newline")
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.lstrip().startswith("#") or not line.strip():
            continue
        try:
            rows.append((lineno, [int(x) for x in line.split()]))
        except ValueError:
            raise HgrParseError(f"line {lineno}: expected integers, got {line!r}") from None
    if not rows:
        raise HgrParseError("missing header line 'k m n'")
    lineno, header = rows[0]
    if len(header) != 3:
        raise HgrParseError(f"line {lineno}: header must be 'k m n'")
    k, m, n = header
    if len(rows) - 1 != m:
        raise HgrParseError(f"header announces {m} edges, found {len(rows) - 1}")
    for lineno, row in rows[1:]:
        if len(row) != k:
            raise HgrParseError(f"line {lineno}: expected {k} vertex ids, got {len(row)}")
    return Hypergraph(k, n, tuple(tuple(row) for _, row in rows[1:]))


def read_hgr(path: str | os.PathLike) -> Hypergraph:
    return parse_hgr(Path(path).read_text())


def write_atomic(path: str | os.PathLike, text: str) -> None:
    """Write via a temporary file in the target directory, then rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.chmod(tmp, 0o644)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_hgr(path: str | os.PathLike, G: Hypergraph) -> None:
    write_atomic(path, format_hgr(G))
