"""Plain-text hypergraph files.

One edge per line as whitespace-separated vertex labels; ``#`` starts a
comment; blank lines are ignored.  Labels are arbitrary strings and are
normalized to dense vertex indices (numeric order when every label is an
integer, lexicographic otherwise); the label map is kept so reports can
speak the caller's language.
"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

from .hypergraph import Hypergraph, build


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def parse_hypergraph(text: str) -> tuple[Hypergraph, tuple[str, ...]]:
    """Parse the text format; returns the hypergraph and its label map.

    ``labels[v]`` is the original label of vertex ``v``.
    """
    edges: list[tuple[int, list[str]]] = []
    seen: dict[frozenset[str], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        tokens = content.split()
        if len(set(tokens)) != len(tokens):
            raise ParseError(f"repeated vertex label in edge: {content!r}", lineno)
        key = frozenset(tokens)
        if key in seen:
            raise ParseError(f"duplicate edge (first seen on line {seen[key]})", lineno)
        seen[key] = lineno
        edges.append((lineno, tokens))
    if not edges:
        raise ParseError("no edges found")
    all_labels = {tok for _, tokens in edges for tok in tokens}
    try:
        labels = sorted(all_labels, key=int)
    except ValueError:
        labels = sorted(all_labels)
    index = {lab: i for i, lab in enumerate(labels)}
    hg = build(len(labels), [[index[t] for t in tokens] for _, tokens in edges])
    return hg, tuple(labels)


def format_hypergraph(hg: Hypergraph, labels: Sequence[str] | None = None) -> str:
    """Render a hypergraph in the text format.

    Without an explicit label map, vertices are written 1-based, matching
    the convention of the shipped example files.
    """
    if labels is None:
        labels = [str(v + 1) for v in range(hg.n)]
    if len(labels) != hg.n:
        raise ValueError(f"label map has {len(labels)} entries for {hg.n} vertices")
    lines = [" ".join(labels[v] for v in e) for e in hg.edges]
    return "\n".join(lines) + "\n"


def load(path: str | Path) -> tuple[Hypergraph, tuple[str, ...]]:
    return parse_hypergraph(Path(path).read_text())


def save(path: str | Path, hg: Hypergraph, labels: Sequence[str] | None = None) -> None:
    Path(path).write_text(format_hypergraph(hg, labels))
