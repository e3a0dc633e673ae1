"""JSON poset documents and Graphviz DOT rendering of Hasse diagrams.

A document looks like::

    {"n": 3, "covers": [[0, 1], [1, 2]], "labels": ["a", "b", "c"], "meta": {}}

Each covers pair is ``[lower, upper]``.  ``labels`` and ``meta`` are optional.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from typing import Optional

from .errors import DocumentError, PosetError
from .levels import level_classes
from .poset import FinitePoset, build_poset

FIELDS = ("n", "covers", "labels", "meta")

HIGHLIGHT_COLORS = (
    "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
    "#a65628", "#f781bf", "#999999", "#66c2a5", "#fc8d62",
)


class NormalizationWarning(UserWarning):
    """Input covers contained pairs implied by other pairs."""


@dataclass
class PosetDocument:
    n: int
    covers: list
    labels: Optional[list] = None
    meta: dict = field(default_factory=dict)

    @classmethod
    def from_poset(cls, P: FinitePoset, meta=None):
        return cls(
            P.n,
            [list(c) for c in P.covers],
            list(P.labels) if P.labels is not None else None,
            dict(meta or {}),
        )

    def to_poset(self, strict=False) -> FinitePoset:
        try:
            P = build_poset(self.n, [tuple(c) for c in self.covers], self.labels, strict=strict)
        except PosetError as exc:
            exc.args = (f"document: {exc}",)
            raise
        given = {tuple(c) for c in self.covers}
        dropped = sorted(given - set(P.covers))
        if dropped:
            warnings.warn(
                f"dropped {len(dropped)} redundant covers pair(s): {[list(p) for p in dropped]}",
                NormalizationWarning,
                stacklevel=3,
            )
        return P

    def to_text(self) -> str:
        out = {"n": self.n, "covers": sorted(self.covers)}
        if self.labels is not None:
            out["labels"] = self.labels
        if self.meta:
            out["meta"] = dict(sorted(self.meta.items()))
        return json.dumps(out) + "\n"


def _fail(message, position):
    raise DocumentError(message, position)


def read_document(text: str) -> PosetDocument:
    """Parse and schema-check a document without building the poset."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(data, dict):
        _fail("document must be a JSON object", "top level")
    unknown = sorted(set(data) - set(FIELDS))
    if unknown:
        _fail(f"unknown field(s) {unknown}", "top level")
    n = data.get("n")
    if not isinstance(n, int) or isinstance(n, bool):
        _fail(f"expected an integer, got {n!r}", "field 'n'")
    covers = data.get("covers", [])
    if not isinstance(covers, list):
        _fail("expected a list of [lower, upper] pairs", "field 'covers'")
    for i, pair in enumerate(covers):
        where = f"field 'covers'[{i}]"
        if not (isinstance(pair, list) and len(pair) == 2):
            _fail(f"expected a [lower, upper] pair, got {pair!r}", where)
        for e in pair:
            if not isinstance(e, int) or isinstance(e, bool):
                _fail(f"element ids must be integers, got {e!r}", where)
            if not 0 <= e < max(n, 0):
                _fail(f"element id {e} out of range 0..{n - 1}", where)
    labels = data.get("labels")
    if labels is not None:
        if not (isinstance(labels, list) and all(isinstance(s, str) for s in labels)):
            _fail("expected a list of strings", "field 'labels'")
    meta = data.get("meta", {})
    if not (isinstance(meta, dict) and all(isinstance(v, str) for v in meta.values())):
        _fail("expected an object with string values", "field 'meta'")
    return PosetDocument(n, [list(p) for p in covers], labels, meta)


def parse_document(text: str, strict: bool = False) -> FinitePoset:
    """Build a poset from document text.

    Redundant covers pairs are reduced away with a NormalizationWarning
    (or rejected when ``strict``).
    """
    return read_document(text).to_poset(strict=strict)


def emit_document(P: FinitePoset, meta=None) -> str:
    """Canonical document text: sorted covers, fixed field order, trailing newline."""
    return PosetDocument.from_poset(P, meta).to_text()


def _quote(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def emit_dot(P: FinitePoset, highlight=None, name="hasse") -> str:
    """Hasse diagram in DOT, bottom to top.

    Level classes share a rank.  Each set in ``highlight`` gets its own
    fill colour; an element in several sets takes the first one.
    """
    highlight = [sorted(set(h)) for h in (highlight or [])]
    for h in highlight:
        P.check(*h)
    color = {}
    for k, h in enumerate(highlight):
        for x in h:
            color.setdefault(x, HIGHLIGHT_COLORS[k % len(HIGHLIGHT_COLORS)])
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=circle];"]
    for x in range(P.n):
        attrs = [f"label={_quote(P.label(x))}"]
        if x in color:
            attrs.append(f'style=filled fillcolor="{color[x]}"')
        lines.append(f"  {x} [{' '.join(attrs)}];")
    for a, b in P.covers:
        lines.append(f"  {a} -> {b};")
    for cls in level_classes(P).classes:
        if len(cls) > 1:
            lines.append("  { rank=same; " + " ".join(f"{x};" for x in cls) + " }")
    lines.append("}")
    return "\n".join(lines) + "\n"
