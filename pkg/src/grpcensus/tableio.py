"""Plain-text Cayley tables: a header ``n=<order> label=<label>`` followed by
n rows of n space-separated indices."""
from __future__ import annotations

import numpy as np

from .core import Group, make_group
from .errors import SpecError


def dump_table(G: Group) -> str:
    lines = [f"n={G.order} label={G.label or ''}"]
    lines += [" ".join(str(int(v)) for v in row) for row in G.table]
    return "\n".join(lines) + "\n"


def dump_tables(groups) -> str:
    return "".join(dump_table(G) for G in groups)


def load_tables(text: str) -> list[Group]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    groups = []
    i = 0
    while i < len(lines):
        head = lines[i]
        if not head.startswith("n="):
            raise SpecError(f"line {i + 1}: expected a 'n=<order> label=...' header")
        size, _, rest = head[2:].partition(" ")
        n = int(size)
        label = rest.partition("label=")[2] or None
        rows = lines[i + 1:i + 1 + n]
        if len(rows) != n:
            raise SpecError(f"table at line {i + 1} is truncated")
        table = np.array([[int(x) for x in row.split()] for row in rows])
        groups.append(make_group(table, label))
        i += n + 1
    return groups
