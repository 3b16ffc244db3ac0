"""Group corpus manifests: one spec per line, '#' comments, blank lines ignored."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import SpecError
from .spec_lang import expected_order, format_spec, parse_spec

FAMILY_MAX_ORDER = 200
PRODUCT_MAX_ORDER = 64
PRODUCT_ATOMS = ("C(2)", "C(3)", "C(4)", "C(5)", "D(6)", "D(8)", "Q(8)")


@dataclass(frozen=True)
class Entry:
    line: int
    spec: str


def family_specs() -> list[str]:
    """The shipped family corpus, in manifest order."""
    specs = [f"C({n})" for n in range(1, FAMILY_MAX_ORDER + 1)]
    specs += [f"D({n})" for n in range(2, FAMILY_MAX_ORDER + 1, 2)]
    specs += [f"Q({n})" for n in range(8, FAMILY_MAX_ORDER + 1, 4)]
    for r in (2, 3):
        for combo in itertools.combinations_with_replacement(PRODUCT_ATOMS, r):
            spec = parse_spec("x".join(combo))
            if expected_order(spec) <= PRODUCT_MAX_ORDER:
                specs.append(format_spec(spec))
    specs += [f"S({n})" for n in range(1, 6)]
    specs += [f"A({n})" for n in range(1, 6)]
    specs += ["ES(+,32)", "ES(-,32)"]
    specs += [f"EXT16({e},{f})" for e in (1, -1) for f in (0, 1)]
    return specs


def render_manifest(specs) -> str:
    header = ["# grpcensus family corpus", "# one group spec per line; '#' starts a comment", ""]
    return "\n".join(header + list(specs)) + "\n"


def parse_manifest(text: str) -> list[Entry]:
    """Parse manifest text; every bad line is reported with its number."""
    entries, errors = [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            entries.append(Entry(lineno, format_spec(parse_spec(line))))
        except SpecError as exc:
            errors.append(f"line {lineno}: {exc}")
    if errors:
        raise SpecError("; ".join(errors))
    return entries


def load_manifest(path) -> list[Entry]:
    return parse_manifest(Path(path).read_text(encoding="utf-8"))


def default_manifest_text() -> str:
    return resources.files("grpcensus").joinpath("data/families.txt").read_text(encoding="utf-8")


def default_corpus() -> list[Entry]:
    return parse_manifest(default_manifest_text())
