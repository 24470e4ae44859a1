"""Catalogs of skew braces and the SKB1 text format.

Format::

    SKB1
    brace <id> n <order>
    add
    <n lines of n space-separated indices>
    mul
    <n lines of n space-separated indices>
    end

Lines starting with ``#`` are ignored.  The file must end with a newline.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .brace import SkewBrace, brace_from_tables
from .errors import ParseError, SkewBraceError, ValidationError


@dataclass
class CatalogEntry:
    id: str
    brace: SkewBrace
    meta: dict[str, str] = field(default_factory=dict)

    @property
    def key(self) -> bytes:
        return self.brace.canonical_key

    @property
    def order(self) -> int:
        return self.brace.order


@dataclass
class Catalog:
    entries: list[CatalogEntry] = field(default_factory=list)

    def __iter__(self) -> Iterator[CatalogEntry]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def keys(self) -> list[bytes]:
        return [e.key for e in self.entries]

    def by_id(self, entry_id: str) -> CatalogEntry:
        for e in self.entries:
            if e.id == entry_id:
                return e
        raise KeyError(entry_id)

    @property
    def order_index(self) -> dict[int, tuple[int, int]]:
        """Order -> (start, stop) slice, assuming entries are grouped by order."""
        out: dict[int, tuple[int, int]] = {}
        for i, e in enumerate(self.entries):
            lo, _ = out.get(e.order, (i, i))
            out[e.order] = (lo, i + 1)
        return out

    def normalized(self) -> "Catalog":
        """Entries sorted by canonical key (hence by order first)."""
        return Catalog(sorted(self.entries, key=lambda e: e.key))

    def extend(self, other: Iterable[CatalogEntry]) -> "Catalog":
        return Catalog(self.entries + list(other))

    def is_well_formed(self) -> bool:
        keys = self.keys()
        return all(a < b for a, b in zip(keys, keys[1:]))


def render_catalog(catalog: Catalog) -> str:
    lines = ["SKB1"]
    for e in catalog:
        B = e.brace
        lines.append(f"brace {e.id} n {B.order}")
        lines.append("add")
        lines.extend(" ".join(str(v) for v in row) for row in B.add.table)
        lines.append("mul")
        lines.extend(" ".join(str(v) for v in row) for row in B.mul.table)
        lines.append("end")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class RawEntry:
    id: str
    order: int
    add: list[list[int]]
    mul: list[list[int]]
    line: int

    def build(self) -> SkewBrace:
        try:
            return brace_from_tables(self.add, self.mul)
        except SkewBraceError as exc:
            raise ValidationError(self.id, str(exc)) from exc


def parse_raw(text: str) -> list[RawEntry]:
    """Check the SKB1 layout and return the tables without validating them."""
    if not text.endswith("\n"):
        raise ParseError(text.count("\n") + 1, "missing final newline")
    raw = text.split("\n")[:-1]
    lines = [(i + 1, s.strip()) for i, s in enumerate(raw) if not s.lstrip().startswith("#")]
    if not lines or lines[0][1] != "SKB1":
        raise ParseError(lines[0][0] if lines else 1, "expected header SKB1")
    pos = 1
    entries: list[RawEntry] = []
    seen: set[str] = set()

    def take() -> tuple[int, str]:
        nonlocal pos
        if pos >= len(lines):
            raise ParseError(len(raw) + 1, "unexpected end of file")
        item = lines[pos]
        pos += 1
        return item

    def block(n: int, name: str) -> list[list[int]]:
        ln, s = take()
        if s != name:
            raise ParseError(ln, f"expected '{name}'")
        rows = []
        for _ in range(n):
            ln, s = take()
            try:
                row = [int(tok) for tok in s.split()]
            except ValueError:
                raise ParseError(ln, "non-integer table entry") from None
            if len(row) != n:
                raise ParseError(ln, f"expected {n} entries, found {len(row)}")
            rows.append(row)
        return rows

    while pos < len(lines):
        ln, s = take()
        if not s:
            continue
        parts = s.split()
        if len(parts) != 4 or parts[0] != "brace" or parts[2] != "n":
            raise ParseError(ln, "expected 'brace <id> n <order>'")
        entry_id = parts[1]
        if entry_id in seen:
            raise ParseError(ln, f"duplicate id {entry_id!r}")
        seen.add(entry_id)
        try:
            n = int(parts[3])
        except ValueError:
            raise ParseError(ln, "order is not an integer") from None
        if n < 1:
            raise ParseError(ln, "order must be positive")
        add = block(n, "add")
        mul = block(n, "mul")
        end_ln, s = take()
        if s != "end":
            raise ParseError(end_ln, "expected 'end'")
        entries.append(RawEntry(entry_id, n, add, mul, ln))
    return entries


def parse_catalog(text: str) -> Catalog:
    return Catalog([CatalogEntry(r.id, r.build()) for r in parse_raw(text)])


def catalog_io(path: str | Path, direction: str, catalog: Catalog | None = None) -> Catalog | None:
    path = Path(path)
    if direction == "write":
        if catalog is None:
            raise ValueError("write needs a catalog")
        path.write_text(render_catalog(catalog))
        return None
    if direction == "read":
        return parse_catalog(path.read_text())
    raise ValueError(f"unknown direction {direction!r}")


def read_catalog(path: str | Path) -> Catalog:
    return parse_catalog(Path(path).read_text())


def write_catalog(path: str | Path, catalog: Catalog) -> None:
    Path(path).write_text(render_catalog(catalog))
