"""Graded Betti tables: sparse (homological index, degree) -> count maps,
tagged as describing an ideal I or its quotient R/I."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .errors import BadParams, ParseError

KINDS = ("ideal", "quotient")


@dataclass(frozen=True)
class BettiTable:
    kind: str
    entries: Dict[Tuple[int, int], int]

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BadParams(f"kind must be one of {KINDS}")
        object.__setattr__(
            self, "entries", {k: v for k, v in self.entries.items() if v}
        )

    def entry(self, r: int, d: int) -> int:
        return self.entries.get((r, d), 0)

    def items(self):
        return sorted(self.entries.items())

    def pdim(self) -> Optional[int]:
        if not self.entries:
            return None
        return max(r for r, _ in self.entries)

    def reg(self) -> Optional[int]:
        if not self.entries:
            return None
        return max(d - r for r, d in self.entries)

    def to_kind(self, kind: str) -> "BettiTable":
        return shift_kind(self, kind)

    def triangle(self) -> str:
        """Macaulay-style Betti triangle: rows d-r, columns r."""
        if not self.entries:
            return "(empty table)"
        cols = self.pdim() + 1
        rows = self.reg() + 1
        grid = [["." for _ in range(cols)] for _ in range(rows)]
        for (r, d), v in self.entries.items():
            grid[d - r][r] = str(v)
        widths = [
            max(len(str(c)), max(len(grid[s][c]) for s in range(rows)))
            for c in range(cols)
        ]
        head = "      " + "  ".join(str(c).rjust(widths[c]) for c in range(cols))
        lines = [head]
        for s in range(rows):
            cells = "  ".join(grid[s][c].rjust(widths[c]) for c in range(cols))
            lines.append(f"{s:>4}: {cells}")
        return "\n".join(lines)


def shift_kind(table: BettiTable, to: str) -> BettiTable:
    """Reindex between ideal and quotient tables: beta_{i,j}(I) =
    beta_{i+1,j}(R/I); the quotient gains/drops the (0,0) -> 1 entry."""
    if to not in KINDS:
        raise BadParams(f"kind must be one of {KINDS}")
    if to == table.kind:
        return table
    if to == "ideal":
        entries = {(r - 1, d): v for (r, d), v in table.entries.items() if (r, d) != (0, 0)}
    else:
        entries = {(r + 1, d): v for (r, d), v in table.entries.items()}
        entries[(0, 0)] = 1
    return BettiTable(to, entries)


def table_to_json_obj(table: BettiTable) -> dict:
    return {
        "kind": table.kind,
        "entries": [{"i": r, "j": d, "value": v} for (r, d), v in table.items()],
    }


def table_from_json_obj(obj: dict) -> BettiTable:
    try:
        kind = obj["kind"]
        entries = {(int(e["i"]), int(e["j"])): int(e["value"]) for e in obj["entries"]}
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed Betti table object: {exc}") from None
    return BettiTable(kind, entries)
