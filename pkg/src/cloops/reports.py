"""Theorem verdicts and their serialization."""
from __future__ import annotations

from dataclasses import dataclass, field

from .core import LoopTable

VERDICTS = ("holds", "violated", "vacuous", "refutation-not-found")


@dataclass
class TheoremReport:
    id: str
    verdict: str
    counts: tuple = (0, 0, 0)  # (swept, hypothesis holds, conclusion holds)
    witness: tuple | None = None  # (LoopTable, detail)
    parts: list["TheoremReport"] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    @property
    def ok(self) -> bool:
        return self.verdict != "violated"

    def witness_table(self) -> LoopTable | None:
        return None if self.witness is None else self.witness[0]

    def summary_line(self) -> str:
        swept, hyp, concl = self.counts
        return f"{self.id:<24} {self.verdict:<21} swept={swept} hypothesis={hyp} conclusion={concl}"

    def to_text(self, indent: str = "") -> str:
        lines = [indent + self.summary_line()]
        for note in self.notes:
            lines.append(f"{indent}  note: {note}")
        if self.witness is not None:
            table, detail = self.witness
            lines.append(f"{indent}  witness: {detail}")
            lines.extend(f"{indent}    {' '.join(map(str, row))}" for row in table.rows)
        for part in self.parts:
            lines.append(part.to_text(indent + "  "))
        return "\n".join(lines)

    def to_records(self) -> list[str]:
        """One ``key=value`` line for this report and one per part.

        Values never contain spaces.  A witness table is the Cayley text
        format with ``;`` for line breaks and ``,`` between entries.
        """
        swept, hyp, concl = self.counts
        fields = [
            f"id={self.id}",
            f"verdict={self.verdict}",
            f"swept={swept}",
            f"hypothesis={hyp}",
            f"conclusion={concl}",
        ]
        if self.witness is not None:
            table, detail = self.witness
            fields.append(f"witness={str(detail).replace(' ', '')}")
            body = ";".join([str(table.n)] + [",".join(map(str, r)) for r in table.rows])
            fields.append(f"witness_table={body}")
        if self.notes:
            fields.append("notes=" + "|".join(n.replace(" ", "_") for n in self.notes))
        out = [" ".join(fields)]
        for part in self.parts:
            out.extend(part.to_records())
        return out
