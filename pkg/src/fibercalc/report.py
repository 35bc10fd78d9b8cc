"""Check records and the report object every subcommand returns."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

PASS, FAIL, UNVERIFIED = "PASS", "FAIL", "UNVERIFIED"


@dataclass
class Check:
    id: str
    claim: str
    provenance: str        # "derived", "printed" or "data"
    status: str
    details: str = ""
    citation: str = ""


@dataclass
class Report:
    command: str
    checks: list = field(default_factory=list)
    sections: list = field(default_factory=list)   # (title, [lines])
    data: dict = field(default_factory=dict)

    def check(self, id, claim, ok, details="", provenance="derived", citation="", strict=True):
        """Record a check. A failed non-strict check is reported as UNVERIFIED."""
        if ok:
            status = PASS
        else:
            status = FAIL if strict else UNVERIFIED
        self.checks.append(Check(id, claim, provenance, status, details, citation))
        return status

    def unverified(self, id, claim, details="", provenance="printed", citation=""):
        self.checks.append(Check(id, claim, provenance, UNVERIFIED, details, citation))

    def section(self, title, lines):
        self.sections.append((title, list(lines)))

    def counts(self):
        out = {PASS: 0, FAIL: 0, UNVERIFIED: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    @property
    def exit_code(self):
        return 1 if any(c.status == FAIL for c in self.checks) else 0

    def to_text(self):
        out = [f"$ {self.command}", ""]
        for title, lines in self.sections:
            out.append(f"== {title}")
            out.extend(lines)
            out.append("")
        if self.checks:
            out.append("== checks")
            w = max(len(c.id) for c in self.checks)
            for c in self.checks:
                line = f"{c.status:<10} {c.id:<{w}}  {c.claim}"
                if c.details:
                    line += f"  [{c.details}]"
                if c.citation:
                    line += f"  ({c.citation}; {c.provenance})"
                else:
                    line += f"  ({c.provenance})"
                out.append(line)
            out.append("")
        n = self.counts()
        out.append(f"summary: {n[PASS]} passed, {n[FAIL]} failed, {n[UNVERIFIED]} unverified; "
                   f"exit {self.exit_code}")
        return "\n".join(out) + "\n"

    def to_json(self):
        obj = {
            "command": self.command,
            "checks": [asdict(c) for c in self.checks],
            "sections": [{"title": t, "lines": ls} for t, ls in self.sections],
            "data": self.data,
            "summary": {**self.counts(), "exit_code": self.exit_code},
        }
        return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def format_table(header, rows):
    rows = [[str(x) for x in r] for r in rows]
    widths = [max(len(str(h)), *(len(r[i]) for r in rows)) if rows else len(str(h))
              for i, h in enumerate(header)]
    line = "  ".join(str(h).ljust(w) for h, w in zip(header, widths))
    out = [line.rstrip(), "  ".join("-" * w for w in widths)]
    for r in rows:
        out.append("  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip())
    return out
