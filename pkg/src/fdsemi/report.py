from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of a check: how many cases ran and which ones failed."""

    name: str
    cases: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def fail(self, message):
        self.failures.append(message)

    def check(self, condition, message):
        self.cases += 1
        if not condition:
            self.failures.append(message)
        return condition

    def absorb(self, other, prefix=None):
        prefix = prefix or other.name
        self.cases += other.cases
        self.failures.extend(f"{prefix}: {f}" for f in other.failures)
        self.notes.extend(f"{prefix}: {n}" for n in other.notes)

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, "cases": self.cases,
                "failures": list(self.failures), "notes": list(self.notes)}

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{status} {self.name} ({self.cases} cases)"]
        lines += [f"  note: {n}" for n in self.notes]
        lines += [f"  witness: {f}" for f in self.failures[:20]]
        if len(self.failures) > 20:
            lines.append(f"  ... {len(self.failures) - 20} more")
        return "\n".join(lines)
