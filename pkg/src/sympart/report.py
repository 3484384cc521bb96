"""Pass/fail record shared by every verification suite."""

from dataclasses import dataclass, field
from fractions import Fraction
import json


def jsonable(value):
    """Convert Fractions, tuples and nested containers into JSON-ready values.

    Rationals (and ints appearing as values) become canonical strings only
    when they are Fractions; plain ints stay ints so counts remain numbers.
    """
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if hasattr(value, "to_dict"):
        return value.to_dict()
    return value


@dataclass
class VerificationReport:
    claim: str
    params: dict = field(default_factory=dict)
    total: int = 0
    failures: list = field(default_factory=list)

    @property
    def status(self):
        return "pass" if not self.failures else "fail"

    @property
    def passed(self):
        return not self.failures

    def check(self, ok, inputs, expected, actual):
        self.total += 1
        if not ok:
            self.failures.append(
                {"inputs": jsonable(inputs), "expected": str(expected), "actual": str(actual)}
            )
        return ok

    def check_equal(self, inputs, expected, actual):
        return self.check(expected == actual, inputs, expected, actual)

    def absorb(self, other):
        """Fold another report's counts and failures into this one."""
        self.total += other.total
        for f in other.failures:
            self.failures.append(dict(f, claim=other.claim) if other.claim != self.claim else f)
        return self

    def to_dict(self):
        return {
            "claim": self.claim,
            "params": jsonable(self.params),
            "total": self.total,
            "failures": self.failures,
            "status": self.status,
        }

    def to_json(self, indent=None):
        return json.dumps(self.to_dict(), indent=indent)

    def summary(self):
        return f"{self.claim}: {self.status} ({self.total - len(self.failures)}/{self.total})"
