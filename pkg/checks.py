"""
Identity Check Results
======================

Result model for identity and oracle checks. Each verifying operation returns
a CheckReport holding one IdentityCheck per identity instance it tested.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional


class CheckStatus(Enum):
    """Outcome of a single identity check."""

    PASS = "PASS"
    FAIL = "FAIL"


@dataclass
class IdentityCheck:
    """Outcome of checking one identity."""

    name: str
    status: CheckStatus
    detail: str = ""
    witness: Optional[Any] = None  # failing argument, e.g. m or s
    execution_time_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status is CheckStatus.PASS

    @classmethod
    def of(cls, name: str, ok: bool, detail: str = "", witness: Optional[Any] = None) -> 'IdentityCheck':
        """Build a check from a boolean outcome."""
        return cls(
            name=name,
            status=CheckStatus.PASS if ok else CheckStatus.FAIL,
            detail=detail,
            witness=None if ok else witness,
        )

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            'name': self.name,
            'status': self.status.value,
            'detail': self.detail,
            'witness': self.witness,
        }


@dataclass
class CheckReport:
    """Checks produced by one verifying operation."""

    title: str
    checks: List[IdentityCheck] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)

    def add(self, check: IdentityCheck) -> IdentityCheck:
        self.checks.append(check)
        return check

    def extend(self, other: 'CheckReport') -> None:
        """Append every check of another report."""
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[IdentityCheck]:
        return [c for c in self.checks if not c.passed]

    def get(self, name: str) -> Optional[IdentityCheck]:
        """First check with the given name, if any."""
        for check in self.checks:
            if check.name == name:
                return check
        return None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            'title': self.title,
            'passed': self.passed,
            'checks': [c.to_dict() for c in self.checks],
            'metadata': self.metadata,
        }
