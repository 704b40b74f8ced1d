from dataclasses import dataclass, field
from typing import Any, List


@dataclass
class CommandResult:
    """Outcome of one command: a JSON payload, an optional text rendering and a verdict"""
    payload: Any
    holds: bool = True
    lines: List[str] = field(default_factory=list)
