from typing import Optional, Any
from .base import ProCompletionError


class ValidationError(ProCompletionError):
    """Exception raised for invalid user input"""

    def __init__(self, message: str, field: Optional[str] = None, value: Optional[Any] = None):
        super().__init__(message, "VALIDATION_ERROR")
        self.field = field
        self.value = value
        if field:
            self.details["field"] = field
        if value is not None:
            self.details["value"] = str(value)


class ParseError(ValidationError):
    """Exception raised when text or JSON input cannot be parsed"""

    def __init__(self, message: str, source: Optional[str] = None):
        super().__init__(message)
        self.error_code = "PARSE_ERROR"
        self.source = source
        if source:
            self.details["source"] = source
