from .base import ProCompletionError


class RepositoryError(ProCompletionError):
    """Exception raised when a document cannot be read or written"""

    def __init__(self, message: str):
        super().__init__(message, "REPOSITORY_ERROR")
