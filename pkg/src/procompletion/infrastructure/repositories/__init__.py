from .json_artifact_repository import JsonArtifactRepository

__all__ = [
    'JsonArtifactRepository'
]
