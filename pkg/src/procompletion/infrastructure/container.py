"""
Dependency Injection Container
"""

from typing import Any, BinaryIO, Dict, Optional

from ..application.use_cases.check_use_case import CheckUseCase
from ..application.use_cases.lyndon_use_case import LyndonUseCase
from ..application.use_cases.malcev_use_case import MalcevUseCase
from ..application.use_cases.padic_use_case import PadicUseCase
from ..application.use_cases.series_use_case import SeriesUseCase
from ..domain.repositories.artifact_repository import ArtifactRepository
from ..shared.config.settings import Settings, get_settings

# Infrastructure implementations
from .repositories.json_artifact_repository import JsonArtifactRepository


class Container:
    """Dependency injection container"""

    def __init__(
        self,
        settings: Optional[Settings] = None,
        stdin: Optional[BinaryIO] = None,
        stdout: Optional[BinaryIO] = None,
    ):
        self._services: Dict[str, Any] = {}
        self._initialized = False
        self._settings = settings
        self._stdin = stdin
        self._stdout = stdout

    def initialize(self):
        """Initialize all services"""
        if self._initialized:
            return

        self._services['settings'] = self._settings or get_settings()

        # Initialize repositories
        self._services['artifact_repository'] = JsonArtifactRepository(self._stdin, self._stdout)

        # Initialize use cases
        repository = self._services['artifact_repository']
        self._services['lyndon_use_case'] = LyndonUseCase()
        self._services['series_use_case'] = SeriesUseCase(repository)
        self._services['check_use_case'] = CheckUseCase(repository)
        self._services['malcev_use_case'] = MalcevUseCase(repository)
        self._services['padic_use_case'] = PadicUseCase(repository, self._services['settings'])

        self._initialized = True

    def _get(self, name: str) -> Any:
        self.initialize()
        return self._services[name]

    def get_settings(self) -> Settings:
        """Get settings"""
        return self._get('settings')

    def get_artifact_repository(self) -> ArtifactRepository:
        """Get artifact repository"""
        return self._get('artifact_repository')

    def get_lyndon_use_case(self) -> LyndonUseCase:
        """Get Lyndon word use case"""
        return self._get('lyndon_use_case')

    def get_series_use_case(self) -> SeriesUseCase:
        """Get series use case"""
        return self._get('series_use_case')

    def get_check_use_case(self) -> CheckUseCase:
        """Get property check use case"""
        return self._get('check_use_case')

    def get_malcev_use_case(self) -> MalcevUseCase:
        """Get Malcev coordinates use case"""
        return self._get('malcev_use_case')

    def get_padic_use_case(self) -> PadicUseCase:
        """Get p-adic use case"""
        return self._get('padic_use_case')
