from .settings import Settings, get_settings
from .constants import Constants, Coproduct
from .log_setup import setup_logging

__all__ = [
    'Settings',
    'get_settings',
    'Constants',
    'Coproduct',
    'setup_logging'
]
