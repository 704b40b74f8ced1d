from .app import CliApplication, build_parser, main

__all__ = [
    'CliApplication',
    'build_parser',
    'main'
]
