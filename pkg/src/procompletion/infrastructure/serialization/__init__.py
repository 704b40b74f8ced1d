from . import json_codec, report_codec

__all__ = [
    'json_codec',
    'report_codec'
]
