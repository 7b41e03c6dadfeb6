"""Python access to the kernelization library."""

from ._core import (
    MultiGraph,
    ParseError,
    ScaleGuardError,
    decide,
    generate,
    is_pitg,
    kernelize,
    parse_instance,
    replay,
    serialize_instance,
    verify,
)

__all__ = [
    "MultiGraph",
    "ParseError",
    "ScaleGuardError",
    "decide",
    "generate",
    "is_pitg",
    "kernelize",
    "parse_instance",
    "replay",
    "serialize_instance",
    "verify",
]
