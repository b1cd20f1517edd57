from src.cli.schema import PhiConfig, NormConfig, SpaceConfig, Space, parse_document, to_space, to_document, load_document
from src.cli.builtin import build_space, builtin_names, parse_b
from src.cli.commands import COMMANDS, load_space
from src.cli.app import build_parser, main

__all__ = [
    "PhiConfig",
    "NormConfig",
    "SpaceConfig",
    "Space",
    "parse_document",
    "to_space",
    "to_document",
    "load_document",
    "build_space",
    "builtin_names",
    "parse_b",
    "COMMANDS",
    "load_space",
    "build_parser",
    "main",
]
