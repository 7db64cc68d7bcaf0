"""Command-line interface"""

from .app import build_parser, main
from .config_file import CliConfigFile, PathsConfig, load_config

__all__ = ["CliConfigFile", "PathsConfig", "build_parser", "load_config", "main"]
