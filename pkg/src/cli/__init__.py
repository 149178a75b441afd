"""Command-line interface."""

from src.cli.main import ExitCode, build_parser, main, run

__all__ = ["ExitCode", "build_parser", "main", "run"]
