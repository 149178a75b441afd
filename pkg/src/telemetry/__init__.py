"""
Telemetry

Logging setup for library and command-line use.
"""

from src.telemetry.logs import configure_logging, verbosity_to_level

__all__ = ["configure_logging", "verbosity_to_level"]
