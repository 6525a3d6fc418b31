"""Threshold and overhead laboratory for universal concatenated CSS codes."""

__version__ = "0.1.0"
