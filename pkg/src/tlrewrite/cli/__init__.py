"""
tl - command line front end.
"""

from .main import cli, main

__all__ = ["cli", "main"]
