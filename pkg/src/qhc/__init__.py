"""Exact verification toolkit for trigonometric highest-coefficient identities."""

__version__ = "0.1.0"
