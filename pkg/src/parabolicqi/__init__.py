"""Explicit maps between the type-B and type-A Artin-Tits groups, with a verification lab."""

__version__ = "0.1.0"
