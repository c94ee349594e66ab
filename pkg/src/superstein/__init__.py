"""Exact-arithmetic certification toolkit for graded algebras and their Lie superalgebras."""

__version__ = "0.1.0"
