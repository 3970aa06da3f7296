"""Exact Apery-like sequences and a congruence verification harness."""

__version__ = "0.1.0"
