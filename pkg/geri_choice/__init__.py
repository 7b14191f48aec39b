"""Generalized entropy rational inattention and random utility choice models."""

__version__ = "0.1.0"
