"""Exact finite-geometry checks for Bose and Bruck-Bose representations."""

__version__ = "0.1.0"
