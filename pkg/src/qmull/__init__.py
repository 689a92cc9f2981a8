"""Exact computations for quantum gl(m|n) hyperalgebras at roots of unity and the Mullineux map."""

__version__ = "0.1.0"
