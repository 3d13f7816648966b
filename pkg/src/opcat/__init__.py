"""Operadic categories built from operads, with computational probes of
Gröbner and Noetherian properties of their module categories."""

__version__ = "0.1.0"
