"""Dual-graph invariants of rational surface singularities."""
__version__ = "0.1.0"
