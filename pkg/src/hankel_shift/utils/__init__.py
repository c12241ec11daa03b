"""Utility helpers for hankel_shift.

Expose submodules so documentation tooling and griffe can discover
`hankel_shift.utils.formats` reliably.
"""
from . import formats

__all__ = ["formats"]
