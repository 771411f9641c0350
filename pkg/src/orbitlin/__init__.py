"""Exact linear algebra over orbit-finite vector spaces of oligomorphic structures."""

__version__ = "0.1.0"
