"""Scattering by a small disk inclusion for the 2-D Helmholtz equation."""

__version__ = "0.1.0"
