"""Exact-arithmetic toolkit for composition algebras, cubic Jordan algebras,
the Freudenthal symplectic space, and finite-field orbit censuses."""

__version__ = "0.1.0"
