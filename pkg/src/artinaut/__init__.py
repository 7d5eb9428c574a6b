"""Word-level toolkit for automorphisms of the Artin groups of types A, B, affine A and C."""

__version__ = "0.1.0"
