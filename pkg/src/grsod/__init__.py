"""Equivariant cohomology, Ext and K-theory on Grassmannians, with checks for
lattice-path semi-orthogonal decompositions of D^b(Gr(k, n))."""

__version__ = "0.1.0"
