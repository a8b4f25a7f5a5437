"""
ncsf: immaculate and Hall-Littlewood bases of NSym and QSym.

The package computes exactly over Z[q] with the complete homogeneous
basis of NSym and the monomial basis of QSym as pivots.  The algebra
lives in ``ncsf.backend``, the command line in ``ncsf.frontend``.
"""
