"""
Backend package for ncsf.

Contains the coefficient ring, compositions and tableaux, the NSym and
QSym expression types, the immaculate poset, the commutative oracle,
the check drivers and the HTTP API.
"""
