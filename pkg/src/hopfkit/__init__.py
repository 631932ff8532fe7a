"""hopfkit: exact finite-dimensional Hopf algebra toolkit over cyclotomic fields.

Everything is computed in exact arithmetic: rational coefficients on a power
basis of Q(zeta_N).  No floats anywhere.
"""

__version__ = "0.1.0"
