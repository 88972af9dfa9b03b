"""Exact-arithmetic toolkit for Weil cohomology reports and zeta special values.

Subpackages build on each other in order: exact integer/rational linear
algebra (exactalg), chain-level constructions on modules with a Frobenius
automorphism (chainlab), the Frobenius-module data model (frobmod), Weil
cohomology reports (weilcoh), zeta-function special values (zetaval), and
the command line front end (cli).
"""

__version__ = "0.1.0"
