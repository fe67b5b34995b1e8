"""Physical constants, Gaussian (CGS) units.

Single authority for unit-sensitive numbers. Everything else imports
from here instead of redefining.
"""

import math

# speed of light, cm/s
C_LIGHT = 2.99792458e10

# reduced Planck constant, erg s  (CODATA 2018 exact-definition value)
HBAR = 1.054571817e-27

FOUR_PI = 4.0 * math.pi
