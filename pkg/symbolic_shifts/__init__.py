"""
Django Symbolic Shifts
----------------------
Languages, minimal forbidden words, covers, periodic-point measures,
β-shifts and induced recodings of symbolic dynamical systems.
"""

__version__ = '0.1.0'
__author__ = 'tabaro'
__license__ = 'MIT'

# Import the sub-modules you need directly.
