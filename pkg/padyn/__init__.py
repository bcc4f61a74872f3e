"""
padyn - arithmetic dynamics of rational maps over Q
Certified canonical heights, p-adic reduction diagnostics, periodic points and
totally p-adic membership tests
"""

__version__ = "1.0.0"
