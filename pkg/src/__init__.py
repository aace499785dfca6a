"""einflag - certified invariant Einstein metrics on Sp(n)/(U(p) x U(n-p))."""

__version__ = "0.1.0"
__author__ = "einflag developers"
