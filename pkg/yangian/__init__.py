"""
Irreducibility of tensor products of Yangian evaluation modules
"""

__version__ = "1.0.0"
