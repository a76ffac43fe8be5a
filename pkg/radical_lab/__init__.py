"""Exhaustive checks of envelopes, prime-type submodules and radicals of finite rings and modules."""

__version__ = "0.1.0"
