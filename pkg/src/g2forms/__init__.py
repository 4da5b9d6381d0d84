"""Exact and numerical tools for the exceptional group G2: octonions, its Lie algebra,
the Heisenberg parabolic, cubic rings, local zeta identities and Whittaker functions."""
from __future__ import annotations

__version__ = "0.1.0"
