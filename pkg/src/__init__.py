"""
qrrt - exact verification of Rogers-Ramanujan-type q-series identities.

Truncated series arithmetic in a and q, parametrized Bailey pairs and
their insertion transforms, q-difference families, partition counting
oracles and a small identity language with a shipped catalog.
"""

__version__ = "0.1.0"
