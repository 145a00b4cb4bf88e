"""Exact computations in the order-120 quaternionic reflection group.

The package builds the group from its generator matrices over quaternions
with golden-field coefficients, enumerates its roots and reflections,
computes its character table and branching rules, certifies the small
generated matrix algebras, runs the conjugation-orbit censuses, and checks
a handful of floating-point numerical coincidences.  The `icosian verify`
command re-derives every quantitative claim.
"""

__version__ = "0.1.0"
