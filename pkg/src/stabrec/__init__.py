"""Exact workbench for Pauli stabilizer codes.

Builds lattice stabilizer models (cluster, toric, X-cube, Haah's code),
computes entanglement entropy of stabilizer eigenstates, and evaluates
recoverable information for bipartitions by three independent methods,
all in exact GF(2) arithmetic.

Submodules: f2core, pauli, models, regions, entropy, constraints,
recinfo, polyring, cli.
"""
