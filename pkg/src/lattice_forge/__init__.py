"""Finite-lattice and equational-semigroup toolkit.

Modules:

- ``lattice``: validated finite lattices with precomputed order/join/meet tables
- ``corpus``: exhaustive and seeded-random lattice generation for test sweeps
- ``classify``: neutral / modular / cancellable / lower-modular element tests
- ``harness``: mechanical sweeps of the abstract-lattice facts over corpora
- ``words``: free-semigroup words, identities, and nil normal forms
- ``semigroup``: finite semigroups as multiplication tables
- ``deduction``: bounded equational rewriting with replayable proofs
- ``variety``: generated-variety membership and desk-scale variety lattices
"""

__version__ = "0.1.0"
