"""Algorithms on truncated series: coproducts, Lie bases, Malcev coordinates, open subgroups."""
