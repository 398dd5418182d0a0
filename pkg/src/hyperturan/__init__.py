"""Turán numbers of graph expansions: operators, constructions and exhaustive search."""
