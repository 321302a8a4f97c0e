"""Shortcuts for building catalog algebras in tests."""

from fractions import Fraction

from novikov_lab.catalog import get_entry


def algebra(entry_id, *args, check=True):
    """Instantiate a catalog entry with positional parameter values."""
    entry = get_entry(entry_id)
    bindings = {p: Fraction(v) for p, v in zip(entry.params, args)}
    return entry.instantiate(bindings, check=check)


def vec(*xs):
    return tuple(Fraction(x) for x in xs)
