"""Exact checks on 2-dimensional fibres of good contractions of 3- and 4-folds."""
__version__ = "0.1.0"
