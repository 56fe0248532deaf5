"""State sums of oriented singular 4-manifolds from finite prefusion 2-category data."""

__version__ = "0.1.0"
