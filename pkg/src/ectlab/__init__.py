"""Color-class quotients, exact coloring and planarity tooling."""

__version__ = "0.1.0"
