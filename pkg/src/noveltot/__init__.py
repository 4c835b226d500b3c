"""noveltot: width-based planning and thought-tree search with novelty pruning."""

__version__ = "0.1.0"
