"""H-products of partitioned graphs, threshold representations and threshold-width."""

__version__ = "0.1.0"
