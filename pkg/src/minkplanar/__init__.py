"""Min-k-planar drawings: drawing model, good-drawing enumeration, and the
3-Partition reduction for min-1-planarity."""

__version__ = "0.1.0"
