"""Light-cone and bipolar ZY ansatze for MaxCut."""

__version__ = "0.1.0"
