"""Cycle diagnostics: capped simple-cycle counting and girth."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import islice

import networkx as nx

from .. import config
from .types import UndirectedGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class CycleCount:
    """Number of simple cycles, or the cap when enumeration stopped early."""

    count: int
    exceeded: bool
    cap: int

    def __str__(self) -> str:
        return f">={self.cap}" if self.exceeded else str(self.count)


def count_simple_cycles(graph: UndirectedGraph, cap: int | None = None) -> CycleCount:
    """Count simple cycles (length >= 3) of an undirected graph.

    Enumeration stops once ``cap`` cycles have been seen; that outcome is
    reported through ``exceeded`` rather than raised.
    """
    limit = config.CYCLE_CAP if cap is None else cap
    cycles = nx.simple_cycles(graph.to_networkx())
    count = sum(1 for _ in islice(cycles, limit + 1))
    if count > limit:
        logger.warning("Cycle enumeration stopped at the cap of %d", limit)
        return CycleCount(count=limit, exceeded=True, cap=limit)
    return CycleCount(count=count, exceeded=False, cap=limit)


def cycle_space_dimension(graph: UndirectedGraph) -> int:
    """M - N + (number of connected components)."""
    components = nx.number_connected_components(graph.to_networkx()) if graph.n else 0
    return graph.m - graph.n + components


def girth(graph: UndirectedGraph) -> float:
    """Length of the shortest cycle, ``inf`` for forests."""
    return float(nx.girth(graph.to_networkx()))
