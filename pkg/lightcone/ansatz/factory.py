"""Factory for building circuits from command-line level names."""

from __future__ import annotations

import logging
from typing import Optional

from ..graphs import UndirectedGraph, is_biconnected
from ..orientation import (
    OrientedDag,
    bipolar_orientation_bfs,
    bipolar_orientation_dfs,
    orient_by_blocks,
)
from .builders import build_bipolar_zy, build_lightcone_zy, build_qaoa, build_ry
from .types import AnsatzCircuit, AnsatzError, SchemeVariant

logger = logging.getLogger(__name__)

ANSATZ_KINDS = ("bipolar-zy", "lightcone-zy", "qaoa", "ry")
ORIENTATION_METHODS = ("dfs", "bfs")


class AnsatzFactoryError(AnsatzError):
    """Exception raised when an ansatz cannot be created from its description."""

    pass


class AnsatzFactory:
    """Factory for creating circuits from an ansatz name and options."""

    def create(
        self,
        kind: str,
        graph: UndirectedGraph,
        p: int = 1,
        scheme: str = "uniform",
        root: Optional[int] = None,
        sink: Optional[int] = None,
        orientation: str = "dfs",
    ) -> AnsatzCircuit:
        """Create a circuit.

        Args:
            kind: One of bipolar-zy, lightcone-zy, qaoa, ry
            graph: Problem graph
            p: Number of rounds (ignored by ry)
            scheme: Parameter scheme name for the ZY ansätze
            root: Source of the bipolar orientation or root of the light cone
                (default 0)
            sink: Sink of the bipolar orientation (default: smallest neighbour
                of the source)
            orientation: Bipolar st-ordering, "dfs" or "bfs"

        Returns:
            The built circuit

        Raises:
            AnsatzFactoryError: If the kind or an option is unknown or invalid
        """
        start = 0 if root is None else root
        if kind == "bipolar-zy":
            dag = self.orient(graph, start, sink, orientation)
            return build_bipolar_zy(dag, p, SchemeVariant.from_string(scheme))
        elif kind == "lightcone-zy":
            return build_lightcone_zy(
                graph, start, p, SchemeVariant.from_string(scheme)
            )
        elif kind == "qaoa":
            return build_qaoa(graph, p)
        elif kind == "ry":
            return build_ry(graph)

        raise AnsatzFactoryError(
            f"Unknown ansatz '{kind}' (expected one of {', '.join(ANSATZ_KINDS)})"
        )

    def orient(
        self,
        graph: UndirectedGraph,
        source: int,
        sink: Optional[int] = None,
        method: str = "dfs",
    ) -> OrientedDag:
        """Bipolar orientation, or block-wise orientation for non-biconnected graphs."""
        if method not in ORIENTATION_METHODS:
            raise AnsatzFactoryError(
                f"Unknown orientation method '{method}' (expected dfs or bfs)"
            )
        if not 0 <= source < graph.n:
            raise AnsatzFactoryError(f"Source {source} is not a node of the graph")

        if not is_biconnected(graph):
            logger.warning(
                "Graph is not biconnected; orienting block by block from node %d",
                source,
            )
            return orient_by_blocks(graph, source)

        if sink is None:
            sink = graph.neighbors(source)[0]
        if method == "bfs":
            return bipolar_orientation_bfs(graph, source, sink)
        return bipolar_orientation_dfs(graph, source, sink)
