"""Load graphs from edge-list files and the bundled YAML reference library."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Mapping

import yaml  # type: ignore[import-untyped]

from .parser import GraphParseError, parse_edge_list
from .types import GraphError, UndirectedGraph

logger = logging.getLogger(__name__)

GRAPH_LIBRARY_DIR = Path(__file__).resolve().parent.parent / "assets" / "graphs"


@dataclass(frozen=True, slots=True)
class GraphLibrary:
    """Named reference graphs with their descriptions."""

    graphs: Mapping[str, UndirectedGraph]
    descriptions: Mapping[str, str]


_LIBRARY_CACHE: GraphLibrary | None = None


def load_graph(filepath: str | Path, relabel: bool = False) -> UndirectedGraph:
    """Load an edge-list file.

    Raises:
        FileNotFoundError: If the file doesn't exist
        GraphParseError: If parsing fails
    """
    path = Path(filepath)
    if not path.exists():
        raise FileNotFoundError(f"Graph file not found: {filepath}")
    try:
        return parse_edge_list(path.read_text(), relabel=relabel)
    except GraphParseError as exc:
        raise GraphParseError([f"{path}: {message}" for message in exc.errors]) from exc


def load_named_graphs(reload: bool = False) -> GraphLibrary:
    """Load every reference graph definition from the asset directory."""

    global _LIBRARY_CACHE

    if not reload and _LIBRARY_CACHE is not None:
        return _LIBRARY_CACHE

    graphs: Dict[str, UndirectedGraph] = {}
    descriptions: Dict[str, str] = {}
    for name, graph, description in _parse_library():
        if name in graphs:
            raise ValueError(f"Reference graph '{name}' is defined twice")
        graphs[name] = graph
        descriptions[name] = description

    _LIBRARY_CACHE = GraphLibrary(graphs=graphs, descriptions=descriptions)
    return _LIBRARY_CACHE


def load_named_graph(name: str) -> UndirectedGraph:
    library = load_named_graphs()
    try:
        return library.graphs[name]
    except KeyError as exc:
        known = ", ".join(sorted(library.graphs))
        raise GraphError(f"Unknown reference graph '{name}' (known: {known})") from exc


def _parse_library() -> list[tuple[str, UndirectedGraph, str]]:
    if not GRAPH_LIBRARY_DIR.exists():
        raise FileNotFoundError(f"Missing graph library directory: {GRAPH_LIBRARY_DIR}")

    files = sorted(GRAPH_LIBRARY_DIR.glob("*.yaml"))
    if not files:
        raise FileNotFoundError(
            f"No graph definition files found in {GRAPH_LIBRARY_DIR}"
        )

    parsed = []
    for path in files:
        data = yaml.safe_load(path.read_text())
        if not isinstance(data, dict):
            raise ValueError(f"{path}: expected mapping at document root")

        version = data.get("version")
        if version != 1:
            raise ValueError(f"{path}: unsupported version {version!r}")

        definitions = data.get("graphs")
        if not isinstance(definitions, dict):
            raise ValueError(f"{path}: 'graphs' must be a mapping")

        for name, payload in definitions.items():
            parsed.append((name, *_parse_definition(path, name, payload)))
        logger.debug("Loaded %d reference graphs from %s", len(definitions), path)

    return parsed


def _parse_definition(
    path: Path, name: Any, payload: Any
) -> tuple[UndirectedGraph, str]:
    if not isinstance(name, str):
        raise ValueError(f"{path}: graph names must be strings")
    if not isinstance(payload, dict):
        raise ValueError(f"{path}: graph '{name}' must be a mapping")

    nodes = payload.get("nodes")
    if not isinstance(nodes, int) or nodes < 1:
        raise ValueError(f"{path}: graph '{name}' nodes must be a positive integer")

    edges = payload.get("edges")
    if not isinstance(edges, list):
        raise ValueError(f"{path}: graph '{name}' edges must be a list")
    for edge in edges:
        if (
            not isinstance(edge, list)
            or len(edge) != 2
            or not all(isinstance(node, int) for node in edge)
        ):
            raise ValueError(
                f"{path}: graph '{name}' edge {edge!r} must be a pair of integers"
            )

    description = payload.get("description", "")
    if not isinstance(description, str):
        raise ValueError(f"{path}: graph '{name}' description must be a string")

    try:
        graph = UndirectedGraph.from_edges(nodes, edges)
    except GraphError as exc:
        raise ValueError(f"{path}: graph '{name}' is invalid: {exc}") from exc
    return graph, description
