"""Exhaustive MaxCut for small graphs."""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

import numpy as np

from .. import config
from ..errors import ResourceLimitError
from ..graphs import UndirectedGraph
from .cut import CutAssignment


logger = logging.getLogger(__name__)


def brute_force_maxcut(
    graph: UndirectedGraph,
    max_nodes: Optional[int] = None,
    threads: int = 1,
) -> CutAssignment:
    """Maximum cut by enumerating the 2^(N-1) assignments with node 0 on side 0.

    Node i is bit N-1-i of the enumeration counter, so counting upward walks
    bitstrings in lexicographic order and the first optimum found is the
    lexicographically smallest one.

    Args:
        graph: Graph to solve
        max_nodes: Size cap (default from config)
        threads: Worker threads for the enumeration chunks

    Returns:
        An optimal assignment with ``is_optimal`` set

    Raises:
        ResourceLimitError: If the graph exceeds the size cap
    """
    cap = config.ORACLE_MAX_NODES if max_nodes is None else max_nodes
    n = graph.n
    if n > cap:
        raise ResourceLimitError(
            f"Brute-force MaxCut on {n} nodes exceeds the cap of {cap}", cap=cap
        )
    if n == 0:
        return CutAssignment(bits=(), cut=0, is_optimal=True)

    total = 1 << (n - 1)
    chunk = 1 << config.ORACLE_CHUNK_BITS
    starts = list(range(0, total, chunk))
    shifts = np.array([(n - 1 - i, n - 1 - j) for i, j in graph.edges], dtype=np.int64)

    def scan(start: int) -> Tuple[int, int]:
        codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
        cuts = np.zeros(codes.size, dtype=np.int64)
        for a, b in shifts:
            cuts += ((codes >> a) ^ (codes >> b)) & 1
        best = int(np.argmax(cuts))
        return int(cuts[best]), int(codes[best])

    if threads > 1 and len(starts) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results: List[Tuple[int, int]] = list(pool.map(scan, starts))
    else:
        results = [scan(start) for start in starts]

    best_cut, best_code = results[0]
    for value, code in results[1:]:
        if value > best_cut:
            best_cut, best_code = value, code

    bits = tuple((best_code >> (n - 1 - node)) & 1 for node in range(n))
    logger.debug("Brute-force MaxCut on %d nodes: %d", n, best_cut)
    return CutAssignment(bits=bits, cut=best_cut, is_optimal=True)
