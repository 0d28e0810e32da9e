"""
Vertex connectivity with certified minimum cuts.
kappa comes from networkx's flow-based node connectivity (Even's
auxiliary digraph with unit vertex capacities); the witness cut is the
lexicographically least separator of that size whenever the subset scan
is affordable. A subset-enumeration oracle is kept for cross-checks.
"""

import sys
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Tuple

import networkx as nx

from src.logger import logging
from src.exception import ConnectivityDomainError, CustomException, GraphOrderError
from src.components.graph_core import Graph, is_connected
from src.utils.config import get_config


@dataclass(frozen=True)
class ConnectivityResult:
    kappa: int
    witness_cut: Optional[Tuple[int, ...]]
    method: str
    min_degree: int


def verify_cut(g: Graph, cut: Iterable[int]) -> bool:
    """True iff removing ``cut`` leaves a disconnected graph."""
    rest, _ = g.without_vertices(cut)
    return rest.n >= 2 and not is_connected(rest)


def _least_cut(g: Graph, kappa: int, limit: int) -> Tuple[Tuple[int, ...], str]:
    if comb(g.n, kappa) <= limit:
        for cut in combinations(range(g.n), kappa):
            if verify_cut(g, cut):
                return cut, "lexicographic"
    cut = tuple(sorted(nx.minimum_node_cut(g.to_networkx())))
    return cut, "flow"


def vertex_connectivity(g: Graph, witness: bool = True) -> ConnectivityResult:
    """
    Exact vertex connectivity.

    Args:
        g: Graph of order n >= 2
        witness: Also compute a minimum cut (skipped in bulk sweeps)

    Returns:
        ConnectivityResult: kappa, the witness cut (None for complete
        graphs or when not requested) and the method tag 'flow'
    """
    try:
        if g.n < 2:
            raise GraphOrderError(f"connectivity needs n >= 2, got n = {g.n}")

        delta = g.min_degree()
        if not is_connected(g):
            return ConnectivityResult(kappa=0, witness_cut=(), method="flow", min_degree=delta)
        if g.is_complete():
            return ConnectivityResult(kappa=g.n - 1, witness_cut=None, method="flow", min_degree=delta)

        kappa = int(nx.node_connectivity(g.to_networkx()))
        cut = None
        if witness:
            cut, how = _least_cut(g, kappa, get_config().witness_search_limit())
            if len(cut) != kappa or not verify_cut(g, cut):
                raise RuntimeError(f"witness cut {cut} failed the removal test for kappa = {kappa}")
            logging.debug(f"kappa = {kappa}, witness {cut} ({how})")

        return ConnectivityResult(kappa=kappa, witness_cut=cut, method="flow", min_degree=delta)

    except Exception as e:
        raise CustomException(e, sys)


def brute_force_connectivity(g: Graph) -> ConnectivityResult:
    """
    Minimum separator by enumerating vertex subsets in increasing size.

    Args:
        g: Graph of order n >= 2 (meant for n <= connectivity.brute_force_max_n)

    Returns:
        ConnectivityResult: method 'brute', lexicographically least cut
    """
    try:
        if g.n < 2:
            raise GraphOrderError(f"connectivity needs n >= 2, got n = {g.n}")
        if g.n > get_config().brute_force_max_n():
            logging.warning(f"Brute-force connectivity on n = {g.n} exceeds the configured oracle limit")

        delta = g.min_degree()
        if not is_connected(g):
            return ConnectivityResult(kappa=0, witness_cut=(), method="brute", min_degree=delta)
        if g.is_complete():
            return ConnectivityResult(kappa=g.n - 1, witness_cut=None, method="brute", min_degree=delta)

        for size in range(1, g.n - 1):
            for cut in combinations(range(g.n), size):
                if verify_cut(g, cut):
                    return ConnectivityResult(kappa=size, witness_cut=cut, method="brute", min_degree=delta)

        raise RuntimeError("non-complete graph without a separator")

    except Exception as e:
        raise CustomException(e, sys)


def is_k_connected(g: Graph, k: int) -> bool:
    """
    True iff kappa(g) >= k.

    Args:
        g: Graph
        k: Connectivity threshold, must satisfy k < n

    Returns:
        bool
    """
    try:
        if k >= g.n:
            raise ConnectivityDomainError(f"{k}-connectivity is undefined for a graph of order {g.n}")
        if k <= 0:
            return True
        if g.min_degree() < k or not is_connected(g):
            return False
        return vertex_connectivity(g, witness=False).kappa >= k

    except Exception as e:
        raise CustomException(e, sys)
