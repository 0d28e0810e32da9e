"""
graph6 codec for single graphs and newline-delimited streams.
Encoding and decoding go through networkx, which follows the de-facto
standard bit layout (column-wise upper triangle, 6-bit groups, offset 63).
"""

import sys
from typing import Iterable, Iterator, List

import networkx as nx

from src.logger import logging
from src.exception import CustomException, Graph6FormatError
from src.components.graph_core import Graph, from_edges
from src.utils.common import load_text_file

HEADER = ">>graph6<<"


def strip_graph6_header(g6: str) -> str:
    """
    Remove optional '>>graph6<<' header and whitespace.
    """
    s = g6.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):].strip()
    return s


def encode_graph6(g: Graph) -> str:
    """
    Encode a graph as a graph6 string (no header, no newline).

    Args:
        g: Graph to encode; vertex order is the index order

    Returns:
        str: graph6 text
    """
    try:
        data = nx.to_graph6_bytes(g.to_networkx(), nodes=list(range(g.n)), header=False)
        return data.decode("ascii").strip()
    except Exception as e:
        raise CustomException(e, sys)


def decode_graph6(text: str) -> Graph:
    """
    Decode one graph6 string.

    Args:
        text: graph6 string, optionally prefixed by the '>>graph6<<' header

    Returns:
        Graph: decoded graph on vertices 0..n-1

    Raises:
        CustomException: wrapping Graph6FormatError on malformed input
    """
    try:
        s = strip_graph6_header(text)
        if not s:
            raise Graph6FormatError("empty graph6 string")
        if s.startswith(":") or s.startswith("&"):
            raise Graph6FormatError(f"sparse6/digraph6 input is not graph6: {s[:12]!r}")
        if any(not 63 <= ord(ch) <= 126 for ch in s):
            raise Graph6FormatError(f"graph6 string {s[:20]!r} has characters outside 63..126")
        try:
            G = nx.from_graph6_bytes(s.encode("ascii"))
        except (nx.NetworkXError, ValueError, IndexError) as err:
            raise Graph6FormatError(f"malformed graph6 string {s[:20]!r}: {err}")

        n = G.number_of_nodes()
        return from_edges(n, list(G.edges()))

    except Exception as e:
        raise CustomException(e, sys)


def iter_graph6_stream(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode a newline-delimited graph6 stream, skipping blank lines."""
    for line in lines:
        if line.strip():
            yield decode_graph6(line)


def write_graph6_stream(graphs: Iterable[Graph]) -> str:
    """Encode graphs as newline-delimited graph6 text (one per line)."""
    return "".join(encode_graph6(g) + "\n" for g in graphs)


def load_graph6_file(file_path: str) -> List[Graph]:
    """
    Load every graph of a graph6 file.

    Args:
        file_path: Path to a newline-delimited graph6 file

    Returns:
        list: Decoded graphs in file order
    """
    try:
        graphs = list(iter_graph6_stream(load_text_file(file_path)))
        logging.info(f"Decoded {len(graphs)} graph(s) from {file_path}")
        return graphs
    except Exception as e:
        raise CustomException(e, sys)
