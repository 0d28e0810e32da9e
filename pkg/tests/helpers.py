"""Small named graphs and hypothesis strategies shared by the test modules."""

from itertools import combinations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from src.components.graph_core import Graph, from_edges

PROPERTY_SETTINGS = settings(
    max_examples=120,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)


def path(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return from_edges(n, list(combinations(range(n), 2)))


def star(leaves: int) -> Graph:
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def octahedron() -> Graph:
    # K_{2,2,2}: antipodal pairs (0,1), (2,3), (4,5)
    antipodal = {(0, 1), (2, 3), (4, 5)}
    return from_edges(6, [e for e in combinations(range(6), 2) if e not in antipodal])


def cube() -> Graph:
    return from_edges(8, [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)])


def k33() -> Graph:
    return from_edges(6, [(u, w) for u in range(3) for w in range(3, 6)])


@st.composite
def connected_graphs(draw: st.DrawFn, min_n: int = 2, max_n: int = 9) -> Graph:
    """Random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    tree = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    extra = draw(st.lists(st.sampled_from(list(combinations(range(n), 2))), max_size=2 * n)) if n >= 2 else []
    return from_edges(n, sorted(set(tree) | set(extra)))

