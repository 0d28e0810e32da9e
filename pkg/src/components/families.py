"""
Extremal family generators.
Each construction is built deterministically with a label map
(b_0, a_i, b_i, c_i, ... or b_0, x{i}_{j}, m_{j}, ...) and paired with its
closed-form invariants so generated graphs can be cross-checked against
an independent distance computation.
"""

import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from src.logger import logging
from src.exception import CustomException, InadmissibleSpecError
from src.components.graph_core import Graph, from_edges

FAMILY_NAMES = ("T", "Q", "MOP", "Gnk", "GnkBar", "DiamExtremal")

STATED = "paper-stated"
DISCREPANCY = "known-discrepancy"
DERIVED = "derived"


@dataclass(frozen=True)
class FamilySpec:
    name: str
    n: int
    kappa: Optional[int] = None
    d: Optional[int] = None

    def validate(self) -> None:
        """Raise InadmissibleSpecError naming the violated congruence or range."""
        name, n, kappa, d = self.name, self.n, self.kappa, self.d
        if name not in FAMILY_NAMES:
            raise InadmissibleSpecError(f"unknown family {name!r}; expected one of {', '.join(FAMILY_NAMES)}")
        if name == "T":
            if n < 11 or n % 6 != 5:
                raise InadmissibleSpecError(f"T needs n = 5 (mod 6) and n >= 11, got n = {n}", field="n")
        elif name in ("Q", "MOP"):
            if n < 8 or n % 4 != 0:
                raise InadmissibleSpecError(f"{name} needs n = 0 (mod 4) and n >= 8, got n = {n}", field="n")
        else:
            if kappa is None or kappa < 1:
                raise InadmissibleSpecError(f"{name} needs kappa >= 1, got {kappa}", field="kappa")
            if name in ("Gnk", "GnkBar"):
                if n < kappa + 2 or n % (2 * kappa) != (kappa + 2) % (2 * kappa):
                    raise InadmissibleSpecError(
                        f"{name} needs n = kappa + 2 (mod 2 kappa), got n = {n}, kappa = {kappa}", field="n"
                    )
            else:
                if d is None or d < 2:
                    raise InadmissibleSpecError(f"DiamExtremal needs d >= 2, got {d}", field="d")
                if kappa * (d - 1) > n - 2:
                    raise InadmissibleSpecError(
                        f"DiamExtremal needs d <= (n - 2)/kappa + 1, got n = {n}, d = {d}, kappa = {kappa}",
                        field="d",
                    )

    def label_map(self) -> Tuple[str, ...]:
        return generate(self).labels


@dataclass(frozen=True)
class ClosedForms:
    """
    Stated invariants of a family member.

    Fields tagged known-discrepancy keep the printed formula's value in the
    main field and the independently verified value in ``corrections``.
    """

    family: FamilySpec
    rad: Fraction
    diam: Fraction
    pi: Fraction
    rho: Fraction
    provenance: Dict[str, str]
    named_vertices: Dict[str, str] = field(default_factory=dict)
    corrections: Dict[str, Fraction] = field(default_factory=dict)

    def expected(self, name: str) -> Fraction:
        """Value a correct implementation must reproduce."""
        return self.corrections.get(name, getattr(self, name))


def complete_graph(k: int, labels: Optional[Sequence[str]] = None) -> Graph:
    return from_edges(k, [(u, w) for u in range(k) for w in range(u + 1, k)], labels=labels)


def empty_graph(k: int, labels: Optional[Sequence[str]] = None) -> Graph:
    return from_edges(k, [], labels=labels)


def sequential_sum(parts: List[Graph]) -> Graph:
    """
    Sequential sum G_1 + G_2 + ... + G_k.

    Args:
        parts: Non-empty list of graphs

    Returns:
        Graph: disjoint union plus every edge between consecutive parts;
        labels are concatenated when every part carries them
    """
    try:
        if not parts:
            raise InadmissibleSpecError("sequential sum needs at least one part", field="parts")

        edges, offsets, start = [], [], 0
        for part in parts:
            offsets.append(start)
            edges.extend((start + u, start + w) for u, w in part.edges())
            start += part.n

        for i in range(len(parts) - 1):
            left, right = offsets[i], offsets[i + 1]
            edges.extend(
                (left + u, right + w) for u in range(parts[i].n) for w in range(parts[i + 1].n)
            )

        labels = None
        if all(part.labels is not None for part in parts):
            labels = [lab for part in parts for lab in part.labels]
        return from_edges(start, edges, labels=labels)

    except Exception as e:
        raise CustomException(e, sys)


def _t_graph(n: int) -> Graph:
    k = (n - 2) // 3
    labels = ["b_0"] + [f"{c}_{i}" for i in range(1, k + 1) for c in "abc"] + [f"b_{k + 1}"]
    idx = {lab: v for v, lab in enumerate(labels)}

    def e(x, y):
        return idx[x], idx[y]

    edges = []
    for i in range(1, k + 1):
        edges += [e(f"a_{i}", f"b_{i}"), e(f"b_{i}", f"c_{i}"), e(f"a_{i}", f"c_{i}")]
    # b_0 to the first triangle appears twice in the construction; the
    # repeated edges are collapsed by from_edges
    edges += [e("b_0", "a_1"), e("b_0", "b_1"), e("b_0", "c_1")] * 2
    for i in range(1, k):
        edges += [
            e(f"a_{i}", f"a_{i + 1}"), e(f"b_{i}", f"b_{i + 1}"),
            e(f"c_{i}", f"c_{i + 1}"), e(f"c_{i}", f"a_{i + 1}"),
        ]
    for i in range(1, (k - 1) // 2 + 1):
        edges += [e(f"a_{i}", f"b_{i + 1}"), e(f"c_{i}", f"b_{i + 1}")]
    for i in range((k + 1) // 2, k):
        edges += [e(f"b_{i}", f"a_{i + 1}"), e(f"b_{i}", f"c_{i + 1}")]
    edges += [e(f"{c}_{k}", f"b_{k + 1}") for c in "abc"]
    return from_edges(n, edges, labels=labels)


def _mop_graph(n: int) -> Graph:
    k = (n - 2) // 2
    labels = ["b_0"] + [f"{c}_{i}" for i in range(1, k + 1) for c in "ab"] + [f"b_{k + 1}"]
    idx = {lab: v for v, lab in enumerate(labels)}

    def e(x, y):
        return idx[x], idx[y]

    edges = [e(f"a_{i}", f"b_{i}") for i in range(1, k + 1)]
    edges += [e("b_0", "a_1"), e("b_0", "b_1")]
    for i in range(1, k):
        edges += [e(f"a_{i}", f"a_{i + 1}"), e(f"b_{i}", f"b_{i + 1}")]
    edges += [e(f"a_{i}", f"b_{i + 1}") for i in range(1, (k - 1) // 2 + 1)]
    edges += [e(f"b_{i}", f"a_{i + 1}") for i in range((k + 1) // 2, k)]
    edges += [e(f"a_{k}", f"b_{k + 1}"), e(f"b_{k}", f"b_{k + 1}")]
    return from_edges(n, edges, labels=labels)


def _layer(kind: str, size: int, labels: Sequence[str]) -> Graph:
    return complete_graph(size, labels) if kind == "clique" else empty_graph(size, labels)


def _layered(n: int, kappa: int, kind: str) -> Graph:
    ell = (n - 2) // kappa
    parts = [complete_graph(1, ["b_0"])]
    parts += [_layer(kind, kappa, [f"x{i}_{j}" for j in range(1, kappa + 1)]) for i in range(1, ell + 1)]
    parts.append(complete_graph(1, [f"b_{ell + 1}"]))
    return sequential_sum(parts)


def _q_graph(n: int) -> Graph:
    # K_1 + [co-K_2]^k + K_1 with k = (n - 2)/2, so that the order is 2k + 2 = n
    k = (n - 2) // 2
    parts = [complete_graph(1, ["b_0"])]
    parts += [empty_graph(2, [f"a_{i}", f"b_{i}"]) for i in range(1, k + 1)]
    parts.append(complete_graph(1, [f"b_{k + 1}"]))
    return sequential_sum(parts)


def _diam_layers(n: int, d: int, kappa: int) -> List[Tuple[str, int]]:
    """(kind, size) of every part, b_0 first; the middle part is tagged 'middle'."""
    middle = n - kappa * (d - 2) - 2
    if d % 2 == 0:
        left = right = d // 2 - 1
    else:
        left, right = (d - 1) // 2, (d - 1) // 2 - 1
    return [("end", 1)] + [("layer", kappa)] * left + [("middle", middle)] + [("layer", kappa)] * right + [("end", 1)]


def _diam_extremal(n: int, d: int, kappa: int) -> Graph:
    parts = []
    for p, (kind, size) in enumerate(_diam_layers(n, d, kappa)):
        if kind == "end":
            labels = [f"b_{p}"]
        elif kind == "middle":
            labels = [f"m_{j}" for j in range(1, size + 1)]
        else:
            labels = [f"x{p}_{j}" for j in range(1, size + 1)]
        parts.append(complete_graph(size, labels))
    return sequential_sum(parts)


def generate(spec: FamilySpec) -> Graph:
    """
    Build a family member.

    Args:
        spec: Admissible FamilySpec

    Returns:
        Graph: labelled graph of order spec.n

    Raises:
        CustomException: wrapping InadmissibleSpecError
    """
    try:
        spec.validate()
        if spec.name == "T":
            g = _t_graph(spec.n)
        elif spec.name == "MOP":
            g = _mop_graph(spec.n)
        elif spec.name == "Q":
            g = _q_graph(spec.n)
        elif spec.name == "Gnk":
            g = _layered(spec.n, spec.kappa, "clique")
        elif spec.name == "GnkBar":
            g = _layered(spec.n, spec.kappa, "independent")
        else:
            g = _diam_extremal(spec.n, spec.d, spec.kappa)

        if g.n != spec.n:
            raise RuntimeError(f"{spec} generated a graph of order {g.n}")
        logging.info(f"Generated {spec.name}(n={spec.n}, kappa={spec.kappa}, d={spec.d}): m = {g.edge_count}")
        return g

    except Exception as e:
        raise CustomException(e, sys)


def _f(x) -> Fraction:
    return Fraction(x)


def _layer_status(sizes: Sequence[int], cliques: bool, p: int) -> int:
    """Status of a vertex in part p of a sequential sum with the given part sizes."""
    total = sum(abs(q - p) * size for q, size in enumerate(sizes) if q != p)
    return total + (sizes[p] - 1) * (1 if cliques else 2)


def closed_forms(spec: FamilySpec) -> ClosedForms:
    """
    Closed-form rad, diam, pi and rho of a family member.

    Args:
        spec: Admissible FamilySpec

    Returns:
        ClosedForms: exact rationals with per-field provenance
    """
    try:
        spec.validate()
        n = spec.n
        N = _f(n)
        stated = {key: STATED for key in ("rad", "diam", "pi", "rho")}

        if spec.name == "T":
            k = (n - 2) // 3
            return ClosedForms(
                family=spec,
                rad=(N + 1) / 6,
                diam=(N + 1) / 3,
                pi=(N + 1) / 12 + Fraction(2, n - 1),
                rho=(N + 2) / 6 + Fraction(1, 3 * (n - 1)),
                provenance=stated,
                named_vertices={"pi": f"b_{(k + 1) // 2}", "rho": "b_0"},
            )

        if spec.name == "MOP":
            k = (n - 2) // 2
            return ClosedForms(
                family=spec,
                rad=N / 4,
                diam=N / 2,
                pi=(N + 1) / 8 + Fraction(9, 8 * (n - 1)),
                rho=(N + 1) / 4 + Fraction(1, 4 * (n - 1)),
                provenance=stated,
                named_vertices={"pi": f"b_{(k + 1) // 2}", "rho": "b_0"},
            )

        if spec.name == "Q":
            k = (n - 2) // 2
            return ClosedForms(
                family=spec,
                rad=N / 4,
                diam=N / 2,
                pi=(N + 17) / 8 + Fraction(17, 8 * (n - 1)),
                rho=(N + 1) / 4 + Fraction(1, 4 * (n - 1)),
                provenance={**stated, "pi": DISCREPANCY},
                named_vertices={"pi": f"b_{(k + 1) // 2}", "rho": "b_0"},
                # Q_n coincides with GnkBar(n, 2)
                corrections={"pi": (N + 1) / 8 + Fraction(17, 8 * (n - 1))},
            )

        kappa = spec.kappa
        K = _f(kappa)

        if spec.name in ("Gnk", "GnkBar"):
            ell = (n - 2) // kappa
            if spec.name == "Gnk":
                pi = (N + 1) / (4 * K) + Fraction(3 * (kappa ** 2 - 1), 4 * kappa * (n - 1))
                rad = _f((ell + 1) // 2)
            else:
                pi = (N + 1) / (4 * K) + Fraction(7 * kappa ** 2 - 4 * kappa - 3, 4 * kappa * (n - 1))
                rad = _f((ell + 1) // 2 if ell >= 3 or kappa == 1 else 2)
            return ClosedForms(
                family=spec,
                rad=rad,
                diam=(N + K - 2) / K,
                pi=pi,
                rho=(N + K - 1) / (2 * K) + Fraction(kappa - 1, 2 * kappa * (n - 1)),
                provenance={**stated, "rad": DERIVED},
                named_vertices={"pi": f"x{(ell + 1) // 2}_1", "rho": "b_0"},
            )

        d = spec.d
        if d % 2 == 0:
            pi = Fraction(kappa * (d - 3) ** 2, 4 * (n - 1)) + 1 + Fraction(4 * (d - 2) - kappa, 4 * (n - 1))
        else:
            pi = Fraction(kappa * (d - 3) ** 2, 4 * (n - 1)) + 1 + Fraction(d - 2, n - 1)
        sizes = [size for _, size in _diam_layers(n, d, kappa)]
        far = max(_layer_status(sizes, True, 0), _layer_status(sizes, True, d))
        return ClosedForms(
            family=spec,
            rad=_f((d + 1) // 2),
            diam=_f(d),
            pi=pi,
            rho=Fraction(far, n - 1),
            provenance={"rad": DERIVED, "diam": STATED, "pi": STATED, "rho": DERIVED},
            named_vertices={"pi": "m_1", "rho": "b_0"},
        )

    except Exception as e:
        raise CustomException(e, sys)


def printed_q_order(n: int) -> Tuple[Fraction, Fraction]:
    """
    The Q_n parameter as printed, k = (n - 2)/4, and the order 2k + 2 it
    would produce (which differs from n).

    Returns:
        tuple: (k, 2k + 2) as exact rationals
    """
    k = Fraction(n - 2, 4)
    return k, 2 * k + 2


if __name__ == "__main__":
    from src.components.graph_core import param_summary

    logging.info("=" * 70)
    logging.info("TESTING FAMILY GENERATORS")
    logging.info("=" * 70)

    for spec in (FamilySpec("T", 11), FamilySpec("MOP", 8), FamilySpec("Q", 8), FamilySpec("Gnk", 12, kappa=2)):
        g = generate(spec)
        s = param_summary(g)
        forms = closed_forms(spec)
        logging.info(f"{spec.name}({spec.n}): computed pi={s.proximity} rho={s.remoteness}; stated pi={forms.pi} rho={forms.rho}")
