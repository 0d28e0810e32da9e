"""
Sweep pipeline - passes every member of a catalog (or of a seeded random
sample) through the bound checker and the class lemma suite.

Per order the sweep keeps the maxima of rad - pi, rho - pi and diam - pi,
per-bound aggregates (tightest slack with certificates, equality
witnesses, violations), lemma failures and a per-kappa breakdown.
Certificates are the least canonical codes attaining a value, so the
report does not depend on the order in which members are processed.
"""

import os
import sys
import time
from bisect import insort
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice, repeat
from typing import Dict, Iterator, List, Optional, Tuple

import pandas as pd

from src.logger import logging
from src.exception import CheckpointError, CustomException, EnumerationRangeError
from src.components.bounds_registry import EQUALITY, REGISTRY, VIOLATION, BoundCheck
from src.components.catalogs import (
    CATALOG_CLASSES,
    count_polygon_triangulation_classes,
    enumerate_class,
    enumerate_triangulations_by_filter,
    random_connected_graphs,
)
from src.components.planar_embed import check_lemma, lemmas_for
from src.pipeline.check_pipeline import check_graph
from src.utils.common import load_json, save_json
from src.utils.config import get_config
from src.utils.graph6 import decode_graph6, encode_graph6

SWEEP_CLASSES = CATALOG_CLASSES + ("random_connected",)
CHECKPOINT_VERSION = 1
DIFFERENCES = ("rad_minus_pi", "rho_minus_pi", "diam_minus_pi")

# kappa thresholds reported as filtered sub-sweeps
KAPPA_FILTERS = {"maximal_planar": (4, 5)}

_REGISTRY_ORDER = {bound_id: i for i, bound_id in enumerate(REGISTRY)}


def _rational(value: Optional[Fraction]) -> Optional[Dict[str, object]]:
    if value is None:
        return None
    value = Fraction(value)
    return {"num": value.numerator, "den": value.denominator, "decimal": float(value)}


def _from_rational(data: Optional[Dict[str, object]]) -> Optional[Fraction]:
    return None if data is None else Fraction(int(data["num"]), int(data["den"]))


def _keep_least(codes: List[str], code: str, keep: int) -> None:
    if code not in codes:
        insort(codes, code)
        del codes[keep:]


@dataclass(frozen=True)
class MemberOutcome:
    """Everything a sweep keeps from one member; picklable for worker processes."""

    n: int
    graph6: str
    graph_id: str
    kappa: int
    in_class: bool
    differences: Dict[str, Fraction]
    checks: Tuple[BoundCheck, ...]
    lemmas: Tuple[Tuple[str, int, Tuple[str, ...]], ...]


@dataclass
class Extremum:
    value: Optional[Fraction] = None
    certificates: List[str] = field(default_factory=list)

    def offer(self, value: Fraction, code: str, keep: int) -> None:
        if self.value is None or value > self.value:
            self.value, self.certificates = value, [code]
        elif value == self.value:
            _keep_least(self.certificates, code, keep)

    def to_dict(self) -> Dict[str, object]:
        return {"value": _rational(self.value), "certificates": list(self.certificates)}

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "Extremum":
        return cls(_from_rational(data["value"]), list(data["certificates"]))


@dataclass
class BoundAggregate:
    """
    One bound over one order: how often it applied, the largest computed
    quantity, the tightest slack with its certificates, equality witnesses
    and every violating member.
    """

    applied: int = 0
    max_computed: Optional[Fraction] = None
    min_slack: Optional[Fraction] = None
    certificates: List[str] = field(default_factory=list)
    equality_count: int = 0
    equality_witnesses: List[str] = field(default_factory=list)
    violations: List[str] = field(default_factory=list)

    def add(self, check: BoundCheck, code: str, keep: int) -> None:
        self.applied += 1
        if self.max_computed is None or check.computed > self.max_computed:
            self.max_computed = check.computed
        if self.min_slack is None or check.slack < self.min_slack:
            self.min_slack, self.certificates = check.slack, [code]
        elif check.slack == self.min_slack:
            _keep_least(self.certificates, code, keep)
        if check.verdict == EQUALITY:
            self.equality_count += 1
            _keep_least(self.equality_witnesses, code, keep)
        elif check.verdict == VIOLATION and code not in self.violations:
            insort(self.violations, code)

    def to_dict(self) -> Dict[str, object]:
        return {
            "applied": self.applied,
            "max_computed": _rational(self.max_computed),
            "min_slack": _rational(self.min_slack),
            "certificates": list(self.certificates),
            "equality_count": self.equality_count,
            "equality_witnesses": list(self.equality_witnesses),
            "violations": list(self.violations),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "BoundAggregate":
        return cls(
            applied=int(data["applied"]),
            max_computed=_from_rational(data["max_computed"]),
            min_slack=_from_rational(data["min_slack"]),
            certificates=list(data["certificates"]),
            equality_count=int(data["equality_count"]),
            equality_witnesses=list(data["equality_witnesses"]),
            violations=list(data["violations"]),
        )


@dataclass
class LemmaAggregate:
    graphs: int = 0
    pairs: int = 0
    failures: int = 0
    examples: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, object]:
        return {"graphs": self.graphs, "pairs": self.pairs, "failures": self.failures,
                "examples": list(self.examples)}

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "LemmaAggregate":
        return cls(int(data["graphs"]), int(data["pairs"]), int(data["failures"]), list(data["examples"]))


@dataclass
class KappaAggregate:
    count: int = 0
    maxima: Dict[str, Optional[Fraction]] = field(default_factory=lambda: {name: None for name in DIFFERENCES})

    def raise_to(self, name: str, value: Optional[Fraction]) -> None:
        current = self.maxima.get(name)
        if value is not None and (current is None or value > current):
            self.maxima[name] = value

    def add(self, differences: Dict[str, Fraction]) -> None:
        self.count += 1
        for name, value in differences.items():
            self.raise_to(name, value)

    def to_dict(self) -> Dict[str, object]:
        return {"count": self.count, "maxima": {name: _rational(v) for name, v in self.maxima.items()}}

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "KappaAggregate":
        return cls(int(data["count"]), {name: _from_rational(v) for name, v in data["maxima"].items()})


@dataclass
class OrderAggregate:
    """All sweep results for one order n."""

    n: int
    count: int = 0
    recount: Optional[int] = None
    class_mismatches: int = 0
    maxima: Dict[str, Extremum] = field(default_factory=lambda: {name: Extremum() for name in DIFFERENCES})
    bounds: Dict[str, BoundAggregate] = field(default_factory=dict)
    lemmas: Dict[str, LemmaAggregate] = field(default_factory=dict)
    by_kappa: Dict[int, KappaAggregate] = field(default_factory=dict)

    def add(self, outcome: MemberOutcome, keep: int) -> None:
        self.count += 1
        if not outcome.in_class:
            self.class_mismatches += 1
            logging.warning(f"Catalog member {outcome.graph6} fails its class predicate")
        for name, value in outcome.differences.items():
            self.maxima[name].offer(value, outcome.graph_id, keep)
        for check in outcome.checks:
            self.bounds.setdefault(check.id, BoundAggregate()).add(check, outcome.graph_id, keep)
        for lemma_id, pairs, failures in outcome.lemmas:
            agg = self.lemmas.setdefault(lemma_id, LemmaAggregate())
            agg.graphs += 1
            agg.pairs += pairs
            agg.failures += len(failures)
            for text in failures:
                _keep_least(agg.examples, text, keep)
        self.by_kappa.setdefault(outcome.kappa, KappaAggregate()).add(outcome.differences)

    def violations(self) -> List[Tuple[str, str]]:
        """(bound id, certificate) pairs of verdict-bearing violations."""
        found = []
        for bound_id in sorted(self.bounds, key=_REGISTRY_ORDER.get):
            if REGISTRY[bound_id].verdict_bearing:
                found.extend((bound_id, code) for code in self.bounds[bound_id].violations)
        return found

    def lemma_failures(self) -> int:
        return sum(agg.failures for agg in self.lemmas.values())

    def recount_mismatch(self) -> bool:
        return self.recount is not None and self.recount != self.count

    def kappa_filtered(self, threshold: int) -> KappaAggregate:
        merged = KappaAggregate()
        for kappa, agg in self.by_kappa.items():
            if kappa < threshold:
                continue
            merged.count += agg.count
            for name, value in agg.maxima.items():
                merged.raise_to(name, value)
        return merged

    def to_dict(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "count": self.count,
            "recount": self.recount,
            "class_mismatches": self.class_mismatches,
            "maxima": {name: ext.to_dict() for name, ext in self.maxima.items()},
            "bounds": {bound_id: agg.to_dict() for bound_id, agg in self.bounds.items()},
            "lemmas": {lemma_id: agg.to_dict() for lemma_id, agg in self.lemmas.items()},
            "by_kappa": {str(kappa): agg.to_dict() for kappa, agg in self.by_kappa.items()},
        }

    @classmethod
    def from_dict(cls, data: Dict[str, object]) -> "OrderAggregate":
        return cls(
            n=int(data["n"]),
            count=int(data["count"]),
            recount=data["recount"],
            class_mismatches=int(data["class_mismatches"]),
            maxima={name: Extremum.from_dict(v) for name, v in data["maxima"].items()},
            bounds={bound_id: BoundAggregate.from_dict(v) for bound_id, v in data["bounds"].items()},
            lemmas={lemma_id: LemmaAggregate.from_dict(v) for lemma_id, v in data["lemmas"].items()},
            by_kappa={int(kappa): KappaAggregate.from_dict(v) for kappa, v in data["by_kappa"].items()},
        )


@dataclass
class SweepReport:
    graph_class: str
    n_max: int
    orders: List[OrderAggregate]
    seed: Optional[int] = None
    count: Optional[int] = None
    runtime_seconds: float = field(default=0.0, compare=False)

    def order(self, n: int) -> OrderAggregate:
        for agg in self.orders:
            if agg.n == n:
                return agg
        raise KeyError(n)

    def violations(self) -> List[Tuple[int, str, str]]:
        return [(agg.n, bound_id, code) for agg in self.orders for bound_id, code in agg.violations()]

    def lemma_failures(self) -> int:
        return sum(agg.lemma_failures() for agg in self.orders)

    def class_mismatches(self) -> int:
        return sum(agg.class_mismatches for agg in self.orders)

    def recount_mismatches(self) -> List[int]:
        """Orders whose catalog size disagrees with the independent recount."""
        return [agg.n for agg in self.orders if agg.recount_mismatch()]

    def has_findings(self) -> bool:
        return (
            bool(self.violations())
            or self.lemma_failures() > 0
            or self.class_mismatches() > 0
            or bool(self.recount_mismatches())
        )


def evaluate_member(g6: str, graph_class: str, run_lemmas: bool = True) -> MemberOutcome:
    """
    Check one member: bounds through ``check_graph``, then every lemma
    whose class hypotheses hold.

    Args:
        g6: graph6 string of the member
        graph_class: Sweep class (decides the class predicate re-check)
        run_lemmas: Also run the lemma suite

    Returns:
        MemberOutcome
    """
    try:
        g = decode_graph6(g6)
        report, summary, flags = check_graph(g)
        pi = summary.proximity
        differences = {
            "rad_minus_pi": summary.radius - pi,
            "rho_minus_pi": summary.remoteness - pi,
            "diam_minus_pi": summary.diameter - pi,
        }
        in_class = graph_class == "random_connected" or getattr(flags, graph_class)

        lemma_rows = []
        if run_lemmas:
            for lemma_id in lemmas_for(flags, report.kappa):
                reports = check_lemma(g, lemma_id, flags=flags, kappa=report.kappa)
                failures = tuple(
                    f"{g6} root={r.root} level={r.level} vertices={' '.join(str(v) for v in r.counterexample or ())}"
                    for r in reports if not r.passed
                )
                lemma_rows.append((lemma_id, len(reports), failures))

        return MemberOutcome(
            n=g.n,
            graph6=g6,
            graph_id=report.graph_id,
            kappa=report.kappa,
            in_class=in_class,
            differences=differences,
            checks=report.entries,
            lemmas=tuple(lemma_rows),
        )

    except Exception as e:
        raise CustomException(e, sys)


class SweepPipeline:
    """
    Exhaustive and random sweeps with resumable checkpoints.
    """

    def __init__(self, workers: Optional[int] = None, run_lemmas: bool = True):
        """
        Initialize the pipeline.

        Args:
            workers: Worker processes (``sweep.workers`` from the config if None)
            run_lemmas: Run the lemma suite on every member
        """
        logging.info("Initializing SweepPipeline...")
        config = get_config()
        self.workers = workers or config.workers()
        self.keep = config.certificates_per_bound()
        self.run_lemmas = run_lemmas
        logging.info(f"SweepPipeline initialized successfully ({self.workers} worker(s))")

    def _evaluate(self, members: List[str], graph_class: str) -> Iterator[MemberOutcome]:
        if self.workers > 1 and len(members) > 1:
            with ProcessPoolExecutor(max_workers=self.workers) as pool:
                yield from pool.map(evaluate_member, members, repeat(graph_class),
                                    repeat(self.run_lemmas), chunksize=32)
        else:
            for g6 in members:
                yield evaluate_member(g6, graph_class, self.run_lemmas)

    def _load_checkpoint(self, path: Optional[str], header: Dict[str, object]) -> Tuple[Dict[int, OrderAggregate], Optional[Dict]]:
        if path is None or not os.path.exists(path):
            return {}, None
        data = load_json(path)
        if data.get("version") != CHECKPOINT_VERSION:
            raise CheckpointError(f"unsupported checkpoint version {data.get('version')!r} in {path}")
        for key, expected in header.items():
            if data.get(key) != expected:
                raise CheckpointError(f"checkpoint {path} was written for {key} = {data.get(key)!r}, requested {expected!r}")
        completed = {int(n): OrderAggregate.from_dict(v) for n, v in data.get("completed", {}).items()}
        logging.info(f"Resuming from {path}: {len(completed)} order(s) restored")
        return completed, data.get("enumeration")

    def _save_checkpoint(self, path: Optional[str], header: Dict[str, object],
                         completed: Dict[int, OrderAggregate], enumeration: Optional[Dict]) -> None:
        if path is None:
            return
        payload = dict(header)
        payload["version"] = CHECKPOINT_VERSION
        payload["completed"] = {str(n): agg.to_dict() for n, agg in sorted(completed.items())}
        payload["enumeration"] = enumeration
        save_json(payload, path)

    def _recount(self, graph_class: str, n: int) -> Optional[int]:
        if n > get_config().recount_max_n(graph_class):
            return None
        if graph_class == "maximal_outerplanar":
            return count_polygon_triangulation_classes(n)
        if graph_class == "maximal_planar":
            return len(enumerate_triangulations_by_filter(n))
        return None

    def _sweep_catalog(self, graph_class: str, n_max: int, header: Dict[str, object],
                       resume: Optional[str]) -> List[OrderAggregate]:
        low, _ = get_config().enumeration_range(graph_class)
        completed, enumeration = self._load_checkpoint(resume, header)

        for n in range(low, n_max + 1):
            if n in completed:
                logging.info(f"   n = {n}: restored ({completed[n].count} member(s))")
                continue

            kwargs = {}
            if graph_class == "maximal_planar":
                state = enumeration if enumeration and enumeration.get("n") == n else None
                kwargs = {
                    "state": state,
                    "on_checkpoint": lambda s: self._save_checkpoint(resume, header, completed, s),
                }
            members = [encode_graph6(g) for g in enumerate_class(graph_class, n, **kwargs)]

            agg = OrderAggregate(n=n)
            for outcome in self._evaluate(members, graph_class):
                agg.add(outcome, self.keep)
            agg.recount = self._recount(graph_class, n)
            if agg.recount_mismatch():
                logging.warning(f"   n = {n}: catalog has {agg.count} member(s), independent recount {agg.recount}")

            completed[n] = agg
            self._save_checkpoint(resume, header, completed, None)
            logging.info(
                f"   n = {n}: {agg.count} member(s), max rho - pi = {agg.maxima['rho_minus_pi'].value}, "
                f"{len(agg.violations())} violation(s), {agg.lemma_failures()} lemma failure(s)"
            )

        return [completed[n] for n in range(low, n_max + 1)]

    def _sweep_random(self, n_max: int, seed: int, count: int, header: Dict[str, object],
                      resume: Optional[str]) -> List[OrderAggregate]:
        config = get_config()
        min_n = config.random_sweep()["min_n"]
        every = config.checkpoint_every()
        completed, enumeration = self._load_checkpoint(resume, header)
        consumed = int(enumeration["seen"]) if enumeration else 0

        stream = islice(random_connected_graphs(count, seed, min_n=min_n, max_n=n_max), consumed, None)
        while True:
            batch = [encode_graph6(g) for g in islice(stream, every)]
            if not batch:
                break
            for outcome in self._evaluate(batch, "random_connected"):
                completed.setdefault(outcome.n, OrderAggregate(n=outcome.n)).add(outcome, self.keep)
            consumed += len(batch)
            self._save_checkpoint(resume, header, completed, {"n": None, "seen": consumed, "frontier": []})
            logging.info(f"   {consumed}/{count} random graph(s) checked")

        return [completed[n] for n in sorted(completed)]

    def sweep(
        self,
        graph_class: str,
        n_max: int,
        seed: Optional[int] = None,
        count: Optional[int] = None,
        resume: Optional[str] = None,
    ) -> SweepReport:
        """
        Run every member of a class catalog through the bound checker.

        Args:
            graph_class: maximal_outerplanar, maximal_planar, quadrangulation
                or random_connected
            n_max: Largest order, within the class's enumeration range
            seed: Random sweeps only (``sweep.random_connected.seed`` if None)
            count: Random sweeps only (``sweep.random_connected.count`` if None)
            resume: Checkpoint file read when present and rewritten as the sweep runs

        Returns:
            SweepReport: per-order aggregates in increasing n
        """
        try:
            logging.info("=" * 70)
            logging.info("STARTING SWEEP PIPELINE")
            logging.info("=" * 70)
            started = time.perf_counter()

            logging.info(f"[STEP 1/3] Validating sweep request ({graph_class}, n_max = {n_max})...")
            config = get_config()
            if graph_class not in SWEEP_CLASSES:
                raise EnumerationRangeError(
                    f"unknown sweep class {graph_class!r}; expected one of {', '.join(SWEEP_CLASSES)}", field="class"
                )
            if graph_class == "random_connected":
                settings = config.random_sweep()
                low, high = settings["min_n"], settings["max_n"]
                seed = settings["seed"] if seed is None else seed
                count = settings["count"] if count is None else count
            else:
                low, high = config.enumeration_range(graph_class)
                seed = count = None
            if not low <= n_max <= high:
                raise EnumerationRangeError(
                    f"{graph_class} sweeps support {low} <= n_max <= {high}, got {n_max}", field="n-max"
                )
            header = {"class": graph_class, "n_max": n_max, "seed": seed, "count": count}

            logging.info("[STEP 2/3] Checking members...")
            if graph_class == "random_connected":
                orders = self._sweep_random(n_max, seed, count, header, resume)
            else:
                orders = self._sweep_catalog(graph_class, n_max, header, resume)

            logging.info("[STEP 3/3] Summarising...")
            report = SweepReport(
                graph_class=graph_class,
                n_max=n_max,
                orders=orders,
                seed=seed,
                count=count,
                runtime_seconds=time.perf_counter() - started,
            )
            total = sum(agg.count for agg in orders)
            logging.info(f"   {total} member(s) checked in {report.runtime_seconds:.1f}s")
            if report.has_findings():
                logging.warning(
                    f"   {len(report.violations())} violation(s), {report.lemma_failures()} lemma failure(s), "
                    f"{report.class_mismatches()} class mismatch(es), recount mismatch at n = {report.recount_mismatches()}"
                )

            logging.info("=" * 70)
            logging.info("SWEEP PIPELINE COMPLETE")
            logging.info("=" * 70)
            return report

        except Exception as e:
            raise CustomException(e, sys)


def sweep(graph_class: str, n_max: int, **kwargs) -> SweepReport:
    """Module-level shortcut for ``SweepPipeline().sweep``."""
    return SweepPipeline().sweep(graph_class, n_max, **kwargs)


def sweep_to_dict(report: SweepReport) -> Dict[str, object]:
    """JSON-ready form of a SweepReport (runtime excluded)."""
    orders = []
    for agg in report.orders:
        row = agg.to_dict()
        thresholds = KAPPA_FILTERS.get(report.graph_class, ())
        if thresholds:
            row["kappa_filtered"] = {f"kappa>={t}": agg.kappa_filtered(t).to_dict() for t in thresholds}
        orders.append(row)
    return {
        "class": report.graph_class,
        "n_max": report.n_max,
        "seed": report.seed,
        "count": report.count,
        "orders": orders,
        "violations": [{"n": n, "id": bound_id, "graph6": code} for n, bound_id, code in report.violations()],
        "lemma_failures": report.lemma_failures(),
        "class_mismatches": report.class_mismatches(),
        "recount_mismatches": report.recount_mismatches(),
    }


SWEEP_CSV_COLUMNS = [
    "class", "n", "count", "recount", "id", "applied",
    "max_computed_num", "max_computed_den", "max_computed_decimal",
    "min_slack_num", "min_slack_den", "min_slack_decimal",
    "equality_count", "violation_count", "certificates",
]


def _csv_rational(prefix: str, value: Optional[Fraction]) -> Dict[str, object]:
    if value is None:
        return {f"{prefix}_num": None, f"{prefix}_den": None, f"{prefix}_decimal": None}
    return {f"{prefix}_{key}": v for key, v in _rational(value).items()}


def sweep_to_frame(report: SweepReport) -> pd.DataFrame:
    """
    One row per (order, difference) and per (order, bound).

    Difference rows carry the maximum in the max_computed columns; bound
    rows carry the largest computed quantity and the tightest slack.
    """
    rows = []
    for agg in report.orders:
        base = {"class": report.graph_class, "n": agg.n, "count": agg.count, "recount": agg.recount}
        for name, ext in agg.maxima.items():
            row = dict(base, id=name, applied=agg.count, equality_count=None, violation_count=None,
                       certificates=" ".join(ext.certificates))
            row.update(_csv_rational("max_computed", ext.value))
            row.update(_csv_rational("min_slack", None))
            rows.append(row)
        for bound_id in sorted(agg.bounds, key=_REGISTRY_ORDER.get):
            b = agg.bounds[bound_id]
            row = dict(base, id=bound_id, applied=b.applied, equality_count=b.equality_count,
                       violation_count=len(b.violations), certificates=" ".join(b.certificates))
            row.update(_csv_rational("max_computed", b.max_computed))
            row.update(_csv_rational("min_slack", b.min_slack))
            rows.append(row)
    return pd.DataFrame(rows, columns=SWEEP_CSV_COLUMNS)


if __name__ == "__main__":
    logging.info("=" * 70)
    logging.info("TESTING SWEEP PIPELINE")
    logging.info("=" * 70)

    report = SweepPipeline().sweep("maximal_outerplanar", 8)
    agg = report.order(8)
    logging.info(f"MOP n=8: {agg.count} graphs, max rho - pi = {agg.maxima['rho_minus_pi'].value}")
    logging.info(f"violations: {report.violations()}")
