"""
Command-line entry point.

    python -m src.cli params --family T --n 11 --format json
    python -m src.cli check --in graphs.g6 --format csv
    python -m src.cli sweep --class maximal_outerplanar --n-max 10 --format csv

Exit status: 0 on success, 1 on a usage or input error (one line
``error: <field>: <message>`` on stderr), 2 when a bound VIOLATION or a
lemma failure was found.
"""

import argparse
import sys
from typing import Dict, List, Optional

import pandas as pd

from src.logger import logging
from src.exception import CustomException, UsageError
from src.components.graph_core import Graph, param_summary
from src.components.connectivity import vertex_connectivity
from src.components.planar_embed import (
    LEMMA_IDS,
    Embedding,
    check_lemma,
    classify,
    embed_planar,
    format_rotation,
    lemmas_for,
)
from src.components.families import FAMILY_NAMES, FamilySpec, closed_forms, generate
from src.components.bounds_registry import (
    discrepancy_report,
    rational_fields,
    report_to_dict,
    report_to_frame,
)
from src.components.catalogs import enumerate_class
from src.pipeline.check_pipeline import CheckPipeline, graph_params
from src.pipeline.sweep_pipeline import SWEEP_CLASSES, SweepPipeline, sweep_to_dict, sweep_to_frame
from src.utils.common import dump_json, frame_to_csv, save_text_file
from src.utils.graph6 import decode_graph6, encode_graph6, iter_graph6_stream, load_graph6_file, write_graph6_stream

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FINDINGS = 2

FORMATS = {
    "params": ("json", "csv", "text"),
    "family": ("json", "g6", "text"),
    "classify": ("json", "text"),
    "lemmas": ("json", "csv", "text"),
    "check": ("json", "csv", "text"),
    "enumerate": ("g6", "json", "text"),
    "sweep": ("json", "csv"),
    "discrepancies": ("json", "csv", "text"),
}

GRAPH_COMMANDS = ("params", "classify", "lemmas", "check")


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for findings
    def error(self, message):
        raise UsageError(message, field="usage")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="python -m src.cli", description="Exact distance-parameter engine for planar graph classes")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add_graph_input(p):
        p.add_argument("--in", dest="input", help="graph6 file, '-' for stdin")
        p.add_argument("--g6", help="inline graph6 string")
        add_family(p)

    def add_family(p):
        p.add_argument("--family", choices=FAMILY_NAMES)
        p.add_argument("--n", type=int)
        p.add_argument("--kappa", type=int)
        p.add_argument("--d", type=int)

    def add_output(p, command):
        p.add_argument("--format", choices=FORMATS[command], default=FORMATS[command][0])
        p.add_argument("--out", help="output file (stdout if omitted)")

    for command in GRAPH_COMMANDS:
        p = sub.add_parser(command)
        add_graph_input(p)
        add_output(p, command)
        if command == "lemmas":
            p.add_argument("--lemma", choices=LEMMA_IDS, help="check only this lemma")

    p = sub.add_parser("family")
    add_family(p)
    add_output(p, "family")

    p = sub.add_parser("enumerate")
    p.add_argument("--class", dest="graph_class", required=True, choices=SWEEP_CLASSES[:-1])
    p.add_argument("--n", type=int, required=True)
    add_output(p, "enumerate")

    p = sub.add_parser("sweep")
    p.add_argument("--class", dest="graph_class", required=True, choices=SWEEP_CLASSES)
    p.add_argument("--n-max", dest="n_max", type=int, required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--resume", help="checkpoint file (read if present, rewritten while sweeping)")
    add_output(p, "sweep")

    p = sub.add_parser("discrepancies")
    add_output(p, "discrepancies")
    return parser


def _family_spec(args) -> FamilySpec:
    if args.n is None:
        raise UsageError("--family needs --n", field="n")
    return FamilySpec(args.family, args.n, kappa=args.kappa, d=args.d)


def _load_graphs(args) -> List[Graph]:
    sources = [s for s in (args.input, args.g6, args.family) if s is not None]
    if len(sources) != 1:
        raise UsageError("exactly one of --in, --g6, --family is required", field="input")
    if args.g6 is not None:
        return [decode_graph6(args.g6)]
    if args.family is not None:
        return [generate(_family_spec(args))]
    if args.input == "-":
        graphs = list(iter_graph6_stream(sys.stdin))
    else:
        graphs = load_graph6_file(args.input)
    if not graphs:
        raise UsageError(f"no graph6 lines in {args.input}", field="in")
    return graphs


def _one_or_many(items: List[Dict[str, object]]):
    return items[0] if len(items) == 1 else items


def _frame_text(df: pd.DataFrame) -> str:
    return frame_to_csv(df.to_dict(orient="records"), list(df.columns))


def _rational_block(values) -> Dict[str, object]:
    block = {}
    for name, value in values.items():
        block.update(rational_fields(name, value))
    return block


# Commands: each returns (artifact text, found_findings)

def cmd_params(args):
    rows = []
    for g in _load_graphs(args):
        summary = param_summary(g)
        conn = vertex_connectivity(g)
        rows.append({
            "graph6": encode_graph6(g),
            "n": g.n,
            "m": g.edge_count,
            "kappa": conn.kappa,
            "min_degree": conn.min_degree,
            "witness_cut": list(conn.witness_cut) if conn.witness_cut is not None else None,
            "params": _rational_block(graph_params(summary)),
            "status": list(summary.status),
            "eccentricities": list(summary.ecc),
            "median_vertices": list(summary.median_vertices),
            "remote_vertices": list(summary.remote_vertices),
            "labels": list(g.labels) if g.labels else None,
        })

    if args.format == "json":
        return dump_json(_one_or_many(rows)), False
    if args.format == "csv":
        flat = [dict({"graph6": r["graph6"], "n": r["n"], "m": r["m"], "kappa": r["kappa"]}, **r["params"]) for r in rows]
        columns = ["graph6", "n", "m", "kappa"] + list(rows[0]["params"])
        return frame_to_csv(flat, columns), False
    lines = []
    for r in rows:
        p = r["params"]
        lines.append(
            f"{r['graph6']} n={r['n']} m={r['m']} kappa={r['kappa']} "
            f"rad={p['rad_num']} diam={p['diam_num']} "
            f"pi={p['pi_num']}/{p['pi_den']} rho={p['rho_num']}/{p['rho_den']}"
        )
    return "\n".join(lines) + "\n", False


def cmd_family(args):
    if args.family is None:
        raise UsageError("family needs --family", field="family")
    spec = _family_spec(args)
    g = generate(spec)
    if args.format == "g6":
        return write_graph6_stream([g]), False

    forms = closed_forms(spec)
    if args.format == "text":
        edges = "\n".join(f"{g.label(u)} {g.label(w)}" for u, w in g.edges())
        return f"# {spec.name} n={spec.n} m={g.edge_count}\n{edges}\n", False

    data = {
        "family": {"name": spec.name, "n": spec.n, "kappa": spec.kappa, "d": spec.d},
        "graph6": encode_graph6(g),
        "labels": list(g.labels) if g.labels else None,
        "closed_forms": _rational_block({"rad": forms.rad, "diam": forms.diam, "pi": forms.pi, "rho": forms.rho}),
        "provenance": dict(forms.provenance),
        "named_vertices": dict(forms.named_vertices),
        "corrections": _rational_block(forms.corrections),
    }
    return dump_json(data), False


def _embedding_dict(emb) -> Dict[str, object]:
    if isinstance(emb, Embedding):
        return {"rotation": [list(r) for r in emb.rotation], "faces": [list(f) for f in emb.faces]}
    return {"kuratowski": {"kind": emb.kind, "branch_vertices": list(emb.branch_vertices),
                           "paths": [list(p) for p in emb.paths]}}


def cmd_classify(args):
    rows, text = [], []
    for g in _load_graphs(args):
        flags = classify(g)
        kappa = vertex_connectivity(g, witness=False).kappa
        emb = embed_planar(g)
        rows.append({
            "graph6": encode_graph6(g),
            "n": g.n,
            "kappa": kappa,
            "flags": flags.to_dict(),
            "embedding": _embedding_dict(emb),
        })
        text.append(f"{encode_graph6(g)} kappa={kappa} "
                    + " ".join(name for name, on in flags.to_dict().items() if on))
        if isinstance(emb, Embedding):
            text.append(format_rotation(emb).rstrip("\n"))
        else:
            text.append(f"non-planar: {emb.kind} on {' '.join(map(str, emb.branch_vertices))}")
    if args.format == "json":
        return dump_json(_one_or_many(rows)), False
    return "\n".join(text) + "\n", False


LEMMA_CSV_COLUMNS = ["graph6", "lemma_id", "root", "level", "verdict", "counterexample"]


def cmd_lemmas(args):
    rows = []
    failed = False
    for g in _load_graphs(args):
        flags = classify(g)
        kappa = vertex_connectivity(g, witness=False).kappa
        ids = [args.lemma] if args.lemma else lemmas_for(flags, kappa)
        g6 = encode_graph6(g)
        for lemma_id in ids:
            for r in check_lemma(g, lemma_id, flags=flags, kappa=kappa):
                failed = failed or not r.passed
                rows.append({
                    "graph6": g6,
                    "lemma_id": r.lemma_id,
                    "root": r.root,
                    "level": r.level,
                    "verdict": r.verdict,
                    "counterexample": " ".join(map(str, r.counterexample)) if r.counterexample else "",
                })

    if args.format == "csv":
        return frame_to_csv(rows, LEMMA_CSV_COLUMNS), failed
    if args.format == "json":
        return dump_json({"reports": rows, "failures": sum(r["verdict"] != "pass" for r in rows)}), failed
    summary = {}
    for r in rows:
        key = (r["graph6"], r["lemma_id"])
        passed, total = summary.get(key, (0, 0))
        summary[key] = (passed + (r["verdict"] == "pass"), total + 1)
    lines = [f"{g6} {lemma_id}: {p}/{t} pass" for (g6, lemma_id), (p, t) in summary.items()]
    return "\n".join(lines) + "\n" if lines else "no lemma applies\n", failed


def cmd_check(args):
    reports = CheckPipeline().check_many(_load_graphs(args))
    found = any(r.violations() for r in reports)
    if args.format == "json":
        return dump_json(_one_or_many([report_to_dict(r) for r in reports])), found
    if args.format == "csv":
        return _frame_text(report_to_frame(reports)), found
    lines = []
    for r in reports:
        lines.append(f"{r.graph6} n={r.n} kappa={r.kappa}")
        for e in r.entries:
            tag = "" if e.verdict_bearing else " (quarantined)"
            lines.append(f"  {e.id:<16} {e.verdict:<9} bound={e.value} computed={e.computed}{tag}")
    return "\n".join(lines) + "\n", found


def cmd_enumerate(args):
    graphs = list(enumerate_class(args.graph_class, args.n))
    if args.format == "g6":
        return write_graph6_stream(graphs), False
    codes = [encode_graph6(g) for g in graphs]
    if args.format == "json":
        return dump_json({"class": args.graph_class, "n": args.n, "count": len(codes), "graphs": codes}), False
    return f"# {args.graph_class} n={args.n}: {len(codes)} graph(s)\n" + "".join(c + "\n" for c in codes), False


def cmd_sweep(args):
    report = SweepPipeline().sweep(args.graph_class, args.n_max, seed=args.seed, count=args.count, resume=args.resume)
    if args.format == "csv":
        return _frame_text(sweep_to_frame(report)), report.has_findings()
    return dump_json(sweep_to_dict(report)), report.has_findings()


DISCREPANCY_COLUMNS = ["id", "description", "printed_num", "printed_den", "printed_decimal",
                       "verified_num", "verified_den", "verified_decimal", "matches"]


def cmd_discrepancies(args):
    rows = []
    for item in discrepancy_report():
        row = {"id": item.id, "description": item.description, "at": dict(item.at), "matches": item.matches}
        row.update(rational_fields("printed", item.printed))
        row.update(rational_fields("verified", item.verified))
        rows.append(row)
    if args.format == "json":
        return dump_json(rows), False
    if args.format == "csv":
        return frame_to_csv(rows, DISCREPANCY_COLUMNS), False
    lines = [f"{r['id']}: printed {r['printed_num']}/{r['printed_den']} "
             f"vs verified {r['verified_num']}/{r['verified_den']}" for r in rows]
    return "\n".join(lines) + "\n", False


COMMANDS = {
    "params": cmd_params,
    "family": cmd_family,
    "classify": cmd_classify,
    "lemmas": cmd_lemmas,
    "check": cmd_check,
    "enumerate": cmd_enumerate,
    "sweep": cmd_sweep,
    "discrepancies": cmd_discrepancies,
}


def _diagnostic(error: Exception) -> str:
    original = error.original if isinstance(error, CustomException) else error
    field = getattr(original, "field", None)
    if field is None:
        field = "in" if isinstance(original, OSError) else "input"
    message = str(original).splitlines()[0] if str(original) else type(original).__name__
    return f"error: {field}: {message}"


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name (sys.argv[1:] if None)

    Returns:
        int: exit status (0 ok, 1 error, 2 findings)
    """
    try:
        args = build_parser().parse_args(argv)
        if args.command is None:
            raise UsageError(f"a command is required: {', '.join(COMMANDS)}", field="command")

        text, found = COMMANDS[args.command](args)
        if args.out:
            save_text_file(text, args.out)
        else:
            sys.stdout.write(text)

        if found:
            logging.warning(f"{args.command}: mathematical findings reported (exit {EXIT_FINDINGS})")
            return EXIT_FINDINGS
        return EXIT_OK

    except Exception as e:
        print(_diagnostic(e), file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
