"""Command-line front end: ingest, assess, classify, infer, query, plot."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict

from . import bands, rules, sparql
from .assess import alerts_for, assess, synthetic_timestamp
from .indices import DomainError, WeatherInputs, compute_chain
from .ingest import IngestError, SensorId, ingest_observations, parse_csv
from .rdf import RdfError, export_ntriples, import_ntriples

DEFAULT_RULES = "rules/fwi.rules"

CLASSIFIERS = {
    "ffmc": bands.classify_ignition_potential,
    "dmc": bands.classify_mopup_needs,
    "bui": bands.classify_difficulty_of_control,
    "isi": bands.classify_rate_of_spread,
    "fwi": bands.classify_fire_intensity,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fireweather", description="Fire-weather decision support over an RDF sensor store")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="increase diagnostic verbosity")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="convert the weather CSV to N-Triples")
    p.add_argument("csv_path")
    p.add_argument("--output", help="write here instead of stdout")

    p = sub.add_parser("assess", help="run the decision flow over every CSV row")
    p.add_argument("csv_path")
    p.add_argument("--format", choices=["jsonl"], default="jsonl")
    p.add_argument("--output")

    p = sub.add_parser("classify", help="band label for a single index value")
    p.add_argument("index", choices=sorted(CLASSIFIERS))
    p.add_argument("value", type=float)

    p = sub.add_parser("infer", help="forward-chain the rule file over a store")
    p.add_argument("store_path")
    p.add_argument("--rules", default=None)
    p.add_argument("--format", choices=["ntriples", "jsonl"], default="ntriples")
    p.add_argument("--output")

    p = sub.add_parser("query", help="run a query file, or start a REPL")
    p.add_argument("store_path")
    p.add_argument("query_path", nargs="?")
    p.add_argument("--format", choices=["table", "csv"], default="table")
    p.add_argument("--output")

    p = sub.add_parser("plot", help="emit an FFMC/DMC/DC time-series CSV")
    p.add_argument("csv_path")
    p.add_argument("--days", type=int, required=True)
    p.add_argument("--output")
    p.add_argument("--svg", help="also render a line chart to this SVG file")

    return parser


def _write(text: str, output: str | None):
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _rules_path(flag: str | None) -> str:
    return flag or os.environ.get("FWI_RULES") or DEFAULT_RULES


def cmd_ingest(args) -> int:
    graph = ingest_observations(parse_csv(_read(args.csv_path)))
    _write(export_ntriples(graph), args.output)
    return 0


def cmd_assess(args) -> int:
    observations = parse_csv(_read(args.csv_path))
    assessments = []
    for ordinal, obs in enumerate(observations, start=1):
        rec = compute_chain(obs.ffmc, obs.dmc, obs.dc, obs.wind)
        weather = WeatherInputs(temp=obs.temp, rh=obs.rh, wind=obs.wind, rain_24h=obs.rain)
        assessments.append(assess(rec, weather, SensorId(ordinal).iri, synthetic_timestamp(obs.month)))
    lines = []
    for a in assessments:
        lines.append(json.dumps({
            "type": "assessment",
            "sensor": a.sensor,
            "timestamp": a.timestamp,
            "indices": asdict(a.record),
            "labels": {
                "ignition_potential": a.ignition_potential,
                "mopup_needs": a.mopup_needs,
                "difficulty_of_control": a.difficulty_of_control,
                "rate_of_spread": a.rate_of_spread,
                "fire_intensity": a.fire_intensity,
            },
            "rain_override": a.rain_override,
            "wind_risk": a.wind_risk,
            "verdict": str(a.verdict),
            "trace": list(a.trace),
        }, sort_keys=True))
    for alert in alerts_for(assessments):
        payload = json.loads(alert.to_json())
        payload["type"] = "alert"
        lines.append(json.dumps(payload, sort_keys=True))
    _write("".join(line + "\n" for line in lines), args.output)
    return 0


def cmd_classify(args) -> int:
    print(CLASSIFIERS[args.index](args.value))
    return 0


def cmd_infer(args) -> int:
    graph = import_ntriples(_read(args.store_path))
    ruleset = rules.load_rules(_rules_path(args.rules))
    facts = rules.forward_chain(graph, ruleset)
    if args.format == "jsonl":
        lines = [json.dumps({
            "subject": f.subject.value,
            "property": f.property_iri,
            "label": f.label,
            "rule": f.rule.render(),
            "bindings": {k: str(v) for k, v in f.bindings},
        }, sort_keys=True) for f in facts]
        _write("".join(line + "\n" for line in lines), args.output)
    else:
        _write("".join(str(f.triple()) + "\n" for f in facts), args.output)
    return 0


def _run_query(graph, text: str, fmt: str) -> str:
    table = sparql.evaluate(sparql.parse_query(text), graph)
    return table.to_csv() if fmt == "csv" else table.to_text()


def cmd_query(args) -> int:
    graph = import_ntriples(_read(args.store_path))
    if args.query_path:
        _write(_run_query(graph, _read(args.query_path), args.format), args.output)
        return 0
    # REPL: one query per blank-line-terminated block
    block: list[str] = []
    exit_code = 0
    for line in sys.stdin:
        if line.strip():
            block.append(line)
            continue
        if block:
            _repl_eval(graph, "".join(block), args.format)
            block = []
    if block:
        _repl_eval(graph, "".join(block), args.format)
    return exit_code


def _repl_eval(graph, text: str, fmt: str):
    try:
        sys.stdout.write(_run_query(graph, text, fmt))
        sys.stdout.flush()
    except (sparql.QueryParseError, RdfError) as exc:
        print(f"error: {exc}", file=sys.stderr)


def cmd_plot(args) -> int:
    observations = parse_csv(_read(args.csv_path))
    if args.days < 0:
        raise IngestError("--days must be >= 0")
    if args.days > len(observations):
        raise IngestError(f"--days {args.days} exceeds the {len(observations)} available rows")
    # rank rows by day-over-day absolute FFMC change, ties kept in file order
    changes = [0.0] + [
        abs(observations[i].ffmc - observations[i - 1].ffmc) for i in range(1, len(observations))
    ]
    ranked = sorted(range(len(observations)), key=lambda i: (-changes[i], i))
    selected = sorted(ranked[: args.days])
    lines = ["index,ffmc,dmc,dc"]
    for i in selected:
        obs = observations[i]
        lines.append(f"{i},{obs.ffmc:g},{obs.dmc:g},{obs.dc:g}")
    _write("".join(line + "\n" for line in lines), args.output)
    if args.svg:
        series = {
            "ffmc": [observations[i].ffmc for i in selected],
            "dmc": [observations[i].dmc for i in selected],
            "dc": [observations[i].dc for i in selected],
        }
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(series))
    return 0


def render_svg(series: dict[str, list[float]], width: int = 640, height: int = 320) -> str:
    """Minimal multi-line chart; convenience output, CSV is the contract."""
    colors = {"ffmc": "#d62728", "dmc": "#1f77b4", "dc": "#2ca02c"}
    margin = 30
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    all_values = [v for vs in series.values() for v in vs]
    if all_values:
        lo, hi = min(all_values), max(all_values)
        span = (hi - lo) or 1.0
        n = max(len(next(iter(series.values()))), 2)
        for name, values in series.items():
            points = []
            for i, v in enumerate(values):
                x = margin + i * (width - 2 * margin) / (n - 1)
                y = height - margin - (v - lo) / span * (height - 2 * margin)
                points.append(f"{x:.1f},{y:.1f}")
            stroke = colors.get(name, "#333")
            path = " ".join(points)
            parts.append(f'<polyline fill="none" stroke="{stroke}" points="{path}"/>')
    parts.append("</svg>")
    return "".join(parts) + "\n"


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = {
        "ingest": cmd_ingest,
        "assess": cmd_assess,
        "classify": cmd_classify,
        "infer": cmd_infer,
        "query": cmd_query,
        "plot": cmd_plot,
    }[args.command]
    try:
        return handler(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (IngestError, RdfError, DomainError, rules.RuleParseError, sparql.QueryParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
