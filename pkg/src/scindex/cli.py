# =============================================================================
# SCINDEX - Interfaz de Línea de Comandos
# =============================================================================
#
# PROPÓSITO:
# Ejecutable único "scindex" que expone el cálculo de índices sobre corpus,
# las transformaciones de registros, las carreras deterministas, las
# simulaciones de Monte Carlo, los chequeos de axiomas y las funciones de
# elección.
#
# SUBCOMANDOS:
# - index: índices de cada registro de un corpus JSONL/CSV
# - dual, scale: transformaciones de registros (salida JSONL reingerible)
# - trajectory: carrera determinista y chequeo de franjas
# - simulate: campañas con ruido de Poisson
# - axioms: batería de axiomas de un índice o matriz de independencia
# - choice: verificación exhaustiva de MVIIA y selectores de diagramas
#
# CÓDIGOS DE SALIDA:
# 0 éxito, 1 chequeo violado (con testigo en stdout), 2 error de entrada.
#
# DEPENDENCIAS:
# - argparse: Análisis de opciones
# - .config: Fichero TOML, SCINDEX_THREADS y logging
# - .ingest: Lectura de corpus y escritura atómica
#
# =============================================================================

"""Command-line interface for scindex."""

import argparse
import json
import logging
import sys
from itertools import product
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

from . import __version__
from .axioms import (
    EnumerationDomain,
    LGR,
    battery,
    check_lgr,
    counterexample_indices,
    independence_matrix,
)
from .choice import (
    bargraph_mviia_check,
    exhaustive_implication_check,
    rectangle_points,
    triangle_contact_selector,
)
from .config import (
    RunConfig,
    config_defaults,
    load_config_file,
    resolve_workers,
    setup_logging,
)
from .core import DEFAULT_INDICES, CitationProfile
from .data import SIMULATION_PARAMETER_SETS
from .growth import PERIODS, build_trajectory, parse_params, strip_check
from .indices import IndexDescriptor, ProportionBounds, get_index, parse_index_list
from .ingest import (
    ResearcherRecord,
    csv_text,
    json_text,
    jsonl_text,
    read_corpus,
    write_text_atomic,
)
from .montecarlo import TABLE_COLUMNS, SimulationConfig, run_campaign
from .records import dual, hstretch, vscale
from .utils import DISPLAY_PLACES

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATED = 1
EXIT_INPUT_ERROR = 2

COMMANDS = ("index", "dual", "scale", "trajectory", "simulate", "axioms", "choice")


# =============================================================================
# UTILIDADES
# =============================================================================


def _emit(config: RunConfig, text: str) -> None:
    """Write to --out atomically, or to stdout."""
    if config.output_path is None:
        sys.stdout.write(text)
    else:
        write_text_atomic(config.output_path, text)


def _bounds(options: Dict[str, Any]) -> Optional[ProportionBounds]:
    low, high = options.get("min_ratio"), options.get("max_ratio")
    if low is None and high is None:
        return None
    return ProportionBounds(low, high)


def _lookup_index(name: str) -> IndexDescriptor:
    """Built-in names, h_<a>, and the counterexample indices."""
    for descriptor in counterexample_indices():
        if descriptor.name == name:
            return descriptor
    return get_index(name)


def _print_witness(label: str, payload: Any) -> None:
    print(f"VIOLATED {label}: {json.dumps(payload, sort_keys=True, ensure_ascii=False)}")


def _value_columns(name: str) -> List[str]:
    return [name, f"{name}_radicand", f"{name}_degree"]


# =============================================================================
# SUBCOMANDOS
# =============================================================================


def cmd_index(config: RunConfig) -> int:
    """Indices for every record of a JSONL/CSV corpus."""
    options = config.options
    bounds = _bounds(options)
    names = list(config.indices) or list(DEFAULT_INDICES)
    descriptors = parse_index_list(names, bounds)
    corpus = read_corpus(config.input_path, options.get("input_format"))
    cores = ("Square core", "Rectangle core") if options.get("tails") else ()

    rows = []
    documents = []
    for entry in corpus:
        profile = CitationProfile(entry.record, entry.researcher_id, bounds)
        values = profile.get_all_indices(names)
        summary = profile.get_summary()
        row: List[Any] = [entry.researcher_id]
        for value in values.values():
            row.extend([value.decimal(DISPLAY_PLACES), str(value.radicand), value.degree])
        tails = {core: {part: str(share) for part, share in summary[core].items()} for core in cores}
        for core in cores:
            row.extend(tails[core].values())
        rows.append(row)
        documents.append(
            {
                "id": entry.researcher_id,
                "citations": list(entry.record.entries),
                "indices": {
                    name: {
                        "decimal": value.decimal(DISPLAY_PLACES),
                        "radicand": str(value.radicand),
                        "degree": value.degree,
                    }
                    for name, value in values.items()
                },
                "tails": tails or None,
            }
        )

    if config.output_format == "json":
        _emit(config, json_text({"command": "index", "records": documents}))
    else:
        header = ["id"]
        for d in descriptors:
            header.extend(_value_columns(d.name))
        if cores:
            for prefix in ("square", "rectangle"):
                header.extend(f"{prefix}_{part}" for part in ("core", "vertical", "horizontal"))
        _emit(config, csv_text(header, rows))
    return EXIT_OK


def cmd_dual(config: RunConfig) -> int:
    """Dual (conjugate) of every record, as JSONL."""
    corpus = read_corpus(config.input_path, config.options.get("input_format"))
    _emit(config, jsonl_text(ResearcherRecord(e.researcher_id, dual(e.record)) for e in corpus))
    return EXIT_OK


def cmd_scale(config: RunConfig) -> int:
    """Vertical scaling by k and horizontal stretch by m, as JSONL."""
    k = int(config.options.get("k") or 1)
    m = int(config.options.get("m") or 1)
    corpus = read_corpus(config.input_path, config.options.get("input_format"))
    _emit(
        config,
        jsonl_text(
            ResearcherRecord(e.researcher_id, hstretch(vscale(e.record, k), m)) for e in corpus
        ),
    )
    return EXIT_OK


def cmd_trajectory(config: RunConfig) -> int:
    """Deterministic career; with --strips, the linear-growth strip of each index."""
    options = config.options
    params = parse_params(options["p"], options["c"], options.get("period", "year"))
    horizon = int(options.get("horizon", 40))
    descriptors = parse_index_list(list(config.indices) or ["h", "hprime", "w", "wprime"])
    trajectory = build_trajectory(params, horizon, descriptors)

    strips = []
    violated = []
    if options.get("strips"):
        for descriptor in descriptors:
            report = strip_check(descriptor, params, horizon)
            strips.append(report.to_dict())
            if not report.holds:
                violated.append(report.to_dict())

    if config.output_format == "json":
        _emit(
            config,
            json_text(
                {
                    "command": "trajectory",
                    "provenance": trajectory.provenance,
                    "snapshots": [
                        {
                            "t": t,
                            "citations": list(record.entries),
                            "indices": {
                                name: trajectory.values[name][i].exact_form()
                                for name in trajectory.values
                            },
                        }
                        for i, (t, record) in enumerate(trajectory.snapshots)
                    ],
                    "strips": strips,
                }
            ),
        )
    else:
        header = ["t", "papers", "citations"]
        for d in descriptors:
            header.extend(_value_columns(d.name))
        rows = []
        for i, (t, record) in enumerate(trajectory.snapshots):
            row: List[Any] = [t, len(record), sum(record.entries)]
            for d in descriptors:
                value = trajectory.values[d.name][i]
                row.extend([value.decimal(DISPLAY_PLACES), str(value.radicand), value.degree])
            rows.append(row)
        _emit(config, csv_text(header, rows))

    for report in violated:
        _print_witness(f"strip for {report['index']}", report)
    return EXIT_VIOLATED if violated else EXIT_OK


def cmd_simulate(config: RunConfig) -> int:
    """Monte Carlo campaign; JSON report plus optional table CSV."""
    options = config.options
    sim = SimulationConfig(
        p=float(options["p"]),
        c=float(options["c"]),
        months=int(options["months"]),
        careers=int(options["careers"]),
        seed=int(options["seed"]),
        pair_uplift=float(options["uplift"]),
        indices=tuple(config.indices) or ("h", "hprime", "w", "wprime"),
        cite_same_month=bool(options.get("cite_same_month")),
        paired=bool(options.get("paired")),
        common_streams=bool(options.get("common_streams")),
        noise=not options.get("no_noise"),
        workers=config.workers,
    )
    report = run_campaign(sim)
    _emit(config, json_text({"command": "simulate", "report": report.to_dict()}))
    table = options.get("table_csv")
    if table:
        rows = [[row[column] for column in TABLE_COLUMNS] for row in report.table_rows()]
        write_text_atomic(Path(table), csv_text(TABLE_COLUMNS, rows))
    return EXIT_OK


def cmd_axioms(config: RunConfig) -> int:
    """Axiom battery for one index, or the independence matrix."""
    options = config.options
    domain = EnumerationDomain(int(options.get("L", 6)), int(options.get("M", 6)))

    if options.get("matrix"):
        matrix = independence_matrix(domain)
        _emit(config, json_text({"command": "axioms", "matrix": matrix.to_dict()}))
        mismatches = matrix.mismatches()
        for row in mismatches:
            _print_witness(
                f"matrix row {row}",
                {"violations": list(matrix.violations(row))},
            )
        return EXIT_VIOLATED if mismatches else EXIT_OK

    name = options.get("index")
    if not name:
        raise ValueError("axioms needs --index NAME or --matrix.")
    descriptor = _lookup_index(name)
    reports = battery(descriptor, domain)
    if options.get("lgr"):
        reports.extend(check_lgr(descriptor, p, c) for p, c in product(range(1, 5), repeat=2))
    _emit(
        config,
        json_text({"command": "axioms", "index": name, "reports": [r.to_dict() for r in reports]}),
    )
    violated = [r for r in reports if not r.holds]
    for r in violated:
        label = r.axiom if r.axiom != LGR else f"{r.axiom} p={r.domain['p']} c={r.domain['c']}"
        _print_witness(label, r.witness.to_dict() if r.witness else {})
    return EXIT_VIOLATED if violated else EXIT_OK


def cmd_choice(config: RunConfig) -> int:
    """Exhaustive MVIIA implications and the bar-graph selector check."""
    options = config.options
    size = int(options.get("exhaustive", 3))
    budget = int(options.get("budget", 10_000))
    implications = exhaustive_implication_check(size, budget)

    selector = options.get("selector", "rectangle")
    if selector not in ("rectangle", "triangle"):
        raise ValueError(f"Unknown selector {selector!r}; use rectangle or triangle.")
    selector_fn = rectangle_points if selector == "rectangle" else triangle_contact_selector
    index = get_index("hprime" if selector == "rectangle" else "wprime")
    bargraph = bargraph_mviia_check(
        int(options.get("L", 5)), int(options.get("M", 5)), selector_fn, index
    )
    _emit(
        config,
        json_text(
            {
                "command": "choice",
                "implications": implications.to_dict(),
                "bargraph": bargraph.to_dict(),
            }
        ),
    )
    status = EXIT_OK
    if not implications.implications_hold:
        _print_witness("MVIIA implications", implications.first_failure)
        status = EXIT_VIOLATED
    if not bargraph.holds:
        _print_witness(
            f"bar-graph selector {selector}",
            bargraph.first_mviia_failure or bargraph.first_maxb_failure,
        )
        status = EXIT_VIOLATED
    return status


HANDLERS: Dict[str, Callable[[RunConfig], int]] = {
    "index": cmd_index,
    "dual": cmd_dual,
    "scale": cmd_scale,
    "trajectory": cmd_trajectory,
    "simulate": cmd_simulate,
    "axioms": cmd_axioms,
    "choice": cmd_choice,
}


# =============================================================================
# PARSER
# =============================================================================


def _add_io(parser: argparse.ArgumentParser, needs_input: bool = True) -> None:
    if needs_input:
        parser.add_argument("--in", dest="input", required=True, help="Input corpus (.jsonl or .csv)")
        parser.add_argument(
            "--input-format", choices=("jsonl", "csv"), default=None,
            help="Input format (default: from the file extension)",
        )
    parser.add_argument("--out", default=None, help="Output file (default: stdout)")


def build_parser(config: Optional[Dict[str, Any]] = None) -> argparse.ArgumentParser:
    """
    Construye el parser; los valores de ``config`` pasan a ser valores por
    defecto de cada subcomando.
    """
    default_p, default_c = SIMULATION_PARAMETER_SETS[0]
    parser = argparse.ArgumentParser(
        prog="scindex", description="Scale-invariant citation indices and their axioms."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", default=None, help="TOML config file")
    parser.add_argument("--log-level", default="WARNING", help="Logging level (default: WARNING)")
    parser.add_argument("-v", "--verbose", action="store_true", help="Shortcut for --log-level INFO")
    sub = parser.add_subparsers(dest="command", required=True)

    index = sub.add_parser("index", help="Compute indices over a corpus")
    _add_io(index)
    index.add_argument("--indices", default=",".join(DEFAULT_INDICES), help="Comma-separated index names")
    index.add_argument("--format", dest="output_format", choices=("csv", "json"), default="csv")
    index.add_argument("--tails", action="store_true", help="Add tail-decomposition columns")
    index.add_argument("--min-ratio", default=None, help="Minimum height/width ratio for hprime")
    index.add_argument("--max-ratio", default=None, help="Maximum height/width ratio for hprime")

    dual_parser = sub.add_parser("dual", help="Dual (conjugate) records")
    _add_io(dual_parser)

    scale = sub.add_parser("scale", help="Scale records vertically and/or stretch horizontally")
    _add_io(scale)
    scale.add_argument("--k", type=int, default=1, help="Vertical scale factor")
    scale.add_argument("--m", type=int, default=1, help="Horizontal stretch factor")

    trajectory = sub.add_parser("trajectory", help="Deterministic career trajectory")
    _add_io(trajectory, needs_input=False)
    trajectory.add_argument("--p", required=False, default="1", help="Papers per period")
    trajectory.add_argument("--c", required=False, default="1", help="Citations per paper and period")
    trajectory.add_argument("--period", choices=PERIODS, default="year")
    trajectory.add_argument("--horizon", type=int, default=40)
    trajectory.add_argument("--indices", default="h,hprime,w,wprime")
    trajectory.add_argument("--format", dest="output_format", choices=("csv", "json"), default="csv")
    trajectory.add_argument("--strips", action="store_true", help="Check linear-growth strips")

    simulate = sub.add_parser(
        "simulate",
        help="Poisson-noise career simulations",
        description=(
            "Reference monthly (p, c) sets: "
            + "; ".join(f"p={p} c={c}" for p, c in SIMULATION_PARAMETER_SETS)
        ),
    )
    _add_io(simulate, needs_input=False)
    simulate.add_argument("--p", type=float, default=default_p, help="Monthly mean of new papers")
    simulate.add_argument("--c", type=float, default=default_c, help="Monthly mean citations per paper")
    simulate.add_argument("--months", type=int, default=360)
    simulate.add_argument("--careers", type=int, default=500)
    simulate.add_argument("--seed", type=int, default=0)
    simulate.add_argument("--uplift", type=float, default=0.10, help="Relative uplift of B's p and c")
    simulate.add_argument("--indices", default="h,hprime,w,wprime")
    simulate.add_argument("--paired", action="store_true", help="Simulate A/B pairs")
    simulate.add_argument("--common-streams", action="store_true", help="B reuses A's random stream")
    simulate.add_argument("--cite-same-month", action="store_true")
    simulate.add_argument("--no-noise", action="store_true", help="Deterministic monthly model")
    simulate.add_argument("--workers", type=int, default=None, help="Worker processes")
    simulate.add_argument("--table-csv", default=None, help="Write the (0)-(6) table as CSV")

    axioms = sub.add_parser("axioms", help="Axiom battery or independence matrix")
    _add_io(axioms, needs_input=False)
    axioms.add_argument("--index", default=None, help="Index to check")
    axioms.add_argument("--matrix", action="store_true", help="Run the independence matrix")
    axioms.add_argument("--L", dest="L", type=int, default=6, help="Maximum record length")
    axioms.add_argument("--M", dest="M", type=int, default=6, help="Maximum citation count")
    axioms.add_argument("--lgr", action="store_true", help="Also check linear growth for 1 <= p, c <= 4")

    choice = sub.add_parser("choice", help="Choice-function checks")
    _add_io(choice, needs_input=False)
    choice.add_argument("--exhaustive", type=int, default=3, help="Universe size")
    choice.add_argument("--budget", type=int, default=10_000, help="Maximum choice functions")
    choice.add_argument("--selector", choices=("rectangle", "triangle"), default="rectangle")
    choice.add_argument("--L", dest="L", type=int, default=5)
    choice.add_argument("--M", dest="M", type=int, default=5)

    if config:
        for name, subparser in sub.choices.items():
            subparser.set_defaults(**config_defaults(config, name))
    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    options = vars(args).copy()
    indices = options.pop("indices", None)
    if isinstance(indices, str):
        indices = [name.strip() for name in indices.split(",") if name.strip()]
    input_path = options.pop("input", None)
    output = options.pop("out", None)
    workers = resolve_workers(options.pop("workers", None)) if args.command == "simulate" else 1
    config = RunConfig(
        command=args.command,
        input_path=Path(input_path) if input_path else None,
        output_path=Path(output) if output else None,
        output_format=options.pop("output_format", "json"),
        indices=tuple(indices or ()),
        workers=workers,
        options=options,
    )
    config.validate()
    return config


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point of the ``scindex`` console script."""
    argv = list(sys.argv[1:] if argv is None else argv)
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config", default=None)
    known, _ = pre.parse_known_args(argv)

    try:
        file_config = load_config_file(known.config) if known.config else None
    except (ValueError, OSError) as exc:
        print(f"scindex: error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    args = build_parser(file_config).parse_args(argv)
    setup_logging("INFO" if args.verbose else args.log_level)

    try:
        config = _run_config(args)
        return HANDLERS[config.command](config)
    except (ValueError, OSError) as exc:
        logger.debug("Input error", exc_info=True)
        print(f"scindex: error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
