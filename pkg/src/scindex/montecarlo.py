# =============================================================================
# SCINDEX - Simulación de Monte Carlo
# =============================================================================
#
# PROPÓSITO:
# Añade ruido de Poisson al modelo mensual de carrera y mide cómo se comportan
# los índices: dispersión de los valores de fin de carrera, tamaño y
# frecuencia de los incrementos mensuales, y empates e inversiones entre una
# investigadora A y otra B con p y c un 10% mayores.
#
# FUNCIONALIDAD PRINCIPAL:
# - SimulationConfig validada (p, c, meses, carreras, semilla, ...)
# - simulate_career: una carrera determinista dada (semilla, stream)
# - run_campaign: todas las carreras, en paralelo si se pide, y el informe
# - increment_stats: desviación típica normalizada y fracción de meses con
#   incremento no nulo
# - Modo sin ruido sobre el modelo mensual determinista
#
# USO EN EL ENTORNO:
# cli.py expone "scindex simulate" y escribe el informe JSON y la tabla CSV
# con las columnas (0)-(6).
#
# ALEATORIEDAD:
# Cada carrera usa su propio generador Philox derivado de
# SeedSequence(seed, spawn_key=(stream_id,)), con stream_id = 2·carrera para A
# y 2·carrera + 1 para B. El resultado no depende del número de procesos.
#
# DEPENDENCIAS:
# - numpy: Generadores Philox, muestreo de Poisson y estadísticas
# - .growth: CareerTrajectory, evaluate_records y el modelo mensual
#
# =============================================================================

"""Poisson-noise career simulations."""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .growth import (
    CareerTrajectory,
    DeterministicParams,
    evaluate_records,
    monthly_deterministic_record,
)
from .indices import IndexDescriptor, parse_index_list
from .records import CitationRecord, make_record
from .utils import parse_rational
from .values import IndexValue

logger = logging.getLogger(__name__)

DEFAULT_SIMULATION_INDICES: Tuple[str, ...] = ("h", "hprime", "w", "wprime")

TABLE_COLUMNS: Tuple[str, ...] = (
    "researcher",
    "p",
    "c",
    "index",
    "(0) mean career value",
    "(1) career sd",
    "(2) increment sd",
    "(3) nonzero increments",
    "(4) reversals",
    "(5) ties",
    "(6) ties or reversals",
)


@dataclass(frozen=True)
class SimulationConfig:
    """
    Configuración de una campaña de simulación.

    Parameters
    ----------
    p : float
        Media mensual de artículos nuevos (> 0).
    c : float
        Media mensual de citas por artículo ya publicado (> 0).
    months : int, optional
        Duración de cada carrera. Por defecto 360 (treinta años).
    careers : int, optional
        Número de carreras (o de parejas). Por defecto 500.
    seed : int, optional
        Semilla maestra de 64 bits. Por defecto 0.
    pair_uplift : float, optional
        Incremento relativo de p y c para B. Por defecto 0.10.
    indices : tuple of str, optional
        Índices a seguir. Por defecto h, hprime, w, wprime.
    cite_same_month : bool, optional
        Si un artículo puede citarse en su mes de publicación. Por defecto False.
    paired : bool, optional
        Simular parejas A/B. Por defecto False.
    common_streams : bool, optional
        B reutiliza el stream de A (mismos números aleatorios). Por defecto False.
    noise : bool, optional
        False sustituye el ruido por el modelo mensual determinista.
    workers : int, optional
        Procesos para repartir las carreras. Por defecto 1.

    Raises
    ------
    ValueError
        Si algún parámetro está fuera de rango o algún índice es desconocido.
    """

    p: float
    c: float
    months: int = 360
    careers: int = 500
    seed: int = 0
    pair_uplift: float = 0.10
    indices: Tuple[str, ...] = DEFAULT_SIMULATION_INDICES
    cite_same_month: bool = False
    paired: bool = False
    common_streams: bool = False
    noise: bool = True
    workers: int = 1

    def __post_init__(self) -> None:
        if not (self.p > 0 and self.c > 0):
            raise ValueError(f"p and c must be positive, got p={self.p}, c={self.c}.")
        if self.months < 1 or self.careers < 1:
            raise ValueError(
                f"months and careers must be at least 1, got {self.months}, {self.careers}."
            )
        if self.pair_uplift < 0:
            raise ValueError(f"pair_uplift must be non-negative, got {self.pair_uplift}.")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}.")
        if self.workers < 1:
            raise ValueError(f"workers must be at least 1, got {self.workers}.")
        names = self.indices.split(",") if isinstance(self.indices, str) else self.indices
        descriptors = parse_index_list(list(names))
        object.__setattr__(self, "indices", tuple(d.name for d in descriptors))

    def rates(self, researcher: str = "A") -> Tuple[Fraction, Fraction]:
        """Exact (p, c) for researcher A or B."""
        p, c = parse_rational(self.p), parse_rational(self.c)
        if researcher == "A":
            return p, c
        if researcher == "B":
            factor = 1 + parse_rational(self.pair_uplift)
            return p * factor, c * factor
        raise ValueError(f"Researcher must be 'A' or 'B', got {researcher!r}.")

    def researchers(self) -> Tuple[str, ...]:
        return ("A", "B") if self.paired else ("A",)

    def stream_id(self, career: int, researcher: str) -> int:
        """2·career for A, 2·career + 1 for B (A's stream under common_streams)."""
        if researcher == "B" and not self.common_streams:
            return 2 * career + 1
        return 2 * career

    def to_dict(self) -> Dict[str, Any]:
        return {
            "p": self.p,
            "c": self.c,
            "months": self.months,
            "careers": self.careers,
            "seed": self.seed,
            "pair_uplift": self.pair_uplift,
            "indices": list(self.indices),
            "cite_same_month": self.cite_same_month,
            "paired": self.paired,
            "common_streams": self.common_streams,
            "noise": self.noise,
        }


def career_rng(seed: int, stream_id: int) -> np.random.Generator:
    """Independent Philox stream for one career."""
    return np.random.Generator(
        np.random.Philox(np.random.SeedSequence(seed, spawn_key=(stream_id,)))
    )


# =============================================================================
# CARRERAS
# =============================================================================


def simulate_career(
    config: SimulationConfig, stream_id: int, researcher: str = "A"
) -> CareerTrajectory:
    """
    Simula una carrera con ruido de Poisson.

    Cada mes se publica un número Poisson(p) de artículos y cada artículo
    publicado en un mes anterior (o en el mismo, con cite_same_month) recibe
    Poisson(c) citas, independientes entre sí.

    Parameters
    ----------
    config : SimulationConfig
        Parámetros de la campaña.
    stream_id : int
        Identificador del stream aleatorio.
    researcher : {"A", "B"}, optional
        Qué juego de tasas usar. Por defecto "A".

    Returns
    -------
    CareerTrajectory
        Una instantánea por mes. La procedencia incluye los totales de
        artículos publicados, extracciones de citas y citas recibidas.
    """
    p, c = config.rates(researcher)
    rng = career_rng(config.seed, stream_id)
    counts = np.zeros(0, dtype=np.int64)
    records: List[CitationRecord] = []
    citation_draws = 0
    for _ in range(config.months):
        new_papers = int(rng.poisson(float(p)))
        if config.cite_same_month:
            counts = np.concatenate([counts, np.zeros(new_papers, dtype=np.int64)])
        citation_draws += counts.size
        counts = counts + rng.poisson(float(c), size=counts.size)
        if not config.cite_same_month:
            counts = np.concatenate([counts, np.zeros(new_papers, dtype=np.int64)])
        records.append(make_record(counts.tolist()))

    indices = parse_index_list(list(config.indices))
    provenance = {
        "model": "poisson",
        "researcher": researcher,
        "seed": config.seed,
        "stream_id": stream_id,
        "p": str(p),
        "c": str(c),
        "papers_published": int(counts.size),
        "citation_draws": citation_draws,
        "citations": int(counts.sum()),
    }
    times = list(range(1, config.months + 1))
    return CareerTrajectory(provenance, times, records, evaluate_records(records, indices))


def deterministic_career(config: SimulationConfig, researcher: str = "A") -> CareerTrajectory:
    """The monthly career with Poisson draws replaced by their means."""
    p, c = config.rates(researcher)
    params = DeterministicParams(p, c, "month", config.cite_same_month)
    records = [monthly_deterministic_record(params, t) for t in range(1, config.months + 1)]
    indices = parse_index_list(list(config.indices))
    provenance = {
        "model": "deterministic",
        "researcher": researcher,
        "p": str(p),
        "c": str(c),
        "papers_published": math.floor(p * config.months),
    }
    times = list(range(1, config.months + 1))
    return CareerTrajectory(provenance, times, records, evaluate_records(records, indices))


# =============================================================================
# INCREMENTOS
# =============================================================================


@dataclass(frozen=True)
class IncrementStats:
    """Normalized SD of the monthly increments and the share of nonzero ones."""

    sd: float
    nonzero_fraction: float


def _increments(series: Sequence[IndexValue]) -> Tuple[np.ndarray, int]:
    floats = np.array([value.approx for value in series], dtype=float)
    nonzero = sum(1 for a, b in zip(series, series[1:]) if a != b)
    return np.diff(floats), nonzero


def _sd(values: np.ndarray) -> float:
    if values.size < 2:
        return 0.0
    return float(np.std(values, ddof=1))


def increment_stats(
    trajectory: CareerTrajectory, index: str, career_mean: Optional[float] = None
) -> IncrementStats:
    """
    Estadísticas de los incrementos Δg(t) = g(x(t)) - g(x(t-1)).

    Parameters
    ----------
    trajectory : CareerTrajectory
        Trayectoria con al menos dos instantáneas.
    index : str
        Índice seguido en la trayectoria.
    career_mean : float, optional
        Valor medio de carrera para normalizar (la SD se divide por
        career_mean/100). Por defecto el valor final de la trayectoria.

    Returns
    -------
    IncrementStats
        SD normalizada (cuasi-desviación) y fracción de meses con Δg != 0,
        comparando valores exactos.

    Raises
    ------
    ValueError
        Si la trayectoria tiene menos de dos instantáneas.
    """
    series = trajectory.series(index)
    if len(series) < 2:
        raise ValueError(f"Increment statistics need 2 snapshots, got {len(series)}.")
    increments, nonzero = _increments(series)
    scale = career_mean if career_mean is not None else series[-1].approx
    sd = _sd(increments)
    if scale > 0:
        sd = sd * 100 / scale
    return IncrementStats(sd, nonzero / increments.size)


# =============================================================================
# CAMPAÑAS
# =============================================================================


@dataclass
class CareerSummary:
    """What a worker returns for one career: finals, raw increments, draw totals."""

    researcher: str
    stream_id: int
    final: Dict[str, IndexValue]
    increments: Dict[str, np.ndarray]
    nonzero: Dict[str, int]
    papers_published: int
    citation_draws: int
    citations: int


def _summarize(trajectory: CareerTrajectory, indices: Sequence[str]) -> CareerSummary:
    final: Dict[str, IndexValue] = {}
    increments: Dict[str, np.ndarray] = {}
    nonzero: Dict[str, int] = {}
    for name in indices:
        series = trajectory.series(name)
        final[name] = series[-1]
        increments[name], nonzero[name] = _increments(series)
    provenance = trajectory.provenance
    return CareerSummary(
        researcher=provenance["researcher"],
        stream_id=provenance.get("stream_id", -1),
        final=final,
        increments=increments,
        nonzero=nonzero,
        papers_published=provenance["papers_published"],
        citation_draws=provenance.get("citation_draws", 0),
        citations=provenance.get("citations", 0),
    )


def _run_career(task: Tuple[SimulationConfig, int, str]) -> CareerSummary:
    config, career, researcher = task
    trajectory = simulate_career(config, config.stream_id(career, researcher), researcher)
    return _summarize(trajectory, config.indices)


@dataclass(frozen=True)
class IndexStatistics:
    """Columns (0)-(3) for one index and researcher."""

    index: str
    researcher: str
    mean_value: float
    career_sd: Optional[float]
    increment_sd: float
    nonzero_fraction: float


@dataclass(frozen=True)
class PairStatistics:
    """Columns (4)-(6): A strictly above B, A equal to B, and either."""

    index: str
    reversals: float
    ties: float

    @property
    def ties_or_reversals(self) -> float:
        return self.ties + self.reversals


@dataclass(frozen=True)
class CalibrationStats:
    """Empirical Poisson means against the configured ones."""

    researcher: str
    expected_p: float
    expected_c: float
    papers_per_month: float
    papers_se: float
    citations_per_draw: float
    citations_se: float

    def within(self, standard_errors: float = 4.0) -> bool:
        papers_ok = abs(self.papers_per_month - self.expected_p) <= standard_errors * self.papers_se
        citations_ok = (
            abs(self.citations_per_draw - self.expected_c) <= standard_errors * self.citations_se
        )
        return papers_ok and citations_ok

    def to_dict(self) -> Dict[str, Any]:
        return {
            "researcher": self.researcher,
            "expected_p": self.expected_p,
            "expected_c": self.expected_c,
            "papers_per_month": self.papers_per_month,
            "papers_se": self.papers_se,
            "citations_per_draw": self.citations_per_draw,
            "citations_se": self.citations_se,
        }


@dataclass
class SimulationReport:
    """
    Informe de una campaña.

    Attributes
    ----------
    config : SimulationConfig
        Configuración usada.
    statistics : list of IndexStatistics
        Columnas (0)-(3) por investigadora e índice.
    pairs : list of PairStatistics
        Columnas (4)-(6) por índice (solo en modo por parejas).
    calibration : list of CalibrationStats
        Medias empíricas de las extracciones (vacía sin ruido).
    final_values : dict
        Investigadora -> índice -> valores finales de cada carrera.
    papers_published : dict
        Investigadora -> artículos publicados en cada carrera.
    """

    config: SimulationConfig
    statistics: List[IndexStatistics] = field(default_factory=list)
    pairs: List[PairStatistics] = field(default_factory=list)
    calibration: List[CalibrationStats] = field(default_factory=list)
    final_values: Dict[str, Dict[str, List[IndexValue]]] = field(default_factory=dict)
    papers_published: Dict[str, List[int]] = field(default_factory=dict)

    def stats_for(self, index: str, researcher: str = "A") -> IndexStatistics:
        for row in self.statistics:
            if row.index == index and row.researcher == researcher:
                return row
        raise ValueError(f"No statistics for index {index!r}, researcher {researcher!r}.")

    def pair_for(self, index: str) -> PairStatistics:
        for row in self.pairs:
            if row.index == index:
                return row
        raise ValueError(f"No paired statistics for index {index!r}.")

    def normalized_values(self, index: str, researcher: str = "A") -> np.ndarray:
        """Career values scaled so that they average 100."""
        values = np.array(
            [value.approx for value in self.final_values[researcher][index]], dtype=float
        )
        mean = values.mean()
        if mean == 0:
            return np.zeros_like(values)
        return values * 100 / mean

    def table_rows(self) -> List[Dict[str, Any]]:
        """Rows keyed by TABLE_COLUMNS; pair columns are filled on A's rows only."""
        pairs = {row.index: row for row in self.pairs}
        rows = []
        for stats in self.statistics:
            p, c = self.config.rates(stats.researcher)
            pair = pairs.get(stats.index) if stats.researcher == "A" else None
            rows.append(
                dict(
                    zip(
                        TABLE_COLUMNS,
                        (
                            stats.researcher,
                            float(p),
                            float(c),
                            stats.index,
                            stats.mean_value,
                            stats.career_sd,
                            stats.increment_sd,
                            stats.nonzero_fraction,
                            pair.reversals if pair else None,
                            pair.ties if pair else None,
                            pair.ties_or_reversals if pair else None,
                        ),
                    )
                )
            )
        return rows

    def to_dict(self) -> Dict[str, Any]:
        return {
            "config": self.config.to_dict(),
            "statistics": [
                {
                    "index": s.index,
                    "researcher": s.researcher,
                    "mean_value": s.mean_value,
                    "career_sd": s.career_sd,
                    "increment_sd": s.increment_sd,
                    "nonzero_fraction": s.nonzero_fraction,
                }
                for s in self.statistics
            ],
            "pairs": [
                {
                    "index": pair.index,
                    "reversals": pair.reversals,
                    "ties": pair.ties,
                    "ties_or_reversals": pair.ties_or_reversals,
                }
                for pair in self.pairs
            ],
            "calibration": [cal.to_dict() for cal in self.calibration],
            "final_values": {
                researcher: {
                    name: [value.exact_form() for value in values]
                    for name, values in by_index.items()
                }
                for researcher, by_index in self.final_values.items()
            },
            "papers_published": self.papers_published,
        }


def _index_statistics(
    summaries: Sequence[CareerSummary], name: str, researcher: str, with_sd: bool
) -> IndexStatistics:
    finals = np.array([s.final[name].approx for s in summaries], dtype=float)
    mean = float(finals.mean())
    increments = np.concatenate([s.increments[name] for s in summaries])
    steps = sum(s.increments[name].size for s in summaries)
    nonzero = sum(s.nonzero[name] for s in summaries)
    if mean > 0:
        career_sd = _sd(finals * 100 / mean)
        increment_sd = _sd(increments) * 100 / mean
    else:
        career_sd, increment_sd = 0.0, 0.0
    return IndexStatistics(
        index=name,
        researcher=researcher,
        mean_value=mean,
        career_sd=career_sd if with_sd else None,
        increment_sd=increment_sd,
        nonzero_fraction=nonzero / steps if steps else 0.0,
    )


def _calibration(
    config: SimulationConfig, summaries: Sequence[CareerSummary], researcher: str
) -> CalibrationStats:
    p, c = (float(rate) for rate in config.rates(researcher))
    months = len(summaries) * config.months
    draws = sum(s.citation_draws for s in summaries)
    papers_mean = sum(s.papers_published for s in summaries) / months
    citations_mean = sum(s.citations for s in summaries) / draws if draws else 0.0
    return CalibrationStats(
        researcher=researcher,
        expected_p=p,
        expected_c=c,
        papers_per_month=papers_mean,
        papers_se=math.sqrt(p / months),
        citations_per_draw=citations_mean,
        citations_se=math.sqrt(c / draws) if draws else math.inf,
    )


def _pair_statistics(
    a: Sequence[CareerSummary], b: Sequence[CareerSummary], name: str
) -> PairStatistics:
    ties = sum(1 for x, y in zip(a, b) if x.final[name] == y.final[name])
    reversals = sum(1 for x, y in zip(a, b) if x.final[name] > y.final[name])
    return PairStatistics(name, reversals / len(a), ties / len(a))


def _collect(config: SimulationConfig) -> Dict[str, List[CareerSummary]]:
    if not config.noise:
        return {
            researcher: [_summarize(deterministic_career(config, researcher), config.indices)]
            for researcher in config.researchers()
        }
    tasks = [
        (config, career, researcher)
        for career in range(config.careers)
        for researcher in config.researchers()
    ]
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            results = list(pool.map(_run_career, tasks, chunksize=8))
    else:
        results = []
        for task in tasks:
            results.append(_run_career(task))
            logger.debug("Career %d (%s) done", task[1], task[2])
    summaries: Dict[str, List[CareerSummary]] = {r: [] for r in config.researchers()}
    for summary in results:
        summaries[summary.researcher].append(summary)
    return summaries


def run_campaign(config: SimulationConfig) -> SimulationReport:
    """
    Ejecuta una campaña completa y calcula el informe.

    Las estadísticas de carrera normalizan los valores finales para que
    promedien 100 por índice; la SD de incrementos agrupa todos los pares
    (carrera, mes) y se normaliza por la media de carrera / 100. Los
    empates usan igualdad exacta y una inversión cuenta cuando A supera
    estrictamente a B.

    Parameters
    ----------
    config : SimulationConfig
        Configuración de la campaña.

    Returns
    -------
    SimulationReport
        Informe con las columnas (0)-(6), calibración y valores finales.
    """
    logger.info(
        "Starting campaign p=%s c=%s: %d careers x %d months (paired=%s, noise=%s, workers=%d)",
        config.p,
        config.c,
        config.careers,
        config.months,
        config.paired,
        config.noise,
        config.workers,
    )
    summaries = _collect(config)
    report = SimulationReport(config)
    for researcher, group in summaries.items():
        for name in config.indices:
            report.statistics.append(_index_statistics(group, name, researcher, config.noise))
        if config.noise:
            report.calibration.append(_calibration(config, group, researcher))
        report.final_values[researcher] = {
            name: [s.final[name] for s in group] for name in config.indices
        }
        report.papers_published[researcher] = [s.papers_published for s in group]
    if config.paired:
        report.pairs = [
            _pair_statistics(summaries["A"], summaries["B"], name) for name in config.indices
        ]
    logger.info("Campaign finished: %d statistic rows", len(report.statistics))
    return report
