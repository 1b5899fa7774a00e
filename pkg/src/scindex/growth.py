# =============================================================================
# SCINDEX - Modelo Determinista de Crecimiento
# =============================================================================
#
# PROPÓSITO:
# Implementa el modelo determinista simple de carrera (p artículos por
# periodo, cada uno citado c veces por periodo) en sus variantes anual y
# mensual, y verifica las franjas de crecimiento lineal de los índices.
#
# FUNCIONALIDAD PRINCIPAL:
# - Registro x(n) del modelo anual y mensual, con p y c racionales
# - Trayectorias de índices a lo largo de una carrera (CareerTrajectory)
# - Chequeo exacto de la franja s·n <= g(x(n)) <= s·n + d para h, h′, w, w′
# - Ajuste empírico de franja para el resto de índices
#
# USO EN EL ENTORNO:
# axioms.py delega el axioma de crecimiento lineal en strip_check;
# montecarlo.py reutiliza CareerTrajectory y el modelo mensual sin ruido;
# cli.py expone trajectory.
#
# REGLA DE ACUMULACIÓN:
# El artículo j aparece en el periodo t_j = min{t : ⌊p·t⌋ >= j} y en el
# periodo n acumula ⌊c·(n - t_j + δ)⌋ citas, con δ = 1 si se cita en el mismo
# periodo de publicación (modelo anual) y δ = 0 si no (modelo mensual).
#
# DEPENDENCIAS:
# - numpy: Ajuste por mínimos cuadrados de pendientes
# - .indices, .records, .values
#
# =============================================================================

"""Deterministic career model and linear-growth strips."""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from .indices import BUILTIN_INDICES, IndexDescriptor, IndexKind
from .records import CitationRecord, make_record
from .utils import parse_rational
from .values import IndexValue

logger = logging.getLogger(__name__)

PERIODS = ("year", "month")

# Franja empírica: ancho total <= RATIO · ancho de la primera mitad + SLACK
EMPIRICAL_WIDTH_RATIO = 2.0
EMPIRICAL_WIDTH_SLACK = 1.0


@dataclass(frozen=True)
class DeterministicParams:
    """
    Parámetros del modelo determinista.

    Parameters
    ----------
    p : Fraction, str or number
        Artículos por periodo (> 0).
    c : Fraction, str or number
        Citas por artículo y periodo (> 0).
    period : {"year", "month"}, optional
        Unidad de tiempo. Por defecto "year".
    cite_same_period : bool, optional
        Si el artículo se cita ya en su periodo de publicación. Por defecto
        True para "year" y False para "month".

    Raises
    ------
    ValueError
        Si p o c no son positivos o el periodo no es válido.
    """

    p: Fraction
    c: Fraction
    period: str = "year"
    cite_same_period: Optional[bool] = None

    def __post_init__(self) -> None:
        p, c = parse_rational(self.p), parse_rational(self.c)
        if p <= 0 or c <= 0:
            raise ValueError(f"p and c must be positive, got p={p}, c={c}.")
        if self.period not in PERIODS:
            raise ValueError(f"Unknown period {self.period!r}; use one of {PERIODS}.")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "c", c)
        if self.cite_same_period is None:
            object.__setattr__(self, "cite_same_period", self.period == "year")

    @property
    def is_integral(self) -> bool:
        return self.p.denominator == 1 and self.c.denominator == 1

    def birth(self, j: int) -> int:
        """Period in which the j-th paper appears."""
        return math.ceil(j / self.p)


def _record_at(params: DeterministicParams, n: int) -> CitationRecord:
    papers = math.floor(params.p * n)
    delta = 1 if params.cite_same_period else 0
    counts = [
        max(math.floor(params.c * (n - params.birth(j) + delta)), 0)
        for j in range(1, papers + 1)
    ]
    return make_record(counts)


def deterministic_record(params: DeterministicParams, n: int) -> CitationRecord:
    """
    Registro x(n) del modelo determinista al final del periodo n.

    Con p y c enteros y periodo anual: p·n artículos, y los del año j tienen
    (n - j + 1)·c citas.

    Parameters
    ----------
    params : DeterministicParams
        Parámetros del modelo.
    n : int
        Periodo (n >= 1).

    Returns
    -------
    CitationRecord
        Registro normalizado (los artículos aún sin citas no aparecen).

    Raises
    ------
    ValueError
        Si n < 1.

    Examples
    --------
    >>> deterministic_record(DeterministicParams(1, 1), 5).entries
    (5, 4, 3, 2, 1)
    """
    if n < 1:
        raise ValueError(f"Period must be at least 1, got {n}.")
    return _record_at(params, n)


def monthly_deterministic_record(params: DeterministicParams, t: int) -> CitationRecord:
    """
    Registro del modelo mensual en el mes t.

    Las citas empiezan el mes siguiente a la publicación salvo que
    cite_same_period sea True.

    Raises
    ------
    ValueError
        Si el periodo no es mensual o t < 1.
    """
    if params.period != "month":
        raise ValueError(f"Monthly model needs period='month', got {params.period!r}.")
    if t < 1:
        raise ValueError(f"Month must be at least 1, got {t}.")
    return _record_at(params, t)


# =============================================================================
# TRAYECTORIAS
# =============================================================================


@dataclass
class CareerTrajectory:
    """
    Secuencia temporal de registros y valores de índices.

    Attributes
    ----------
    provenance : dict
        Parámetros o semilla que generaron la carrera.
    times : list of int
        Periodos de cada instantánea.
    records : list of CitationRecord
        Registro acumulado en cada periodo.
    values : dict of str to list of IndexValue
        Serie de valores por índice, alineada con times.
    """

    provenance: Dict[str, Any]
    times: List[int] = field(default_factory=list)
    records: List[CitationRecord] = field(default_factory=list)
    values: Dict[str, List[IndexValue]] = field(default_factory=dict)

    @property
    def snapshots(self) -> List[Tuple[int, CitationRecord]]:
        return list(zip(self.times, self.records))

    def series(self, name: str) -> List[IndexValue]:
        if name not in self.values:
            raise ValueError(f"Index {name!r} not tracked; have {sorted(self.values)}.")
        return self.values[name]

    def floats(self, name: str) -> np.ndarray:
        return np.array([value.approx for value in self.series(name)], dtype=float)

    def is_monotone(self, name: str) -> bool:
        series = self.series(name)
        return all(a <= b for a, b in zip(series, series[1:]))


def evaluate_records(
    records: Sequence[CitationRecord], indices: Sequence[IndexDescriptor]
) -> Dict[str, List[IndexValue]]:
    """Evaluate indices along a record sequence, reusing values for repeated records."""
    values: Dict[str, List[IndexValue]] = {descriptor.name: [] for descriptor in indices}
    previous: Optional[CitationRecord] = None
    for record in records:
        for descriptor in indices:
            series = values[descriptor.name]
            if record == previous:
                series.append(series[-1])
            else:
                series.append(descriptor(record))
        previous = record
    return values


def build_trajectory(
    params: DeterministicParams, horizon: int, indices: Sequence[IndexDescriptor]
) -> CareerTrajectory:
    """
    Genera la carrera determinista de los periodos 1..horizon.

    Parameters
    ----------
    params : DeterministicParams
        Parámetros del modelo.
    horizon : int
        Número de periodos (>= 1).
    indices : sequence of IndexDescriptor
        Índices a evaluar en cada periodo.

    Returns
    -------
    CareerTrajectory
        Trayectoria con una instantánea por periodo.
    """
    if horizon < 1:
        raise ValueError(f"Horizon must be at least 1, got {horizon}.")
    times = list(range(1, horizon + 1))
    records = [_record_at(params, n) for n in times]
    provenance = {
        "model": "deterministic",
        "p": str(params.p),
        "c": str(params.c),
        "period": params.period,
        "cite_same_period": params.cite_same_period,
    }
    return CareerTrajectory(provenance, times, records, evaluate_records(records, indices))


def fitted_slope(trajectory: CareerTrajectory, name: str) -> float:
    """Least-squares slope of an index series against time."""
    times = np.asarray(trajectory.times, dtype=float)
    slope, _ = np.polyfit(times, trajectory.floats(name), 1)
    return float(slope)


# =============================================================================
# FRANJAS DE CRECIMIENTO LINEAL
# =============================================================================


@dataclass(frozen=True)
class StripSpec:
    """Strip s·n <= g <= s·(n + offset); the offset is 1 (d = s) or 0 (exact line)."""

    slope: IndexValue
    offset: int


@dataclass
class StripReport:
    """
    Resultado de un chequeo de franja.

    Attributes
    ----------
    index : str
        Nombre del índice.
    p, c : str
        Parámetros en forma exacta.
    horizon : int
        Último periodo examinado.
    mode : {"anchored", "empirical"}
        Franja teórica anclada en el origen o ajuste libre.
    holds : bool
        Si todos los puntos quedan en la franja.
    first_violation : int, optional
        Primer periodo fuera de la franja (solo modo anclado).
    slope : float
        Pendiente de la franja (teórica o ajustada).
    width : float
        Ancho vertical d (teórico o ajustado).
    half_width : float, optional
        Ancho ajustado sobre la primera mitad del horizonte (modo empírico).
    """

    index: str
    p: str
    c: str
    horizon: int
    mode: str
    holds: bool
    first_violation: Optional[int]
    slope: float
    width: float
    half_width: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "index": self.index,
            "p": self.p,
            "c": self.c,
            "horizon": self.horizon,
            "mode": self.mode,
            "holds": self.holds,
            "first_violation": self.first_violation,
            "slope": self.slope,
            "width": self.width,
            "half_width": self.half_width,
        }


def strip_spec(name: str, p: Fraction, c: Fraction) -> StripSpec:
    """
    Franja teórica anclada en el origen para h, h′, w y w′.

    s_h = d_h = pc/(p+c); s_h′ = d_h′ = sqrt(pc)/2; s_w = min(p, c) con
    d_w = 0; s_w′ = sqrt(pc) con d_w′ = 0.

    Raises
    ------
    ValueError
        Si el índice no tiene franja teórica.
    """
    if name == "h":
        return StripSpec(IndexValue(p * c / (p + c)), 1)
    if name == "hprime":
        return StripSpec(IndexValue(p * c / 4, 2), 1)
    if name == "w":
        return StripSpec(IndexValue(min(p, c)), 0)
    if name == "wprime":
        return StripSpec(IndexValue(p * c, 2), 0)
    raise ValueError(f"No closed-form strip for index {name!r}.")


def minimal_strip(times: Sequence[float], values: Sequence[float]) -> Tuple[float, float]:
    """
    Franja de ancho vertical mínimo que contiene los puntos (n, g_n).

    El ancho es convexo y lineal a trozos en la pendiente, así que el
    mínimo se alcanza en la pendiente de algún par de puntos.

    Returns
    -------
    tuple of (float, float)
        (pendiente, ancho).
    """
    t = np.asarray(times, dtype=float)
    v = np.asarray(values, dtype=float)
    if t.size < 2:
        return 0.0, 0.0
    dt = t[None, :] - t[:, None]
    dv = v[None, :] - v[:, None]
    mask = dt > 0
    candidates = np.unique(np.append(dv[mask] / dt[mask], 0.0))
    residuals = v[None, :] - candidates[:, None] * t[None, :]
    widths = residuals.max(axis=1) - residuals.min(axis=1)
    best = int(np.argmin(widths))
    return float(candidates[best]), float(widths[best])


def strip_width_is_stable(width: float, half_width: float) -> bool:
    """
    Regla de la franja empírica: width <= 2·half_width + 1.

    Si g(x(n)) queda en una franja s·n <= g <= s·n + d, el ancho mínimo
    sobre cualquier tramo de años es a lo sumo d, así que doblar el
    horizonte no lo hace crecer salvo por oscilaciones que aún no habían
    aparecido. Con crecimiento cuadrático a·n² el ancho mínimo sobre
    [1, N] es del orden de a·N²/8 y se multiplica por 4 al doblar N. El
    factor 2 separa ambos casos. La holgura de una unidad cubre los
    índices enteros de la forma ⌊s·n + r⌋, cuyo ancho es menor que 1 en
    cualquier tramo pero puede pasar de casi 0 a casi 1 entre la primera
    mitad y el horizonte completo.

    Parameters
    ----------
    width : float
        Ancho mínimo sobre todo el horizonte.
    half_width : float
        Ancho mínimo sobre la primera mitad.

    Returns
    -------
    bool
        Si el ancho se considera acotado.
    """
    return width <= EMPIRICAL_WIDTH_RATIO * half_width + EMPIRICAL_WIDTH_SLACK


def _is_anchored(g: IndexDescriptor) -> bool:
    return g.kind is IndexKind.BUILTIN and BUILTIN_INDICES.get(g.name) is g and g.name in (
        "h",
        "hprime",
        "w",
        "wprime",
    )


def strip_check(
    g: IndexDescriptor,
    params: DeterministicParams,
    horizon: int = 40,
) -> StripReport:
    """
    Comprueba que g(x(n)) crece dentro de una franja lineal.

    Para h, h′, w y w′ se usa la franja teórica anclada en el origen y las
    comparaciones son exactas (con cuadrados en los casos sqrt(pc)). Para el
    resto se ajusta la franja de ancho mínimo sobre todo el horizonte y sobre
    su primera mitad, y se aplica strip_width_is_stable.

    Parameters
    ----------
    g : IndexDescriptor
        Índice a examinar.
    params : DeterministicParams
        Modelo anual con p y c enteros.
    horizon : int, optional
        Último año. Por defecto 40.

    Returns
    -------
    StripReport
        Veredicto y parámetros de la franja.

    Raises
    ------
    ValueError
        Si p o c no son enteros o el periodo no es anual.
    """
    if not params.is_integral or params.period != "year":
        raise ValueError(
            f"Strip checks need integer p, c on the annual model, got "
            f"p={params.p}, c={params.c}, period={params.period}."
        )
    trajectory = build_trajectory(params, horizon, [g])
    series = trajectory.series(g.name)

    if _is_anchored(g):
        spec = strip_spec(g.name, params.p, params.c)
        first_violation = None
        for n, value in zip(trajectory.times, series):
            lower = spec.slope * n
            upper = spec.slope * (n + spec.offset)
            if not lower <= value <= upper:
                first_violation = n
                logger.info("%s leaves its strip at n=%d (value %s)", g.name, n, value)
                break
        return StripReport(
            index=g.name,
            p=str(params.p),
            c=str(params.c),
            horizon=horizon,
            mode="anchored",
            holds=first_violation is None,
            first_violation=first_violation,
            slope=spec.slope.approx,
            width=spec.slope.approx * spec.offset,
        )

    values = trajectory.floats(g.name)
    half = max(horizon // 2, 2)
    slope, width = minimal_strip(trajectory.times, values)
    _, half_width = minimal_strip(trajectory.times[:half], values[:half])
    holds = strip_width_is_stable(width, half_width)
    return StripReport(
        index=g.name,
        p=str(params.p),
        c=str(params.c),
        horizon=horizon,
        mode="empirical",
        holds=holds,
        first_violation=None,
        slope=slope,
        width=width,
        half_width=half_width,
    )


def parse_params(
    p: Union[str, float, Fraction], c: Union[str, float, Fraction], period: str = "year"
) -> DeterministicParams:
    """Build parameters from CLI-style text such as ``"0.2"``."""
    return DeterministicParams(parse_rational(p), parse_rational(c), period)
