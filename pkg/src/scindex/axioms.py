# =============================================================================
# SCINDEX - Axiomas como Predicados Ejecutables
# =============================================================================
#
# PROPÓSITO:
# Convierte los axiomas de los índices de citas (monotonía, simetría,
# invariancia de escala, acotación por el máximo, respuestas y crecimiento
# lineal) en chequeos exhaustivos sobre dominios finitos de registros, y
# construye los índices contraejemplo que separan unos axiomas de otros.
#
# FUNCIONALIDAD PRINCIPAL:
# - Dominio de enumeración L x M con factores de escala y estiramiento
# - check_mon, check_sym, check_sinv, check_ssinv, check_maxb
# - Respuestas débil, raíz cuadrada y de escala; crecimiento lineal
# - Índices contraejemplo t½, d, f y la constante 1
# - Matriz de independencia (índice x axioma) con testigos
#
# USO EN EL ENTORNO:
# cli.py expone "scindex axioms"; las pruebas comprueban que cada celda de
# la matriz reproduce lo esperado.
#
# ALCANCE:
# "Holds-on-domain" es una afirmación acotada: estos chequeos buscan
# contraejemplos, no demuestran nada. Cada veredicto "violated" lleva un
# testigo que se puede volver a evaluar con reproduces_violation.
#
# DEPENDENCIAS:
# - .records: enumeración, dual, escalados, cmax
# - .indices: índices y descriptores
# - .growth: franjas de crecimiento lineal
#
# =============================================================================

"""Executable axioms, counterexample indices and the independence matrix."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import zip_longest
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .data import STRETCH_INVERSION_FACTOR, STRETCH_INVERSION_PAIR
from .growth import DeterministicParams, strip_check
from .indices import (
    BUILTIN_INDICES,
    IndexDescriptor,
    IndexKind,
    hirsch_power_index,
)
from .records import (
    CitationRecord,
    dual,
    enumerate_records,
    hstretch,
    outer_corners,
    successors,
    vscale,
)
from .utils import parse_rational, substitute_prime
from .values import IndexValue

logger = logging.getLogger(__name__)

HOLDS = "holds-on-domain"
VIOLATED = "violated"

MON = "Mon"
SYM = "Sym"
SINV = "SInv"
SSINV = "SSInv"
MAXB = "MaxB"
WRESP = "WResp"
SQRTRESP = "SqrtResp"
SRESP = "SResp"
LGR = "LGr"

MATRIX_COLUMNS = (MON, SYM, SSINV, MAXB, WRESP, SQRTRESP)


# =============================================================================
# DOMINIO E INFORMES
# =============================================================================


@dataclass(frozen=True)
class EnumerationDomain:
    """
    Dominio finito sobre el que se cuantifican los axiomas.

    Parameters
    ----------
    max_length : int, optional
        L, longitud máxima de los registros. Por defecto 6.
    max_citations : int, optional
        M, cota de la entrada mayor. Por defecto 6.
    scale_factors : tuple of int, optional
        Valores de k para los axiomas de escala. Por defecto (1, 2, 3).
    stretch_factors : tuple of int, optional
        Valores de m para los axiomas de escala. Por defecto (1, 2, 3).
    """

    max_length: int = 6
    max_citations: int = 6
    scale_factors: Tuple[int, ...] = (1, 2, 3)
    stretch_factors: Tuple[int, ...] = (1, 2, 3)

    def __post_init__(self) -> None:
        if self.max_length < 1 or self.max_citations < 1:
            raise ValueError(
                f"Domain bounds must be positive, got L={self.max_length}, "
                f"M={self.max_citations}."
            )
        for name in ("scale_factors", "stretch_factors"):
            factors = tuple(getattr(self, name))
            if not factors or min(factors) < 1:
                raise ValueError(f"{name} must be non-empty positive integers, got {factors}.")
            object.__setattr__(self, name, factors)

    def records(self) -> List[CitationRecord]:
        return list(enumerate_records(self.max_length, self.max_citations))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "L": self.max_length,
            "M": self.max_citations,
            "K": list(self.scale_factors),
            "Mx": list(self.stretch_factors),
        }


@dataclass(frozen=True)
class AxiomWitness:
    """Counterexample: the records involved plus scale k and stretch m when relevant."""

    records: Tuple[CitationRecord, ...]
    k: Optional[int] = None
    m: Optional[int] = None
    note: str = ""

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"records": [list(record.entries) for record in self.records]}
        if self.k is not None:
            data["k"] = self.k
        if self.m is not None:
            data["m"] = self.m
        if self.note:
            data["note"] = self.note
        return data


@dataclass
class AxiomReport:
    """
    Resultado de un chequeo de axioma.

    Attributes
    ----------
    axiom : str
        Nombre corto del axioma ("Mon", "Sym", ...).
    index : str
        Nombre del índice examinado.
    domain : dict
        Parámetros del dominio (L, M, K, Mx) o del modelo de crecimiento.
    verdict : str
        "holds-on-domain" o "violated".
    witness : AxiomWitness, optional
        Contraejemplo, presente si y solo si el veredicto es "violated".
    details : dict
        Información adicional (por ejemplo la franja ajustada).
    """

    axiom: str
    index: str
    domain: Dict[str, Any]
    verdict: str
    witness: Optional[AxiomWitness] = None
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    def to_dict(self) -> Dict[str, Any]:
        return {
            "axiom": self.axiom,
            "index": self.index,
            "domain": self.domain,
            "verdict": self.verdict,
            "witness": self.witness.to_dict() if self.witness else None,
            "details": self.details,
        }


def _report(
    axiom: str,
    g: IndexDescriptor,
    domain: Dict[str, Any],
    witness: Optional[AxiomWitness],
    **details: Any,
) -> AxiomReport:
    verdict = VIOLATED if witness is not None else HOLDS
    if witness is not None:
        logger.info("%s violates %s: %s", g.name, axiom, witness.to_dict())
    return AxiomReport(axiom, g.name, domain, verdict, witness, dict(details))


class _ValueTable:
    # Memoriza g por tupla de entradas; evita reconstruir registros en MaxB
    def __init__(self, g: IndexDescriptor):
        self.g = g
        self.cache: Dict[Tuple[int, ...], IndexValue] = {}

    def __call__(self, x: CitationRecord) -> IndexValue:
        return self.by_entries(x.entries)

    def by_entries(self, entries: Tuple[int, ...]) -> IndexValue:
        value = self.cache.get(entries)
        if value is None:
            value = self.g(CitationRecord(entries))
            self.cache[entries] = value
        return value


def _rec(*entries: int) -> CitationRecord:
    return CitationRecord(tuple(entries))


def _transform(x: CitationRecord, k: int, m: int) -> CitationRecord:
    return vscale(hstretch(x, m), k)


# =============================================================================
# PREDICADOS SOBRE TESTIGOS
# =============================================================================


def _violates_mon(g: Callable[[CitationRecord], IndexValue], w: AxiomWitness) -> bool:
    x, y = w.records
    return g(x) > g(y)


def _violates_sym(g: Callable[[CitationRecord], IndexValue], w: AxiomWitness) -> bool:
    (x,) = w.records
    return g(x) != g(dual(x))


def _violates_sinv(g: Callable[[CitationRecord], IndexValue], w: AxiomWitness) -> bool:
    x, y = w.records
    k, m = w.k or 1, w.m or 1
    before = g(x) <= g(y)
    after = g(_transform(x, k, m)) <= g(_transform(y, k, m))
    before_reverse = g(y) <= g(x)
    after_reverse = g(_transform(y, k, m)) <= g(_transform(x, k, m))
    return before != after or before_reverse != after_reverse


def _violates_ssinv(g: Callable[[CitationRecord], IndexValue], w: AxiomWitness) -> bool:
    x, y = w.records
    k, m = w.k or 1, w.m or 1
    return g(x) * g(_transform(y, k, m)) != g(y) * g(_transform(x, k, m))


def _violates_maxb(g: Callable[[CitationRecord], IndexValue], w: AxiomWitness) -> bool:
    x, y = w.records
    z = CitationRecord(tuple(max(a, b) for a, b in zip_longest(x, y, fillvalue=0)))
    return g(z) > max(g(x), g(y))


def _violates_wresp(g: Callable[[CitationRecord], IndexValue], w: AxiomWitness) -> bool:
    return not g(_rec(2, 2)) > g(_rec(1))


def _violates_sqrtresp(g: Callable[[CitationRecord], IndexValue], w: AxiomWitness) -> bool:
    return g(_rec(2)) != IndexValue.sqrt(2)


def _violates_sresp(g: Callable[[CitationRecord], IndexValue], w: AxiomWitness) -> bool:
    return not g(_rec(2)) > g(_rec(1))


_WITNESS_CHECKS: Dict[str, Callable[[Callable[[CitationRecord], IndexValue], AxiomWitness], bool]] = {
    MON: _violates_mon,
    SYM: _violates_sym,
    SINV: _violates_sinv,
    SSINV: _violates_ssinv,
    MAXB: _violates_maxb,
    WRESP: _violates_wresp,
    SQRTRESP: _violates_sqrtresp,
    SRESP: _violates_sresp,
}


def reproduces_violation(g: IndexDescriptor, report: AxiomReport) -> bool:
    """
    Vuelve a evaluar el testigo de un informe sin usar ninguna caché.

    Returns
    -------
    bool
        True si el testigo sigue violando el axioma. Para informes sin
        testigo devuelve False.

    Raises
    ------
    ValueError
        Si el axioma no tiene un predicado de testigo (por ejemplo LGr).
    """
    if report.witness is None:
        return False
    if report.axiom not in _WITNESS_CHECKS:
        raise ValueError(f"No witness predicate for axiom {report.axiom!r}.")
    return _WITNESS_CHECKS[report.axiom](g.evaluate, report.witness)


# =============================================================================
# CHEQUEOS EXHAUSTIVOS
# =============================================================================


def check_mon(g: IndexDescriptor, domain: Optional[EnumerationDomain] = None) -> AxiomReport:
    """
    Monotonía: x ⪯ y implica g(x) <= g(y).

    Basta con los pares de cobertura (y sucesor inmediato de x), porque
    toda cadena x ⪯ y se descompone en ellos y <= es transitiva.
    """
    domain = domain or EnumerationDomain()
    table = _ValueTable(g)
    named = [AxiomWitness((_rec(3), _rec(4)))]
    for witness in named:
        if _violates_mon(table, witness):
            return _report(MON, g, domain.to_dict(), witness)

    for x in domain.records():
        for y in successors(x, domain.max_length, domain.max_citations):
            if table(x) > table(y):
                return _report(MON, g, domain.to_dict(), AxiomWitness((x, y)))
    return _report(MON, g, domain.to_dict(), None)


def check_sym(g: IndexDescriptor, domain: Optional[EnumerationDomain] = None) -> AxiomReport:
    """Symmetry: g(x) = g(x*) for the dual record x*."""
    domain = domain or EnumerationDomain()
    table = _ValueTable(g)
    candidates: Iterable[CitationRecord] = [_rec(8, 6, 2)] + domain.records()
    for x in candidates:
        if table(x) != table(dual(x)):
            return _report(SYM, g, domain.to_dict(), AxiomWitness((x,)))
    return _report(SYM, g, domain.to_dict(), None)


def check_ssinv(g: IndexDescriptor, domain: Optional[EnumerationDomain] = None) -> AxiomReport:
    """
    Invariancia de escala fuerte: g(x)·g(k y^m) = g(y)·g(k x^m).

    Con y = (1) la igualdad dice g(k x^m) = g(x)·g(k·(1)^m); si se cumple
    para todo x (y g(1) != 0), se cumple para todos los pares. Por eso se
    recorren solo los pares (x, (1)), además del testigo con nombre
    x = (1), y = (2), k = 2.
    """
    domain = domain or EnumerationDomain()
    table = _ValueTable(g)
    one = _rec(1)
    named = [AxiomWitness((one, _rec(2)), k=2, m=1)]
    for witness in named:
        if _violates_ssinv(table, witness):
            return _report(SSINV, g, domain.to_dict(), witness)

    records = domain.records()
    if table(one) == 0:
        # Sin normalización g(1) != 0 la reducción no vale: todos los pares
        pairs = [(x, y) for x in records for y in records]
    else:
        pairs = [(x, one) for x in records]
    for x, y in pairs:
        for k in domain.scale_factors:
            for m in domain.stretch_factors:
                witness = AxiomWitness((x, y), k=k, m=m)
                if _violates_ssinv(table, witness):
                    return _report(SSINV, g, domain.to_dict(), witness)
    return _report(SSINV, g, domain.to_dict(), None)


def check_sinv(g: IndexDescriptor, domain: Optional[EnumerationDomain] = None) -> AxiomReport:
    """
    Invariancia de escala: g(x) <= g(y) si y solo si g(k x^m) <= g(k y^m).

    Para cada (k, m) se ordenan los registros por g; la transformación
    conserva el orden si entre vecinos consecutivos los empates siguen
    siendo empates y las desigualdades estrictas siguen siéndolo. Antes se
    prueba el par C, D estirado por 3, cuyo orden por h se invierte.
    """
    domain = domain or EnumerationDomain()
    table = _ValueTable(g)
    pair = (
        CitationRecord(STRETCH_INVERSION_PAIR["C"]),
        CitationRecord(STRETCH_INVERSION_PAIR["D"]),
    )
    named = [AxiomWitness(pair, k=1, m=STRETCH_INVERSION_FACTOR)]
    for witness in named:
        if _violates_sinv(table, witness):
            return _report(SINV, g, domain.to_dict(), witness)

    records = domain.records()
    ordered = sorted(range(len(records)), key=lambda i: (table(records[i]), i))
    for k in domain.scale_factors:
        for m in domain.stretch_factors:
            for i, j in zip(ordered, ordered[1:]):
                x, y = records[i], records[j]
                before, after = table(x), table(y)
                moved_before = table(_transform(x, k, m))
                moved_after = table(_transform(y, k, m))
                tied = before == after
                if (tied and moved_before != moved_after) or (
                    not tied and moved_before >= moved_after
                ):
                    return _report(SINV, g, domain.to_dict(), AxiomWitness((x, y), k=k, m=m))
    return _report(SINV, g, domain.to_dict(), None)


def check_maxb(g: IndexDescriptor, domain: Optional[EnumerationDomain] = None) -> AxiomReport:
    """
    Acotación por el máximo: g(cmax(x, y)) <= max(g(x), g(y)).

    Se recorren los pares no ordenados del dominio; cmax de dos registros
    de la caja sigue en la caja, así que todos los valores salen de la
    misma tabla.
    """
    domain = domain or EnumerationDomain()
    table = _ValueTable(g)
    named = [AxiomWitness((_rec(4, 4), _rec(2, 2, 2, 2)))]
    for witness in named:
        if _violates_maxb(table, witness):
            return _report(MAXB, g, domain.to_dict(), witness)

    records = [record.entries for record in domain.records()]
    values = [table.by_entries(entries) for entries in records]
    for i, x in enumerate(records):
        for j in range(i + 1, len(records)):
            y = records[j]
            z = tuple(max(a, b) for a, b in zip_longest(x, y, fillvalue=0))
            if table.by_entries(z) > max(values[i], values[j]):
                witness = AxiomWitness((CitationRecord(x), CitationRecord(y)))
                return _report(MAXB, g, domain.to_dict(), witness)
    return _report(MAXB, g, domain.to_dict(), None)


def _single_check(axiom: str, g: IndexDescriptor, witness: AxiomWitness) -> AxiomReport:
    violated = _WITNESS_CHECKS[axiom](g.evaluate, witness)
    return _report(axiom, g, {}, witness if violated else None)


def check_wresp(g: IndexDescriptor) -> AxiomReport:
    """Weak responsiveness: g(2, 2) > g(1)."""
    return _single_check(WRESP, g, AxiomWitness((_rec(2, 2), _rec(1))))


def check_sqrtresp(g: IndexDescriptor) -> AxiomReport:
    """Square-root responsiveness: g(2) = sqrt(2)."""
    return _single_check(SQRTRESP, g, AxiomWitness((_rec(2),)))


def check_sresp(g: IndexDescriptor) -> AxiomReport:
    """Scale responsiveness: g(2) > g(1)."""
    return _single_check(SRESP, g, AxiomWitness((_rec(2), _rec(1))))


def check_responsiveness(g: IndexDescriptor) -> Dict[str, AxiomReport]:
    """The three responsiveness flavours, keyed by axiom name."""
    return {WRESP: check_wresp(g), SQRTRESP: check_sqrtresp(g), SRESP: check_sresp(g)}


def check_lgr(g: IndexDescriptor, p: int, c: int, horizon: int = 40) -> AxiomReport:
    """
    Crecimiento lineal sobre el modelo determinista anual.

    Para h, h′, w y w′ la franja es la teórica anclada en el origen; para
    el resto se ajusta una franja libre (ver growth.strip_check).
    """
    strip = strip_check(g, DeterministicParams(Fraction(p), Fraction(c)), horizon)
    witness = None
    if not strip.holds:
        note = (
            f"leaves the strip at n={strip.first_violation}"
            if strip.first_violation is not None
            else f"strip width {strip.width:.4g} vs {strip.half_width:.4g} on half horizon"
        )
        witness = AxiomWitness((), note=note)
    domain = {"p": p, "c": c, "horizon": horizon}
    return _report(LGR, g, domain, witness, **strip.to_dict())


# =============================================================================
# ÍNDICES CONTRAEJEMPLO
# =============================================================================


def completed_index(
    name: str,
    single: Callable[[int], IndexValue],
    column: Callable[[int], IndexValue],
    kind: IndexKind = IndexKind.COUNTEREXAMPLE,
) -> IndexDescriptor:
    """
    Completa un índice a partir de sus valores en registros constantes.

    El registro constante con m artículos de n citas vale
    single(n)·column(m). Un registro cualquiera es la unión de los
    rectángulos de sus esquinas exteriores (i, x_i), y se le asigna el
    máximo de esos rectángulos, lo que fuerza MaxB con igualdad.

    Parameters
    ----------
    name : str
        Nombre del descriptor.
    single : callable
        Valor de un artículo con n citas, n -> IndexValue.
    column : callable
        Factor para m artículos, m -> IndexValue (column(1) = 1).
    kind : IndexKind, optional
        Tipo del descriptor. Por defecto COUNTEREXAMPLE.

    Returns
    -------
    IndexDescriptor
        Índice completado (0 en el registro vacío).
    """

    def evaluate(x: CitationRecord) -> IndexValue:
        if x.is_empty:
            return IndexValue.zero()
        return max(single(x.entry(i)) * column(i) for i in outer_corners(x))

    return IndexDescriptor(name, evaluate, kind)


def _t_half_single(n: int) -> IndexValue:
    return IndexValue.sqrt(substitute_prime(n, 3, 5))


def t_half_index() -> IndexDescriptor:
    """
    Índice t½: un artículo con n = y·3^m citas vale sqrt(y·5^m).

    Cumple Sym, MaxB, SSInv y SqrtResp pero no Mon: t½(3) = sqrt(5) > 2 = t½(4).
    """
    return completed_index("t_half", _t_half_single, _t_half_single)


def d_index(b: Union[int, str, Fraction] = 1) -> IndexDescriptor:
    """
    Índice d: d(n_m) = n^(1/2)·m^b, con b racional positivo distinto de 1/2.

    Cumple Mon, MaxB, SSInv y SqrtResp pero no Sym.

    Raises
    ------
    ValueError
        Si b <= 0 o b = 1/2 (con b = 1/2 se obtiene h′).
    """
    exponent = parse_rational(b)
    if exponent <= 0 or exponent == Fraction(1, 2):
        raise ValueError(f"Exponent b must be positive and differ from 1/2, got {exponent}.")

    def column(m: int) -> IndexValue:
        return IndexValue(Fraction(m) ** exponent.numerator, exponent.denominator)

    return completed_index("d_index", IndexValue.sqrt, column)


def f_index() -> IndexDescriptor:
    """f(1) = 1 and f(x) = sqrt(2) for every other nonempty record."""

    def evaluate(x: CitationRecord) -> IndexValue:
        if x.is_empty:
            return IndexValue.zero()
        return IndexValue(1) if x.entries == (1,) else IndexValue.sqrt(2)

    return IndexDescriptor("f_index", evaluate, IndexKind.COUNTEREXAMPLE)


def const_one_index() -> IndexDescriptor:
    """g ≡ 1 on nonempty records."""

    def evaluate(x: CitationRecord) -> IndexValue:
        return IndexValue.zero() if x.is_empty else IndexValue(1)

    return IndexDescriptor("const_one", evaluate, IndexKind.COUNTEREXAMPLE)


def counterexample_indices(b: Union[int, str, Fraction] = 1) -> List[IndexDescriptor]:
    """t½, d (with exponent b), f, the constant 1 and h_1."""
    return [
        t_half_index(),
        d_index(b),
        f_index(),
        const_one_index(),
        hirsch_power_index(1),
    ]


# =============================================================================
# MATRIZ DE INDEPENDENCIA
# =============================================================================

# Axiomas que cada fila debe violar exactamente (las demás celdas se cumplen)
EXPECTED_VIOLATIONS: Dict[str, Tuple[str, ...]] = {
    "hprime": (),
    "h_1": (SQRTRESP,),
    "t_half": (MON,),
    "d_index": (SYM,),
    "wprime": (MAXB,),
    "f_index": (SSINV,),
    "const_one": (WRESP, SQRTRESP),
}

MATRIX_ROWS = (
    "hprime",
    "h_1",
    "t_half",
    "d_index",
    "wprime",
    "f_index",
    "const_one",
    "h",
    "w",
    "e",
)


def matrix_descriptors(b: Union[int, str, Fraction] = 1) -> List[IndexDescriptor]:
    """Descriptors for the rows of the independence matrix, in row order."""
    by_name = {descriptor.name: descriptor for descriptor in counterexample_indices(b)}
    by_name.update(BUILTIN_INDICES)
    return [by_name[name] for name in MATRIX_ROWS]


_DOMAIN_CHECKS: Dict[str, Callable[[IndexDescriptor, EnumerationDomain], AxiomReport]] = {
    MON: check_mon,
    SYM: check_sym,
    SSINV: check_ssinv,
    MAXB: check_maxb,
    SINV: check_sinv,
}


def run_axiom(axiom: str, g: IndexDescriptor, domain: EnumerationDomain) -> AxiomReport:
    """Dispatch one axiom check by name."""
    if axiom in _DOMAIN_CHECKS:
        return _DOMAIN_CHECKS[axiom](g, domain)
    if axiom == WRESP:
        return check_wresp(g)
    if axiom == SQRTRESP:
        return check_sqrtresp(g)
    if axiom == SRESP:
        return check_sresp(g)
    raise ValueError(f"Unknown axiom {axiom!r}.")


def battery(
    g: IndexDescriptor,
    domain: Optional[EnumerationDomain] = None,
    axioms: Sequence[str] = MATRIX_COLUMNS + (SINV, SRESP),
) -> List[AxiomReport]:
    """All requested axiom checks for one index."""
    domain = domain or EnumerationDomain()
    logger.debug("Running %d axiom checks for %s", len(axioms), g.name)
    return [run_axiom(axiom, g, domain) for axiom in axioms]


@dataclass
class IndependenceMatrix:
    """Cells (row, axiom) -> AxiomReport over a common domain."""

    domain: EnumerationDomain
    rows: List[str]
    columns: List[str]
    cells: Dict[Tuple[str, str], AxiomReport]

    def violations(self, row: str) -> Tuple[str, ...]:
        return tuple(
            column for column in self.columns if not self.cells[(row, column)].holds
        )

    def mismatches(self) -> List[str]:
        """Rows whose violations differ from EXPECTED_VIOLATIONS."""
        return [
            row
            for row in self.rows
            if row in EXPECTED_VIOLATIONS and self.violations(row) != EXPECTED_VIOLATIONS[row]
        ]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "domain": self.domain.to_dict(),
            "rows": self.rows,
            "columns": self.columns,
            "cells": [self.cells[(row, column)].to_dict() for row in self.rows for column in self.columns],
        }


def independence_matrix(
    domain: Optional[EnumerationDomain] = None,
    descriptors: Optional[Sequence[IndexDescriptor]] = None,
) -> IndependenceMatrix:
    """
    Evalúa cada índice fila contra cada axioma columna.

    Parameters
    ----------
    domain : EnumerationDomain, optional
        Dominio común. Por defecto L = M = 6, k, m en {1, 2, 3}.
    descriptors : sequence of IndexDescriptor, optional
        Filas. Por defecto matrix_descriptors().

    Returns
    -------
    IndependenceMatrix
        Matriz con un AxiomReport por celda.
    """
    domain = domain or EnumerationDomain()
    descriptors = list(descriptors) if descriptors is not None else matrix_descriptors()
    cells: Dict[Tuple[str, str], AxiomReport] = {}
    for g in descriptors:
        for axiom in MATRIX_COLUMNS:
            cells[(g.name, axiom)] = run_axiom(axiom, g, domain)
    logger.info("Independence matrix: %d rows x %d axioms", len(descriptors), len(MATRIX_COLUMNS))
    return IndependenceMatrix(domain, [g.name for g in descriptors], list(MATRIX_COLUMNS), cells)
