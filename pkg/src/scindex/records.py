# =============================================================================
# SCINDEX - Registros de Citas
# =============================================================================
#
# PROPÓSITO:
# Define CitationRecord, el vector no creciente de citas por artículo que es
# la entrada universal de la librería, y las operaciones sobre registros que
# consumen los índices y los axiomas.
#
# FUNCIONALIDAD PRINCIPAL:
# - Normalizar listas crudas de citas (ordenar, quitar ceros)
# - Registro dual (partición conjugada), escalado vertical y estiramiento
#   horizontal
# - Máximo y mínimo componente a componente (unión e intersección de los
#   diagramas de barras)
# - Relaciones de dominancia (⪯, estricta y acumulada)
# - Altura del diagrama de barras s_x(t) y pertenencia de puntos
# - Enumeración lexicográfica de todos los registros en una caja L x M
#
# USO EN EL ENTORNO:
# indices.py evalúa índices sobre CitationRecord; axioms.py recorre
# enumerate_records y usa dual, vscale, hstretch y cmax; choice.py usa
# contains_point para los selectores del diagrama de barras.
#
# =============================================================================

"""Citation records and record-level operations."""

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

Real = Union[int, float, Fraction]


@dataclass(frozen=True)
class CitationRecord:
    """
    Registro de citas x = (x_1, ..., x_l) con x_1 >= x_2 >= ... >= x_l >= 1.

    Normalmente se construye con make_record, que ordena y elimina ceros.
    El constructor directo valida el invariante en lugar de corregirlo.

    Parameters
    ----------
    entries : tuple of int
        Citas por artículo, no crecientes y positivas.

    Raises
    ------
    ValueError
        Si las entradas no son enteros positivos no crecientes.

    Examples
    --------
    >>> CitationRecord((8, 6, 2)).length
    3
    >>> make_record([7, 11, 6, 0, 6])
    CitationRecord(entries=(11, 7, 6, 6))
    """

    entries: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        entries = tuple(self.entries)
        for position, value in enumerate(entries, start=1):
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ValueError(
                    f"Entry {position} must be a positive integer, got {value!r}."
                )
            if position > 1 and value > entries[position - 2]:
                raise ValueError(
                    f"Entries must be non-increasing; entry {position} ({value}) "
                    f"exceeds entry {position - 1} ({entries[position - 2]})."
                )
        object.__setattr__(self, "entries", entries)

    @property
    def length(self) -> int:
        """Number of cited papers, l(x)."""
        return len(self.entries)

    @property
    def is_empty(self) -> bool:
        return not self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def entry(self, i: int) -> int:
        """1-based entry x_i, with x_i = 0 beyond the record's length."""
        if i < 1:
            raise ValueError(f"Entries are 1-based, got {i}.")
        return self.entries[i - 1] if i <= len(self.entries) else 0


EMPTY_RECORD = CitationRecord()


class DominanceRelation(Enum):
    """Outcome of comparing two records; DOMINATES is reported only for equal records."""

    DOMINATES = "dominates"
    STRICTLY_DOMINATES = "strictly-dominates"
    CUMULATIVELY_DOMINATES = "cumulatively-dominates"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class DominancePair:
    """A pair of records and the relation found between them (see compare)."""

    left: CitationRecord
    right: CitationRecord
    relation: DominanceRelation


# =============================================================================
# CONSTRUCCIÓN Y TRANSFORMACIONES
# =============================================================================


def make_record(counts: Iterable[int]) -> CitationRecord:
    """
    Normaliza una lista cruda de citas: quita ceros y ordena de mayor a menor.

    Parameters
    ----------
    counts : iterable of int
        Citas por artículo, en cualquier orden, con ceros permitidos.

    Returns
    -------
    CitationRecord
        El registro normalizado (vacío si no hay artículos citados).

    Raises
    ------
    ValueError
        Si algún valor es negativo o no es entero.
    """
    cleaned: List[int] = []
    for value in counts:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValueError(f"Citation counts must be integers, got {value!r}.")
        if value < 0:
            raise ValueError(f"Citation counts must be non-negative, got {value}.")
        if value:
            cleaned.append(value)
    cleaned.sort(reverse=True)
    return CitationRecord(tuple(cleaned))


def dual(x: CitationRecord) -> CitationRecord:
    """
    Registro dual x*: refleja B(x) respecto a la diagonal.

    dual(x)_i = #{j : x_j >= i} para i = 1..x_1 (partición conjugada).

    Examples
    --------
    >>> dual(make_record([8, 6, 2])).entries
    (3, 3, 2, 2, 2, 2, 1, 1)
    """
    if x.is_empty:
        return EMPTY_RECORD
    conjugate: List[int] = []
    j = len(x.entries)
    for i in range(1, x.entries[0] + 1):
        while x.entries[j - 1] < i:
            j -= 1
        conjugate.append(j)
    return CitationRecord(tuple(conjugate))


def vscale(x: CitationRecord, k: int) -> CitationRecord:
    """Vertical scaling kx: every count multiplied by ``k`` (k >= 1)."""
    if k < 1:
        raise ValueError(f"Scale factor must be a positive integer, got {k}.")
    return CitationRecord(tuple(k * value for value in x.entries))


def hstretch(x: CitationRecord, m: int) -> CitationRecord:
    """Horizontal stretch: every paper repeated ``m`` times (m >= 1)."""
    if m < 1:
        raise ValueError(f"Stretch factor must be a positive integer, got {m}.")
    return CitationRecord(tuple(value for value in x.entries for _ in range(m)))


def cmax(x: CitationRecord, y: CitationRecord) -> CitationRecord:
    """
    Máximo componente a componente; B(cmax(x, y)) = B(x) ∪ B(y).

    El registro más corto se completa con ceros.

    Examples
    --------
    >>> cmax(make_record([4, 4]), make_record([2, 2, 2, 2])).entries
    (4, 4, 2, 2)
    """
    length = max(len(x), len(y))
    return CitationRecord(tuple(max(x.entry(i), y.entry(i)) for i in range(1, length + 1)))


def cmin(x: CitationRecord, y: CitationRecord) -> CitationRecord:
    """Componentwise minimum truncated to the shorter record; B(x) ∩ B(y)."""
    return CitationRecord(tuple(min(a, b) for a, b in zip(x.entries, y.entries)))


# =============================================================================
# RELACIONES DE DOMINANCIA
# =============================================================================


def dominates(x: CitationRecord, y: CitationRecord) -> bool:
    """
    Indica si x ⪯ y, es decir, si y domina a x.

    Se cumple cuando l(x) <= l(y) y x_i <= y_i para todo i <= l(x).
    Equivale a B(x) ⊆ B(y).

    Examples
    --------
    >>> dominates(make_record([2, 2]), make_record([4, 4, 2, 2]))
    True
    """
    if len(x) > len(y):
        return False
    return all(a <= b for a, b in zip(x.entries, y.entries))


def strictly_dominates(x: CitationRecord, y: CitationRecord) -> bool:
    """x ⪯ y and x != y."""
    return x != y and dominates(x, y)


def cumulatively_dominates(x: CitationRecord, y: CitationRecord) -> bool:
    """
    Indica si x domina acumuladamente a y.

    Se cumple cuando l(x) <= l(y) y cada suma parcial de x es mayor o igual
    que la suma parcial correspondiente de y (las sumas de x dejan de crecer
    pasado l(x)).

    Examples
    --------
    >>> cumulatively_dominates(make_record([3, 1]), make_record([2, 2]))
    True
    >>> cumulatively_dominates(make_record([2, 2]), make_record([3, 1]))
    False
    """
    if len(x) > len(y):
        return False
    prefix_x = prefix_y = 0
    for i in range(1, len(y) + 1):
        prefix_x += x.entry(i)
        prefix_y += y.entry(i)
        if prefix_x < prefix_y:
            return False
    return True


def compare(x: CitationRecord, y: CitationRecord) -> DominancePair:
    """
    Clasifica la relación entre x e y.

    La primera que se cumple, en este orden: strictly-dominates (x ≺ y),
    dominates, cumulatively-dominates (x sobre y), incomparable.

    Como x ⪯ y sin ser x ≺ y solo ocurre cuando x = y, la relación
    DOMINATES aparece únicamente para registros iguales; cualquier
    dominación propia sale como STRICTLY_DOMINATES. Quien necesite la
    dominación débil debe aceptar ambos valores o usar dominates().

    Examples
    --------
    >>> compare(CitationRecord((3,)), CitationRecord((3,))).relation.value
    'dominates'
    >>> compare(CitationRecord((2,)), CitationRecord((3,))).relation.value
    'strictly-dominates'
    """
    if strictly_dominates(x, y):
        relation = DominanceRelation.STRICTLY_DOMINATES
    elif x == y:
        relation = DominanceRelation.DOMINATES
    elif cumulatively_dominates(x, y):
        relation = DominanceRelation.CUMULATIVELY_DOMINATES
    else:
        relation = DominanceRelation.INCOMPARABLE
    return DominancePair(x, y, relation)


# =============================================================================
# VISTAS GEOMÉTRICAS DEL DIAGRAMA DE BARRAS
# =============================================================================


def total_citations(x: CitationRecord) -> int:
    """Area of B(x)."""
    return sum(x.entries)


def bar_height(x: CitationRecord, t: Real) -> int:
    """
    Función escalonada s_x(t): x_1 en t = 0 y x_i para t en (i-1, i].

    Parameters
    ----------
    x : CitationRecord
        Registro de citas.
    t : int, float or Fraction
        Abscisa con 0 <= t <= l(x).

    Returns
    -------
    int
        Altura del diagrama de barras en t (0 para el registro vacío).

    Raises
    ------
    ValueError
        Si t está fuera de [0, l(x)].
    """
    if t < 0 or t > len(x):
        raise ValueError(f"Bar position {t} outside [0, {len(x)}].")
    if x.is_empty:
        return 0
    return x.entries[max(math.ceil(t), 1) - 1]


def contains_point(x: CitationRecord, point: Tuple[Real, Real]) -> bool:
    """Whether the point (a, b) lies in the bar graph B(x)."""
    a, b = point
    if a < 0 or b < 0 or a > len(x):
        return False
    return b <= bar_height(x, a)


def outer_corners(x: CitationRecord) -> List[int]:
    """1-based positions i with x_i > x_{i+1} (x_{l+1} = 0): the staircase's outer corners."""
    return [i for i in range(1, len(x) + 1) if x.entry(i) > x.entry(i + 1)]


# =============================================================================
# ENUMERACIÓN
# =============================================================================


def enumerate_records(max_length: int = 6, max_citations: int = 6) -> Iterator[CitationRecord]:
    """
    Recorre todos los registros con l <= max_length y x_1 <= max_citations.

    El orden es lexicográfico sobre las tuplas: (), (1,), (1, 1), ...
    El registro vacío se incluye. Con L = M = 6 hay 924 registros.

    Parameters
    ----------
    max_length : int, optional
        Longitud máxima L. Por defecto 6.
    max_citations : int, optional
        Cota M para la entrada mayor. Por defecto 6.

    Yields
    ------
    CitationRecord
        Cada registro de la caja exactamente una vez.
    """
    if max_length < 0 or max_citations < 0:
        raise ValueError(
            f"Enumeration bounds must be non-negative, got L={max_length}, M={max_citations}."
        )

    def extend(prefix: Tuple[int, ...], cap: int) -> Iterator[Tuple[int, ...]]:
        yield prefix
        if len(prefix) == max_length:
            return
        for value in range(1, cap + 1):
            yield from extend(prefix + (value,), value)

    for entries in extend((), max_citations):
        yield CitationRecord(entries)


def successors(
    x: CitationRecord, max_length: int, max_citations: int
) -> Iterator[CitationRecord]:
    """
    Registros que cubren a x bajo ⪯ dentro de la caja L x M.

    Cada sucesor suma una cita a un artículo (sin romper el orden) o añade
    un artículo con una cita. Toda cadena x ⪯ y se descompone en estos pasos.
    """
    entries = x.entries
    for i, value in enumerate(entries):
        if value + 1 > max_citations:
            continue
        if i > 0 and entries[i - 1] == value:
            continue
        yield CitationRecord(entries[:i] + (value + 1,) + entries[i + 1 :])
    if len(entries) < max_length and max_citations >= 1:
        yield CitationRecord(entries + (1,))


def records_to_lists(records: Sequence[CitationRecord]) -> List[List[int]]:
    """Plain nested lists, for JSON export."""
    return [list(record.entries) for record in records]
