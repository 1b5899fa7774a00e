# =============================================================================
# SCINDEX - Índices de Citas
# =============================================================================
#
# PROPÓSITO:
# Implementa los índices clásicos (h, w, c, e, ē) y los índices invariantes
# de escala (h′, w′, c′) sobre CitationRecord, devolviendo siempre valores
# exactos (IndexValue) para que los empates y el orden se decidan sin
# ambigüedad.
#
# FUNCIONALIDAD PRINCIPAL:
# - Índices clásicos: Hirsch, Woeginger, círculo, Egghe entero y real
# - Potencias de Hirsch h_a y el índice h′ = h_{1/2} con sus rectángulos
#   testigo y cotas opcionales de proporción
# - w′ (triángulo rectángulo máximo) y c′ (cuarto de elipse máximo)
# - Índices de referencia: suma total, número de artículos y e′ = sqrt(suma)
# - Cotas de finitud (total de citas compatible con h′ = v)
# - Descomposición en colas (vertical, núcleo, horizontal)
# - Registro de descriptores por nombre para la CLI y los axiomas
#
# USO EN EL ENTORNO:
# core.py agrupa estos índices por investigador; axioms.py los cuantifica;
# growth.py y montecarlo.py los evalúan a lo largo de trayectorias.
#
# ALGORITMO PARA w′ Y c′:
# Una recta es factible si queda por debajo de todos los puntos
# P_k = (k, x_{k+1}), k = 0..l (con x_{l+1} = 0). La mejor recta toca dos de
# esos puntos y deja a todos los demás por encima, así que es una arista de
# la envolvente convexa inferior. Para c′ se repite lo mismo con los puntos
# (k², x_{k+1}²): la elipse d²·(1 - u/c²) pasa a ser una recta en u = k².
#
# DEPENDENCIAS:
# - fractions: Aritmética racional exacta
# - .values: IndexValue
# - .records: CitationRecord y operaciones
#
# =============================================================================

"""Citation indices with exact values."""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .records import CitationRecord, total_citations
from .utils import parse_rational
from .values import IndexValue

logger = logging.getLogger(__name__)

Point = Tuple[int, int]


# =============================================================================
# TIPOS AUXILIARES
# =============================================================================


@dataclass(frozen=True)
class RectangleWitness:
    """Origin-anchored rectangle k × height inside B(x)."""

    k: int
    height: int

    @property
    def area(self) -> int:
        return self.k * self.height


@dataclass(frozen=True)
class TriangleWitness:
    """Right triangle with legs c (horizontal) and d (vertical)."""

    c: Fraction
    d: Fraction

    @property
    def area_product(self) -> Fraction:
        return self.c * self.d


@dataclass(frozen=True)
class EllipseWitness:
    """Quarter ellipse given by its squared semi-axes."""

    c_squared: Fraction
    d_squared: Fraction

    @property
    def product(self) -> Fraction:
        return self.c_squared * self.d_squared


@dataclass(frozen=True)
class ProportionBounds:
    """
    Cotas para la proporción alto:ancho de los rectángulos admisibles en h′.

    Parameters
    ----------
    min_ratio : Fraction, optional
        Proporción mínima alto/ancho. None = sin cota.
    max_ratio : Fraction, optional
        Proporción máxima alto/ancho. None = sin cota.

    Raises
    ------
    ValueError
        Si alguna cota no es positiva o si min_ratio > max_ratio.
    """

    min_ratio: Optional[Fraction] = None
    max_ratio: Optional[Fraction] = None

    def __post_init__(self) -> None:
        for name in ("min_ratio", "max_ratio"):
            value = getattr(self, name)
            if value is None:
                continue
            value = parse_rational(value)
            if value <= 0:
                raise ValueError(f"{name} must be positive, got {value}.")
            object.__setattr__(self, name, value)
        if (
            self.min_ratio is not None
            and self.max_ratio is not None
            and self.min_ratio > self.max_ratio
        ):
            raise ValueError(
                f"min_ratio {self.min_ratio} exceeds max_ratio {self.max_ratio}."
            )

    @property
    def is_unbounded(self) -> bool:
        return self.min_ratio is None and self.max_ratio is None


@dataclass(frozen=True)
class TailShares:
    """
    Reparto de las citas entre el núcleo y las dos colas.

    Attributes
    ----------
    core : int
        Citas dentro del rectángulo (o cuadrado) núcleo.
    vertical : int
        Citas de los artículos del núcleo por encima de su altura.
    horizontal : int
        Citas de los artículos fuera del núcleo.
    """

    core: int
    vertical: int
    horizontal: int

    @property
    def total(self) -> int:
        return self.core + self.vertical + self.horizontal

    def shares(self) -> Dict[str, Fraction]:
        """Exact shares of the total; all zero for the empty record."""
        total = self.total
        if total == 0:
            return {"core": Fraction(0), "vertical": Fraction(0), "horizontal": Fraction(0)}
        return {
            "core": Fraction(self.core, total),
            "vertical": Fraction(self.vertical, total),
            "horizontal": Fraction(self.horizontal, total),
        }


# =============================================================================
# ÍNDICES CLÁSICOS
# =============================================================================


def hirsch(x: CitationRecord) -> IndexValue:
    """
    Índice de Hirsch: el mayor k con x_k >= k.

    Examples
    --------
    >>> hirsch(make_record([11, 7, 6, 6, 6, 4, 4, 4, 3, 3, 2, 2, 1, 1, 1]))
    IndexValue(radicand=Fraction(5, 1), degree=1)
    """
    best = 0
    for k, value in enumerate(x.entries, start=1):
        if value < k:
            break
        best = k
    return IndexValue(best)


def woeginger(x: CitationRecord) -> IndexValue:
    """
    Índice de Woeginger: el mayor k con x_m >= k - m + 1 para todo m <= k.

    La condición para k equivale a min_{m<=k}(x_m + m - 1) >= k, y si vale
    para k también vale para k - 1, así que basta un recorrido.
    """
    best = 0
    running_min: Optional[int] = None
    for k, value in enumerate(x.entries, start=1):
        slack = value + k - 1
        running_min = slack if running_min is None else min(running_min, slack)
        if running_min < k:
            break
        best = k
    return IndexValue(best)


def circle(x: CitationRecord) -> IndexValue:
    """
    c-index: radius of the largest origin-centred quarter disc inside B(x).

    Minimum squared distance from the origin to the corners (i - 1, x_i),
    i = 1..l+1, with x_{l+1} = 0.
    """
    if x.is_empty:
        return IndexValue.zero()
    length = len(x)
    best = length * length
    for i, value in enumerate(x.entries, start=1):
        best = min(best, (i - 1) ** 2 + value * value)
    return IndexValue.sqrt(best)


def egghe(x: CitationRecord, allow_beyond_length: bool = False) -> IndexValue:
    """
    Índice de Egghe: el mayor k cuyas k primeras citas suman al menos k².

    Parameters
    ----------
    x : CitationRecord
        Registro de citas.
    allow_beyond_length : bool, optional
        Si True, k puede superar l(x) usando la suma total (regla
        prefix-sum(min(k, l)) >= k²). Por defecto False: k <= l(x).

    Returns
    -------
    IndexValue
        Valor entero.

    Examples
    --------
    >>> egghe(make_record([8, 6, 2])).radicand
    Fraction(3, 1)
    >>> egghe(make_record([8, 6, 2]), allow_beyond_length=True).radicand
    Fraction(4, 1)

    Notes
    -----
    S_k - k² es cóncava en k y vale >= 0 en k = 1, así que los k válidos
    forman un intervalo que empieza en 1.
    """
    best = 0
    prefix = 0
    for k, value in enumerate(x.entries, start=1):
        prefix += value
        if prefix < k * k:
            break
        best = k
    if allow_beyond_length and best == len(x):
        best = max(best, math.isqrt(prefix))
    return IndexValue(best)


def egghe_real(x: CitationRecord) -> IndexValue:
    """
    Índice de Egghe real ē: el mayor k real >= 1 con S_{min(⌊k⌋, l)} >= k².

    Para cada j = ⌊k⌋ < l el mejor k en [j, j+1) es min(sqrt(S_j), j + 1);
    para j = l la cola es ilimitada y el mejor k es sqrt(S_l).

    Examples
    --------
    >>> egghe_real(make_record([8, 6, 2]))
    IndexValue(radicand=Fraction(4, 1), degree=1)
    """
    best_squared = 0
    prefix = 0
    length = len(x)
    for j, value in enumerate(x.entries, start=1):
        prefix += value
        if prefix < j * j:
            break
        candidate = prefix if j == length else min(prefix, (j + 1) ** 2)
        best_squared = max(best_squared, candidate)
    return IndexValue.sqrt(best_squared)


# =============================================================================
# POTENCIAS DE HIRSCH Y h′
# =============================================================================


def rectangle_witnesses(x: CitationRecord) -> List[RectangleWitness]:
    """All rectangles k × x_k attaining the maximal area, by increasing k."""
    if x.is_empty:
        return []
    areas = [k * value for k, value in enumerate(x.entries, start=1)]
    best = max(areas)
    return [
        RectangleWitness(k, x.entries[k - 1])
        for k, area in enumerate(areas, start=1)
        if area == best
    ]


def max_rectangle_area(
    x: CitationRecord, bounds: Optional[ProportionBounds] = None
) -> Fraction:
    """
    Área máxima de un rectángulo anclado en el origen dentro de B(x).

    Sin cotas es max_k k·x_k. Con cotas de proporción se busca, columna por
    columna, el ancho w en (k-1, k] más grande que respeta
    alto/ancho >= min_ratio, con alto = min(x_k, max_ratio·w).

    Parameters
    ----------
    x : CitationRecord
        Registro de citas.
    bounds : ProportionBounds, optional
        Cotas de proporción alto:ancho. Por defecto ninguna.

    Returns
    -------
    Fraction
        Área exacta (0 si ningún rectángulo es admisible).
    """
    if x.is_empty:
        return Fraction(0)
    if bounds is None or bounds.is_unbounded:
        return Fraction(max(k * value for k, value in enumerate(x.entries, start=1)))

    best = Fraction(0)
    for k, value in enumerate(x.entries, start=1):
        width = Fraction(k)
        if bounds.min_ratio is not None:
            width = min(width, value / bounds.min_ratio)
        if width <= k - 1:
            continue
        height = Fraction(value)
        if bounds.max_ratio is not None:
            height = min(height, bounds.max_ratio * width)
        best = max(best, width * height)
    return best


def hirsch_power(
    x: CitationRecord,
    a: Union[int, str, Fraction],
    bounds: Optional[ProportionBounds] = None,
) -> IndexValue:
    """
    Potencia de Hirsch h_a(x) = (max_k k·x_k)^a.

    Parameters
    ----------
    x : CitationRecord
        Registro de citas.
    a : int, str or Fraction
        Exponente racional positivo; con a = p/q el resultado es
        (área^p)^(1/q) exacto.
    bounds : ProportionBounds, optional
        Cotas de proporción para los rectángulos admisibles.

    Returns
    -------
    IndexValue
        Valor exacto.

    Raises
    ------
    ValueError
        Si a <= 0.

    Examples
    --------
    >>> hirsch_power(make_record([11, 7, 6, 6, 6, 4, 4, 4, 3, 3, 2, 2, 1, 1, 1]), 1)
    IndexValue(radicand=Fraction(32, 1), degree=1)
    """
    exponent = parse_rational(a)
    if exponent <= 0:
        raise ValueError(f"Hirsch power exponent must be positive, got {exponent}.")
    area = max_rectangle_area(x, bounds)
    return IndexValue(area**exponent.numerator, exponent.denominator)


def hprime(x: CitationRecord, bounds: Optional[ProportionBounds] = None) -> IndexValue:
    """Scale-invariant Hirsch index h′ = h_{1/2}."""
    return IndexValue.sqrt(max_rectangle_area(x, bounds))


# =============================================================================
# w′ Y c′: ENVOLVENTE CONVEXA INFERIOR
# =============================================================================


def _lower_hull(points: Sequence[Point]) -> List[Point]:
    # Cadena monótona; los puntos ya vienen ordenados por abscisa
    hull: List[Point] = []
    for point in points:
        while len(hull) >= 2:
            (ox, oy), (ax, ay) = hull[-2], hull[-1]
            cross = (ax - ox) * (point[1] - oy) - (ay - oy) * (point[0] - ox)
            if cross > 0:
                break
            hull.pop()
        hull.append(point)
    return hull


def _best_supporting_lines(points: Sequence[Point]) -> List[Tuple[Fraction, Fraction]]:
    """
    Rectas de pendiente negativa por debajo de todos los puntos que
    maximizan el producto de sus interceptos.

    Devuelve pares (intercepto en x, intercepto en y), uno por arista óptima
    de la envolvente inferior.
    """
    hull = _lower_hull(points)
    best: Optional[Fraction] = None
    optima: List[Tuple[Fraction, Fraction]] = []
    for (k1, y1), (k2, y2) in zip(hull, hull[1:]):
        if y2 >= y1:
            continue
        cross = y1 * k2 - y2 * k1
        x_intercept = Fraction(cross, y1 - y2)
        y_intercept = Fraction(cross, k2 - k1)
        product = x_intercept * y_intercept
        if best is None or product > best:
            best, optima = product, [(x_intercept, y_intercept)]
        elif product == best:
            optima.append((x_intercept, y_intercept))
    return optima


def _stations(x: CitationRecord) -> List[Point]:
    # P_k = (k, x_{k+1}) para k = 0..l
    return [(k, x.entry(k + 1)) for k in range(len(x) + 1)]


def optimal_triangles(x: CitationRecord) -> List[TriangleWitness]:
    """Maximal-area right triangles (legs c, d) under the staircase of x."""
    if x.is_empty:
        return []
    return [TriangleWitness(c, d) for c, d in _best_supporting_lines(_stations(x))]


def wprime(x: CitationRecord) -> IndexValue:
    """
    Índice de Woeginger invariante de escala w′ = sqrt(c·d).

    Maximiza c·d sobre las rectas con interceptos c, d > 0 que cumplen
    d - (d/c)·k <= x_{k+1} para k = 0..l.

    Examples
    --------
    >>> wprime(make_record([4, 4, 2, 2]))
    IndexValue(radicand=Fraction(4, 1), degree=1)
    """
    triangles = optimal_triangles(x)
    if not triangles:
        return IndexValue.zero()
    return IndexValue.sqrt(triangles[0].area_product)


def triangle_fits(x: CitationRecord, c: Fraction, d: Fraction) -> bool:
    """Whether the triangle with legs c, d fits under the staircase of x."""
    c, d = Fraction(c), Fraction(d)
    if c <= 0 or d <= 0:
        return False
    return all(d - d * k / c <= height for k, height in _stations(x))


def optimal_ellipses(x: CitationRecord) -> List[EllipseWitness]:
    """Maximal quarter ellipses, as squared semi-axes, under the staircase of x."""
    if x.is_empty:
        return []
    squared = [(k * k, height * height) for k, height in _stations(x)]
    return [EllipseWitness(c2, d2) for c2, d2 in _best_supporting_lines(squared)]


def cprime(x: CitationRecord) -> IndexValue:
    """
    Índice c′ = sqrt(c·d) del mayor cuarto de elipse con semiejes c y d.

    En las coordenadas (k², x_{k+1}²) la restricción
    (d/c)·sqrt(c² - k²) <= x_{k+1} es una recta, y c′⁴ = c²·d² es el
    producto de sus interceptos.
    """
    ellipses = optimal_ellipses(x)
    if not ellipses:
        return IndexValue.zero()
    return IndexValue(ellipses[0].product, 4)


def ellipse_fits(x: CitationRecord, c_squared: Fraction, d_squared: Fraction) -> bool:
    """Whether the quarter ellipse with squared semi-axes fits under x."""
    c_squared, d_squared = Fraction(c_squared), Fraction(d_squared)
    if c_squared <= 0 or d_squared <= 0:
        return False
    return all(
        d_squared - d_squared * k * k / c_squared <= height * height
        for k, height in _stations(x)
    )


# =============================================================================
# ÍNDICES DE REFERENCIA
# =============================================================================


def eprime(x: CitationRecord) -> IndexValue:
    """Square root of the total citations; the scale-invariant Egghe variant."""
    return IndexValue.sqrt(total_citations(x))


def sum_index(x: CitationRecord) -> IndexValue:
    return IndexValue(total_citations(x))


def count_index(x: CitationRecord) -> IndexValue:
    return IndexValue(len(x))


# =============================================================================
# COTAS Y DESCOMPOSICIONES
# =============================================================================


def finite_to_one_bounds(v: int) -> Tuple[int, int, float]:
    """
    Total mínimo y máximo de citas compatible con h′ = v.

    Parameters
    ----------
    v : int
        Valor de h′ (entero positivo).

    Returns
    -------
    tuple of (int, int, float)
        (v², suma_{i=1}^{v²} ⌊v²/i⌋, v²·(1 + 2·ln v)).

    Raises
    ------
    ValueError
        Si v < 1.

    Examples
    --------
    >>> finite_to_one_bounds(12)[1]
    746
    """
    if v < 1:
        raise ValueError(f"h′ value must be a positive integer, got {v}.")
    area = v * v
    upper = sum(area // i for i in range(1, area + 1))
    return area, upper, area * (1 + 2 * math.log(v))


def records_with_hprime(v: int) -> Iterator[CitationRecord]:
    """All records whose maximal rectangle has area exactly v²."""
    if v < 1:
        raise ValueError(f"h′ value must be a positive integer, got {v}.")
    area = v * v

    def extend(prefix: Tuple[int, ...], best: int) -> Iterator[Tuple[int, ...]]:
        if best == area:
            yield prefix
        k = len(prefix) + 1
        cap = area // k
        if prefix:
            cap = min(cap, prefix[-1])
        for value in range(1, cap + 1):
            yield from extend(prefix + (value,), max(best, k * value))

    for entries in extend((), 0):
        yield CitationRecord(entries)


def tail_decomposition(x: CitationRecord, shape: str = "square") -> TailShares:
    """
    Reparte las citas de x entre el núcleo y las colas.

    Parameters
    ----------
    x : CitationRecord
        Registro de citas.
    shape : {"square", "rectangle"}
        "square" usa el cuadrado de Hirsch h × h; "rectangle" usa el primer
        rectángulo testigo de h′.

    Returns
    -------
    TailShares
        Citas en el núcleo, en la cola vertical y en la cola horizontal.

    Raises
    ------
    ValueError
        Si shape no es "square" ni "rectangle".
    """
    if shape == "square":
        width = int(hirsch(x).radicand)
        height = width
    elif shape == "rectangle":
        witnesses = rectangle_witnesses(x)
        width, height = (witnesses[0].k, witnesses[0].height) if witnesses else (0, 0)
    else:
        raise ValueError(f"Unknown core shape {shape!r}; use 'square' or 'rectangle'.")

    head = x.entries[:width]
    vertical = sum(value - height for value in head)
    horizontal = sum(x.entries[width:])
    return TailShares(core=width * height, vertical=vertical, horizontal=horizontal)


# =============================================================================
# DESCRIPTORES Y REGISTRO
# =============================================================================


class IndexKind(Enum):
    BUILTIN = "builtin"
    COUNTEREXAMPLE = "counterexample"
    COMPOSED = "composed"


@dataclass(frozen=True)
class IndexDescriptor:
    """
    Índice con nombre y evaluable, la unidad que cuantifican los axiomas.

    Parameters
    ----------
    name : str
        Nombre corto ("h", "hprime", ...).
    evaluate : callable
        CitationRecord -> IndexValue.
    kind : IndexKind, optional
        Origen del índice. Por defecto BUILTIN.
    description : str, optional
        Texto corto para informes.
    """

    name: str
    evaluate: Callable[[CitationRecord], IndexValue]
    kind: IndexKind = IndexKind.BUILTIN
    description: str = ""

    def __call__(self, x: CitationRecord) -> IndexValue:
        return self.evaluate(x)


BUILTIN_INDICES: Dict[str, IndexDescriptor] = {
    descriptor.name: descriptor
    for descriptor in (
        IndexDescriptor("h", hirsch, description="Hirsch index"),
        IndexDescriptor("w", woeginger, description="Woeginger index"),
        IndexDescriptor("c", circle, description="c-index (quarter disc)"),
        IndexDescriptor("e", egghe, description="Egghe index"),
        IndexDescriptor("ebar", egghe_real, description="real Egghe index"),
        IndexDescriptor("hprime", hprime, description="scale-invariant Hirsch index"),
        IndexDescriptor("wprime", wprime, description="scale-invariant Woeginger index"),
        IndexDescriptor("cprime", cprime, description="scale-invariant c-index"),
        IndexDescriptor("eprime", eprime, description="square root of total citations"),
        IndexDescriptor("sum", sum_index, description="total citations"),
        IndexDescriptor("count", count_index, description="number of cited papers"),
    )
}


def hirsch_power_index(
    a: Union[int, str, Fraction], bounds: Optional[ProportionBounds] = None
) -> IndexDescriptor:
    """Descriptor for h_a, named ``h_<a>`` (e.g. ``h_1``, ``h_3/2``)."""
    exponent = parse_rational(a)
    if exponent <= 0:
        raise ValueError(f"Hirsch power exponent must be positive, got {exponent}.")

    def evaluate(x: CitationRecord) -> IndexValue:
        return hirsch_power(x, exponent, bounds)

    return IndexDescriptor(
        f"h_{exponent}", evaluate, IndexKind.COMPOSED, f"Hirsch power a={exponent}"
    )


def bounded_hprime_index(bounds: ProportionBounds) -> IndexDescriptor:
    """h′ restricted to rectangles within the given proportion bounds."""

    def evaluate(x: CitationRecord) -> IndexValue:
        return hprime(x, bounds)

    return IndexDescriptor(
        "hprime", evaluate, IndexKind.COMPOSED, "h′ with proportion bounds"
    )


def get_index(name: str, bounds: Optional[ProportionBounds] = None) -> IndexDescriptor:
    """
    Busca un índice por nombre.

    Acepta los nombres de BUILTIN_INDICES y la forma ``h_<a>`` para las
    potencias de Hirsch. Si se dan cotas de proporción, ``hprime`` y
    ``h_<a>`` las respetan.

    Raises
    ------
    ValueError
        Si el nombre no es válido; el mensaje lista los nombres válidos.
    """
    name = name.strip()
    if bounds is not None and not bounds.is_unbounded:
        if name == "hprime":
            return bounded_hprime_index(bounds)
    if name.startswith("h_"):
        try:
            return hirsch_power_index(name[2:], bounds)
        except ValueError:
            pass
    if name in BUILTIN_INDICES:
        return BUILTIN_INDICES[name]
    valid = ", ".join(list(BUILTIN_INDICES) + ["h_<a>"])
    raise ValueError(f"Unknown index {name!r}. Valid names: {valid}.")


def parse_index_list(
    text: Union[str, Sequence[str]], bounds: Optional[ProportionBounds] = None
) -> List[IndexDescriptor]:
    """Parse ``"h,w,hprime"`` (or a list of names) into descriptors, keeping order."""
    names = text.split(",") if isinstance(text, str) else list(text)
    descriptors = [get_index(name, bounds) for name in names if name.strip()]
    if not descriptors:
        raise ValueError("At least one index name is required.")
    return descriptors
