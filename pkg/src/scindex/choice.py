# =============================================================================
# SCINDEX - Funciones de Elección
# =============================================================================
#
# PROPÓSITO:
# Implementa funciones de elección finitas sobre familias de conjuntos y los
# predicados MVIIA, WARP y MVIIA★, con verificación exhaustiva de que MVIIA
# implica WARP (familias cerradas por uniones) y MVIIA★ (familias cerradas
# por intersecciones) en universos pequeños.
#
# FUNCIONALIDAD PRINCIPAL:
# - SetFamily con banderas de clausura calculadas, no supuestas
# - ChoiceFunction validada (∅ != c(F) ⊆ F)
# - satisfies_mviia, satisfies_warp, satisfies_mviia_star con testigos
# - Chequeo exhaustivo con tope combinatorio y sonda de recíprocos
# - Selectores sobre diagramas de barras: rectángulos de área máxima
#   (el mecanismo detrás de h′) y puntos de contacto de triángulos (w′)
#
# USO EN EL ENTORNO:
# cli.py expone "scindex choice"; axioms.py cubre MaxB directamente y este
# módulo cubre su origen, el selector que cumple MVIIA.
#
# =============================================================================

"""Choice functions, MVIIA/WARP checks and bar-graph selectors."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import chain, combinations, product
from typing import (
    Any,
    Callable,
    Dict,
    FrozenSet,
    Hashable,
    Iterable,
    Iterator,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)

from .indices import (
    IndexDescriptor,
    RectangleWitness,
    hprime,
    optimal_triangles,
    rectangle_witnesses,
)
from .records import CitationRecord, cmax, contains_point, dominates, enumerate_records

logger = logging.getLogger(__name__)

Element = Hashable
Member = FrozenSet[Element]
Point = Tuple[Fraction, Fraction]

DEFAULT_BUDGET = 10_000


def _nonempty_subsets(items: Iterable[Element]) -> List[Member]:
    ordered = sorted(items, key=repr)
    return [
        frozenset(combo)
        for size in range(1, len(ordered) + 1)
        for combo in combinations(ordered, size)
    ]


def _describe(members: Iterable[Member]) -> List[List[str]]:
    return [sorted(repr(element) for element in member) for member in members]


# =============================================================================
# FAMILIAS Y FUNCIONES DE ELECCIÓN
# =============================================================================


@dataclass(frozen=True)
class SetFamily:
    """
    Familia Σ de subconjuntos no vacíos de un universo finito X.

    Parameters
    ----------
    universe : iterable
        Elementos de X (hashables).
    members : iterable of iterables
        Subconjuntos de X, no vacíos. Los duplicados se ignoran.

    Attributes
    ----------
    union_closed : bool
        F ∪ G ∈ Σ para todo F, G ∈ Σ (calculado).
    intersection_closed : bool
        F ∩ G ∈ Σ siempre que F ∩ G no sea vacío (calculado; los miembros
        son no vacíos, así que las intersecciones vacías no cuentan).

    Raises
    ------
    ValueError
        Si algún miembro es vacío o se sale del universo.
    """

    universe: FrozenSet[Element]
    members: Tuple[Member, ...]
    union_closed: bool = field(init=False)
    intersection_closed: bool = field(init=False)

    def __post_init__(self) -> None:
        universe = frozenset(self.universe)
        members: List[Member] = []
        for raw in self.members:
            member = frozenset(raw)
            if not member:
                raise ValueError("Family members must be nonempty.")
            if not member <= universe:
                extra = sorted(repr(e) for e in member - universe)
                raise ValueError(f"Member has elements outside the universe: {extra}.")
            if member not in members:
                members.append(member)
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "members", tuple(members))

        present = set(members)
        object.__setattr__(
            self, "union_closed", all(f | g in present for f in members for g in members)
        )
        object.__setattr__(
            self,
            "intersection_closed",
            all(not (f & g) or (f & g) in present for f in members for g in members),
        )

    @classmethod
    def all_nonempty_subsets(cls, universe: Iterable[Element]) -> "SetFamily":
        """The family of every nonempty subset of ``universe``."""
        universe = frozenset(universe)
        return cls(universe, tuple(_nonempty_subsets(universe)))

    def __contains__(self, member: object) -> bool:
        return member in self.members

    def __len__(self) -> int:
        return len(self.members)


class ChoiceFunction:
    """
    Función de elección c sobre una familia: ∅ != c(F) ⊆ F para cada F.

    Parameters
    ----------
    family : SetFamily
        Dominio de la función.
    choices : mapping
        Miembro -> subconjunto elegido. Debe cubrir todos los miembros.

    Raises
    ------
    ValueError
        Si falta algún miembro o alguna elección es vacía o no es subconjunto.
    """

    def __init__(self, family: SetFamily, choices: Mapping[Iterable[Element], Iterable[Element]]):
        self.family = family
        normalized: Dict[Member, Member] = {
            frozenset(member): frozenset(chosen) for member, chosen in choices.items()
        }
        for member in family.members:
            if member not in normalized:
                raise ValueError(f"No choice given for member {sorted(map(repr, member))}.")
            chosen = normalized[member]
            if not chosen or not chosen <= member:
                raise ValueError(
                    f"Choice {sorted(map(repr, chosen))} is not a nonempty subset of "
                    f"{sorted(map(repr, member))}."
                )
        self.choices = {member: normalized[member] for member in family.members}

    def __call__(self, member: Iterable[Element]) -> Member:
        return self.choices[frozenset(member)]

    @classmethod
    def maximizer(
        cls, family: SetFamily, value: Callable[[Element], Any]
    ) -> "ChoiceFunction":
        """c(F) = argmax of ``value`` over F."""
        choices = {}
        for member in family.members:
            best = max(value(element) for element in member)
            choices[member] = frozenset(e for e in member if value(e) == best)
        return cls(family, choices)

    @classmethod
    def identity(cls, family: SetFamily) -> "ChoiceFunction":
        return cls(family, {member: member for member in family.members})


@dataclass(frozen=True)
class ChoiceCheck:
    """Verdict of a choice-function predicate, with a witness when it fails."""

    holds: bool
    witness: Optional[Dict[str, Any]] = None

    def __bool__(self) -> bool:
        return self.holds


# =============================================================================
# PREDICADOS
# =============================================================================


def satisfies_mviia(family: SetFamily, c: ChoiceFunction) -> ChoiceCheck:
    """
    MVIIA: si G ⊆ F y G ∩ c(F) != ∅, entonces c(G) = c(F) ∩ G.

    Returns
    -------
    ChoiceCheck
        Con testigo {"F", "G", "c(F)", "c(G)"} si falla.
    """
    for big in family.members:
        chosen_big = c(big)
        for small in family.members:
            if not small <= big:
                continue
            overlap = chosen_big & small
            if overlap and c(small) != overlap:
                return ChoiceCheck(
                    False,
                    {
                        "F": _describe([big])[0],
                        "G": _describe([small])[0],
                        "c(F)": _describe([chosen_big])[0],
                        "c(G)": _describe([c(small)])[0],
                    },
                )
    return ChoiceCheck(True)


def revealed_relations(
    family: SetFamily, c: ChoiceFunction
) -> Tuple[Dict[Tuple[Element, Element], Member], Dict[Tuple[Element, Element], Member]]:
    """
    Relaciones reveladas por c, con el primer miembro que revela cada par.

    x ⪰ y si alguna vez x se elige en un conjunto que contiene a y;
    x ≻ y si además y no se elige en ese conjunto.
    """
    weak: Dict[Tuple[Element, Element], Member] = {}
    strict: Dict[Tuple[Element, Element], Member] = {}
    for member in family.members:
        chosen = c(member)
        for x in chosen:
            for y in member:
                weak.setdefault((x, y), member)
                if y not in chosen:
                    strict.setdefault((x, y), member)
    return weak, strict


def satisfies_warp(family: SetFamily, c: ChoiceFunction) -> ChoiceCheck:
    """WARP: x ⪰ y implies not y ≻ x."""
    weak, strict = revealed_relations(family, c)
    for (x, y), weak_member in sorted(weak.items(), key=repr):
        strict_member = strict.get((y, x))
        if strict_member is not None:
            return ChoiceCheck(
                False,
                {
                    "x": repr(x),
                    "y": repr(y),
                    "x chosen over y in": _describe([weak_member])[0],
                    "y strictly chosen over x in": _describe([strict_member])[0],
                },
            )
    return ChoiceCheck(True)


def satisfies_mviia_star(family: SetFamily, c: ChoiceFunction) -> ChoiceCheck:
    """
    MVIIA★: si c(F) ∩ c(G) != ∅, entonces c(F ∩ G) = c(F) ∩ c(G).

    Solo se exige cuando F ∩ G pertenece a la familia.
    """
    for first in family.members:
        for second in family.members:
            common = c(first) & c(second)
            if not common:
                continue
            meet = first & second
            if meet not in family:
                continue
            if c(meet) != common:
                return ChoiceCheck(
                    False,
                    {
                        "F": _describe([first])[0],
                        "G": _describe([second])[0],
                        "c(F)∩c(G)": _describe([common])[0],
                        "c(F∩G)": _describe([c(meet)])[0],
                    },
                )
    return ChoiceCheck(True)


# =============================================================================
# VERIFICACIÓN EXHAUSTIVA
# =============================================================================


@dataclass
class ExhaustiveReport:
    """
    Resumen de la verificación exhaustiva de las implicaciones.

    Attributes
    ----------
    universe_size : int
        Tamaño de X.
    family_size : int
        Número de miembros de Σ.
    choice_functions : int
        Funciones de elección examinadas.
    mviia_passing : int
        Cuántas cumplen MVIIA.
    warp_failures : int
        Cumplen MVIIA pero no WARP (debe ser 0).
    star_failures : int
        Cumplen MVIIA pero no MVIIA★ (debe ser 0).
    first_failure : dict, optional
        Primer contraejemplo de una implicación, si lo hay.
    warp_without_mviia : int
        Cumplen WARP pero no MVIIA (informativo).
    star_without_mviia : int
        Cumplen MVIIA★ pero no MVIIA (informativo).
    converse_example : dict, optional
        Un ejemplo de WARP sin MVIIA, si lo hay.
    """

    universe_size: int
    family_size: int
    choice_functions: int = 0
    mviia_passing: int = 0
    warp_failures: int = 0
    star_failures: int = 0
    first_failure: Optional[Dict[str, Any]] = None
    warp_without_mviia: int = 0
    star_without_mviia: int = 0
    converse_example: Optional[Dict[str, Any]] = None

    @property
    def implications_hold(self) -> bool:
        return self.warp_failures == 0 and self.star_failures == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "universe_size": self.universe_size,
            "family_size": self.family_size,
            "choice_functions": self.choice_functions,
            "mviia_passing": self.mviia_passing,
            "implications": {
                "mviia_implies_warp_failures": self.warp_failures,
                "mviia_implies_mviia_star_failures": self.star_failures,
                "first_failure": self.first_failure,
                "hold": self.implications_hold,
            },
            "converse_probe": {
                "warp_without_mviia": self.warp_without_mviia,
                "mviia_star_without_mviia": self.star_without_mviia,
                "example": self.converse_example,
            },
        }


def count_choice_functions(family: SetFamily) -> int:
    """Π (2^|F| - 1) over the members F."""
    total = 1
    for member in family.members:
        total *= 2 ** len(member) - 1
    return total


def all_choice_functions(family: SetFamily) -> Iterator[ChoiceFunction]:
    """Every choice function on ``family``, in a fixed order."""
    options = [_nonempty_subsets(member) for member in family.members]
    for picks in product(*options):
        yield ChoiceFunction(family, dict(zip(family.members, picks)))


def _choices_as_dict(c: ChoiceFunction) -> Dict[str, List[str]]:
    return {
        ",".join(_describe([member])[0]): _describe([chosen])[0]
        for member, chosen in c.choices.items()
    }


def check_implications(
    family: SetFamily,
    functions: Optional[Iterable[ChoiceFunction]] = None,
    budget: int = DEFAULT_BUDGET,
) -> ExhaustiveReport:
    """
    Verifica MVIIA ⇒ WARP y MVIIA ⇒ MVIIA★ sobre una familia.

    Parameters
    ----------
    family : SetFamily
        Debe ser cerrada por uniones y por intersecciones.
    functions : iterable of ChoiceFunction, optional
        Funciones a examinar. Por defecto todas las de la familia.
    budget : int, optional
        Máximo de funciones a enumerar cuando no se dan. Por defecto 10000.

    Returns
    -------
    ExhaustiveReport
        Conteos, contraejemplos y sonda de recíprocos.

    Raises
    ------
    ValueError
        Si la familia no es cerrada o la enumeración supera el tope.
    """
    if not family.union_closed:
        raise ValueError("Family is not closed under unions; MVIIA ⇒ WARP does not apply.")
    if not family.intersection_closed:
        raise ValueError(
            "Family is not closed under intersections; MVIIA ⇒ MVIIA★ does not apply."
        )
    if functions is None:
        count = count_choice_functions(family)
        if count > budget:
            logger.warning("Refusing to enumerate %d choice functions (budget %d)", count, budget)
            raise ValueError(
                f"{count} choice functions exceed the budget of {budget}; "
                f"raise the budget or use a smaller universe."
            )
        functions = all_choice_functions(family)

    report = ExhaustiveReport(len(family.universe), len(family))
    for c in functions:
        report.choice_functions += 1
        mviia = satisfies_mviia(family, c).holds
        warp = satisfies_warp(family, c)
        star = satisfies_mviia_star(family, c)
        if mviia:
            report.mviia_passing += 1
            if not warp.holds:
                report.warp_failures += 1
            if not star.holds:
                report.star_failures += 1
            if (not warp.holds or not star.holds) and report.first_failure is None:
                report.first_failure = {
                    "choices": _choices_as_dict(c),
                    "warp": warp.witness,
                    "mviia_star": star.witness,
                }
        else:
            if warp.holds:
                report.warp_without_mviia += 1
                if report.converse_example is None:
                    report.converse_example = {"choices": _choices_as_dict(c)}
            if star.holds:
                report.star_without_mviia += 1
    logger.info(
        "Checked %d choice functions: %d satisfy MVIIA, %d/%d implication failures",
        report.choice_functions,
        report.mviia_passing,
        report.warp_failures,
        report.star_failures,
    )
    return report


def exhaustive_implication_check(
    universe_size: int, budget: int = DEFAULT_BUDGET
) -> ExhaustiveReport:
    """
    Verificación exhaustiva con Σ = todos los subconjuntos no vacíos.

    Con |X| = 2 hay 3 funciones de elección y con |X| = 3 hay 189; con
    |X| = 4 la cuenta supera el tope por defecto.

    Raises
    ------
    ValueError
        Si universe_size < 1 o la enumeración supera el tope.
    """
    if universe_size < 1:
        raise ValueError(f"Universe size must be positive, got {universe_size}.")
    universe = "abcdefghijklmnopqrstuvwxyz"[:universe_size]
    return check_implications(SetFamily.all_nonempty_subsets(universe), budget=budget)


# =============================================================================
# SELECTORES SOBRE DIAGRAMAS DE BARRAS
# =============================================================================


def bargraph_argmax_selector(x: CitationRecord) -> FrozenSet[RectangleWitness]:
    """
    Selector φ(B(x)): esquinas (k, x_k) que maximizan ρ(a, b) = a·b.

    Raises
    ------
    ValueError
        Si x es el registro vacío.
    """
    if x.is_empty:
        raise ValueError("The argmax selector needs a nonempty record.")
    return frozenset(rectangle_witnesses(x))


def rectangle_points(x: CitationRecord) -> FrozenSet[Point]:
    """The argmax selector as points of B(x)."""
    return frozenset(
        (Fraction(w.k), Fraction(w.height)) for w in bargraph_argmax_selector(x)
    )


def triangle_contact_selector(x: CitationRecord) -> FrozenSet[Point]:
    """Points (k, x_{k+1}) touched by some maximal-area hypotenuse."""
    if x.is_empty:
        raise ValueError("The triangle selector needs a nonempty record.")
    contacts = set()
    for triangle in optimal_triangles(x):
        for k in range(len(x) + 1):
            height = x.entry(k + 1)
            if triangle.d - triangle.d * k / triangle.c == height:
                contacts.add((Fraction(k), Fraction(height)))
    return frozenset(contacts)


@dataclass
class BarGraphReport:
    """Outcome of the bar-graph MVIIA check and its MaxB consequence."""

    selector: str
    index: str
    domain: Dict[str, int]
    comparable_pairs: int = 0
    mviia_failures: int = 0
    first_mviia_failure: Optional[Dict[str, Any]] = None
    all_pairs: int = 0
    maxb_failures: int = 0
    first_maxb_failure: Optional[Dict[str, Any]] = None

    @property
    def holds(self) -> bool:
        return self.mviia_failures == 0 and self.maxb_failures == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "selector": self.selector,
            "index": self.index,
            "domain": self.domain,
            "comparable_pairs": self.comparable_pairs,
            "mviia_failures": self.mviia_failures,
            "first_mviia_failure": self.first_mviia_failure,
            "all_pairs": self.all_pairs,
            "maxb_consequence_failures": self.maxb_failures,
            "first_maxb_failure": self.first_maxb_failure,
            "holds": self.holds,
        }


def _points_text(points: Iterable[Point]) -> List[List[str]]:
    return [[str(a), str(b)] for a, b in sorted(points)]


def selector_pair_check(
    smaller: CitationRecord,
    larger: CitationRecord,
    selector: Callable[[CitationRecord], FrozenSet[Point]] = rectangle_points,
) -> Optional[Dict[str, Any]]:
    """
    Ecuación MVIIA con F = B(larger) y G = B(smaller), smaller ⪯ larger.

    Returns
    -------
    dict or None
        None si la ecuación se cumple (o no aplica); si no, un testigo.
    """
    chosen_big = selector(larger)
    overlap = frozenset(point for point in chosen_big if contains_point(smaller, point))
    if not overlap:
        return None
    chosen_small = selector(smaller)
    if chosen_small == overlap:
        return None
    return {
        "G": list(smaller.entries),
        "F": list(larger.entries),
        "phi(F)∩G": _points_text(overlap),
        "phi(G)": _points_text(chosen_small),
    }


def bargraph_mviia_check(
    max_length: int = 5,
    max_citations: int = 5,
    selector: Callable[[CitationRecord], FrozenSet[Point]] = rectangle_points,
    index: Optional[IndexDescriptor] = None,
) -> BarGraphReport:
    """
    Comprueba MVIIA del selector sobre todos los pares x ⪯ y y, como
    consecuencia, g(cmax(x, y)) ∈ {g(x), g(y)} sobre todos los pares.

    Parameters
    ----------
    max_length, max_citations : int, optional
        Caja de enumeración. Por defecto L = M = 5.
    selector : callable, optional
        Registro -> puntos elegidos de B(x). Por defecto los rectángulos
        de área máxima.
    index : IndexDescriptor, optional
        Índice inducido por el selector. Por defecto h′.

    Returns
    -------
    BarGraphReport
        Conteos y primeros testigos.
    """
    g: Callable[[CitationRecord], Any] = index if index is not None else hprime
    records = [x for x in enumerate_records(max_length, max_citations) if not x.is_empty]
    values = {x: g(x) for x in records}
    report = BarGraphReport(
        selector=getattr(selector, "__name__", "selector"),
        index=getattr(index, "name", "hprime"),
        domain={"L": max_length, "M": max_citations},
    )
    for i, x in enumerate(records):
        for j, y in enumerate(records):
            if i != j and dominates(x, y):
                report.comparable_pairs += 1
                witness = selector_pair_check(x, y, selector)
                if witness is not None:
                    report.mviia_failures += 1
                    if report.first_mviia_failure is None:
                        report.first_mviia_failure = witness
            if j <= i:
                continue
            report.all_pairs += 1
            z = cmax(x, y)
            value = values.get(z)
            if value is None:
                value = g(z)
            if value != values[x] and value != values[y]:
                report.maxb_failures += 1
                if report.first_maxb_failure is None:
                    report.first_maxb_failure = {
                        "x": list(x.entries),
                        "y": list(y.entries),
                        "z": list(z.entries),
                        "g(x)": str(values[x]),
                        "g(y)": str(values[y]),
                        "g(z)": str(value),
                    }
    logger.info(
        "Bar-graph check: %d comparable pairs, %d MVIIA failures, %d MaxB failures",
        report.comparable_pairs,
        report.mviia_failures,
        report.maxb_failures,
    )
    return report
