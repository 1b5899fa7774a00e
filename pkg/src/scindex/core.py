# =============================================================================
# SCINDEX - Módulo Principal (Core)
# =============================================================================
#
# PROPÓSITO:
# Define la clase CitationProfile, que representa el registro de citas de un
# investigador y calcula sobre él toda la batería de índices.
#
# FUNCIONALIDAD PRINCIPAL:
# - Normalizar el registro de entrada (lista cruda o CitationRecord)
# - Métodos de acceso para cada índice (h, w, c, e, ē, h′, w′, c′, ...)
# - Evaluar una lista de índices de una vez (get_all_indices)
# - Resumen con metadatos y descomposición en colas (get_summary)
#
# USO EN EL ENTORNO:
# La CLI crea un CitationProfile por investigador leído del corpus y escribe
# una fila de resultados a partir de get_all_indices.
#
# DEPENDENCIAS:
# - .records: Para normalizar registros
# - .indices: Para los índices y la descomposición en colas
#
# =============================================================================

"""Per-researcher citation profile."""

from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

from .indices import (
    IndexDescriptor,
    ProportionBounds,
    RectangleWitness,
    circle,
    cprime,
    egghe,
    egghe_real,
    hirsch,
    hprime,
    parse_index_list,
    rectangle_witnesses,
    tail_decomposition,
    woeginger,
    wprime,
)
from .records import CitationRecord, make_record, total_citations
from .values import IndexValue

DEFAULT_INDICES = ("h", "w", "c", "e", "ebar", "hprime", "wprime", "cprime", "sum", "count")


class CitationProfile:
    """
    Perfil de citas de un investigador.

    Parameters
    ----------
    citations : CitationRecord or iterable of int
        Registro ya normalizado o lista cruda de citas por artículo.
    researcher_id : str, optional
        Identificador del investigador. Por defecto "".
    bounds : ProportionBounds, optional
        Cotas de proporción para h′. Por defecto ninguna.

    Attributes
    ----------
    record : CitationRecord
        Registro normalizado.
    researcher_id : str
        Identificador.

    Examples
    --------
    >>> profile = CitationProfile([11, 7, 6, 6, 6, 4, 4, 4, 3, 3, 2, 2, 1, 1, 1])
    >>> profile.get_hirsch()
    IndexValue(radicand=Fraction(5, 1), degree=1)
    >>> profile.get_hprime().radicand
    Fraction(32, 1)
    """

    def __init__(
        self,
        citations: Union[CitationRecord, Iterable[int]],
        researcher_id: str = "",
        bounds: Optional[ProportionBounds] = None,
    ):
        # Aceptar tanto registros ya construidos como listas crudas
        if isinstance(citations, CitationRecord):
            self.record = citations
        else:
            self.record = make_record(citations)
        self.researcher_id = researcher_id
        self.bounds = bounds

    # =========================================================================
    # ÍNDICES CLÁSICOS
    # =========================================================================

    def get_hirsch(self) -> IndexValue:
        return hirsch(self.record)

    def get_woeginger(self) -> IndexValue:
        return woeginger(self.record)

    def get_circle(self) -> IndexValue:
        return circle(self.record)

    def get_egghe(self) -> IndexValue:
        return egghe(self.record)

    def get_egghe_real(self) -> IndexValue:
        return egghe_real(self.record)

    # =========================================================================
    # ÍNDICES INVARIANTES DE ESCALA
    # =========================================================================

    def get_hprime(self) -> IndexValue:
        """h′, respecting the profile's proportion bounds if any."""
        return hprime(self.record, self.bounds)

    def get_wprime(self) -> IndexValue:
        return wprime(self.record)

    def get_cprime(self) -> IndexValue:
        return cprime(self.record)

    def get_rectangle_witnesses(self) -> List[RectangleWitness]:
        """Unbounded maximal rectangles k × x_k."""
        return rectangle_witnesses(self.record)

    # =========================================================================
    # BATERÍAS
    # =========================================================================

    def get_all_indices(
        self, indices: Union[str, Sequence[str], None] = None
    ) -> Dict[str, IndexValue]:
        """
        Evalúa varios índices sobre el registro.

        Parameters
        ----------
        indices : str or sequence of str, optional
            Nombres separados por comas o lista de nombres. Por defecto
            DEFAULT_INDICES.

        Returns
        -------
        dict of str to IndexValue
            Nombre -> valor, en el orden pedido.

        Raises
        ------
        ValueError
            Si algún nombre no es un índice conocido.
        """
        descriptors: List[IndexDescriptor] = parse_index_list(
            indices if indices is not None else DEFAULT_INDICES, self.bounds
        )
        return {descriptor.name: descriptor(self.record) for descriptor in descriptors}

    def get_summary(self) -> Dict[str, Any]:
        """
        Resumen del perfil: tamaño, total y reparto de citas en colas.

        Returns
        -------
        dict
            Claves "Researcher", "Papers", "Total citations", "Square core"
            y "Rectangle core" (estas dos con las cuotas exactas de cada cola).
        """
        return {
            "Researcher": self.researcher_id,
            "Papers": len(self.record),
            "Total citations": total_citations(self.record),
            "Square core": tail_decomposition(self.record, "square").shares(),
            "Rectangle core": tail_decomposition(self.record, "rectangle").shares(),
        }

    def __repr__(self) -> str:
        return f"CitationProfile({self.researcher_id!r}, papers={len(self.record)})"
