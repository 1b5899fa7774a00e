# =============================================================================
# SCINDEX - Archivo de Inicialización del Paquete
# =============================================================================
#
# PROPÓSITO:
# Este archivo define el punto de entrada principal del paquete scindex.
# Exporta las clases y funciones que los usuarios necesitarán.
#
# FUNCIONALIDAD:
# - Define la versión del paquete (__version__)
# - Exporta la clase principal CitationProfile
# - Exporta los registros, los índices y sus valores exactos
# - Exporta los chequeos de axiomas, el modelo de crecimiento, la simulación
#   y las funciones de elección
# - Proporciona metadatos del paquete (autor, licencia)
#
# USO EN EL ENTORNO:
# Cuando un usuario hace "from scindex import CitationProfile", Python busca
# este archivo primero y carga lo que está en __all__
#
# =============================================================================

"""
scindex
=======

Scale-invariant citation indices (h′, w′, c′) next to the classical ones
(h, w, c, e), with exact values, axiom checks, deterministic and Monte Carlo
career models, and choice-function checks.

Basic Usage
-----------
>>> from scindex import CitationProfile
>>> profile = CitationProfile([11, 7, 6, 6, 6, 4, 4, 4, 3, 3, 2, 2, 1, 1, 1])
>>> print(profile.get_hirsch())
5
>>> print(profile.get_hprime().decimal())
5.65685425

License
-------
Etalab Open License 2.0

Version
-------
0.1.0
"""

# Información del paquete
__version__ = "0.1.0"
__author__ = "Andres Felipe Echavarria Pelaez"
__license__ = "Etalab-2.0"

# Lista de lo que se exporta cuando se hace "from scindex import *"
__all__ = [
    "CitationProfile",              # Perfil de citas de un investigador
    "CitationRecord",               # Registro de citas normalizado
    "make_record",                  # Normaliza listas crudas de citas
    "dual",                         # Registro dual (partición conjugada)
    "IndexValue",                   # Valor exacto de un índice (raíz de racional)
    "IndexDescriptor",              # Índice con nombre, evaluable
    "get_index",                    # Busca un índice por nombre
    "hirsch",                       # Índice h
    "hprime",                       # Índice h′ invariante de escala
    "wprime",                       # Índice w′ invariante de escala
    "cprime",                       # Índice c′ invariante de escala
    "EnumerationDomain",            # Dominio finito de los axiomas
    "independence_matrix",          # Matriz índices x axiomas
    "DeterministicParams",          # Parámetros del modelo determinista
    "build_trajectory",             # Carrera determinista
    "SimulationConfig",             # Configuración de Monte Carlo
    "run_campaign",                 # Campaña de Monte Carlo
    "exhaustive_implication_check", # MVIIA ⇒ WARP y MVIIA★
    "EXAMPLE_RECORD",               # Registro de ejemplo de 15 artículos
]

# Importaciones desde los módulos internos
from .core import CitationProfile
from .records import CitationRecord, make_record, dual
from .values import IndexValue
from .indices import IndexDescriptor, get_index, hirsch, hprime, wprime, cprime
from .axioms import EnumerationDomain, independence_matrix
from .growth import DeterministicParams, build_trajectory
from .montecarlo import SimulationConfig, run_campaign
from .choice import exhaustive_implication_check
from .data import EXAMPLE_RECORD
