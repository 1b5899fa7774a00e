# =============================================================================
# SCINDEX - Datos de Referencia
# =============================================================================
#
# PROPÓSITO:
# Reúne los registros y parámetros de referencia que usan las pruebas, los
# chequeos de axiomas y la CLI, para no repetir listas de números sueltas.
#
# CONTENIDO:
# - EXAMPLE_RECORD: registro de 15 artículos usado como ejemplo trabajado
#   (h = 5, w = 8, e = 6, ē = sqrt(40), h′ = sqrt(32))
# - STRETCH_INVERSION_PAIR: registros C y D cuyo orden por h se invierte
#   al estirarlos horizontalmente con factor 3
# - DUAL_EXAMPLES: pares (registro, dual) conocidos
# - SIMULATION_PARAMETER_SETS: las tres combinaciones (p, c) mensuales de
#   las carreras simuladas
# - NARROW_RECORD_RECTANGLE: el rectángulo 3 x 10675 de un registro estrecho
#   y muy citado
#
# USO EN EL ENTORNO:
# axioms.py inyecta STRETCH_INVERSION_PAIR como testigo; cli.py ofrece
# SIMULATION_PARAMETER_SETS como valores por defecto documentados.
#
# =============================================================================

"""Reference records and parameter sets."""

from typing import Dict, List, Tuple

# Registro trabajado: l = 15, total 61 citas
EXAMPLE_RECORD: Tuple[int, ...] = (11, 7, 6, 6, 6, 4, 4, 4, 3, 3, 2, 2, 1, 1, 1)

# Investigadoras C y D; estiradas por 3, h pasa de 6 vs 4 a 8 vs 11
STRETCH_INVERSION_PAIR: Dict[str, Tuple[int, ...]] = {
    "C": (10, 8, 8, 6, 6, 6, 4, 2),
    "D": (24, 22, 20, 11, 2),
}
STRETCH_INVERSION_FACTOR = 3

DUAL_EXAMPLES: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = [
    ((8, 6, 2), (3, 3, 2, 2, 2, 2, 1, 1)),
    ((8, 6, 6, 2), (4, 4, 3, 3, 3, 3, 1, 1)),
    ((13, 11, 11, 10, 7, 4, 3, 3, 3, 1), (10, 9, 9, 6, 5, 5, 5, 4, 4, 4, 3, 1, 1)),
]

# (p, c) mensuales: artículos por mes y citas por artículo y mes
SIMULATION_PARAMETER_SETS: List[Tuple[float, float]] = [
    (0.125, 0.32),
    (0.2, 0.2),
    (0.32, 0.125),
]

# Ancho x alto del rectángulo máximo de un registro estrecho; h′ ≈ 178.96
NARROW_RECORD_RECTANGLE: Tuple[int, int] = (3, 10675)
