# =============================================================================
# SCINDEX - Configuración
# =============================================================================
#
# PROPÓSITO:
# Reúne la configuración de ejecución de la CLI: el fichero TOML opcional,
# la variable de entorno SCINDEX_THREADS y la configuración del logging.
#
# FICHERO DE CONFIGURACIÓN:
# Las claves de primer nivel son opciones globales y las tablas con nombre de
# subcomando ([simulate], [axioms], ...) guardan opciones de ese subcomando.
# Las claves usan el nombre largo de la opción con "_" en vez de "-". Los
# valores del fichero pasan a ser valores por defecto del parser, así que las
# opciones explícitas siempre ganan.
#
# DEPENDENCIAS:
# - tomllib (Python 3.11+) o tomli: Lectura del fichero TOML
# - logging: Configuración del logger raíz
#
# =============================================================================

"""Run configuration, TOML config files and logging setup."""

import logging
import os
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional, Tuple, Union

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

THREADS_ENV = "SCINDEX_THREADS"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


@dataclass
class RunConfig:
    """
    Configuración resuelta de una ejecución de la CLI.

    Attributes
    ----------
    command : str
        Subcomando.
    input_path : Path, optional
        Fichero de entrada.
    output_path : Path, optional
        Fichero de salida (stdout si no se da).
    output_format : {"csv", "json"}
        Formato de salida.
    indices : tuple of str
        Índices pedidos.
    workers : int
        Procesos de trabajo.
    options : dict
        Resto de opciones del subcomando.
    """

    command: str
    input_path: Optional[Path] = None
    output_path: Optional[Path] = None
    output_format: str = "csv"
    indices: Tuple[str, ...] = ()
    workers: int = 1
    options: Dict[str, Any] = field(default_factory=dict)

    def validate(self) -> None:
        """
        Comprueba rutas y formato antes de empezar el trabajo.

        Raises
        ------
        ValueError
            Si el formato no es válido, falta la entrada o el directorio de
            salida no existe.
        """
        if self.output_format not in ("csv", "json"):
            raise ValueError(f"Unknown output format {self.output_format!r}; use csv or json.")
        if self.input_path is not None and not self.input_path.is_file():
            raise ValueError(f"Input file {str(self.input_path)!r} does not exist.")
        if self.output_path is not None:
            parent = self.output_path.parent
            if str(parent) and not parent.is_dir():
                raise ValueError(f"Output directory {str(parent)!r} does not exist.")


def load_config_file(path: Union[str, Path]) -> Dict[str, Any]:
    """
    Lee un fichero de configuración TOML.

    Returns
    -------
    dict
        Contenido del fichero.

    Raises
    ------
    ValueError
        Si el fichero no es TOML válido.
    OSError
        Si no se puede leer.
    """
    with open(path, "rb") as handle:
        try:
            return tomllib.load(handle)
        except tomllib.TOMLDecodeError as exc:
            raise ValueError(f"Invalid config file {str(path)!r}: {exc}") from None


def config_defaults(config: Dict[str, Any], command: str) -> Dict[str, Any]:
    """Global keys overlaid with the ``[command]`` table, as parser defaults."""
    defaults = {key: value for key, value in config.items() if not isinstance(value, dict)}
    section = config.get(command, {})
    if not isinstance(section, dict):
        raise ValueError(f"Config entry {command!r} must be a table.")
    defaults.update(section)
    return {key.replace("-", "_"): value for key, value in defaults.items()}


def resolve_workers(requested: Optional[int] = None) -> int:
    """
    Número de procesos: la opción explícita, SCINDEX_THREADS o 1.

    Raises
    ------
    ValueError
        Si el valor no es un entero positivo.
    """
    if requested is not None:
        value: Any = requested
        origin = "--workers"
    else:
        value = os.environ.get(THREADS_ENV, "1")
        origin = THREADS_ENV
    try:
        workers = int(value)
    except (TypeError, ValueError):
        raise ValueError(f"{origin} must be a positive integer, got {value!r}.") from None
    if workers < 1:
        raise ValueError(f"{origin} must be a positive integer, got {workers}.")
    return workers


def setup_logging(level: Union[int, str] = logging.WARNING) -> None:
    """Configure the root logger on stderr; called once by the CLI."""
    if isinstance(level, str):
        level = level.upper()
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)
