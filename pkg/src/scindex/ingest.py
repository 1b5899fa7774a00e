# =============================================================================
# SCINDEX - Lectura y Escritura de Registros
# =============================================================================
#
# PROPÓSITO:
# Lee corpus de registros de citas en JSON Lines o CSV y escribe resultados
# (CSV, JSON, JSONL) sin dejar nunca ficheros a medio escribir.
#
# FORMATOS DE ENTRADA:
# - JSONL: una línea por investigador, {"id": "...", "citations": [..]}
# - CSV: id en la primera columna y las citas en las siguientes; una
#   cabecera que empiece por "id" se ignora
#
# ERRORES:
# Los valores negativos, no enteros o mal formados producen RecordFormatError
# con el fichero y el número de línea.
#
# DEPENDENCIAS:
# - json, csv: Formatos de entrada y salida
# - tempfile, os: Escritura atómica (fichero temporal + os.replace)
# - .records: Para construir los registros
#
# =============================================================================

"""Corpus ingestion and atomic output writers."""

import csv
import io
import json
import logging
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Union

from .records import CitationRecord, make_record

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

PathLike = Union[str, Path]


class RecordFormatError(ValueError):
    """
    Registro de entrada mal formado.

    Parameters
    ----------
    reason : str
        Descripción del problema.
    line : int
        Línea (1-based) del fichero.
    source : str, optional
        Nombre del fichero. Por defecto "<input>".
    """

    def __init__(self, reason: str, line: int, source: str = "<input>"):
        self.reason = reason
        self.line = line
        self.source = source
        super().__init__(f"{source}:{line}: {reason}")


@dataclass(frozen=True)
class ResearcherRecord:
    """One corpus entry: an identifier and its normalized record."""

    researcher_id: str
    record: CitationRecord

    def to_json(self) -> Dict[str, Any]:
        return {"id": self.researcher_id, "citations": list(self.record.entries)}


def _counts(values: Iterable[Any], line: int, source: str) -> CitationRecord:
    parsed: List[int] = []
    for value in values:
        if isinstance(value, str):
            text = value.strip()
            if not text:
                continue
            try:
                value = int(text)
            except ValueError:
                raise RecordFormatError(
                    f"citation count {text!r} is not an integer", line, source
                ) from None
        if isinstance(value, bool) or not isinstance(value, int):
            raise RecordFormatError(f"citation count {value!r} is not an integer", line, source)
        if value < 0:
            raise RecordFormatError(f"citation count {value} is negative", line, source)
        parsed.append(value)
    return make_record(parsed)


def parse_jsonl(lines: Iterable[str], source: str = "<input>") -> Iterator[ResearcherRecord]:
    """
    Analiza líneas JSONL. Las líneas en blanco se saltan.

    Raises
    ------
    RecordFormatError
        Si una línea no es JSON válido o le faltan "id" o "citations".
    """
    for number, raw in enumerate(lines, start=1):
        if not raw.strip():
            logger.warning("%s:%d: skipping blank line", source, number)
            continue
        try:
            payload = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise RecordFormatError(f"invalid JSON ({exc.msg})", number, source) from None
        if not isinstance(payload, dict) or "citations" not in payload:
            raise RecordFormatError('expected an object with "citations"', number, source)
        citations = payload["citations"]
        if not isinstance(citations, list):
            raise RecordFormatError('"citations" must be a list', number, source)
        researcher_id = str(payload.get("id", number))
        yield ResearcherRecord(researcher_id, _counts(citations, number, source))


def parse_csv(lines: Iterable[str], source: str = "<input>") -> Iterator[ResearcherRecord]:
    """
    Analiza filas CSV: id y después las citas de cada artículo.

    Raises
    ------
    RecordFormatError
        Si alguna cita no es un entero no negativo.
    """
    for number, row in enumerate(csv.reader(lines), start=1):
        if not row or not any(cell.strip() for cell in row):
            continue
        if number == 1 and row[0].strip().lower() == "id":
            continue
        yield ResearcherRecord(row[0].strip(), _counts(row[1:], number, source))


def detect_format(path: PathLike) -> str:
    suffix = Path(path).suffix.lower()
    if suffix in (".jsonl", ".ndjson", ".json"):
        return "jsonl"
    if suffix in (".csv", ".txt"):
        return "csv"
    raise ValueError(f"Cannot infer the input format of {str(path)!r}; use .jsonl or .csv.")


def read_corpus(path: PathLike, fmt: Optional[str] = None) -> List[ResearcherRecord]:
    """
    Lee un corpus completo.

    Parameters
    ----------
    path : str or Path
        Fichero de entrada.
    fmt : {"jsonl", "csv"}, optional
        Formato. Por defecto se deduce de la extensión.

    Returns
    -------
    list of ResearcherRecord
        Registros normalizados en el orden del fichero.

    Raises
    ------
    RecordFormatError
        Si algún registro está mal formado.
    OSError
        Si el fichero no se puede leer.
    """
    fmt = fmt or detect_format(path)
    if fmt not in ("jsonl", "csv"):
        raise ValueError(f"Unknown input format {fmt!r}; use 'jsonl' or 'csv'.")
    source = str(path)
    with open(path, encoding="utf-8", newline="") as handle:
        lines = handle.read().splitlines()
    parser = parse_jsonl if fmt == "jsonl" else parse_csv
    corpus = list(parser(lines, source))
    logger.info("Read %d records from %s", len(corpus), source)
    return corpus


# =============================================================================
# ESCRITURA ATÓMICA
# =============================================================================


def write_text_atomic(path: PathLike, text: str) -> None:
    """Write ``text`` to a temporary sibling and rename it over ``path``."""
    target = Path(path)
    directory = target.parent if str(target.parent) else Path(".")
    fd, tmp_name = tempfile.mkstemp(prefix=f".{target.name}.", suffix=".tmp", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp_name, target)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    logger.info("Wrote %s", target)


def csv_text(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if cell is None else cell for cell in row])
    return buffer.getvalue()


def json_text(payload: Dict[str, Any]) -> str:
    """Versioned, key-sorted JSON document."""
    document = {"schema_version": SCHEMA_VERSION}
    document.update(payload)
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def jsonl_text(records: Iterable[ResearcherRecord]) -> str:
    return "".join(json.dumps(r.to_json(), sort_keys=True) + "\n" for r in records)


def write_csv(path: PathLike, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    write_text_atomic(path, csv_text(header, rows))


def write_json(path: PathLike, payload: Dict[str, Any]) -> None:
    write_text_atomic(path, json_text(payload))


def write_jsonl(path: PathLike, records: Iterable[ResearcherRecord]) -> None:
    write_text_atomic(path, jsonl_text(records))
