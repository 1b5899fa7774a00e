# =============================================================================
# SCINDEX - Valores Exactos de Índices
# =============================================================================
#
# PROPÓSITO:
# Define IndexValue, la representación exacta de un valor de índice como
# raíz n-ésima de un racional. Así los empates y el orden entre índices se
# deciden sin ambigüedad de punto flotante.
#
# FUNCIONALIDAD PRINCIPAL:
# - Forma canónica con el grado mínimo (36^(1/4) se guarda como 6^(1/2))
# - Comparación exacta elevando ambos lados a un exponente común
# - Producto y potencias exactas (necesarios para los axiomas de escala)
# - Aproximación float y texto decimal con 8 cifras
#
# USO EN EL ENTORNO:
# Todos los índices de indices.py devuelven IndexValue; axioms.py compara y
# multiplica valores; montecarlo.py cuenta empates con igualdad exacta.
#
# DEPENDENCIAS:
# - fractions: Para racionales exactos
# - .utils: Para raíces enteras exactas y formato decimal
#
# =============================================================================

"""Exact index values of the form radicand^(1/degree)."""

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Tuple, Union

from .utils import exact_nth_root, factorize, format_decimal

Rational = Union[int, Fraction]


def _canonical(radicand: Fraction, degree: int) -> Tuple[Fraction, int]:
    # Extrae raíces primas del grado mientras numerador y denominador las admitan
    if radicand == 0:
        return radicand, 1
    for prime, power in factorize(degree).items():
        for _ in range(power):
            num = exact_nth_root(radicand.numerator, prime)
            den = exact_nth_root(radicand.denominator, prime)
            if num is None or den is None:
                break
            radicand = Fraction(num, den)
            degree //= prime
    return radicand, degree


@functools.total_ordering
@dataclass(frozen=True)
class IndexValue:
    """
    Valor exacto radicand^(1/degree) de un índice de citas.

    Parameters
    ----------
    radicand : int or Fraction
        Racional no negativo.
    degree : int, optional
        Grado de la raíz, positivo. Por defecto 1.

    Attributes
    ----------
    radicand : Fraction
        Radicando en forma canónica.
    degree : int
        Grado mínimo para ese radicando.
    approx : float
        Aproximación en punto flotante, solo para mostrar o promediar.

    Raises
    ------
    ValueError
        Si el radicando es negativo o el grado no es positivo.

    Examples
    --------
    >>> IndexValue(36, 4)
    IndexValue(radicand=Fraction(6, 1), degree=2)
    >>> IndexValue(40, 2) > IndexValue(6)
    True
    >>> IndexValue(40, 2).decimal()
    '6.32455532'

    Notes
    -----
    Dos valores a^(1/n) y b^(1/m) se comparan como a^(L/n) frente a b^(L/m)
    con L = mcm(n, m); ambos lados son racionales exactos.
    """

    radicand: Fraction
    degree: int = 1
    approx: float = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        radicand = Fraction(self.radicand)
        if radicand < 0:
            raise ValueError(f"Index radicand must be non-negative, got {radicand}.")
        if not isinstance(self.degree, int) or self.degree < 1:
            raise ValueError(f"Root degree must be a positive integer, got {self.degree}.")

        radicand, degree = _canonical(radicand, self.degree)
        object.__setattr__(self, "radicand", radicand)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "approx", float(radicand) ** (1.0 / degree))

    # -------------------------------------------------------------------------
    # Constructores
    # -------------------------------------------------------------------------

    @classmethod
    def zero(cls) -> "IndexValue":
        """Value reserved for the empty record."""
        return cls(Fraction(0))

    @classmethod
    def sqrt(cls, radicand: Rational) -> "IndexValue":
        """Exact square root of a non-negative rational."""
        return cls(Fraction(radicand), 2)

    # -------------------------------------------------------------------------
    # Aritmética exacta
    # -------------------------------------------------------------------------

    def exact_power(self, n: int) -> Fraction:
        """
        Devuelve value**n como racional exacto.

        Parameters
        ----------
        n : int
            Exponente; debe ser múltiplo del grado.

        Raises
        ------
        ValueError
            Si el grado no divide a n (el resultado sería irracional).
        """
        if n % self.degree != 0:
            raise ValueError(
                f"{self} raised to {n} is not rational (degree {self.degree})."
            )
        return self.radicand ** (n // self.degree)

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def _lifted(self, other: "IndexValue") -> Tuple[Fraction, Fraction, int]:
        common = self.degree * other.degree // math.gcd(self.degree, other.degree)
        return (
            self.radicand ** (common // self.degree),
            other.radicand ** (common // other.degree),
            common,
        )

    def __mul__(self, other: object) -> "IndexValue":
        if isinstance(other, (int, Fraction)):
            other = IndexValue(Fraction(other))
        if not isinstance(other, IndexValue):
            return NotImplemented
        left, right, common = self._lifted(other)
        return IndexValue(left * right, common)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IndexValue":
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        return IndexValue(self.radicand**exponent, self.degree)

    def __lt__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = IndexValue(Fraction(other))
        if not isinstance(other, IndexValue):
            return NotImplemented
        left, right, _ = self._lifted(other)
        return left < right

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.degree == 1 and self.radicand == other
        if not isinstance(other, IndexValue):
            return NotImplemented
        return self.radicand == other.radicand and self.degree == other.degree

    def __hash__(self) -> int:
        return hash((self.radicand, self.degree))

    def __float__(self) -> float:
        return self.approx

    # -------------------------------------------------------------------------
    # Presentación
    # -------------------------------------------------------------------------

    def decimal(self, places: int = 8) -> str:
        """Decimal text rounded half-even, e.g. ``'6.32455532'`` for 40^(1/2)."""
        return format_decimal(self.radicand, self.degree, places)

    def exact_form(self) -> str:
        """Exact text such as ``'5'``, ``'40^(1/2)'`` or ``'1849/21^(1/2)'``."""
        if self.degree == 1:
            return str(self.radicand)
        return f"{self.radicand}^(1/{self.degree})"

    def __str__(self) -> str:
        return self.exact_form()
