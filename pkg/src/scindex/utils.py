# =============================================================================
# SCINDEX - Módulo de Utilidades
# =============================================================================
#
# PROPÓSITO:
# Proporciona funciones auxiliares de aritmética entera exacta que son útiles
# para los índices pero que no son específicas de ningún índice en particular.
#
# FUNCIONALIDAD PRINCIPAL:
# - Raíces enteras exactas (raíz n-ésima entera, potencias perfectas)
# - Factorización en primos y sustitución de un primo por otro
# - Conversión de textos como "0.2" o "22/3" a fracciones exactas
# - Formato decimal con 8 cifras y redondeo "half-even"
#
# USO EN EL ENTORNO:
# values.py usa las raíces exactas para canonicalizar IndexValue; indices.py
# usa la factorización para el índice contraejemplo t½; cli.py y growth.py
# usan parse_rational para leer parámetros sin pasar por float.
#
# =============================================================================

"""Exact integer helpers for index arithmetic."""

from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Dict, Optional, Union

# Precisión de trabajo para las raíces decimales; sobra para 8 cifras
_DECIMAL_WORKING_PRECISION = 50

DISPLAY_PLACES = 8


def integer_nth_root(value: int, n: int) -> int:
    """
    Calcula la parte entera de la raíz n-ésima de un entero no negativo.

    Usa la iteración de Newton sobre enteros, así que es exacta incluso
    para valores que no caben en un float.

    Parameters
    ----------
    value : int
        Entero no negativo.
    n : int
        Grado de la raíz (n >= 1).

    Returns
    -------
    int
        El mayor entero r tal que r**n <= value.

    Raises
    ------
    ValueError
        Si value es negativo o n < 1.

    Examples
    --------
    >>> integer_nth_root(40, 2)
    6
    >>> integer_nth_root(27, 3)
    3
    """
    if value < 0:
        raise ValueError(f"Cannot take a root of negative value {value}.")
    if n < 1:
        raise ValueError(f"Root degree must be positive, got {n}.")
    if value < 2 or n == 1:
        return value

    # Punto de partida por encima de la raíz: 2^ceil(bits/n)
    x = 1 << ((value.bit_length() + n - 1) // n)
    while True:
        y = ((n - 1) * x + value // x ** (n - 1)) // n
        if y >= x:
            return x
        x = y


def exact_nth_root(value: int, n: int) -> Optional[int]:
    """Return the exact integer n-th root of ``value``, or None if there is none."""
    root = integer_nth_root(value, n)
    return root if root**n == value else None


def factorize(n: int) -> Dict[int, int]:
    """
    Descompone un entero positivo en factores primos.

    Parameters
    ----------
    n : int
        Entero positivo.

    Returns
    -------
    dict of int to int
        Primo -> exponente. Para n = 1 el diccionario está vacío.

    Raises
    ------
    ValueError
        Si n < 1.

    Examples
    --------
    >>> factorize(360)
    {2: 3, 3: 2, 5: 1}
    """
    if n < 1:
        raise ValueError(f"Can only factorize positive integers, got {n}.")

    factors: Dict[int, int] = {}
    divisor = 2
    while divisor * divisor <= n:
        while n % divisor == 0:
            factors[divisor] = factors.get(divisor, 0) + 1
            n //= divisor
        divisor += 1 if divisor == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def substitute_prime(n: int, old: int, new: int) -> int:
    """
    Reemplaza la potencia de un primo por la misma potencia de otro primo.

    Si n = y·old^m con old que no divide a y, devuelve y·new^m. Los demás
    factores quedan intactos (new puede dividir ya a y: su exponente se
    suma); si old no divide a n se devuelve n. La sustitución es
    multiplicativa pero no inyectiva: 15 y 25 dan ambos 25.

    Parameters
    ----------
    n : int
        Entero positivo.
    old : int
        Primo a reemplazar.
    new : int
        Primo que ocupa su lugar.

    Returns
    -------
    int
        El entero con el primo sustituido.

    Examples
    --------
    >>> substitute_prime(9, 3, 5)
    25
    >>> substitute_prime(12, 3, 5)
    20
    >>> substitute_prime(15, 3, 5)
    25
    """
    factors = factorize(n)
    exponent = factors.pop(old, 0)
    if exponent == 0:
        return n
    factors[new] = factors.get(new, 0) + exponent

    result = 1
    for prime, power in factors.items():
        result *= prime**power
    return result


def parse_rational(text: Union[str, int, float, Fraction]) -> Fraction:
    """
    Convierte un parámetro a Fraction sin pasar por la representación binaria.

    "0.2" da exactamente 1/5 (no el float más cercano), lo que importa para
    los pisos del modelo determinista.

    Examples
    --------
    >>> parse_rational("0.2")
    Fraction(1, 5)
    >>> parse_rational("22/3")
    Fraction(22, 3)
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, float):
        # repr da la expansión decimal más corta que reproduce el float
        return Fraction(repr(text))
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"Not a rational number: {text!r}") from exc


def format_decimal(
    radicand: Fraction, degree: int = 1, places: int = DISPLAY_PLACES
) -> str:
    """
    Formatea radicand^(1/degree) con `places` decimales, redondeo half-even.

    Parameters
    ----------
    radicand : Fraction
        Radicando no negativo.
    degree : int, optional
        Grado de la raíz. Por defecto 1.
    places : int, optional
        Número de decimales. Por defecto 8.

    Returns
    -------
    str
        Representación decimal, por ejemplo "6.32455532" para sqrt(40).
    """
    quantum = Decimal(1).scaleb(-places)
    with localcontext() as ctx:
        ctx.prec = _DECIMAL_WORKING_PRECISION
        value = Decimal(radicand.numerator) / Decimal(radicand.denominator)
        if degree > 1 and value != 0:
            if degree == 2:
                value = value.sqrt()
            else:
                value = (value.ln() / degree).exp()
        return str(value.quantize(quantum, rounding=ROUND_HALF_EVEN))
