"""
Módulo de desplazamientos de Pochhammer.
Cuando un parámetro de numerador supera en un entero k a uno de denominador,
la función 3F2 se escribe como suma de k+1 funciones 2F1.
"""

import logging
import math
from fractions import Fraction

from errores import ErrorDominio
from series import entero_no_positivo, pochhammer
from transformaciones_expresiones import CoeficienteParametros, Expression, PotenciaArgumento, termino

logger = logging.getLogger(__name__)


def _es_exacto(valor):
    return isinstance(valor, (int, Fraction))


def factorial_decreciente(n, m):
    """n(n-1)···(n-m+1); 1 para m = 0."""
    return math.prod((n - i for i in range(m)), start=1)


def shift_coefficients(a, k):
    """
    Coeficientes c_ℓ de (a+k)_n/(a)_n = Σ_ℓ c_ℓ·n(n-1)···(n-ℓ+1), ℓ = 0..k.

    c_ℓ = C(k,ℓ)·(a+ℓ)_(k-ℓ)/(a)_k. Con a entero o Fraction el resultado es
    exacto (Fraction); con a flotante, flotante.

    Args:
        a: Parámetro base
        k (int): Desplazamiento entero no negativo

    Returns:
        list: k+1 coeficientes

    Raises:
        ErrorDominio: Si (a)_k = 0
    """
    if k < 0:
        raise ErrorDominio(f"el desplazamiento debe ser no negativo, se recibió k = {k}")
    base = pochhammer(a, k)
    if base == 0:
        raise ErrorDominio(f"(a)_k se anula para a = {a!r}, k = {k}")
    if _es_exacto(a):
        base = Fraction(base)
    return [math.comb(k, l) * pochhammer(a + l, k - l) / base for l in range(k + 1)]


def evaluar_desplazamiento(coeficientes, n):
    """Evalúa Σ c_ℓ·n(n-1)···(n-ℓ+1) para un n concreto."""
    return sum(c * factorial_decreciente(n, l) for l, c in enumerate(coeficientes))


def shift_decompose(b, c, a, d, k, x):
    """
    3F2(b,c,a+k;d,a;x) como suma de k+1 funciones 2F1.

    El término ℓ es C(k,ℓ)·(b)_ℓ(c)_ℓ/((a)_ℓ(d)_ℓ)·x^ℓ·2F1(b+ℓ,c+ℓ;d+ℓ;x).

    Args:
        b, c: Numeradores comunes
        a (float): Denominador desplazado
        d (float): Denominador común
        k (int): Desplazamiento
        x (float): Argumento, |x| < 1

    Returns:
        Expression: Exactamente k+1 términos

    Raises:
        ErrorDominio: Si a o d son cero o enteros negativos, o si |x| >= 1
    """
    if k < 0:
        raise ErrorDominio(f"el desplazamiento debe ser no negativo, se recibió k = {k}")
    for nombre, valor in (("a", a), ("d", d)):
        if entero_no_positivo(valor) is not None:
            raise ErrorDominio(f"el denominador {nombre} = {valor!r} es cero o entero negativo")
    if abs(x) >= 1.0:
        raise ErrorDominio(f"la descomposición requiere |x| < 1, se recibió x = {x!r}")

    terminos = []
    for l in range(k + 1):
        peso = math.comb(k, l) * pochhammer(b, l) * pochhammer(c, l) / (pochhammer(a, l) * pochhammer(d, l))
        factores = (CoeficienteParametros(peso), PotenciaArgumento(l))
        terminos.append(termino(x, (b + l, c + l), (d + l,), factores))
    return Expression(tuple(terminos), x)
