"""
Módulo de formas cerradas elementales de las reducciones.
Las expresiones con √z o √(1-z) se reescriben con log1p/expm1 para que no
pierdan dígitos cerca de z = 0.
"""

import logging
import math
from fractions import Fraction

from constantes import EPS_LIMITE
from errores import ErrorDominio, ErrorPrecision
from series import EstadoEvaluacion, HypergeometricSpec, eval_pfq
from transformaciones_clasicas import pfaff_transform
from transformaciones_expresiones import eval_expression

logger = logging.getLogger(__name__)


def _log_semisuma(z):
    """ln((1+√(1-z))/2) sin cancelación para z pequeño."""
    if z > 1.0:
        raise ErrorDominio(f"√(1-z) no es real para z = {z!r}")
    return math.log1p(-z / (2.0 * (1.0 + math.sqrt(1.0 - z))))


def _raiz_interior(z, identidad):
    if not 0.0 < z < 1.0:
        raise ErrorDominio(f"{identidad} requiere 0 < z < 1, se recibió z = {z!r}")
    return math.sqrt(z)


def forma_s35(v, z):
    """(4/(nz))·[1 - 2^-n·(1+√(1-z))^n]; 1 en z = 0."""
    n = v["n"]
    if z == 0.0:
        return 1.0
    return -4.0 * math.expm1(n * _log_semisuma(z)) / (n * z)


def forma_s36(v, z):
    """-(4/z)·ln[(1+√(1-z))/2]; 1 en z = 0."""
    if z == 0.0:
        return 1.0
    return -4.0 * _log_semisuma(z) / z


def forma_s37(v, z):
    """4^b/[1+√(1-z)]^(2b), escrita como [(1+√(1-z))/2]^(-2b)."""
    return math.exp(-2.0 * v["b"] * _log_semisuma(z))


def forma_s38(v, z):
    """
    [(1+√z)^(1-2b) - (1-√z)^(1-2b)]/(2√z(1-2b)).

    Para |1-2b| < EPS_LIMITE se usa el desarrollo de exp[(1-2b)ln(1±√z)]
    hasta tercer orden, cuyo primer término es la forma logarítmica.
    """
    r = _raiz_interior(z, "S38")
    eps = 1.0 - 2.0 * v["b"]
    mas, menos = math.log1p(r), math.log1p(-r)
    if abs(eps) < EPS_LIMITE:
        diferencia = (
            (mas - menos)
            + eps * (mas**2 - menos**2) / 2.0
            + eps**2 * (mas**3 - menos**3) / 6.0
        )
    else:
        diferencia = (math.expm1(eps * mas) - math.expm1(eps * menos)) / eps
    return diferencia / (2.0 * r)


def forma_s39(v, z):
    """(1/(2√z))·ln[(1+√z)/(1-√z)]."""
    r = _raiz_interior(z, "S39")
    return (math.log1p(r) - math.log1p(-r)) / (2.0 * r)


def forma_s40(v, z):
    """½[(1+√z)^(-2a) + (1-√z)^(-2a)]."""
    r = _raiz_interior(z, "S40")
    a = v["a"]
    return 0.5 * (math.exp(-2.0 * a * math.log1p(r)) + math.exp(-2.0 * a * math.log1p(-r)))


def valor_fiable(resultado, descripcion):
    """Valor de un EvalResult; falla si la suma perdió precisión o divergió."""
    if resultado.status is EstadoEvaluacion.PRECISION_PERDIDA:
        raise ErrorPrecision(f"{descripcion}: la suma cancela más de lo que admite la doble precisión")
    if resultado.status is EstadoEvaluacion.DIVERGENTE:
        raise ErrorDominio(f"{descripcion}: serie divergente")
    return resultado.value


def forma_s41(v, z):
    """
    ½Σ_(w=±√z) (1-w)^(2(1-a))·2F1(2,1;2a+1;w).

    Forma parcial: conserva una 2F1, evaluada por serie. La rama w = -√z
    alterna y con a < 0 cancela; se evalúa en w/(w-1), dentro de (0, 1/2).
    """
    r = _raiz_interior(z, "S41")
    a = v["a"]
    total = 0.0
    for w in (-r, r):
        funcion = HypergeometricSpec((2.0, 1.0), (2.0 * a + 1.0,), w)
        resultado = eval_expression(pfaff_transform(funcion)) if w < 0.0 else eval_pfq(funcion)
        serie = valor_fiable(resultado, f"S41 en w = {w:g}")
        total += math.exp(2.0 * (1.0 - a) * math.log1p(-w)) * serie
    return 0.5 * total


def _cociente_pochhammer(numeradores, denominadores, n):
    # en racionales exactos; sólo se redondea el resultado
    numeradores = [Fraction(p) for p in numeradores]
    denominadores = [Fraction(q) for q in denominadores]
    valor = Fraction(1)
    for i in range(n):
        valor *= math.prod(p + i for p in numeradores) / math.prod(q + i for q in denominadores)
    return float(valor)


def cociente_t7(v, n):
    """(2+a-b)_n(b-a-1)_n / [(b)_n(a-b+1)_n]."""
    a, b = v["a"], v["b"]
    return _cociente_pochhammer((2 + a - b, b - a - 1), (b, a - b + 1), n)


def cociente_t8(v, n):
    """(a-2b)_n(a/2-b+1)_n(-b)_n / [(a-b+1)_n(a/2-b)_n(-2b)_n]."""
    a, b = v["a"], v["b"]
    return _cociente_pochhammer((a - 2 * b, a / 2 - b + 1, -b), (a - b + 1, a / 2 - b, -2 * b), n)


def cociente_t9(v, n):
    """(a-2b)_n(-b)_n / [(a-b+1)_n(-2b)_n]."""
    a, b = v["a"], v["b"]
    return _cociente_pochhammer((a - 2 * b, -b), (a - b + 1, -2 * b), n)
