"""
Módulo de oráculos de cuadratura para las representaciones integrales de 3F2.
Da al verificador un camino de evaluación que no comparte código con la
suma de series.

Representaciones:
    I1   z·3F2(a+1,1,1;2,2;z) = (1/a)∫_1^(1-z) (t^a-1)/(t^a(1-t)) dt
    I2   3F2(a+1,1,1;2,2;z) = -∫_0^1 ln y·(1-yz)^(-a-1) dy
    I30  3F2(a,b,b+1/2;a+1,2b;z) = a·4^b/z^a·∫_0^(1-√(1-z)) u^(a-1)(2-u)^(a-2b) du
    I31  3F2(a,b,b+1/2;a+1,1/2;z) = a/z^a·∫_0^√z y^(2a-1)[(1+y)^(-2b)+(1-y)^(-2b)] dy
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from constantes import CUAD_A_MINIMO
from cuadratura_reglas import (
    IntegralEstimate,
    QuadratureSpec,
    ReglaCuadratura,
    integrar,
    integrar_doble_exponencial,
    integrar_gauss_legendre,
)
from errores import ErrorConvergenciaCuadratura, ErrorDominio
from restricciones import ConstraintSet, validar_parametros
from series import HypergeometricSpec

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Representacion:
    """
    Representación integral de una 3F2.

    Args:
        id (str): 'I1', 'I2', 'I30', 'I31' o 'unidad'
        parametros (tuple): Parámetros que recibe, sin contar z
        restricciones (ConstraintSet): Restricciones de los parámetros
        regla (ReglaCuadratura): Regla por defecto
        descripcion (str): Fórmula legible
    """

    id: str
    parametros: tuple
    restricciones: ConstraintSet
    regla: ReglaCuadratura
    descripcion: str


REPRESENTACIONES = {
    "I1": Representacion(
        "I1",
        ("a",),
        ConstraintSet.crear(no_nulas=("a",)),
        ReglaCuadratura.GAUSS_LEGENDRE,
        "z·3F2(a+1,1,1;2,2;z) = (1/a)∫_1^(1-z) (t^a-1)/(t^a(1-t)) dt",
    ),
    "I2": Representacion(
        "I2",
        ("a",),
        ConstraintSet.crear(),
        ReglaCuadratura.DOBLE_EXPONENCIAL,
        "3F2(a+1,1,1;2,2;z) = -∫_0^1 ln y·(1-yz)^(-a-1) dy",
    ),
    "I30": Representacion(
        "I30",
        ("a", "b"),
        ConstraintSet.crear(exclusiones=("2b",), no_nulas=("b",), cotas_inferiores={"a": CUAD_A_MINIMO}),
        ReglaCuadratura.DOBLE_EXPONENCIAL,
        "3F2(a,b,b+1/2;a+1,2b;z) = a·4^b/z^a·∫_0^(1-√(1-z)) u^(a-1)(2-u)^(a-2b) du",
    ),
    "I31": Representacion(
        "I31",
        ("a", "b"),
        ConstraintSet.crear(no_nulas=("b",), cotas_inferiores={"a": CUAD_A_MINIMO}),
        ReglaCuadratura.DOBLE_EXPONENCIAL,
        "3F2(a,b,b+1/2;a+1,1/2;z) = a/z^a·∫_0^√z y^(2a-1)[(1+y)^(-2b)+(1-y)^(-2b)] dy",
    ),
    "unidad": Representacion(
        "unidad",
        (),
        ConstraintSet.crear(),
        ReglaCuadratura.GAUSS_LEGENDRE,
        "∫_0^1 1 dt = 1",
    ),
}

REPRESENTACIONES_3F2 = ("I1", "I2", "I30", "I31")


def obtener_representacion(rep_id):
    try:
        return REPRESENTACIONES[rep_id]
    except KeyError:
        raise ErrorDominio(f"representación integral desconocida: '{rep_id}'") from None


def _separar_argumento(representacion, bindings):
    asignacion = dict(bindings)
    z = asignacion.pop("z", None)
    valores = validar_parametros(asignacion, representacion.parametros, representacion.id)
    representacion.restricciones.verificar(valores, representacion.id)
    if representacion.id == "unidad":
        return valores, None
    if z is None:
        raise ErrorDominio(f"{representacion.id} requiere el argumento z")
    z = float(z)
    if not 0.0 < z < 1.0:
        raise ErrorDominio(f"{representacion.id} requiere 0 < z < 1, se recibió z = {z!r}")
    return valores, z


def _integrando_i1(a):
    def f(t):
        t = np.asarray(t, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            valores = -np.expm1(-a * np.log(t)) / (1.0 - t)
        # límite analítico de la singularidad evitable en t = 1
        return np.where(t == 1.0, -a, valores)

    return f


def _integrando_i2(a, z):
    def f(y):
        return np.log(y) * np.exp(-(a + 1.0) * np.log1p(-y * z))

    return f


def _integrando_i30(a, b):
    def f(u):
        return np.exp((a - 1.0) * np.log(u) + (a - 2.0 * b) * np.log(2.0 - u))

    return f


def _integrando_i31(a, b):
    def f(y):
        potencia = np.exp((2.0 * a - 1.0) * np.log(y))
        return potencia * (np.exp(-2.0 * b * np.log1p(y)) + np.exp(-2.0 * b * np.log1p(-y)))

    return f


def integrando(integrand_id, bindings):
    """
    Integrando vectorizado y su intervalo creciente.

    Args:
        integrand_id (str): Clave de REPRESENTACIONES
        bindings (dict): Parámetros de la representación más 'z'

    Returns:
        tuple: (f, inferior, superior)

    Raises:
        ErrorRestriccion: Si los parámetros violan una restricción
        ErrorDominio: Si la clave no existe o z no está en (0, 1)
    """
    representacion = obtener_representacion(integrand_id)
    valores, z = _separar_argumento(representacion, bindings)
    if integrand_id == "unidad":
        return (lambda t: np.ones_like(np.asarray(t, dtype=float))), 0.0, 1.0
    if integrand_id == "I1":
        return _integrando_i1(valores["a"]), 1.0 - z, 1.0
    if integrand_id == "I2":
        return _integrando_i2(valores["a"], z), 0.0, 1.0
    if integrand_id == "I30":
        # 1 - √(1-z) sin cancelación
        return _integrando_i30(valores["a"], valores["b"]), 0.0, z / (1.0 + math.sqrt(1.0 - z))
    return _integrando_i31(valores["a"], valores["b"]), 0.0, math.sqrt(z)


def integrate(integrand_id, bindings, spec=None):
    """
    Integra una representación sobre su intervalo.

    Si spec es None se usa la regla por defecto de la representación:
    doble exponencial cuando hay singularidades en los extremos.

    Returns:
        IntegralEstimate: La falta de convergencia se informa con converged = False
    """
    f, inferior, superior = integrando(integrand_id, bindings)
    if spec is None:
        spec = QuadratureSpec(rule=REPRESENTACIONES[integrand_id].regla)
    estimacion = integrar(f, inferior, superior, spec)
    logger.debug(
        f"{integrand_id} en [{inferior:.6g}, {superior:.6g}]: {estimacion.value!r} "
        f"(error {estimacion.error_estimate:.2e}, {estimacion.evaluations} evaluaciones)"
    )
    return estimacion


def _prefactor(rep_id, valores, z):
    a = valores["a"]
    if rep_id == "I1":
        # el intervalo [1, 1-z] se recorre al revés
        return -1.0 / (a * z)
    if rep_id == "I2":
        return -1.0
    if rep_id == "I30":
        return a * math.exp(valores["b"] * math.log(4.0) - a * math.log(z))
    return a * math.exp(-a * math.log(z))


def oracle_3f2(rep_id, bindings, z, spec=None):
    """
    Valor de la 3F2 asociada a una representación integral.

    Args:
        rep_id (str): 'I1', 'I2', 'I30' o 'I31'
        bindings (dict): a (y b para I30/I31)
        z (float): Argumento en (0, 1)
        spec (QuadratureSpec, optional): Regla y tolerancias

    Returns:
        float: Valor de la 3F2

    Raises:
        ErrorRestriccion: Si los parámetros violan una restricción
        ErrorDominio: Si z no está en (0, 1)
        ErrorConvergenciaCuadratura: Si la cuadratura no converge
    """
    if rep_id not in REPRESENTACIONES_3F2:
        raise ErrorDominio(f"'{rep_id}' no es una representación de 3F2")
    asignacion = dict(bindings)
    asignacion["z"] = z
    estimacion = integrate(rep_id, asignacion, spec)
    if not estimacion.converged:
        raise ErrorConvergenciaCuadratura(
            f"{rep_id} no convergió con {dict(bindings)} y z = {z!r}: "
            f"error estimado {estimacion.error_estimate:.3e}",
            estimacion,
        )
    valores = {nombre: float(bindings[nombre]) for nombre in REPRESENTACIONES[rep_id].parametros}
    return _prefactor(rep_id, valores, float(z)) * estimacion.value


def preparar_oraculo(rep_id, bindings, z):
    """
    Valida los parámetros y el argumento de un oráculo de 3F2.

    Returns:
        dict: Parámetros normalizados

    Raises:
        ErrorDominio: Si la representación no es de 3F2 o z no está en (0, 1)
        ErrorRestriccion: Si los parámetros violan una restricción
    """
    if rep_id not in REPRESENTACIONES_3F2:
        raise ErrorDominio(f"'{rep_id}' no es una representación de 3F2")
    asignacion = dict(bindings)
    asignacion["z"] = z
    valores, _ = _separar_argumento(REPRESENTACIONES[rep_id], asignacion)
    return valores


def funcion_objetivo(rep_id, bindings, z):
    """
    La 3F2 que representa cada integral, para contrastar con eval_pfq.

    Returns:
        HypergeometricSpec
    """
    a = float(bindings["a"])
    if rep_id in ("I1", "I2"):
        return HypergeometricSpec((a + 1.0, 1.0, 1.0), (2.0, 2.0), z)
    b = float(bindings["b"])
    if rep_id == "I30":
        return HypergeometricSpec((a, b, b + 0.5), (a + 1.0, 2.0 * b), z)
    if rep_id == "I31":
        return HypergeometricSpec((a, b, b + 0.5), (a + 1.0, 0.5), z)
    raise ErrorDominio(f"'{rep_id}' no es una representación de 3F2")


__all__ = [
    'IntegralEstimate',
    'QuadratureSpec',
    'ReglaCuadratura',
    'Representacion',
    'REPRESENTACIONES',
    'REPRESENTACIONES_3F2',
    'obtener_representacion',
    'integrando',
    'integrate',
    'oracle_3f2',
    'preparar_oraculo',
    'funcion_objetivo',
    'integrar_gauss_legendre',
    'integrar_doble_exponencial',
]
