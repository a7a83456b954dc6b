"""
Módulo de reglas de cuadratura: Gauss-Legendre adaptativa y doble exponencial.
Ambas reciben integrandos vectorizados (arreglos numpy de abscisas) sobre
un intervalo creciente [inferior, superior].
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np
from scipy.special import roots_legendre

from constantes import CUAD_MAX_REFINAMIENTO, CUAD_TOL_ABS, CUAD_TOL_REL

logger = logging.getLogger(__name__)

_T_MAXIMO = 6.5
_PASO_INICIAL = 0.5


class ReglaCuadratura(str, Enum):
    GAUSS_LEGENDRE = "gauss_legendre_adaptive"
    DOBLE_EXPONENCIAL = "double_exponential"


@dataclass(frozen=True)
class QuadratureSpec:
    rule: ReglaCuadratura = ReglaCuadratura.GAUSS_LEGENDRE
    abs_tol: float = CUAD_TOL_ABS
    rel_tol: float = CUAD_TOL_REL
    max_refinement: int = CUAD_MAX_REFINAMIENTO

    def __post_init__(self):
        object.__setattr__(self, "rule", ReglaCuadratura(self.rule))
        if self.abs_tol <= 0 or self.rel_tol <= 0:
            raise ValueError("las tolerancias de cuadratura deben ser positivas")
        if self.max_refinement < 1:
            raise ValueError("max_refinement debe ser al menos 1")

    def tolerancia(self, valor):
        return max(self.abs_tol, self.rel_tol * abs(valor))


@dataclass(frozen=True)
class IntegralEstimate:
    value: float
    error_estimate: float
    evaluations: int
    converged: bool


@lru_cache(maxsize=None)
def _nodos_legendre(orden):
    nodos, pesos = roots_legendre(orden)
    return nodos, pesos


def _gauss(f, inferior, superior, orden):
    nodos, pesos = _nodos_legendre(orden)
    centro = 0.5 * (inferior + superior)
    radio = 0.5 * (superior - inferior)
    return radio * float(np.dot(pesos, f(centro + radio * nodos)))


def integrar_gauss_legendre(f, inferior, superior, spec=None):
    """
    Gauss-Legendre adaptativa: compara 10 y 20 nodos por panel y biseca
    los paneles que no alcanzan su parte de la tolerancia.

    Args:
        f (callable): Integrando vectorizado
        inferior (float): Extremo izquierdo
        superior (float): Extremo derecho (> inferior)
        spec (QuadratureSpec): Tolerancias y profundidad máxima

    Returns:
        IntegralEstimate: Valor, error estimado, evaluaciones y convergencia
    """
    spec = spec or QuadratureSpec()
    if superior == inferior:
        return IntegralEstimate(0.0, 0.0, 0, True)
    ancho_total = superior - inferior

    # estimación global para fijar la tolerancia relativa por panel
    referencia = abs(_gauss(f, inferior, superior, 20))
    evaluaciones = 20
    pendientes = [(inferior, superior, 0)]
    total = 0.0
    error_total = 0.0
    agotado = False
    while pendientes:
        izquierda, derecha, profundidad = pendientes.pop()
        grueso = _gauss(f, izquierda, derecha, 10)
        fino = _gauss(f, izquierda, derecha, 20)
        evaluaciones += 30
        error = abs(fino - grueso)
        fraccion = (derecha - izquierda) / ancho_total
        permitido = fraccion * max(spec.abs_tol, spec.rel_tol * referencia)
        if error <= permitido or profundidad >= spec.max_refinement:
            if error > permitido:
                agotado = True
            total += fino
            error_total += error
            continue
        medio = 0.5 * (izquierda + derecha)
        pendientes.append((medio, derecha, profundidad + 1))
        pendientes.append((izquierda, medio, profundidad + 1))

    convergida = (not agotado) and math.isfinite(total) and error_total <= spec.tolerancia(total)
    if not convergida:
        logger.debug(f"Gauss-Legendre sin converger en [{inferior}, {superior}]: error {error_total:.3e}")
    return IntegralEstimate(total, error_total, evaluaciones, convergida)


def _nivel_doble_exponencial(f, inferior, superior, t):
    """
    Suma Σ w(t)·f(x(t)) para las abscisas t de un nivel.

    Las distancias a los extremos se calculan directamente para no perder
    precisión cuando x(t) se acerca a un extremo.
    """
    mitad = 0.5 * (superior - inferior)
    u = 0.5 * math.pi * np.sinh(t)
    with np.errstate(over="ignore", under="ignore"):
        e_menos = np.exp(-2.0 * np.abs(u))
        # distancia al extremo más cercano y peso dx/dt
        cercana = 2.0 * mitad * e_menos / (1.0 + e_menos)
        peso = mitad * 0.5 * math.pi * np.cosh(t) * 4.0 * e_menos / (1.0 + e_menos) ** 2
    x = np.where(u < 0.0, inferior + cercana, superior - cercana)
    validos = (cercana > 0.0) & (peso > 0.0) & (x > inferior) & (x < superior)
    if not np.any(validos):
        return 0.0, 0
    valores = f(x[validos])
    contribucion = peso[validos] * valores
    return float(np.sum(contribucion)), int(np.count_nonzero(validos))


def integrar_doble_exponencial(f, inferior, superior, spec=None):
    """
    Cuadratura tanh-sinh con paso h que se reduce a la mitad por nivel.

    Tolera singularidades integrables en los extremos: las abscisas nunca
    tocan el intervalo cerrado y se descartan las que se confunden con él.

    Args:
        f (callable): Integrando vectorizado
        inferior (float): Extremo izquierdo
        superior (float): Extremo derecho (> inferior)
        spec (QuadratureSpec): Tolerancias y número máximo de niveles

    Returns:
        IntegralEstimate: Valor, error estimado, evaluaciones y convergencia
    """
    spec = spec or QuadratureSpec(rule=ReglaCuadratura.DOBLE_EXPONENCIAL)
    if superior == inferior:
        return IntegralEstimate(0.0, 0.0, 0, True)

    h = _PASO_INICIAL
    k = np.arange(-int(_T_MAXIMO / h), int(_T_MAXIMO / h) + 1)
    suma, evaluaciones = _nivel_doble_exponencial(f, inferior, superior, k * h)
    estimacion = h * suma
    error = math.inf
    for nivel in range(spec.max_refinement):
        h /= 2.0
        impares = np.arange(-int(_T_MAXIMO / h), int(_T_MAXIMO / h) + 1)
        impares = impares[impares % 2 != 0]
        nueva, usadas = _nivel_doble_exponencial(f, inferior, superior, impares * h)
        suma += nueva
        evaluaciones += usadas
        anterior, estimacion = estimacion, h * suma
        error = abs(estimacion - anterior)
        if not math.isfinite(estimacion):
            break
        if nivel >= 1 and error <= spec.tolerancia(estimacion):
            return IntegralEstimate(estimacion, error, evaluaciones, True)

    logger.debug(f"Doble exponencial sin converger en [{inferior}, {superior}]: error {error:.3e}")
    return IntegralEstimate(estimacion, error, evaluaciones, False)


def integrar(f, inferior, superior, spec):
    """Despacha a la regla indicada en spec."""
    if spec.rule is ReglaCuadratura.DOBLE_EXPONENCIAL:
        return integrar_doble_exponencial(f, inferior, superior, spec)
    return integrar_gauss_legendre(f, inferior, superior, spec)
