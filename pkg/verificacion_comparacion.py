"""
Módulo de comparación de caminos de evaluación y de los reportes de verificación.
"""

import logging
import math
from dataclasses import dataclass, field

from constantes import (
    FRACCION_DESCARTE_MAXIMA,
    PISO_ABS,
    TOL_REL,
    TOL_REL_FRONTERA,
    TOL_REL_ORACULO,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ComparisonPolicy:
    """
    Tolerancias relativas por nivel.

    tol_rel se aplica en el interior, tol_rel_boundary cerca del radio de
    convergencia y tol_rel_oraculo cuando interviene una cuadratura.
    """

    tol_rel: float = TOL_REL
    tol_rel_boundary: float = TOL_REL_FRONTERA
    abs_floor: float = PISO_ABS
    tol_rel_oraculo: float = TOL_REL_ORACULO

    def __post_init__(self):
        if min(self.tol_rel, self.tol_rel_boundary, self.abs_floor, self.tol_rel_oraculo) <= 0:
            raise ValueError("las tolerancias de comparación deben ser positivas")
        if self.tol_rel > self.tol_rel_boundary:
            raise ValueError(
                f"tol_rel ({self.tol_rel:g}) no puede superar tol_rel_boundary ({self.tol_rel_boundary:g})"
            )

    def tolerancia(self, boundary, oraculo=False):
        tolerancia = self.tol_rel_boundary if boundary else self.tol_rel
        if oraculo:
            tolerancia = max(tolerancia, self.tol_rel_oraculo)
        return tolerancia

    def a_dict(self):
        return {
            "tol_rel": self.tol_rel,
            "tol_rel_boundary": self.tol_rel_boundary,
            "tol_rel_oraculo": self.tol_rel_oraculo,
            "abs_floor": self.abs_floor,
        }


@dataclass(frozen=True)
class ResultadoComparacion:
    rel_error: float
    passed: bool
    diagnostico: str = ""


def compare(x, y, policy, boundary, escala=0.0, oraculo=False):
    """
    Compara dos valores con error relativo.

    rel_error = |x-y| / max(|x|, |y|, abs_floor). La escala de los sumandos
    no entra en el denominador: solo se anota en el diagnóstico de un fallo
    cuando supera a ambos valores.

    Args:
        x, y (float): Valores a comparar
        policy (ComparisonPolicy): Tolerancias
        boundary (bool): Usar la tolerancia de frontera
        escala (float): Magnitud de los sumandos, solo diagnóstica
        oraculo (bool): Uno de los valores viene de una cuadratura

    Returns:
        ResultadoComparacion: Un valor no finito falla con diagnóstico
    """
    if not (math.isfinite(x) and math.isfinite(y)):
        return ResultadoComparacion(math.inf, False, f"valor no finito: {x!r} frente a {y!r}")
    rel_error = abs(x - y) / max(abs(x), abs(y), policy.abs_floor)
    tolerancia = policy.tolerancia(boundary, oraculo)
    if rel_error <= tolerancia:
        return ResultadoComparacion(rel_error, True)
    diagnostico = f"error relativo {rel_error:.3e} > {tolerancia:.1e}"
    if math.isfinite(escala) and escala > max(abs(x), abs(y)):
        diagnostico += f" (sumandos de magnitud {escala:.3e})"
    return ResultadoComparacion(rel_error, False, diagnostico)


@dataclass(frozen=True)
class Comparacion:
    """Una comparación entre dos caminos en una asignación y un argumento."""

    bindings: dict
    z: float
    paths: tuple
    values: tuple
    rel_error: float
    passed: bool
    boundary: bool
    diagnostico: str = ""

    def a_dict(self):
        return {
            "bindings": dict(sorted(self.bindings.items())),
            "z": self.z,
            "paths": list(self.paths),
            "values": list(self.values),
            "rel_error": self.rel_error,
            "passed": self.passed,
            "boundary": self.boundary,
            "diagnostico": self.diagnostico,
        }


@dataclass(frozen=True)
class VerificationReport:
    """
    Resultado de verificar una identidad, relación u oráculo.

    passed exige que todas las comparaciones pasen y que no haya errores de
    evaluación; sin_datos marca el aprobado vacío de un plan sin muestras.
    descartadas cuenta las evaluaciones sin precisión suficiente, que no se
    comparan; si superan la fracción admitida el reporte falla.
    """

    identity_id: str
    samples_attempted: int
    samples_rejected: int
    comparisons: tuple = ()
    errores: tuple = ()
    max_rel_error: float = 0.0
    passed: bool = True
    sin_datos: bool = False
    fallidas: int = field(default=0)
    descartadas: int = 0
    evaluaciones: int = 0

    @classmethod
    def construir(cls, identity_id, intentos, rechazos, comparaciones, errores, descartadas=0, evaluaciones=0):
        comparaciones = tuple(comparaciones)
        errores = tuple(errores)
        if evaluaciones and descartadas > FRACCION_DESCARTE_MAXIMA * evaluaciones:
            errores += (f"{descartadas} de {evaluaciones} evaluaciones sin precisión suficiente",)
        elif descartadas:
            logger.info(f"{identity_id}: {descartadas} de {evaluaciones} evaluaciones descartadas por precisión")
        maximo = max((c.rel_error for c in comparaciones), default=0.0)
        fallidas = sum(1 for c in comparaciones if not c.passed)
        aprobado = fallidas == 0 and not errores
        if not aprobado:
            logger.warning(
                f"{identity_id}: {fallidas} comparaciones fallidas, {len(errores)} errores, "
                f"error relativo máximo {maximo:.3e}"
            )
        return cls(
            identity_id=identity_id,
            samples_attempted=intentos,
            samples_rejected=rechazos,
            comparisons=comparaciones,
            errores=errores,
            max_rel_error=maximo,
            passed=aprobado,
            sin_datos=not comparaciones and not errores,
            fallidas=fallidas,
            descartadas=descartadas,
            evaluaciones=evaluaciones,
        )

    def a_dict(self):
        return {
            "identity_id": self.identity_id,
            "samples_attempted": self.samples_attempted,
            "samples_rejected": self.samples_rejected,
            "comparisons": [c.a_dict() for c in self.comparisons],
            "errores": list(self.errores),
            "max_rel_error": self.max_rel_error,
            "fallidas": self.fallidas,
            "descartadas": self.descartadas,
            "evaluaciones": self.evaluaciones,
            "passed": self.passed,
            "sin_datos": self.sin_datos,
        }
