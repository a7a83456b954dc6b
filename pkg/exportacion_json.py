"""
Módulo de serialización JSON de los reportes de verificación.
La salida es canónica (claves ordenadas, sin marcas de tiempo) para que dos
ejecuciones con la misma semilla produzcan archivos idénticos y para que
leer y volver a escribir un reporte no cambie ningún byte.
"""

import json
import logging
import math

from constantes import VERSION_ARTEFACTO

logger = logging.getLogger(__name__)


def _sanear(valor):
    """Sustituye los flotantes no finitos por None en toda la estructura."""
    if isinstance(valor, float):
        return valor if math.isfinite(valor) else None
    if isinstance(valor, dict):
        return {str(clave): _sanear(v) for clave, v in valor.items()}
    if isinstance(valor, (list, tuple)):
        return [_sanear(v) for v in valor]
    return valor


def documento_reportes(reportes, plan, policy):
    """
    Documento de nivel superior de una verificación.

    Args:
        reportes (list): VerificationReport en orden de ejecución
        plan (SamplingPlan): Plan usado
        policy (ComparisonPolicy): Política usada

    Returns:
        dict: version, plan, politica, reportes y aprobado
    """
    return {
        "version": VERSION_ARTEFACTO,
        "plan": plan.a_dict(),
        "politica": policy.a_dict(),
        "reportes": [reporte.a_dict() for reporte in reportes],
        "aprobado": all(reporte.passed for reporte in reportes),
    }


def serializar(documento):
    """Texto JSON canónico del documento, terminado en salto de línea."""
    return json.dumps(_sanear(documento), sort_keys=True, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def deserializar(texto):
    return json.loads(texto)


def escribir_json(documento, ruta):
    """
    Escribe el documento en disco.

    Returns:
        str: Ruta del archivo creado
    """
    with open(ruta, "w", encoding="utf-8") as archivo:
        archivo.write(serializar(documento))
    logger.info(f"Reporte JSON escrito en {ruta}")
    return ruta


def leer_json(ruta):
    with open(ruta, "r", encoding="utf-8") as archivo:
        return deserializar(archivo.read())
