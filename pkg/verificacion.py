"""
Módulo principal de verificación.
Este módulo reexporta el muestreo, la política de comparación y los
verificadores de identidades, relaciones y oráculos.
"""

from verificacion_comparacion import (
    Comparacion,
    ComparisonPolicy,
    ResultadoComparacion,
    VerificationReport,
    compare,
)
from verificacion_identidades import (
    CLAVES_ORACULOS,
    CLAVES_RELACIONES,
    caminos_registro,
    claves_suite,
    suite_aprobada,
    verificar_oraculo,
    verificar_por_clave,
    verificar_relacion,
    verify_identity,
    verify_suite,
)
from verificacion_muestreo import (
    SamplingPlan,
    argumentos_z,
    generador,
    sample_bindings,
    sample_bindings_con_conteo,
)

__all__ = [
    'Comparacion',
    'ComparisonPolicy',
    'ResultadoComparacion',
    'VerificationReport',
    'compare',
    'CLAVES_ORACULOS',
    'CLAVES_RELACIONES',
    'caminos_registro',
    'claves_suite',
    'suite_aprobada',
    'verificar_oraculo',
    'verificar_por_clave',
    'verificar_relacion',
    'verify_identity',
    'verify_suite',
    'SamplingPlan',
    'argumentos_z',
    'generador',
    'sample_bindings',
    'sample_bindings_con_conteo',
]
