"""
Módulo principal de transformaciones.
Este módulo reexporta las expresiones, las transformaciones clásicas, los
desplazamientos de Pochhammer y las relaciones contiguas.
"""

from transformaciones_expresiones import (
    CoeficienteParametros,
    ExponencialArgumento,
    Expression,
    FactorLogaritmico,
    FormaLogaritmica,
    MapaArgumento,
    PotenciaArgumento,
    PotenciaUnoMasRaizComplemento,
    PotenciaUnoMenosArgumento,
    Prefactor,
    Term,
    eval_expression,
    funcion_simple,
)
from transformaciones_clasicas import (
    euler_transform,
    kummer_doble,
    kummer_first,
    kummer_sobre_termino,
    pfaff_transform,
)
from transformaciones_desplazamiento import evaluar_desplazamiento, shift_coefficients, shift_decompose
from transformaciones_contiguas import RELACIONES, contiguous_residual, lados_contiguos

__all__ = [
    'CoeficienteParametros',
    'ExponencialArgumento',
    'Expression',
    'FactorLogaritmico',
    'FormaLogaritmica',
    'MapaArgumento',
    'PotenciaArgumento',
    'PotenciaUnoMasRaizComplemento',
    'PotenciaUnoMenosArgumento',
    'Prefactor',
    'Term',
    'eval_expression',
    'funcion_simple',
    'euler_transform',
    'kummer_doble',
    'kummer_first',
    'kummer_sobre_termino',
    'pfaff_transform',
    'evaluar_desplazamiento',
    'shift_coefficients',
    'shift_decompose',
    'RELACIONES',
    'contiguous_residual',
    'lados_contiguos',
]
