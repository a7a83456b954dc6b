"""
Módulo principal para la exportación de reportes de verificación.
Este módulo reexporta las funciones de los módulos especializados.
"""

from exportacion_excel import ExportadorExcel
from exportacion_json import (
    deserializar,
    documento_reportes,
    escribir_json,
    leer_json,
    serializar,
)

__all__ = [
    'ExportadorExcel',
    'deserializar',
    'documento_reportes',
    'escribir_json',
    'leer_json',
    'serializar',
]
