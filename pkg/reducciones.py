"""
Módulo principal del catálogo de reducciones.
Este módulo reexporta el catálogo, las formas cerradas y las formas
intermedias de los módulos especializados.
"""

from reducciones_catalogo import (
    DominioArgumento,
    IdentityRecord,
    caminos_disponibles,
    catalog,
    closed_form,
    instantiate_sides,
    lookup,
    preparar_asignacion,
    tabla_catalogo,
    terminating_closed_form,
)
from reducciones_intermedias import lados_impresos_e6
from restricciones import Combinacion, ConstraintSet

__all__ = [
    'DominioArgumento',
    'IdentityRecord',
    'caminos_disponibles',
    'catalog',
    'closed_form',
    'instantiate_sides',
    'lookup',
    'preparar_asignacion',
    'tabla_catalogo',
    'terminating_closed_form',
    'lados_impresos_e6',
    'Combinacion',
    'ConstraintSet',
]
