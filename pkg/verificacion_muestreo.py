"""
Módulo de muestreo reproducible de parámetros y argumentos.
Cada identidad tiene su propio flujo aleatorio, derivado de la semilla del
plan y de su clave, de modo que los reportes no dependen del orden en que
se verifican las identidades.
"""

import logging
import math
import zlib
from dataclasses import dataclass

import numpy as np

from constantes import (
    MARGEN_RECHAZO,
    MAX_ENTERO_MUESTREO,
    MUESTRAS_POR_IDENTIDAD,
    PASO_MUESTREO,
    RANGO_PARAMETROS,
    REINTENTOS_POR_MUESTRA,
    REJILLA_Z,
    Z_ALEATORIOS_POR_ASIGNACION,
)
from errores import ErrorAgotamientoMuestreo, ErrorRestriccion

logger = logging.getLogger(__name__)

_TASA_RECHAZO_MAXIMA = 0.99


@dataclass(frozen=True)
class SamplingPlan:
    """
    Plan de muestreo de una verificación.

    Args:
        seed (int): Semilla de 64 bits
        samples_per_identity (int): Asignaciones aceptadas por identidad (0 = sin datos)
        parameter_range (tuple): Intervalo de los parámetros reales
        z_grid (tuple): Rejilla fija de argumentos
        z_aleatorios (int): Argumentos aleatorios adicionales por asignación
        rejection_margin (float): Distancia mínima a un valor excluido
        origen_semilla (str): 'defecto', 'entorno' o 'argumento'
    """

    seed: int = 1
    samples_per_identity: int = MUESTRAS_POR_IDENTIDAD
    parameter_range: tuple = RANGO_PARAMETROS
    z_grid: tuple = REJILLA_Z
    z_aleatorios: int = Z_ALEATORIOS_POR_ASIGNACION
    rejection_margin: float = MARGEN_RECHAZO
    origen_semilla: str = "defecto"

    def __post_init__(self):
        object.__setattr__(self, "parameter_range", tuple(float(x) for x in self.parameter_range))
        object.__setattr__(self, "z_grid", tuple(float(x) for x in self.z_grid))
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"la semilla debe caber en 64 bits sin signo, se recibió {self.seed}")
        if self.samples_per_identity < 0:
            raise ValueError("samples_per_identity no puede ser negativo")
        inferior, superior = self.parameter_range
        if not inferior < superior:
            raise ValueError(f"rango de parámetros vacío: {self.parameter_range}")
        if self.rejection_margin <= 0:
            raise ValueError("rejection_margin debe ser positivo")
        if self.z_aleatorios < 0:
            raise ValueError("z_aleatorios no puede ser negativo")

    def a_dict(self):
        return {
            "seed": self.seed,
            "origen_semilla": self.origen_semilla,
            "samples_per_identity": self.samples_per_identity,
            "parameter_range": list(self.parameter_range),
            "z_grid": list(self.z_grid),
            "z_aleatorios": self.z_aleatorios,
            "rejection_margin": self.rejection_margin,
        }


def generador(plan, clave):
    """
    Generador Philox propio de una clave.

    La clave se reduce con crc32 para que el flujo sea estable entre
    ejecuciones (hash() de str cambia con cada proceso).
    """
    secuencia = np.random.SeedSequence(plan.seed, spawn_key=(zlib.crc32(clave.encode("utf-8")),))
    return np.random.Generator(np.random.Philox(secuencia))


def _en_rejilla(valor, minimo):
    # múltiplo de PASO_MUESTREO: los parámetros sorteados son racionales diádicos cortos
    cuantizado = math.floor(valor / PASO_MUESTREO) * PASO_MUESTREO
    return cuantizado if cuantizado >= minimo else cuantizado + PASO_MUESTREO


def _sortear(slots, enteros, cotas, plan, rng):
    inferior, superior = plan.parameter_range
    asignacion = {}
    for slot in slots:
        if slot in enteros:
            maximo = enteros[slot] if enteros[slot] is not None else MAX_ENTERO_MUESTREO
            asignacion[slot] = float(rng.integers(0, maximo + 1))
        else:
            minimo = max(inferior, cotas.get(slot, inferior))
            asignacion[slot] = _en_rejilla(float(rng.uniform(minimo, superior)), minimo)
    return asignacion


def muestrear_espacio(clave, slots, restricciones, plan, rng=None):
    """
    Sortea asignaciones que respetan las restricciones con margen.

    Args:
        clave (str): Clave de la identidad o relación (fija el flujo aleatorio)
        slots (tuple): Parámetros a sortear
        restricciones (ConstraintSet): Restricciones del espacio
        plan (SamplingPlan): Plan de muestreo
        rng (numpy.random.Generator, optional): Generador a reutilizar

    Returns:
        tuple: (lista de asignaciones, número de rechazos)

    Raises:
        ErrorAgotamientoMuestreo: Si una muestra agota sus reintentos o se
        rechaza más del 99% de los intentos
    """
    rng = rng if rng is not None else generador(plan, clave)
    enteros = restricciones.enteros
    cotas = dict(restricciones.lower_bounds)
    aceptadas = []
    rechazos = 0
    for _ in range(plan.samples_per_identity):
        for _ in range(REINTENTOS_POR_MUESTRA):
            asignacion = _sortear(slots, enteros, cotas, plan, rng)
            motivo = restricciones.combinacion_cercana(asignacion, plan.rejection_margin)
            if motivo is None:
                aceptadas.append(asignacion)
                break
            rechazos += 1
        else:
            raise ErrorAgotamientoMuestreo(
                f"{clave}: {REINTENTOS_POR_MUESTRA} intentos rechazados seguidos"
            )
    intentos = len(aceptadas) + rechazos
    if intentos and rechazos / intentos > _TASA_RECHAZO_MAXIMA:
        raise ErrorAgotamientoMuestreo(f"{clave}: tasa de rechazo {rechazos / intentos:.1%}")
    if rechazos:
        logger.debug(f"{clave}: {rechazos} asignaciones rechazadas de {intentos}")
    return aceptadas, rechazos


def sample_bindings_con_conteo(record, plan, rng=None):
    """Como sample_bindings, devolviendo también el número de rechazos."""
    return muestrear_espacio(record.id, record.slots, record.constraints, plan, rng)


def sample_bindings(record, plan):
    """
    Asignaciones aceptadas para un registro del catálogo.

    Misma semilla y mismo registro producen la misma lista.
    """
    asignaciones, _ = sample_bindings_con_conteo(record, plan)
    return asignaciones


def admitir_asignacion(restricciones, asignacion, clave):
    """Comprueba una asignación inyectada; devuelve False si se rechaza."""
    try:
        restricciones.verificar(asignacion, clave)
    except (ErrorRestriccion, KeyError):
        return False
    return True


def argumentos_z(dominio, plan, rng, incluir_extremos=False):
    """
    Argumentos a evaluar para una asignación.

    La rejilla se interseca con el dominio recortado; se añaden los sorteos
    uniformes y, si se pide, los extremos cerrados del dominio.

    Args:
        dominio (DominioArgumento): Dominio del argumento
        plan (SamplingPlan): Plan de muestreo
        rng (numpy.random.Generator): Generador de la identidad
        incluir_extremos (bool): Añadir extremos cerrados no degenerados

    Returns:
        list: Valores de z
    """
    if dominio.inferior == dominio.superior:
        return [dominio.inferior]
    inferior, superior = dominio.recortado()
    valores = [z for z in plan.z_grid if inferior <= z <= superior]
    valores += [float(z) for z in rng.uniform(inferior, superior, size=plan.z_aleatorios)]
    if incluir_extremos:
        if dominio.inferior_cerrado:
            valores.append(dominio.inferior)
        if dominio.superior_cerrado:
            valores.append(dominio.superior)
    return valores
