"""
Módulo de transformaciones clásicas: Kummer para 1F1 y Euler/Pfaff para 2F1.
Cada transformación devuelve una Expression equivalente a la función de
entrada en el dominio indicado.
"""

import logging

from errores import ErrorAridad, ErrorDominio
from transformaciones_expresiones import (
    ExponencialArgumento,
    Expression,
    MapaArgumento,
    PotenciaUnoMenosArgumento,
    termino,
)

logger = logging.getLogger(__name__)


def _exigir_orden(spec, p, q, nombre):
    if (spec.p, spec.q) != (p, q):
        raise ErrorAridad(f"{nombre} requiere una {p}F{q}, se recibió {spec.etiqueta()}")


def kummer_first(spec):
    """
    Primera transformación de Kummer: 1F1(α;ρ;z) = e^z·1F1(ρ-α;ρ;-z).

    Args:
        spec (HypergeometricSpec): Función 1F1

    Returns:
        Expression: Un término con prefactor e^z y argumento -z
    """
    _exigir_orden(spec, 1, 1, "kummer_first")
    (alfa,), (rho,) = spec.numerator, spec.denominator
    z = spec.argument
    return Expression(
        (termino(z, (rho - alfa,), (rho,), (ExponencialArgumento(1),), MapaArgumento.NEGATIVO),),
        z,
    )


_MAPA_OPUESTO = {
    MapaArgumento.IDENTIDAD: MapaArgumento.NEGATIVO,
    MapaArgumento.NEGATIVO: MapaArgumento.IDENTIDAD,
}


def kummer_sobre_termino(term, z):
    """
    Aplica Kummer a un término cuya función es 1F1 con mapa z o -z.

    El término resultante conserva el prefactor previo, añade la exponencial
    del argumento mapeado y usa el mapa opuesto.

    Raises:
        ErrorAridad: Si la función del término no es 1F1
        ErrorDominio: Si el mapa no es z ni -z
    """
    _exigir_orden(term.function, 1, 1, "kummer_sobre_termino")
    if term.argument_map not in _MAPA_OPUESTO:
        raise ErrorDominio(f"Kummer sobre términos sólo admite mapas z y -z, no {term.argument_map.value}")
    (alfa,), (rho,) = term.function.numerator, term.function.denominator
    signo = 1 if term.argument_map is MapaArgumento.IDENTIDAD else -1
    return termino(
        z,
        (rho - alfa,),
        (rho,),
        term.prefactor.factores + (ExponencialArgumento(signo),),
        _MAPA_OPUESTO[term.argument_map],
    )


def kummer_doble(spec):
    """Kummer aplicado dos veces; vuelve a la función original."""
    primera = kummer_first(spec)
    return Expression(tuple(kummer_sobre_termino(t, primera.argumento) for t in primera.terms), primera.argumento)


def euler_transform(spec):
    """
    Transformación de Euler: 2F1(α,β;γ;z) = (1-z)^(γ-α-β)·2F1(γ-α,γ-β;γ;z).

    Raises:
        ErrorAridad: Si spec no es 2F1
        ErrorDominio: Si |z| >= 1
    """
    _exigir_orden(spec, 2, 1, "euler_transform")
    (alfa, beta), (gamma,) = spec.numerator, spec.denominator
    z = spec.argument
    if abs(z) >= 1.0:
        raise ErrorDominio(f"la transformación de Euler requiere |z| < 1, se recibió z = {z!r}")
    factores = (PotenciaUnoMenosArgumento(gamma - alfa - beta),)
    return Expression((termino(z, (gamma - alfa, gamma - beta), (gamma,), factores),), z)


def pfaff_transform(spec):
    """
    Transformación de Pfaff: 2F1(α,β;γ;z) = (1-z)^(-α)·2F1(α,γ-β;γ;z/(z-1)).

    Raises:
        ErrorAridad: Si spec no es 2F1
        ErrorDominio: Si z >= 1
    """
    _exigir_orden(spec, 2, 1, "pfaff_transform")
    (alfa, beta), (gamma,) = spec.numerator, spec.denominator
    z = spec.argument
    if z >= 1.0:
        raise ErrorDominio(f"la transformación de Pfaff requiere z < 1, se recibió z = {z!r}")
    factores = (PotenciaUnoMenosArgumento(-alfa),)
    return Expression((termino(z, (alfa, gamma - beta), (gamma,), factores, MapaArgumento.PFAFF),), z)
