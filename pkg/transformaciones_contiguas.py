"""
Módulo de relaciones contiguas usadas en las demostraciones de reducción.
Las relaciones se exponen como cadenas de lados equivalentes y como residuo
(diferencia entre lados), no como reescrituras.
"""

import logging
from dataclasses import dataclass
from typing import Callable

from errores import ErrorDominio
from restricciones import ConstraintSet, validar_parametros
from transformaciones_expresiones import (
    CoeficienteParametros,
    Expression,
    PotenciaArgumento,
    PotenciaUnoMenosArgumento,
    eval_expression,
    termino,
)

logger = logging.getLogger(__name__)


def _gauss_bailey_directa(v, x):
    # a(1-x)·2F1(a+1,1-e/2;c+1;x) = c·2F1(a,-e/2;c;x) - (e/2)·2F1(a,1-e/2;c+1;x)
    #   = c·2F1(a,-e/2;c;x) - (e/2)·2F1(a,-e/2;c+1;x) - ae/(2(c+1))·x·2F1(a+1,1-e/2;c+2;x)
    a, e = v["a"], v["e"]
    c = a + e / 2
    izquierdo = Expression(
        (termino(x, (a + 1, 1 - e / 2), (c + 1,), (CoeficienteParametros(a), PotenciaUnoMenosArgumento(1))),),
        x,
    )
    medio = Expression(
        (
            termino(x, (a, -e / 2), (c,), (CoeficienteParametros(c),)),
            termino(x, (a, 1 - e / 2), (c + 1,), (CoeficienteParametros(-e / 2),)),
        ),
        x,
    )
    derecho = Expression(
        (
            termino(x, (a, -e / 2), (c,), (CoeficienteParametros(c),)),
            termino(x, (a, -e / 2), (c + 1,), (CoeficienteParametros(-e / 2),)),
            termino(
                x,
                (a + 1, 1 - e / 2),
                (c + 2,),
                (CoeficienteParametros(-a * e / (2 * (c + 1))), PotenciaArgumento(1)),
            ),
        ),
        x,
    )
    return [izquierdo, medio, derecho]


def _gauss_bailey_segunda(v, x):
    # -(e/2)·a·x·2F1(a+1,1-e/2;c+2;x) = c(c+1)[2F1(a,-e/2;c;x) - 2F1(a,-e/2;c+1;x)]
    a, e = v["a"], v["e"]
    c = a + e / 2
    izquierdo = Expression(
        (termino(x, (a + 1, 1 - e / 2), (c + 2,), (CoeficienteParametros(-e * a / 2), PotenciaArgumento(1))),),
        x,
    )
    derecho = Expression(
        (
            termino(x, (a, -e / 2), (c,), (CoeficienteParametros(c * (c + 1)),)),
            termino(x, (a, -e / 2), (c + 1,), (CoeficienteParametros(-c * (c + 1)),)),
        ),
        x,
    )
    return [izquierdo, derecho]


def _clausen_contigua(v, y):
    a, d = v["a"], v["d"]
    izquierdo = Expression(
        (
            termino(
                y,
                (a + d, 1 - a, d + 2 * a),
                (d + 1, d + a + 1),
                (CoeficienteParametros(-a * (d + 2 * a - 1)), PotenciaArgumento(1)),
            ),
        ),
        y,
    )
    peso = d * (d + a)
    comun = termino(y, (a + d - 1, -a, d + 2 * a - 1), (d, d + a), (CoeficienteParametros(-peso),))
    medio = Expression(
        (termino(y, (a + d, -a, d + 2 * a - 1), (d, d + a), (CoeficienteParametros(peso),)), comun),
        y,
    )
    derecho = Expression(
        (termino(y, (-a, d + 2 * a - 1), (d,), (CoeficienteParametros(peso),)), comun),
        y,
    )
    return [izquierdo, medio, derecho]


def _luke(v, z):
    # 3F2(a,b,c;d+1,c+1;z) = c/(c-d)·2F1(a,b;d+1;z) - d/(c-d)·3F2(a,b,c;d,c+1;z)
    a, b, c, d = v["a"], v["b"], v["c"], v["d"]
    izquierdo = Expression((termino(z, (a, b, c), (d + 1, c + 1)),), z)
    derecho = Expression(
        (
            termino(z, (a, b), (d + 1,), (CoeficienteParametros(c / (c - d)),)),
            termino(z, (a, b, c), (d, c + 1), (CoeficienteParametros(-d / (c - d)),)),
        ),
        z,
    )
    return [izquierdo, derecho]


@dataclass(frozen=True)
class RelacionContigua:
    id: str
    slots: tuple
    constraints: ConstraintSet
    constructor: Callable
    descripcion: str


RELACIONES = {
    "G20": RelacionContigua(
        "G20",
        ("a", "e"),
        ConstraintSet.crear(exclusiones=("a+e/2",)),
        _gauss_bailey_directa,
        "a(1-x)·2F1(a+1,1-e/2;a+e/2+1;x) en tres formas equivalentes",
    ),
    "G21": RelacionContigua(
        "G21",
        ("a", "e"),
        ConstraintSet.crear(exclusiones=("a+e/2",)),
        _gauss_bailey_segunda,
        "-(e/2)·a·x·2F1(a+1,1-e/2;a+e/2+2;x) como diferencia de dos 2F1",
    ),
    "C24": RelacionContigua(
        "C24",
        ("a", "d"),
        ConstraintSet.crear(exclusiones=("d", "d+a")),
        _clausen_contigua,
        "-a(d+2a-1)y·3F2(a+d,1-a,d+2a;d+1,d+a+1;y) como diferencia de 3F2 y 2F1",
    ),
    "L25": RelacionContigua(
        "L25",
        ("a", "b", "c", "d"),
        ConstraintSet.crear(exclusiones=("d", "c+1"), no_nulas=("c-d",)),
        _luke,
        "3F2(a,b,c;d+1,c+1;z) como combinación de 2F1 y 3F2",
    ),
}


def obtener_relacion(relation_id):
    try:
        return RELACIONES[relation_id]
    except KeyError:
        raise ErrorDominio(f"relación contigua desconocida: '{relation_id}'") from None


def lados_contiguos(relation_id, bindings, z):
    """
    Lados equivalentes de una relación contigua, en el orden en que se encadenan.

    Raises:
        ErrorRestriccion: Si la asignación viola las exclusiones de la relación
        ErrorDominio: Si |z| >= 1
    """
    relacion = obtener_relacion(relation_id)
    valores = validar_parametros(bindings, relacion.slots, relation_id)
    relacion.constraints.verificar(valores, relation_id)
    if abs(z) >= 1.0:
        raise ErrorDominio(f"{relation_id} requiere |z| < 1, se recibió z = {z!r}")
    return relacion.constructor(valores, float(z))


def contiguous_residual(relation_id, bindings, z, **opciones_evaluacion):
    """
    Residuo de una relación contigua: la diferencia con signo de mayor
    magnitud entre lados consecutivos de la cadena.

    Args:
        relation_id (str): 'G20', 'G21', 'C24' o 'L25'
        bindings (dict): Valores de los parámetros de la relación
        z (float): Argumento, |z| < 1

    Returns:
        float: Residuo; cercano a cero relativo a la escala de los lados
    """
    valores = [eval_expression(lado, **opciones_evaluacion).value for lado in lados_contiguos(relation_id, bindings, z)]
    diferencias = [izquierda - derecha for izquierda, derecha in zip(valores, valores[1:])]
    return max(diferencias, key=abs)
