"""
Módulo del catálogo de identidades de reducción.
Cada IdentityRecord lleva sus parámetros, restricciones, dominio del
argumento y los constructores de sus lados como Expression, más los
caminos adicionales (forma cerrada, forma alternativa, oráculo de
cuadratura y formas intermedias) cuando existen.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Optional

import pandas as pd

from errores import ErrorDominio
from restricciones import ConstraintSet, validar_parametros
from transformaciones_expresiones import (
    CoeficienteParametros,
    ExponencialArgumento,
    Expression,
    MapaArgumento,
    PotenciaUnoMasRaizComplemento,
    PotenciaUnoMenosArgumento,
    eval_expression,
    termino,
)
import reducciones_formas_cerradas as formas
import reducciones_intermedias as intermedias

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DominioArgumento:
    """Intervalo real del argumento, con extremos abiertos o cerrados."""

    inferior: float
    superior: float
    inferior_cerrado: bool = False
    superior_cerrado: bool = False

    def contiene(self, z):
        if z < self.inferior or z > self.superior:
            return False
        if z == self.inferior and not self.inferior_cerrado:
            return False
        if z == self.superior and not self.superior_cerrado:
            return False
        return True

    def recortado(self, fraccion=0.1):
        """
        Intervalo cerrado que mueve hacia dentro cada extremo abierto una
        fracción de la semiamplitud.
        """
        margen = fraccion * (self.superior - self.inferior) / 2.0
        inferior = self.inferior if self.inferior_cerrado else self.inferior + margen
        superior = self.superior if self.superior_cerrado else self.superior - margen
        return inferior, superior

    def describir(self):
        izquierda = "[" if self.inferior_cerrado else "("
        derecha = "]" if self.superior_cerrado else ")"
        return f"{izquierda}{self.inferior:g}, {self.superior:g}{derecha}"


DISCO = DominioArgumento(-1.0, 1.0)
INTERIOR = DominioArgumento(0.0, 1.0)
UNIDAD = DominioArgumento(1.0, 1.0, True, True)


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    formula: str
    slots: tuple
    constraints: ConstraintSet
    argument_domain: DominioArgumento
    lhs_builder: Callable
    rhs_builder: Callable
    closed_form: Optional[Callable] = None
    alternativa: Optional[Callable] = None
    intermedias: tuple = ()
    # (representación integral, parámetros (a, b) en función de la asignación)
    oraculo: Optional[tuple] = None
    terminante: bool = False
    cociente: Optional[Callable] = field(default=None, repr=False)


def _constante(valor, z):
    # 1F0(0;;z) = 1 para todo z
    return Expression((termino(z, (0.0,), (), (CoeficienteParametros(valor),)),), z)


# Formas completadas de las representaciones integrales

def _r32(a, b, z):
    """4^b·[1+√(1-z)]^(-2b)·2F1(2b-a,1;a+1;1+(2/z)(√(1-z)-1))."""
    factores = (CoeficienteParametros(4.0**b), PotenciaUnoMasRaizComplemento(-2.0 * b))
    return Expression((termino(z, (2 * b - a, 1.0), (a + 1,), factores, MapaArgumento.CUADRATICO),), z)


def _r33(a, b, z):
    """2^a·[1+√(1-z)]^(-a)·2F1(2b-a,a;a+1;(1-√(1-z))/2)."""
    factores = (CoeficienteParametros(2.0**a), PotenciaUnoMasRaizComplemento(-a))
    return Expression((termino(z, (2 * b - a, a), (a + 1,), factores, MapaArgumento.SEMICOMPLEMENTO),), z)


def _r34(a, b, z):
    """½[2F1(2b,2a;2a+1;-√z) + 2F1(2b,2a;2a+1;√z)]."""
    medio = (CoeficienteParametros(0.5),)
    return Expression(
        (
            termino(z, (2 * b, 2 * a), (2 * a + 1,), medio, MapaArgumento.RAIZ_NEGATIVA),
            termino(z, (2 * b, 2 * a), (2 * a + 1,), medio, MapaArgumento.RAIZ),
        ),
        z,
    )


def _clausen_30(a, b, z):
    return Expression((termino(z, (a, b, b + 0.5), (a + 1, 2 * b)),), z)


def _clausen_31(a, b, z):
    return Expression((termino(z, (a, b, b + 0.5), (a + 1, 0.5)),), z)


def _funcion(numerador, denominador):
    """Constructor de un lado formado por una sola función."""

    def construir(v, z):
        return Expression((termino(z, numerador(v), denominador(v)),), z)

    return construir


def _construir_catalogo():
    registros = []

    registros.append(
        IdentityRecord(
            id="E3",
            formula="e^y·2F2(a,1+a/2;a/2,b;-y) = 2F2(2+a-b,b-a-1;b,1+a-b;y)",
            slots=("a", "b"),
            constraints=ConstraintSet.crear(exclusiones=("a/2", "b", "1+a-b")),
            argument_domain=DISCO,
            lhs_builder=lambda v, y: Expression(
                (
                    termino(
                        y,
                        (v["a"], 1 + v["a"] / 2),
                        (v["a"] / 2, v["b"]),
                        (ExponencialArgumento(1),),
                        MapaArgumento.NEGATIVO,
                    ),
                ),
                y,
            ),
            rhs_builder=_funcion(
                lambda v: (2 + v["a"] - v["b"], v["b"] - v["a"] - 1), lambda v: (v["b"], 1 + v["a"] - v["b"])
            ),
            intermedias=(
                ("intermedia_separada", intermedias.e3_separada),
                ("intermedia_kummer", intermedias.e3_kummer),
                ("intermedia_comun", intermedias.e3_comun),
            ),
        )
    )

    registros.append(
        IdentityRecord(
            id="E4",
            formula="(1-y)^-h·3F2(h,a,1+a/2;a/2,b;y/(y-1)) = 3F2(h,2+a-b,b-a-1;b,1+a-b;y)",
            slots=("h", "a", "b"),
            constraints=ConstraintSet.crear(exclusiones=("a/2", "b", "1+a-b")),
            # y/(y-1) queda en el disco sólo para y < 1/2
            argument_domain=DominioArgumento(-1.0, 0.5),
            lhs_builder=lambda v, y: Expression(
                (
                    termino(
                        y,
                        (v["h"], v["a"], 1 + v["a"] / 2),
                        (v["a"] / 2, v["b"]),
                        (PotenciaUnoMenosArgumento(-v["h"]),),
                        MapaArgumento.PFAFF,
                    ),
                ),
                y,
            ),
            rhs_builder=_funcion(
                lambda v: (v["h"], 2 + v["a"] - v["b"], v["b"] - v["a"] - 1),
                lambda v: (v["b"], 1 + v["a"] - v["b"]),
            ),
            intermedias=(
                ("intermedia_separada", intermedias.e4_separada),
                ("intermedia_pfaff", intermedias.e4_pfaff),
                ("intermedia_comun", intermedias.e4_comun),
            ),
        )
    )

    registros.append(
        IdentityRecord(
            id="E5",
            formula="2F1(a,-e/2;1+a+e/2;x) = (1-x)^e·3F2(a+e,1+a/2+e/2,e/2;1+a+e/2,a/2+e/2;x)",
            slots=("a", "e"),
            constraints=ConstraintSet.crear(exclusiones=("1+a+e/2", "a/2+e/2")),
            argument_domain=DISCO,
            lhs_builder=_funcion(lambda v: (v["a"], -v["e"] / 2), lambda v: (1 + v["a"] + v["e"] / 2,)),
            rhs_builder=lambda v, x: Expression(
                (
                    termino(
                        x,
                        (v["a"] + v["e"], 1 + v["a"] / 2 + v["e"] / 2, v["e"] / 2),
                        (1 + v["a"] + v["e"] / 2, v["a"] / 2 + v["e"] / 2),
                        (PotenciaUnoMenosArgumento(v["e"]),),
                    ),
                ),
                x,
            ),
            intermedias=(
                ("intermedia_separada", intermedias.e5_separada),
                ("intermedia_euler", intermedias.e5_euler),
            ),
        )
    )

    def _e6_combinada(v, y):
        a, d = v["a"], v["d"]
        divisor = 1 - d - 2 * a
        return Expression(
            (
                termino(
                    y,
                    (a + d - 1, -a, d + 2 * a - 1),
                    (d, d + a),
                    (CoeficienteParametros((2 - 2 * d - 3 * a) / divisor),),
                ),
                termino(y, (-a, d + 2 * a - 1), (d,), (CoeficienteParametros((a + d - 1) / divisor),)),
            ),
            y,
        )

    registros.append(
        IdentityRecord(
            id="E6",
            formula=(
                "4F3(a+d-1,-a,2-d-2a,d+2a-1;d,d+a,1-d-2a;y) = "
                "[(2-2d-3a)·3F2(a+d-1,-a,d+2a-1;d,d+a;y) + (a+d-1)·2F1(-a,d+2a-1;d;y)]/(1-d-2a)"
            ),
            slots=("a", "d"),
            constraints=ConstraintSet.crear(exclusiones=("d", "d+a", "1-d-2a")),
            argument_domain=DISCO,
            lhs_builder=_funcion(
                lambda v: (v["a"] + v["d"] - 1, -v["a"], 2 - v["d"] - 2 * v["a"], v["d"] + 2 * v["a"] - 1),
                lambda v: (v["d"], v["d"] + v["a"], 1 - v["d"] - 2 * v["a"]),
            ),
            rhs_builder=_e6_combinada,
            intermedias=(("intermedia_separada", intermedias.e6_separada),),
        )
    )

    def _terminante(id_, formula, exclusiones, numerador, denominador, cociente):
        def lado_derecho(v, z):
            return _constante(cociente(v, int(round(v["n"]))), z)

        return IdentityRecord(
            id=id_,
            formula=formula,
            slots=("a", "b", "n"),
            constraints=ConstraintSet.crear(exclusiones=exclusiones, enteros={"n": None}),
            argument_domain=UNIDAD,
            lhs_builder=_funcion(numerador, denominador),
            rhs_builder=lado_derecho,
            terminante=True,
            cociente=cociente,
        )

    registros.append(
        _terminante(
            "T7",
            "3F2(a,a/2+1,-n;a/2,b;1) = (2+a-b)_n(b-a-1)_n/[(b)_n(a-b+1)_n]",
            ("a/2", "b", "a-b+1"),
            lambda v: (v["a"], v["a"] / 2 + 1, -v["n"]),
            lambda v: (v["a"] / 2, v["b"]),
            formas.cociente_t7,
        )
    )
    registros.append(
        _terminante(
            "T8",
            "3F2(a,b,-n;a-b+1,2b-n+1;1) = (a-2b)_n(a/2-b+1)_n(-b)_n/[(a-b+1)_n(a/2-b)_n(-2b)_n]",
            ("a-b+1", "2b-n+1", "a/2-b", "-2b"),
            lambda v: (v["a"], v["b"], -v["n"]),
            lambda v: (v["a"] - v["b"] + 1, 2 * v["b"] - v["n"] + 1),
            formas.cociente_t8,
        )
    )
    registros.append(
        _terminante(
            "T9",
            "4F3(a,a/2+1,b,-n;a/2,a-b+1,2b-n+1;1) = (a-2b)_n(-b)_n/[(a-b+1)_n(-2b)_n]",
            ("a/2", "a-b+1", "2b-n+1", "-2b"),
            lambda v: (v["a"], v["a"] / 2 + 1, v["b"], -v["n"]),
            lambda v: (v["a"] / 2, v["a"] - v["b"] + 1, 2 * v["b"] - v["n"] + 1),
            formas.cociente_t9,
        )
    )

    restricciones_30 = ConstraintSet.crear(exclusiones=("a+1", "2b"), no_nulas=("b", "a+1"))
    registros.append(
        IdentityRecord(
            id="R32",
            formula="3F2(a,b,b+1/2;a+1,2b;z) = 4^b·[1+√(1-z)]^(-2b)·2F1(2b-a,1;a+1;1+(2/z)(√(1-z)-1))",
            slots=("a", "b"),
            constraints=restricciones_30,
            argument_domain=DISCO,
            lhs_builder=lambda v, z: _clausen_30(v["a"], v["b"], z),
            rhs_builder=lambda v, z: _r32(v["a"], v["b"], z),
            alternativa=lambda v, z: _r33(v["a"], v["b"], z),
            oraculo=("I30", lambda v: {"a": v["a"], "b": v["b"]}),
        )
    )
    registros.append(
        IdentityRecord(
            id="R33",
            formula="3F2(a,b,b+1/2;a+1,2b;z) = 2^a·[1+√(1-z)]^(-a)·2F1(2b-a,a;a+1;(1-√(1-z))/2)",
            slots=("a", "b"),
            constraints=restricciones_30,
            argument_domain=DISCO,
            lhs_builder=lambda v, z: _clausen_30(v["a"], v["b"], z),
            rhs_builder=lambda v, z: _r33(v["a"], v["b"], z),
            alternativa=lambda v, z: _r32(v["a"], v["b"], z),
            oraculo=("I30", lambda v: {"a": v["a"], "b": v["b"]}),
        )
    )
    registros.append(
        IdentityRecord(
            id="R34",
            formula="3F2(a,b,b+1/2;a+1,1/2;z) = ½[2F1(2b,2a;2a+1;-√z) + 2F1(2b,2a;2a+1;√z)]",
            slots=("a", "b"),
            constraints=ConstraintSet.crear(exclusiones=("a+1", "2a+1"), no_nulas=("b",)),
            argument_domain=INTERIOR,
            lhs_builder=lambda v, z: _clausen_31(v["a"], v["b"], z),
            rhs_builder=lambda v, z: _r34(v["a"], v["b"], z),
            oraculo=("I31", lambda v: {"a": v["a"], "b": v["b"]}),
        )
    )

    registros.append(
        IdentityRecord(
            id="S35",
            formula="3F2(1,1-n/2,3/2-n/2;2,2-n;z) = (4/(nz))·[1-2^-n·(1+√(1-z))^n]",
            slots=("n",),
            constraints=ConstraintSet.crear(exclusiones=("2-n",), no_nulas=("n",)),
            argument_domain=DISCO,
            lhs_builder=_funcion(lambda v: (1.0, 1 - v["n"] / 2, 1.5 - v["n"] / 2), lambda v: (2.0, 2 - v["n"])),
            rhs_builder=lambda v, z: _r33(1.0, 1 - v["n"] / 2, z),
            closed_form=formas.forma_s35,
            alternativa=lambda v, z: _r32(1.0, 1 - v["n"] / 2, z),
            oraculo=("I30", lambda v: {"a": 1.0, "b": 1 - v["n"] / 2}),
        )
    )
    registros.append(
        IdentityRecord(
            id="S36",
            formula="3F2(1,1,3/2;2,2;z) = -(4/z)·ln[(1+√(1-z))/2]",
            slots=(),
            constraints=ConstraintSet.crear(),
            # la serie converge en z = 1: Σb - Σa = 1/2 > 0
            argument_domain=DominioArgumento(-1.0, 1.0, False, True),
            lhs_builder=_funcion(lambda v: (1.0, 1.0, 1.5), lambda v: (2.0, 2.0)),
            rhs_builder=lambda v, z: _r33(1.0, 1.0, z),
            closed_form=formas.forma_s36,
            alternativa=lambda v, z: _r32(1.0, 1.0, z),
            oraculo=("I30", lambda v: {"a": 1.0, "b": 1.0}),
        )
    )
    registros.append(
        IdentityRecord(
            id="S37",
            formula="3F2(2b,b,b+1/2;2b+1,2b;z) = 2F1(b,b+1/2;2b+1;z) = 4^b/[1+√(1-z)]^(2b)",
            slots=("b",),
            constraints=ConstraintSet.crear(exclusiones=("2b+1", "2b"), no_nulas=("b",)),
            argument_domain=DISCO,
            lhs_builder=_funcion(lambda v: (2 * v["b"], v["b"], v["b"] + 0.5), lambda v: (2 * v["b"] + 1, 2 * v["b"])),
            rhs_builder=lambda v, z: _r32(2 * v["b"], v["b"], z),
            closed_form=formas.forma_s37,
            alternativa=lambda v, z: _r33(2 * v["b"], v["b"], z),
            oraculo=("I30", lambda v: {"a": 2 * v["b"], "b": v["b"]}),
        )
    )
    registros.append(
        IdentityRecord(
            id="S38",
            formula="3F2(1/2,b,b+1/2;3/2,1/2;z) = [(1+√z)^(1-2b) - (1-√z)^(1-2b)]/(2√z(1-2b))",
            slots=("b",),
            constraints=ConstraintSet.crear(no_nulas=("b",)),
            argument_domain=INTERIOR,
            lhs_builder=_funcion(lambda v: (0.5, v["b"], v["b"] + 0.5), lambda v: (1.5, 0.5)),
            rhs_builder=lambda v, z: _r34(0.5, v["b"], z),
            closed_form=formas.forma_s38,
            oraculo=("I31", lambda v: {"a": 0.5, "b": v["b"]}),
        )
    )
    registros.append(
        IdentityRecord(
            id="S39",
            formula="2F1(1/2,1;3/2;z) = (1/(2√z))·ln[(1+√z)/(1-√z)]",
            slots=(),
            constraints=ConstraintSet.crear(),
            argument_domain=INTERIOR,
            lhs_builder=_funcion(lambda v: (0.5, 1.0), lambda v: (1.5,)),
            rhs_builder=lambda v, z: _r34(0.5, 0.5, z),
            closed_form=formas.forma_s39,
            oraculo=("I31", lambda v: {"a": 0.5, "b": 0.5}),
        )
    )
    registros.append(
        IdentityRecord(
            id="S40",
            formula="3F2(a,a+1/2,a+1;a+1,1/2;z) = ½[(1+√z)^(-2a) + (1-√z)^(-2a)]",
            slots=("a",),
            constraints=ConstraintSet.crear(exclusiones=("a+1", "2a+1")),
            argument_domain=INTERIOR,
            lhs_builder=_funcion(lambda v: (v["a"], v["a"] + 0.5, v["a"] + 1), lambda v: (v["a"] + 1, 0.5)),
            rhs_builder=lambda v, z: _r34(v["a"], v["a"] + 0.5, z),
            closed_form=formas.forma_s40,
            oraculo=("I31", lambda v: {"a": v["a"], "b": v["a"] + 0.5}),
        )
    )
    registros.append(
        IdentityRecord(
            id="S41",
            formula="3F2(a,a-1/2,a;a+1,1/2;z) = ½Σ(1-w)^(2(1-a))·2F1(2,1;2a+1;w), w = ±√z",
            slots=("a",),
            constraints=ConstraintSet.crear(exclusiones=("a+1", "2a+1")),
            argument_domain=INTERIOR,
            lhs_builder=_funcion(lambda v: (v["a"], v["a"] - 0.5, v["a"]), lambda v: (v["a"] + 1, 0.5)),
            rhs_builder=lambda v, z: _r34(v["a"], v["a"] - 0.5, z),
            closed_form=formas.forma_s41,
            oraculo=("I31", lambda v: {"a": v["a"], "b": v["a"] - 0.5}),
        )
    )
    return tuple(registros)


@lru_cache(maxsize=1)
def catalog():
    """
    Todas las identidades catalogadas, en orden estable.

    Returns:
        tuple: 17 IdentityRecord
    """
    return _construir_catalogo()


def lookup(identidad):
    """
    Busca un registro por su clave.

    Raises:
        ErrorDominio: Si la clave no existe
    """
    for registro in catalog():
        if registro.id == identidad:
            return registro
    raise ErrorDominio(f"identidad desconocida: '{identidad}'")


def preparar_asignacion(registro, bindings, z):
    """
    Valida parámetros, restricciones y argumento de un registro.

    Returns:
        dict: Asignación normalizada a flotantes
    """
    valores = validar_parametros(bindings, registro.slots, registro.id)
    registro.constraints.verificar(valores, registro.id)
    if not registro.argument_domain.contiene(z):
        raise ErrorDominio(
            f"{registro.id}: z = {z!r} fuera del dominio {registro.argument_domain.describir()}"
        )
    return valores


def instantiate_sides(identidad, bindings, z):
    """
    Construye los dos lados de una identidad.

    Args:
        identidad (str): Clave del catálogo
        bindings (dict): Valores de los parámetros
        z (float): Argumento dentro del dominio del registro

    Returns:
        tuple: (lhs, rhs) como Expression

    Raises:
        ErrorRestriccion: Si se viola una restricción
        ErrorDominio: Si z está fuera del dominio
    """
    registro = lookup(identidad)
    valores = preparar_asignacion(registro, bindings, z)
    return registro.lhs_builder(valores, float(z)), registro.rhs_builder(valores, float(z))


def tabla_catalogo():
    """
    Catálogo como DataFrame (id, fórmula, parámetros, restricciones, dominio).
    """
    filas = [
        {
            "id": registro.id,
            "formula": registro.formula,
            "parametros": ", ".join(registro.slots) or "-",
            "restricciones": "; ".join(registro.constraints.describir()) or "-",
            "dominio": registro.argument_domain.describir(),
            "caminos": ", ".join(caminos_disponibles(registro)),
        }
        for registro in catalog()
    ]
    return pd.DataFrame(filas, columns=["id", "formula", "parametros", "restricciones", "dominio", "caminos"])


def caminos_disponibles(registro):
    """Nombres de los caminos de evaluación que ofrece un registro."""
    caminos = ["lhs", "rhs"]
    if registro.closed_form is not None:
        caminos.append("forma_cerrada")
    if registro.alternativa is not None:
        caminos.append("alternativa")
    if registro.oraculo is not None:
        caminos.append("cuadratura")
    caminos.extend(nombre for nombre, _ in registro.intermedias)
    return caminos


def terminating_closed_form(identidad, bindings, n):
    """
    Cociente de Pochhammer de una suma terminante en argumento unidad.

    Args:
        identidad (str): 'T7', 'T8' o 'T9'
        bindings (dict): Valores de a y b (n puede venir incluido)
        n (int): Grado de la suma

    Returns:
        float: Valor del cociente; 1 para n = 0

    Raises:
        ErrorDominio: Si la identidad no es terminante
        ErrorRestriccion: Si se viola una restricción
    """
    registro = lookup(identidad)
    if not registro.terminante:
        raise ErrorDominio(f"{identidad} no es una suma terminante")
    asignacion = dict(bindings)
    asignacion["n"] = n
    valores = preparar_asignacion(registro, asignacion, 1.0)
    return registro.cociente(valores, int(round(valores["n"])))


def closed_form(identidad, bindings, z):
    """
    Forma cerrada de una identidad en z.

    Para S35-S41 evalúa la fórmula elemental; para R32-R34 devuelve el valor
    de la forma completada en 2F1, que es su forma cerrada parcial.

    Raises:
        ErrorDominio: Si la identidad no tiene forma cerrada o z está fuera del dominio
        ErrorPrecision: Si la serie pierde la precisión en doble
        ErrorRestriccion: Si se viola una restricción
    """
    registro = lookup(identidad)
    valores = preparar_asignacion(registro, bindings, z)
    if registro.closed_form is not None:
        return registro.closed_form(valores, float(z))
    if registro.oraculo is not None:
        return formas.valor_fiable(eval_expression(registro.rhs_builder(valores, float(z))), identidad)
    raise ErrorDominio(f"{identidad} no tiene forma cerrada")
