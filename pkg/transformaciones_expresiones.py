"""
Módulo de expresiones: sumas ponderadas de funciones hipergeométricas.
Una Expression es la moneda común de transformaciones e identidades:
cada Term combina un prefactor cerrado, una función pFq y el mapa que
lleva el argumento de la expresión al argumento de la función.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum

from constantes import MAX_TERMINOS, PERDIDA_MAXIMA, TOL_SERIE
from errores import ErrorDominio
from series import EstadoEvaluacion, EvalResult, HypergeometricSpec, eval_pfq, peor_estado, perdida_redondeo

logger = logging.getLogger(__name__)


def _raiz_complemento(z):
    if z > 1.0:
        raise ErrorDominio(f"√(1-z) no es real para z = {z!r}")
    return math.sqrt(1.0 - z)


def _raiz(z):
    if z < 0.0:
        raise ErrorDominio(f"√z no es real para z = {z!r}")
    return math.sqrt(z)


def _potencia(base, exponente, descripcion):
    if exponente == 0:
        return 1.0
    if float(exponente).is_integer():
        return base ** int(exponente)
    if base <= 0.0:
        raise ErrorDominio(f"{descripcion} = {base!r} no admite la potencia real {exponente!r}")
    return math.exp(exponente * math.log(base))


class MapaArgumento(str, Enum):
    """Mapas del argumento de la expresión al argumento de la función."""

    IDENTIDAD = "z"
    PFAFF = "z/(z-1)"
    NEGATIVO = "-z"
    RAIZ = "√z"
    RAIZ_NEGATIVA = "-√z"
    SEMICOMPLEMENTO = "(1-√(1-z))/2"
    CUADRATICO = "1+(2/z)(√(1-z)-1)"

    def aplicar(self, z):
        """
        Aplica el mapa a z.

        Raises:
            ErrorDominio: Si el mapa no es real en z
        """
        if self is MapaArgumento.IDENTIDAD:
            return z
        if self is MapaArgumento.NEGATIVO:
            return -z
        if self is MapaArgumento.PFAFF:
            if z == 1.0:
                raise ErrorDominio("z/(z-1) no está definido en z = 1")
            return z / (z - 1.0)
        if self is MapaArgumento.RAIZ:
            return _raiz(z)
        if self is MapaArgumento.RAIZ_NEGATIVA:
            return -_raiz(z)
        s = _raiz_complemento(z)
        # formas sin cancelación para z pequeño
        if self is MapaArgumento.SEMICOMPLEMENTO:
            return z / (2.0 * (1.0 + s))
        return -z / (1.0 + s) ** 2


# Factores de prefactor. Todos son inmutables y se evalúan en el argumento z
# de la expresión.

@dataclass(frozen=True)
class PotenciaArgumento:
    exponente: float

    def evaluar(self, z):
        return _potencia(z, self.exponente, "z")

    def describir(self):
        return f"z^{self.exponente:g}"


@dataclass(frozen=True)
class PotenciaUnoMenosArgumento:
    exponente: float

    def evaluar(self, z):
        return _potencia(1.0 - z, self.exponente, "1-z")

    def describir(self):
        return f"(1-z)^{self.exponente:g}"


@dataclass(frozen=True)
class ExponencialArgumento:
    signo: int = 1

    def evaluar(self, z):
        return math.exp(self.signo * z)

    def describir(self):
        return "e^z" if self.signo > 0 else "e^-z"


@dataclass(frozen=True)
class CoeficienteParametros:
    """Coeficiente numérico ya armado con los valores de los parámetros."""

    valor: float

    def evaluar(self, z):
        return self.valor

    def describir(self):
        return f"{self.valor:.17g}"


@dataclass(frozen=True)
class PotenciaUnoMasRaizComplemento:
    """[1 + √(1-z)]^exponente."""

    exponente: float

    def evaluar(self, z):
        return _potencia(1.0 + _raiz_complemento(z), self.exponente, "1+√(1-z)")

    def describir(self):
        return f"[1+√(1-z)]^{self.exponente:g}"


class FormaLogaritmica(str, Enum):
    SEMISUMA_COMPLEMENTO = "ln((1+√(1-z))/2)"
    COCIENTE_RAICES = "ln((1+√z)/(1-√z))"


@dataclass(frozen=True)
class FactorLogaritmico:
    """Logaritmo de las formas cerradas; sólo lo usan sus evaluadores."""

    forma: FormaLogaritmica

    def evaluar(self, z):
        if self.forma is FormaLogaritmica.SEMISUMA_COMPLEMENTO:
            s = _raiz_complemento(z)
            return math.log1p(-z / (2.0 * (1.0 + s)))
        r = _raiz(z)
        if r >= 1.0:
            raise ErrorDominio(f"{self.forma.value} no es finito en z = {z!r}")
        return math.log1p(r) - math.log1p(-r)

    def describir(self):
        return self.forma.value


@dataclass(frozen=True)
class Prefactor:
    factores: tuple = ()

    def evaluar(self, z):
        return math.prod((factor.evaluar(z) for factor in self.factores), start=1.0)

    def describir(self):
        return "·".join(factor.describir() for factor in self.factores) or "1"


@dataclass(frozen=True)
class Term:
    """
    Término prefactor(z)·F(mapa(z)).

    La función se guarda con su argumento ya mapeado, de modo que el
    término puede evaluarse sin volver a aplicar el mapa.
    """

    prefactor: Prefactor
    function: HypergeometricSpec
    argument_map: MapaArgumento = MapaArgumento.IDENTIDAD

    def describir(self):
        return f"{self.prefactor.describir()} · {self.function.etiqueta()} [{self.argument_map.value}]"


@dataclass(frozen=True)
class Expression:
    terms: tuple
    argumento: float

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise ErrorDominio("una expresión necesita al menos un término")

    def describir(self):
        return " + ".join(term.describir() for term in self.terms)


def termino(z, numerador, denominador, factores=(), mapa=MapaArgumento.IDENTIDAD):
    """
    Construye un Term en el argumento z de la expresión.

    Args:
        z (float): Argumento de la expresión
        numerador (iterable): Parámetros de numerador de la función
        denominador (iterable): Parámetros de denominador
        factores (iterable): Factores del prefactor
        mapa (MapaArgumento): Mapa del argumento

    Returns:
        Term: Término con la función evaluable en mapa(z)
    """
    funcion = HypergeometricSpec(tuple(numerador), tuple(denominador), mapa.aplicar(z))
    return Term(Prefactor(tuple(factores)), funcion, mapa)


def expresion(z, *terminos):
    return Expression(terminos, z)


def funcion_simple(spec):
    """Expresión de un solo término con la función tal cual."""
    return Expression((Term(Prefactor(), spec),), spec.argument)


_ESTADOS_ACEPTADOS = (EstadoEvaluacion.CONVERGIDA, EstadoEvaluacion.TERMINADA)


def eval_expression(expr, tol=TOL_SERIE, max_terms=MAX_TERMINOS):
    """
    Evalúa Σ prefactor(z)·F(mapa(z)) sobre los términos de la expresión.

    Args:
        expr (Expression): Expresión a evaluar
        tol (float): Tolerancia relativa de cada serie
        max_terms (int): Máximo de términos por serie

    Returns:
        EvalResult: Suma de valores; el estado es el peor de los términos,
        o PRECISION_PERDIDA si los términos se cancelan más de lo que admite
        la doble precisión; la escala es Σ|prefactor|·escala de cada serie

    Raises:
        ErrorDominio: Con el índice del término que falló
    """
    valor = 0.0
    escala = 0.0
    usados = 0
    cola = 0.0
    estados = []
    for indice, term in enumerate(expr.terms):
        try:
            coeficiente = term.prefactor.evaluar(expr.argumento)
            resultado = eval_pfq(term.function, tol, max_terms)
        except ErrorDominio as e:
            raise ErrorDominio(str(e), indice_termino=indice) from e
        except (OverflowError, ZeroDivisionError) as e:
            raise ErrorDominio(f"prefactor no evaluable: {e}", indice_termino=indice) from e
        valor += coeficiente * resultado.value
        escala += abs(coeficiente) * resultado.scale
        usados += resultado.terms_used
        cola = max(cola, resultado.tail_estimate)
        estados.append(resultado.status)
    estado = peor_estado(estados)
    if estado in _ESTADOS_ACEPTADOS and perdida_redondeo(valor, escala) > max(tol, PERDIDA_MAXIMA):
        logger.debug(f"Cancelación entre términos de {expr.describir()}: {escala:.3e} a {valor:.3e}")
        estado = EstadoEvaluacion.PRECISION_PERDIDA
    return EvalResult(valor, usados, cola, estado, escala)
