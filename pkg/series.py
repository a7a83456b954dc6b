"""
Módulo de evaluación directa de series hipergeométricas generalizadas pFq.
Define la instancia de función, la clasificación de convergencia y el
evaluador de referencia por suma truncada contra el que se contrastan
todas las reducciones del catálogo.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace
from enum import Enum
from fractions import Fraction

import numpy as np

from constantes import (
    BLOQUE_INICIAL,
    BLOQUE_MAXIMO,
    EPS_INT,
    GRADO_MAXIMO_EXACTO,
    MAX_ORDEN,
    MAX_TERMINOS,
    PERDIDA_MAXIMA,
    TOL_SERIE,
    Z_PFAFF,
)
from errores import ErrorAridad, ErrorDominio

logger = logging.getLogger(__name__)

_PISO_RELATIVO = 1e-300
_EPS = float(np.finfo(float).eps)


def entero_no_positivo(valor, eps=EPS_INT):
    """
    Indica si un valor está a menos de eps de un entero no positivo.

    Args:
        valor (float): Valor a revisar
        eps (float): Tolerancia de cercanía

    Returns:
        int o None: El entero no positivo cercano o None si no lo hay
    """
    n = round(valor)
    if n <= 0 and abs(valor - n) <= eps:
        return int(n)
    return None


def pochhammer(a, n):
    """
    Símbolo de Pochhammer (a)_n = a(a+1)...(a+n-1).

    Funciona con enteros y fracciones de forma exacta (producto directo),
    lo que permite las comprobaciones con aritmética entera.

    Args:
        a: Base del producto creciente
        n (int): Número de factores (n >= 0)

    Returns:
        Producto creciente; 1 para n = 0
    """
    if n < 0:
        raise ErrorDominio(f"pochhammer requiere n >= 0, se recibió {n}")
    return math.prod((a + i for i in range(n)), start=1)


class EstadoEvaluacion(str, Enum):
    """Estado final de una suma de serie."""

    CONVERGIDA = "converged"
    TERMINADA = "terminated"
    MAXIMO_TERMINOS = "max_terms_reached"
    PRECISION_PERDIDA = "precision_lost"
    DIVERGENTE = "diverged"


_GRAVEDAD = {
    EstadoEvaluacion.CONVERGIDA: 0,
    EstadoEvaluacion.TERMINADA: 0,
    EstadoEvaluacion.MAXIMO_TERMINOS: 1,
    EstadoEvaluacion.PRECISION_PERDIDA: 2,
    EstadoEvaluacion.DIVERGENTE: 3,
}


def peor_estado(estados):
    """
    Devuelve el estado más grave de una colección de estados.

    Args:
        estados (iterable): Estados de evaluación

    Returns:
        EstadoEvaluacion: El de mayor gravedad (CONVERGIDA si está vacía)
    """
    peor = EstadoEvaluacion.CONVERGIDA
    for estado in estados:
        if _GRAVEDAD[estado] > _GRAVEDAD[peor]:
            peor = estado
    return peor


class TipoConvergencia(str, Enum):
    ENTERA = "entire"
    DISCO_UNIDAD = "unit_disk"
    TERMINANTE = "terminating"
    DIVERGENTE = "divergent"


@dataclass(frozen=True)
class HypergeometricSpec:
    """
    Instancia (p, q) de una función hipergeométrica con argumento real.

    Los parámetros se guardan como tuplas de flotantes; la instancia es
    inmutable y valida en la construcción que ningún parámetro del
    denominador sea cero o entero negativo.
    """

    numerator: tuple
    denominator: tuple
    argument: float = 0.0

    def __post_init__(self):
        numerador = tuple(float(a) for a in self.numerator)
        denominador = tuple(float(b) for b in self.denominator)
        object.__setattr__(self, "numerator", numerador)
        object.__setattr__(self, "denominator", denominador)
        object.__setattr__(self, "argument", float(self.argument))

        if len(numerador) > MAX_ORDEN or len(denominador) > MAX_ORDEN:
            raise ErrorAridad(
                f"orden ({len(numerador)}, {len(denominador)}) fuera de rango; máximo {MAX_ORDEN}"
            )
        for parametro in numerador + denominador + (self.argument,):
            if not math.isfinite(parametro):
                raise ErrorDominio(f"valor no finito en {self.etiqueta()}")
        for b in denominador:
            if entero_no_positivo(b) is not None:
                raise ErrorDominio(
                    f"parámetro de denominador {b!r} es cero o entero negativo en {self.etiqueta()}"
                )

    @property
    def p(self):
        return len(self.numerator)

    @property
    def q(self):
        return len(self.denominator)

    def con_argumento(self, z):
        """Copia de la instancia con otro argumento."""
        return HypergeometricSpec(self.numerator, self.denominator, z)

    def etiqueta(self):
        """Representación compacta, p. ej. '2F1(1, 1; 2; -0.5)'."""
        num = ", ".join(f"{a:g}" for a in self.numerator) or "-"
        den = ", ".join(f"{b:g}" for b in self.denominator) or "-"
        return f"{len(self.numerator)}F{len(self.denominator)}({num}; {den}; {self.argument:g})"


@dataclass(frozen=True)
class EvalResult:
    """
    Resultado de una evaluación de serie.

    tail_estimate es la magnitud del último término añadido relativa a la
    suma parcial; scale es la suma de magnitudes de los términos y acota el
    error de redondeo de la suma (en una suma exacta es |value|).
    """

    value: float
    terms_used: int
    tail_estimate: float
    status: EstadoEvaluacion
    scale: float = 1.0


@dataclass(frozen=True)
class ConvergenceClass:
    kind: TipoConvergencia
    boundary_convergent: bool
    boundary_convergent_minus_one: bool = False
    terminating_degree: int | None = None


def cancelar_parametros(spec, eps=EPS_INT):
    """
    Cancela pares numerador/denominador iguales dentro de eps.

    Args:
        spec (HypergeometricSpec): Función original

    Returns:
        HypergeometricSpec: Función de orden reducido con el mismo valor
    """
    numerador = list(spec.numerator)
    denominador = list(spec.denominator)
    restantes = []
    for a in numerador:
        for indice, b in enumerate(denominador):
            if abs(a - b) <= eps:
                del denominador[indice]
                break
        else:
            restantes.append(a)
    if len(restantes) == spec.p:
        return spec
    return HypergeometricSpec(restantes, denominador, spec.argument)


def classify_convergence(spec):
    """
    Clasifica la convergencia de la serie según p, q y sus parámetros.

    Args:
        spec (HypergeometricSpec): Función a clasificar

    Returns:
        ConvergenceClass: Tipo de convergencia y comportamiento en |z| = 1
    """
    grados = [-n for n in (entero_no_positivo(a) for a in spec.numerator) if n is not None]
    exceso = sum(spec.denominator) - sum(spec.numerator)
    en_frontera = spec.p == spec.q + 1

    if grados:
        tipo = TipoConvergencia.TERMINANTE
    elif spec.p <= spec.q:
        tipo = TipoConvergencia.ENTERA
    elif en_frontera:
        tipo = TipoConvergencia.DISCO_UNIDAD
    else:
        tipo = TipoConvergencia.DIVERGENTE

    return ConvergenceClass(
        kind=tipo,
        boundary_convergent=en_frontera and exceso > 0,
        boundary_convergent_minus_one=en_frontera and exceso > -1,
        terminating_degree=min(grados) if grados else None,
    )


def _verificar_dominio(spec, clase):
    z = spec.argument
    if clase.kind is TipoConvergencia.DIVERGENTE:
        raise ErrorDominio(f"{spec.etiqueta()} diverge para todo z distinto de 0")
    if clase.kind is not TipoConvergencia.DISCO_UNIDAD:
        return
    if abs(z) < 1.0:
        return
    if z == 1.0 and clase.boundary_convergent:
        return
    if z == -1.0 and clase.boundary_convergent_minus_one:
        return
    raise ErrorDominio(f"{spec.etiqueta()} fuera del dominio de convergencia |z| < 1")


def _cocientes(numerador, denominador, z, js):
    cocientes = z / (js + 1.0)
    for a in numerador:
        cocientes = cocientes * (a + js)
    for b in denominador:
        cocientes = cocientes / (b + js)
    return cocientes


def perdida_redondeo(valor, escala):
    """
    Error relativo de redondeo esperable en una suma: eps·escala/|valor|.

    Args:
        valor (float): Suma obtenida
        escala (float): Suma de magnitudes de los sumandos

    Returns:
        float: inf si la suma es cero con sumandos no nulos
    """
    if valor == 0.0:
        return math.inf if escala > 0.0 else 0.0
    return _EPS * escala / abs(valor)


def _marcar_perdida(resultado, tol, spec):
    if perdida_redondeo(resultado.value, resultado.scale) <= max(tol, PERDIDA_MAXIMA):
        return resultado
    logger.debug(
        f"{spec.etiqueta()}: cancelación de {resultado.scale:.3e} a {resultado.value:.3e}, "
        f"la suma no es fiable en doble precisión"
    )
    return replace(resultado, status=EstadoEvaluacion.PRECISION_PERDIDA)


def _numerador_terminante(spec):
    # el numerador terminante se fija al entero exacto
    return [
        float(entero_no_positivo(a)) if entero_no_positivo(a) is not None else a
        for a in spec.numerator
    ]


def _suma_terminante_exacta(numerador, denominador, z, grado):
    """
    Suma terminante en racionales exactos.

    Los flotantes son racionales diádicos, así que la suma es la exacta de
    los parámetros recibidos y sólo se redondea al final.

    Returns:
        tuple: (valor, último término) como flotantes
    """
    numerador = [Fraction(a) for a in numerador]
    denominador = [Fraction(b) for b in denominador]
    z = Fraction(z)
    termino = suma = Fraction(1)
    for j in range(grado):
        termino *= z / (j + 1)
        for a in numerador:
            termino *= a + j
        for b in denominador:
            termino /= b + j
        suma += termino
    return float(suma), float(abs(termino))


def _sumar_terminante(spec, grado, max_terms, tol):
    numerador = _numerador_terminante(spec)
    limite = min(grado + 1, max_terms)
    completa = limite == grado + 1
    if completa and grado <= GRADO_MAXIMO_EXACTO:
        valor, ultimo = _suma_terminante_exacta(numerador, spec.denominator, spec.argument, grado)
        cola = ultimo / max(abs(valor), _PISO_RELATIVO) if grado > 0 else 0.0
        # sin redondeo acumulado: la escala es el propio valor
        return EvalResult(valor, limite, cola, EstadoEvaluacion.TERMINADA, abs(valor))

    js = np.arange(limite - 1, dtype=float)
    terminos = np.concatenate(([1.0], np.cumprod(_cocientes(numerador, spec.denominator, spec.argument, js))))
    valor = math.fsum(terminos)
    escala = float(np.sum(np.abs(terminos)))
    estado = EstadoEvaluacion.TERMINADA if completa else EstadoEvaluacion.MAXIMO_TERMINOS
    if not math.isfinite(valor):
        return EvalResult(valor, limite, math.inf, EstadoEvaluacion.DIVERGENTE, escala)
    cola = abs(terminos[-1]) / max(abs(valor), _PISO_RELATIVO) if limite > 1 else 0.0
    resultado = EvalResult(valor, limite, cola, estado, escala)
    return _marcar_perdida(resultado, tol, spec) if completa else resultado


def _completar_frontera(spec, suma, termino, usados):
    """
    Completa la suma de una serie p = q+1 truncada en |z| = 1.

    En z = 1 añade la cola algebraica de términos ~ j^-(1+s); en z = -1
    promedia las dos últimas sumas parciales.
    """
    z = spec.argument
    if z == -1.0:
        return suma - 0.5 * termino, abs(0.5 * termino)
    exceso = sum(spec.denominator) - sum(spec.numerator)
    n = usados
    siguiente = termino * float(_cocientes(spec.numerator, spec.denominator, z, np.array([n - 1.0]))[0])
    cola = siguiente * n * math.exp(-exceso * math.log1p(-0.5 / n)) / exceso
    return suma + cola, abs(cola)


def _sumar_infinita(spec, clase, tol, max_terms):
    z = spec.argument
    numerador = spec.numerator
    denominador = spec.denominator
    j_min = math.ceil(max((abs(c) for c in numerador + denominador), default=0.0)) + 2
    disco = clase.kind is TipoConvergencia.DISCO_UNIDAD

    suma = 1.0
    escala = 1.0
    termino = 1.0
    usados = 1
    bloque = BLOQUE_INICIAL
    while usados < max_terms:
        m = min(bloque, max_terms - usados)
        js = np.arange(usados - 1, usados - 1 + m, dtype=float)
        cocientes = _cocientes(numerador, denominador, z, js)
        terminos = termino * np.cumprod(cocientes)
        parciales = suma + np.cumsum(terminos)

        if not np.all(np.isfinite(parciales)):
            logger.debug(f"Suma no finita en {spec.etiqueta()} tras {usados} términos")
            return EvalResult(float("nan"), usados, float("inf"), EstadoEvaluacion.DIVERGENTE, float("inf"))

        magnitudes = np.abs(terminos)
        if disco:
            rho = np.abs(cocientes)
            with np.errstate(divide="ignore", invalid="ignore"):
                cola = np.where(rho < 1.0, magnitudes * rho / (1.0 - rho), np.inf)
        else:
            cola = magnitudes
        umbral = tol * np.abs(parciales)
        indices = np.arange(usados, usados + m)
        # la cota geométrica y el propio término: así la cola informada nunca supera tol
        listos = (cola <= umbral) & (magnitudes <= umbral) & (indices >= j_min)

        if listos.any():
            k = int(np.argmax(listos))
            valor = float(parciales[k])
            escala += float(np.sum(magnitudes[: k + 1]))
            relativa = float(magnitudes[k]) / max(abs(valor), _PISO_RELATIVO)
            resultado = EvalResult(valor, usados + k + 1, relativa, EstadoEvaluacion.CONVERGIDA, escala)
            return _marcar_perdida(resultado, tol, spec)

        suma = float(parciales[-1])
        termino = float(terminos[-1])
        escala += float(np.sum(magnitudes))
        usados += m
        bloque = min(2 * bloque, BLOQUE_MAXIMO)

    cola = abs(termino)
    if disco and abs(z) == 1.0:
        suma, cola = _completar_frontera(spec, suma, termino, usados)
    logger.debug(f"{spec.etiqueta()} alcanzó el máximo de {max_terms} términos")
    return EvalResult(
        suma, usados, cola / max(abs(suma), _PISO_RELATIVO), EstadoEvaluacion.MAXIMO_TERMINOS, escala
    )


def _sumar_por_pfaff(spec, tol, max_terms):
    """
    2F1(α,β;γ;z) = (1-z)^(-α)·2F1(α,γ-β;γ;z/(z-1)) para z < Z_PFAFF.

    El nuevo argumento cae en [1/3, 1/2), donde la serie no alterna. Se
    prueba con α = primer numerador y, si la suma pierde precisión, con el
    segundo.
    """
    (a, b), (c,) = spec.numerator, spec.denominator
    z = spec.argument
    w = z / (z - 1.0)
    resultado = None
    for alfa, beta in ((a, b), (b, a)):
        interna = eval_pfq(HypergeometricSpec((alfa, c - beta), (c,), w), tol, max_terms)
        factor = math.exp(-alfa * math.log1p(-z))
        estado = EstadoEvaluacion.CONVERGIDA if interna.status is EstadoEvaluacion.TERMINADA else interna.status
        resultado = EvalResult(
            factor * interna.value, interna.terms_used, interna.tail_estimate, estado, factor * interna.scale
        )
        if estado is not EstadoEvaluacion.PRECISION_PERDIDA:
            break
    logger.debug(f"{spec.etiqueta()} evaluada en z/(z-1) = {w:g}")
    return resultado


def eval_pfq(spec, tol=TOL_SERIE, max_terms=MAX_TERMINOS):
    """
    Evalúa pFq por suma directa con la recurrencia de cocientes entre términos.

    Una 2F1 con z < -1/2 se suma en el argumento de Pfaff. Las sumas
    terminantes cortas se suman en racionales exactos. Si la cancelación
    entre términos deja un error de redondeo mayor que max(tol,
    PERDIDA_MAXIMA), el estado es PRECISION_PERDIDA en lugar de converged.

    Args:
        spec (HypergeometricSpec): Función a evaluar
        tol (float): Tolerancia relativa del último término
        max_terms (int): Máximo de términos a sumar

    Returns:
        EvalResult: Valor, términos usados, cola relativa, estado y escala

    Raises:
        ErrorDominio: Si el argumento está fuera del dominio de convergencia
    """
    if tol <= 0 or max_terms < 1:
        raise ValueError("tol debe ser positiva y max_terms al menos 1")

    reducida = cancelar_parametros(spec)
    clase = classify_convergence(reducida)
    if reducida.argument == 0.0:
        return EvalResult(1.0, 1, 0.0, EstadoEvaluacion.CONVERGIDA, 1.0)

    _verificar_dominio(reducida, clase)
    if clase.kind is TipoConvergencia.TERMINANTE:
        return _sumar_terminante(reducida, clase.terminating_degree, max_terms, tol)
    if (reducida.p, reducida.q) == (2, 1) and reducida.argument < Z_PFAFF:
        return _sumar_por_pfaff(reducida, tol, max_terms)
    return _sumar_infinita(reducida, clase, tol, max_terms)
