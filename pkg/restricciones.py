"""
Módulo de restricciones sobre los parámetros de identidades y relaciones.
Las combinaciones afines se escriben como texto ('1+a-b', 'a/2', '2b-n+1')
y se interpretan una sola vez al construir el conjunto de restricciones.
"""

import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction

from constantes import EPS_INT
from errores import ErrorRestriccion
from series import entero_no_positivo

logger = logging.getLogger(__name__)

# signo, coeficiente, variable, divisor: '-2b', 'a/2', '+1'
_PATRON_SUMANDO = re.compile(r"([+-]?)(\d+(?:\.\d+)?)?([a-z])?(?:/(\d+))?")


@dataclass(frozen=True)
class Combinacion:
    """
    Combinación afín de parámetros: constante + Σ coeficiente·parámetro.

    Args:
        etiqueta (str): Texto original de la combinación
        coeficientes (tuple): Pares (parámetro, coeficiente)
        constante (Fraction): Término independiente
    """

    etiqueta: str
    coeficientes: tuple
    constante: Fraction = Fraction(0)

    @classmethod
    def desde_texto(cls, texto):
        """
        Interpreta una combinación afín escrita como '1+a-b' o 'a/2+e/2'.

        Raises:
            ValueError: Si el texto no es una combinación afín válida
        """
        limpio = texto.replace(" ", "")
        coeficientes = {}
        constante = Fraction(0)
        posicion = 0
        while posicion < len(limpio):
            coincidencia = _PATRON_SUMANDO.match(limpio, posicion)
            if coincidencia is None or coincidencia.end() == posicion:
                raise ValueError(f"combinación no reconocida: '{texto}'")
            signo, numero, variable, divisor = coincidencia.groups()
            if numero is None and variable is None:
                raise ValueError(f"combinación no reconocida: '{texto}'")
            valor = Fraction(numero) if numero else Fraction(1)
            if divisor:
                valor /= int(divisor)
            if signo == "-":
                valor = -valor
            if variable:
                coeficientes[variable] = coeficientes.get(variable, Fraction(0)) + valor
            else:
                constante += valor
            posicion = coincidencia.end()
        return cls(texto, tuple(sorted(coeficientes.items())), constante)

    @property
    def variables(self):
        return tuple(nombre for nombre, _ in self.coeficientes)

    def evaluar(self, asignacion):
        """Valor de la combinación para una asignación de parámetros."""
        return float(self.constante) + sum(
            float(coeficiente) * asignacion[nombre] for nombre, coeficiente in self.coeficientes
        )


def _combinaciones(textos):
    return tuple(Combinacion.desde_texto(texto) for texto in textos)


def _cerca_de_entero_no_positivo(valor, margen):
    n = round(valor)
    return n <= 0 and abs(valor - n) < margen


@dataclass(frozen=True)
class ConstraintSet:
    """
    Restricciones de validez de una identidad.

    integer_exclusions: combinaciones que no pueden ser cero ni entero negativo.
    nonzero: combinaciones que deben ser distintas de cero.
    integrality: parámetros enteros no negativos, con su máximo de muestreo.
    lower_bounds: cotas inferiores inclusivas de algunos parámetros.
    """

    integer_exclusions: tuple = ()
    nonzero: tuple = ()
    integrality: tuple = ()
    lower_bounds: tuple = ()

    @classmethod
    def crear(cls, exclusiones=(), no_nulas=(), enteros=None, cotas_inferiores=None):
        """
        Construye el conjunto a partir de textos.

        Args:
            exclusiones (iterable): Combinaciones excluidas de {0, -1, -2, ...}
            no_nulas (iterable): Combinaciones que no pueden anularse
            enteros (dict): Parámetro entero -> máximo de muestreo
            cotas_inferiores (dict): Parámetro -> mínimo admitido
        """
        return cls(
            integer_exclusions=_combinaciones(exclusiones),
            nonzero=_combinaciones(no_nulas),
            integrality=tuple(sorted((enteros or {}).items())),
            lower_bounds=tuple(sorted((cotas_inferiores or {}).items())),
        )

    @property
    def enteros(self):
        return dict(self.integrality)

    def describir(self):
        """Lista legible de las restricciones, para catálogos y reportes."""
        partes = [f"{c.etiqueta} ∉ {{0,-1,-2,...}}" for c in self.integer_exclusions]
        partes += [f"{c.etiqueta} ≠ 0" for c in self.nonzero]
        partes += [f"{nombre} ∈ {{0,1,2,...}}" for nombre, _ in self.integrality]
        partes += [f"{nombre} ≥ {minimo:g}" for nombre, minimo in self.lower_bounds]
        return partes

    def verificar(self, asignacion, identidad=None):
        """
        Comprueba una asignación completa.

        Raises:
            ErrorRestriccion: Con la primera combinación violada
        """
        for nombre, _ in self.integrality:
            valor = asignacion[nombre]
            if abs(valor - round(valor)) > EPS_INT or round(valor) < 0:
                raise ErrorRestriccion(nombre, asignacion, identidad, "debe ser entero no negativo")
        for nombre, minimo in self.lower_bounds:
            if asignacion[nombre] < minimo:
                raise ErrorRestriccion(nombre, asignacion, identidad, f"debe ser al menos {minimo:g}")
        for combinacion in self.integer_exclusions:
            if entero_no_positivo(combinacion.evaluar(asignacion)) is not None:
                raise ErrorRestriccion(combinacion.etiqueta, asignacion, identidad, "cero o entero negativo")
        for combinacion in self.nonzero:
            if abs(combinacion.evaluar(asignacion)) <= EPS_INT:
                raise ErrorRestriccion(combinacion.etiqueta, asignacion, identidad, "se anula")

    def combinacion_cercana(self, asignacion, margen):
        """
        Busca una combinación a menos de 'margen' de un valor excluido.

        Returns:
            str o None: Etiqueta de la combinación que motiva el rechazo
        """
        for nombre, minimo in self.lower_bounds:
            if asignacion[nombre] < minimo:
                return nombre
        for combinacion in self.integer_exclusions:
            if _cerca_de_entero_no_positivo(combinacion.evaluar(asignacion), margen):
                return combinacion.etiqueta
        for combinacion in self.nonzero:
            if abs(combinacion.evaluar(asignacion)) < margen:
                return combinacion.etiqueta
        return None


def validar_parametros(asignacion, parametros, identidad=None):
    """
    Exige que la asignación tenga exactamente los parámetros esperados.

    Raises:
        ErrorRestriccion: Si falta un parámetro o sobra uno desconocido
    """
    faltantes = [p for p in parametros if p not in asignacion]
    sobrantes = [p for p in asignacion if p not in parametros]
    if faltantes:
        raise ErrorRestriccion(faltantes[0], asignacion, identidad, "parámetro faltante")
    if sobrantes:
        raise ErrorRestriccion(sobrantes[0], asignacion, identidad, "parámetro desconocido")
    return {nombre: float(asignacion[nombre]) for nombre in parametros}
