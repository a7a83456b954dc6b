"""
Módulo de utilidades auxiliares de la línea de comandos.
Contiene el análisis de listas de parámetros y asignaciones clave=valor.
"""

import logging
import math
import re

from errores import ErrorUso

logger = logging.getLogger(__name__)

_PATRON_CLAVE = re.compile(r"^[a-z]$")


def convertir_a_numero(texto, nombre="valor"):
    """
    Convierte un literal decimal a flotante finito.

    Raises:
        ErrorUso: Si el texto no es un número finito
    """
    try:
        valor = float(texto.strip())
    except (AttributeError, ValueError):
        raise ErrorUso(f"{nombre}: '{texto}' no es un número") from None
    if not math.isfinite(valor):
        raise ErrorUso(f"{nombre}: '{texto}' no es un número finito")
    return valor


def parsear_lista_numeros(texto, nombre="lista"):
    """
    Interpreta '1,1.5,-2' como (1.0, 1.5, -2.0); la cadena vacía es ().
    """
    if texto is None or not texto.strip():
        return ()
    return tuple(convertir_a_numero(parte, nombre) for parte in texto.split(","))


def parsear_asignaciones(pares):
    """
    Interpreta ['a=1.5', 'b=2'] como {'a': 1.5, 'b': 2.0}.

    Raises:
        ErrorUso: Con formato inválido, clave no válida o clave repetida
    """
    asignacion = {}
    for par in pares or ():
        clave, separador, valor = par.partition("=")
        clave = clave.strip()
        if not separador:
            raise ErrorUso(f"se esperaba clave=valor, se recibió '{par}'")
        if not _PATRON_CLAVE.match(clave):
            raise ErrorUso(f"clave de parámetro no válida: '{clave}'")
        if clave in asignacion:
            raise ErrorUso(f"parámetro repetido: '{clave}'")
        asignacion[clave] = convertir_a_numero(valor, clave)
    return asignacion


def formatear_numero(valor):
    """Representación con 17 cifras significativas, suficiente para reconstruir el flotante."""
    if isinstance(valor, float) and not math.isfinite(valor):
        return str(valor)
    return f"{valor:.17g}"
