"""
Módulo de formas intermedias de las cadenas de demostración de E3-E6.
Cada forma es una Expression evaluable que debe coincidir con ambos lados
de su identidad; el verificador las compara como caminos adicionales.
"""

import logging

from transformaciones_expresiones import (
    CoeficienteParametros,
    ExponencialArgumento,
    Expression,
    MapaArgumento,
    PotenciaArgumento,
    PotenciaUnoMenosArgumento,
    termino,
)

logger = logging.getLogger(__name__)

_EXP = ExponencialArgumento(1)


# E3: e^y·2F2(a,1+a/2;a/2,b;-y) = 2F2(2+a-b,b-a-1;b,1+a-b;y)

def e3_separada(v, y):
    """1F1(b-a-1;b;y) - (y/b)·1F1(b-a;b+1;y)."""
    a, b = v["a"], v["b"]
    return Expression(
        (
            termino(y, (b - a - 1,), (b,)),
            termino(y, (b - a,), (b + 1,), (CoeficienteParametros(-1.0 / b), PotenciaArgumento(1))),
        ),
        y,
    )


def e3_kummer(v, y):
    """e^y·[1F1(a+1;b;-y) - (y/b)·1F1(a+1;b+1;-y)], con el corchete cerrado."""
    a, b = v["a"], v["b"]
    return Expression(
        (
            termino(y, (a + 1,), (b,), (_EXP,), MapaArgumento.NEGATIVO),
            termino(
                y,
                (a + 1,),
                (b + 1,),
                (_EXP, CoeficienteParametros(-1.0 / b), PotenciaArgumento(1)),
                MapaArgumento.NEGATIVO,
            ),
        ),
        y,
    )


def e3_comun(v, y):
    """e^y·[1F1(a;b;-y) - (2/b)·y·1F1(a+1;b+1;-y)]; ambos lados llegan aquí."""
    a, b = v["a"], v["b"]
    return Expression(
        (
            termino(y, (a,), (b,), (_EXP,), MapaArgumento.NEGATIVO),
            termino(
                y,
                (a + 1,),
                (b + 1,),
                (_EXP, CoeficienteParametros(-2.0 / b), PotenciaArgumento(1)),
                MapaArgumento.NEGATIVO,
            ),
        ),
        y,
    )


# E4: (1-y)^-h·3F2(h,a,1+a/2;a/2,b;y/(y-1)) = 3F2(h,2+a-b,b-a-1;b,1+a-b;y)

def e4_separada(v, y):
    h, a, b = v["h"], v["a"], v["b"]
    return Expression(
        (
            termino(y, (h, b - a - 1), (b,)),
            termino(y, (h + 1, b - a), (b + 1,), (CoeficienteParametros(-h / b), PotenciaArgumento(1))),
        ),
        y,
    )


def e4_pfaff(v, y):
    """Cada 2F1 de la forma separada pasado por Pfaff."""
    h, a, b = v["h"], v["a"], v["b"]
    return Expression(
        (
            termino(y, (h, a + 1), (b,), (PotenciaUnoMenosArgumento(-h),), MapaArgumento.PFAFF),
            termino(
                y,
                (h + 1, a + 1),
                (b + 1,),
                (CoeficienteParametros(-h / b), PotenciaArgumento(1), PotenciaUnoMenosArgumento(-(h + 1))),
                MapaArgumento.PFAFF,
            ),
        ),
        y,
    )


def e4_comun(v, y):
    """(1-y)^-h·[2F1(h,a;b;w) - (2h/b)·y/(1-y)·2F1(h+1,a+1;b+1;w)], w = y/(y-1)."""
    h, a, b = v["h"], v["a"], v["b"]
    return Expression(
        (
            termino(y, (h, a), (b,), (PotenciaUnoMenosArgumento(-h),), MapaArgumento.PFAFF),
            termino(
                y,
                (h + 1, a + 1),
                (b + 1,),
                (CoeficienteParametros(-2.0 * h / b), PotenciaArgumento(1), PotenciaUnoMenosArgumento(-(h + 1))),
                MapaArgumento.PFAFF,
            ),
        ),
        y,
    )


# E5: 2F1(a,-e/2;1+a+e/2;x) = (1-x)^e·3F2(a+e,1+a/2+e/2,e/2;1+a+e/2,a/2+e/2;x)

def e5_separada(v, x):
    a, e = v["a"], v["e"]
    c = a + e / 2 + 1
    return Expression(
        (
            termino(x, (a + e, e / 2), (c,), (PotenciaUnoMenosArgumento(e),)),
            termino(
                x,
                (a + e + 1, e / 2 + 1),
                (c + 1,),
                (PotenciaUnoMenosArgumento(e), CoeficienteParametros(e / c), PotenciaArgumento(1)),
            ),
        ),
        x,
    )


def e5_euler(v, x):
    """
    (1-x)^e por la forma separada tras Euler:
    (1-x)·2F1(a+1,1-e/2;a+e/2+1;x) + e/(a+e/2+1)·x·2F1(a+1,1-e/2;a+e/2+2;x).
    """
    a, e = v["a"], v["e"]
    c = a + e / 2 + 1
    return Expression(
        (
            termino(x, (a + 1, 1 - e / 2), (c,), (PotenciaUnoMenosArgumento(1),)),
            termino(x, (a + 1, 1 - e / 2), (c + 1,), (CoeficienteParametros(e / c), PotenciaArgumento(1))),
        ),
        x,
    )


# E6, en la forma que establece la cadena de relaciones contiguas

def e6_separada(v, y):
    """3F2(a+d-1,-a,d+2a-1;d,d+a;y) + a(a+d-1)/(d(a+d))·y·3F2(a+d,1-a,d+2a;d+1,d+a+1;y)."""
    a, d = v["a"], v["d"]
    return Expression(
        (
            termino(y, (a + d - 1, -a, d + 2 * a - 1), (d, d + a)),
            termino(
                y,
                (a + d, 1 - a, d + 2 * a),
                (d + 1, d + a + 1),
                (CoeficienteParametros(a * (a + d - 1) / (d * (a + d))), PotenciaArgumento(1)),
            ),
        ),
        y,
    )


def lados_impresos_e6(v, y):
    """
    Lados de la relación E6 en su forma original:
    2F1(a+d-1,-2a;d;y) y (1-y)^-a·4F3(a+d-1,-a,2-d-2a,d+2a-1;d,d+a,1-d-2a;y).

    No coinciden en general (difieren ya en el coeficiente de y); se
    conservan para documentar la discrepancia.
    """
    a, d = v["a"], v["d"]
    izquierdo = Expression((termino(y, (a + d - 1, -2 * a), (d,)),), y)
    derecho = Expression(
        (
            termino(
                y,
                (a + d - 1, -a, 2 - d - 2 * a, d + 2 * a - 1),
                (d, d + a, 1 - d - 2 * a),
                (PotenciaUnoMenosArgumento(-a),),
            ),
        ),
        y,
    )
    return izquierdo, derecho
