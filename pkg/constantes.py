"""
Constantes numéricas y valores por defecto del artefacto.
Si se necesita ajustar tolerancias o el plan de muestreo por defecto,
este es el único lugar donde hacerlo.
"""

import os

VERSION_ARTEFACTO = "1.0.0"

# Aritmética de series
EPS_INT = 1e-9                 # distancia a un entero no positivo tratada como el entero
TOL_SERIE = 1e-13
MAX_TERMINOS = 100000
BLOQUE_INICIAL = 32
BLOQUE_MAXIMO = 4096
MAX_ORDEN = 4                  # p, q <= 4 (la función más grande es un 4F3)
PERDIDA_MAXIMA = 1e-11         # error relativo de redondeo admitido en una suma aceptada
GRADO_MAXIMO_EXACTO = 64       # sumas terminantes de hasta este grado se suman en racionales
Z_PFAFF = -0.5                 # por debajo, 2F1 se evalúa en z/(z-1)

# Formas cerradas
EPS_LIMITE = 1e-4              # cruce de la rama límite b -> 1/2 en S38

# Cuadratura
CUAD_TOL_ABS = 1e-12
CUAD_TOL_REL = 1e-11
CUAD_MAX_REFINAMIENTO = 18
CUAD_A_MINIMO = 0.05           # integrabilidad práctica de u^(a-1) en doble precisión

# Verificación
TOL_REL = 1e-9
TOL_REL_FRONTERA = 1e-6
TOL_REL_ORACULO = 1e-8         # comparaciones en las que interviene una cuadratura
PISO_ABS = 1e-300
RANGO_PARAMETROS = (-5.0, 5.0)
MARGEN_RECHAZO = 1e-3
MAX_ENTERO_MUESTREO = 20
PASO_MUESTREO = 2.0 ** -24     # rejilla de los parámetros sorteados
FRACCION_DESCARTE_MAXIMA = 0.1  # evaluaciones sin precisión admitidas por reporte
REINTENTOS_POR_MUESTRA = 200
Z_RADIO_FRONTERA = 0.9
DISTANCIA_RADIO_FRONTERA = 0.05
REJILLA_Z = (-0.9, -0.75, -0.5, -0.25, -0.05, 0.05, 0.25, 0.5, 0.75, 0.9)
Z_ALEATORIOS_POR_ASIGNACION = 5
MUESTRAS_POR_IDENTIDAD = 100

# Semilla por defecto, con posible anulación por entorno
VARIABLE_SEMILLA = "HIPERGEO_SEMILLA"


def semilla_por_defecto():
    """
    Obtiene la semilla por defecto y su origen.

    Returns:
        tuple: (semilla, origen) donde origen es 'defecto' o 'entorno'
    """
    valor = os.environ.get(VARIABLE_SEMILLA)
    if valor is None or not valor.strip():
        return 1, "defecto"
    return int(valor), "entorno"
