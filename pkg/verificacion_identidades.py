"""
Módulo de verificación de identidades, relaciones y oráculos.
Para cada asignación sorteada y cada argumento evalúa todos los caminos
disponibles (lados, forma cerrada, forma alternativa, formas intermedias y
cuadratura) y compara cada pareja.
"""

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import partial

from constantes import DISTANCIA_RADIO_FRONTERA, Z_RADIO_FRONTERA
from cuadratura import REPRESENTACIONES, funcion_objetivo, oracle_3f2
from errores import ErrorAgotamientoMuestreo, ErrorDominio, ErrorHipergeometrico, ErrorPrecision
from reducciones_catalogo import DominioArgumento, DISCO, catalog, lookup
from restricciones import ConstraintSet, validar_parametros
from series import EstadoEvaluacion, HypergeometricSpec
from transformaciones import (
    RELACIONES,
    euler_transform,
    eval_expression,
    funcion_simple,
    kummer_doble,
    kummer_first,
    lados_contiguos,
    pfaff_transform,
    shift_decompose,
)
from verificacion_comparacion import Comparacion, ComparisonPolicy, VerificationReport, compare
from verificacion_muestreo import (
    SamplingPlan,
    admitir_asignacion,
    argumentos_z,
    generador,
    muestrear_espacio,
)

logger = logging.getLogger(__name__)

_ERRORES_EVALUACION = (ErrorHipergeometrico, ValueError, OverflowError, ZeroDivisionError)

DOMINIO_ORACULO = DominioArgumento(0.05, 0.9, True, True)


@dataclass(frozen=True)
class Camino:
    """Valor de un camino de evaluación con su escala de referencia."""

    valor: float
    escala: float
    oraculo: bool = False
    frontera: bool = False


@dataclass
class Recorrido:
    """Conteos acumulados al recorrer las asignaciones de una clave."""

    intentos: int = 0
    rechazos: int = 0
    comparaciones: list = field(default_factory=list)
    errores: list = field(default_factory=list)
    descartadas: int = 0
    evaluaciones: int = 0

    def sumar(self, otro, prefijo=""):
        self.intentos += otro.intentos
        self.rechazos += otro.rechazos
        self.comparaciones.extend(otro.comparaciones)
        self.errores.extend(f"{prefijo}{error}" for error in otro.errores)
        self.descartadas += otro.descartadas
        self.evaluaciones += otro.evaluaciones

    def reporte(self, clave):
        return VerificationReport.construir(
            clave,
            self.intentos,
            self.rechazos,
            self.comparaciones,
            self.errores,
            descartadas=self.descartadas,
            evaluaciones=self.evaluaciones,
        )


@dataclass(frozen=True)
class EspacioRelacion:
    """Espacio de parámetros de una relación verificada fuera del catálogo."""

    id: str
    slots: tuple
    constraints: ConstraintSet


ESPACIO_KUMMER = EspacioRelacion("REL-KUMMER", ("a", "c"), ConstraintSet.crear(exclusiones=("c",)))
ESPACIO_EULER_PFAFF = EspacioRelacion("REL-EULER-PFAFF", ("a", "b", "c"), ConstraintSet.crear(exclusiones=("c",)))
ESPACIO_DESPLAZAMIENTO = EspacioRelacion(
    "REL-DESPLAZAMIENTO",
    ("a", "b", "c", "d", "k"),
    ConstraintSet.crear(exclusiones=("a", "d"), enteros={"k": 3}),
)

CLAVES_RELACIONES = ("REL-CONTIGUAS", "REL-KUMMER", "REL-EULER-PFAFF", "REL-DESPLAZAMIENTO")
CLAVES_ORACULOS = ("ORA-I1", "ORA-I2", "ORA-I30", "ORA-I31")


def _cerca_del_radio(expr):
    for term in expr.terms:
        funcion = term.function
        if funcion.p == funcion.q + 1 and abs(funcion.argument) > 1.0 - DISTANCIA_RADIO_FRONTERA:
            return True
    return False


def camino_expresion(expr):
    """
    Evalúa una Expression como camino.

    Raises:
        ErrorDominio: Si alguna serie diverge
        ErrorPrecision: Si la suma pierde la precisión en doble
    """
    resultado = eval_expression(expr)
    if resultado.status is EstadoEvaluacion.DIVERGENTE:
        raise ErrorDominio(f"serie divergente en {expr.describir()}")
    if resultado.status is EstadoEvaluacion.PRECISION_PERDIDA:
        raise ErrorPrecision(f"precisión perdida en {expr.describir()}")
    frontera = resultado.status is EstadoEvaluacion.MAXIMO_TERMINOS or _cerca_del_radio(expr)
    return Camino(resultado.value, resultado.scale, frontera=frontera)


def camino_valor(valor, oraculo=False):
    return Camino(float(valor), abs(float(valor)), oraculo=oraculo)


def _texto_asignacion(asignacion):
    return ", ".join(f"{nombre}={valor:.6g}" for nombre, valor in sorted(asignacion.items())) or "sin parámetros"


def comparar_caminos(caminos, asignacion, z, policy):
    """
    Compara todas las parejas de caminos en orden de inserción.

    Returns:
        list: Comparacion por pareja
    """
    frontera_z = abs(z) > Z_RADIO_FRONTERA or abs(z) == 1.0
    comparaciones = []
    for (nombre_1, camino_1), (nombre_2, camino_2) in itertools.combinations(caminos.items(), 2):
        boundary = frontera_z or camino_1.frontera or camino_2.frontera
        resultado = compare(
            camino_1.valor,
            camino_2.valor,
            policy,
            boundary,
            escala=max(camino_1.escala, camino_2.escala),  # solo diagnóstico
            oraculo=camino_1.oraculo or camino_2.oraculo,
        )
        comparaciones.append(
            Comparacion(
                bindings=dict(asignacion),
                z=float(z),
                paths=(nombre_1, nombre_2),
                values=(camino_1.valor, camino_2.valor),
                rel_error=resultado.rel_error,
                passed=resultado.passed,
                boundary=boundary,
                diagnostico=resultado.diagnostico,
            )
        )
    return comparaciones


def _camino_cuadratura(registro, valores, z):
    if registro.oraculo is None or not 0.0 < z < 1.0:
        return None
    rep_id, mapeo = registro.oraculo
    parametros = mapeo(valores)
    if not admitir_asignacion(REPRESENTACIONES[rep_id].restricciones, parametros, rep_id):
        return None
    return camino_valor(oracle_3f2(rep_id, parametros, z), oraculo=True)


def caminos_registro(registro, valores, z):
    """
    Todos los caminos de evaluación de un registro del catálogo.

    Returns:
        dict: nombre -> Camino
    """
    caminos = {
        "lhs": camino_expresion(registro.lhs_builder(valores, z)),
        "rhs": camino_expresion(registro.rhs_builder(valores, z)),
    }
    if registro.closed_form is not None:
        caminos["forma_cerrada"] = camino_valor(registro.closed_form(valores, z))
    if registro.alternativa is not None:
        caminos["alternativa"] = camino_expresion(registro.alternativa(valores, z))
    cuadratura = _camino_cuadratura(registro, valores, z)
    if cuadratura is not None:
        caminos["cuadratura"] = cuadratura
    for nombre, constructor in registro.intermedias:
        caminos[nombre] = camino_expresion(constructor(valores, z))
    return caminos


def _recorrer(clave, slots, restricciones, dominio, plan, policy, evaluar, extras=(), incluir_extremos=False):
    """
    Sortea asignaciones, evalúa sus caminos y los compara.

    Una evaluación que pierde la precisión en doble se descarta y se cuenta;
    cualquier otro fallo de evaluación queda como error del reporte.

    Returns:
        Recorrido
    """
    rng = generador(plan, clave)
    try:
        asignaciones, rechazos = muestrear_espacio(clave, slots, restricciones, plan, rng)
    except ErrorAgotamientoMuestreo as e:
        return Recorrido(errores=[str(e)])

    for extra in extras:
        try:
            extra = validar_parametros(extra, slots, clave)
        except ErrorHipergeometrico:
            rechazos += 1
            continue
        if admitir_asignacion(restricciones, extra, clave):
            asignaciones.append(extra)
        else:
            rechazos += 1

    recorrido = Recorrido(intentos=len(asignaciones) + rechazos, rechazos=rechazos)
    for indice, asignacion in enumerate(asignaciones):
        for z in argumentos_z(dominio, plan, rng, incluir_extremos and indice == 0):
            recorrido.evaluaciones += 1
            try:
                caminos = evaluar(asignacion, z)
            except ErrorPrecision as e:
                recorrido.descartadas += 1
                logger.debug(f"{clave}: descartada {_texto_asignacion(asignacion)}, z = {z!r}: {e}")
                continue
            except _ERRORES_EVALUACION as e:
                recorrido.errores.append(f"{_texto_asignacion(asignacion)}, z = {z!r}: {e}")
                continue
            recorrido.comparaciones.extend(comparar_caminos(caminos, asignacion, z, policy))
    return recorrido


def verify_identity(record, plan=None, policy=None, bindings_extra=()):
    """
    Verifica una identidad del catálogo por muestreo.

    Args:
        record (IdentityRecord): Registro a verificar
        plan (SamplingPlan): Plan de muestreo
        policy (ComparisonPolicy): Tolerancias
        bindings_extra (iterable): Asignaciones adicionales; las que violan
            una restricción cuentan como rechazadas

    Returns:
        VerificationReport
    """
    plan = plan or SamplingPlan()
    policy = policy or ComparisonPolicy()
    logger.info(f"Verificando {record.id} con {plan.samples_per_identity} muestras")
    recorrido = _recorrer(
        record.id,
        record.slots,
        record.constraints,
        record.argument_domain,
        plan,
        policy,
        partial(caminos_registro, record),
        extras=bindings_extra,
        incluir_extremos=True,
    )
    return recorrido.reporte(record.id)


def _caminos_contiguos(relation_id, asignacion, z):
    lados = lados_contiguos(relation_id, asignacion, z)
    return {f"{relation_id}:lado_{i}": camino_expresion(lado) for i, lado in enumerate(lados)}


def _verificar_contiguas(plan, policy):
    total = Recorrido()
    for relation_id, relacion in RELACIONES.items():
        parcial = _recorrer(
            f"REL-CONTIGUAS/{relation_id}",
            relacion.slots,
            relacion.constraints,
            DISCO,
            plan,
            policy,
            partial(_caminos_contiguos, relation_id),
        )
        total.sumar(parcial, prefijo=f"{relation_id}: ")
    return total.reporte("REL-CONTIGUAS")


def _caminos_kummer(v, z):
    funcion = HypergeometricSpec((v["a"],), (v["c"],), z)
    return {
        "original": camino_expresion(funcion_simple(funcion)),
        "kummer": camino_expresion(kummer_first(funcion)),
        "kummer_doble": camino_expresion(kummer_doble(funcion)),
    }


def _caminos_euler_pfaff(v, z):
    funcion = HypergeometricSpec((v["a"], v["b"]), (v["c"],), z)
    caminos = {
        "original": camino_expresion(funcion_simple(funcion)),
        "euler": camino_expresion(euler_transform(funcion)),
    }
    # z/(z-1) sale del disco para z >= 1/2
    if z < 0.5:
        caminos["pfaff"] = camino_expresion(pfaff_transform(funcion))
    return caminos


def _caminos_desplazamiento(v, z):
    a, b, c, d = v["a"], v["b"], v["c"], v["d"]
    k = int(round(v["k"]))
    directa = funcion_simple(HypergeometricSpec((b, c, a + k), (d, a), z))
    return {
        "directa": camino_expresion(directa),
        "descompuesta": camino_expresion(shift_decompose(b, c, a, d, k, z)),
    }


def _verificar_espacio(espacio, evaluar, plan, policy):
    recorrido = _recorrer(espacio.id, espacio.slots, espacio.constraints, DISCO, plan, policy, evaluar)
    return recorrido.reporte(espacio.id)


def _caminos_oraculo(rep_id, v, z):
    caminos = {
        "serie": camino_expresion(funcion_simple(funcion_objetivo(rep_id, v, z))),
        "cuadratura": camino_valor(oracle_3f2(rep_id, v, z), oraculo=True),
    }
    if rep_id == "I1":
        caminos["cuadratura_i2"] = camino_valor(oracle_3f2("I2", v, z), oraculo=True)
    elif rep_id == "I30":
        caminos["r32"] = camino_expresion(lookup("R32").rhs_builder(v, z))
        caminos["r33"] = camino_expresion(lookup("R33").rhs_builder(v, z))
    elif rep_id == "I31":
        caminos["r34"] = camino_expresion(lookup("R34").rhs_builder(v, z))
    return caminos


def verificar_oraculo(rep_id, plan=None, policy=None):
    """
    Contrasta un oráculo de cuadratura con la serie de su 3F2 en z ∈ [0.05, 0.9].

    Returns:
        VerificationReport con clave 'ORA-<rep_id>'
    """
    plan = plan or SamplingPlan()
    policy = policy or ComparisonPolicy()
    representacion = REPRESENTACIONES[rep_id]
    clave = f"ORA-{rep_id}"
    logger.info(f"Verificando {clave}")
    recorrido = _recorrer(
        clave,
        representacion.parametros,
        representacion.restricciones,
        DOMINIO_ORACULO,
        plan,
        policy,
        partial(_caminos_oraculo, rep_id),
    )
    return recorrido.reporte(clave)


def verificar_relacion(clave, plan=None, policy=None):
    """
    Verifica una familia de relaciones fuera del catálogo.

    Args:
        clave (str): Una de CLAVES_RELACIONES

    Raises:
        ErrorDominio: Si la clave no existe
    """
    plan = plan or SamplingPlan()
    policy = policy or ComparisonPolicy()
    logger.info(f"Verificando {clave}")
    if clave == "REL-CONTIGUAS":
        return _verificar_contiguas(plan, policy)
    if clave == "REL-KUMMER":
        return _verificar_espacio(ESPACIO_KUMMER, _caminos_kummer, plan, policy)
    if clave == "REL-EULER-PFAFF":
        return _verificar_espacio(ESPACIO_EULER_PFAFF, _caminos_euler_pfaff, plan, policy)
    if clave == "REL-DESPLAZAMIENTO":
        return _verificar_espacio(ESPACIO_DESPLAZAMIENTO, _caminos_desplazamiento, plan, policy)
    raise ErrorDominio(f"relación desconocida: '{clave}'")


def claves_suite():
    """Claves de todos los reportes de la suite, en orden."""
    return tuple(registro.id for registro in catalog()) + CLAVES_RELACIONES + CLAVES_ORACULOS


def verificar_por_clave(clave, plan=None, policy=None):
    """Verifica una identidad, relación u oráculo por su clave."""
    if clave in CLAVES_RELACIONES:
        return verificar_relacion(clave, plan, policy)
    if clave in CLAVES_ORACULOS:
        return verificar_oraculo(clave.removeprefix("ORA-"), plan, policy)
    return verify_identity(lookup(clave), plan, policy)


def verify_suite(plan=None, policy=None, workers=1):
    """
    Verifica el catálogo completo, las relaciones y los oráculos.

    Args:
        plan (SamplingPlan): Plan de muestreo
        policy (ComparisonPolicy): Tolerancias
        workers (int): Hilos concurrentes; el orden de los reportes no cambia

    Returns:
        list: 25 VerificationReport (17 identidades, 4 relaciones, 4 oráculos)
    """
    plan = plan or SamplingPlan()
    policy = policy or ComparisonPolicy()
    claves = claves_suite()
    tarea = partial(verificar_por_clave, plan=plan, policy=policy)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            reportes = list(executor.map(tarea, claves))
    else:
        reportes = [tarea(clave) for clave in claves]
    aprobados = sum(1 for reporte in reportes if reporte.passed)
    logger.info(f"Suite completada: {aprobados}/{len(reportes)} reportes aprobados")
    return reportes


def suite_aprobada(reportes):
    return all(reporte.passed for reporte in reportes)
