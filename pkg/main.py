#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
Script principal de la librería de reducciones hipergeométricas.
Ofrece los subcomandos eval, identity, oracle, verify y list. Los datos se
escriben en la salida estándar y el registro en stderr y en
'hipergeometrica.log'.

Códigos de salida: 0 éxito, 1 verificación fallida o fallo numérico al evaluar,
2 error de uso.
"""

import argparse
import logging
import sys
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import pandas as pd

import exportacion
import utils
from constantes import (
    MAX_TERMINOS,
    MUESTRAS_POR_IDENTIDAD,
    TOL_REL,
    TOL_REL_FRONTERA,
    TOL_SERIE,
    VERSION_ARTEFACTO,
    semilla_por_defecto,
)
from cuadratura import REPRESENTACIONES_3F2, funcion_objetivo, oracle_3f2, preparar_oraculo
from errores import (
    ErrorConvergenciaCuadratura,
    ErrorEvaluacion,
    ErrorHipergeometrico,
    ErrorPrecision,
    ErrorUso,
)
from reducciones import lookup, preparar_asignacion, tabla_catalogo
from series import EstadoEvaluacion, HypergeometricSpec, classify_convergence, eval_pfq
from verificacion import (
    ComparisonPolicy,
    SamplingPlan,
    caminos_registro,
    compare,
    verificar_por_clave,
    verify_suite,
)

logger = logging.getLogger(__name__)

SALIDA_OK = 0
SALIDA_FALLO = 1
SALIDA_USO = 2

ARCHIVO_LOG = "hipergeometrica.log"


def configurar_logging(nivel=logging.INFO, archivo=ARCHIVO_LOG):
    """Registro a archivo y a stderr; stdout queda libre para los datos."""
    logging.basicConfig(
        level=nivel,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.FileHandler(archivo),
            logging.StreamHandler(sys.stderr)
        ]
    )


@dataclass(frozen=True)
class CommandConfig:
    """
    Configuración validada de un subcomando.

    Las asignaciones ya vienen convertidas a flotantes; las claves
    desconocidas se rechazan al preparar la asignación de cada identidad.
    """

    subcommand: str
    bindings: dict = field(default_factory=dict)
    z: Optional[float] = None
    output_format: str = "text"
    seed: Optional[int] = None
    samples: int = MUESTRAS_POR_IDENTIDAD
    tol: float = TOL_REL
    tol_frontera: Optional[float] = None
    output: Optional[str] = None
    excel: Optional[str] = None
    identity_id: Optional[str] = None
    rep_id: Optional[str] = None
    numerador: tuple = ()
    denominador: tuple = ()
    tol_serie: float = TOL_SERIE
    max_terminos: int = MAX_TERMINOS
    workers: int = 1

    @classmethod
    def desde_argumentos(cls, args):
        """
        Construye la configuración a partir de los argumentos de argparse.

        Raises:
            ErrorUso: Si algún valor no es válido
        """
        comando = args.subcommand
        z = utils.convertir_a_numero(args.z, "z") if getattr(args, "z", None) is not None else None
        datos = {
            "subcommand": comando,
            "z": z,
            "output_format": getattr(args, "format", "text"),
            "bindings": utils.parsear_asignaciones(getattr(args, "param", None)),
        }
        if comando == "eval":
            numerador = utils.parsear_lista_numeros(args.num, "--num")
            denominador = utils.parsear_lista_numeros(args.den, "--den")
            if args.p is not None and args.p != len(numerador):
                raise ErrorUso(f"--p {args.p} no coincide con {len(numerador)} numeradores")
            if args.q is not None and args.q != len(denominador):
                raise ErrorUso(f"--q {args.q} no coincide con {len(denominador)} denominadores")
            if z is None:
                raise ErrorUso("eval requiere --z")
            if args.tol <= 0 or args.max_terminos < 1:
                raise ErrorUso("--tol debe ser positiva y --max-terminos al menos 1")
            datos.update(numerador=numerador, denominador=denominador, tol_serie=args.tol,
                         max_terminos=args.max_terminos)
        elif comando == "identity":
            datos["identity_id"] = args.id
        elif comando == "oracle":
            if z is None:
                raise ErrorUso("oracle requiere --z")
            datos["rep_id"] = args.rep
        elif comando == "verify":
            if args.samples < 0:
                raise ErrorUso("--samples no puede ser negativo")
            if args.workers < 1:
                raise ErrorUso("--workers debe ser al menos 1")
            datos.update(
                seed=args.seed,
                samples=args.samples,
                tol=args.tol,
                tol_frontera=args.tol_frontera,
                output=args.output,
                excel=args.excel,
                identity_id=args.id,
                workers=args.workers,
            )
        return cls(**datos)


def construir_parser():
    parser = argparse.ArgumentParser(
        description='Reducciones de funciones hipergeométricas generalizadas y su verificación numérica'
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {VERSION_ARTEFACTO}')
    parser.add_argument('-v', '--verbose', action='store_true', help='Registro detallado (DEBUG)')
    subparsers = parser.add_subparsers(dest='subcommand', required=True)

    p_eval = subparsers.add_parser('eval', help='Evalúa una pFq por serie')
    p_eval.add_argument('--p', type=int, help='Número de parámetros del numerador')
    p_eval.add_argument('--q', type=int, help='Número de parámetros del denominador')
    p_eval.add_argument('--num', default='', help='Numeradores separados por comas, p. ej. 1,1')
    p_eval.add_argument('--den', default='', help='Denominadores separados por comas, p. ej. 2')
    p_eval.add_argument('--z', required=True, help='Argumento real')
    p_eval.add_argument('--tol', type=float, default=TOL_SERIE, help='Tolerancia relativa de la serie')
    p_eval.add_argument('--max-terminos', dest='max_terminos', type=int, default=MAX_TERMINOS,
                        help='Máximo de términos sumados')
    p_eval.add_argument('--format', choices=['text', 'json'], default='text')

    p_identidad = subparsers.add_parser('identity', help='Evalúa todos los caminos de una identidad')
    p_identidad.add_argument('--id', required=True, help='Clave del catálogo, p. ej. S36')
    p_identidad.add_argument('--param', action='append', default=[], help='Parámetro clave=valor (repetible)')
    p_identidad.add_argument('--z', help='Argumento; opcional en las sumas en argumento unidad')
    p_identidad.add_argument('--format', choices=['text', 'json'], default='text')

    p_oraculo = subparsers.add_parser('oracle', help='Compara un oráculo de cuadratura con la serie')
    p_oraculo.add_argument('--rep', required=True, choices=list(REPRESENTACIONES_3F2))
    p_oraculo.add_argument('--param', action='append', default=[], help='Parámetro clave=valor (repetible)')
    p_oraculo.add_argument('--z', required=True, help='Argumento en (0, 1)')
    p_oraculo.add_argument('--format', choices=['text', 'json'], default='text')

    p_verificar = subparsers.add_parser('verify', help='Verifica el catálogo por muestreo')
    p_verificar.add_argument('--seed', type=int, help='Semilla (por defecto 1 o la variable HIPERGEO_SEMILLA)')
    p_verificar.add_argument('--samples', type=int, default=MUESTRAS_POR_IDENTIDAD,
                             help='Asignaciones por identidad')
    p_verificar.add_argument('--id', help='Verifica una sola identidad, relación (REL-*) u oráculo (ORA-*)')
    p_verificar.add_argument('--tol', type=float, default=TOL_REL, help='Tolerancia relativa interior')
    p_verificar.add_argument('--tol-frontera', dest='tol_frontera', type=float,
                             help='Tolerancia relativa cerca del radio de convergencia')
    p_verificar.add_argument('--workers', type=int, default=1, help='Hilos de verificación')
    p_verificar.add_argument('--format', choices=['text', 'json'], default='text')
    p_verificar.add_argument('-o', '--output', help='Archivo donde escribir el reporte')
    p_verificar.add_argument('--excel', help='Libro Excel adicional con el reporte')

    p_lista = subparsers.add_parser('list', help='Muestra el catálogo de identidades')
    p_lista.add_argument('--format', choices=['text', 'json'], default='text')
    return parser


def _emitir(texto, config, salida):
    if config.output:
        destino = Path(config.output)
        if not destino.parent.exists():
            destino.parent.mkdir(parents=True)
            logger.info(f"Directorio creado: {destino.parent}")
        destino.write_text(texto, encoding="utf-8")
        logger.info(f"Salida escrita en {config.output}")
    else:
        salida.write(texto)


def _ejecutar_eval(config, salida):
    spec = HypergeometricSpec(config.numerador, config.denominador, config.z)
    clase = classify_convergence(spec)
    resultado = eval_pfq(spec, config.tol_serie, config.max_terminos)
    documento = {
        "funcion": spec.etiqueta(),
        "numerator": list(spec.numerator),
        "denominator": list(spec.denominator),
        "argument": spec.argument,
        "convergencia": clase.kind.value,
        "value": resultado.value,
        "terms_used": resultado.terms_used,
        "tail_estimate": resultado.tail_estimate,
        "status": resultado.status.value,
        "scale": resultado.scale,
    }
    if config.output_format == "json":
        salida.write(exportacion.serializar(documento))
    else:
        salida.write(
            f"{documento['funcion']}\n"
            f"  valor: {utils.formatear_numero(resultado.value)}\n"
            f"  términos: {resultado.terms_used}\n"
            f"  cola relativa: {resultado.tail_estimate:.3e}\n"
            f"  estado: {resultado.status.value} ({clase.kind.value})\n"
        )
    return SALIDA_OK


@contextmanager
def _fallos_de_evaluacion(clave, valores, z):
    """Convierte los fallos numéricos de una evaluación ya validada en ErrorEvaluacion."""
    try:
        yield
    except ErrorConvergenciaCuadratura:
        raise
    except (ErrorHipergeometrico, ArithmeticError) as e:
        raise ErrorEvaluacion(clave, valores, z, str(e)) from e


def _ejecutar_identidad(config, salida):
    registro = lookup(config.identity_id)
    z = config.z
    if z is None:
        if registro.argument_domain.inferior != registro.argument_domain.superior:
            raise ErrorUso(f"{registro.id} requiere --z")
        z = registro.argument_domain.inferior
    valores = preparar_asignacion(registro, config.bindings, z)
    with _fallos_de_evaluacion(registro.id, valores, z):
        caminos = caminos_registro(registro, valores, float(z))
    resultado = compare(caminos["lhs"].valor, caminos["rhs"].valor, ComparisonPolicy(), abs(z) > 0.9)
    documento = {
        "identity_id": registro.id,
        "formula": registro.formula,
        "bindings": valores,
        "z": float(z),
        "caminos": {nombre: camino.valor for nombre, camino in caminos.items()},
        "diferencia": caminos["lhs"].valor - caminos["rhs"].valor,
        "rel_error": resultado.rel_error,
    }
    if config.output_format == "json":
        salida.write(exportacion.serializar(documento))
    else:
        lineas = [f"{registro.id}: {registro.formula}", f"  z = {utils.formatear_numero(float(z))}"]
        lineas += [f"  {nombre}: {utils.formatear_numero(camino.valor)}" for nombre, camino in caminos.items()]
        lineas.append(f"  lhs - rhs: {documento['diferencia']:.3e}")
        lineas.append(f"  error relativo: {resultado.rel_error:.3e}")
        salida.write("\n".join(lineas) + "\n")
    return SALIDA_OK


def _ejecutar_oraculo(config, salida):
    valores = preparar_oraculo(config.rep_id, config.bindings, config.z)
    spec = funcion_objetivo(config.rep_id, valores, config.z)
    with _fallos_de_evaluacion(config.rep_id, valores, config.z):
        valor_oraculo = oracle_3f2(config.rep_id, valores, config.z)
        serie = eval_pfq(spec)
        if serie.status is EstadoEvaluacion.PRECISION_PERDIDA:
            raise ErrorPrecision(f"la serie de {spec.etiqueta()} pierde la precisión en doble")
    resultado = compare(valor_oraculo, serie.value, ComparisonPolicy(), False, oraculo=True)
    documento = {
        "rep_id": config.rep_id,
        "funcion": spec.etiqueta(),
        "bindings": dict(config.bindings),
        "z": config.z,
        "cuadratura": valor_oraculo,
        "serie": serie.value,
        "rel_error": resultado.rel_error,
        "passed": resultado.passed,
    }
    if config.output_format == "json":
        salida.write(exportacion.serializar(documento))
    else:
        salida.write(
            f"{config.rep_id} -> {spec.etiqueta()}\n"
            f"  cuadratura: {utils.formatear_numero(valor_oraculo)}\n"
            f"  serie:      {utils.formatear_numero(serie.value)}\n"
            f"  error relativo: {resultado.rel_error:.3e}\n"
        )
    return SALIDA_OK if resultado.passed else SALIDA_FALLO


def tabla_reportes(reportes):
    """Resumen de los reportes como DataFrame, para la salida de texto."""
    return pd.DataFrame(
        [
            {
                "reporte": r.identity_id,
                "estado": "SIN DATOS" if r.sin_datos else ("APROBADO" if r.passed else "FALLIDO"),
                "intentos": r.samples_attempted,
                "rechazos": r.samples_rejected,
                "comparaciones": len(r.comparisons),
                "fallidas": r.fallidas,
                "errores": len(r.errores),
                "descartadas": r.descartadas,
                "max_rel_error": f"{r.max_rel_error:.2e}",
            }
            for r in reportes
        ],
        columns=["reporte", "estado", "intentos", "rechazos", "comparaciones", "fallidas", "errores",
                 "descartadas", "max_rel_error"],
    )


def _ejecutar_verificacion(config, salida):
    if config.seed is None:
        try:
            semilla, origen = semilla_por_defecto()
        except ValueError:
            raise ErrorUso("la variable HIPERGEO_SEMILLA no es un entero") from None
    else:
        semilla, origen = config.seed, "argumento"
    tol_frontera = config.tol_frontera if config.tol_frontera is not None else max(TOL_REL_FRONTERA, config.tol)
    try:
        plan = SamplingPlan(seed=semilla, samples_per_identity=config.samples, origen_semilla=origen)
        policy = ComparisonPolicy(tol_rel=config.tol, tol_rel_boundary=tol_frontera)
    except ValueError as e:
        raise ErrorUso(str(e)) from None
    logger.info(f"Semilla {semilla} ({origen}), {config.samples} muestras por identidad")

    if config.identity_id:
        reportes = [verificar_por_clave(config.identity_id, plan, policy)]
    else:
        reportes = verify_suite(plan, policy, workers=config.workers)
    documento = exportacion.documento_reportes(reportes, plan, policy)

    if config.output_format == "json":
        _emitir(exportacion.serializar(documento), config, salida)
    else:
        texto = (
            f"semilla: {semilla} ({origen})\n"
            f"{tabla_reportes(reportes).to_string(index=False)}\n"
        )
        for reporte in reportes:
            for error in reporte.errores[:5]:
                texto += f"{reporte.identity_id}: {error}\n"
        texto += f"resultado: {'APROBADO' if documento['aprobado'] else 'FALLIDO'}\n"
        _emitir(texto, config, salida)

    if config.excel:
        exportacion.ExportadorExcel(reportes, plan, policy, config.excel).exportar()
    return SALIDA_OK if documento["aprobado"] else SALIDA_FALLO


def _ejecutar_lista(config, salida):
    tabla = tabla_catalogo()
    if config.output_format == "json":
        salida.write(exportacion.serializar({"catalogo": tabla.to_dict(orient="records")}))
    else:
        salida.write(tabla.to_string(index=False) + "\n")
    return SALIDA_OK


_COMANDOS = {
    "eval": _ejecutar_eval,
    "identity": _ejecutar_identidad,
    "oracle": _ejecutar_oraculo,
    "verify": _ejecutar_verificacion,
    "list": _ejecutar_lista,
}


def run(config, salida=None):
    """
    Ejecuta un subcomando ya configurado.

    Returns:
        int: Código de salida (0, 1 o 2)
    """
    salida = salida or sys.stdout
    try:
        return _COMANDOS[config.subcommand](config, salida)
    except ErrorUso as e:
        logger.error(f"Error de uso: {e}")
        return SALIDA_USO
    except ErrorConvergenciaCuadratura as e:
        logger.error(f"Cuadratura sin converger: {e}")
        return SALIDA_FALLO
    except ErrorEvaluacion as e:
        logger.error(f"Fallo numérico en {config.subcommand}: {e}")
        return SALIDA_FALLO
    except ErrorHipergeometrico as e:
        logger.error(f"{config.subcommand}: {e}")
        return SALIDA_USO
    except Exception as e:
        logger.error(f"Error inesperado en {config.subcommand}: {e}", exc_info=True)
        return SALIDA_FALLO


def main(argv=None, salida=None):
    """
    Función principal del script.
    Procesa argumentos de línea de comandos y ejecuta el subcomando.

    Returns:
        int: Código de salida
    """
    parser = construir_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return SALIDA_OK if e.code == 0 else SALIDA_USO
    configurar_logging(logging.DEBUG if args.verbose else logging.INFO)
    try:
        config = CommandConfig.desde_argumentos(args)
    except ErrorUso as e:
        logger.error(f"Error de uso: {e}")
        return SALIDA_USO
    logger.info(f"Subcomando: {config.subcommand}")
    return run(config, salida)


if __name__ == "__main__":
    sys.exit(main())
