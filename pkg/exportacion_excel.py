"""
Módulo para la exportación de reportes de verificación a formato Excel.
Este módulo contiene la clase ExportadorExcel, que genera un libro con el
resumen por reporte, las comparaciones relevantes, el catálogo y los
metadatos de la ejecución.
"""

import logging
import math

from openpyxl import Workbook
from openpyxl.styles import Alignment, Border, Font, PatternFill, Side

from constantes import VERSION_ARTEFACTO
from reducciones_catalogo import tabla_catalogo

logger = logging.getLogger(__name__)


def _celda(valor):
    # openpyxl no acepta inf/nan como número
    if isinstance(valor, float) and not math.isfinite(valor):
        return str(valor)
    return valor


class ExportadorExcel:
    """
    Clase para exportar reportes de verificación a Excel.

    La hoja 'Comparaciones' contiene las comparaciones fallidas y la de mayor
    error de cada reporte; con incluir_aprobadas=True contiene todas.
    """

    def __init__(self, reportes, plan, policy, ruta_salida=None, incluir_aprobadas=False):
        """
        Args:
            reportes (list): VerificationReport a exportar
            plan (SamplingPlan): Plan usado en la verificación
            policy (ComparisonPolicy): Política usada en la verificación
            ruta_salida (str, optional): Ruta del libro; por defecto 'verificacion.xlsx'
            incluir_aprobadas (bool): Escribir todas las comparaciones
        """
        self.reportes = list(reportes)
        self.plan = plan
        self.policy = policy
        self.ruta_salida = ruta_salida or "verificacion.xlsx"
        self.incluir_aprobadas = incluir_aprobadas
        self.workbook = Workbook()

        self.header_font = Font(bold=True, color="FFFFFF")
        self.header_fill = PatternFill(start_color="4472C4", end_color="4472C4", fill_type="solid")
        self.fallo_fill = PatternFill(start_color="F8CBAD", end_color="F8CBAD", fill_type="solid")
        self.border = Border(
            left=Side(style='thin'),
            right=Side(style='thin'),
            top=Side(style='thin'),
            bottom=Side(style='thin')
        )

    def exportar(self):
        """
        Crea las hojas 'Resumen', 'Comparaciones', 'Catalogo' y 'Metadatos' y guarda el libro.

        Returns:
            str: Ruta del archivo Excel creado
        """
        self._crear_hoja_resumen()
        self._crear_hoja_comparaciones()
        self._crear_hoja_catalogo()
        self._crear_hoja_metadatos()
        self.workbook.save(self.ruta_salida)
        logger.info(f"Libro Excel escrito en {self.ruta_salida}")
        return self.ruta_salida

    def _escribir_encabezados(self, hoja, encabezados):
        for col_idx, encabezado in enumerate(encabezados, 1):
            cell = hoja.cell(row=1, column=col_idx, value=encabezado)
            cell.font = self.header_font
            cell.fill = self.header_fill
            cell.border = self.border
            cell.alignment = Alignment(horizontal='center', vertical='center')

    def _escribir_fila(self, hoja, fila, valores, resaltar=False):
        for col_idx, valor in enumerate(valores, 1):
            cell = hoja.cell(row=fila, column=col_idx, value=_celda(valor))
            cell.border = self.border
            if resaltar:
                cell.fill = self.fallo_fill

    def _crear_hoja_resumen(self):
        hoja = self.workbook.active
        hoja.title = "Resumen"
        self._escribir_encabezados(hoja, [
            "Reporte", "Aprobado", "Sin_Datos", "Intentos", "Rechazos",
            "Comparaciones", "Fallidas", "Errores", "Descartadas", "Error_Relativo_Maximo"
        ])
        for fila, reporte in enumerate(self.reportes, 2):
            self._escribir_fila(hoja, fila, [
                reporte.identity_id,
                "SI" if reporte.passed else "NO",
                "SI" if reporte.sin_datos else "NO",
                reporte.samples_attempted,
                reporte.samples_rejected,
                len(reporte.comparisons),
                reporte.fallidas,
                len(reporte.errores),
                reporte.descartadas,
                reporte.max_rel_error,
            ], resaltar=not reporte.passed)
        self._ajustar_ancho_columnas(hoja)

    def _comparaciones_a_exportar(self, reporte):
        if self.incluir_aprobadas:
            return list(reporte.comparisons)
        seleccion = [c for c in reporte.comparisons if not c.passed]
        if reporte.comparisons:
            peor = max(reporte.comparisons, key=lambda c: c.rel_error)
            if peor.passed:
                seleccion.append(peor)
        return seleccion

    def _crear_hoja_comparaciones(self):
        hoja = self.workbook.create_sheet(title="Comparaciones")
        self._escribir_encabezados(hoja, [
            "Reporte", "Parametros", "z", "Camino_1", "Camino_2", "Valor_1", "Valor_2",
            "Error_Relativo", "Frontera", "Aprobada", "Diagnostico"
        ])
        fila = 2
        for reporte in self.reportes:
            for comparacion in self._comparaciones_a_exportar(reporte):
                parametros = ", ".join(f"{k}={v:.6g}" for k, v in sorted(comparacion.bindings.items()))
                self._escribir_fila(hoja, fila, [
                    reporte.identity_id,
                    parametros or "-",
                    comparacion.z,
                    comparacion.paths[0],
                    comparacion.paths[1],
                    comparacion.values[0],
                    comparacion.values[1],
                    comparacion.rel_error,
                    "SI" if comparacion.boundary else "NO",
                    "SI" if comparacion.passed else "NO",
                    comparacion.diagnostico,
                ], resaltar=not comparacion.passed)
                fila += 1
            for error in reporte.errores:
                self._escribir_fila(hoja, fila, [reporte.identity_id, "", "", "", "", "", "", "", "", "NO", error],
                                    resaltar=True)
                fila += 1
        self._ajustar_ancho_columnas(hoja)

    def _crear_hoja_catalogo(self):
        hoja = self.workbook.create_sheet(title="Catalogo")
        tabla = tabla_catalogo()
        self._escribir_encabezados(hoja, [str(columna) for columna in tabla.columns])
        for fila, valores in enumerate(tabla.itertuples(index=False), 2):
            self._escribir_fila(hoja, fila, list(valores))
        self._ajustar_ancho_columnas(hoja)

    def _crear_hoja_metadatos(self):
        hoja = self.workbook.create_sheet(title="Metadatos")
        self._escribir_encabezados(hoja, ["Campo", "Valor"])
        metadatos = [
            ("Version", VERSION_ARTEFACTO),
            ("Semilla", self.plan.seed),
            ("Origen_Semilla", self.plan.origen_semilla),
            ("Muestras_Por_Identidad", self.plan.samples_per_identity),
            ("Rango_Parametros", f"[{self.plan.parameter_range[0]:g}, {self.plan.parameter_range[1]:g}]"),
            ("Rejilla_Z", ", ".join(f"{z:g}" for z in self.plan.z_grid)),
            ("Margen_Rechazo", self.plan.rejection_margin),
            ("Tolerancia_Relativa", self.policy.tol_rel),
            ("Tolerancia_Frontera", self.policy.tol_rel_boundary),
            ("Tolerancia_Oraculo", self.policy.tol_rel_oraculo),
            ("Aprobado", "SI" if all(r.passed for r in self.reportes) else "NO"),
        ]
        for fila, (campo, valor) in enumerate(metadatos, 2):
            self._escribir_fila(hoja, fila, [campo, valor])
        self._ajustar_ancho_columnas(hoja)

    def _ajustar_ancho_columnas(self, worksheet):
        """
        Ajusta el ancho de las columnas al contenido más largo, con tope de 80.
        """
        for col in worksheet.columns:
            max_length = max((len(str(cell.value)) for cell in col if cell.value is not None), default=0)
            worksheet.column_dimensions[col[0].column_letter].width = min(max_length + 2, 80)
