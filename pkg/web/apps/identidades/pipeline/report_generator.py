"""
Módulo Generador de Reportes
Serializa reportes de verificación como tabla, CSV, registros o Excel
"""

import json
import os
from datetime import datetime

import pandas as pd

from . import config
from .logger import logger

try:
    from openpyxl import load_workbook
    from openpyxl.styles import PatternFill, Font, Alignment, Border, Side
    from openpyxl.utils import get_column_letter
    OPENPYXL_AVAILABLE = True
except ImportError:
    OPENPYXL_AVAILABLE = False
    logger.warning("openpyxl no disponible - formato limitado")

# Excel representa los números como double
_MAYOR_ENTERO_EXACTO = 2 ** 53


class ErrorFormatoReporte(ValueError):
    """Formato de salida no soportado o sin destino"""


class ReportGenerator:
    """Genera las salidas de una verificación"""

    def __init__(self, deterministico=None):
        self.deterministico = (
            config.REPORTES_DETERMINISTICOS if deterministico is None else deterministico
        )
        self.archivo_salida = None

    def generar_nombre_archivo(self, extension):
        timestamp = datetime.now().strftime(config.FORMATO_ARCHIVO)
        return os.path.join(config.DIR_OUTPUT, f"{config.PREFIJO_OUTPUT}_{timestamp}.{extension}")

    # ── DataFrames ────────────────────────────────────────────────────────

    @staticmethod
    def valores_por_n(reporte):
        """DataFrame con columna n y una columna por lado (None fuera de su tope)"""
        filas = max((len(l.valores) for l in reporte.lados), default=0)
        datos = {'n': list(range(filas))}
        for lado in reporte.lados:
            relleno = [None] * (filas - len(lado.valores))
            datos[lado.etiqueta] = list(lado.valores) + relleno
        return pd.DataFrame(datos, dtype=object)

    def resumen(self, reportes):
        """DataFrame con una fila por identidad"""
        filas = []
        for reporte in reportes:
            fila = {
                'id': reporte.identidad,
                'N': reporte.n_max,
                'status': reporte.estado,
                'first_mismatch': reporte.primer_desacuerdo,
            }
            if not self.deterministico:
                fila['elapsed_ms'] = reporte.duracion_ms
            fila['error'] = reporte.error or ''
            filas.append(fila)
        return pd.DataFrame(filas, dtype=object)

    def _valores_lote(self, reportes):
        marcos = []
        for reporte in reportes:
            marco = self.valores_por_n(reporte)
            marco.insert(0, 'id', reporte.identidad)
            marcos.append(marco)
        if not marcos:
            return pd.DataFrame(columns=['id', 'n'])
        return pd.concat(marcos, ignore_index=True, sort=False).astype(object)

    # ── Formatos de texto ─────────────────────────────────────────────────

    def a_tabla(self, reportes):
        """
        Tabla legible.

        Una identidad: línea de encabezado y grilla por n. Varias: grilla resumen.
        """
        if len(reportes) == 1:
            reporte = reportes[0]
            encabezado = f"{reporte.identidad}  N={reporte.n_max}  {reporte.estado}"
            if reporte.primer_desacuerdo is not None:
                encabezado += f"  primer desacuerdo n={reporte.primer_desacuerdo}"
            if not self.deterministico:
                encabezado += f"  {reporte.duracion_ms} ms"
            lineas = [encabezado]
            if reporte.error:
                lineas.append(f"error: {reporte.error}")
            marco = self.valores_por_n(reporte).fillna('')
            if not marco.empty:
                lineas.append(marco.to_string(index=False))
            return '\n'.join(lineas) + '\n'

        marco = self.resumen(reportes).fillna('')
        if marco.empty:
            return config.MENSAJES['sin_identidades'] + '\n'
        conteo = marco['status'].value_counts()
        pie = '  '.join(f"{estado}={int(conteo.get(estado, 0))}" for estado in config.ESTADOS)
        return marco.to_string(index=False) + '\n' + pie + '\n'

    def a_csv(self, reportes):
        """CSV con n y una columna por lado; id al frente en lotes"""
        if len(reportes) == 1:
            marco = self.valores_por_n(reportes[0])
        else:
            marco = self._valores_lote(reportes)
        return marco.to_csv(index=False, lineterminator='\n')

    def a_registros(self, reportes):
        """Un objeto JSON por línea, claves ordenadas"""
        return ''.join(
            json.dumps(r.como_registro(self.deterministico), sort_keys=True, ensure_ascii=False) + '\n'
            for r in reportes
        )

    def serializar(self, reportes, formato):
        if formato == 'table':
            return self.a_tabla(reportes)
        if formato == 'csv':
            return self.a_csv(reportes)
        if formato == 'records':
            return self.a_registros(reportes)
        raise ErrorFormatoReporte(
            f"Formato {formato!r} no serializable a texto. Use: table, csv, records"
        )

    def escribir(self, reportes, formato, ruta):
        """Escribe el reporte en `ruta` (xlsx o texto)"""
        if formato == 'xlsx':
            return self.generar_excel(reportes, ruta)
        os.makedirs(os.path.dirname(os.path.abspath(ruta)), exist_ok=True)
        with open(ruta, 'w', encoding='utf-8', newline='') as archivo:
            archivo.write(self.serializar(reportes, formato))
        self.archivo_salida = ruta
        logger.info(f"{config.MENSAJES['reporte_generado']}: {ruta}")
        return ruta

    # ── Excel ─────────────────────────────────────────────────────────────

    @staticmethod
    def _celda_excel(valor):
        if isinstance(valor, int) and abs(valor) >= _MAYOR_ENTERO_EXACTO:
            return str(valor)
        return valor

    def generar_excel(self, reportes, ruta=None):
        """
        Genera el libro con hojas Resumen y Valores.

        Returns:
            Ruta al archivo generado
        """
        logger.log_fase("GENERACIÓN DE REPORTE EXCEL")
        ruta = ruta or self.generar_nombre_archivo('xlsx')
        os.makedirs(os.path.dirname(os.path.abspath(ruta)), exist_ok=True)

        df_resumen = self.resumen(reportes)
        df_valores = self._valores_lote(reportes).apply(
            lambda columna: columna.map(self._celda_excel)
        )

        with pd.ExcelWriter(ruta, engine='openpyxl') as writer:
            df_resumen.to_excel(writer, sheet_name='Resumen', index=False)
            df_valores.to_excel(writer, sheet_name='Valores', index=False)

        estados = {r.identidad: r.estado for r in reportes}
        desacuerdos = {
            r.identidad: r.primer_desacuerdo for r in reportes if r.primer_desacuerdo is not None
        }
        self.aplicar_formato(ruta, 'Resumen', estados, desacuerdos)
        self.aplicar_formato(ruta, 'Valores', estados, desacuerdos)

        self.archivo_salida = ruta
        logger.info(config.MENSAJES['reporte_generado'])
        logger.info(f"Archivo guardado en: {ruta}")
        return ruta

    def aplicar_formato(self, ruta_archivo, nombre_hoja, estados, desacuerdos):
        """
        Colorea las filas por estado (Resumen) o marca la fila del primer
        desacuerdo (Valores).
        """
        if not OPENPYXL_AVAILABLE:
            logger.warning("No se puede aplicar formato - openpyxl no disponible")
            return

        try:
            wb = load_workbook(ruta_archivo)
            if nombre_hoja not in wb.sheetnames:
                return
            ws = wb[nombre_hoja]

            def relleno(nombre):
                color = config.COLORES[nombre][1:]
                return PatternFill(start_color=color, end_color=color, fill_type='solid')

            color_encabezado = relleno('AZUL')
            color_gris = relleno('GRIS')
            font_encabezado = Font(bold=True, color='FFFFFF', size=11)
            font_normal = Font(size=10)
            align_center = Alignment(horizontal='center', vertical='center')
            align_left = Alignment(horizontal='left', vertical='center')
            border_delgado = Border(
                left=Side(style='thin'),
                right=Side(style='thin'),
                top=Side(style='thin'),
                bottom=Side(style='thin')
            )

            headers = [cell.value for cell in ws[1]]
            for col_num, column_title in enumerate(headers, 1):
                cell = ws.cell(row=1, column=col_num)
                cell.fill = color_encabezado
                cell.font = font_encabezado
                cell.alignment = align_center
                cell.border = border_delgado
                ancho = config.ANCHOS_COLUMNAS.get(column_title, 18)
                ws.column_dimensions[get_column_letter(col_num)].width = ancho

            col_id = headers.index('id') + 1 if 'id' in headers else None
            col_n = headers.index('n') + 1 if 'n' in headers else None

            for row_num in range(2, ws.max_row + 1):
                identidad = ws.cell(row=row_num, column=col_id).value if col_id else None
                fill_color = None
                if nombre_hoja == 'Resumen':
                    estado = estados.get(identidad)
                    if estado in config.COLOR_POR_ESTADO:
                        fill_color = relleno(config.COLOR_POR_ESTADO[estado])
                elif col_n and identidad in desacuerdos:
                    if ws.cell(row=row_num, column=col_n).value == desacuerdos[identidad]:
                        fill_color = relleno(config.COLOR_POR_ESTADO[estados[identidad]])

                for col_num in range(1, len(headers) + 1):
                    cell = ws.cell(row=row_num, column=col_num)
                    cell.font = font_normal
                    cell.border = border_delgado
                    if isinstance(cell.value, (int, float)):
                        cell.alignment = align_center
                    else:
                        cell.alignment = align_left
                    if fill_color:
                        cell.fill = fill_color
                    elif cell.value is None:
                        cell.fill = color_gris

            ws.freeze_panes = 'A2'
            wb.save(ruta_archivo)
            logger.info(f"Formato aplicado exitosamente a {nombre_hoja}")

        except Exception as e:
            logger.error(f"Error al aplicar formato en {nombre_hoja}: {str(e)}")
