import json
import os
import tempfile

from django.test import SimpleTestCase
from openpyxl import load_workbook

from apps.identidades.pipeline.identity_harness import ResultadoLado, VerificationReport
from apps.identidades.pipeline.report_generator import ErrorFormatoReporte, ReportGenerator


def _reporte(identidad='srr', estado='PASS', primer_desacuerdo=None, error=None):
    return VerificationReport(
        identidad=identidad,
        n_max=4,
        estado=estado,
        lados=[
            ResultadoLado('cuenta:rr2', 'PROVEN', [1, 0, 1, 1, 1]),
            ResultadoLado('pares:gg1', 'PROVEN', [1, 0, 1]),
            ResultadoLado('cuenta:clase', 'PAPER_CLAIM', [1, 0, 1, 2, 1]),
        ],
        primer_desacuerdo=primer_desacuerdo,
        duracion_ms=17,
        error=error,
    )


class TextoTest(SimpleTestCase):

    def setUp(self):
        self.generador = ReportGenerator(deterministico=True)

    def test_tabla_de_una_identidad(self):
        texto = self.generador.a_tabla([_reporte(estado='FLAGGED', primer_desacuerdo=3)])
        lineas = texto.splitlines()
        self.assertEqual(lineas[0], 'srr  N=4  FLAGGED  primer desacuerdo n=3')
        self.assertIn('cuenta:rr2', lineas[1])
        self.assertEqual(len(lineas), 1 + 1 + 5)

    def test_tabla_con_tiempo(self):
        texto = ReportGenerator(deterministico=False).a_tabla([_reporte()])
        self.assertTrue(texto.splitlines()[0].endswith('17 ms'))

    def test_tabla_de_lote(self):
        texto = self.generador.a_tabla([
            _reporte('a'), _reporte('b', 'FAIL', 2), _reporte('c', 'FLAGGED', 3)
        ])
        self.assertTrue(texto.rstrip().endswith('PASS=1  FAIL=1  FLAGGED=1'))
        self.assertNotIn('elapsed_ms', texto)

    def test_csv_rellena_lados_cortos(self):
        lineas = self.generador.a_csv([_reporte()]).splitlines()
        self.assertEqual(lineas[0], 'n,cuenta:rr2,pares:gg1,cuenta:clase')
        self.assertEqual(lineas[1], '0,1,1,1')
        self.assertEqual(lineas[4], '3,1,,2')

    def test_csv_de_lote_con_id(self):
        lineas = self.generador.a_csv([_reporte('a'), _reporte('b')]).splitlines()
        self.assertTrue(lineas[0].startswith('id,n,'))
        self.assertEqual(len(lineas), 1 + 10)

    def test_registros(self):
        texto = self.generador.a_registros([_reporte(error='ValueError: x')])
        registro = json.loads(texto.splitlines()[0])
        self.assertEqual(registro['id'], 'srr')
        self.assertEqual(registro['sides'][2]['expectation'], 'PAPER_CLAIM')
        self.assertEqual(registro['sides'][1]['values'], [1, 0, 1])
        self.assertEqual(registro['error'], 'ValueError: x')
        self.assertNotIn('elapsed_ms', registro)

    def test_registros_con_tiempo(self):
        registro = json.loads(ReportGenerator(deterministico=False).a_registros([_reporte()]))
        self.assertEqual(registro['elapsed_ms'], 17)

    def test_formato_desconocido(self):
        with self.assertRaises(ErrorFormatoReporte):
            self.generador.serializar([_reporte()], 'yaml')


class ExcelTest(SimpleTestCase):

    def test_hojas_y_colores(self):
        reportes = [_reporte('a'), _reporte('b', 'FLAGGED', 3)]
        reportes[1].lados[0].valores[4] = 2 ** 60
        with tempfile.TemporaryDirectory() as directorio:
            ruta = os.path.join(directorio, 'reporte.xlsx')
            self.assertEqual(ReportGenerator(deterministico=True).escribir(reportes, 'xlsx', ruta), ruta)

            libro = load_workbook(ruta)
            self.assertEqual(libro.sheetnames, ['Resumen', 'Valores'])
            resumen = libro['Resumen']
            self.assertEqual([c.value for c in resumen[1]], ['id', 'N', 'status', 'first_mismatch', 'error'])
            self.assertEqual(resumen['C3'].value, 'FLAGGED')
            self.assertEqual(resumen.freeze_panes, 'A2')

            valores = libro['Valores']
            self.assertEqual(valores.max_row, 1 + 10)
            self.assertEqual(valores['C11'].value, str(2 ** 60))
            # Fila del primer desacuerdo de b (n = 3) coloreada
            self.assertNotEqual(valores['B10'].fill.start_color.rgb, valores['B9'].fill.start_color.rgb)
