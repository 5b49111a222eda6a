import tempfile
from pathlib import Path
from unittest import mock, skipUnless

from django.test import SimpleTestCase

from apps.identidades.pipeline import config
from apps.identidades.pipeline.oeis import (
    ArchivoB,
    ErrorArchivoB,
    comparar_con_archivo_b,
    descargar_archivo_b,
    leer_archivo_b,
    parsear_archivo_b,
    ruta_cache,
)
from apps.identidades.pipeline.series_catalog import calcular_serie

from . import oraculos

A027349 = [1, 0, 0, 1, 0, 1, 0, 1, 1, 1, 1, 1, 2, 1, 2, 2, 3, 2, 3, 3, 4]


class ParsearArchivoBTest(SimpleTestCase):

    def test_comentarios_y_lineas_vacias(self):
        archivo = parsear_archivo_b("# A000001\n\n1 1\n2  1\n3 2\n")
        self.assertEqual(archivo.primer_indice, 1)
        self.assertEqual(archivo.valores, (1, 1, 2))
        self.assertEqual(archivo.ultimo_indice, 3)
        self.assertEqual(archivo.valor(3), 2)

    def test_enteros_grandes(self):
        archivo = parsear_archivo_b("0 123456789012345678901234567890\n")
        self.assertEqual(archivo.valor(0), 123456789012345678901234567890)

    def test_indices_no_contiguos(self):
        with self.assertRaises(ErrorArchivoB) as contexto:
            parsear_archivo_b("0 1\n1 1\n3 2\n")
        self.assertEqual(contexto.exception.linea, 3)

    def test_linea_mal_formada(self):
        with self.assertRaises(ErrorArchivoB) as contexto:
            parsear_archivo_b("# x\n0 1\n1 uno\n")
        self.assertEqual(contexto.exception.linea, 3)
        with self.assertRaises(ErrorArchivoB):
            parsear_archivo_b("0 1 2\n")

    def test_archivo_vacio(self):
        archivo = parsear_archivo_b("# solo comentarios\n")
        self.assertEqual(len(archivo), 0)
        self.assertFalse(archivo.contiene(0))


class CompararTest(SimpleTestCase):

    def test_coincidencia_con_desplazamiento(self):
        archivo = ArchivoB(1, tuple(A027349))
        comparacion = comparar_con_archivo_b(A027349, archivo, desplazamiento=1)
        self.assertTrue(comparacion.coinciden)
        self.assertEqual(comparacion.comparados, len(A027349))
        self.assertEqual((comparacion.desde, comparacion.hasta), (0, 20))

    def test_desacuerdo(self):
        valores = list(A027349)
        valores[7] = 2
        comparacion = comparar_con_archivo_b(valores, ArchivoB(1, tuple(A027349)), 1)
        self.assertFalse(comparacion.coinciden)
        self.assertEqual(comparacion.primer_desacuerdo, 7)
        self.assertEqual((comparacion.calculado, comparacion.esperado), (2, 1))
        self.assertIn('n=7', comparacion.resumen())

    def test_sin_indices_en_comun(self):
        comparacion = comparar_con_archivo_b([1, 2, 3], ArchivoB(0, ()), 0)
        self.assertTrue(comparacion.coinciden)
        self.assertEqual(comparacion.comparados, 0)
        self.assertIn('trivial', comparacion.resumen())

    def test_archivo_local_contra_la_suma(self):
        archivo = leer_archivo_b(config.DIR_OEIS / 'b027349.txt')
        valores = calcular_serie('a027349-suma', 40).coeficientes(0, 40)
        self.assertEqual(valores[:len(A027349)], A027349)
        comparacion = comparar_con_archivo_b(valores, archivo, 1)
        self.assertTrue(comparacion.coinciden, comparacion.resumen())
        self.assertEqual(comparacion.comparados, 41)


class CacheTest(SimpleTestCase):

    def test_ruta_cache(self):
        self.assertEqual(ruta_cache(27349, '/tmp/oeis'), Path('/tmp/oeis/b027349.txt'))

    def test_descarga_usa_la_cache(self):
        with tempfile.TemporaryDirectory() as directorio:
            destino = ruta_cache(27349, directorio)
            destino.write_text("1 1\n", encoding='utf-8')
            self.assertEqual(descargar_archivo_b(27349, directorio), destino)

    def _respuesta(self, urlopen, contenido):
        urlopen.return_value.__enter__.return_value.read.return_value = contenido

    @mock.patch('apps.identidades.pipeline.oeis.urlopen')
    def test_descarga_guarda_y_parsea(self, urlopen):
        self._respuesta(urlopen, b"# A027349\n1 1\n2 0\n")
        with tempfile.TemporaryDirectory() as directorio:
            ruta = descargar_archivo_b(27349, directorio)
            self.assertEqual(ruta, ruta_cache(27349, directorio))
            archivo = leer_archivo_b(ruta)
        self.assertEqual((archivo.primer_indice, archivo.valores), (1, (1, 0)))
        self.assertIn('b027349.txt', urlopen.call_args.args[0])

    @mock.patch('apps.identidades.pipeline.oeis.urlopen')
    def test_forzar_ignora_la_cache(self, urlopen):
        self._respuesta(urlopen, b"0 7\n")
        with tempfile.TemporaryDirectory() as directorio:
            ruta_cache(27349, directorio).write_text("1 1\n", encoding='utf-8')
            ruta = descargar_archivo_b(27349, directorio, forzar=True)
            self.assertEqual(leer_archivo_b(ruta).valor(0), 7)
        urlopen.assert_called_once()

    @mock.patch('apps.identidades.pipeline.oeis.urlopen')
    def test_descarga_mal_formada_no_se_guarda(self, urlopen):
        self._respuesta(urlopen, b"<html>no encontrado</html>\n")
        with tempfile.TemporaryDirectory() as directorio:
            with self.assertRaises(ErrorArchivoB):
                descargar_archivo_b(27349, directorio)
            self.assertFalse(ruta_cache(27349, directorio).exists())


class ArchivoLocalTest(SimpleTestCase):
    """El archivo b local se calculó con una recurrencia; se contrasta por fuerza bruta"""

    def test_contra_impares_distintas_con_uno(self):
        archivo = leer_archivo_b(config.DIR_OEIS / 'b027349.txt')
        self.assertEqual((archivo.primer_indice, archivo.ultimo_indice), (0, 41))
        for m in range(archivo.primer_indice, archivo.ultimo_indice + 1):
            with self.subTest(m=m):
                self.assertEqual(
                    archivo.valor(m), oraculos.contar(m, oraculos.impares_distintas_con_uno)
                )

    @skipUnless(ruta_cache(27349).exists(), 'sin archivo b descargado (oeis --fetch)')
    def test_contra_el_archivo_descargado(self):
        descargado = leer_archivo_b(ruta_cache(27349))
        valores = calcular_serie('a027349-suma', 40).coeficientes(0, 40)
        comparacion = comparar_con_archivo_b(valores, descargado, 1)
        self.assertTrue(comparacion.coinciden, comparacion.resumen())
        self.assertGreater(comparacion.comparados, 0)
