import json
import os
import tempfile
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase

from apps.identidades.models import EjecucionVerificacion
from apps.identidades.pipeline.identity_harness import IdentityHarness, IdentityRecord, LadoConteo
from apps.identidades.processor import VerificadorIdentidades


def ejecutar(*args, **options):
    salida, errores = StringIO(), StringIO()
    call_command(*args, stdout=salida, stderr=errores, **options)
    return salida.getvalue()


class ComandosDeUsoTest(SimpleTestCase):

    def assertErrorDeUso(self, *args, **options):
        with self.assertRaises(CommandError) as contexto:
            ejecutar(*args, **options)
        self.assertEqual(contexto.exception.returncode, 2)

    def test_enumerate(self):
        self.assertEqual(ejecutar('enumerate', clase='rr1-over', n=4), '3,1\n3,1~\n')

    def test_enumerate_registros(self):
        lineas = ejecutar('enumerate', clase='rr1-over', n=4, formato='records').splitlines()
        self.assertEqual(json.loads(lineas[1])['overlined'], [1])
        self.assertEqual(json.loads(lineas[1])['text'], '3,1~')

    def test_enumerate_de_pares(self):
        self.assertErrorDeUso('enumerate', clase='stembridge:gg1', n=4)

    def test_clase_desconocida(self):
        self.assertErrorDeUso('enumerate', clase='rr3', n=4)
        self.assertErrorDeUso('count', clase='rr3', n=4)

    def test_n_negativo(self):
        self.assertErrorDeUso('enumerate', clase='d', n=-1)
        self.assertErrorDeUso('count', clase='d', desde=5, hasta=2)

    def test_count(self):
        self.assertEqual(ejecutar('count', clase='d', n=9, formato='csv'), 'n,count\n9,8\n')
        lineas = ejecutar('count', clase='stembridge:gg1', hasta=7, formato='csv').splitlines()
        self.assertEqual(lineas[-1], '7,3')

    def test_coeff(self):
        texto = ejecutar('coeff', serie='mod5:1,4', hasta=8, formato='csv')
        self.assertEqual(texto.splitlines()[1:], ['0,1', '1,1', '2,1', '3,1', '4,2', '5,2', '6,3', '7,3', '8,4'])

    def test_coeff_serie_desconocida(self):
        self.assertErrorDeUso('coeff', serie='no-existe', n=3)

    def test_bijection(self):
        self.assertEqual(
            ejecutar('bijection', mapa='h-oe', entrada='20,18,15,13,10,7,4,1').strip(),
            '15,13,11,9,7,5,3,1,7~,6~,5~,4~,2~',
        )

    def test_bijection_inversa(self):
        self.assertEqual(
            ejecutar('bijection', mapa='g-gg', entrada='15,13,11,9,7,5,3,13~,7~,1~', inversa=True).strip(),
            '20,17,15,12,9,7,4',
        )

    def test_bijection_errores(self):
        self.assertErrorDeUso('bijection', mapa='k', entrada='3,1')
        self.assertErrorDeUso('bijection', mapa='h-oe', entrada='3,x')
        self.assertErrorDeUso('bijection', mapa='h-oe', entrada='3,2')
        self.assertErrorDeUso('bijection', mapa='h-oe', entrada='3,²')

    def test_oeis_archivo_local(self):
        self.assertIn('Coinciden 41', ejecutar('oeis'))

    def test_oeis_archivo_inexistente(self):
        self.assertErrorDeUso('oeis', archivo='/no/existe/b000000.txt')

    def test_oeis_desacuerdo(self):
        with tempfile.TemporaryDirectory() as directorio:
            ruta = os.path.join(directorio, 'b.txt')
            with open(ruta, 'w', encoding='utf-8') as archivo:
                archivo.write('1 1\n2 0\n3 0\n4 5\n')
            with self.assertRaises(CommandError) as contexto:
                ejecutar('oeis', archivo=ruta)
            self.assertEqual(contexto.exception.returncode, 1)


class VerifyTest(SimpleTestCase):

    def test_tabla(self):
        texto = ejecutar('verify', identidad='frr', max_n=10, no_timing=True)
        self.assertEqual(texto.splitlines()[0], 'frr  N=10  PASS')

    def test_registros_reproducibles(self):
        a = ejecutar('verify', identidad='srr', max_n=12, formato='records', no_timing=True)
        b = ejecutar('verify', identidad='srr', max_n=12, formato='records', no_timing=True)
        self.assertEqual(a, b)
        self.assertEqual(json.loads(a)['status'], 'PASS')

    def test_identidad_desconocida(self):
        with self.assertRaises(CommandError) as contexto:
            ejecutar('verify', identidad='frr3')
        self.assertEqual(contexto.exception.returncode, 2)

    def test_xlsx_sin_out(self):
        with self.assertRaises(CommandError) as contexto:
            ejecutar('verify', identidad='frr', max_n=5, formato='xlsx')
        self.assertEqual(contexto.exception.returncode, 2)

    def test_xlsx_a_archivo(self):
        with tempfile.TemporaryDirectory() as directorio:
            ruta = os.path.join(directorio, 'frr.xlsx')
            ejecutar('verify', identidad='frr', max_n=5, formato='xlsx', out=ruta)
            self.assertTrue(os.path.exists(ruta))

    def test_listar(self):
        self.assertIn('transporte:frr', ejecutar('verify', identidad='all', listar=True).split())


class ProcesadorTest(TestCase):

    def test_guardar_en_db(self):
        resultado = VerificadorIdentidades(deterministico=True).procesar(
            'srr', n_max=6, guardar=True
        )
        self.assertTrue(resultado['success'])
        self.assertEqual(resultado['guardados'], 1)
        ejecucion = EjecucionVerificacion.objects.get()
        self.assertEqual((ejecucion.identidad, ejecucion.estado), ('srr', 'PASS'))
        self.assertEqual(ejecucion.registro['sides'][0]['values'], [1, 0, 1, 1, 1, 1, 2])

    def test_identidad_fallida(self):
        harness = IdentityHarness([IdentityRecord(
            'falsa', (LadoConteo('d', clase_id='d'), LadoConteo('rr1', clase_id='rr1')), 'prueba'
        )])
        resultado = VerificadorIdentidades(harness, deterministico=True).procesar('all', n_max=6)
        self.assertFalse(resultado['success'])
        self.assertIn('FAIL', resultado['salida'])
