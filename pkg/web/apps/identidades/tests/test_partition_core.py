from django.test import SimpleTestCase

from apps.identidades.pipeline.partition_core import (
    ErrorFormatoParticion,
    FrobeniusSymbol,
    Overpartition,
    Partition,
    conjugada,
    diagonal,
    es_autoconjugada,
    es_casi_autoconjugada,
    formatear,
    frobenius,
    parsear_particion,
    parsear_sobreparticion,
    particion_desde_frobenius,
    peso,
    suma_puntual,
    t_de_binaria,
)

from . import oraculos


class ParticionTest(SimpleTestCase):

    def test_partes_no_decrecientes(self):
        with self.assertRaises(ValueError):
            Partition((1, 2))

    def test_desde_secuencia_descarta_ceros(self):
        self.assertEqual(Partition.desde_secuencia([0, 2, 5, 0, 1]).partes, (5, 2, 1))

    def test_peso(self):
        self.assertEqual(peso(Overpartition(Partition((3, 1)), (2,))), 6)
        self.assertEqual(peso(Partition()), 0)

    def test_rayadas_repetidas(self):
        with self.assertRaises(ValueError):
            Overpartition(Partition((3,)), (2, 2))


class ConjugadaYFrobeniusTest(SimpleTestCase):

    def test_conjugada(self):
        self.assertEqual(conjugada(Partition((4, 2, 1))).partes, (3, 2, 1, 1))
        self.assertEqual(conjugada(Partition()).partes, ())

    def test_conjugada_es_involucion(self):
        for n in range(12):
            for partes in oraculos.todas_las_particiones(n):
                particion = Partition(partes)
                self.assertEqual(conjugada(conjugada(particion)), particion)

    def test_frobenius(self):
        particion = Partition((4, 2, 1))
        self.assertEqual(diagonal(particion), 2)
        self.assertEqual(frobenius(particion), FrobeniusSymbol((3, 0), (2, 0)))
        self.assertEqual(frobenius(particion).peso, 7)

    def test_frobenius_ida_y_vuelta(self):
        for n in range(31):
            for partes in oraculos.todas_las_particiones(n):
                particion = Partition(partes)
                self.assertEqual(particion_desde_frobenius(frobenius(particion)), particion)

    def test_autoconjugada_si_y_solo_si_filas_iguales(self):
        for n in range(19):
            for partes in oraculos.todas_las_particiones(n):
                particion = Partition(partes)
                simbolo = frobenius(particion)
                self.assertEqual(
                    es_autoconjugada(particion), simbolo.superior == simbolo.inferior, partes
                )

    def test_autoconjugadas(self):
        self.assertTrue(es_autoconjugada(Partition((3, 2, 1))))
        self.assertFalse(es_autoconjugada(Partition((3, 1))))
        self.assertTrue(es_autoconjugada(Partition()))

    def test_casi_autoconjugadas(self):
        # (2) tiene símbolo (1; 0)
        self.assertTrue(es_casi_autoconjugada(Partition((2,))))
        self.assertTrue(es_casi_autoconjugada(Partition((3, 1))))
        self.assertFalse(es_casi_autoconjugada(Partition((1, 1))))
        self.assertFalse(es_casi_autoconjugada(Partition()))


class BinariaYSumaTest(SimpleTestCase):

    def test_t_de_binaria(self):
        self.assertEqual(t_de_binaria((0, 1, 1, 0, 1, 0, 0)), (0, 1, 1, 2, 3, 4, 4))

    def test_t_de_binaria_vacia(self):
        with self.assertRaises(ValueError):
            t_de_binaria(())

    def test_suma_puntual_completa_con_ceros(self):
        resultado = suma_puntual((12, 11, 4, 3, 2, 1), Partition((2, 2, 1, 1)))
        self.assertEqual(resultado.partes, (14, 13, 5, 4, 2, 1))

    def test_suma_puntual_demasiadas_partes(self):
        with self.assertRaises(ValueError):
            suma_puntual((3,), Partition((1, 1)))


class SintaxisTextualTest(SimpleTestCase):

    def test_formatear(self):
        objeto = Overpartition(Partition((15, 13)), (7, 2))
        self.assertEqual(formatear(objeto), '15,13,7~,2~')
        self.assertEqual(formatear(Partition()), '')

    def test_parsear_ida_y_vuelta(self):
        texto = '15,13,11,9,7,5,3,1,7~,6~,5~,4~,2~'
        self.assertEqual(formatear(parsear_sobreparticion(texto)), texto)

    def test_solo_rayadas(self):
        self.assertEqual(parsear_sobreparticion('3~,1~').rayadas, (3, 1))

    def test_posicion_del_error(self):
        with self.assertRaises(ErrorFormatoParticion) as contexto:
            parsear_sobreparticion('5,x,1')
        self.assertEqual(contexto.exception.posicion, 3)

    def test_orden_no_canonico(self):
        with self.assertRaises(ErrorFormatoParticion) as contexto:
            parsear_sobreparticion('3,5')
        self.assertEqual(contexto.exception.posicion, 3)

    def test_particion_con_rayada(self):
        with self.assertRaises(ErrorFormatoParticion) as contexto:
            parsear_particion('4,2~')
        self.assertEqual(contexto.exception.posicion, 4)

    def test_digitos_no_ascii(self):
        for texto in ('3,²', '3,٣', '3,٣~'):
            with self.subTest(texto=texto):
                with self.assertRaises(ErrorFormatoParticion) as contexto:
                    parsear_sobreparticion(texto)
                self.assertEqual(contexto.exception.posicion, 3)
